//! The JSON graph document.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "vertices": ["a", "b", "c"],
//!   "edges": [["a", "b"], ["b", "c"]],
//!   "rotation": {"a": ["b"], "b": ["a", "c"], "c": ["b"]},
//!   "coloring": {"a": 0, "b": 1, "c": 2}
//! }
//! ```
//!
//! Vertex `i` of the document becomes internal id `i`. Canonical documents
//! list each edge with its earlier-declared endpoint first, edges sorted by
//! declaration index, and `rotation` and `coloring` keyed in vertex order.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use d2color::embed::Embedding;
use d2color::{Coloring, Graph, VertexId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub format_version: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<IndexMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<IndexMap<String, usize>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("unsupported format_version {0}")]
    Version(u32),
    #[error("vertex `{0}` is declared twice")]
    DuplicateVertex(String),
    #[error("edge refers to undeclared vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("edge `{0}`-`{1}` is listed twice")]
    DuplicateEdge(String, String),
    #[error("rotation of `{0}` is not a permutation of its neighbors")]
    Rotation(String),
    #[error("coloring names undeclared vertex `{0}`")]
    ColoringVertex(String),
}

/// A parsed document: the graph plus the names of its vertices.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub names: Vec<String>,
    pub graph: Graph,
    pub rotation: Option<Embedding>,
    pub coloring: Option<BTreeMap<VertexId, usize>>,
}

impl LoadedGraph {
    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v as usize]
    }

    /// The stored coloring over a palette wide enough for every color in it.
    pub fn coloring(&self, palette: usize) -> Option<Coloring> {
        self.coloring.as_ref().map(|map| {
            let widest = map.values().max().map_or(0, |&c| c + 1);
            Coloring::from_map(palette.max(widest), map.clone())
        })
    }

    /// Canonical document for this graph, with optional extras.
    pub fn document(&self, rotation: Option<&Embedding>, coloring: Option<&Coloring>) -> GraphDocument {
        to_document(&self.names, &self.graph, rotation, coloring)
    }
}

impl GraphDocument {
    pub fn parse(text: &str, path: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|source| DocumentError::Json {
            path: path.to_string(),
            source,
        })
    }

    pub fn read(path: &Path) -> Result<Self, DocumentError> {
        let display = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
            path: display.clone(),
            source,
        })?;
        Self::parse(&text, &display)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// Document for a library graph; vertex `v` is named by its decimal id.
    pub fn from_graph(g: &Graph) -> Self {
        let names: Vec<String> = g.vertices().map(|v| v.to_string()).collect();
        let compact = compact(g);
        to_document(&names, &compact, None, None)
    }

    pub fn load(&self) -> Result<LoadedGraph, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format_version));
        }
        let mut ids: HashMap<&str, VertexId> = HashMap::new();
        let mut graph = Graph::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if ids.insert(name, i as VertexId).is_some() {
                return Err(DocumentError::DuplicateVertex(name.clone()));
            }
            graph.add_vertex(i as VertexId).unwrap();
        }
        let id = |name: &String| {
            ids.get(name.as_str())
                .copied()
                .ok_or_else(|| DocumentError::UnknownVertex(name.clone()))
        };
        for (a, b) in &self.edges {
            let (u, v) = (id(a)?, id(b)?);
            if u == v {
                return Err(DocumentError::SelfLoop(a.clone()));
            }
            if graph.has_edge(u, v) {
                return Err(DocumentError::DuplicateEdge(a.clone(), b.clone()));
            }
            graph.add_edge(u, v).unwrap();
        }
        let rotation = match &self.rotation {
            None => None,
            Some(rot) => {
                let mut map = BTreeMap::new();
                for (name, order) in rot {
                    let v = id(name)?;
                    let order = order.iter().map(id).collect::<Result<Vec<_>, _>>()?;
                    map.insert(v, order);
                }
                let e = Embedding::from_rotation(graph.clone(), map).map_err(|err| {
                    let v = match err {
                        d2color::embed::EmbedError::InvalidRotation(v) => v,
                        _ => 0,
                    };
                    DocumentError::Rotation(self.vertices.get(v as usize).cloned().unwrap_or_default())
                })?;
                Some(e)
            }
        };
        let coloring = match &self.coloring {
            None => None,
            Some(map) => Some(
                map.iter()
                    .map(|(name, &c)| {
                        ids.get(name.as_str())
                            .map(|&v| (v, c))
                            .ok_or_else(|| DocumentError::ColoringVertex(name.clone()))
                    })
                    .collect::<Result<BTreeMap<_, _>, _>>()?,
            ),
        };
        Ok(LoadedGraph {
            names: self.vertices.clone(),
            graph,
            rotation,
            coloring,
        })
    }
}

/// Relabels a graph's vertices to `0..n` in increasing order.
fn compact(g: &Graph) -> Graph {
    let index: HashMap<VertexId, VertexId> = g
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, i as VertexId))
        .collect();
    let edges: Vec<(VertexId, VertexId)> = g.edges().iter().map(|(u, v)| (index[u], index[v])).collect();
    Graph::from_edges(g.vertex_count() as u32, &edges).unwrap()
}

fn to_document(
    names: &[String],
    g: &Graph,
    rotation: Option<&Embedding>,
    coloring: Option<&Coloring>,
) -> GraphDocument {
    let name = |v: VertexId| names[v as usize].clone();
    GraphDocument {
        format_version: FORMAT_VERSION,
        vertices: names.to_vec(),
        edges: g.edges().into_iter().map(|(u, v)| (name(u), name(v))).collect(),
        rotation: rotation.map(|e| {
            g.vertices()
                .map(|v| (name(v), e.rotation(v).iter().map(|&w| name(w)).collect()))
                .collect()
        }),
        coloring: coloring.map(|c| {
            g.vertices()
                .filter_map(|v| c.get(v).map(|color| (name(v), color)))
                .collect()
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
  "format_version": 1,
  "vertices": ["b", "a", "c"],
  "edges": [["c", "b"], ["a", "b"]]
}"#;

    #[test]
    fn load_assigns_ids_in_declaration_order() {
        let doc = GraphDocument::parse(SAMPLE, "sample").unwrap();
        let g = doc.load().unwrap();
        assert_eq!(g.graph.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(g.name(2), "c");
    }

    #[test]
    fn canonical_form_round_trips() {
        let doc = GraphDocument::parse(SAMPLE, "sample").unwrap();
        let canonical = doc.load().unwrap().document(None, None).to_text();
        assert!(canonical.contains("\"b\",\n      \"c\""));
        let again = GraphDocument::parse(&canonical, "c").unwrap().load().unwrap();
        assert_eq!(again.document(None, None).to_text(), canonical);
    }

    #[test]
    fn rejects_bad_documents() {
        let cases = [
            (r#"{"format_version": 2, "vertices": [], "edges": []}"#, "format_version"),
            (r#"{"format_version": 1, "vertices": ["a", "a"], "edges": []}"#, "twice"),
            (r#"{"format_version": 1, "vertices": ["a"], "edges": [["a", "z"]]}"#, "undeclared"),
            (r#"{"format_version": 1, "vertices": ["a"], "edges": [["a", "a"]]}"#, "self-loop"),
            (
                r#"{"format_version": 1, "vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]}"#,
                "twice",
            ),
            (
                r#"{"format_version": 1, "vertices": ["a", "b"], "edges": [["a", "b"]], "rotation": {"a": []}}"#,
                "permutation",
            ),
            (
                r#"{"format_version": 1, "vertices": ["a"], "edges": [], "coloring": {"q": 1}}"#,
                "undeclared",
            ),
        ];
        for (text, needle) in cases {
            let err = GraphDocument::parse(text, "t").and_then(|d| d.load()).unwrap_err();
            assert!(err.to_string().contains(needle), "{text}: {err}");
        }
        assert!(GraphDocument::parse(r#"{"format_version": 1, "vertices": [], "edges": [], "x": 1}"#, "t").is_err());
    }

    #[test]
    fn from_graph_names_vertices_by_id() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let doc = GraphDocument::from_graph(&g);
        assert_eq!(doc.vertices, vec!["0", "1", "2"]);
        assert_eq!(doc.edges, vec![("0".into(), "1".into()), ("1".into(), "2".into())]);
    }
}
