//! Combinatorial planar embeddings.
//!
//! An [`Embedding`] is a rotation system: for every vertex, the cyclic order
//! of its neighbors. Faces are traced with the rule
//! `next(u -> v) = (v -> w)` where `w` follows `u` in the rotation at `v`.

mod planarity;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Edge, Graph, VertexId, VertexSet};

pub use planarity::{kuratowski_witness, KuratowskiKind, KuratowskiWitness};

/// A directed edge `(tail, head)`.
pub type Dart = (VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph is not planar ({0})")]
    NonPlanar(NonPlanar),
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    InvalidRotation(VertexId),
    #[error("rotation covers unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("embedding fails Euler's formula: V={vertices} E={edges} F={faces}")]
    Inconsistent {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("operation requires a cubic graph (vertex {0} is not of degree 3)")]
    NotCubic(VertexId),
    #[error("no face of length at most 5 in a cubic planar embedding (shortest is {0})")]
    TheoremViolation(usize),
    #[error("{0:?} is not a cycle of the embedded graph")]
    NotACycle(Vec<VertexId>),
    #[error("cycle splits the faces into {0} groups instead of 2")]
    SideGroups(usize),
}

/// Refusal from [`embed`], with a Kuratowski subgraph when one could be extracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPlanar {
    pub witness: Option<KuratowskiWitness>,
}

impl std::fmt::Display for NonPlanar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.witness {
            Some(w) => write!(f, "{:?} subdivision on {} edges", w.kind, w.edges.len()),
            None => f.write_str("no witness"),
        }
    }
}

/// A rotation system on a simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
}

/// A face as its closed boundary walk.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    /// Number of edge traversals; a bridge counts twice.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertex sequence of the boundary walk, starting at the first dart's tail.
    pub fn boundary(&self) -> Vec<VertexId> {
        self.darts.iter().map(|d| d.0).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.darts.iter().map(|d| d.0).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Inside,
    Outside,
}

/// The two sides of a cycle in an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideClassification {
    pub cycle: Vec<VertexId>,
    pub inside: VertexSet,
    pub outside: VertexSet,
}

impl SideClassification {
    pub fn side(&self, side: Side) -> &VertexSet {
        match side {
            Side::Inside => &self.inside,
            Side::Outside => &self.outside,
        }
    }

    /// An empty side, preferring `Inside` when both are empty.
    pub fn empty_side(&self) -> Option<Side> {
        if self.inside.is_empty() {
            Some(Side::Inside)
        } else if self.outside.is_empty() {
            Some(Side::Outside)
        } else {
            None
        }
    }

    pub fn both_nonempty(&self) -> bool {
        self.empty_side().is_none()
    }

    /// Same separation with the labels exchanged.
    pub fn swapped(&self) -> SideClassification {
        SideClassification {
            cycle: self.cycle.clone(),
            inside: self.outside.clone(),
            outside: self.inside.clone(),
        }
    }
}

/// Computes a planar rotation system for `g`, one component at a time.
pub fn embed(g: &Graph) -> Result<Embedding, NonPlanar> {
    match planarity::planar_rotation(g) {
        Some(rotation) => Ok(Embedding {
            graph: g.clone(),
            rotation,
        }),
        None => Err(NonPlanar {
            witness: kuratowski_witness(g),
        }),
    }
}

/// Cheap planarity predicate (no witness extraction).
pub fn is_planar(g: &Graph) -> bool {
    planarity::planar_rotation(g).is_some()
}

impl Embedding {
    /// Wraps an explicit rotation system after checking that every list is a
    /// permutation of the vertex's neighbors. Planarity is not checked; use
    /// [`euler_check`] for that.
    pub fn from_rotation(
        graph: Graph,
        rotation: BTreeMap<VertexId, Vec<VertexId>>,
    ) -> Result<Self, EmbedError> {
        if let Some(&v) = rotation.keys().find(|v| !graph.contains(**v)) {
            return Err(EmbedError::UnknownVertex(v));
        }
        for v in graph.vertices() {
            let mut listed = rotation.get(&v).cloned().unwrap_or_default();
            listed.sort_unstable();
            if listed != graph.neighbors(v) {
                return Err(EmbedError::InvalidRotation(v));
            }
        }
        let rotation = graph
            .vertices()
            .map(|v| (v, rotation.get(&v).cloned().unwrap_or_default()))
            .collect();
        Ok(Self { graph, rotation })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[&v]
    }

    pub fn rotations(&self) -> &BTreeMap<VertexId, Vec<VertexId>> {
        &self.rotation
    }

    /// The dart following `(u, v)` on its face.
    pub fn next_dart(&self, (u, v): Dart) -> Dart {
        let rot = &self.rotation[&v];
        let i = rot.iter().position(|&x| x == u).expect("dart not in rotation");
        (v, rot[(i + 1) % rot.len()])
    }

    /// All faces. Each face starts at its smallest dart; faces are ordered by that dart.
    pub fn faces(&self) -> Vec<Face> {
        let mut darts: Vec<Dart> = Vec::with_capacity(2 * self.graph.edge_count());
        for (u, v) in self.graph.edges() {
            darts.push((u, v));
            darts.push((v, u));
        }
        darts.sort_unstable();
        let mut seen: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = Vec::new();
        for start in darts {
            if seen.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                seen.insert(d);
                walk.push(d);
                d = self.next_dart(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts: walk });
        }
        faces
    }
}

/// Faces of the embedding; see [`Embedding::faces`].
pub fn trace_faces(e: &Embedding) -> Vec<Face> {
    e.faces()
}

/// Checks `V - E + F = 2` on every connected component.
///
/// An isolated vertex counts as a component with one face.
pub fn euler_check(e: &Embedding) -> Result<(), EmbedError> {
    let faces = e.faces();
    for comp in e.graph.component_sets() {
        let vertices = comp.len();
        let edges: usize = comp.iter().map(|&v| e.graph.neighbors(v).len()).sum::<usize>() / 2;
        let face_count = if edges == 0 {
            1
        } else {
            faces
                .iter()
                .filter(|f| comp.contains(&f.darts[0].0))
                .count()
        };
        if vertices + face_count != edges + 2 {
            return Err(EmbedError::Inconsistent {
                vertices,
                edges,
                faces: face_count,
            });
        }
    }
    Ok(())
}

/// A shortest face of a connected cubic planar embedding; its length is at most 5.
pub fn short_face_exists(e: &Embedding) -> Result<Face, EmbedError> {
    if let Some(v) = e.graph.vertices().find(|&v| e.graph.neighbors(v).len() != 3) {
        return Err(EmbedError::NotCubic(v));
    }
    if !e.graph.is_connected() {
        return Err(EmbedError::Disconnected);
    }
    let face = e
        .faces()
        .into_iter()
        .min_by_key(Face::len)
        .ok_or(EmbedError::TheoremViolation(0))?;
    if face.len() > 5 {
        return Err(EmbedError::TheoremViolation(face.len()));
    }
    Ok(face)
}

/// Splits the vertices off `cycle` into its two sides.
///
/// Faces are grouped by adjacency across edges not on the cycle; a cycle of a
/// connected plane graph leaves exactly two groups. The group holding the
/// face with the lexicographically smallest boundary is labeled outside.
pub fn classify_sides(e: &Embedding, cycle: &[VertexId]) -> Result<SideClassification, EmbedError> {
    if !e.graph.is_cycle(cycle) {
        return Err(EmbedError::NotACycle(cycle.to_vec()));
    }
    let k = cycle.len();
    let on_cycle: BTreeSet<Edge> = (0..k)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    let faces = e.faces();
    let mut face_of: BTreeMap<Dart, usize> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &d in &f.darts {
            face_of.insert(d, i);
        }
    }
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    for (u, v) in e.graph.edges() {
        if !on_cycle.contains(&(u, v)) {
            union(&mut parent, face_of[&(u, v)], face_of[&(v, u)]);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..faces.len() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    if groups.len() != 2 {
        return Err(EmbedError::SideGroups(groups.len()));
    }
    let cycle_set: VertexSet = cycle.iter().copied().collect();
    let mut sides: Vec<(Vec<VertexId>, VertexSet)> = groups
        .values()
        .map(|members| {
            let least = members.iter().map(|&i| faces[i].boundary()).min().unwrap();
            let verts = members
                .iter()
                .flat_map(|&i| faces[i].vertex_set())
                .filter(|v| !cycle_set.contains(v))
                .collect();
            (least, verts)
        })
        .collect();
    sides.sort();
    let (_, inside) = sides.pop().unwrap();
    let (_, outside) = sides.pop().unwrap();
    Ok(SideClassification {
        cycle: cycle.to_vec(),
        inside,
        outside,
    })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}
