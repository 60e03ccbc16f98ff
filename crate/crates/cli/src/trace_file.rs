//! Versioned JSON rendering of a reduction trace, with vertices named as in
//! the input document.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use d2color::embed::Side;
use d2color::reducer::{CycleContext, Diagnostic, Margin, ReductionStep, ReductionTrace, StepKind};
use d2color::VertexId;

use crate::document::LoadedGraph;

pub const TRACE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    pub format_version: u32,
    pub palette: usize,
    pub steps: Vec<StepRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<DiagnosticRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepRecord {
    pub kind: String,
    pub vertex_count: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub added_edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<ContextRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cycle: Vec<String>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub parts: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labeling: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub margins: Vec<MarginRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assigned: Vec<(String, usize)>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextRecord {
    pub cycle: Vec<String>,
    pub exterior: Vec<String>,
    /// `inside` or `outside`.
    pub empty_side: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarginRecord {
    pub role: String,
    pub vertex: String,
    pub colored_neighbors: usize,
    pub available: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase_start: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagnosticRecord {
    pub kind: String,
    pub message: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub margins: Vec<MarginRecord>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceFileError {
    #[error("unsupported trace format_version {0}")]
    Version(u32),
    #[error("unknown step kind `{0}`")]
    Kind(String),
    #[error("trace names unknown vertex `{0}`")]
    Vertex(String),
    #[error("unknown side `{0}`")]
    Side(String),
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Inside => "inside",
        Side::Outside => "outside",
    }
}

impl TraceDocument {
    pub fn from_trace(trace: &ReductionTrace, g: &LoadedGraph, palette: usize) -> Self {
        let n = |v: VertexId| g.name(v).to_string();
        let names = |vs: &[VertexId]| vs.iter().map(|&v| n(v)).collect::<Vec<_>>();
        let margins = |ms: &[Margin]| {
            ms.iter()
                .map(|m| MarginRecord {
                    role: m.role.clone(),
                    vertex: n(m.vertex),
                    colored_neighbors: m.colored_neighbors,
                    available: m.available,
                    phase_start: m.phase_start,
                })
                .collect::<Vec<_>>()
        };
        let steps = trace
            .steps
            .iter()
            .map(|s| StepRecord {
                kind: s.kind.to_string(),
                vertex_count: s.vertex_count,
                removed: names(&s.removed),
                added_edges: s.added_edges.iter().map(|&(u, v)| (n(u), n(v))).collect(),
                context: s.context.as_ref().map(|c| ContextRecord {
                    cycle: names(&c.cycle),
                    exterior: names(&c.exterior),
                    empty_side: side_name(c.empty_side).to_string(),
                }),
                cycle: names(&s.cycle),
                parts: s.parts,
                labeling: s.labeling.clone(),
                margins: margins(&s.margins),
                assigned: s.assigned.iter().map(|&(v, c)| (n(v), c)).collect(),
            })
            .collect();
        let diagnostics = trace
            .diagnostics
            .iter()
            .map(|d| DiagnosticRecord {
                kind: d.kind.to_string(),
                message: d.message.clone(),
                vertices: names(&d.vertices),
                edges: d.edges.iter().map(|&(u, v)| (n(u), n(v))).collect(),
                margins: margins(&d.margins),
            })
            .collect();
        TraceDocument {
            format_version: TRACE_VERSION,
            palette,
            steps,
            diagnostics,
        }
    }

    /// Maps names back to the ids of `g`.
    pub fn to_trace(&self, g: &LoadedGraph) -> Result<ReductionTrace, TraceFileError> {
        if self.format_version != TRACE_VERSION {
            return Err(TraceFileError::Version(self.format_version));
        }
        let id = |name: &String| -> Result<VertexId, TraceFileError> {
            g.names
                .iter()
                .position(|n| n == name)
                .map(|i| i as VertexId)
                .ok_or_else(|| TraceFileError::Vertex(name.clone()))
        };
        let ids = |names: &[String]| names.iter().map(id).collect::<Result<Vec<_>, _>>();
        let pair = |(a, b): &(String, String)| Ok((id(a)?, id(b)?));
        let kind = |k: &str| k.parse::<StepKind>().map_err(|_| TraceFileError::Kind(k.to_string()));
        let margins = |ms: &[MarginRecord]| {
            ms.iter()
                .map(|m| {
                    Ok(Margin {
                        role: m.role.clone(),
                        vertex: id(&m.vertex)?,
                        colored_neighbors: m.colored_neighbors,
                        available: m.available,
                        phase_start: m.phase_start,
                    })
                })
                .collect::<Result<Vec<_>, TraceFileError>>()
        };
        let mut trace = ReductionTrace::default();
        for s in &self.steps {
            let mut step = ReductionStep::new(kind(&s.kind)?, s.vertex_count);
            step.removed = ids(&s.removed)?;
            step.added_edges = s.added_edges.iter().map(pair).collect::<Result<_, _>>()?;
            step.context = match &s.context {
                None => None,
                Some(c) => Some(CycleContext {
                    cycle: ids(&c.cycle)?,
                    exterior: ids(&c.exterior)?,
                    empty_side: match c.empty_side.as_str() {
                        "inside" => Side::Inside,
                        "outside" => Side::Outside,
                        other => return Err(TraceFileError::Side(other.to_string())),
                    },
                }),
            };
            step.cycle = ids(&s.cycle)?;
            step.parts = s.parts;
            step.labeling = s.labeling.clone();
            step.margins = margins(&s.margins)?;
            step.assigned = s
                .assigned
                .iter()
                .map(|(v, c)| Ok((id(v)?, *c)))
                .collect::<Result<_, TraceFileError>>()?;
            trace.steps.push(step);
        }
        for d in &self.diagnostics {
            trace.diagnostics.push(Diagnostic {
                kind: kind(&d.kind)?,
                message: d.message.clone(),
                vertices: ids(&d.vertices)?,
                edges: d.edges.iter().map(pair).collect::<Result<_, _>>()?,
                margins: margins(&d.margins)?,
            });
        }
        Ok(trace)
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("traces always serialize");
        s.push('\n');
        s
    }
}
