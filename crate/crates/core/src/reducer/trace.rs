use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::{Edge, Graph, VertexId};

use super::cycle::CycleContext;
use super::split::merge_colorings;
use super::ProofAssertion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    Base,
    ComponentSplit,
    /// Removal of a vertex of degree at most one.
    LowDegreeA,
    /// Removal of a degree-2 vertex, joining its neighbors.
    LowDegreeB,
    /// Removal of a triangle vertex `v`, joining its third neighbor `a` to `w`.
    TriangleC,
    InsideOutside,
    FourCycle,
    FiveCycle,
    /// Exact coloring of a subproblem after a failed proof-step assertion.
    Fallback,
}

impl StepKind {
    pub const ALL: [StepKind; 9] = [
        StepKind::Base,
        StepKind::ComponentSplit,
        StepKind::LowDegreeA,
        StepKind::LowDegreeB,
        StepKind::TriangleC,
        StepKind::InsideOutside,
        StepKind::FourCycle,
        StepKind::FiveCycle,
        StepKind::Fallback,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::Base => "base",
            StepKind::ComponentSplit => "component-split",
            StepKind::LowDegreeA => "low-degree-a",
            StepKind::LowDegreeB => "low-degree-b",
            StepKind::TriangleC => "triangle-c",
            StepKind::InsideOutside => "inside-outside",
            StepKind::FourCycle => "four-cycle",
            StepKind::FiveCycle => "five-cycle",
            StepKind::Fallback => "fallback",
        }
    }

    /// Number of child subproblems that follow this step in a pre-order trace,
    /// or `None` when it is stored on the step (`parts`).
    fn arity(self) -> Option<usize> {
        match self {
            StepKind::Base | StepKind::Fallback => Some(0),
            StepKind::ComponentSplit => None,
            StepKind::InsideOutside => Some(2),
            _ => Some(1),
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown step kind `{0}`")]
pub struct UnknownStepKind(pub String);

impl FromStr for StepKind {
    type Err = UnknownStepKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StepKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| UnknownStepKind(s.to_string()))
    }
}

/// Free colors observed when one vertex was colored during an extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Margin {
    /// Role of the vertex in the configuration (`v`, `x1`, `y2`, ...).
    pub role: String,
    pub vertex: VertexId,
    /// Colored vertices within distance 2 at the moment of coloring.
    pub colored_neighbors: usize,
    /// Admissible colors at the moment of coloring.
    pub available: usize,
    /// Admissible colors at the start of the final phase of a cycle
    /// extension, before any of the last cycle vertices were colored.
    pub phase_start: Option<usize>,
}

/// One reduction, split or base case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: StepKind,
    /// Vertex count of the subproblem this step acted on.
    pub vertex_count: usize,
    pub removed: Vec<VertexId>,
    /// Synthetic edges added by the reduction; extensions ignore them.
    pub added_edges: Vec<Edge>,
    pub context: Option<CycleContext>,
    /// Separating cycle of an inside-outside split.
    pub cycle: Vec<VertexId>,
    /// Number of components of a component split.
    pub parts: usize,
    /// Index permutation applied to the cycle context before extending.
    pub labeling: Vec<usize>,
    pub margins: Vec<Margin>,
    /// Colors written by this step, in the order they were chosen.
    pub assigned: Vec<(VertexId, Color)>,
}

impl ReductionStep {
    pub fn new(kind: StepKind, vertex_count: usize) -> Self {
        Self {
            kind,
            vertex_count,
            removed: Vec::new(),
            added_edges: Vec::new(),
            context: None,
            cycle: Vec::new(),
            parts: 0,
            labeling: Vec::new(),
            margins: Vec::new(),
            assigned: Vec::new(),
        }
    }
}

/// Details of a failed proof-step assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: StepKind,
    pub message: String,
    /// The subproblem on which the assertion fired.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
    pub margins: Vec<Margin>,
}

impl Diagnostic {
    pub fn new(assertion: ProofAssertion, g: &Graph) -> Self {
        Self {
            kind: assertion.kind,
            message: assertion.message,
            vertices: g.vertices().collect(),
            edges: g.edges(),
            margins: assertion.margins,
        }
    }
}

/// Pre-order record of a run of the colorer.
///
/// Each step is followed by the traces of its subproblems: none for base and
/// fallback steps, `parts` for component splits, the inside half then the
/// outside half for inside-outside splits, and one for every reduction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("trace ends before every subproblem is resolved")]
    Truncated,
    #[error("trace has {0} steps after the root subproblem is resolved")]
    Trailing(usize),
    #[error("step {index} ({kind}): {message}")]
    Step {
        index: usize,
        kind: StepKind,
        message: String,
    },
    #[error("replayed coloring does not cover the graph exactly")]
    Domain,
}

impl ReductionTrace {
    pub fn contains(&self, kind: StepKind) -> bool {
        self.steps.iter().any(|s| s.kind == kind)
    }

    pub fn count(&self, kind: StepKind) -> usize {
        self.steps.iter().filter(|s| s.kind == kind).count()
    }

    /// Rebuilds the coloring from the recorded assignments and merges.
    pub fn replay(&self, g: &Graph, palette: usize) -> Result<Coloring, ReplayError> {
        let mut pos = 0;
        let coloring = self.replay_node(&mut pos, palette)?;
        if pos != self.steps.len() {
            return Err(ReplayError::Trailing(self.steps.len() - pos));
        }
        if coloring.len() != g.vertex_count() || !coloring.is_total_on(g) {
            return Err(ReplayError::Domain);
        }
        Ok(coloring)
    }

    fn replay_node(&self, pos: &mut usize, palette: usize) -> Result<Coloring, ReplayError> {
        let index = *pos;
        let step = self.steps.get(index).ok_or(ReplayError::Truncated)?;
        *pos += 1;
        let fail = |message: String| ReplayError::Step {
            index,
            kind: step.kind,
            message,
        };
        let mut coloring = match step.kind.arity() {
            Some(0) => Coloring::new(palette),
            Some(1) => self.replay_node(pos, palette)?,
            Some(_) => {
                let inside = self.replay_node(pos, palette)?;
                let outside = self.replay_node(pos, palette)?;
                merge_colorings(&inside, &outside, &step.cycle)
                    .map_err(|e| fail(e.message))?
            }
            None => {
                let mut union = Coloring::new(palette);
                for _ in 0..step.parts {
                    union.extend_from(&self.replay_node(pos, palette)?);
                }
                union
            }
        };
        for &(v, c) in &step.assigned {
            if c >= palette {
                return Err(fail(format!("color {c} outside palette")));
            }
            coloring.set(v, c);
        }
        if let Some(&v) = step.removed.iter().find(|&&v| coloring.get(v).is_none()) {
            return Err(fail(format!("removed vertex {v} left uncolored")));
        }
        Ok(coloring)
    }
}
