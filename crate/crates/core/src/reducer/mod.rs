//! Constructive 8-coloring by recursive reduction.
//!
//! [`color_graph`] walks the minimal-counterexample argument as an algorithm:
//!
//! 1. A disconnected graph is colored one component at a time.
//! 2. Small graphs (at most `base_threshold` vertices) are colored exactly.
//! 3. A vertex of degree at most one is deleted; a vertex of degree two is
//!    deleted and its neighbors joined.
//! 4. A vertex on a triangle is deleted and its third neighbor joined to one
//!    of the other two.
//! 5. The graph is now cubic with girth at least four. A chordless cycle of
//!    length at most five with vertices on both sides splits the graph into
//!    two halves sharing the cycle, colored independently and merged.
//! 6. Otherwise a shortest cycle (length four or five) has an empty side; its
//!    vertices are removed, two exterior neighbors joined, and the coloring
//!    of the rest extended in a fixed order.
//!
//! Every counting claim behind an extension is checked at run time. A failed
//! check is reported as a [`ProofAssertion`]; by default the subproblem is
//! then colored by exact search and a [`Diagnostic`] is kept in the trace.

mod cycle;
mod low_degree;
mod split;
mod trace;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::embed::{classify_sides, embed, is_planar, NonPlanar};
use crate::graph::{Graph, Subcubic, VertexId};
use crate::oracle::{base_case_color, find_coloring, verify_coloring, Verdict};

pub use cycle::{
    build_cycle_context, extend_4cycle, extend_5cycle, reduce_4cycle, reduce_5cycle, CycleContext,
};
pub use low_degree::{extend_low_degree, extend_triangle, reduce_low_degree, reduce_triangle};
pub use split::{merge_colorings, split_on_cycle};
pub use trace::{
    Diagnostic, Margin, ReductionStep, ReductionTrace, ReplayError, StepKind, UnknownStepKind,
};

/// Colors that always suffice for planar graphs of maximum degree three.
pub const PALETTE: usize = 8;

/// Largest subproblem handed straight to exact search.
pub const BASE_THRESHOLD: usize = 12;

/// A proof step whose stated precondition or counting bound did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind}: {message}")]
pub struct ProofAssertion {
    pub kind: StepKind,
    pub message: String,
    pub margins: Vec<Margin>,
}

impl ProofAssertion {
    pub fn new(kind: StepKind, message: impl Into<String>) -> Self {
        Self {
            kind,
            message: message.into(),
            margins: Vec::new(),
        }
    }

    pub(crate) fn with_margins(mut self, margins: &[Margin]) -> Self {
        self.margins = margins.to_vec();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("graph is not planar ({0})")]
    NonPlanar(NonPlanar),
    #[error("vertex {vertex} has degree {degree}")]
    DegreeViolation { vertex: VertexId, degree: usize },
    #[error("palette of {0} colors is outside the supported range 8..=64")]
    Palette(usize),
    #[error("internal assertion in {}: {}", .0.kind, .0.message)]
    InternalAssertion(Box<Diagnostic>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorOptions {
    pub palette: usize,
    pub base_threshold: usize,
    /// Recover from a failed assertion by exact search on the subproblem.
    pub fallback: bool,
    /// Re-check that every reduced graph is subcubic and planar.
    pub check_reductions: bool,
}

impl Default for ColorOptions {
    fn default() -> Self {
        Self {
            palette: PALETTE,
            base_threshold: BASE_THRESHOLD,
            fallback: true,
            check_reductions: true,
        }
    }
}

/// Colors a planar graph of maximum degree three with at most eight colors.
pub fn color_graph(g: &Graph) -> Result<(Coloring, ReductionTrace), ColorError> {
    Colorer::new(ColorOptions::default()).color(g)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Colorer {
    options: ColorOptions,
}

impl Colorer {
    pub fn new(options: ColorOptions) -> Self {
        Self { options }
    }

    pub fn options(&self) -> &ColorOptions {
        &self.options
    }

    pub fn color(&self, g: &Graph) -> Result<(Coloring, ReductionTrace), ColorError> {
        let palette = self.options.palette;
        if !(PALETTE..=64).contains(&palette) {
            return Err(ColorError::Palette(palette));
        }
        if let Subcubic::Violation { vertex, degree } = g.validate_subcubic() {
            return Err(ColorError::DegreeViolation { vertex, degree });
        }
        embed(g).map_err(ColorError::NonPlanar)?;
        let mut trace = ReductionTrace::default();
        let coloring = self.solve(g, &mut trace)?;
        match verify_coloring(g, &coloring) {
            Ok(Verdict::Valid) => Ok((coloring, trace)),
            Ok(Verdict::Invalid(violations)) => Err(self.fatal(
                g,
                StepKind::Base,
                format!("final coloring has {} violations", violations.len()),
            )),
            Err(e) => Err(self.fatal(g, StepKind::Base, e.to_string())),
        }
    }

    fn fatal(&self, g: &Graph, kind: StepKind, message: String) -> ColorError {
        ColorError::InternalAssertion(Box::new(Diagnostic::new(
            ProofAssertion::new(kind, message),
            g,
        )))
    }

    fn solve(&self, g: &Graph, trace: &mut ReductionTrace) -> Result<Coloring, ColorError> {
        let mark = trace.steps.len();
        match self.attempt(g, trace) {
            Ok(c) => Ok(c),
            Err(Failure::Assertion(assertion)) => {
                let diagnostic = Diagnostic::new(assertion, g);
                if !self.options.fallback {
                    return Err(ColorError::InternalAssertion(Box::new(diagnostic)));
                }
                trace.steps.truncate(mark);
                trace.diagnostics.push(diagnostic.clone());
                let coloring = find_coloring(g, self.options.palette)
                    .ok_or(ColorError::InternalAssertion(Box::new(diagnostic)))?;
                let mut step = ReductionStep::new(StepKind::Fallback, g.vertex_count());
                step.assigned = coloring.iter().collect();
                trace.steps.push(step);
                Ok(coloring)
            }
            Err(Failure::Fatal(e)) => Err(e),
        }
    }

    fn attempt(&self, g: &Graph, trace: &mut ReductionTrace) -> Result<Coloring, Failure> {
        let palette = self.options.palette;
        let n = g.vertex_count();

        let components = g.component_sets();
        if components.len() > 1 {
            let mut step = ReductionStep::new(StepKind::ComponentSplit, n);
            step.parts = components.len();
            trace.steps.push(step);
            let mut coloring = Coloring::new(palette);
            for comp in &components {
                coloring.extend_from(&self.solve(&g.induced(comp), trace)?);
            }
            return Ok(coloring);
        }

        if n <= self.options.base_threshold {
            let coloring = base_case_color(g, palette)
                .map_err(|e| ProofAssertion::new(StepKind::Base, e.to_string()))?;
            let mut step = ReductionStep::new(StepKind::Base, n);
            step.assigned = coloring.iter().collect();
            trace.steps.push(step);
            return Ok(coloring);
        }

        let degree = |v: VertexId| g.neighbors(v).len();
        let low = g
            .vertices()
            .find(|&v| degree(v) <= 1)
            .or_else(|| g.vertices().find(|&v| degree(v) == 2));
        if let Some(v) = low {
            let (reduced, step) = reduce_low_degree(g, v)?;
            return self.reduce_and_extend(g, reduced, step, trace, extend_low_degree);
        }

        if let Some(v) = g.vertices().find(|&v| in_triangle(g, v)) {
            let (reduced, step) = reduce_triangle(g, v)?;
            return self.reduce_and_extend(g, reduced, step, trace, extend_triangle);
        }

        // Cubic, girth at least four.
        let embedding = embed(g).map_err(|_| {
            ProofAssertion::new(StepKind::InsideOutside, "subproblem lost planarity")
        })?;
        for cycle in g.enumerate_short_cycles(5) {
            let sides = classify_sides(&embedding, &cycle)
                .map_err(|e| ProofAssertion::new(StepKind::InsideOutside, e.to_string()))?;
            if sides.both_nonempty() {
                return self.split(g, &embedding, &cycle, trace);
            }
        }

        let cycle = g.shortest_cycle().ok_or_else(|| {
            ProofAssertion::new(StepKind::FourCycle, "cubic graph without a cycle")
        })?;
        let ctx = build_cycle_context(g, &embedding, &cycle)?;
        match ctx.len() {
            4 => {
                let (reduced, step) = reduce_4cycle(g, &ctx)?;
                self.reduce_and_extend(g, reduced, step, trace, extend_4cycle)
            }
            _ => {
                let (reduced, step) = reduce_5cycle(g, &ctx)?;
                self.reduce_and_extend(g, reduced, step, trace, extend_5cycle)
            }
        }
    }

    fn reduce_and_extend(
        &self,
        g: &Graph,
        reduced: Graph,
        step: ReductionStep,
        trace: &mut ReductionTrace,
        extend: fn(&Coloring, &mut ReductionStep, &Graph) -> Result<Coloring, ProofAssertion>,
    ) -> Result<Coloring, Failure> {
        if self.options.check_reductions {
            check_closure(&reduced, step.kind)?;
        }
        let index = trace.steps.len();
        trace.steps.push(step);
        let inner = self.solve(&reduced, trace)?;
        let mut step = trace.steps[index].clone();
        let coloring = extend(&inner, &mut step, g)?;
        trace.steps[index] = step;
        Ok(coloring)
    }

    fn split(
        &self,
        g: &Graph,
        embedding: &crate::embed::Embedding,
        cycle: &[VertexId],
        trace: &mut ReductionTrace,
    ) -> Result<Coloring, Failure> {
        let (inside, outside) = split_on_cycle(g, embedding, cycle)?;
        let mut step = ReductionStep::new(StepKind::InsideOutside, g.vertex_count());
        step.cycle = cycle.to_vec();
        trace.steps.push(step);
        let c0 = self.solve(&inside, trace)?;
        let c1 = self.solve(&outside, trace)?;
        Ok(merge_colorings(&c0, &c1, cycle)?)
    }
}

/// Internal error channel: assertions may fall back, everything else propagates.
enum Failure {
    Assertion(ProofAssertion),
    Fatal(ColorError),
}

impl From<ProofAssertion> for Failure {
    fn from(a: ProofAssertion) -> Self {
        Failure::Assertion(a)
    }
}

impl From<ColorError> for Failure {
    fn from(e: ColorError) -> Self {
        Failure::Fatal(e)
    }
}

fn in_triangle(g: &Graph, v: VertexId) -> bool {
    let n = g.neighbors(v);
    (0..n.len()).any(|i| (i + 1..n.len()).any(|j| g.has_edge(n[i], n[j])))
}

fn check_closure(reduced: &Graph, kind: StepKind) -> Result<(), ProofAssertion> {
    if let Subcubic::Violation { vertex, degree } = reduced.validate_subcubic() {
        return Err(ProofAssertion::new(
            kind,
            format!("reduced graph has vertex {vertex} of degree {degree}"),
        ));
    }
    if !is_planar(reduced) {
        return Err(ProofAssertion::new(kind, "reduced graph is not planar"));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
