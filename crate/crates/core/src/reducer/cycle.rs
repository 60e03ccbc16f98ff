//! Reductions of a shortest 4- or 5-cycle whose inner side is empty.
//!
//! The cycle is `x1 .. xk` and `yi` is the neighbor of `xi` off the cycle.
//! Indices below are zero-based (`x[0]` is `x1`).

use crate::coloring::{Color, Coloring};
use crate::embed::{classify_sides, Embedding, Side};
use crate::graph::{Graph, VertexId};

use super::trace::{Margin, ReductionStep, StepKind};
use super::ProofAssertion;

/// A shortest cycle with its exterior neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleContext {
    pub cycle: Vec<VertexId>,
    pub exterior: Vec<VertexId>,
    pub empty_side: Side,
}

impl CycleContext {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// The context seen through an index permutation: new position `i` holds
    /// old position `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> CycleContext {
        CycleContext {
            cycle: perm.iter().map(|&i| self.cycle[i]).collect(),
            exterior: perm.iter().map(|&i| self.exterior[i]).collect(),
            empty_side: self.empty_side,
        }
    }

    fn kind(&self) -> StepKind {
        if self.len() == 4 {
            StepKind::FourCycle
        } else {
            StepKind::FiveCycle
        }
    }
}

/// Labels the exterior neighbors of a shortest cycle and checks the
/// configuration the extensions rely on: the graph is cubic, one side of the
/// cycle is empty, the `yi` are pairwise distinct, and no two `yi` whose
/// cycle vertices are at distance two on the cycle are adjacent (for k = 4
/// the pairs y1/y3 and y2/y4, for k = 5 every pair such as y1/y4).
pub fn build_cycle_context(
    g: &Graph,
    e: &Embedding,
    cycle: &[VertexId],
) -> Result<CycleContext, ProofAssertion> {
    let k = cycle.len();
    let kind = if k == 4 {
        StepKind::FourCycle
    } else {
        StepKind::FiveCycle
    };
    let fail = |m: String| ProofAssertion::new(kind, m);
    if !(4..=5).contains(&k) {
        return Err(fail(format!("shortest cycle has length {k}, expected 4 or 5")));
    }
    if !g.is_cubic() {
        return Err(fail("graph is not cubic".to_string()));
    }
    if !g.is_chordless_cycle(cycle) {
        return Err(fail(format!("{cycle:?} is not a chordless cycle")));
    }
    let sides = classify_sides(e, cycle).map_err(|err| fail(err.to_string()))?;
    let empty_side = sides
        .empty_side()
        .ok_or_else(|| fail(format!("cycle {cycle:?} has vertices on both sides")))?;
    let exterior: Vec<VertexId> = cycle
        .iter()
        .map(|&x| {
            let off: Vec<VertexId> = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|w| !cycle.contains(w))
                .collect();
            match off[..] {
                [y] => Ok(y),
                _ => Err(fail(format!("cycle vertex {x} has {} neighbors off the cycle", off.len()))),
            }
        })
        .collect::<Result<_, _>>()?;
    for i in 0..k {
        for j in i + 1..k {
            if exterior[i] == exterior[j] {
                return Err(fail(format!(
                    "exterior neighbors y{} and y{} coincide ({})",
                    i + 1,
                    j + 1,
                    exterior[i]
                )));
            }
            let gap = (j - i).min(k - (j - i));
            if gap == 2 && g.has_edge(exterior[i], exterior[j]) {
                return Err(fail(format!(
                    "exterior neighbors y{} and y{} are adjacent",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(CycleContext {
        cycle: cycle.to_vec(),
        exterior,
        empty_side,
    })
}

fn reduce_cycle(
    g: &Graph,
    ctx: &CycleContext,
    k: usize,
    join: (usize, usize),
) -> Result<(Graph, ReductionStep), ProofAssertion> {
    let kind = if k == 4 {
        StepKind::FourCycle
    } else {
        StepKind::FiveCycle
    };
    if ctx.len() != k {
        return Err(ProofAssertion::new(
            kind,
            format!("context has {} vertices, expected {k}", ctx.len()),
        ));
    }
    let (a, b) = (ctx.exterior[join.0], ctx.exterior[join.1]);
    if a == b || g.has_edge(a, b) {
        return Err(ProofAssertion::new(
            kind,
            format!("exterior neighbors {a} and {b} are equal or adjacent"),
        ));
    }
    let mut reduced = g.clone();
    for &x in &ctx.cycle {
        reduced
            .remove_vertex(x)
            .map_err(|e| ProofAssertion::new(kind, e.to_string()))?;
    }
    reduced
        .add_edge(a, b)
        .map_err(|e| ProofAssertion::new(kind, e.to_string()))?;
    let mut step = ReductionStep::new(kind, g.vertex_count());
    step.removed = ctx.cycle.clone();
    step.added_edges = vec![(a.min(b), a.max(b))];
    step.context = Some(ctx.clone());
    Ok((reduced, step))
}

/// Removes the four cycle vertices and joins `y1` to `y3`.
pub fn reduce_4cycle(g: &Graph, ctx: &CycleContext) -> Result<(Graph, ReductionStep), ProofAssertion> {
    reduce_cycle(g, ctx, 4, (0, 2))
}

/// Removes the five cycle vertices and joins `y1` to `y4`.
pub fn reduce_5cycle(g: &Graph, ctx: &CycleContext) -> Result<(Graph, ReductionStep), ProofAssertion> {
    reduce_cycle(g, ctx, 5, (0, 3))
}

/// Working state of an extension: the partial coloring of the original graph
/// and the margins recorded so far.
struct Extension<'a> {
    g: &'a Graph,
    kind: StepKind,
    coloring: Coloring,
    margins: Vec<Margin>,
    order: Vec<(VertexId, Color)>,
}

impl<'a> Extension<'a> {
    fn fail(&self, message: String) -> ProofAssertion {
        ProofAssertion::new(self.kind, message).with_margins(&self.margins)
    }

    fn color_of(&self, v: VertexId) -> Result<Color, ProofAssertion> {
        self.coloring
            .get(v)
            .ok_or_else(|| self.fail(format!("vertex {v} is uncolored")))
    }

    fn colored_neighbors(&self, v: VertexId) -> usize {
        self.g
            .distance2_neighbors(v)
            .unwrap()
            .iter()
            .filter(|&&w| self.coloring.get(w).is_some())
            .count()
    }

    fn assign(&mut self, v: VertexId, color: Color) {
        self.coloring.set(v, color);
        self.order.push((v, color));
    }

    /// Gives `v` a prescribed color after checking it is admissible.
    fn force(&mut self, role: &str, v: VertexId, color: Color) -> Result<(), ProofAssertion> {
        let free = self.coloring.admissible(self.g, v);
        self.margins.push(Margin {
            role: role.to_string(),
            vertex: v,
            colored_neighbors: self.colored_neighbors(v),
            available: free.len(),
            phase_start: None,
        });
        if !free.contains(&color) {
            return Err(self.fail(format!("color {color} is not admissible for {role} ({v})")));
        }
        self.assign(v, color);
        Ok(())
    }

    /// Colors `v` with its least admissible color.
    fn greedy(&mut self, role: &str, v: VertexId, phase_start: Option<usize>) -> Result<(), ProofAssertion> {
        let free = self.coloring.admissible(self.g, v);
        self.margins.push(Margin {
            role: role.to_string(),
            vertex: v,
            colored_neighbors: self.colored_neighbors(v),
            available: free.len(),
            phase_start,
        });
        let Some(&color) = free.first() else {
            return Err(self.fail(format!("no admissible color for {role} ({v})")));
        };
        self.assign(v, color);
        Ok(())
    }

    /// Recolors an exterior neighbor that was uncolored, checking that it has
    /// at most nine distance-2 neighbors of which at least two are uncolored.
    fn recolor_exterior(&mut self, role: &str, y: VertexId) -> Result<(), ProofAssertion> {
        let ring = self.g.distance2_neighbors(y).unwrap();
        if ring.len() > 9 {
            return Err(self.fail(format!("{role} ({y}) has {} distance-2 neighbors", ring.len())));
        }
        let uncolored = ring.iter().filter(|&&w| self.coloring.get(w).is_none()).count();
        if uncolored < 2 {
            return Err(self.fail(format!("{role} ({y}) sees only {uncolored} uncolored vertices")));
        }
        self.greedy(role, y, None)
    }

    fn admissible_count(&self, v: VertexId) -> usize {
        self.coloring.admissible(self.g, v).len()
    }
}

fn start_extension<'a>(
    c: &Coloring,
    step: &ReductionStep,
    g: &'a Graph,
    k: usize,
) -> Result<(Extension<'a>, CycleContext), ProofAssertion> {
    let kind = if k == 4 {
        StepKind::FourCycle
    } else {
        StepKind::FiveCycle
    };
    let ctx = step
        .context
        .clone()
        .filter(|ctx| ctx.len() == k && ctx.kind() == kind && step.kind == kind)
        .ok_or_else(|| ProofAssertion::new(kind, "step carries no matching cycle context"))?;
    // The reduced graph's coloring restricted to G minus the cycle.
    let mut coloring = Coloring::new(c.palette());
    for v in g.vertices().filter(|v| !ctx.cycle.contains(v)) {
        let color = c
            .get(v)
            .ok_or_else(|| ProofAssertion::new(kind, format!("reduced coloring misses {v}")))?;
        coloring.set(v, color);
    }
    let ext = Extension {
        g,
        kind,
        coloring,
        margins: Vec::new(),
        order: Vec::new(),
    };
    Ok((ext, ctx))
}

/// Extends a coloring of the 4-cycle reduction back to `g`.
///
/// Order: relabel so that `y3` and `y4` differ, uncolor `y2`, give `x1` the
/// color of `y3`, recolor `y2`, then color `x2`, `x3`, `x4` greedily. At the
/// start of the last phase `x2` and `x3` must have at least two admissible
/// colors and `x4` at least three.
pub fn extend_4cycle(
    c: &Coloring,
    step: &mut ReductionStep,
    g: &Graph,
) -> Result<Coloring, ProofAssertion> {
    let (mut ext, ctx) = start_extension(c, step, g, 4)?;
    let y = &ctx.exterior;
    if ext.color_of(y[0])? == ext.color_of(y[2])? {
        return Err(ext.fail("y1 and y3 share a color despite the added edge".to_string()));
    }
    // Symmetries of the square that fix {x1, x3}.
    const LABELINGS: [[usize; 4]; 4] = [[0, 1, 2, 3], [2, 3, 0, 1], [0, 3, 2, 1], [2, 1, 0, 3]];
    let mut chosen = None;
    for perm in LABELINGS {
        if ext.color_of(y[perm[2]])? != ext.color_of(y[perm[3]])? {
            chosen = Some(perm);
            break;
        }
    }
    let perm = chosen.ok_or_else(|| ext.fail("no labeling separates y3 and y4".to_string()))?;
    let ctx = ctx.relabeled(&perm);
    let (x, y) = (&ctx.cycle, &ctx.exterior);

    ext.coloring.unset(y[1]);
    let y3_color = ext.color_of(y[2])?;
    ext.force("x1", x[0], y3_color)?;
    ext.recolor_exterior("y2", y[1])?;

    let starts = [
        ext.admissible_count(x[1]),
        ext.admissible_count(x[2]),
        ext.admissible_count(x[3]),
    ];
    for (role, have, need) in [("x2", starts[0], 2), ("x3", starts[1], 2), ("x4", starts[2], 3)] {
        if have < need {
            return Err(ext.fail(format!("{role} starts with {have} admissible colors, expected {need}")));
        }
    }
    ext.greedy("x2", x[1], Some(starts[0]))?;
    ext.greedy("x3", x[2], Some(starts[1]))?;
    ext.greedy("x4", x[3], Some(starts[2]))?;

    step.labeling = perm.to_vec();
    step.margins = ext.margins;
    step.assigned = ext.order;
    Ok(ext.coloring)
}

/// Extends a coloring of the 5-cycle reduction back to `g`.
///
/// Order: relabel so that `y4` and `y5` differ, uncolor `y2` and `y3`, give
/// `x1` the color of `y4`, recolor `y2`, try `x4 := color(y1)` (failing only
/// when `y1` and `y5` share a color), recolor `y3`, then color `x2`, `x3`
/// and `x5`. At the start of the last phase `x5` must have at least three
/// admissible colors.
pub fn extend_5cycle(
    c: &Coloring,
    step: &mut ReductionStep,
    g: &Graph,
) -> Result<Coloring, ProofAssertion> {
    let (mut ext, ctx) = start_extension(c, step, g, 5)?;
    let y = &ctx.exterior;
    if ext.color_of(y[0])? == ext.color_of(y[3])? {
        return Err(ext.fail("y1 and y4 share a color despite the added edge".to_string()));
    }
    // Identity, and the reflection exchanging x1 with x4 and x2 with x3.
    const LABELINGS: [[usize; 5]; 2] = [[0, 1, 2, 3, 4], [3, 2, 1, 0, 4]];
    let mut chosen = None;
    for perm in LABELINGS {
        if ext.color_of(y[perm[3]])? != ext.color_of(y[perm[4]])? {
            chosen = Some(perm);
            break;
        }
    }
    let perm = chosen.ok_or_else(|| ext.fail("no labeling separates y4 and y5".to_string()))?;
    let ctx = ctx.relabeled(&perm);
    let (x, y) = (&ctx.cycle, &ctx.exterior);

    ext.coloring.unset(y[1]);
    ext.coloring.unset(y[2]);
    let y4_color = ext.color_of(y[3])?;
    ext.force("x1", x[0], y4_color)?;
    ext.recolor_exterior("y2", y[1])?;

    let y1_color = ext.color_of(y[0])?;
    if ext.coloring.admissible(g, x[3]).contains(&y1_color) {
        ext.force("x4", x[3], y1_color)?;
    } else {
        if ext.color_of(y[4])? != y1_color {
            return Err(ext.fail(
                "x4 cannot take the color of y1, yet y1 and y5 differ".to_string(),
            ));
        }
        ext.greedy("x4", x[3], None)?;
    }
    ext.recolor_exterior("y3", y[2])?;

    let starts = [
        ext.admissible_count(x[1]),
        ext.admissible_count(x[2]),
        ext.admissible_count(x[4]),
    ];
    if starts[2] < 3 {
        return Err(ext.fail(format!("x5 starts with {} admissible colors, expected 3", starts[2])));
    }
    ext.greedy("x2", x[1], Some(starts[0]))?;
    ext.greedy("x3", x[2], Some(starts[1]))?;
    ext.greedy("x5", x[4], Some(starts[2]))?;

    step.labeling = perm.to_vec();
    step.margins = ext.margins;
    step.assigned = ext.order;
    Ok(ext.coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{build, GeneratorSpec};
    use crate::embed::{embed, is_planar};
    use crate::oracle::{base_case_color, verify_coloring};

    fn context(g: &Graph) -> CycleContext {
        let e = embed(g).unwrap();
        build_cycle_context(g, &e, &g.shortest_cycle().unwrap()).unwrap()
    }

    #[test]
    fn cube_context() {
        let cube = build(&GeneratorSpec::Cube).unwrap();
        let ctx = context(&cube);
        assert_eq!(ctx.cycle, vec![0, 1, 3, 2]);
        assert_eq!(ctx.exterior, vec![4, 5, 7, 6]);
        assert!(!cube.has_edge(ctx.exterior[0], ctx.exterior[2]));
    }

    #[test]
    fn dodecahedron_context() {
        let d = build(&GeneratorSpec::Dodecahedron).unwrap();
        let ctx = context(&d);
        assert_eq!(ctx.len(), 5);
        let mut ys = ctx.exterior.clone();
        ys.sort_unstable();
        ys.dedup();
        assert_eq!(ys.len(), 5);
        assert!(!d.has_edge(ctx.exterior[0], ctx.exterior[3]));
    }

    #[test]
    fn pentagonal_prism_face_context() {
        let p = build(&GeneratorSpec::Prism(5)).unwrap();
        let e = embed(&p).unwrap();
        let ctx = build_cycle_context(&p, &e, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(ctx.exterior, vec![5, 6, 7, 8, 9]);
    }

    #[test]
    fn cube_reduction_is_a_diamond() {
        let cube = build(&GeneratorSpec::Cube).unwrap();
        let ctx = context(&cube);
        let (g, step) = reduce_4cycle(&cube, &ctx).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 5);
        let degrees: Vec<usize> = ctx.exterior.iter().map(|&v| g.degree(v).unwrap()).collect();
        assert_eq!(degrees, vec![3, 2, 3, 2]);
        assert_eq!(step.added_edges, vec![(4, 7)]);
    }

    #[test]
    fn cube_end_to_end() {
        let cube = build(&GeneratorSpec::Cube).unwrap();
        let ctx = context(&cube);
        let (reduced, mut step) = reduce_4cycle(&cube, &ctx).unwrap();
        let c = base_case_color(&reduced, 8).unwrap();
        let out = extend_4cycle(&c, &mut step, &cube).unwrap();
        assert!(verify_coloring(&cube, &out).unwrap().is_valid());
        let x4 = step.margins.iter().find(|m| m.role == "x4").unwrap();
        assert!(x4.phase_start.unwrap() >= 3);
    }

    #[test]
    fn pentagonal_prism_reduction() {
        let p = build(&GeneratorSpec::Prism(5)).unwrap();
        let e = embed(&p).unwrap();
        let ctx = build_cycle_context(&p, &e, &[0, 1, 2, 3, 4]).unwrap();
        let (g, mut step) = reduce_5cycle(&p, &ctx).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(5, 8));
        let c = base_case_color(&g, 8).unwrap();
        let out = extend_5cycle(&c, &mut step, &p).unwrap();
        assert!(verify_coloring(&p, &out).unwrap().is_valid());
        let x5 = step.margins.iter().find(|m| m.role == "x5").unwrap();
        assert!(x5.phase_start.unwrap() >= 3);
    }

    #[test]
    fn dodecahedron_reduction_drops_five_vertices() {
        let d = build(&GeneratorSpec::Dodecahedron).unwrap();
        let ctx = context(&d);
        let (g, _) = reduce_5cycle(&d, &ctx).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert!(g.validate_subcubic().is_ok());
        assert!(is_planar(&g));
        assert!(g.vertices().any(|v| g.degree(v).unwrap() == 2));
    }

    #[test]
    fn wrong_context_length_is_rejected() {
        let cube = build(&GeneratorSpec::Cube).unwrap();
        let ctx = context(&cube);
        assert!(reduce_5cycle(&cube, &ctx).is_err());
    }
}
