//! Splitting along a short separating cycle and merging the half colorings.

use std::collections::BTreeSet;

use crate::coloring::{Color, Coloring};
use crate::embed::{classify_sides, Embedding};
use crate::graph::{Graph, VertexId, VertexSet};

use super::trace::StepKind;
use super::ProofAssertion;

fn fail(message: impl Into<String>) -> ProofAssertion {
    ProofAssertion::new(StepKind::InsideOutside, message)
}

/// The subgraphs induced by the cycle plus its inside, and the cycle plus its outside.
///
/// Requires a cubic graph and a chordless cycle of length 3 to 5 with
/// vertices on both sides.
pub fn split_on_cycle(
    g: &Graph,
    e: &Embedding,
    cycle: &[VertexId],
) -> Result<(Graph, Graph), ProofAssertion> {
    if !g.is_cubic() {
        return Err(fail("split requires a cubic graph"));
    }
    if !(3..=5).contains(&cycle.len()) || !g.is_chordless_cycle(cycle) {
        return Err(fail(format!("{cycle:?} is not a chordless cycle of length 3 to 5")));
    }
    let sides = classify_sides(e, cycle).map_err(|err| fail(err.to_string()))?;
    if !sides.both_nonempty() {
        return Err(fail(format!("cycle {cycle:?} has an empty side")));
    }
    for (u, v) in g.edges() {
        let crosses = (sides.inside.contains(&u) && sides.outside.contains(&v))
            || (sides.outside.contains(&u) && sides.inside.contains(&v));
        if crosses {
            return Err(fail(format!("edge {u}-{v} crosses cycle {cycle:?}")));
        }
    }
    for &x in cycle {
        let off: Vec<VertexId> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|w| !cycle.contains(w))
            .collect();
        let inside = off.iter().any(|w| sides.inside.contains(w));
        let outside = off.iter().any(|w| sides.outside.contains(w));
        if inside && outside {
            return Err(fail(format!("cycle vertex {x} has neighbors on both sides")));
        }
    }
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let h0: VertexSet = on_cycle.union(&sides.inside).copied().collect();
    let h1: VertexSet = on_cycle.union(&sides.outside).copied().collect();
    Ok((g.induced(&h0), g.induced(&h1)))
}

/// Combines colorings of the two halves of a split.
///
/// The palette permutation maps each cycle vertex's color in `c1` to its
/// color in `c0`; the remaining colors are paired in increasing order. The
/// result keeps `c0` and applies the permutation to the rest of `c1`.
pub fn merge_colorings(
    c0: &Coloring,
    c1: &Coloring,
    cycle: &[VertexId],
) -> Result<Coloring, ProofAssertion> {
    if c0.palette() != c1.palette() {
        return Err(fail(format!(
            "palette sizes differ ({} and {})",
            c0.palette(),
            c1.palette()
        )));
    }
    let palette = c0.palette();
    let on_cycle = |c: &Coloring, which: &str| -> Result<Vec<Color>, ProofAssertion> {
        let colors = cycle
            .iter()
            .map(|&v| {
                c.get(v)
                    .ok_or_else(|| fail(format!("cycle vertex {v} uncolored in the {which} half")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if colors.iter().collect::<BTreeSet<_>>().len() != colors.len() {
            return Err(fail(format!("cycle colors repeat in the {which} half")));
        }
        Ok(colors)
    };
    let target = on_cycle(c0, "inside")?;
    let source = on_cycle(c1, "outside")?;

    let mut perm: Vec<Option<Color>> = vec![None; palette];
    for (&s, &t) in source.iter().zip(&target) {
        perm[s] = Some(t);
    }
    let free_targets: Vec<Color> = (0..palette).filter(|c| !target.contains(c)).collect();
    let free_sources = (0..palette).filter(|c| !source.contains(c));
    for (s, t) in free_sources.zip(free_targets) {
        perm[s] = Some(t);
    }

    let mut merged = c0.clone();
    for (v, c) in c1.iter() {
        if !cycle.contains(&v) {
            merged.set(v, perm[c].expect("palette permutation is total"));
        }
    }
    Ok(merged)
}
