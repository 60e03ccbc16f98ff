//! Single-vertex reductions: low degree and triangles.

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexId};

use super::trace::{Margin, ReductionStep, StepKind};
use super::ProofAssertion;

/// Deletes `v` (degree at most two); a degree-2 vertex's neighbors are joined
/// unless already adjacent.
pub fn reduce_low_degree(g: &Graph, v: VertexId) -> Result<(Graph, ReductionStep), ProofAssertion> {
    let nbrs = g
        .try_neighbors(v)
        .map_err(|e| ProofAssertion::new(StepKind::LowDegreeA, e.to_string()))?
        .to_vec();
    let kind = match nbrs.len() {
        0 | 1 => StepKind::LowDegreeA,
        2 => StepKind::LowDegreeB,
        d => {
            return Err(ProofAssertion::new(
                StepKind::LowDegreeB,
                format!("vertex {v} has degree {d}, expected at most 2"),
            ))
        }
    };
    let mut reduced = g.clone();
    reduced.remove_vertex(v).unwrap();
    let mut step = ReductionStep::new(kind, g.vertex_count());
    step.removed = vec![v];
    if let [u, w] = nbrs[..] {
        if !reduced.has_edge(u, w) {
            reduced.add_edge(u, w).unwrap();
            step.added_edges.push((u, w));
        }
    }
    Ok((reduced, step))
}

/// Deletes a degree-3 vertex `v` on a triangle `u v w` and joins its third
/// neighbor `a` to `w` unless already adjacent.
///
/// `u < w` is the first adjacent pair among the sorted neighbors of `v`.
pub fn reduce_triangle(g: &Graph, v: VertexId) -> Result<(Graph, ReductionStep), ProofAssertion> {
    let fail = |m: String| ProofAssertion::new(StepKind::TriangleC, m);
    let nbrs = g.try_neighbors(v).map_err(|e| fail(e.to_string()))?;
    if nbrs.len() != 3 {
        return Err(fail(format!("vertex {v} has degree {}, expected 3", nbrs.len())));
    }
    let pair = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(i, j)| g.has_edge(nbrs[i], nbrs[j]))
        .ok_or_else(|| fail(format!("vertex {v} is not on a triangle")))?;
    let w = nbrs[pair.1];
    let a = nbrs[3 - pair.0 - pair.1];
    let mut reduced = g.clone();
    reduced.remove_vertex(v).unwrap();
    let mut step = ReductionStep::new(StepKind::TriangleC, g.vertex_count());
    step.removed = vec![v];
    if !reduced.has_edge(a, w) {
        reduced.add_edge(a, w).unwrap();
        step.added_edges.push((a.min(w), a.max(w)));
    }
    Ok((reduced, step))
}

/// Colors the removed vertex with its least admissible color.
///
/// Asserts that at most 3 (degree at most one) or 6 (degree two) vertices
/// lie within distance 2 of it in `g`.
pub fn extend_low_degree(
    c: &Coloring,
    step: &mut ReductionStep,
    g: &Graph,
) -> Result<Coloring, ProofAssertion> {
    let bound = match step.kind {
        StepKind::LowDegreeA => 3,
        StepKind::LowDegreeB => 6,
        other => {
            return Err(ProofAssertion::new(
                other,
                "extend_low_degree applied to a different step",
            ))
        }
    };
    extend_single(c, step, g, bound)
}

/// Colors the removed triangle vertex; asserts at most 7 distance-2 neighbors.
pub fn extend_triangle(
    c: &Coloring,
    step: &mut ReductionStep,
    g: &Graph,
) -> Result<Coloring, ProofAssertion> {
    if step.kind != StepKind::TriangleC {
        return Err(ProofAssertion::new(
            step.kind,
            "extend_triangle applied to a different step",
        ));
    }
    extend_single(c, step, g, 7)
}

fn extend_single(
    c: &Coloring,
    step: &mut ReductionStep,
    g: &Graph,
    bound: usize,
) -> Result<Coloring, ProofAssertion> {
    let kind = step.kind;
    let &[v] = step.removed.as_slice() else {
        return Err(ProofAssertion::new(kind, "step must remove exactly one vertex"));
    };
    let ring = g
        .distance2_neighbors(v)
        .map_err(|e| ProofAssertion::new(kind, e.to_string()))?;
    let colored_neighbors = ring.iter().filter(|&&w| c.get(w).is_some()).count();
    if colored_neighbors != ring.len() {
        return Err(ProofAssertion::new(
            kind,
            format!("reduced coloring misses a neighbor of {v}"),
        ));
    }
    if colored_neighbors > bound {
        return Err(ProofAssertion::new(
            kind,
            format!("vertex {v} has {colored_neighbors} distance-2 neighbors, bound is {bound}"),
        ));
    }
    let free = c.admissible(g, v);
    let margin = Margin {
        role: "v".to_string(),
        vertex: v,
        colored_neighbors,
        available: free.len(),
        phase_start: None,
    };
    step.margins.push(margin);
    let Some(&color) = free.first() else {
        return Err(ProofAssertion::new(kind, format!("no free color for {v}")).with_margins(&step.margins));
    };
    let mut out = c.clone();
    out.set(v, color);
    step.assigned.push((v, color));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::embed::is_planar;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn leaf_removal() {
        let (g, step) = reduce_low_degree(&path3(), 0).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
        assert_eq!(step.kind, StepKind::LowDegreeA);
        assert!(step.added_edges.is_empty());
    }

    #[test]
    fn degree_two_removal_joins_neighbors() {
        let (g, step) = reduce_low_degree(&path3(), 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 2)]);
        assert_eq!(step.kind, StepKind::LowDegreeB);
        assert_eq!(step.added_edges, vec![(0, 2)]);
    }

    #[test]
    fn degree_two_removal_in_c4_gives_triangle() {
        // C4 = (v=0, u=1, z=2, w=3).
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let (g, step) = reduce_low_degree(&c4, 0).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(step.added_edges, vec![(1, 3)]);
        assert!(g.validate_subcubic().is_ok());
        assert!(is_planar(&g));
    }

    #[test]
    fn rejects_degree_three() {
        let k4 = crate::corpus::build(&crate::corpus::GeneratorSpec::K4).unwrap();
        assert!(reduce_low_degree(&k4, 0).is_err());
    }

    #[test]
    fn extend_path_center() {
        let (_, mut step) = reduce_low_degree(&path3(), 1).unwrap();
        let c = Coloring::from_map(8, BTreeMap::from([(0, 0), (2, 1)]));
        let out = extend_low_degree(&c, &mut step, &path3()).unwrap();
        assert_eq!(out.get(1), Some(2));
        assert_eq!(step.margins[0].colored_neighbors, 2);
    }

    #[test]
    fn extend_leaf_uses_small_color() {
        // Star center 0 with leaves 1..3: remove leaf 3.
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (_, mut step) = reduce_low_degree(&star, 3).unwrap();
        let c = Coloring::from_map(8, BTreeMap::from([(0, 0), (1, 1), (2, 2)]));
        let out = extend_low_degree(&c, &mut step, &star).unwrap();
        assert!(out.get(3).unwrap() <= 3);
        assert_eq!(step.margins[0].colored_neighbors, 3);
    }

    #[test]
    fn k4_triangle_reduction_adds_nothing() {
        let k4 = crate::corpus::build(&crate::corpus::GeneratorSpec::K4).unwrap();
        let (g, mut step) = reduce_triangle(&k4, 0).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(step.added_edges.is_empty());
        let c = Coloring::from_map(8, BTreeMap::from([(1, 0), (2, 1), (3, 2)]));
        let out = extend_triangle(&c, &mut step, &k4).unwrap();
        assert_eq!(out.get(0), Some(3));
    }

    #[test]
    fn prism_triangle_reduction_adds_cross_edge() {
        let prism = crate::corpus::build(&crate::corpus::GeneratorSpec::Prism(3)).unwrap();
        // Vertex 0: neighbors 1, 2 (triangle) and 3 (spoke); a = 3, w = 2.
        let (g, step) = reduce_triangle(&prism, 0).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(step.added_edges, vec![(2, 3)]);
        assert!(g.validate_subcubic().is_ok());
        assert!(is_planar(&g));
    }

    #[test]
    fn triangle_reduction_needs_a_triangle() {
        let cube = crate::corpus::build(&crate::corpus::GeneratorSpec::Cube).unwrap();
        assert!(reduce_triangle(&cube, 0).is_err());
    }
}
