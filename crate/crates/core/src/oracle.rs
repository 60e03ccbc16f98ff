//! Ground truth for distance-2 colorings: validation and exact search.
//!
//! Exact search colors the square graph by saturation-ordered backtracking.
//! The next vertex is the uncolored one seeing the most distinct colors,
//! ties broken by square-degree and then by id. A vertex may only open the
//! next unused color, which removes palette permutations from the search.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, VertexId};

/// Default cap on the number of vertices accepted by exact search.
pub const DEFAULT_SIZE_BOUND: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    FirstOrder,
    SecondOrder,
}

/// Two vertices within distance 2 that share a color.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub relation: Relation,
    /// Common neighbor for second-order violations (the smallest one).
    pub witness: Option<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Outcome of [`exact_chromatic2`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chromatic {
    Exact { colors: usize, coloring: Coloring },
    Exceeds(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("coloring is partial: {} uncolored vertices (first: {})", .0.len(), .0[0])]
    Partial(Vec<VertexId>),
    #[error("graph has {size} vertices, exact search is capped at {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("no distance-2 coloring with {palette} colors exists for this graph")]
    TheoremViolation { palette: usize },
}

/// Checks that `c` is a proper coloring of the square of `g`.
///
/// Every violating pair is reported once, with `u < v`.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<Verdict, OracleError> {
    let missing: Vec<VertexId> = g.vertices().filter(|&v| c.get(v).is_none()).collect();
    if !missing.is_empty() {
        return Err(OracleError::Partial(missing));
    }
    let mut violations = Vec::new();
    for u in g.vertices() {
        for v in g.distance2_neighbors(u).unwrap() {
            if u >= v || c.get(u) != c.get(v) {
                continue;
            }
            let violation = if g.has_edge(u, v) {
                Violation {
                    u,
                    v,
                    relation: Relation::FirstOrder,
                    witness: None,
                }
            } else {
                let witness = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .find(|&w| g.has_edge(w, v));
                Violation {
                    u,
                    v,
                    relation: Relation::SecondOrder,
                    witness,
                }
            };
            violations.push(violation);
        }
    }
    Ok(if violations.is_empty() {
        Verdict::Valid
    } else {
        Verdict::Invalid(violations)
    })
}

/// Exact distance-2 chromatic number, searching palettes up to `max_palette`.
pub fn exact_chromatic2(g: &Graph, max_palette: usize) -> Result<Chromatic, OracleError> {
    exact_chromatic2_bounded(g, max_palette, DEFAULT_SIZE_BOUND)
}

/// As [`exact_chromatic2`] with an explicit vertex-count cap.
pub fn exact_chromatic2_bounded(
    g: &Graph,
    max_palette: usize,
    size_bound: usize,
) -> Result<Chromatic, OracleError> {
    if g.vertex_count() > size_bound {
        return Err(OracleError::SizeBound {
            size: g.vertex_count(),
            bound: size_bound,
        });
    }
    if g.is_empty() {
        return Ok(Chromatic::Exact {
            colors: 0,
            coloring: Coloring::new(max_palette),
        });
    }
    // The closed neighborhood of any vertex is a clique in the square.
    let lower = (g.max_degree() + 1).min(g.vertex_count());
    let square = SquareSearch::new(g);
    for k in lower..=max_palette {
        if let Some(colors) = square.solve(k) {
            return Ok(Chromatic::Exact {
                colors: k,
                coloring: square.to_coloring(&colors, max_palette),
            });
        }
    }
    Ok(Chromatic::Exceeds(max_palette))
}

/// Any distance-2 coloring with at most `palette` colors, without a size cap.
pub fn find_coloring(g: &Graph, palette: usize) -> Option<Coloring> {
    if g.is_empty() {
        return Some(Coloring::new(palette));
    }
    let square = SquareSearch::new(g);
    square
        .solve(palette)
        .map(|colors| square.to_coloring(&colors, palette))
}

/// Minimum distance-2 coloring for small graphs, reported in a palette of `palette` colors.
pub fn base_case_color(g: &Graph, palette: usize) -> Result<Coloring, OracleError> {
    match exact_chromatic2(g, palette)? {
        Chromatic::Exact { coloring, .. } => Ok(coloring),
        Chromatic::Exceeds(palette) => Err(OracleError::TheoremViolation { palette }),
    }
}

struct SquareSearch {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl SquareSearch {
    fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = ids
            .iter()
            .map(|&v| {
                g.distance2_neighbors(v)
                    .unwrap()
                    .iter()
                    .map(|w| index[w])
                    .collect()
            })
            .collect();
        Self { ids, adj }
    }

    fn to_coloring(&self, colors: &[Color], palette: usize) -> Coloring {
        Coloring::from_map(
            palette,
            self.ids.iter().copied().zip(colors.iter().copied()).collect(),
        )
    }

    fn solve(&self, k: usize) -> Option<Vec<Color>> {
        let n = self.ids.len();
        let mut colors = vec![usize::MAX; n];
        if self.backtrack(k, 0, 0, &mut colors) {
            Some(colors)
        } else {
            None
        }
    }

    fn saturation(&self, v: usize, colors: &[Color]) -> usize {
        let mut seen = 0u64;
        for &w in &self.adj[v] {
            if colors[w] != usize::MAX {
                seen |= 1 << colors[w];
            }
        }
        seen.count_ones() as usize
    }

    fn backtrack(&self, k: usize, colored: usize, used: usize, colors: &mut [Color]) -> bool {
        let n = colors.len();
        if colored == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    self.saturation(v, colors),
                    self.adj[v].len(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if self.adj[v].iter().any(|&w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if self.backtrack(k, colored + 1, used.max(c + 1), colors) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }
}
