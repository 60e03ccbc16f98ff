//! Deterministic fixtures and seeded random generators.
//!
//! Random graphs use SplitMix64 so that a `(kind, n, seed)` triple names the
//! same graph in any implementation:
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15            (wrapping)
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! output z ^ (z >> 31)
//! ```
//!
//! A draw below `m` is `output % m`. The state starts at the seed.
//!
//! `random-cubic-planar:n=N,seed=S` grows a triangulation on `k = (N + 4) / 2`
//! vertices from K4 by `k - 4` face subdivisions (face index drawn below the
//! current face count; the chosen face `(a, b, c)` becomes `(a, b, x)`,
//! `(b, c, x)`, `(c, a, x)` in place and appended), then performs `k` flip
//! attempts (edge index drawn below the sorted edge count) and returns the
//! planar dual, whose vertex `i` is face `i`.
//!
//! `random-subcubic-planar:n=N,seed=S` starts from `N` isolated vertices and
//! makes `2N` attempts to add an edge `(u, v)` with `u`, `v` drawn below `N`
//! (in that order). An attempt is kept if it creates no loop, no duplicate
//! edge, no vertex of degree four, and keeps the graph planar.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::embed::is_planar;
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown generator kind `{0}`")]
    UnknownKind(String),
    #[error("malformed parameter `{0}`")]
    BadParameter(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),
    #[error("invalid size {n} for {kind}: {reason}")]
    InvalidSize {
        kind: &'static str,
        n: u32,
        reason: &'static str,
    },
}

/// Names a fixture or a seeded random graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    Wegner,
    K4,
    K5,
    Cube,
    Prism(u32),
    Dodecahedron,
    Petersen,
    TruncatedTetrahedron,
    /// A 4-cycle with two cube-minus-an-edge gadgets on opposite sides.
    SquareSandwich,
    /// A 5-cycle with dodecahedron gadgets on opposite sides.
    PentagonSandwich,
    Cycle(u32),
    Path(u32),
    RandomCubicPlanar { n: u32, seed: u64 },
    RandomSubcubicPlanar { n: u32, seed: u64 },
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Wegner => f.write_str("wegner"),
            GeneratorSpec::K4 => f.write_str("k4"),
            GeneratorSpec::K5 => f.write_str("k5"),
            GeneratorSpec::Cube => f.write_str("cube"),
            GeneratorSpec::Prism(n) => write!(f, "prism:n={n}"),
            GeneratorSpec::Dodecahedron => f.write_str("dodecahedron"),
            GeneratorSpec::Petersen => f.write_str("petersen"),
            GeneratorSpec::TruncatedTetrahedron => f.write_str("truncated-tetrahedron"),
            GeneratorSpec::SquareSandwich => f.write_str("square-sandwich"),
            GeneratorSpec::PentagonSandwich => f.write_str("pentagon-sandwich"),
            GeneratorSpec::Cycle(n) => write!(f, "cycle:n={n}"),
            GeneratorSpec::Path(n) => write!(f, "path:n={n}"),
            GeneratorSpec::RandomCubicPlanar { n, seed } => {
                write!(f, "random-cubic-planar:n={n},seed={seed}")
            }
            GeneratorSpec::RandomSubcubicPlanar { n, seed } => {
                write!(f, "random-subcubic-planar:n={n},seed={seed}")
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = CorpusError;

    /// Parses `kind` or `kind:key=value,key=value`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k.trim(), p),
            None => (s.trim(), ""),
        };
        let mut map: BTreeMap<&str, &str> = BTreeMap::new();
        for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| CorpusError::BadParameter(part.to_string()))?;
            map.insert(k.trim(), v.trim());
        }
        let int = |key: &'static str| -> Result<u64, CorpusError> {
            let raw = map.get(key).ok_or(CorpusError::MissingParameter(key))?;
            raw.parse()
                .map_err(|_| CorpusError::BadParameter(format!("{key}={raw}")))
        };
        let n = || -> Result<u32, CorpusError> {
            let v = int("n")?;
            u32::try_from(v).map_err(|_| CorpusError::BadParameter(format!("n={v}")))
        };
        let spec = match kind {
            "wegner" => GeneratorSpec::Wegner,
            "k4" => GeneratorSpec::K4,
            "k5" => GeneratorSpec::K5,
            "cube" => GeneratorSpec::Cube,
            "prism" => GeneratorSpec::Prism(n()?),
            "dodecahedron" => GeneratorSpec::Dodecahedron,
            "petersen" => GeneratorSpec::Petersen,
            "truncated-tetrahedron" => GeneratorSpec::TruncatedTetrahedron,
            "square-sandwich" => GeneratorSpec::SquareSandwich,
            "pentagon-sandwich" => GeneratorSpec::PentagonSandwich,
            "cycle" => GeneratorSpec::Cycle(n()?),
            "path" => GeneratorSpec::Path(n()?),
            "random-cubic-planar" => GeneratorSpec::RandomCubicPlanar {
                n: n()?,
                seed: int("seed")?,
            },
            "random-subcubic-planar" => GeneratorSpec::RandomSubcubicPlanar {
                n: n()?,
                seed: int("seed")?,
            },
            other => return Err(CorpusError::UnknownKind(other.to_string())),
        };
        Ok(spec)
    }
}

/// Builds the graph named by `spec`.
pub fn build(spec: &GeneratorSpec) -> Result<Graph, CorpusError> {
    let g = match *spec {
        GeneratorSpec::Wegner => wegner_graph(),
        GeneratorSpec::K4 => complete(4),
        GeneratorSpec::K5 => complete(5),
        GeneratorSpec::Cube => cube(),
        GeneratorSpec::Prism(n) => {
            if n < 3 {
                return Err(CorpusError::InvalidSize {
                    kind: "prism",
                    n,
                    reason: "needs n >= 3",
                });
            }
            prism(n)
        }
        GeneratorSpec::Dodecahedron => from_list(20, DODECAHEDRON),
        GeneratorSpec::Petersen => from_list(10, PETERSEN),
        GeneratorSpec::TruncatedTetrahedron => from_list(12, TRUNCATED_TETRAHEDRON),
        GeneratorSpec::SquareSandwich => square_sandwich(),
        GeneratorSpec::PentagonSandwich => pentagon_sandwich(),
        GeneratorSpec::Cycle(n) => {
            if n < 3 {
                return Err(CorpusError::InvalidSize {
                    kind: "cycle",
                    n,
                    reason: "needs n >= 3",
                });
            }
            cycle(n)
        }
        GeneratorSpec::Path(n) => {
            if n < 1 {
                return Err(CorpusError::InvalidSize {
                    kind: "path",
                    n,
                    reason: "needs n >= 1",
                });
            }
            path(n)
        }
        GeneratorSpec::RandomCubicPlanar { n, seed } => {
            if n < 4 || n % 2 != 0 {
                return Err(CorpusError::InvalidSize {
                    kind: "random-cubic-planar",
                    n,
                    reason: "needs an even n >= 4",
                });
            }
            random_cubic_planar(n, seed)
        }
        GeneratorSpec::RandomSubcubicPlanar { n, seed } => {
            if n < 4 {
                return Err(CorpusError::InvalidSize {
                    kind: "random-subcubic-planar",
                    n,
                    reason: "needs n >= 4",
                });
            }
            random_subcubic_planar(n, seed)
        }
    };
    Ok(g)
}

/// The planar fixtures, by name.
pub fn planar_fixtures() -> Vec<(String, Graph)> {
    let mut specs = vec![
        GeneratorSpec::Wegner,
        GeneratorSpec::K4,
        GeneratorSpec::Cube,
        GeneratorSpec::Dodecahedron,
        GeneratorSpec::TruncatedTetrahedron,
        GeneratorSpec::SquareSandwich,
        GeneratorSpec::PentagonSandwich,
        GeneratorSpec::Cycle(5),
        GeneratorSpec::Path(3),
    ];
    specs.extend((3..=9).map(GeneratorSpec::Prism));
    let mut out: Vec<(String, Graph)> = specs
        .iter()
        .map(|s| (s.to_string(), build(s).unwrap()))
        .collect();
    let c5 = cycle(5);
    out.push(("twin-c5".to_string(), disjoint_union(&c5, &c5)));
    out
}

/// Wegner's 7-vertex graph: center 0 joined through midpoints 1, 2, 3 to the
/// corners 4, 5, 6 of a triangle.
pub fn wegner_graph() -> Graph {
    from_list(
        7,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 5), (5, 6), (4, 6)],
    )
}

/// Copy of `b` shifted past the largest id of `a`, joined to `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.vertices().max().map_or(0, |m| m + 1);
    let mut g = a.clone();
    for v in b.vertices() {
        g.add_vertex(v + shift).unwrap();
    }
    for (u, v) in b.edges() {
        g.add_edge(u + shift, v + shift).unwrap();
    }
    g
}

fn from_list(n: u32, edges: &[Edge]) -> Graph {
    Graph::from_edges(n, edges).expect("fixture edge list is simple")
}

fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    from_list(n, &edges)
}

fn cycle(n: u32) -> Graph {
    let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    from_list(n, &edges)
}

fn path(n: u32) -> Graph {
    let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    from_list(n, &edges)
}

fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0u32..8 {
        for bit in [1, 2, 4] {
            if v < v ^ bit {
                edges.push((v, v ^ bit));
            }
        }
    }
    from_list(8, &edges)
}

/// Two n-cycles `0..n` and `n..2n` joined by the spokes `i -- n + i`.
fn prism(n: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    from_list(2 * n, &edges)
}

#[rustfmt::skip]
const DODECAHEDRON: &[Edge] = &[
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (0, 9),
    (0, 10), (1, 11), (2, 12), (3, 13), (4, 14), (5, 15), (6, 16), (7, 17), (8, 18), (9, 19),
    (10, 12), (11, 13), (12, 14), (13, 15), (14, 16), (15, 17), (16, 18), (17, 19), (10, 18), (11, 19),
];

#[rustfmt::skip]
const PETERSEN: &[Edge] = &[
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
];

/// K4 with every vertex replaced by a triangle; vertex `3a + i` is the corner
/// of triangle `a` pointing at the `i`-th other K4 vertex.
#[rustfmt::skip]
const TRUNCATED_TETRAHEDRON: &[Edge] = &[
    (0, 1), (1, 2), (0, 2),
    (3, 4), (4, 5), (3, 5),
    (6, 7), (7, 8), (6, 8),
    (9, 10), (10, 11), (9, 11),
    (0, 3), (1, 6), (2, 9), (4, 7), (5, 10), (8, 11),
];

/// Cube with edge `(0, 1)` removed, shifted by `offset`; returns the edges and
/// the two degree-2 ends.
fn cube_minus_edge(offset: u32) -> (Vec<Edge>, VertexId, VertexId) {
    let edges = cube()
        .edges()
        .into_iter()
        .filter(|&e| e != (0, 1))
        .map(|(u, v)| (u + offset, v + offset))
        .collect();
    (edges, offset, offset + 1)
}

fn square_sandwich() -> Graph {
    let mut edges: Vec<Edge> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
    let (inner, a, b) = cube_minus_edge(4);
    let (outer, c, d) = cube_minus_edge(12);
    edges.extend(inner);
    edges.extend(outer);
    edges.extend([(0, a), (2, b), (1, c), (3, d)]);
    from_list(20, &edges)
}

fn pentagon_sandwich() -> Graph {
    let mut edges: Vec<Edge> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    // Dodecahedron minus the edge (0, 1), on ids 5..25.
    edges.extend(
        DODECAHEDRON
            .iter()
            .filter(|&&e| e != (0, 1))
            .map(|&(u, v)| (u + 5, v + 5)),
    );
    edges.extend([(0, 5), (2, 6)]);
    // Dodecahedron minus vertex 0, on ids 25..44 (old id i >= 1 maps to 24 + i).
    edges.extend(
        DODECAHEDRON
            .iter()
            .filter(|&&(u, v)| u != 0 && v != 0)
            .map(|&(u, v)| (u + 24, v + 24)),
    );
    // The former neighbors of vertex 0 are 1, 9 and 10, in that cyclic order.
    edges.extend([(1, 25), (3, 33), (4, 34)]);
    from_list(44, &edges)
}

pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// A draw in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

type Triangle = [VertexId; 3];

fn random_cubic_planar(n: u32, seed: u64) -> Graph {
    let k = (n + 4) / 2;
    let mut rng = SplitMix64::new(seed);
    let mut faces: Vec<Triangle> = vec![[0, 1, 2], [0, 3, 1], [1, 3, 2], [2, 3, 0]];
    for x in 4..k {
        let i = rng.below(faces.len() as u64) as usize;
        let [a, b, c] = faces[i];
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
    }
    for _ in 0..k {
        flip_random_edge(&mut faces, &mut rng);
    }
    assert_eq!(faces.len() as u32, 2 * k - 4, "triangulation face count");
    let dual = dual_of(&faces);
    debug_assert!(dual.is_cubic());
    dual
}

/// Map from each undirected edge to the faces on either side of it.
fn edge_faces(faces: &[Triangle]) -> BTreeMap<Edge, Vec<usize>> {
    let mut map: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for j in 0..3 {
            let (u, v) = (f[j], f[(j + 1) % 3]);
            map.entry((u.min(v), u.max(v))).or_default().push(i);
        }
    }
    map
}

fn flip_random_edge(faces: &mut [Triangle], rng: &mut SplitMix64) {
    let map = edge_faces(faces);
    let edges: Vec<(&Edge, &Vec<usize>)> = map.iter().collect();
    let (&(a, b), sides) = edges[rng.below(edges.len() as u64) as usize];
    let mut degree: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &(u, v) in map.keys() {
        *degree.entry(u).or_default() += 1;
        *degree.entry(v).or_default() += 1;
    }
    if degree[&a] <= 3 || degree[&b] <= 3 {
        return;
    }
    let (f1, f2) = (sides[0], sides[1]);
    let apex = |f: &Triangle| *f.iter().find(|&&x| x != a && x != b).unwrap();
    let (c, d) = (apex(&faces[f1]), apex(&faces[f2]));
    if c == d || map.contains_key(&(c.min(d), c.max(d))) {
        return;
    }
    // Orient so that f1 traverses a -> b.
    let forward = |f: &Triangle| (0..3).any(|j| f[j] == a && f[(j + 1) % 3] == b);
    let (f1, f2, c, d) = if forward(&faces[f1]) {
        (f1, f2, c, d)
    } else {
        (f2, f1, d, c)
    };
    // f1 = (a, b, c), f2 = (b, a, d); the quadrilateral is a, d, b, c.
    faces[f1] = [a, d, c];
    faces[f2] = [d, b, c];
}

fn dual_of(faces: &[Triangle]) -> Graph {
    let mut g = Graph::new();
    for i in 0..faces.len() {
        g.add_vertex(i as VertexId).unwrap();
    }
    let pairs: BTreeSet<Edge> = edge_faces(faces)
        .values()
        .map(|s| (s[0] as VertexId, s[1] as VertexId))
        .collect();
    for (u, v) in pairs {
        g.add_edge(u, v).expect("dual of a simple triangulation is simple");
    }
    g
}

/// A cubic planar graph with a chordless separating cycle, for exercising
/// splits. Returns the graph and the cycle.
///
/// The cycle `x1 .. xk` (k = 4 or 5) is vertices `0..k`. A random cubic
/// planar graph minus one edge is attached to `x1` and `x3`; on the other
/// side a second one, minus an edge (k = 4) or a vertex (k = 5), is attached
/// to the remaining cycle vertices. The attachments interleave around the
/// cycle, so every planar embedding puts the two gadgets on opposite sides.
pub fn random_split_instance(seed: u64) -> (Graph, Vec<VertexId>) {
    let mut rng = SplitMix64::new(seed);
    let k = 4 + rng.below(2) as VertexId;
    let mut g = cycle(k);
    let cycle_vertices: Vec<VertexId> = (0..k).collect();

    let attach = |g: &mut Graph, rng: &mut SplitMix64, targets: &[VertexId]| {
        let n = 4 + 2 * rng.below(8) as u32;
        let gadget_seed = rng.next_u64();
        let mut h = random_cubic_planar(n, gadget_seed);
        let ports: Vec<VertexId> = if targets.len() == 2 {
            let edges = h.edges();
            let (a, b) = edges[rng.below(edges.len() as u64) as usize];
            h.remove_edge(a, b).unwrap();
            vec![a, b]
        } else {
            let v = rng.below(n as u64) as VertexId;
            let around = crate::embed::embed(&h).expect("generator output is planar");
            let ports = around.rotation(v).to_vec();
            h.remove_vertex(v).unwrap();
            ports
        };
        let offset = g.vertex_count() as VertexId;
        let base = g.clone();
        for orientation in [ports.clone(), ports.iter().rev().copied().collect()] {
            let mut trial = base.clone();
            let relabel: BTreeMap<VertexId, VertexId> = h
                .vertices()
                .enumerate()
                .map(|(i, v)| (v, offset + i as VertexId))
                .collect();
            for &v in relabel.values() {
                trial.add_vertex(v).unwrap();
            }
            for (u, v) in h.edges() {
                trial.add_edge(relabel[&u], relabel[&v]).unwrap();
            }
            for (&p, &x) in orientation.iter().zip(targets) {
                trial.add_edge(relabel[&p], x).unwrap();
            }
            if is_planar(&trial) {
                *g = trial;
                return;
            }
        }
        panic!("no planar attachment for seed {seed}");
    };
    attach(&mut g, &mut rng, &[0, 2]);
    let outside: Vec<VertexId> = if k == 4 { vec![1, 3] } else { vec![1, 3, 4] };
    attach(&mut g, &mut rng, &outside);
    debug_assert!(g.is_cubic());
    (g, cycle_vertices)
}

fn random_subcubic_planar(n: u32, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v).unwrap();
    }
    for _ in 0..2 * n {
        let u = rng.below(n as u64) as VertexId;
        let v = rng.below(n as u64) as VertexId;
        if u == v || g.has_edge(u, v) || g.neighbors(u).len() >= 3 || g.neighbors(v).len() >= 3 {
            continue;
        }
        let joins_components = !g.bfs_distances(u).contains_key(&v);
        g.add_edge(u, v).unwrap();
        // Joining two planar components cannot create a crossing.
        if !joins_components && !is_planar(&g) {
            g.remove_edge(u, v).unwrap();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{embed, euler_check, short_face_exists};

    #[test]
    fn wegner_degrees() {
        let g = wegner_graph();
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v).unwrap()).collect();
        assert_eq!(degrees, vec![3, 2, 2, 2, 3, 3, 3]);
        assert!(embed(&g).is_ok());
        assert!(g.validate_subcubic().is_ok());
    }

    #[test]
    fn fixture_counts() {
        let d = build(&GeneratorSpec::Dodecahedron).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (20, 30));
        assert!(d.is_cubic());
        assert_eq!(d.girth(), Some(5));
        let p = build(&GeneratorSpec::Petersen).unwrap();
        assert!(p.is_cubic());
        assert_eq!(p.girth(), Some(5));
        let t = build(&GeneratorSpec::TruncatedTetrahedron).unwrap();
        assert!(t.is_cubic());
        assert_eq!(t.vertex_count(), 12);
    }

    #[test]
    fn prism5_has_girth_four() {
        let g = build(&GeneratorSpec::Prism(5)).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.shortest_cycle().unwrap().len(), 4);
    }

    #[test]
    fn petersen_is_not_planar() {
        assert!(embed(&build(&GeneratorSpec::Petersen).unwrap()).is_err());
    }

    #[test]
    fn sandwiches_are_cubic_planar_with_expected_girth() {
        let s = build(&GeneratorSpec::SquareSandwich).unwrap();
        assert!(s.is_cubic());
        assert_eq!(s.girth(), Some(4));
        assert!(embed(&s).is_ok());
        let p = build(&GeneratorSpec::PentagonSandwich).unwrap();
        assert!(p.is_cubic());
        assert_eq!(p.vertex_count(), 44);
        assert_eq!(p.girth(), Some(5));
        assert!(embed(&p).is_ok());
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "wegner",
            "prism:n=5",
            "random-cubic-planar:n=20,seed=7",
            "random-subcubic-planar:n=12,seed=0",
        ] {
            assert_eq!(s.parse::<GeneratorSpec>().unwrap().to_string(), s);
        }
        assert!("blob".parse::<GeneratorSpec>().is_err());
        assert!("prism".parse::<GeneratorSpec>().is_err());
        assert!("prism:n=x".parse::<GeneratorSpec>().is_err());
        assert!(build(&"random-cubic-planar:n=7,seed=1".parse().unwrap()).is_err());
    }

    #[test]
    fn random_cubic_planar_is_deterministic_and_valid() {
        let spec = GeneratorSpec::RandomCubicPlanar { n: 20, seed: 1 };
        let a = build(&spec).unwrap();
        assert_eq!(a.edges(), build(&spec).unwrap().edges());
        for seed in 0..50 {
            for n in [4u32, 6, 10, 20, 36] {
                let g = build(&GeneratorSpec::RandomCubicPlanar { n, seed }).unwrap();
                assert_eq!(g.vertex_count() as u32, n);
                assert!(g.is_cubic());
                assert!(g.is_connected());
                let e = embed(&g).unwrap();
                euler_check(&e).unwrap();
                assert!(short_face_exists(&e).unwrap().len() <= 5);
            }
        }
    }

    #[test]
    fn random_subcubic_planar_is_valid() {
        for seed in 0..30 {
            let g = build(&GeneratorSpec::RandomSubcubicPlanar { n: 30, seed }).unwrap();
            assert!(g.validate_subcubic().is_ok());
            assert!(embed(&g).is_ok());
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0, as published with the algorithm.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }
}
