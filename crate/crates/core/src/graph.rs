//! Simple undirected graphs with the distance-2 queries the colorer needs.
//!
//! Vertex ids are opaque `u32` values. Every iteration order exposed here is
//! ascending id order, so all derived results (cycles, components, squares)
//! are deterministic functions of the input.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

pub type VertexId = u32;

/// A set of vertex ids, iterated in ascending order.
pub type VertexSet = BTreeSet<VertexId>;

/// An undirected edge `(u, v)`, always stored with `u < v`.
pub type Edge = (VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} not present")]
    MissingEdge(VertexId, VertexId),
}

/// Result of [`Graph::validate_subcubic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcubic {
    Ok,
    Violation { vertex: VertexId, degree: usize },
}

impl Subcubic {
    pub fn is_ok(&self) -> bool {
        matches!(self, Subcubic::Ok)
    }
}

/// Simple undirected graph. Neighbor lists are kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<VertexId, Vec<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: u32, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(v)?;
        }
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if self.adj.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        self.adj.insert(v, Vec::new());
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.check(u)?;
        self.check(v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        insert_sorted(self.adj.get_mut(&u).unwrap(), v);
        insert_sorted(self.adj.get_mut(&v).unwrap(), u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        self.adj.get_mut(&u).unwrap().retain(|&x| x != v);
        self.adj.get_mut(&v).unwrap().retain(|&x| x != u);
        Ok(())
    }

    /// Removes `v` and all incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        let nbrs = self.adj.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        for w in nbrs {
            self.adj.get_mut(&w).unwrap().retain(|&x| x != v);
        }
        Ok(())
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if self.adj.contains_key(&v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj
            .get(&u)
            .is_some_and(|n| n.binary_search(&v).is_ok())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Sorted neighbor list. Panics on unknown vertices; use [`Graph::try_neighbors`]
    /// when the id is untrusted.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[&v]
    }

    pub fn try_neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.adj
            .get(&v)
            .map(Vec::as_slice)
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&u, nbrs) in &self.adj {
            out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.try_neighbors(v).map(<[_]>::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(Vec::len).max().unwrap_or(0)
    }

    /// `Ok` iff every degree is at most three; otherwise the smallest offending vertex.
    pub fn validate_subcubic(&self) -> Subcubic {
        match self.adj.iter().find(|(_, n)| n.len() > 3) {
            None => Subcubic::Ok,
            Some((&vertex, n)) => Subcubic::Violation {
                vertex,
                degree: n.len(),
            },
        }
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.values().all(|n| n.len() == 3)
    }

    /// Vertices at distance one or two from `v`, excluding `v`.
    pub fn distance2_neighbors(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        let mut out = VertexSet::new();
        for &w in self.try_neighbors(v)? {
            out.insert(w);
            out.extend(self.adj[&w].iter().copied().filter(|&x| x != v));
        }
        Ok(out)
    }

    /// The square graph: same vertices, `uv` an edge iff `u` and `v` are within distance 2.
    pub fn square(&self) -> Graph {
        let mut adj = BTreeMap::new();
        for v in self.vertices() {
            let n: Vec<VertexId> = self.distance2_neighbors(v).unwrap().into_iter().collect();
            adj.insert(v, n);
        }
        Graph { adj }
    }

    /// Subgraph induced by `keep` (ids outside the graph are ignored).
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, n)| (v, n.iter().copied().filter(|w| keep.contains(w)).collect()))
            .collect();
        Graph { adj }
    }

    /// BFS distances from `src` to every reachable vertex.
    pub fn bfs_distances(&self, src: VertexId) -> BTreeMap<VertexId, usize> {
        let mut dist = BTreeMap::new();
        if !self.contains(src) {
            return dist;
        }
        dist.insert(src, 0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[&u];
            for &w in &self.adj[&u] {
                if let Entry::Vacant(e) = dist.entry(w) {
                    e.insert(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp: VertexSet = self.bfs_distances(v).into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// Connected components as induced subgraphs, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .iter()
            .map(|set| self.induced(set))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in self.vertices() {
            // BFS with parent tracking; a non-tree edge closes a cycle through s
            // of length at most dist(u) + dist(w) + 1, and the minimum over all s
            // is exact.
            let mut dist: BTreeMap<VertexId, usize> = BTreeMap::from([(s, 0)]);
            let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[&u] {
                    match dist.get(&w) {
                        None => {
                            dist.insert(w, dist[&u] + 1);
                            parent.insert(w, u);
                            queue.push_back(w);
                        }
                        Some(&dw) if parent.get(&u) != Some(&w) => {
                            let len = dist[&u] + dw + 1;
                            best = Some(best.map_or(len, |b| b.min(len)));
                        }
                        _ => {}
                    }
                }
            }
        }
        best
    }

    /// A shortest cycle, or `None` if the graph is acyclic.
    ///
    /// Among all shortest cycles the one with the lexicographically smallest
    /// canonical vertex sequence is returned: it starts at its smallest vertex
    /// and its second vertex is smaller than its last.
    pub fn shortest_cycle(&self) -> Option<Vec<VertexId>> {
        let len = self.girth()?;
        for s in self.vertices() {
            if let Some(c) = self.least_cycle_through(s, len) {
                return Some(c);
            }
        }
        unreachable!("girth {len} reported but no cycle found")
    }

    /// Lexicographically least cycle of exactly `len` vertices whose minimum is `s`.
    fn least_cycle_through(&self, s: VertexId, len: usize) -> Option<Vec<VertexId>> {
        let dist = self.bfs_distances(s);
        let mut path = vec![s];
        let mut on_path = VertexSet::from([s]);
        self.least_cycle_dfs(s, len, &dist, &mut path, &mut on_path)
            .then_some(path)
    }

    fn least_cycle_dfs(
        &self,
        s: VertexId,
        len: usize,
        dist: &BTreeMap<VertexId, usize>,
        path: &mut Vec<VertexId>,
        on_path: &mut VertexSet,
    ) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == len {
            return self.has_edge(cur, s) && path[1] < path[len - 1];
        }
        let remaining = len - path.len();
        for &w in &self.adj[&cur] {
            if w <= s || on_path.contains(&w) || dist.get(&w).is_none_or(|&d| d > remaining) {
                continue;
            }
            path.push(w);
            on_path.insert(w);
            if self.least_cycle_dfs(s, len, dist, path, on_path) {
                return true;
            }
            path.pop();
            on_path.remove(&w);
        }
        false
    }

    /// True iff consecutive vertices of `cycle` are adjacent, the vertices are
    /// distinct, and there are at least three of them.
    pub fn is_cycle(&self, cycle: &[VertexId]) -> bool {
        let k = cycle.len();
        if k < 3 || cycle.iter().collect::<BTreeSet<_>>().len() != k {
            return false;
        }
        (0..k).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % k]))
    }

    /// True iff `cycle` is a cycle with no edge between non-consecutive vertices.
    pub fn is_chordless_cycle(&self, cycle: &[VertexId]) -> bool {
        if !self.is_cycle(cycle) {
            return false;
        }
        let k = cycle.len();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                if self.has_edge(cycle[i], cycle[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Every chordless cycle with at most `max_len` vertices, each once in
    /// canonical form, ordered by length and then lexicographically.
    pub fn enumerate_short_cycles(&self, max_len: usize) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        for s in self.vertices() {
            let mut path = vec![s];
            self.short_cycle_dfs(s, max_len, &mut path, &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn short_cycle_dfs(
        &self,
        s: VertexId,
        max_len: usize,
        path: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let cur = *path.last().unwrap();
        for &w in &self.adj[&cur] {
            if w == s && path.len() >= 3 && path[1] < cur {
                if self.is_chordless_cycle(path) {
                    out.push(path.clone());
                }
            } else if w > s && path.len() < max_len && !path.contains(&w) {
                path.push(w);
                self.short_cycle_dfs(s, max_len, path, out);
                path.pop();
            }
        }
    }
}

fn insert_sorted(list: &mut Vec<VertexId>, v: VertexId) {
    if let Err(pos) = list.binary_search(&v) {
        list.insert(pos, v);
    }
}

/// Rotates and reflects a cycle into canonical form (smallest vertex first,
/// then the smaller of its two neighbors on the cycle).
pub fn canonical_cycle(cycle: &[VertexId]) -> Vec<VertexId> {
    let k = cycle.len();
    if k == 0 {
        return Vec::new();
    }
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<VertexId> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    let bwd: Vec<VertexId> = (0..k).map(|i| cycle[(start + k - i) % k]).collect();
    fwd.min(bwd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cube() -> Graph {
        let mut edges = Vec::new();
        for v in 0u32..8 {
            for bit in [1, 2, 4] {
                let w = v ^ bit;
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        Graph::from_edges(8, &edges).unwrap()
    }

    fn cycle(n: u32) -> Graph {
        let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn k(n: u32) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        let mut g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(g.add_edge(0, 9), Err(GraphError::UnknownVertex(9)));
        assert_eq!(g.add_vertex(0), Err(GraphError::DuplicateVertex(0)));
    }

    #[test]
    fn degrees() {
        assert!(cube().vertices().all(|v| cube().degree(v) == Ok(3)));
        assert_eq!(path3().degree(1), Ok(2));
        let mut g = Graph::new();
        g.add_vertex(5).unwrap();
        assert_eq!(g.degree(5), Ok(0));
        assert_eq!(g.degree(6), Err(GraphError::UnknownVertex(6)));
    }

    #[test]
    fn subcubic_validation() {
        assert!(cube().validate_subcubic().is_ok());
        assert_eq!(
            k(5).validate_subcubic(),
            Subcubic::Violation {
                vertex: 0,
                degree: 4
            }
        );
    }

    #[test]
    fn distance2_sets() {
        let c = cube();
        let d2 = c.distance2_neighbors(0).unwrap();
        assert_eq!(d2.len(), 6);
        assert!(!d2.contains(&7));
        assert_eq!(
            path3().distance2_neighbors(0).unwrap(),
            VertexSet::from([1, 2])
        );
        assert!(path3().distance2_neighbors(7).is_err());
    }

    #[test]
    fn squares() {
        assert_eq!(cycle(5).square(), k(5));
        assert_eq!(path3().square(), k(3));
        let sq = cube().square();
        assert_eq!(sq.edge_count(), 28 - 4);
    }

    #[test]
    fn shortest_cycles() {
        assert_eq!(cube().shortest_cycle(), Some(vec![0, 1, 3, 2]));
        assert_eq!(path3().shortest_cycle(), None);
        assert_eq!(cycle(5).shortest_cycle(), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(k(4).shortest_cycle(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn components_partition() {
        assert_eq!(cube().components(), vec![cube()]);
        assert!(Graph::new().components().is_empty());
        let mut g = cube();
        for v in 8..13 {
            g.add_vertex(v).unwrap();
        }
        for i in 0..5 {
            g.add_edge(8 + i, 8 + (i + 1) % 5).unwrap();
        }
        let sizes: Vec<usize> = g.components().iter().map(Graph::vertex_count).collect();
        assert_eq!(sizes, vec![8, 5]);
    }

    #[test]
    fn short_cycle_enumeration() {
        let faces = cube().enumerate_short_cycles(5);
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|c| c.len() == 4));
        assert_eq!(k(4).enumerate_short_cycles(3).len(), 4);
        // K4 has 3 four-cycles but each has a chord.
        assert_eq!(k(4).enumerate_short_cycles(5).len(), 4);
        let tree = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(tree.enumerate_short_cycles(5).is_empty());
    }

    #[test]
    fn chordless_check() {
        let mut g = cycle(4);
        assert!(g.is_chordless_cycle(&[0, 1, 2, 3]));
        g.add_edge(0, 2).unwrap();
        assert!(!g.is_chordless_cycle(&[0, 1, 2, 3]));
        assert!(!g.is_chordless_cycle(&[0, 1, 3]));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[2, 4, 1, 3]), vec![1, 3, 2, 4]);
    }
}
