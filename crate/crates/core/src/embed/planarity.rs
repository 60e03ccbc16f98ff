//! Planarity testing by path addition (Demoucron, Malgrange and Pertuiset).
//!
//! Each biconnected block is embedded separately, starting from a cycle and
//! repeatedly routing a path of some unembedded fragment through a face that
//! contains all of the fragment's attachment vertices. A fragment with no such
//! face proves non-planarity; a fragment with exactly one is always placed
//! first. Block rotations are concatenated at cut vertices, which keeps the
//! combined rotation system planar because the block-cut tree is a tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{Edge, Graph, VertexId, VertexSet};

type Rotation = BTreeMap<VertexId, Vec<VertexId>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph homeomorphic to K5 or K3,3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: Vec<Edge>,
}

pub(crate) fn planar_rotation(g: &Graph) -> Option<Rotation> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Rotation = g.vertices().map(|v| (v, Vec::new())).collect();
    for block in biconnected_components(g) {
        let block_rot = if block.len() == 1 {
            let (u, v) = block[0];
            BTreeMap::from([(u, vec![v]), (v, vec![u])])
        } else {
            embed_block(&block)?
        };
        for (v, list) in block_rot {
            rotation.get_mut(&v).unwrap().extend(list);
        }
    }
    Some(rotation)
}

/// Edge sets of the biconnected components, in discovery order.
fn biconnected_components(g: &Graph) -> Vec<Vec<Edge>> {
    struct State<'a> {
        g: &'a Graph,
        disc: BTreeMap<VertexId, usize>,
        low: BTreeMap<VertexId, usize>,
        stack: Vec<Edge>,
        blocks: Vec<Vec<Edge>>,
        time: usize,
    }

    fn dfs(s: &mut State, u: VertexId, parent: Option<VertexId>) {
        s.disc.insert(u, s.time);
        s.low.insert(u, s.time);
        s.time += 1;
        for &w in s.g.neighbors(u) {
            if Some(w) == parent {
                continue;
            }
            match s.disc.get(&w).copied() {
                None => {
                    s.stack.push((u.min(w), u.max(w)));
                    dfs(s, w, Some(u));
                    let lw = s.low[&w];
                    if lw < s.low[&u] {
                        s.low.insert(u, lw);
                    }
                    if lw >= s.disc[&u] {
                        let edge = (u.min(w), u.max(w));
                        let mut block = Vec::new();
                        while let Some(e) = s.stack.pop() {
                            block.push(e);
                            if e == edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        s.blocks.push(block);
                    }
                }
                Some(dw) if dw < s.disc[&u] => {
                    s.stack.push((u.min(w), u.max(w)));
                    if dw < s.low[&u] {
                        s.low.insert(u, dw);
                    }
                }
                Some(_) => {}
            }
        }
    }

    let mut s = State {
        g,
        disc: BTreeMap::new(),
        low: BTreeMap::new(),
        stack: Vec::new(),
        blocks: Vec::new(),
        time: 0,
    };
    for v in g.vertices() {
        if !s.disc.contains_key(&v) {
            dfs(&mut s, v, None);
        }
    }
    s.blocks
}

struct Fragment {
    attachments: Vec<VertexId>,
    /// Empty for a chord between two embedded vertices.
    interior: VertexSet,
    chord: Option<Edge>,
}

struct FaceInfo {
    walk: Vec<VertexId>,
    vertices: VertexSet,
}

/// Embeds one biconnected block with at least two edges.
fn embed_block(edges: &[Edge]) -> Option<Rotation> {
    let mut verts: VertexSet = VertexSet::new();
    for &(u, v) in edges {
        verts.insert(u);
        verts.insert(v);
    }
    let n = verts.len();
    if edges.len() > 3 * n - 6 {
        return None;
    }
    let mut block = Graph::new();
    for &v in &verts {
        block.add_vertex(v).unwrap();
    }
    for &(u, v) in edges {
        block.add_edge(u, v).unwrap();
    }
    let cycle = block.shortest_cycle().expect("a block with two edges has a cycle");

    let mut rot: Rotation = BTreeMap::new();
    let mut embedded: BTreeSet<Edge> = BTreeSet::new();
    let k = cycle.len();
    for i in 0..k {
        let (prev, cur, next) = (cycle[(i + k - 1) % k], cycle[i], cycle[(i + 1) % k]);
        rot.insert(cur, vec![prev, next]);
        embedded.insert((cur.min(next), cur.max(next)));
    }

    while embedded.len() < edges.len() {
        let faces = rotation_faces(&rot);
        let fragments = fragments(&block, &rot, &embedded);
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.vertices.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = chosen.expect("unembedded edges imply a fragment");
        let path = fragment_path(&block, &rot, &fragments[fi]);
        insert_path(&mut rot, &faces[face].walk, &path);
        for w in path.windows(2) {
            embedded.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Some(rot)
}

fn succ(rot: &Rotation, v: VertexId, after: VertexId) -> VertexId {
    let list = &rot[&v];
    let i = list.iter().position(|&x| x == after).unwrap();
    list[(i + 1) % list.len()]
}

fn rotation_faces(rot: &Rotation) -> Vec<FaceInfo> {
    let mut seen: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (&u, list) in rot {
        for &v in list {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                seen.insert((a, b));
                walk.push(a);
                let c = succ(rot, b, a);
                a = b;
                b = c;
                if (a, b) == (u, v) {
                    break;
                }
            }
            let vertices = walk.iter().copied().collect();
            faces.push(FaceInfo { walk, vertices });
        }
    }
    faces
}

fn fragments(block: &Graph, rot: &Rotation, embedded: &BTreeSet<Edge>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in block.edges() {
        if rot.contains_key(&u) && rot.contains_key(&v) && !embedded.contains(&(u, v)) {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: VertexSet::new(),
                chord: Some((u, v)),
            });
        }
    }
    let mut seen = VertexSet::new();
    for start in block.vertices() {
        if rot.contains_key(&start) || seen.contains(&start) {
            continue;
        }
        let mut interior = VertexSet::from([start]);
        let mut attachments = VertexSet::new();
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in block.neighbors(x) {
                if rot.contains_key(&y) {
                    attachments.insert(y);
                } else if interior.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.extend(interior.iter().copied());
        out.push(Fragment {
            attachments: attachments.into_iter().collect(),
            interior,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(block: &Graph, rot: &Rotation, frag: &Fragment) -> Vec<VertexId> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let start = *block
        .neighbors(a)
        .iter()
        .find(|x| frag.interior.contains(x))
        .expect("attachment touches the fragment");
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut visited = VertexSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if let Some(&b) = block
            .neighbors(x)
            .iter()
            .find(|&&y| y != a && rot.contains_key(&y))
        {
            let mut path = vec![b, x];
            let mut cur = x;
            while let Some(&p) = parent.get(&cur) {
                path.push(p);
                cur = p;
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &y in block.neighbors(x) {
            if frag.interior.contains(&y) && visited.insert(y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Routes `path` (endpoints already embedded, interior new) through the face
/// with boundary `walk`.
fn insert_path(rot: &mut Rotation, walk: &[VertexId], path: &[VertexId]) {
    let m = walk.len();
    let corner_pred = |x: VertexId| {
        let i = walk.iter().position(|&w| w == x).expect("endpoint on face");
        walk[(i + m - 1) % m]
    };
    let (a, b) = (path[0], path[path.len() - 1]);
    let (pa, pb) = (corner_pred(a), corner_pred(b));
    let (first, last) = (path[1], path[path.len() - 2]);
    insert_after(rot.get_mut(&a).unwrap(), pa, first);
    insert_after(rot.get_mut(&b).unwrap(), pb, last);
    for w in path.windows(3) {
        rot.insert(w[1], vec![w[0], w[2]]);
    }
}

fn insert_after(list: &mut Vec<VertexId>, after: VertexId, x: VertexId) {
    let i = list.iter().position(|&y| y == after).unwrap();
    list.insert(i + 1, x);
}

/// Extracts a Kuratowski subgraph by deleting every edge whose removal keeps
/// the graph non-planar. Returns `None` for planar graphs.
pub fn kuratowski_witness(g: &Graph) -> Option<KuratowskiWitness> {
    if planar_rotation(g).is_some() {
        return None;
    }
    let mut h = g.clone();
    for (u, v) in g.edges() {
        h.remove_edge(u, v).unwrap();
        if planar_rotation(&h).is_some() {
            h.add_edge(u, v).unwrap();
        }
    }
    let branch: Vec<usize> = h
        .vertices()
        .map(|v| h.neighbors(v).len())
        .filter(|&d| d >= 3)
        .collect();
    let kind = if branch.len() == 5 && branch.iter().all(|&d| d == 4) {
        KuratowskiKind::K5
    } else {
        KuratowskiKind::K33
    };
    Some(KuratowskiWitness {
        kind,
        edges: h.edges(),
    })
}
