//! Derived values checked against brute-force oracles written independently
//! of the library.

use std::collections::BTreeSet;

use d2color::corpus::{build, planar_fixtures, random_split_instance, wegner_graph, GeneratorSpec};
use d2color::embed::{embed, euler_check, short_face_exists};
use d2color::oracle::{exact_chromatic2, Chromatic};
use d2color::reducer::{color_graph, StepKind};
use d2color::{Graph, VertexId};

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertices().max().map_or(0, |m| m as usize + 1);
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u as usize][v as usize] = true;
        a[v as usize][u as usize] = true;
    }
    a
}

/// All chordless cycles of length 3..=max by trying every vertex sequence.
fn brute_short_cycles(g: &Graph, max: usize) -> BTreeSet<Vec<VertexId>> {
    let a = adjacency(g);
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut found = BTreeSet::new();
    fn grow(
        a: &[Vec<bool>],
        vs: &[VertexId],
        seq: &mut Vec<VertexId>,
        max: usize,
        out: &mut BTreeSet<Vec<VertexId>>,
    ) {
        let k = seq.len();
        if k >= 3 && a[seq[k - 1] as usize][seq[0] as usize] {
            let chordless = (0..k).all(|i| {
                (i + 2..k).all(|j| (i == 0 && j == k - 1) || !a[seq[i] as usize][seq[j] as usize])
            });
            if chordless {
                // Canonical: rotate to the smallest vertex, then pick the
                // direction with the smaller second element.
                let m = (0..k).min_by_key(|&i| seq[i]).unwrap();
                let fwd: Vec<VertexId> = (0..k).map(|i| seq[(m + i) % k]).collect();
                let bwd: Vec<VertexId> = (0..k).map(|i| seq[(m + k - i) % k]).collect();
                out.insert(fwd.min(bwd));
            }
        }
        if k == max {
            return;
        }
        for &v in vs {
            if !seq.contains(&v) && a[seq[k - 1] as usize][v as usize] {
                seq.push(v);
                grow(a, vs, seq, max, out);
                seq.pop();
            }
        }
    }
    for &v in &vs {
        grow(&a, &vs, &mut vec![v], max, &mut found);
    }
    found
}

#[test]
fn short_cycles_match_exhaustive_enumeration() {
    let mut graphs: Vec<Graph> = planar_fixtures()
        .into_iter()
        .map(|(_, g)| g)
        .filter(|g| g.vertex_count() <= 20)
        .collect();
    for seed in 0..20 {
        graphs.push(build(&GeneratorSpec::RandomSubcubicPlanar { n: 12, seed }).unwrap());
        graphs.push(build(&GeneratorSpec::RandomCubicPlanar { n: 14, seed }).unwrap());
    }
    for g in graphs {
        let ours: BTreeSet<Vec<VertexId>> = g.enumerate_short_cycles(5).into_iter().collect();
        assert_eq!(ours, brute_short_cycles(&g, 5));
    }
}

#[test]
fn cube_has_six_four_cycles() {
    let cube = build(&GeneratorSpec::Cube).unwrap();
    let cycles = cube.enumerate_short_cycles(5);
    assert_eq!(cycles.len(), 6);
    assert!(cycles.iter().all(|c| c.len() == 4));
}

/// Minimum number of colors over all set partitions of the vertices into
/// classes that are independent in the square.
fn brute_chromatic2(g: &Graph) -> usize {
    let vs: Vec<VertexId> = g.vertices().collect();
    let conflict = |u: VertexId, v: VertexId| {
        g.has_edge(u, v) || g.neighbors(u).iter().any(|&w| g.has_edge(w, v))
    };
    fn go(
        i: usize,
        vs: &[VertexId],
        classes: &mut Vec<Vec<VertexId>>,
        best: &mut usize,
        conflict: &dyn Fn(VertexId, VertexId) -> bool,
    ) {
        if classes.len() >= *best {
            return;
        }
        if i == vs.len() {
            *best = classes.len();
            return;
        }
        for c in 0..classes.len() {
            if classes[c].iter().all(|&u| !conflict(u, vs[i])) {
                classes[c].push(vs[i]);
                go(i + 1, vs, classes, best, conflict);
                classes[c].pop();
            }
        }
        classes.push(vec![vs[i]]);
        go(i + 1, vs, classes, best, conflict);
        classes.pop();
    }
    let mut best = vs.len();
    go(0, &vs, &mut Vec::new(), &mut best, &conflict);
    best
}

fn exact(g: &Graph) -> usize {
    match exact_chromatic2(g, 16).unwrap() {
        Chromatic::Exact { colors, .. } => colors,
        Chromatic::Exceeds(k) => panic!("exceeds {k}"),
    }
}

#[test]
fn small_exact_values() {
    assert_eq!(exact(&wegner_graph()), 7);
    assert_eq!(brute_chromatic2(&wegner_graph()), 7);
    for (spec, want) in [
        (GeneratorSpec::K4, 4),
        (GeneratorSpec::Cube, 4),
        (GeneratorSpec::Cycle(5), 5),
        (GeneratorSpec::Path(3), 3),
        (GeneratorSpec::Prism(3), 6),
        (GeneratorSpec::Petersen, 10),
    ] {
        let g = build(&spec).unwrap();
        assert_eq!(brute_chromatic2(&g), want, "{spec}");
        assert_eq!(exact(&g), want, "{spec}");
    }
}

#[test]
fn exact_matches_brute_force_on_random_graphs() {
    for seed in 0..60 {
        let g = build(&GeneratorSpec::RandomSubcubicPlanar {
            n: 4 + (seed % 7) as u32,
            seed,
        })
        .unwrap();
        assert_eq!(exact(&g), brute_chromatic2(&g), "seed {seed}");
    }
}

#[test]
fn corpus_embeddings_satisfy_euler() {
    let mut graphs: Vec<Graph> = planar_fixtures().into_iter().map(|(_, g)| g).collect();
    for seed in 0..30 {
        graphs.push(build(&GeneratorSpec::RandomCubicPlanar { n: 10 + 2 * (seed as u32 % 20), seed }).unwrap());
        graphs.push(build(&GeneratorSpec::RandomSubcubicPlanar { n: 30, seed }).unwrap());
        graphs.push(random_split_instance(seed).0);
    }
    for g in graphs {
        let e = embed(&g).unwrap();
        euler_check(&e).unwrap();
        let darts: usize = e.faces().iter().map(|f| f.len()).sum();
        assert_eq!(darts, 2 * g.edge_count());
        if g.is_cubic() && g.is_connected() {
            assert!(short_face_exists(&e).unwrap().len() <= 5);
        }
    }
}

#[test]
fn dodecahedron_and_cube_reduction_paths() {
    let d = build(&GeneratorSpec::Dodecahedron).unwrap();
    let (_, trace) = color_graph(&d).unwrap();
    assert!(trace.contains(StepKind::FiveCycle));
    assert!(!trace.contains(StepKind::InsideOutside));
}

#[test]
fn split_instances_have_a_separating_cycle() {
    for seed in 0..50 {
        let (g, cycle) = random_split_instance(seed);
        assert!(g.is_cubic());
        assert!(g.is_chordless_cycle(&cycle));
        let e = embed(&g).unwrap();
        let sides = d2color::embed::classify_sides(&e, &cycle).unwrap();
        assert!(sides.both_nonempty(), "seed {seed}");
    }
}
