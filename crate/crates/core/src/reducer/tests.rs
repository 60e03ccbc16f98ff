use super::*;
use crate::corpus::{build, disjoint_union, planar_fixtures, wegner_graph, GeneratorSpec};
use crate::oracle::{exact_chromatic2, Chromatic};

fn fixture(spec: GeneratorSpec) -> Graph {
    build(&spec).unwrap()
}

fn kinds(trace: &ReductionTrace) -> Vec<StepKind> {
    trace.steps.iter().map(|s| s.kind).collect()
}

fn with_threshold(t: usize) -> Colorer {
    Colorer::new(ColorOptions {
        base_threshold: t,
        ..ColorOptions::default()
    })
}

#[test]
fn wegner_is_a_base_case() {
    let g = wegner_graph();
    let (c, trace) = color_graph(&g).unwrap();
    assert_eq!(kinds(&trace), vec![StepKind::Base]);
    assert_eq!(c.colors_used(), 7);
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn dodecahedron_uses_a_five_cycle() {
    let g = fixture(GeneratorSpec::Dodecahedron);
    let (c, trace) = color_graph(&g).unwrap();
    assert_eq!(trace.steps[0].kind, StepKind::FiveCycle);
    assert_eq!(trace.steps[0].removed.len(), 5);
    assert!(trace.diagnostics.is_empty());
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn twin_pentagons_split_into_components() {
    let c5 = fixture(GeneratorSpec::Cycle(5));
    let g = disjoint_union(&c5, &c5);
    let (c, trace) = color_graph(&g).unwrap();
    assert_eq!(
        kinds(&trace),
        vec![StepKind::ComponentSplit, StepKind::Base, StepKind::Base]
    );
    assert_eq!(trace.steps[0].parts, 2);
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn cube_below_threshold_takes_a_four_cycle() {
    let g = fixture(GeneratorSpec::Cube);
    let (_, trace) = color_graph(&g).unwrap();
    assert_eq!(kinds(&trace), vec![StepKind::Base]);
    let (c, trace) = with_threshold(4).color(&g).unwrap();
    assert_eq!(kinds(&trace), vec![StepKind::FourCycle, StepKind::Base]);
    let step = &trace.steps[0];
    assert_eq!(step.removed, vec![0, 1, 3, 2]);
    assert_eq!(step.added_edges, vec![(4, 7)]);
    let x4 = step.margins.iter().find(|m| m.role == "x4").unwrap();
    assert!(x4.phase_start.unwrap() >= 3);
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn pentagonal_prism_reduces_through_four_cycles() {
    let g = fixture(GeneratorSpec::Prism(5));
    let (c, trace) = with_threshold(0).color(&g).unwrap();
    assert_eq!(trace.steps[0].kind, StepKind::FourCycle);
    assert!(trace.diagnostics.is_empty());
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn square_sandwich_splits_on_its_square() {
    let g = fixture(GeneratorSpec::SquareSandwich);
    let (c, trace) = color_graph(&g).unwrap();
    assert_eq!(trace.steps[0].kind, StepKind::InsideOutside);
    assert_eq!(trace.steps[0].cycle, vec![0, 1, 2, 3]);
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn four_cycle_relabeling_branch() {
    let g = fixture(GeneratorSpec::RandomCubicPlanar { n: 20, seed: 14 });
    let (c, trace) = color_graph(&g).unwrap();
    assert!(trace
        .steps
        .iter()
        .any(|s| s.kind == StepKind::FourCycle && s.labeling == vec![2, 3, 0, 1]));
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn five_cycle_relabeling_branch() {
    // A reduced coloring in which y4 and y5 collide forces the reflected
    // labeling. Such a coloring comes from identifying y5 with y4: every
    // distance-2 constraint of the reduced graph survives the identification.
    let g = fixture(GeneratorSpec::RandomCubicPlanar { n: 30, seed: 0 });
    let e = embed(&g).unwrap();
    let ctx = build_cycle_context(&g, &e, &[3, 11, 10, 1, 5]).unwrap();
    let (reduced, mut step) = reduce_5cycle(&g, &ctx).unwrap();
    let (y4, y5) = (ctx.exterior[3], ctx.exterior[4]);
    assert!(reduced.bfs_distances(y4).get(&y5).is_none_or(|&d| d >= 3));

    let mut merged = reduced.clone();
    merged.remove_vertex(y5).unwrap();
    for &w in reduced.neighbors(y5) {
        merged.add_edge(y4, w).unwrap();
    }
    let mut base = find_coloring(&merged, PALETTE).unwrap();
    base.set(y5, base.get(y4).unwrap());
    assert!(verify_coloring(&reduced, &base).unwrap().is_valid());

    let out = extend_5cycle(&base, &mut step, &g).unwrap();
    assert_eq!(step.labeling, vec![3, 2, 1, 0, 4]);
    assert!(verify_coloring(&g, &out).unwrap().is_valid());
}

#[test]
fn extension_rejects_a_missing_context() {
    let g = fixture(GeneratorSpec::Cube);
    let mut step = ReductionStep::new(StepKind::FourCycle, 8);
    assert!(extend_4cycle(&Coloring::new(8), &mut step, &g).is_err());
    let mut step = ReductionStep::new(StepKind::FiveCycle, 8);
    assert!(extend_5cycle(&Coloring::new(8), &mut step, &g).is_err());
}

#[test]
fn input_errors() {
    let k5 = fixture(GeneratorSpec::K5);
    assert!(matches!(color_graph(&k5), Err(ColorError::DegreeViolation { .. })));
    let petersen = fixture(GeneratorSpec::Petersen);
    assert!(matches!(color_graph(&petersen), Err(ColorError::NonPlanar(_))));
    let cube = fixture(GeneratorSpec::Cube);
    for palette in [7, 65] {
        let colorer = Colorer::new(ColorOptions {
            palette,
            ..ColorOptions::default()
        });
        assert_eq!(colorer.color(&cube).unwrap_err(), ColorError::Palette(palette));
    }
}

#[test]
fn empty_graph_is_a_base_case() {
    let (c, trace) = color_graph(&Graph::new()).unwrap();
    assert!(c.is_empty());
    assert_eq!(kinds(&trace), vec![StepKind::Base]);
}

#[test]
fn larger_palette_is_respected() {
    let g = fixture(GeneratorSpec::PentagonSandwich);
    let colorer = Colorer::new(ColorOptions {
        palette: 12,
        ..ColorOptions::default()
    });
    let (c, _) = colorer.color(&g).unwrap();
    assert_eq!(c.palette(), 12);
    assert!(verify_coloring(&g, &c).unwrap().is_valid());
}

#[test]
fn replay_reproduces_every_fixture() {
    for (name, g) in planar_fixtures() {
        for colorer in [Colorer::default(), with_threshold(0)] {
            let (c, trace) = colorer.color(&g).unwrap();
            let replayed = trace.replay(&g, PALETTE).unwrap();
            assert_eq!(replayed, c, "{name}");
        }
    }
}

#[test]
fn replay_detects_damage() {
    let g = fixture(GeneratorSpec::Dodecahedron);
    let (_, trace) = color_graph(&g).unwrap();

    let mut short = trace.clone();
    short.steps.pop();
    assert_eq!(short.replay(&g, PALETTE), Err(ReplayError::Truncated));

    let mut long = trace.clone();
    long.steps.push(ReductionStep::new(StepKind::Base, 0));
    assert_eq!(long.replay(&g, PALETTE), Err(ReplayError::Trailing(1)));

    let mut bad = trace.clone();
    bad.steps[0].assigned[0].1 = 9;
    assert!(matches!(
        bad.replay(&g, PALETTE),
        Err(ReplayError::Step { index: 0, .. })
    ));
}

#[test]
fn colorings_are_deterministic() {
    for spec in [
        GeneratorSpec::PentagonSandwich,
        GeneratorSpec::RandomCubicPlanar { n: 40, seed: 3 },
        GeneratorSpec::RandomSubcubicPlanar { n: 40, seed: 3 },
    ] {
        let g = fixture(spec);
        assert_eq!(color_graph(&g).unwrap(), color_graph(&g).unwrap());
    }
}

#[test]
fn constructive_never_beats_exact_on_small_fixtures() {
    for (name, g) in planar_fixtures() {
        if g.vertex_count() > 12 {
            continue;
        }
        let Chromatic::Exact { colors, .. } = exact_chromatic2(&g, PALETTE).unwrap() else {
            panic!("{name} needs more than eight colors");
        };
        let (c, _) = with_threshold(0).color(&g).unwrap();
        assert!(c.colors_used() >= colors, "{name}");
    }
}

#[test]
fn fallback_can_be_disabled_without_effect_on_sound_runs() {
    let g = fixture(GeneratorSpec::RandomCubicPlanar { n: 30, seed: 9 });
    let strict = Colorer::new(ColorOptions {
        fallback: false,
        ..ColorOptions::default()
    });
    assert_eq!(strict.color(&g).unwrap(), color_graph(&g).unwrap());
}

#[test]
fn step_kind_names_round_trip() {
    for kind in StepKind::ALL {
        assert_eq!(kind.as_str().parse::<StepKind>().unwrap(), kind);
    }
    assert!("six-cycle".parse::<StepKind>().is_err());
}
