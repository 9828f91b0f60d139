mod common;

use common::{gnm, gnm_lcc, oracle_diameter, random_tree};
use diambound::{
    distributions, merge_states, run_auto, run_auto_with, run_on_starts, run_single_method,
    run_single_method_with, DistributionKind, EngineOptions, Graph, Method, StartStrategy,
    StopReason, StoppingCriterion, StrategyKind,
};
use proptest::prelude::*;

#[test]
fn auto_mode_reaches_default_gap_on_random_graph() {
    let g = gnm_lcc(500, 1500, 4);
    let d = oracle_diameter(&g);
    let report = run_auto(&g, StoppingCriterion::default(), 0).unwrap();
    let (lower, upper) = (report.best_lower().unwrap(), report.best_upper().unwrap());
    assert!(lower <= d && d <= upper);
    assert_eq!(report.stop_reason, StopReason::CriterionMet);
    assert!(upper - lower <= 5);
}

#[test]
fn double_sweep_on_trees_always_hits_the_diameter() {
    let tree = random_tree(300, 6);
    let d = oracle_diameter(&tree);
    let report =
        run_single_method(&tree, Method::DoubleSweepLower, StrategyKind::UniformRandom { seed: 1 }, 10)
            .unwrap();
    let stats = report.state.method(Method::DoubleSweepLower).unwrap();
    assert_eq!(stats.best, d);
    assert_eq!(stats.first_hit, 1);
    assert_eq!(stats.frequency(), 1.0);
    assert_eq!(report.records.len(), 10);
}

#[test]
fn tree_upper_with_either_strategy_bounds_the_diameter() {
    let g = largest(gnm(200, 600, 8));
    let d = oracle_diameter(&g);
    for kind in [StrategyKind::UniformRandom { seed: 3 }, StrategyKind::DegreeDescending { seed: 3 }] {
        let report = run_single_method(&g, Method::TreeUpper, kind, 50).unwrap();
        assert!(report.records.iter().all(|r| r.value >= d));
        assert_eq!(report.state.iterations(), 50);
    }
}

fn largest(g: Graph) -> Graph {
    diambound::largest_connected_component(&g).unwrap().0
}

#[test]
fn distribution_best_frequency_agrees_with_state() {
    let g = gnm_lcc(300, 700, 12);
    let report = run_auto_with(
        &g,
        StoppingCriterion::FixedIterations(40),
        5,
        &EngineOptions::default(),
    )
    .unwrap();
    let summaries = distributions(&report).unwrap();
    assert_eq!(summaries, report.distributions);
    for s in &summaries {
        let stats = report.state.method(s.method).unwrap();
        assert_eq!(s.best_value(), stats.best);
        assert_eq!(s.best_frequency(), stats.frequency());
        assert_eq!(s.total, stats.samples);
        let expected = if s.method.is_lower() { DistributionKind::Ccdf } else { DistributionKind::Cdf };
        assert_eq!(s.kind, expected);
    }
}

#[test]
fn split_runs_merge_to_the_serial_run() {
    let g = gnm_lcc(150, 330, 21);
    let starts: Vec<u32> = StartStrategy::new(StrategyKind::UniformRandom { seed: 8 }, &g)
        .unwrap()
        .take(20)
        .collect();
    for method in Method::ALL {
        let whole = run_on_starts(&g, method, &starts).unwrap();
        let first = run_on_starts(&g, method, &starts[..10]).unwrap();
        let second = run_on_starts(&g, method, &starts[10..]).unwrap();
        let merged = merge_states(&first.state, &second.state.shifted(10));
        assert_eq!(merged, whole.state, "{method}");
    }
}

#[test]
fn workers_do_not_change_the_outcome() {
    let g = gnm_lcc(400, 900, 17);
    let serial = run_auto(&g, StoppingCriterion::FixedIterations(23), 2).unwrap();
    let options = EngineOptions { workers: 4, ..Default::default() };
    let parallel = run_auto_with(&g, StoppingCriterion::FixedIterations(23), 2, &options).unwrap();
    assert_eq!(serial.records, parallel.records);
    assert_eq!(serial.state, parallel.state);
    let single = run_single_method_with(
        &g,
        Method::TreeUpper,
        StrategyKind::DegreeDescending { seed: 0 },
        30,
        &options,
    )
    .unwrap();
    let single_serial =
        run_single_method(&g, Method::TreeUpper, StrategyKind::DegreeDescending { seed: 0 }, 30).unwrap();
    assert_eq!(single.records, single_serial.records);
}

#[test]
fn guard_stops_unconverged_runs() {
    let g = common::cycle(40);
    let options = EngineOptions { max_iterations: Some(7), workers: 1 };
    let report = run_auto_with(&g, StoppingCriterion::GapThreshold(0), 0, &options).unwrap();
    assert_eq!(report.stop_reason, StopReason::MaxIterations);
    assert_eq!(report.state.iterations(), 7);
    assert_eq!(report.best_lower(), Some(20));
    assert_eq!(report.best_upper(), Some(39));
}

#[test]
fn degree_strategy_visits_every_vertex_first() {
    let g = gnm_lcc(80, 200, 30);
    let n = g.vertex_count();
    let first: Vec<u32> = StartStrategy::new(StrategyKind::DegreeDescending { seed: 4 }, &g)
        .unwrap()
        .take(n)
        .collect();
    assert_eq!(first, diambound::degree_descending_order(&g));
    let mut sorted = first.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..n as u32).collect::<Vec<_>>());
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..60, any::<u64>(), 0usize..120).prop_map(|(n, seed, extra)| {
        let tree = random_tree(n, seed);
        let more = gnm(n, extra.min(n * (n - 1) / 2), seed.rotate_left(29));
        let edges: Vec<(u32, u32)> = tree.edges().chain(more.edges()).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn criterion() -> impl Strategy<Value = StoppingCriterion> {
    prop_oneof![
        (0u64..6).prop_map(StoppingCriterion::GapThreshold),
        (0.01f64..1.0).prop_map(StoppingCriterion::RelativePrecision),
        (1usize..30).prop_map(StoppingCriterion::FixedIterations),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounds_are_correct_and_monotone(g in connected_graph(), stop in criterion(), seed in any::<u64>()) {
        let d = oracle_diameter(&g);
        let report = run_auto(&g, stop, seed).unwrap();
        let (lower, upper) = (report.best_lower().unwrap(), report.best_upper().unwrap());
        prop_assert!(lower <= d && d <= upper);
        // Running best values never move the wrong way.
        let (mut lo, mut hi) = (0u64, u64::MAX);
        for r in &report.records {
            let (new_lo, new_hi) = if r.method.is_lower() {
                (lo.max(r.value), hi)
            } else {
                (lo, hi.min(r.value))
            };
            prop_assert!(new_lo >= lo && new_hi <= hi);
            lo = new_lo;
            hi = new_hi;
        }
        prop_assert_eq!((lo, hi), (lower, upper));
        match report.stop_reason {
            StopReason::CriterionMet => prop_assert!(stop.is_met(&report.state)),
            StopReason::MaxIterations => {
                prop_assert_eq!(report.state.iterations(), 10 * g.vertex_count());
            }
        }
        if let StoppingCriterion::FixedIterations(k) = stop {
            prop_assert_eq!(report.state.iterations(), k);
        }
    }

    #[test]
    fn runs_are_reproducible(g in connected_graph(), seed in any::<u64>()) {
        let a = run_auto(&g, StoppingCriterion::FixedIterations(12), seed).unwrap();
        let b = run_auto(&g, StoppingCriterion::FixedIterations(12), seed).unwrap();
        prop_assert_eq!(a.records, b.records);
        prop_assert_eq!(a.state, b.state);
    }

    #[test]
    fn uniform_starts_stay_in_range(g in connected_graph(), seed in any::<u64>()) {
        let n = g.vertex_count() as u32;
        let starts = StartStrategy::new(StrategyKind::UniformRandom { seed }, &g).unwrap();
        for v in starts.take(200) {
            prop_assert!(v < n);
        }
    }
}
