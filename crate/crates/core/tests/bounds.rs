mod common;

use common::{cycle, edges_of, gnm_lcc, oracle_diameter, random_tree};
use diambound::{double_sweep_lower, tree_upper, trivial_bounds, Bounder, Graph, Method};
use diambound_testkit::naive_eccentricities;
use proptest::prelude::*;

#[test]
fn trivial_bounds_sandwich_the_diameter() {
    let g = gnm_lcc(100, 250, 9);
    let d = oracle_diameter(&g);
    let (lower, upper) = trivial_bounds(&g, 0).unwrap();
    assert!(lower.value <= d && d <= upper.value, "{} <= {d} <= {}", lower.value, upper.value);
    assert_eq!(upper.value, 2 * lower.value);
}

#[test]
fn double_sweep_is_exact_on_cycles() {
    for n in 4..=20 {
        let g = cycle(n);
        let d = oracle_diameter(&g);
        assert_eq!(d, (n / 2) as u64);
        for u in 0..n as u32 {
            assert_eq!(double_sweep_lower(&g, u).unwrap().value, d, "C{n} from {u}");
        }
    }
}

#[test]
fn double_sweep_is_exact_on_trees() {
    for seed in 0..10 {
        let tree = random_tree(60, seed);
        let d = oracle_diameter(&tree);
        for u in tree.vertices() {
            assert_eq!(double_sweep_lower(&tree, u).unwrap().value, d);
            assert_eq!(tree_upper(&tree, u).unwrap().value, d);
        }
    }
}

#[test]
fn tree_upper_between_diameter_and_twice_eccentricity() {
    let g = gnm_lcc(150, 400, 2);
    let d = oracle_diameter(&g);
    let ecc = naive_eccentricities(g.vertex_count(), &edges_of(&g)).unwrap();
    let step = g.vertex_count() / 10;
    for v in (0..10).map(|i| (i * step) as u32) {
        let value = tree_upper(&g, v).unwrap().value;
        assert!(d <= value && value <= 2 * ecc[v as usize], "v = {v}: {d} <= {value}");
    }
}

#[test]
fn witnesses_certify_values() {
    let g = gnm_lcc(120, 260, 13);
    let adj = diambound_testkit::adjacency(g.vertex_count(), &edges_of(&g));
    let dist = |a: u32, b: u32| diambound_testkit::bfs_distances(&adj, a as usize)[b as usize].unwrap();
    for u in [0u32, 7, 31] {
        let dslb = double_sweep_lower(&g, u).unwrap();
        let [start, v, w] = dslb.witness[..] else { panic!() };
        assert_eq!(start, u);
        assert_eq!(dist(v, w), dslb.value);
        let (tlb, _) = trivial_bounds(&g, u).unwrap();
        assert_eq!(dist(tlb.witness[0], tlb.witness[1]), tlb.value);
    }
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..45, any::<u64>(), 0usize..90).prop_map(|(n, seed, extra)| {
        let tree = random_tree(n, seed);
        let more = common::gnm(n, extra.min(n * (n - 1) / 2), seed.rotate_left(17));
        let edges: Vec<(u32, u32)> = tree.edges().chain(more.edges()).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

proptest! {
    #[test]
    fn per_start_chain_of_inequalities(g in connected_graph()) {
        let d = oracle_diameter(&g);
        let mut bounder = Bounder::new();
        for u in g.vertices() {
            let (tlb, tub) = bounder.trivial_bounds(&g, u).unwrap();
            let dslb = bounder.double_sweep_lower(&g, u).unwrap().value;
            let tree = bounder.tree_upper(&g, u).unwrap().value;
            prop_assert!(tlb.value <= dslb, "tlb {} > dslb {}", tlb.value, dslb);
            prop_assert!(dslb <= d);
            prop_assert!(d <= tree);
            prop_assert!(tree <= tub.value);
        }
    }

    #[test]
    fn bounds_are_deterministic(g in connected_graph(), pick in any::<prop::sample::Index>()) {
        let u = pick.index(g.vertex_count()) as u32;
        let mut fresh = Bounder::new();
        for method in Method::ALL {
            let a = Bounder::new().evaluate(method, &g, u).unwrap();
            let b = fresh.evaluate(method, &g, u).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
