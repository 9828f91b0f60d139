mod common;

use common::{edges_of, gnm};
use diambound::{
    exact_diameter, exact_diameter_with, generate, load_edge_list, Error, ExactOptions, Graph,
    GeneratorSpec, LoadOptions,
};
use diambound_testkit::{all_pairs, flood_fill};

#[test]
fn petersen_fixture_has_diameter_two() {
    let text = include_str!("fixtures/petersen.edges");
    let g: Graph = load_edge_list(text.as_bytes(), &LoadOptions::default()).unwrap().graph;
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
    assert_eq!(exact_diameter(&g).unwrap(), 2);
}

#[test]
fn closed_form_families() {
    for n in 1..40 {
        let path: Graph = generate(&GeneratorSpec::Path { n }).unwrap();
        assert_eq!(exact_diameter(&path).unwrap(), n as u64 - 1);
    }
    for n in 3..40 {
        let cycle: Graph = generate(&GeneratorSpec::Cycle { n }).unwrap();
        assert_eq!(exact_diameter(&cycle).unwrap(), (n / 2) as u64);
        let star: Graph = generate(&GeneratorSpec::Star { n }).unwrap();
        assert_eq!(exact_diameter(&star).unwrap(), 2);
    }
}

#[test]
fn exact_matches_floyd_warshall_on_random_graphs() {
    let mut checked = 0;
    for seed in 0..50u64 {
        let n = 20 + (seed as usize * 37) % 180;
        let g = gnm(n, n + n / 2, seed);
        let lcc = diambound::largest_connected_component(&g).unwrap().0;
        let dist = all_pairs(lcc.vertex_count(), &edges_of(&lcc));
        let expected = dist.iter().flatten().map(|d| d.unwrap()).max().unwrap();
        assert_eq!(exact_diameter(&lcc).unwrap(), expected, "seed {seed}");
        let parallel = exact_diameter_with(&lcc, &ExactOptions { size_limit: None, workers: 3 });
        assert_eq!(parallel.unwrap(), expected);
        checked += 1;
    }
    assert_eq!(checked, 50);
}

#[test]
fn disconnected_and_oversized_inputs_are_rejected() {
    let g = gnm(100, 40, 1);
    assert!(flood_fill(100, &edges_of(&g)).len() > 1);
    assert!(matches!(exact_diameter(&g), Err(Error::Disconnected { .. })));
    let path: Graph = generate(&GeneratorSpec::Path { n: 50 }).unwrap();
    let limited = ExactOptions { size_limit: Some(10), workers: 1 };
    assert!(matches!(exact_diameter_with(&path, &limited), Err(Error::SizeLimit { n: 50, limit: 10 })));
}

#[test]
fn generators_are_reproducible_and_sized() {
    for seed in 0..5 {
        let spec = GeneratorSpec::Gnm { n: 300, m: 900, seed };
        let a: Graph = generate(&spec).unwrap();
        assert_eq!(a, generate(&spec).unwrap());
        assert_eq!((a.vertex_count(), a.edge_count()), (300, 900));
        let tree_spec = GeneratorSpec::RandomTree { n: 300, seed };
        let t: Graph = generate(&tree_spec).unwrap();
        assert_eq!(t.edge_count(), 299);
        assert_eq!(flood_fill(300, &edges_of(&t)).len(), 1);
    }
    assert!(generate::<u32>(&GeneratorSpec::Gnm { n: 4, m: 7, seed: 0 }).is_err());
    assert!(generate::<u32>(&GeneratorSpec::Cycle { n: 2 }).is_err());
}
