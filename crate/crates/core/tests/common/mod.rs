#![allow(dead_code)]

use diambound::{generate, largest_connected_component, Graph, GeneratorSpec};

pub fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|(u, v)| (u as usize, v as usize)).collect()
}

pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    generate(&GeneratorSpec::Gnm { n, m, seed }).unwrap()
}

/// Largest component of `G(n, m)`.
pub fn gnm_lcc(n: usize, m: usize, seed: u64) -> Graph {
    largest_connected_component(&gnm(n, m, seed)).unwrap().0
}

pub fn random_tree(n: usize, seed: u64) -> Graph {
    generate(&GeneratorSpec::RandomTree { n, seed }).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    generate(&GeneratorSpec::Cycle { n }).unwrap()
}

pub fn oracle_diameter(g: &Graph) -> u64 {
    diambound_testkit::naive_diameter(g.vertex_count(), &edges_of(g)).expect("connected")
}
