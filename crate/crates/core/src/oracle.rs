//! Exact diameters for small graphs and synthetic graph families.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph_store::{checked_vertex_count, vid, CsrGraph, VertexId};
use crate::rng::SeededSampler;
use crate::traversal::BfsTraversal;

pub const DEFAULT_EXACT_SIZE_LIMIT: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactOptions {
    /// Refuse graphs with more vertices; `None` disables the check.
    pub size_limit: Option<usize>,
    pub workers: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            size_limit: Some(DEFAULT_EXACT_SIZE_LIMIT),
            workers: 1,
        }
    }
}

/// Exact diameter as the largest eccentricity over all `n` sources.
pub fn exact_diameter<I: VertexId>(g: &CsrGraph<I>) -> Result<u64> {
    exact_diameter_with(g, &ExactOptions::default())
}

pub fn exact_diameter_with<I: VertexId>(g: &CsrGraph<I>, options: &ExactOptions) -> Result<u64> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(limit) = options.size_limit {
        if n > limit {
            return Err(Error::SizeLimit { n, limit });
        }
    }

    let mut first = BfsTraversal::new();
    first.run(g, I::zero())?;
    first.require_connected()?;
    let ecc0 = first.eccentricity().to_u64().unwrap();

    let eccentricity = |scratch: &mut BfsTraversal<I>, v: usize| -> u64 {
        scratch.run(g, vid(v)).expect("source in range");
        scratch.eccentricity().to_u64().unwrap()
    };
    let rest = if options.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.workers)
            .build()
            .map_err(|e| Error::InvalidOptions(e.to_string()))?;
        pool.install(|| {
            (1..n)
                .into_par_iter()
                .map_init(BfsTraversal::new, eccentricity)
                .max()
        })
    } else {
        (1..n).map(|v| eccentricity(&mut first, v)).max()
    };
    Ok(rest.map_or(ecc0, |e| e.max(ecc0)))
}

/// Synthetic graph family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorSpec {
    /// `n` vertices `0 - 1 - ... - (n-1)`.
    Path { n: usize },
    /// Path plus the closing edge; `n >= 3`.
    Cycle { n: usize },
    /// Center 0 joined to leaves `1..n`; `n` counts all vertices.
    Star { n: usize },
    /// Uniform labeled tree from a random Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
    /// Uniform choice of `m` distinct edges among the `n(n-1)/2` pairs.
    Gnm { n: usize, m: usize, seed: u64 },
}

impl GeneratorSpec {
    pub fn vertex_count(&self) -> usize {
        match *self {
            GeneratorSpec::Path { n }
            | GeneratorSpec::Cycle { n }
            | GeneratorSpec::Star { n }
            | GeneratorSpec::RandomTree { n, .. }
            | GeneratorSpec::Gnm { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::InvalidGenerator("n must be at least 1".into()));
        }
        match *self {
            GeneratorSpec::Cycle { n } if n < 3 => Err(Error::InvalidGenerator(format!(
                "a simple cycle needs at least 3 vertices, got {n}"
            ))),
            GeneratorSpec::Gnm { n, m, .. } => {
                let pairs = pair_count(n);
                if (m as u128) > pairs {
                    Err(Error::InvalidGenerator(format!(
                        "{m} edges exceed the {pairs} vertex pairs of n = {n}"
                    )))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

fn pair_count(n: usize) -> u128 {
    let n = n as u128;
    n * n.saturating_sub(1) / 2
}

/// Builds the graph described by `spec`; random families are deterministic
/// in their seed.
pub fn generate<I: VertexId>(spec: &GeneratorSpec) -> Result<CsrGraph<I>> {
    spec.validate()?;
    let n = spec.vertex_count();
    checked_vertex_count::<I>(n)?;
    let edges: Vec<(I, I)> = match *spec {
        GeneratorSpec::Path { n } => (1..n).map(|i| (vid(i - 1), vid(i))).collect(),
        GeneratorSpec::Cycle { n } => (0..n).map(|i| (vid(i), vid((i + 1) % n))).collect(),
        GeneratorSpec::Star { n } => (1..n).map(|i| (vid(0), vid(i))).collect(),
        GeneratorSpec::RandomTree { n, seed } => random_tree_edges(n, seed),
        GeneratorSpec::Gnm { n, m, seed } => gnm_edges(n, m, seed)?,
    };
    CsrGraph::from_edges(n, &edges)
}

fn random_tree_edges<I: VertexId>(n: usize, seed: u64) -> Vec<(I, I)> {
    if n < 2 {
        return Vec::new();
    }
    let mut sampler = SeededSampler::new(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| sampler.below(n as u64) as usize).collect();
    prufer_decode(n, &code)
        .into_iter()
        .map(|(u, v)| (vid(u), vid(v)))
        .collect()
}

/// Linear-time decoding of a Prüfer sequence over `n >= 2` labels.
pub(crate) fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in code {
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Floyd's subset sampling over pair indices, decoded to `(u, v)`, `u < v`.
fn gnm_edges<I: VertexId>(n: usize, m: usize, seed: u64) -> Result<Vec<(I, I)>> {
    let pairs = u64::try_from(pair_count(n))
        .map_err(|_| Error::InvalidGenerator(format!("n = {n} is too large")))?;
    let mut sampler = SeededSampler::new(seed);
    let mut chosen: HashSet<u64> = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for j in (pairs - m as u64)..pairs {
        let t = sampler.below(j + 1);
        let pick = if chosen.insert(t) {
            t
        } else {
            chosen.insert(j);
            j
        };
        let (u, v) = decode_pair(pick);
        edges.push((vid(u as usize), vid(v as usize)));
    }
    Ok(edges)
}

/// Inverse of `index = v (v - 1) / 2 + u` for `u < v`.
pub(crate) fn decode_pair(index: u64) -> (u64, u64) {
    let mut v = ((1.0 + (1.0 + 8.0 * index as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > index {
        v -= 1;
    }
    while (v + 1) * v / 2 <= index {
        v += 1;
    }
    (index - v * (v - 1) / 2, v)
}
