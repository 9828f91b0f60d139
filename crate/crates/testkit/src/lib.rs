//! Naive reference implementations for cross-checking the library.
//!
//! Everything here works on plain `(usize, usize)` edge lists and shares no
//! code with `diambound`, so agreement between the two is evidence rather
//! than tautology. Nothing here is meant to be fast.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap, VecDeque};

pub type Edges = Vec<(usize, usize)>;

/// Adjacency sets of a simple undirected graph; self-loops dropped.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(u, v) in edges {
        if u != v {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    adj
}

/// Result of the reference edge-list reader.
#[derive(Debug, PartialEq, Eq)]
pub struct NaiveLoad {
    pub n: usize,
    /// Undirected edges as sorted `(min, max)` pairs in dense ids.
    pub edges: BTreeSet<(usize, usize)>,
    pub original_ids: Vec<u64>,
}

/// Reads an edge list with a hash map of first appearances.
pub fn naive_load(text: &str) -> NaiveLoad {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut original_ids = Vec::new();
    let mut edges = BTreeSet::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let pair: Vec<u64> = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
        let mut dense = |x: u64| {
            *ids.entry(x).or_insert_with(|| {
                original_ids.push(x);
                original_ids.len() - 1
            })
        };
        let (a, b) = (dense(pair[0]), dense(pair[1]));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    NaiveLoad {
        n: original_ids.len(),
        edges,
        original_ids,
    }
}

/// Component of every vertex by repeated flood fill with an explicit stack.
pub fn flood_fill(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let adj = adjacency(n, edges);
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        components.push(comp);
    }
    components
}

/// Unit-weight Dijkstra distances from `source`.
pub fn dijkstra(n: usize, edges: &[(usize, usize)], source: usize) -> Vec<Option<u64>> {
    let adj = adjacency(n, edges);
    let mut dist: Vec<Option<u64>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(0);
    heap.push(Reverse((0u64, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u].is_some_and(|best| best < d) {
            continue;
        }
        for &w in &adj[u] {
            let nd = d + 1;
            if dist[w].is_none_or(|old| nd < old) {
                dist[w] = Some(nd);
                heap.push(Reverse((nd, w)));
            }
        }
    }
    dist
}

/// All-pairs distances by Floyd–Warshall on a dense matrix.
#[allow(clippy::needless_range_loop)]
pub fn all_pairs(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<Option<u64>>> {
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for &(u, v) in edges {
        if u != v {
            d[u][v] = Some(1);
            d[v][u] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    if d[i][j].is_none_or(|ij| ik + kj < ij) {
                        d[i][j] = Some(ik + kj);
                    }
                }
            }
        }
    }
    d
}

/// Largest finite distance; `None` if some pair is unreachable.
pub fn naive_diameter(n: usize, edges: &[(usize, usize)]) -> Option<u64> {
    let d = all_pairs(n, edges);
    let mut best = 0;
    for row in &d {
        for &x in row {
            best = best.max(x?);
        }
    }
    Some(best)
}

/// Eccentricity of every vertex from the all-pairs matrix.
pub fn naive_eccentricities(n: usize, edges: &[(usize, usize)]) -> Option<Vec<u64>> {
    all_pairs(n, edges)
        .into_iter()
        .map(|row| row.into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d))))
        .collect()
}

/// A method's samples recovered from a record file.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct Recount {
    /// `(iteration, value)` pairs in file order.
    pub samples: Vec<(usize, u64)>,
    pub is_lower: bool,
}

impl Recount {
    pub fn best(&self) -> u64 {
        let values = self.samples.iter().map(|s| s.1);
        if self.is_lower {
            values.max().unwrap()
        } else {
            values.min().unwrap()
        }
    }

    pub fn first_hit(&self) -> usize {
        let best = self.best();
        self.samples.iter().filter(|s| s.1 == best).map(|s| s.0).min().unwrap()
    }

    pub fn hits(&self) -> usize {
        let best = self.best();
        self.samples.iter().filter(|s| s.1 == best).count()
    }

    pub fn frequency(&self) -> f64 {
        self.hits() as f64 / self.samples.len() as f64
    }

    /// Samples `>= k` for lower bounds, `<= k` for upper bounds.
    pub fn cumulative_count(&self, k: u64) -> usize {
        self.samples
            .iter()
            .filter(|s| if self.is_lower { s.1 >= k } else { s.1 <= k })
            .count()
    }
}

/// Groups the data lines of a tab-separated record file by method tag.
pub fn recount_records(text: &str) -> BTreeMap<String, Recount> {
    let mut out: BTreeMap<String, Recount> = BTreeMap::new();
    for line in text.lines() {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        assert_eq!(f.len(), 4, "bad record line {line:?}");
        let entry = out.entry(f[1].to_string()).or_default();
        entry.is_lower = f[1].ends_with("lower");
        entry.samples.push((f[0].parse().unwrap(), f[3].parse().unwrap()));
    }
    out
}

/// Parses `# method <tag> best <b> first_hit <i> hits <h> samples <s>
/// frequency <f>` summary rows, whatever the separator.
pub fn summary_method_rows(text: &str) -> BTreeMap<String, BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for line in text.lines() {
        let tokens: Vec<&str> = line
            .trim_start_matches('#')
            .split_whitespace()
            .collect();
        if tokens.first() != Some(&"method") || tokens.len() < 2 {
            continue;
        }
        let fields = tokens[2..]
            .chunks(2)
            .filter(|c| c.len() == 2)
            .map(|c| (c[0].to_string(), c[1].to_string()))
            .collect();
        out.insert(tokens[1].to_string(), fields);
    }
    out
}

/// Rows `(method, k, count, fraction)` of a distribution table.
pub fn parse_distribution_table(text: &str) -> Vec<(String, u64, usize, f64)> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            assert_eq!(f.len(), 4, "bad distribution line {l:?}");
            (
                f[0].to_string(),
                f[1].parse().unwrap(),
                f[2].parse().unwrap(),
                f[3].parse().unwrap(),
            )
        })
        .collect()
}

/// BFS distances with a `VecDeque`, for quick eccentricity checks.
pub fn bfs_distances(adj: &[BTreeSet<usize>], source: usize) -> Vec<Option<u64>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}
