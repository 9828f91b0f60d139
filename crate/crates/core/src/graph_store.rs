//! Compact adjacency-array storage for simple undirected graphs.
//!
//! A graph with `n` vertices and `m` edges is kept as `n + 1` offsets into a
//! flat neighbor store of length `2m`; degrees are derived from the offsets.
//! Every neighbor slice is sorted ascending, which makes BFS order (and thus
//! every downstream tie-break) deterministic.

use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::io::{self, BufRead, Write};

use num_traits::{FromPrimitive, PrimInt, ToPrimitive, Unsigned};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// Unsigned integer type usable as a dense vertex index.
///
/// The largest value of the type is reserved as the "no vertex / unreached"
/// marker, so a graph over `I` holds at most `I::max_value()` vertices.
pub trait VertexId:
    PrimInt
    + Unsigned
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Default
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    #[inline]
    fn index(self) -> usize {
        self.to_usize().expect("vertex id exceeds usize")
    }

    #[inline]
    fn from_index(index: usize) -> Option<Self> {
        Self::from_usize(index).filter(|&v| v != Self::max_value())
    }

    /// Largest vertex count representable with this index type.
    fn capacity() -> u128 {
        Self::max_value().to_u128().unwrap_or(u128::MAX)
    }

    fn bits() -> u32 {
        (std::mem::size_of::<Self>() * 8) as u32
    }
}

impl<T> VertexId for T where
    T: PrimInt
        + Unsigned
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Debug
        + Display
        + Default
        + Serialize
        + DeserializeOwned
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn checked_vertex_count<I: VertexId>(n: usize) -> Result<()> {
    if (n as u128) > I::capacity() {
        return Err(Error::IndexOverflow {
            count: n as u128,
            bits: I::bits(),
        });
    }
    Ok(())
}

#[inline]
pub(crate) fn vid<I: VertexId>(index: usize) -> I {
    I::from_index(index).expect("vertex index checked at construction")
}

/// Immutable simple undirected graph in adjacency-array form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsrGraph<I> {
    offsets: Vec<usize>,
    neighbors: Vec<I>,
}

/// Counts of what normalization removed while building a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NormalizationStats {
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

impl<I: VertexId> CsrGraph<I> {
    /// Builds a normalized graph on `n` vertices: self-loops are dropped,
    /// duplicate and reversed edges collapse to one undirected edge.
    pub fn from_edges(n: usize, edges: &[(I, I)]) -> Result<Self> {
        Self::from_edges_with_stats(n, edges).map(|(g, _)| g)
    }

    pub fn from_edges_with_stats(n: usize, edges: &[(I, I)]) -> Result<(Self, NormalizationStats)> {
        checked_vertex_count::<I>(n)?;
        let mut stats = NormalizationStats::default();
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w.index() >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w.to_u64().unwrap_or(u64::MAX),
                        n,
                    });
                }
            }
            if u == v {
                stats.self_loops += 1;
                continue;
            }
            degree[u.index()] += 1;
            degree[v.index()] += 1;
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let raw_len = *offsets.last().unwrap();
        let mut neighbors = vec![I::zero(); raw_len];
        let mut cursor = offsets[..n].to_vec();
        for &(u, v) in edges {
            if u == v {
                continue;
            }
            neighbors[cursor[u.index()]] = v;
            cursor[u.index()] += 1;
            neighbors[cursor[v.index()]] = u;
            cursor[v.index()] += 1;
        }
        drop(cursor);

        // Sort each slice, then compact duplicates in place.
        let mut write = 0;
        let mut start = 0;
        for vertex in 0..n {
            let end = offsets[vertex + 1];
            let slice = &mut neighbors[start..end];
            slice.sort_unstable();
            let slice_start = write;
            for read in start..end {
                let w = neighbors[read];
                if write > slice_start && neighbors[write - 1] == w {
                    continue;
                }
                neighbors[write] = w;
                write += 1;
            }
            offsets[vertex] = slice_start;
            start = end;
        }
        offsets[n] = write;
        neighbors.truncate(write);
        neighbors.shrink_to_fit();
        stats.duplicate_edges = (raw_len - write) / 2;

        Ok((CsrGraph { offsets, neighbors }, stats))
    }

    /// Assembles a graph from parts already satisfying every invariant.
    pub(crate) fn from_parts_unchecked(offsets: Vec<usize>, neighbors: Vec<I>) -> Self {
        debug_assert_eq!(offsets.last().copied().unwrap_or(0), neighbors.len());
        CsrGraph { offsets, neighbors }
    }

    pub fn empty() -> Self {
        CsrGraph {
            offsets: vec![0],
            neighbors: Vec::new(),
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges, each counted once.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: I) -> usize {
        let v = v.index();
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbors of `v`.
    #[inline]
    pub fn neighbors(&self, v: I) -> &[I] {
        let v = v.index();
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn neighbor_store(&self) -> &[I] {
        &self.neighbors
    }

    pub fn vertices(&self) -> impl Iterator<Item = I> + '_ {
        (0..self.vertex_count()).map(vid)
    }

    pub fn contains(&self, v: I) -> bool {
        v.index() < self.vertex_count()
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (I, I)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: I, v: I) -> bool {
        self.contains(u) && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Checks every structural invariant; returns a description of the first
    /// violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.vertex_count();
        if self.offsets[0] != 0 || self.offsets[n] != self.neighbors.len() {
            return Err("offsets do not span the neighbor store".into());
        }
        if !self.neighbors.len().is_multiple_of(2) {
            return Err("odd degree sum".into());
        }
        for u in self.vertices() {
            if self.offsets[u.index()] > self.offsets[u.index() + 1] {
                return Err(format!("offsets decrease at vertex {u}"));
            }
            let slice = self.neighbors(u);
            for (i, &v) in slice.iter().enumerate() {
                if v.index() >= n {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if i > 0 && slice[i - 1] >= v {
                    return Err(format!("neighbors of {u} not strictly increasing"));
                }
                if !self.has_edge(v, u) {
                    return Err(format!("edge {u}-{v} is not symmetric"));
                }
            }
        }
        Ok(())
    }

    /// Writes the canonical edge list: one `u v` line per edge, `u < v`,
    /// sorted by `(u, v)`.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        out.flush()
    }
}

impl<I: VertexId> Default for CsrGraph<I> {
    fn default() -> Self {
        Self::empty()
    }
}

/// How input ids are mapped to dense vertex ids.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IdOrder {
    /// In order of first appearance in the input.
    #[default]
    FirstAppearance,
    /// In increasing numeric order; an input whose ids are already dense
    /// (such as a canonical export) keeps its ids.
    Ascending,
}

#[derive(Clone, Debug, Default)]
pub struct LoadOptions {
    /// Keep the original id of every dense vertex.
    pub keep_original_ids: bool,
    pub id_order: IdOrder,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub lines: usize,
    pub edge_lines: usize,
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

#[derive(Clone, Debug)]
pub struct LoadedGraph<I> {
    pub graph: CsrGraph<I>,
    /// `original_ids[v]` is the id vertex `v` carried in the input, when
    /// requested through [`LoadOptions::keep_original_ids`].
    pub original_ids: Option<Vec<u64>>,
    pub stats: LoadStats,
}

impl<I> LoadedGraph<I> {
    /// Writes the `dense original` id mapping, one vertex per line.
    pub fn write_id_map<W: Write>(&self, mut out: W) -> io::Result<()> {
        if let Some(ids) = &self.original_ids {
            for (dense, original) in ids.iter().enumerate() {
                writeln!(out, "{dense} {original}")?;
            }
        }
        out.flush()
    }
}

/// Reads a whitespace-separated edge list.
///
/// Blank lines and lines starting with `#` or `%` are skipped. Ids are
/// remapped densely, by default in order of first appearance.
pub fn load_edge_list<I: VertexId, R: BufRead>(
    mut source: R,
    options: &LoadOptions,
) -> Result<LoadedGraph<I>> {
    let mut dense: HashMap<u64, I> = HashMap::new();
    let mut original_ids: Vec<u64> = Vec::new();
    let mut edges: Vec<(I, I)> = Vec::new();
    let mut stats = LoadStats::default();
    let mut line = String::new();

    loop {
        line.clear();
        if source.read_line(&mut line)? == 0 {
            break;
        }
        stats.lines += 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') || text.starts_with('%') {
            continue;
        }
        let mut fields = text.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: stats.lines,
                message: format!("expected two vertex ids, found {text:?}"),
            });
        };
        let mut endpoint = |token: &str| -> Result<I> {
            let id: u64 = token.parse().map_err(|_| Error::Parse {
                line: stats.lines,
                message: format!("{token:?} is not a nonnegative integer"),
            })?;
            if let Some(&v) = dense.get(&id) {
                return Ok(v);
            }
            let next = original_ids.len();
            let v = I::from_index(next).ok_or(Error::IndexOverflow {
                count: next as u128 + 1,
                bits: I::bits(),
            })?;
            dense.insert(id, v);
            original_ids.push(id);
            Ok(v)
        };
        let u = endpoint(a)?;
        let v = endpoint(b)?;
        edges.push((u, v));
        stats.edge_lines += 1;
    }

    if stats.edge_lines == 0 {
        return Err(Error::EmptyInput);
    }
    drop(dense);
    if options.id_order == IdOrder::Ascending {
        let mut by_value: Vec<usize> = (0..original_ids.len()).collect();
        by_value.sort_unstable_by_key(|&i| original_ids[i]);
        let mut rank = vec![I::zero(); by_value.len()];
        for (new, &old) in by_value.iter().enumerate() {
            rank[old] = vid(new);
        }
        for (u, v) in edges.iter_mut() {
            *u = rank[u.index()];
            *v = rank[v.index()];
        }
        original_ids.sort_unstable();
    }
    let (graph, norm) = CsrGraph::from_edges_with_stats(original_ids.len(), &edges)?;
    stats.self_loops = norm.self_loops;
    stats.duplicate_edges = norm.duplicate_edges;
    Ok(LoadedGraph {
        graph,
        original_ids: options.keep_original_ids.then_some(original_ids),
        stats,
    })
}

/// Connected-component labeling of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMap {
    pub component_id: Vec<usize>,
    pub component_sizes: Vec<usize>,
    /// Label of a largest component; `None` only for the empty graph.
    pub largest_id: Option<usize>,
}

impl ComponentMap {
    pub fn count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sizes.len() <= 1
    }
}

/// Labels components by flood fill, scanning vertices from 0 upward, so
/// labels follow first discovery and the component of vertex 0 is label 0.
pub fn connected_components<I: VertexId>(g: &CsrGraph<I>) -> ComponentMap {
    const UNLABELED: usize = usize::MAX;
    let n = g.vertex_count();
    let mut component_id = vec![UNLABELED; n];
    let mut component_sizes = Vec::new();
    let mut queue: Vec<I> = Vec::new();

    for root in 0..n {
        if component_id[root] != UNLABELED {
            continue;
        }
        let label = component_sizes.len();
        component_id[root] = label;
        queue.clear();
        queue.push(vid(root));
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in g.neighbors(u) {
                if component_id[w.index()] == UNLABELED {
                    component_id[w.index()] = label;
                    queue.push(w);
                }
            }
        }
        component_sizes.push(queue.len());
    }

    // Labels are in order of smallest member, so the first maximum wins ties.
    let largest_id = component_sizes
        .iter()
        .enumerate()
        .fold(None, |best: Option<(usize, usize)>, (id, &size)| match best {
            Some((_, s)) if s >= size => best,
            _ => Some((id, size)),
        })
        .map(|(id, _)| id);

    ComponentMap {
        component_id,
        component_sizes,
        largest_id,
    }
}

/// Correspondence between the vertices of a graph and an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMapping<I> {
    pub old_to_new: Vec<Option<I>>,
    pub new_to_old: Vec<I>,
}

impl<I: VertexId> VertexMapping<I> {
    pub fn is_identity(&self) -> bool {
        self.old_to_new.len() == self.new_to_old.len()
            && self.new_to_old.iter().enumerate().all(|(i, v)| v.index() == i)
    }
}

/// Induced subgraph on the largest connected component.
///
/// Equal-size components are resolved in favor of the one holding the
/// smallest vertex id. Kept vertices are renumbered in increasing order of
/// their old ids, so a connected graph maps to itself.
pub fn largest_connected_component<I: VertexId>(
    g: &CsrGraph<I>,
) -> Result<(CsrGraph<I>, VertexMapping<I>)> {
    let components = connected_components(g);
    let largest = components.largest_id.ok_or(Error::EmptyGraph)?;

    let n = g.vertex_count();
    let mut old_to_new = vec![None; n];
    let mut new_to_old = Vec::with_capacity(components.component_sizes[largest]);
    for (old, &label) in components.component_id.iter().enumerate() {
        if label == largest {
            old_to_new[old] = Some(vid::<I>(new_to_old.len()));
            new_to_old.push(vid::<I>(old));
        }
    }

    // The relabeling is monotone, so mapped neighbor slices stay sorted.
    let mut offsets = Vec::with_capacity(new_to_old.len() + 1);
    offsets.push(0);
    let mut neighbors = Vec::new();
    for &old in &new_to_old {
        neighbors.extend(
            g.neighbors(old)
                .iter()
                .map(|w| old_to_new[w.index()].expect("component is closed under adjacency")),
        );
        offsets.push(neighbors.len());
    }

    Ok((
        CsrGraph::from_parts_unchecked(offsets, neighbors),
        VertexMapping {
            old_to_new,
            new_to_old,
        },
    ))
}

/// All vertices by decreasing degree, ties by increasing id.
pub fn degree_descending_order<I: VertexId>(g: &CsrGraph<I>) -> Vec<I> {
    let mut order: Vec<I> = g.vertices().collect();
    // Stable sort keeps ascending ids within a degree class.
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}
