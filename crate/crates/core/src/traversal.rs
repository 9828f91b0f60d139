//! Single-source breadth-first search and exact tree diameter.

use crate::error::{Error, Result};
use crate::graph_store::{CsrGraph, VertexId};

/// Result of one BFS, reusable as a scratch buffer for the next.
///
/// Distances and parents are stored compactly in the vertex index type with
/// `I::max_value()` marking an unreached vertex; the accessors surface that
/// as `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsTraversal<I> {
    source: I,
    distance: Vec<I>,
    parent: Vec<I>,
    /// Reached vertices in discovery order.
    order: Vec<I>,
    /// Index in `order` where the last (farthest) level begins.
    last_level: usize,
}

impl<I: VertexId> Default for BfsTraversal<I> {
    fn default() -> Self {
        Self::new()
    }
}

impl<I: VertexId> BfsTraversal<I> {
    /// An empty traversal, to be filled by [`BfsTraversal::run`].
    pub fn new() -> Self {
        BfsTraversal {
            source: I::zero(),
            distance: Vec::new(),
            parent: Vec::new(),
            order: Vec::new(),
            last_level: 0,
        }
    }

    /// Runs a BFS from `source`, reusing this traversal's buffers.
    ///
    /// Neighbors are scanned in their stored (ascending) order, so parents and
    /// discovery order are deterministic.
    pub fn run(&mut self, g: &CsrGraph<I>, source: I) -> Result<()> {
        let n = g.vertex_count();
        if source.index() >= n {
            return Err(Error::VertexOutOfRange {
                vertex: source.to_u64().unwrap_or(u64::MAX),
                n,
            });
        }
        let unreached = I::max_value();
        if self.distance.len() == n {
            for &v in &self.order {
                self.distance[v.index()] = unreached;
                self.parent[v.index()] = unreached;
            }
        } else {
            self.distance.clear();
            self.distance.resize(n, unreached);
            self.parent.clear();
            self.parent.resize(n, unreached);
        }
        self.order.clear();
        self.order.reserve(n);

        self.source = source;
        self.distance[source.index()] = I::zero();
        self.order.push(source);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head];
            head += 1;
            let next = self.distance[u.index()] + I::one();
            for &w in g.neighbors(u) {
                let slot = &mut self.distance[w.index()];
                if *slot == unreached {
                    *slot = next;
                    self.parent[w.index()] = u;
                    self.order.push(w);
                }
            }
        }

        let ecc = self.distance[self.order.last().unwrap().index()];
        self.last_level = self.order.len();
        while self.last_level > 0 && self.distance[self.order[self.last_level - 1].index()] == ecc {
            self.last_level -= 1;
        }
        Ok(())
    }

    pub fn source(&self) -> I {
        self.source
    }

    /// Number of vertices of the traversed graph.
    pub fn vertex_count(&self) -> usize {
        self.distance.len()
    }

    pub fn distance(&self, v: I) -> Option<I> {
        let d = self.distance[v.index()];
        (d != I::max_value()).then_some(d)
    }

    /// BFS parent; `None` for the source and for unreached vertices.
    pub fn parent(&self, v: I) -> Option<I> {
        let p = self.parent[v.index()];
        (p != I::max_value()).then_some(p)
    }

    /// Largest distance from the source to a reached vertex.
    pub fn eccentricity(&self) -> I {
        self.order
            .last()
            .map_or(I::zero(), |v| self.distance[v.index()])
    }

    /// Vertices at maximal distance, ascending.
    pub fn farthest(&self) -> Vec<I> {
        let mut far = self.order[self.last_level..].to_vec();
        far.sort_unstable();
        far
    }

    /// Smallest-id vertex at maximal distance.
    pub fn first_farthest(&self) -> I {
        self.order[self.last_level..]
            .iter()
            .copied()
            .min()
            .unwrap_or(self.source)
    }

    pub fn reached_count(&self) -> usize {
        self.order.len()
    }

    pub fn reached_all(&self) -> bool {
        self.order.len() == self.distance.len()
    }

    /// Reached vertices in the order BFS discovered them.
    pub fn order(&self) -> &[I] {
        &self.order
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.reached_all() {
            Ok(())
        } else {
            Err(Error::Disconnected {
                from: self.source.to_u64().unwrap_or(u64::MAX),
                reached: self.reached_count(),
                n: self.vertex_count(),
            })
        }
    }
}

pub fn bfs<I: VertexId>(g: &CsrGraph<I>, source: I) -> Result<BfsTraversal<I>> {
    let mut t = BfsTraversal::new();
    t.run(g, source)?;
    Ok(t)
}

/// Spanning tree formed by the parent edges of a traversal that reached
/// every vertex.
pub fn bfs_tree<I: VertexId>(t: &BfsTraversal<I>) -> Result<CsrGraph<I>> {
    t.require_connected()?;
    let n = t.vertex_count();
    // Children are attached to parents in discovery order; sort per vertex by
    // building through the normalizing constructor.
    let edges: Vec<(I, I)> = t.order[1..]
        .iter()
        .map(|&v| (t.parent[v.index()], v))
        .collect();
    CsrGraph::from_edges(n, &edges)
}

/// Diameter of a tree together with an endpoint pair realizing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct TreeSweep<I> {
    pub diameter: I,
    pub ends: (I, I),
}

pub(crate) fn tree_sweep<I: VertexId>(
    tree: &CsrGraph<I>,
    scratch: &mut BfsTraversal<I>,
) -> Result<TreeSweep<I>> {
    let n = tree.vertex_count();
    if n == 0 {
        return Err(Error::NotATree("graph has no vertices".into()));
    }
    if tree.edge_count() != n - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {} vertices",
            tree.edge_count(),
            n
        )));
    }
    scratch.run(tree, I::zero())?;
    if !scratch.reached_all() {
        return Err(Error::NotATree("graph is not connected".into()));
    }
    let a = scratch.first_farthest();
    scratch.run(tree, a)?;
    Ok(TreeSweep {
        diameter: scratch.eccentricity(),
        ends: (a, scratch.first_farthest()),
    })
}

/// Exact diameter of a tree by two sweeps: BFS from vertex 0, then BFS from
/// the smallest-id vertex farthest from it.
pub fn tree_diameter<I: VertexId>(tree: &CsrGraph<I>) -> Result<I> {
    tree_sweep(tree, &mut BfsTraversal::new()).map(|s| s.diameter)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(u32, u32)]) -> CsrGraph<u32> {
        CsrGraph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: u32) -> CsrGraph<u32> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n as usize, &edges)
    }

    fn star(leaves: u32) -> CsrGraph<u32> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        graph(leaves as usize + 1, &edges)
    }

    fn path(n: u32) -> CsrGraph<u32> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n as usize, &edges)
    }

    #[test]
    fn cycle_six_from_zero() {
        let t = bfs(&cycle(6), 0).unwrap();
        let d: Vec<_> = (0..6).map(|v| t.distance(v).unwrap()).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 2, 1]);
        assert_eq!(t.eccentricity(), 3);
        assert_eq!(t.farthest(), vec![3]);
        assert_eq!(t.parent(0), None);
        assert_eq!(t.parent(3), Some(2));
    }

    #[test]
    fn star_from_leaf() {
        let t = bfs(&star(4), 2).unwrap();
        assert_eq!(t.eccentricity(), 2);
        assert_eq!(t.farthest(), vec![1, 3, 4]);
        assert_eq!(t.first_farthest(), 1);
    }

    #[test]
    fn single_vertex() {
        let g = graph(1, &[]);
        let t = bfs(&g, 0).unwrap();
        assert_eq!(t.eccentricity(), 0);
        assert_eq!(t.farthest(), vec![0]);
        assert_eq!(tree_diameter(&g).unwrap(), 0);
    }

    #[test]
    fn source_out_of_range() {
        assert!(matches!(
            bfs(&cycle(4), 4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn unreached_vertices_have_no_distance() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let t = bfs(&g, 0).unwrap();
        assert_eq!(t.distance(2), None);
        assert_eq!(t.reached_count(), 2);
        assert!(matches!(bfs_tree(&t), Err(Error::Disconnected { reached: 2, n: 4, .. })));
    }

    #[test]
    fn scratch_reuse_matches_fresh_runs() {
        let g = cycle(9);
        let mut scratch = BfsTraversal::new();
        for s in [3, 0, 8, 3] {
            scratch.run(&g, s).unwrap();
            assert_eq!(scratch, bfs(&g, s).unwrap());
        }
        // Switching graphs resizes the buffers.
        let p = path(4);
        scratch.run(&p, 0).unwrap();
        assert_eq!(scratch, bfs(&p, 0).unwrap());
    }

    #[test]
    fn bfs_tree_of_c4() {
        let tree = bfs_tree(&bfs(&cycle(4), 0).unwrap()).unwrap();
        assert_eq!(tree.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn bfs_tree_of_tree_is_itself() {
        let t = graph(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]);
        for s in 0..6 {
            assert_eq!(bfs_tree(&bfs(&t, s).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn tree_diameter_examples() {
        assert_eq!(tree_diameter(&path(5)).unwrap(), 4);
        assert_eq!(tree_diameter(&star(9)).unwrap(), 2);
    }

    #[test]
    fn tree_diameter_rejects_non_trees() {
        assert!(matches!(tree_diameter(&cycle(5)), Err(Error::NotATree(_))));
        // n - 1 edges but a cycle plus an isolated vertex.
        let g = graph(4, &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(tree_diameter(&g), Err(Error::NotATree(_))));
        assert!(matches!(
            tree_diameter(&CsrGraph::<u32>::empty()),
            Err(Error::NotATree(_))
        ));
    }
}
