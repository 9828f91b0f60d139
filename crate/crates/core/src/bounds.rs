//! Diameter bounds computed from a constant number of BFS.
//!
//! For any vertex `v`, `ecc(v) <= D <= 2 ecc(v)` (the trivial bounds). The
//! double sweep improves the lower bound by taking the eccentricity of a
//! vertex farthest from the start, and the tree bound improves the upper
//! bound with the diameter of a BFS spanning tree, which can only be larger
//! than the diameter of the graph it spans.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph_store::{CsrGraph, VertexId};
use crate::traversal::{bfs_tree, tree_sweep, BfsTraversal};

/// Bounding heuristic. Variants are declared in tag order so that sorting by
/// the enum and sorting by [`Method::tag`] agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DoubleSweepLower,
    TreeUpper,
    TrivialLower,
    TrivialUpper,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::DoubleSweepLower,
        Method::TreeUpper,
        Method::TrivialLower,
        Method::TrivialUpper,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::DoubleSweepLower => "double_sweep_lower",
            Method::TreeUpper => "tree_upper",
            Method::TrivialLower => "trivial_lower",
            Method::TrivialUpper => "trivial_upper",
        }
    }

    pub fn is_lower(self) -> bool {
        matches!(self, Method::DoubleSweepLower | Method::TrivialLower)
    }

    pub fn is_upper(self) -> bool {
        !self.is_lower()
    }

    /// Whether `candidate` improves on `incumbent` for this method's direction.
    pub fn improves(self, candidate: u64, incumbent: u64) -> bool {
        if self.is_lower() {
            candidate > incumbent
        } else {
            candidate < incumbent
        }
    }

    /// The better of two values for this method's direction.
    pub fn better(self, a: u64, b: u64) -> u64 {
        if self.is_lower() {
            a.max(b)
        } else {
            a.min(b)
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| format!("unknown method tag {s:?}"))
    }
}

/// Outcome of one heuristic invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue<I> {
    pub method: Method,
    pub start: I,
    pub value: u64,
    /// Certifying vertices:
    /// * trivial lower: `[start, f]` with `d(start, f) = value`;
    /// * double sweep: `[start, v, w]`, `v` farthest from `start` and
    ///   `d(v, w) = value`;
    /// * tree upper: `[start, a, b]`, the ends of a longest tree path;
    /// * trivial upper: empty.
    pub witness: Vec<I>,
}

fn as_u64<I: VertexId>(v: I) -> u64 {
    v.to_u64().expect("distance fits u64")
}

/// Evaluates bounds with reusable BFS buffers.
///
/// One `Bounder` per worker; it is cheap to create but avoids reallocating
/// `O(n)` buffers on every call.
#[derive(Debug)]
pub struct Bounder<I> {
    first: BfsTraversal<I>,
    second: BfsTraversal<I>,
}

impl<I: VertexId> Default for Bounder<I> {
    fn default() -> Self {
        Self::new()
    }
}

impl<I: VertexId> Bounder<I> {
    pub fn new() -> Self {
        Bounder {
            first: BfsTraversal::new(),
            second: BfsTraversal::new(),
        }
    }

    fn sweep_from(&mut self, g: &CsrGraph<I>, v: I) -> Result<()> {
        self.first.run(g, v)?;
        self.first.require_connected()
    }

    /// `(ecc(v), 2 ecc(v))` from a single BFS.
    pub fn trivial_bounds(&mut self, g: &CsrGraph<I>, v: I) -> Result<(BoundValue<I>, BoundValue<I>)> {
        self.sweep_from(g, v)?;
        let ecc = as_u64(self.first.eccentricity());
        Ok((
            BoundValue {
                method: Method::TrivialLower,
                start: v,
                value: ecc,
                witness: vec![v, self.first.first_farthest()],
            },
            BoundValue {
                method: Method::TrivialUpper,
                start: v,
                value: 2 * ecc,
                witness: Vec::new(),
            },
        ))
    }

    /// Eccentricity of the smallest-id vertex farthest from `u`.
    pub fn double_sweep_lower(&mut self, g: &CsrGraph<I>, u: I) -> Result<BoundValue<I>> {
        self.sweep_from(g, u)?;
        let v = self.first.first_farthest();
        self.second.run(g, v)?;
        Ok(BoundValue {
            method: Method::DoubleSweepLower,
            start: u,
            value: as_u64(self.second.eccentricity()),
            witness: vec![u, v, self.second.first_farthest()],
        })
    }

    /// Diameter of the BFS tree rooted at `v`.
    pub fn tree_upper(&mut self, g: &CsrGraph<I>, v: I) -> Result<BoundValue<I>> {
        self.sweep_from(g, v)?;
        let tree = bfs_tree(&self.first)?;
        let sweep = tree_sweep(&tree, &mut self.second)?;
        Ok(BoundValue {
            method: Method::TreeUpper,
            start: v,
            value: as_u64(sweep.diameter),
            witness: vec![v, sweep.ends.0, sweep.ends.1],
        })
    }

    /// Runs one method from `start`.
    pub fn evaluate(&mut self, method: Method, g: &CsrGraph<I>, start: I) -> Result<BoundValue<I>> {
        match method {
            Method::TrivialLower => self.trivial_bounds(g, start).map(|(lower, _)| lower),
            Method::TrivialUpper => self.trivial_bounds(g, start).map(|(_, upper)| upper),
            Method::DoubleSweepLower => self.double_sweep_lower(g, start),
            Method::TreeUpper => self.tree_upper(g, start),
        }
    }
}

pub fn trivial_bounds<I: VertexId>(g: &CsrGraph<I>, v: I) -> Result<(BoundValue<I>, BoundValue<I>)> {
    Bounder::new().trivial_bounds(g, v)
}

pub fn double_sweep_lower<I: VertexId>(g: &CsrGraph<I>, u: I) -> Result<BoundValue<I>> {
    Bounder::new().double_sweep_lower(g, u)
}

pub fn tree_upper<I: VertexId>(g: &CsrGraph<I>, v: I) -> Result<BoundValue<I>> {
    Bounder::new().tree_upper(g, v)
}
