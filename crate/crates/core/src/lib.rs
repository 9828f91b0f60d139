//! Rigorous lower and upper bounds on the diameter of large undirected graphs.
//!
//! Every bound here costs a constant number of breadth-first searches, so a
//! single bound is linear in the size of the graph. Iterating the cheap bounds
//! from well-chosen start vertices usually brings the best lower and upper
//! bound very close together, which pins down the diameter without the
//! quadratic all-pairs computation.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph_store`] loads edge lists into a compact adjacency-array graph.
//! * [`traversal`] holds the BFS primitives and the exact tree diameter.
//! * [`bounds`] implements the individual bounding heuristics.
//! * [`engine`] iterates them with start-vertex strategies and stopping rules.
//! * [`oracle`] computes exact diameters and synthetic graphs for checking.
//! * [`report`] reads and writes run records and distribution tables.
//!
//! Graph storage is generic over the vertex index type ([`VertexId`]); the
//! aliases at the crate root pick the usual widths.

pub mod bounds;
pub mod engine;
mod error;
pub mod graph_store;
pub mod oracle;
pub mod report;
pub mod rng;
pub mod traversal;

pub use bounds::{double_sweep_lower, tree_upper, trivial_bounds, BoundValue, Bounder, Method};
pub use engine::{
    distributions, merge_states, run_auto, run_auto_with, run_on_starts, run_single_method,
    run_single_method_with, BoundRecord, BoundsState, DistributionKind, DistributionPoint,
    DistributionSummary, EngineOptions, MethodStats, RunReport, StartStrategy, StopReason,
    StoppingCriterion, StrategyKind,
};
pub use error::{Error, Result};
pub use graph_store::{
    connected_components, degree_descending_order, largest_connected_component, load_edge_list,
    ComponentMap, CsrGraph, IdOrder, LoadOptions, LoadStats, LoadedGraph, VertexId, VertexMapping,
};
pub use oracle::{exact_diameter, exact_diameter_with, generate, ExactOptions, GeneratorSpec};
pub use traversal::{bfs, bfs_tree, tree_diameter, BfsTraversal};

/// Graph with 32-bit vertex ids: up to about four billion vertices at half
/// the memory of the pointer-width variant.
pub type Graph = CsrGraph<u32>;

/// Graph with 64-bit vertex ids.
pub type WideGraph = CsrGraph<u64>;

/// BFS result over a [`Graph`].
pub type Traversal = BfsTraversal<u32>;

/// Run report over a [`Graph`].
pub type Report = RunReport<u32>;
