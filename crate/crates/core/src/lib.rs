//! Colorings of graph powers.
//!
//! Implements two greedy procedures that color `G^k` below the trivial bound
//! `f(k, Δ) + 1` whenever `G` has a long enough shortest path, along with the
//! non-backtracking walk accounting that certifies each greedy step, and an
//! exact branch-and-bound oracle for measuring the k-gap
//! `f(k, Δ) + 1 - χ(G^k)` of small graphs.

pub mod bounds;
pub mod coloring;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod procedures;
pub mod walks;

pub use bounds::{f, GapRecord};
pub use coloring::{verify_coloring, PartialColoring, Violation};
pub use generators::GraphKind;
pub use graph::{DistanceTable, Graph, GraphError};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use oracle::{exact_chromatic, exact_gap, greedy_upper, OracleError, OracleLimits};
pub use procedures::{
    find_far_pair, run_improved_procedure, run_main_procedure, PathWitness, Precondition,
    ProcedureError, ProcedureReport,
};
pub use walks::{augment, count_nice, enumerate_walks, AugmentedGraph, WalkOrder};
