//! Scheduling by reduction.
//!
//! Hospital bed assignment is solved exactly as a maximum flow over a
//! unit-capacity bipartite network ([`hospital`], [`maxflow`]). Course
//! scheduling is graph coloring, approximated with Welsh-Powell and DSatur
//! and checked against an exact search on small graphs ([`coloring`]).
//! [`generators`] builds seeded random instances and [`bench`] times the
//! solvers and fits their empirical growth rate.

pub mod bench;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hospital;
pub mod maxflow;
pub mod report;

pub use coloring::{
    dsatur, exact_chromatic_number, exact_coloring, validate_assignment, validate_coloring, welsh_powell, Coloring,
};
pub use error::{Error, Result};
pub use generators::{gen_conflict_graph, gen_hospital, GenConfig};
pub use graph::{ConflictGraph, Edge, FlowNetwork};
pub use hospital::{Assignment, Bed, HospitalInstance, Patient};
pub use maxflow::{max_flow, FlowResult, ResidualState};
pub use report::ValidationReport;
