//! Command-line front end: generate instances, solve them, verify
//! solutions and run the timing suites.
//!
//! Exit codes: 0 ok, 1 unreadable or malformed input, 2 bad flags,
//! 3 exact-search size limit, 4 invalid solution, 5 benchmark or regression
//! failure.

pub mod commands;
pub mod formats;

pub use commands::{run, Cli, Failure};
