//! Command-line front end for `latvert-core`: input parsing, stable text and
//! JSON output, and the registry of reproducible worked examples.

pub mod app;
pub mod input;
pub mod reproduce;

pub use app::{run, Cli, Outcome, EXIT_BUDGET, EXIT_FAILED, EXIT_INVALID, EXIT_OK};
