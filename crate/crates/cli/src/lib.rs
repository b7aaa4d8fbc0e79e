//! Scenario runners and report formats for the osculant CLI.
//!
//! Everything the binary can do is exposed here as a library so the
//! acceptance suite can drive the exact same code paths in-process.

pub mod report;
pub mod runners;
pub mod scenario;

pub use report::{Report, RunVerdict};
pub use scenario::Scenario;
