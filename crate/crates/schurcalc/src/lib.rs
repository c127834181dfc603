//! Command-line front end and file formats for `schurcalc-core`.
//!
//! Adds a thread-safe character table cache, JSON encodings, parallel
//! verification suites and the `schurcalc` command.

pub mod cli;
pub mod json;
pub mod suites;
pub mod tables;

pub use tables::SharedTables;
