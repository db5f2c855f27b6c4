//! Support library for the `qmeixner` binary: exact decimal rendering,
//! reference tables, parameter grids, verification suites and report
//! serialization.

pub mod commands;
pub mod grid;
pub mod render;
pub mod report;
pub mod suites;
pub mod table;
