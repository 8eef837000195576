//! File formats, wall-clock deadlines and the command line for `braidperm-core`.

pub mod cli;
pub mod clock;
pub mod format;

pub use braidperm_core as core;
