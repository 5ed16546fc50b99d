//! File formats, reports, the parallel search driver and the `kgeo` command
//! line on top of [`kgeo_core`].

pub mod checkpoint;
pub mod cli;
pub mod dot;
pub mod report;
pub mod runner;
pub mod text;

pub use kgeo_core as core;
pub use kgeo_core::cages::embedded_cages;
pub use text::{emit_digraph, parse_digraph};
