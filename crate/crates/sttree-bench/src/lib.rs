//! Workload generation and benchmark running for the dynamic forest implementations.
//!
//! [script] builds seed-deterministic operation scripts (uniformly random connectivity,
//! degenerate and noisy path queries, rooted LCA mixes); [run] replays them on the
//! implementation catalog, checksums the answers, and times the runs. The `sttree-bench`
//! binary wraps both in a command-line interface.

#![warn(missing_docs)]

pub mod run;
pub mod script;
