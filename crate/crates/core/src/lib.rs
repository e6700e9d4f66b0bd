//! Exact matching preclusion toolkit for small simple graphs.
//!
//! The preclusion number of a graph is the least number of edges whose
//! deletion leaves a graph with neither a perfect nor an almost-perfect
//! matching. This crate computes it exactly with verifiable certificates,
//! generates the extremal families that attain the known bounds, and runs
//! desk-scale scans that check the published claims about it.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod constructions;
pub mod format;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod preclusion;
pub mod report;

pub use graph::{EdgeSet, Graph, GraphError, MAX_VERTICES};
pub use matching::{classify, maximum_matching, DeficiencyWitness, MatchClass, Matching};
pub use preclusion::{mp, MpResult, MpValue, PreclusionCertificate, UpperBounds};
