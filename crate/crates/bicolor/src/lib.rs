//! Exact construction, verification and enumeration of faithful edge
//! bicolorings of biregular bipartite graphs.
//!
//! The library has three layers:
//!
//! * generic machinery — [`graph`] holds biregular bipartite graphs with
//!   colored edges, [`coloring`] checks and enumerates faithful
//!   `(lambda, mu)`-bicolorings, [`cyclic`] builds the cyclic family and its
//!   greedy bicolor walks, [`cycles`] canonicalizes cycle words and computes
//!   permutation parities;
//! * the Kneser-graph side — [`petersen`] builds the triple system on five
//!   symbols, enumerates its 5- and 6-cycles, and realizes the two induced
//!   correspondences between graph cycles and symbol words;
//! * the puzzle dataset — [`dataset`] carries the spherical-triangle table
//!   and face lists with a machine-readable errata mechanism, builds the
//!   folded quotient graph by two independent routes, and [`solver`]
//!   enumerates the admissible piece placements, with [`import`] decoding
//!   the three published placements against the corrected dataset.
//!
//! The `bicolor` binary exposes all of it; [`cli`] contains the dispatch so
//! the whole command surface is testable in-process.

pub mod cli;
pub mod coloring;
pub mod cycles;
pub mod cyclic;
pub mod dataset;
pub mod dot;
pub mod error;
pub mod graph;
pub mod import;
pub mod petersen;
pub mod report;
pub mod solver;

pub use error::{Error, Result};
