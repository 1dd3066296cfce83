//! Independence-number lower bounds for graphs with a prescribed number of
//! s-cliques, made concrete.
//!
//! - [`graph`], [`generate`], [`io`]: bitset graphs, random and named
//!   generators, DIMACS and edge-list files.
//! - [`clique`]: exact global and per-vertex s-clique counts.
//! - [`bounds`]: the two-regime bounds, the triangle-aware bound, and the
//!   constants that make the induction go through.
//! - [`indep`]: independent-set algorithms that follow each case of the
//!   arguments, plus an exact branch-and-bound oracle.
//! - [`constructions`]: graphs showing the triangle bounds are tight.
//! - [`harness`]: reports, sweeps, and CSV output behind the CLI.

pub mod bounds;
pub mod clique;
pub mod constructions;
pub mod error;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod indep;
pub mod io;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use rng::Rng;
