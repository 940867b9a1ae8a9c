//! Exact spectral and structural analysis of small dense graphs.
//!
//! The crate decides eigenvalue-threshold questions (most prominently
//! "is the second largest adjacency eigenvalue at most 1?") with exact
//! integer arithmetic, tests induced-subgraph and minor containment with
//! verifiable witnesses, generates the graph families relevant to that
//! eigenvalue condition, enumerates hereditary graph classes free of
//! isomorphic duplicates, and re-derives the catalogs of extremal graphs
//! for trees, unicyclic graphs and connected triangle-free planar graphs.
//!
//! The core is `no_std` (with `alloc`); all IO, file formats and the
//! command line front end live in the companion `spectra-cli` crate.
//!
//! Everything operates on [`Graph`], a simple undirected graph on at most
//! 62 vertices stored as one adjacency bit mask per vertex.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod canon;
pub mod catalog;
pub mod embed;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod poly;
pub mod spectral;

pub use canon::CanonicalCert;
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use poly::IntPoly;
