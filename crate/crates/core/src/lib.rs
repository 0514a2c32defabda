//! Spectral radius bounds for simple graphs.
//!
//! The crate evaluates upper and lower bounds on the largest adjacency
//! eigenvalue `μ(G)` (Turán-type bounds for `K_{r+1}`-free graphs, the
//! irregularity gap `μ - 2m/n`, and bounds for graphs without books and
//! `K_{2,l+1}`) and verifies them exhaustively over small labeled graphs or
//! graph6 catalogs.
//!
//! ```
//! use spectral_bounds::{bounds, graph};
//!
//! let c5 = graph::cycle(5).unwrap();
//! let out = bounds::th3_check(&c5, 0, 1).unwrap();
//! assert!(out.tight);
//! ```

pub mod bounds;
pub mod cli;
pub mod cliques;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod harness;
pub mod spectra;

pub use error::CheckError;
pub use graph::{Graph, GraphError};
pub use spectra::{spectral_radius, Spectrum};
