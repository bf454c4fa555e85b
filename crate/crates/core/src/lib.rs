//! Spectral inertia-type bounds on the k-independence number and the
//! distance-k chromatic number of a graph.

#![allow(clippy::needless_range_loop)]

pub mod alpha;
pub mod catalog;
pub mod chi;
pub mod error;
pub mod feasibility;
pub mod graph;
pub mod milp;
pub mod oracles;
pub mod polynomial;
pub mod profile;
pub mod report;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::Graph;
pub use polynomial::Polynomial;
pub use profile::DiagonalProfile;
pub use spectra::{DistinctSpectrum, Spectrum};
