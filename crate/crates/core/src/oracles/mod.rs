//! Brute-force ground truth used to validate the spectral bounds.

mod coloring;
mod grid;
mod mis;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use grid::grid_search_bound;

/// Bitset limit of the exact solvers.
pub const MAX_ORACLE_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_seconds: f64,
    /// Filled in when a computation is skipped.
    pub note: Option<String>,
}

impl OracleBudget {
    pub fn new(max_vertices: usize, max_seconds: f64) -> Self {
        OracleBudget { max_vertices, max_seconds, note: None }
    }

    /// Default for independence numbers: up to 30 vertices.
    pub fn alpha_default() -> Self {
        OracleBudget::new(30, 60.0)
    }

    /// Default for chromatic numbers: up to 20 vertices.
    pub fn chi_default() -> Self {
        OracleBudget::new(20, 60.0)
    }

    fn admit(&mut self, g: &Graph) -> Result<Deadline> {
        let n = g.vertex_count();
        let limit = self.max_vertices.min(MAX_ORACLE_VERTICES);
        if n > limit {
            return Err(self.skip(format!("{n} vertices exceed the oracle budget of {limit}")));
        }
        Ok(Deadline(Instant::now() + Duration::from_secs_f64(self.max_seconds.max(0.0))))
    }

    fn skip(&mut self, note: String) -> Error {
        self.note = Some(note.clone());
        Error::Skipped { note }
    }
}

#[derive(Clone, Copy)]
pub(crate) struct Deadline(Instant);

impl Deadline {
    pub(crate) fn passed(&self) -> bool {
        Instant::now() > self.0
    }
}

pub(crate) fn neighbor_masks(g: &Graph) -> Vec<u128> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | (1u128 << w)))
        .collect()
}

/// `alpha(G^k)`: the largest set of vertices pairwise at distance above `k`.
pub fn exact_alpha_k(g: &Graph, k: usize, budget: &mut OracleBudget) -> Result<usize> {
    let deadline = budget.admit(g)?;
    let h = g.power(k)?;
    mis::maximum_independent_set(&neighbor_masks(&h), deadline)
        .ok_or_else(|| budget.skip(format!("independence search exceeded {} s", budget.max_seconds)))
}

/// `chi(G^k)`: fewest colors with distinct colors within distance `k`.
pub fn exact_chi_k(g: &Graph, k: usize, budget: &mut OracleBudget) -> Result<usize> {
    let deadline = budget.admit(g)?;
    let h = g.power(k)?;
    coloring::chromatic_number(&neighbor_masks(&h), deadline)
        .ok_or_else(|| budget.skip(format!("coloring search exceeded {} s", budget.max_seconds)))
}
