use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest Cayley graph built by default: n = 7.
pub const DEFAULT_MAX_GRAPH_VERTICES: usize = 5040;
/// Largest matrix handed to exact elimination by default (Cayley graph at n = 6).
pub const DEFAULT_MAX_EXACT_VERTICES: usize = 720;
/// Largest matrix handed to the Jacobi solver by default.
pub const DEFAULT_MAX_NUMERIC_VERTICES: usize = 1000;

/// Size limits for graph construction, exact elimination and the numeric solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_graph_vertices: usize,
    pub max_exact_vertices: usize,
    pub max_numeric_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_graph_vertices: DEFAULT_MAX_GRAPH_VERTICES,
            max_exact_vertices: DEFAULT_MAX_EXACT_VERTICES,
            max_numeric_vertices: DEFAULT_MAX_NUMERIC_VERTICES,
        }
    }
}

impl Limits {
    /// Raise (or lower) every limit to `max_vertices`.
    pub fn uniform(max_vertices: usize) -> Self {
        Limits {
            max_graph_vertices: max_vertices,
            max_exact_vertices: max_vertices,
            max_numeric_vertices: max_vertices,
        }
    }

    pub(crate) fn check(limit: usize, required: u128, what: impl Into<String>) -> Result<usize> {
        if required > limit as u128 {
            return Err(Error::Capacity {
                what: what.into(),
                required,
                limit,
            });
        }
        Ok(required as usize)
    }
}

/// Rough peak memory in bytes for working with a `vertices`-vertex graph:
/// dense `u8` adjacency, a dense `f64` copy for the numeric solver and a
/// dense `i64` elimination matrix.
pub fn memory_estimate_bytes(vertices: usize) -> u128 {
    let v2 = (vertices as u128) * (vertices as u128);
    v2 * (1 + 8 + 8)
}
