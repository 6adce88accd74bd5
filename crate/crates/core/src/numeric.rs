//! Floating-point spectra by cyclic Jacobi rotations, and clustering of the
//! result to integers.
//!
//! Nothing here feeds the exact certificates; it is an independent check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LoopyGraph;
use crate::limits::Limits;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Sweeps stop once the off-diagonal Frobenius norm falls below this
/// fraction of its initial value.
pub const JACOBI_RELATIVE_OFF_NORM: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of `g`'s adjacency matrix, ascending.
pub fn dense_symmetric_eigenvalues(g: &LoopyGraph, limits: &Limits) -> Result<Vec<f64>> {
    let n = g.vertex_count();
    Limits::check(limits.max_numeric_vertices, n as u128, format!("dense eigensolver on {}", g.kind()))?;
    let matrix = g.dense_i64().into_iter().map(|x| x as f64).collect();
    jacobi_eigenvalues(matrix, n)
}

/// Eigenvalues of a symmetric `n × n` row-major matrix, ascending.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            found: a.len(),
        });
    }
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += a[p * n + q] * a[p * n + q];
            }
        }
        (2.0 * s).sqrt()
    };
    let initial = off_norm(&a);
    let target = initial * JACOBI_RELATIVE_OFF_NORM;
    let mut sweeps = 0;
    while initial > 0.0 && off_norm(&a) >= target && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(eigenvalues)
}

/// Eigenvalues rounding to the same integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub value: i64,
    pub count: usize,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<Cluster>,
    pub integral: bool,
    pub tolerance: f64,
}

impl SpectrumReport {
    /// Numeric multiplicity of the integer `lambda` (0 if no cluster).
    pub fn multiplicity(&self, lambda: i64) -> usize {
        self.clusters
            .iter()
            .find(|c| c.value == lambda)
            .map_or(0, |c| c.count)
    }
}

/// Round every eigenvalue to the nearest integer and group; integral iff
/// every deviation is below `tolerance`.
pub fn integrality_check(spectrum: &[f64], tolerance: f64) -> SpectrumReport {
    let mut eigenvalues = spectrum.to_vec();
    eigenvalues.sort_by(f64::total_cmp);
    let mut clusters: Vec<Cluster> = Vec::new();
    for &x in &eigenvalues {
        let value = x.round() as i64;
        let deviation = (x - x.round()).abs();
        match clusters.last_mut() {
            Some(c) if c.value == value => {
                c.count += 1;
                c.max_deviation = c.max_deviation.max(deviation);
            }
            _ => clusters.push(Cluster {
                value,
                count: 1,
                max_deviation: deviation,
            }),
        }
    }
    let integral = clusters.iter().all(|c| c.max_deviation < tolerance);
    SpectrumReport {
        eigenvalues,
        clusters,
        integral,
        tolerance,
    }
}
