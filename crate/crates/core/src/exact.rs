//! Exact integer linear algebra: products against graph adjacency, rank of
//! vector families and nullity of `A - λI`.
//!
//! Rank is computed by fraction-free elimination. With a `±1` pivot a row
//! operation is a plain integer `row_s - (a/p)·row_pivot`; otherwise it is a
//! cross-multiplication `p·row_s - a·row_pivot` followed by division of the
//! row by the gcd of its entries. All intermediate values stay integral and
//! rows that do not meet the pivot column are never touched. Elimination runs
//! on checked `i64`, restarts on 256-bit and then 512-bit integers if anything
//! overflows, and finally on `BigInt`.

use bnum::types::{I256, I512};
use bnum::BInt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::LoopyGraph;
use crate::limits::Limits;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    FractionFreeElimination,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
    pub method: RankMethod,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Stack `vectors` as rows.
    pub fn from_rows(vectors: &[Vec<i64>]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return invalid("empty vector list");
        };
        let cols = first.len();
        if let Some(bad) = vectors.iter().find(|v| v.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(ExactMatrix {
            rows: vectors.len(),
            cols,
            entries: vectors.concat(),
        })
    }

    /// `A - λI` for the adjacency matrix `A` of `g`.
    pub fn shifted_adjacency(g: &LoopyGraph, lambda: i64) -> Self {
        let n = g.vertex_count();
        let mut entries = g.dense_i64();
        for v in 0..n {
            entries[v * n + v] -= lambda;
        }
        ExactMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn rank(&self) -> RankCertificate {
        eliminate(self.row_vectors(|x| x))
            .or_else(|| eliminate(self.row_vectors(I256::from)))
            .or_else(|| eliminate(self.row_vectors(I512::from)))
            .or_else(|| eliminate(self.row_vectors(BigInt::from)))
            .expect("bigint elimination cannot overflow")
    }

    fn row_vectors<T>(&self, f: impl Fn(i64) -> T) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].iter().map(|&x| f(x)).collect())
            .collect()
    }
}

/// Integer type usable by the elimination. Every fallible operation returns
/// `None` on overflow.
trait EliminationScalar: Clone {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_one(&self) -> bool;
    /// `|self| < |other|`.
    fn smaller_than(&self, other: &Self) -> bool;
    /// `p·x - q·y`.
    fn cross(p: &Self, x: &Self, q: &Self, y: &Self) -> Option<Self>;
    /// `x - q·y`.
    fn sub_mul(x: &Self, q: &Self, y: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn div_exact(&self, by: &Self) -> Self;
}

impl EliminationScalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn smaller_than(&self, other: &i64) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn cross(p: &i64, x: &i64, q: &i64, y: &i64) -> Option<i64> {
        let v = (*p as i128) * (*x as i128) - (*q as i128) * (*y as i128);
        i64::try_from(v).ok().filter(|v| *v != i64::MIN)
    }
    fn sub_mul(x: &i64, q: &i64, y: &i64) -> Option<i64> {
        let v = (*x as i128) - (*q as i128) * (*y as i128);
        i64::try_from(v).ok().filter(|v| *v != i64::MIN)
    }
    fn neg(&self) -> Option<i64> {
        self.checked_neg()
    }
    fn gcd_with(&self, other: &i64) -> i64 {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &i64) -> i64 {
        self / by
    }
}

impl<const N: usize> EliminationScalar for BInt<N> {
    fn is_zero(&self) -> bool {
        BInt::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs().is_one()
    }
    fn is_one(&self) -> bool {
        BInt::is_one(self)
    }
    fn smaller_than(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn cross(p: &Self, x: &Self, q: &Self, y: &Self) -> Option<Self> {
        p.checked_mul(*x)?.checked_sub(q.checked_mul(*y)?).filter(|v| *v != Self::MIN)
    }
    fn sub_mul(x: &Self, q: &Self, y: &Self) -> Option<Self> {
        x.checked_sub(q.checked_mul(*y)?).filter(|v| *v != Self::MIN)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd_with(&self, other: &Self) -> Self {
        // operands never equal MIN, so abs cannot overflow
        let (mut a, mut b) = (self.abs(), other.abs());
        while !b.is_zero() {
            (a, b) = (b, a % b);
        }
        a
    }
    fn div_exact(&self, by: &Self) -> Self {
        *self / *by
    }
}

impl EliminationScalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn smaller_than(&self, other: &BigInt) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn cross(p: &BigInt, x: &BigInt, q: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(p * x - q * y)
    }
    fn sub_mul(x: &BigInt, q: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(x - q * y)
    }
    fn neg(&self) -> Option<BigInt> {
        Some(-self)
    }
    fn gcd_with(&self, other: &BigInt) -> BigInt {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, by: &BigInt) -> BigInt {
        self / by
    }
}

/// Column sweep. The pivot for a column is, among rows not yet used as
/// pivots, one whose entry there has the smallest nonzero absolute value
/// (lowest index on ties). `None` on overflow.
fn eliminate<T: EliminationScalar>(mut rows: Vec<Vec<T>>) -> Option<RankCertificate> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut used = vec![false; rows.len()];
    let mut pivot_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let mut pivot: Option<usize> = None;
        for r in (0..rows.len()).filter(|&r| !used[r] && !rows[r][col].is_zero()) {
            if pivot.is_none_or(|p| rows[r][col].smaller_than(&rows[p][col])) {
                pivot = Some(r);
                if rows[r][col].is_unit() {
                    break;
                }
            }
        }
        let Some(pr) = pivot else {
            continue;
        };
        used[pr] = true;
        pivot_rows.push(pr);
        pivot_cols.push(col);
        let pivot_row = std::mem::take(&mut rows[pr]);
        let p = pivot_row[col].clone();
        let support: Vec<usize> = (col + 1..cols).filter(|&c| !pivot_row[c].is_zero()).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if used[r] || row[col].is_zero() {
                continue;
            }
            if p.is_unit() {
                // row -= (a/p)·pivot_row, exact since p = ±1
                let q = if p.is_one() { row[col].clone() } else { row[col].neg()? };
                for &c in &support {
                    row[c] = T::sub_mul(&row[c], &q, &pivot_row[c])?;
                }
                row[col] = T::sub_mul(&row[col], &q, &p)?;
            } else {
                let g = p.gcd_with(&row[col]);
                let mp = p.div_exact(&g);
                let mr = row[col].div_exact(&g);
                for c in col + 1..cols {
                    if pivot_row[c].is_zero() && (row[c].is_zero() || mp.is_one()) {
                        continue;
                    }
                    row[c] = T::cross(&mp, &row[c], &mr, &pivot_row[c])?;
                }
                row[col] = T::cross(&mp, &row[col], &mr, &pivot_row[col])?;
                normalize(&mut row[col + 1..]);
            }
            debug_assert!(row[col].is_zero());
        }
        rows[pr] = pivot_row;
    }
    Some(RankCertificate {
        rank: pivot_rows.len(),
        pivot_rows,
        pivot_cols,
        method: RankMethod::FractionFreeElimination,
    })
}

/// Divide a row by the gcd of its entries.
fn normalize<T: EliminationScalar>(row: &mut [T]) {
    let mut content: Option<T> = None;
    for x in row.iter().filter(|x| !x.is_zero()) {
        let g = match &content {
            None => x.clone(),
            Some(c) => c.gcd_with(x),
        };
        if g.is_unit() {
            return;
        }
        content = Some(g);
    }
    if let Some(c) = content {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = x.div_exact(&c);
            }
        }
    }
}

/// `A·v`, each loop contributing `v(u)` once.
pub fn exact_matvec(g: &LoopyGraph, v: &[i64]) -> Result<Vec<i64>> {
    let n = g.vertex_count();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    (0..n)
        .map(|u| {
            let loops = (g.loops(u) as i64)
                .checked_mul(v[u])
                .ok_or(Error::Overflow("matrix-vector product"))?;
            g.neighbors(u).iter().try_fold(loops, |acc, &(w, m)| {
                (m as i64)
                    .checked_mul(v[w])
                    .and_then(|x| acc.checked_add(x))
                    .ok_or(Error::Overflow("matrix-vector product"))
            })
        })
        .collect()
}

/// Result of checking `A·v = λ·v` coordinate by coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenCheck {
    pub passed: bool,
    /// First coordinate where the equation fails, with both sides.
    pub first_failure: Option<CoordinateMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateMismatch {
    pub coordinate: usize,
    pub product: i64,
    pub expected: i64,
}

pub fn verify_eigenvector(g: &LoopyGraph, v: &[i64], lambda: i64) -> Result<EigenCheck> {
    if v.iter().all(|&x| x == 0) {
        return invalid("zero vector cannot witness an eigenvalue");
    }
    let product = exact_matvec(g, v)?;
    for (coordinate, (&lhs, &x)) in product.iter().zip(v).enumerate() {
        let rhs = lambda.checked_mul(x).ok_or(Error::Overflow("eigenvalue scaling"))?;
        if lhs != rhs {
            return Ok(EigenCheck {
                passed: false,
                first_failure: Some(CoordinateMismatch {
                    coordinate,
                    product: lhs,
                    expected: rhs,
                }),
            });
        }
    }
    Ok(EigenCheck {
        passed: true,
        first_failure: None,
    })
}

/// Rank over the rationals of a list of equal-length vectors.
pub fn exact_rank(vectors: &[Vec<i64>]) -> Result<RankCertificate> {
    Ok(ExactMatrix::from_rows(vectors)?.rank())
}

/// `dim ker(A - λI)` over the rationals.
pub fn exact_nullity(g: &LoopyGraph, lambda: i64, limits: &Limits) -> Result<usize> {
    let n = g.vertex_count();
    Limits::check(limits.max_exact_vertices, n as u128, format!("exact elimination on {}", g.kind()))?;
    Ok(n - ExactMatrix::shifted_adjacency(g, lambda).rank().rank)
}
