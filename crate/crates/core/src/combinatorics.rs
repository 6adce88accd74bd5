//! Permutations of `[n] = {1, …, n}`, repetition-free tuples and their
//! lexicographic ranking.
//!
//! All public interfaces speak 1-based values. A [`Permutation`] stores its
//! image sequence, so `images[i]` is the image of `i + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Sign of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Even,
    Odd,
}

impl Sign {
    pub fn from_parity_bit(odd: bool) -> Self {
        if odd {
            Sign::Odd
        } else {
            Sign::Even
        }
    }

    /// `+1` for even, `-1` for odd.
    pub fn value(self) -> i64 {
        match self {
            Sign::Even => 1,
            Sign::Odd => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Even => Sign::Odd,
            Sign::Odd => Sign::Even,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity_bit((self == Sign::Odd) != (rhs == Sign::Odd))
    }
}

/// A bijection of `[n]`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return invalid("permutation of an empty set");
        }
        check_distinct_in_range(&images, images.len() as u32)?;
        if images.len() as u32 as usize != images.len() {
            return invalid("permutation too large");
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    /// The transposition `(a b)` acting on `[n]`.
    pub fn transposition(n: usize, a: u32, b: u32) -> Result<Self> {
        let n32 = n as u32;
        if a == b || !(1..=n32).contains(&a) || !(1..=n32).contains(&b) {
            return invalid(format!("({a} {b}) is not a transposition of [{n}]"));
        }
        let mut p = Permutation::identity(n);
        p.images[(a - 1) as usize] = b;
        p.images[(b - 1) as usize] = a;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `π(i)` for `i ∈ [n]`.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }

    /// `π⁻¹(v)` for `v ∈ [n]`.
    pub fn preimage(&self, v: u32) -> u32 {
        self.images.iter().position(|&x| x == v).expect("value in range") as u32 + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        compose(self, other)
    }

    pub fn parity(&self) -> Sign {
        parity(self)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(Permutation {
        images: b.images.iter().map(|&x| a.apply(x)).collect(),
    })
}

/// Parity from the cycle count: `sign = (-1)^(n - cycles)`.
pub fn parity(p: &Permutation) -> Sign {
    let n = p.n();
    let mut seen = vec![false; n];
    let mut cycles = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = (p.images[i] - 1) as usize;
        }
    }
    Sign::from_parity_bit((n - cycles) % 2 == 1)
}

/// Parity of an arrangement of distinct values relative to their sorted
/// order (inversion count mod 2).
pub fn arrangement_parity(seq: &[u32]) -> Sign {
    let mut odd = false;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                odd = !odd;
            }
        }
    }
    Sign::from_parity_bit(odd)
}

/// The permutation `π_c` defined by `π_c(c_j) = j`.
pub fn permutation_from_tuple(c: &[u32]) -> Result<Permutation> {
    let n = c.len();
    if n == 0 {
        return invalid("empty tuple");
    }
    check_distinct_in_range(c, n as u32)?;
    let mut images = vec![0; n];
    for (j, &cj) in c.iter().enumerate() {
        images[(cj - 1) as usize] = j as u32 + 1;
    }
    Ok(Permutation { images })
}

/// The star transposition `(1 i)` on `[n]`, `2 ≤ i ≤ n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarTransposition {
    moved: u32,
    n: u32,
}

impl StarTransposition {
    pub fn new(moved: u32, n: usize) -> Result<Self> {
        if moved < 2 || moved as usize > n {
            return invalid(format!("(1 {moved}) is not a star transposition of [{n}]"));
        }
        Ok(StarTransposition { moved, n: n as u32 })
    }

    /// All of `(1 2), (1 3), …, (1 n)`.
    pub fn all(n: usize) -> impl Iterator<Item = StarTransposition> {
        (2..=n as u32).map(move |moved| StarTransposition { moved, n: n as u32 })
    }

    /// The value other than 1 that this transposition moves.
    pub fn moved(&self) -> u32 {
        self.moved
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn apply_value(&self, v: u32) -> u32 {
        if v == 1 {
            self.moved
        } else if v == self.moved {
            1
        } else {
            v
        }
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::transposition(self.n as usize, 1, self.moved).expect("valid star transposition")
    }
}

/// A repetition-free `d`-tuple over `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DTuple {
    entries: Vec<u32>,
    n: u32,
}

impl DTuple {
    pub fn new(entries: Vec<u32>, n: usize) -> Result<Self> {
        if entries.is_empty() || entries.len() > n {
            return invalid(format!(
                "tuple length {} must lie in 1..={n}",
                entries.len()
            ));
        }
        check_distinct_in_range(&entries, n as u32)?;
        Ok(DTuple {
            entries,
            n: n as u32,
        })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn contains(&self, v: u32) -> bool {
        self.entries.contains(&v)
    }

    /// Substitute values under the transposition: 1 ↔ `t.moved()`.
    pub fn apply_transposition(&self, t: StarTransposition) -> Result<DTuple> {
        apply_transposition(t, self)
    }
}

impl fmt::Display for DTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub fn apply_transposition(t: StarTransposition, x: &DTuple) -> Result<DTuple> {
    if t.n != x.n {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: t.n(),
        });
    }
    Ok(DTuple {
        entries: x.entries.iter().map(|&v| t.apply_value(v)).collect(),
        n: x.n,
    })
}

/// Position of a tuple in the lexicographic enumeration of all
/// repetition-free `d`-tuples over `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TupleRank(pub usize);

/// `n! / (n-d)!`, or `None` on overflow.
pub fn falling_factorial(n: usize, d: usize) -> Option<u128> {
    if d > n {
        return Some(0);
    }
    (n - d + 1..=n).try_fold(1u128, |acc, x| acc.checked_mul(x as u128))
}

pub fn factorial(n: usize) -> Option<u128> {
    falling_factorial(n, n)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of repetition-free `d`-tuples over `[n]`, checked to fit `usize`.
pub fn tuple_count(d: usize, n: usize) -> Result<usize> {
    falling_factorial(n, d)
        .and_then(|c| usize::try_from(c).ok())
        .ok_or(Error::Overflow("tuple count"))
}

pub fn rank_tuple(x: &DTuple) -> TupleRank {
    let n = x.n();
    let d = x.d();
    let mut used = vec![false; n + 1];
    let mut rank = 0usize;
    for (i, &e) in x.entries.iter().enumerate() {
        let smaller_free = (1..e).filter(|&v| !used[v as usize]).count();
        // remaining d-i-1 positions drawn from n-i-1 values
        let block = falling_factorial(n - i - 1, d - i - 1).expect("rank fits") as usize;
        rank += smaller_free * block;
        used[e as usize] = true;
    }
    TupleRank(rank)
}

pub fn unrank_tuple(r: TupleRank, d: usize, n: usize) -> Result<DTuple> {
    if d == 0 || d > n {
        return invalid(format!("tuple length {d} must lie in 1..={n}"));
    }
    let total = tuple_count(d, n)?;
    if r.0 >= total {
        return invalid(format!("rank {} out of range for {total} tuples", r.0));
    }
    let mut free: Vec<u32> = (1..=n as u32).collect();
    let mut rest = r.0;
    let mut entries = Vec::with_capacity(d);
    for i in 0..d {
        let block = falling_factorial(n - i - 1, d - i - 1).expect("fits") as usize;
        let idx = rest / block;
        rest %= block;
        entries.push(free.remove(idx));
    }
    Ok(DTuple {
        entries,
        n: n as u32,
    })
}

/// All repetition-free `d`-tuples over `[n]` in rank order.
pub fn enumerate_tuples(d: usize, n: usize) -> Result<Vec<DTuple>> {
    if d == 0 || d > n {
        return invalid(format!("tuple length {d} must lie in 1..={n}"));
    }
    let total = tuple_count(d, n)?;
    let mut out = Vec::with_capacity(total);
    let mut current: Vec<u32> = (1..=d as u32).collect();
    let mut used = vec![false; n + 1];
    for &v in &current {
        used[v as usize] = true;
    }
    loop {
        out.push(DTuple {
            entries: current.clone(),
            n: n as u32,
        });
        // advance to the lexicographic successor
        let mut pos = d;
        loop {
            if pos == 0 {
                debug_assert_eq!(out.len(), total);
                return Ok(out);
            }
            pos -= 1;
            let old = current[pos];
            used[old as usize] = false;
            if let Some(next) = (old + 1..=n as u32).find(|&v| !used[v as usize]) {
                current[pos] = next;
                used[next as usize] = true;
                for slot in current.iter_mut().skip(pos + 1) {
                    let v = (1..=n as u32).find(|&v| !used[v as usize]).expect("enough values");
                    *slot = v;
                    used[v as usize] = true;
                }
                break;
            }
        }
    }
}

fn check_distinct_in_range(values: &[u32], n: u32) -> Result<()> {
    let mut seen = vec![false; n as usize + 1];
    for &v in values {
        if v == 0 || v > n {
            return invalid(format!("value {v} outside [1, {n}]"));
        }
        if std::mem::replace(&mut seen[v as usize], true) {
            return invalid(format!("repeated value {v}"));
        }
    }
    Ok(())
}
