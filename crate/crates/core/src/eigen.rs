//! Explicit eigenvector families.
//!
//! * [`build_independent_family`]: `C(n-1, d)` index sets `I ⊆ [n]` of size
//!   `d + 1` whose tuple sets `A_I` are independent (every subfamily has a
//!   tuple lying in exactly one member).
//! * [`signed_vector_phi`]: `±1` on the tuples with entries in `I`, split by
//!   the bipartition of that induced copy of `partial(d, d+1)`, `0` elsewhere.
//!   These sum to zero on every maximal clique of `partial(d, n)`.
//! * [`build_schreier_eigenvectors`]: the signed family over the values
//!   `{2, …, n}`, placed on the `k`-tuples avoiding 1 of `schreier(k, n)` and
//!   extended by zero; eigenvalue `n - k - 1`.
//! * [`lift_along_projection`], [`negate_on_bipartition`]: pull back along a
//!   vertex map, flip sign on one colour class.
//! * [`build_zero_eigenbasis`]: `x_ij = α_i β_j + α_j β_i` on `k2(n)`.
//!
//! The signed and Schreier families end with an exact rank check; a family
//! that builds but misses its rank is an error. The `k2(n)` zero basis only
//! spans `C(n-1, 2) - 1` dimensions (the whole zero eigenspace of `k2(n)`),
//! so its rank is reported to the caller instead of being enforced.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{arrangement_parity, binomial};
use crate::error::{invalid, Error, Result};
use crate::exact::{exact_rank, verify_eigenvector};
use crate::graph::{
    build, FamilyTag, GraphKind, LoopyGraph, TwoColoring, VertexMap,
};
use crate::limits::Limits;

/// Largest family [`verify_independence`] will check subset by subset.
pub const EXHAUSTIVE_FAMILY_LIMIT: usize = 20;

/// An ordered list of `(d+1)`-subsets of `[n]`, each stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexFamily {
    pub n: usize,
    pub d: usize,
    pub sets: Vec<Vec<u32>>,
}

impl IndexFamily {
    pub fn new(n: usize, d: usize, sets: Vec<Vec<u32>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(sets.len());
        for mut set in sets {
            set.sort_unstable();
            set.dedup();
            if set.len() != d + 1 || set.iter().any(|&v| v == 0 || v as usize > n) {
                return invalid(format!("{set:?} is not a {}-subset of [{n}]", d + 1));
            }
            if normalized.contains(&set) {
                return invalid(format!("duplicate set {set:?}"));
            }
            normalized.push(set);
        }
        Ok(IndexFamily {
            n,
            d,
            sets: normalized,
        })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Integer vector on the vertices of one graph, optionally claimed to be an
/// eigenvector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedVector {
    pub graph: GraphKind,
    /// Human-readable identity used in reports, e.g. `phi{1,2,4}`.
    pub id: String,
    pub values: Vec<i64>,
    pub eigenvalue: Option<i64>,
}

impl SignedVector {
    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|&&x| x != 0).count()
    }

    /// Check the claimed eigenvalue exactly on `g`.
    pub fn verify_on(&self, g: &LoopyGraph) -> Result<()> {
        if g.kind() != self.graph {
            return invalid(format!("{} lives on {}, not on {}", self.id, self.graph, g.kind()));
        }
        let Some(lambda) = self.eigenvalue else {
            return invalid(format!("{} carries no eigenvalue claim", self.id));
        };
        let check = verify_eigenvector(g, &self.values, lambda)?;
        match check.first_failure {
            None => Ok(()),
            Some(m) => Err(Error::VerificationFailed {
                vector: self.id.clone(),
                detail: format!(
                    "(A·v)[{}] = {} but {}·v[{}] = {}",
                    m.coordinate, m.product, lambda, m.coordinate, m.expected
                ),
            }),
        }
    }
}

/// Exact rank of a list of vectors, `0` for an empty list.
pub fn family_rank(vectors: &[SignedVector]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    let rows: Vec<Vec<i64>> = vectors.iter().map(|v| v.values.clone()).collect();
    Ok(exact_rank(&rows)?.rank)
}

fn require_rank(vectors: &[SignedVector], expected: usize, what: &str) -> Result<()> {
    let rank = family_rank(vectors)?;
    if rank != expected {
        return Err(Error::VerificationFailed {
            vector: what.to_string(),
            detail: format!("exact rank {rank}, expected {expected}"),
        });
    }
    Ok(())
}

fn set_id(prefix: &str, set: &[u32]) -> String {
    let inner: Vec<String> = set.iter().map(u32::to_string).collect();
    format!("{prefix}{{{}}}", inner.join(","))
}

/// Recursive construction: `{1,2}, …, {1,n}` for `d = 1`; `[n]` for
/// `d = n - 1`; otherwise the family for `(n-1, d)` followed by the family
/// for `(n-1, d-1)` with `n` added to every set.
pub fn build_independent_family(n: usize, d: usize) -> Result<IndexFamily> {
    if d < 1 || d >= n {
        return invalid(format!("independent family needs 1 <= d < n, got d={d}, n={n}"));
    }
    let sets = independent_sets(n, d);
    debug_assert_eq!(sets.len() as u128, binomial(n - 1, d));
    IndexFamily::new(n, d, sets)
}

fn independent_sets(n: usize, d: usize) -> Vec<Vec<u32>> {
    if d == 1 {
        return (2..=n as u32).map(|i| vec![1, i]).collect();
    }
    if d == n - 1 {
        return vec![(1..=n as u32).collect()];
    }
    let mut sets = independent_sets(n - 1, d);
    sets.extend(independent_sets(n - 1, d - 1).into_iter().map(|mut s| {
        s.push(n as u32);
        s
    }));
    sets
}

/// Exhaustive independence check over all non-empty subfamilies.
///
/// Which sets contain a `d`-tuple depends only on the tuple's underlying
/// `d`-subset, so each tuple class is represented by one membership bitmask.
pub fn verify_independence(fam: &IndexFamily) -> Result<bool> {
    let m = fam.len();
    if m > EXHAUSTIVE_FAMILY_LIMIT {
        return Err(Error::Capacity {
            what: "exhaustive independence check".into(),
            required: 1u128 << m.min(127),
            limit: 1 << EXHAUSTIVE_FAMILY_LIMIT,
        });
    }
    // every d-subset lying in some member is a member minus one element
    let mut masks: Vec<u32> = Vec::new();
    for set in &fam.sets {
        for skip in 0..set.len() {
            let sub: Vec<u32> = set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            let mask = fam
                .sets
                .iter()
                .enumerate()
                .filter(|(_, other)| sub.iter().all(|v| other.contains(v)))
                .fold(0u32, |acc, (i, _)| acc | (1 << i));
            masks.push(mask);
        }
    }
    masks.sort_unstable();
    masks.dedup();
    // singleton masks settle most subfamilies immediately
    masks.sort_by_key(|mask| mask.count_ones());
    let all_have_unique = (1u32..(1u32 << m)).all(|sub| masks.iter().any(|&mask| (mask & sub).count_ones() == 1));
    Ok(all_have_unique)
}

/// `±1` on tuples with all entries in `set`, `0` elsewhere. A tuple gets the
/// sign of the arrangement of `set` formed by prepending the one element of
/// `set` it misses; even arrangements get `+1`.
pub fn signed_vector_phi(set: &[u32], g: &LoopyGraph) -> Result<SignedVector> {
    let GraphKind::Partial { d, n } = g.kind() else {
        return invalid(format!("phi vectors live on partial permutation graphs, not {}", g.kind()));
    };
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != d + 1 || sorted.iter().any(|&v| v == 0 || v as usize > n) {
        return invalid(format!("{set:?} is not a {}-subset of [{n}]", d + 1));
    }
    let values = g
        .labels()
        .iter()
        .map(|label| {
            let t = label.values();
            if !t.iter().all(|v| sorted.contains(v)) {
                return 0;
            }
            let missing = *sorted.iter().find(|v| !t.contains(v)).expect("one element missing");
            let mut arrangement = Vec::with_capacity(d + 1);
            arrangement.push(missing);
            arrangement.extend_from_slice(t);
            arrangement_parity(&arrangement).value()
        })
        .collect();
    Ok(SignedVector {
        graph: g.kind(),
        id: set_id("phi", &sorted),
        values,
        eigenvalue: None,
    })
}

/// `phi` for every set of the independent family on `g = partial(d, n)`,
/// certified to have exact rank `C(n-1, d)`.
pub fn signed_family_on(g: &LoopyGraph) -> Result<Vec<SignedVector>> {
    let GraphKind::Partial { d, n } = g.kind() else {
        return invalid(format!("signed family lives on a partial permutation graph, not {}", g.kind()));
    };
    let fam = build_independent_family(n, d)?;
    let vectors = fam
        .sets
        .iter()
        .map(|set| signed_vector_phi(set, g))
        .collect::<Result<Vec<_>>>()?;
    require_rank(&vectors, binomial(n - 1, d) as usize, &format!("signed family on {}", g.kind()))?;
    Ok(vectors)
}

pub fn build_signed_family(n: usize, d: usize) -> Result<Vec<SignedVector>> {
    if d < 1 || d >= n {
        return invalid(format!("signed family needs 1 <= d < n, got d={d}, n={n}"));
    }
    signed_family_on(&build(GraphKind::Partial { d, n }, &Limits::default())?)
}

/// Eigenvectors for `n - k - 1` on `g = schreier(k, n)`, `1 <= k <= n - 2`.
///
/// The tuples avoiding 1 carry the signed family of `partial(k, n-1)` over
/// the values `{2, …, n}` (shift every entry down by one); tuples containing
/// 1 get 0. Each vector is verified exactly and the family has exact rank
/// `C(n-2, k)`.
pub fn schreier_eigenvectors_on(g: &LoopyGraph, limits: &Limits) -> Result<Vec<SignedVector>> {
    let GraphKind::Schreier { k, n } = g.kind() else {
        return invalid(format!("expected a schreier graph, got {}", g.kind()));
    };
    if k + 2 > n {
        return invalid(format!("schreier eigenvectors need 1 <= k <= n-2, got k={k}, n={n}"));
    }
    let aux = build(GraphKind::Partial { d: k, n: n - 1 }, limits)?;
    let fam = build_independent_family(n - 1, k)?;
    if fam.len() <= EXHAUSTIVE_FAMILY_LIMIT && !verify_independence(&fam)? {
        return Err(Error::VerificationFailed {
            vector: format!("independent family ({}, {k})", n - 1),
            detail: "some subfamily has no unique tuple".into(),
        });
    }
    let base = signed_family_on(&aux)?;
    // position in the schreier graph of each auxiliary vertex
    let placement = aux
        .labels()
        .iter()
        .map(|label| {
            let shifted: Vec<u32> = label.values().iter().map(|v| v + 1).collect();
            g.index_of(&shifted)
        })
        .collect::<Result<Vec<_>>>()?;
    let lambda = (n - k - 1) as i64;
    let vectors = base
        .into_iter()
        .zip(&fam.sets)
        .map(|(phi, set)| {
            let mut values = vec![0i64; g.vertex_count()];
            for (aux_v, &x) in phi.values.iter().enumerate() {
                values[placement[aux_v]] = x;
            }
            let shifted: Vec<u32> = set.iter().map(|v| v + 1).collect();
            let v = SignedVector {
                graph: g.kind(),
                id: set_id(&format!("schreier(k={k})/phi"), &shifted),
                values,
                eigenvalue: Some(lambda),
            };
            v.verify_on(g)?;
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    require_rank(&vectors, binomial(n - 2, k) as usize, &format!("eigenvectors on {}", g.kind()))?;
    Ok(vectors)
}

pub fn build_schreier_eigenvectors(k: usize, n: usize) -> Result<Vec<SignedVector>> {
    let limits = Limits::default();
    let g = build(GraphKind::Schreier { k, n }, &limits)?;
    schreier_eigenvectors_on(&g, &limits)
}

/// Pull back: `lifted(u) = v(map(u))` on the domain graph `top`.
pub fn lift_along_projection(v: &SignedVector, map: &VertexMap, top: &LoopyGraph) -> Result<SignedVector> {
    map.validate()?;
    if v.graph != map.codomain {
        return invalid(format!("{} lives on {}, map lands on {}", v.id, v.graph, map.codomain));
    }
    if top.kind() != map.domain {
        return invalid(format!("map starts at {}, top graph is {}", map.domain, top.kind()));
    }
    if v.values.len() != map.codomain_size {
        return Err(Error::DimensionMismatch {
            expected: map.codomain_size,
            found: v.values.len(),
        });
    }
    if top.vertex_count() != map.domain_size {
        return Err(Error::DimensionMismatch {
            expected: map.domain_size,
            found: top.vertex_count(),
        });
    }
    Ok(SignedVector {
        graph: top.kind(),
        id: format!("lift({})", v.id),
        values: map.assignment.iter().map(|&b| v.values[b]).collect(),
        eigenvalue: v.eigenvalue,
    })
}

/// Keep `v` on the `+1` class, negate it on the `-1` class; the claimed
/// eigenvalue changes sign.
pub fn negate_on_bipartition(v: &SignedVector, g: &LoopyGraph, coloring: &TwoColoring) -> Result<SignedVector> {
    if g.has_loops() {
        return invalid(format!("{} has loops; sign flipping does not preserve eigenvectors", g.kind()));
    }
    if v.graph != g.kind() {
        return invalid(format!("{} lives on {}, not on {}", v.id, v.graph, g.kind()));
    }
    if coloring.colors.len() != v.values.len() || v.values.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: v.values.len(),
            found: coloring.colors.len(),
        });
    }
    Ok(SignedVector {
        graph: v.graph,
        id: match v.id.strip_prefix("neg(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("neg({})", v.id),
        },
        values: v
            .values
            .iter()
            .zip(&coloring.colors)
            .map(|(&x, &c)| x * c as i64)
            .collect(),
        eigenvalue: v.eigenvalue.map(|l| -l),
    })
}

/// Disjoint `A, B ⊆ [n]` with integer weights: `alpha` nonzero exactly on
/// `A`, `beta` exactly on `B`, each summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportPair {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    /// `alpha[i - 1] = α_i`.
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl SupportPair {
    /// Two-element supports weighted `+1` on the smaller element and `-1`
    /// on the larger.
    pub fn from_pairs(n: usize, a: [u32; 2], b: [u32; 2]) -> Result<Self> {
        let weights = |set: [u32; 2]| {
            let mut w = vec![0i64; n];
            let (lo, hi) = (set[0].min(set[1]), set[0].max(set[1]));
            w[(lo - 1) as usize] = 1;
            w[(hi - 1) as usize] = -1;
            w
        };
        for v in a.iter().chain(&b) {
            if *v == 0 || *v as usize > n {
                return invalid(format!("support element {v} outside [1, {n}]"));
            }
        }
        let mut a_sorted = a.to_vec();
        a_sorted.sort_unstable();
        let mut b_sorted = b.to_vec();
        b_sorted.sort_unstable();
        let pair = SupportPair {
            alpha: weights(a),
            beta: weights(b),
            a: a_sorted,
            b: b_sorted,
        };
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.alpha.len();
        if self.beta.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.beta.len(),
            });
        }
        if self.a.len() < 2 || self.b.len() < 2 {
            return invalid("supports need at least two elements each");
        }
        if self.a.iter().any(|v| self.b.contains(v)) {
            return invalid(format!("supports {:?} and {:?} intersect", self.a, self.b));
        }
        for (weights, support, name) in [(&self.alpha, &self.a, "alpha"), (&self.beta, &self.b, "beta")] {
            for (i, &w) in weights.iter().enumerate() {
                if (w != 0) != support.contains(&(i as u32 + 1)) {
                    return invalid(format!("{name} is not supported exactly on {support:?}"));
                }
            }
            if weights.iter().sum::<i64>() != 0 {
                return invalid(format!("{name} does not sum to zero"));
            }
        }
        Ok(())
    }

    /// `x_ij = α_i β_j + α_j β_i` on the vertices of `g = k2(n)`.
    pub fn vector_on(&self, g: &LoopyGraph) -> Result<SignedVector> {
        if g.kind() != (GraphKind::K2 { n: self.alpha.len() }) {
            return invalid(format!("support pair over [{}] does not fit {}", self.alpha.len(), g.kind()));
        }
        let values = g
            .labels()
            .iter()
            .map(|label| {
                let (i, j) = ((label.values()[0] - 1) as usize, (label.values()[1] - 1) as usize);
                self.alpha[i] * self.beta[j] + self.alpha[j] * self.beta[i]
            })
            .collect();
        Ok(SignedVector {
            graph: g.kind(),
            id: format!("x[A={:?},B={:?}]", self.a, self.b),
            values,
            eigenvalue: Some(0),
        })
    }
}

/// Support pairs spanning a `C(n-1, 2)`-dimensional zero eigenspace of `k2(n)`.
///
/// `n = 4`: `A = {1,4}, {2,4}, {3,4}` against the complementary pair.
/// `n ≥ 5`: the pairs for `n - 1`, then `A = {1,n-1}, B = {2,n}` and
/// `A = {1,n}, B = {k,n-1}` for `2 ≤ k ≤ n-2`. Among the coordinates
/// `(1,n), …, (n-2,n)` the `k`-th new vector is nonzero only at `(k,n)`,
/// while the older vectors vanish on all of them.
pub fn zero_support_pairs(n: usize) -> Result<Vec<SupportPair>> {
    if n < 4 {
        return invalid(format!("zero eigenbasis needs n >= 4, got {n}"));
    }
    if n == 4 {
        return [([1, 4], [2, 3]), ([2, 4], [1, 3]), ([3, 4], [1, 2])]
            .into_iter()
            .map(|(a, b)| SupportPair::from_pairs(4, a, b))
            .collect();
    }
    let mut pairs: Vec<SupportPair> = zero_support_pairs(n - 1)?
        .into_iter()
        .map(|p| SupportPair::from_pairs(n, [p.a[0], p.a[1]], [p.b[0], p.b[1]]))
        .collect::<Result<_>>()?;
    let top = n as u32;
    pairs.push(SupportPair::from_pairs(n, [1, top - 1], [2, top])?);
    for k in 2..=top - 2 {
        pairs.push(SupportPair::from_pairs(n, [1, top], [k, top - 1])?);
    }
    Ok(pairs)
}

/// Zero-eigenvectors on `g = k2(n)`, one per support pair, each verified
/// exactly.
///
/// The three `n = 4` vectors satisfy `x₁ - x₂ + x₃ = 0`, so the family has
/// exact rank `C(n-1, 2) - 1`, which equals the nullity of `k2(n)` at 0.
pub fn zero_eigenbasis_on(g: &LoopyGraph) -> Result<Vec<SignedVector>> {
    if g.family() != FamilyTag::K2 {
        return invalid(format!("zero eigenbasis lives on k2, not {}", g.kind()));
    }
    let n = g.kind().n();
    let vectors = zero_support_pairs(n)?
        .iter()
        .map(|pair| {
            let v = pair.vector_on(g)?;
            v.verify_on(g)?;
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(vectors)
}

pub fn build_zero_eigenbasis(n: usize) -> Result<Vec<SignedVector>> {
    if n < 4 {
        return invalid(format!("zero eigenbasis needs n >= 4, got {n}"));
    }
    zero_eigenbasis_on(&build(GraphKind::K2 { n }, &Limits::default())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::exact_nullity;
    use crate::graph::{
        bipartition, build_cayley_star, build_k2, build_partial_permutation, build_schreier,
        covering_projection, maximal_cliques_partial, schreier_projection,
    };

    #[test]
    fn independent_family_examples() {
        assert_eq!(build_independent_family(3, 1).unwrap().sets, vec![vec![1, 2], vec![1, 3]]);
        assert_eq!(build_independent_family(4, 3).unwrap().sets, vec![vec![1, 2, 3, 4]]);
        assert_eq!(
            build_independent_family(4, 2).unwrap().sets,
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]
        );
        assert!(build_independent_family(4, 4).is_err());
        assert!(build_independent_family(4, 0).is_err());
    }

    #[test]
    fn independence_examples() {
        assert!(verify_independence(&build_independent_family(4, 2).unwrap()).unwrap());
        let all = IndexFamily::new(3, 1, vec![vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert!(!verify_independence(&all).unwrap());
        let single = IndexFamily::new(5, 2, vec![vec![2, 4, 5]]).unwrap();
        assert!(verify_independence(&single).unwrap());
        assert!(IndexFamily::new(3, 1, vec![vec![1, 2], vec![2, 1]]).is_err());
        let big = IndexFamily::new(22, 1, (2..=22).map(|i| vec![1, i]).collect()).unwrap();
        assert!(matches!(verify_independence(&big), Err(Error::Capacity { .. })));
    }

    #[test]
    fn phi_examples() {
        let g = build_partial_permutation(1, 3).unwrap();
        let phi = signed_vector_phi(&[1, 2], &g).unwrap();
        assert_eq!(phi.values, vec![-1, 1, 0]);

        let g = build_partial_permutation(2, 4).unwrap();
        let phi = signed_vector_phi(&[1, 2, 3], &g).unwrap();
        assert_eq!(phi.support_size(), 6);
        assert_eq!(phi.values.iter().filter(|&&x| x == 1).count(), 3);
        for (label, &x) in g.labels().iter().zip(&phi.values) {
            if label.values().contains(&4) {
                assert_eq!(x, 0);
            }
        }
        // (1,2) misses 3: arrangement (3,1,2) is even
        assert_eq!(phi.values[g.index_of(&[1, 2]).unwrap()], 1);
        for clique in maximal_cliques_partial(2, 4).unwrap() {
            assert_eq!(clique.iter().map(|&v| phi.values[v]).sum::<i64>(), 0);
        }
        assert!(signed_vector_phi(&[1, 2], &g).is_err());
        assert!(signed_vector_phi(&[1, 2, 3], &build_cayley_star(3).unwrap()).is_err());
    }

    #[test]
    fn signed_family_examples() {
        let fam = build_signed_family(3, 1).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam[0].values, vec![-1, 1, 0]);
        assert_eq!(fam[1].values, vec![-1, 0, 1]);

        let fam = build_signed_family(4, 3).unwrap();
        assert_eq!(fam.len(), 1);
        let g = build_partial_permutation(3, 4).unwrap();
        let coloring = bipartition(&g).unwrap();
        let parity: Vec<i64> = coloring.colors.iter().map(|&c| c as i64).collect();
        assert!(fam[0].values == parity || fam[0].values.iter().zip(&parity).all(|(a, b)| *a == -b));

        assert_eq!(family_rank(&build_signed_family(4, 2).unwrap()).unwrap(), 3);
        assert_eq!(family_rank(&build_signed_family(5, 2).unwrap()).unwrap(), 6);
    }

    #[test]
    fn schreier_examples() {
        let vs = build_schreier_eigenvectors(1, 4).unwrap();
        assert_eq!(vs.len(), 2);
        for v in &vs {
            assert_eq!(v.values[0], 0);
            assert_eq!(v.eigenvalue, Some(2));
        }
        assert_eq!(family_rank(&vs).unwrap(), 2);

        for n in 3..=6 {
            let vs = build_schreier_eigenvectors(n - 2, n).unwrap();
            assert_eq!(vs.len(), 1);
            assert_eq!(vs[0].eigenvalue, Some(1));
        }
        let vs = build_schreier_eigenvectors(2, 5).unwrap();
        let g = build_schreier(2, 5).unwrap();
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(family_rank(&vs).unwrap(), 3);
        for v in &vs {
            assert!(verify_eigenvector(&g, &v.values, 2).unwrap().passed);
        }
        assert!(build_schreier_eigenvectors(3, 4).is_err());
    }

    #[test]
    fn lift_examples() {
        let cayley = build_cayley_star(4).unwrap();
        let map = schreier_projection(1, 4).unwrap();
        let ones = SignedVector {
            graph: GraphKind::Schreier { k: 1, n: 4 },
            id: "ones".into(),
            values: vec![1; 4],
            eigenvalue: Some(3),
        };
        let lifted = lift_along_projection(&ones, &map, &cayley).unwrap();
        assert_eq!(lifted.values, vec![1; 24]);
        lifted.verify_on(&cayley).unwrap();

        for v in build_schreier_eigenvectors(1, 4).unwrap() {
            let lifted = lift_along_projection(&v, &map, &cayley).unwrap();
            assert!(verify_eigenvector(&cayley, &lifted.values, 2).unwrap().passed);
            for b in 0..4 {
                let on_fiber: Vec<i64> =
                    (0..24).filter(|&u| map.apply(u) == b).map(|u| lifted.values[u]).collect();
                assert_eq!(on_fiber.len(), 6);
                assert!(on_fiber.iter().all(|&x| x == v.values[b]));
            }
        }

        let cover = covering_projection(4).unwrap();
        for x in build_zero_eigenbasis(4).unwrap() {
            let lifted = lift_along_projection(&x, &cover, &cayley).unwrap();
            assert!(verify_eigenvector(&cayley, &lifted.values, 0).unwrap().passed);
        }
        assert!(lift_along_projection(&ones, &cover, &cayley).is_err());
    }

    #[test]
    fn negation_examples() {
        let g = build_cayley_star(4).unwrap();
        let coloring = bipartition(&g).unwrap();
        let ones = SignedVector {
            graph: g.kind(),
            id: "ones".into(),
            values: vec![1; 24],
            eigenvalue: Some(3),
        };
        let neg = negate_on_bipartition(&ones, &g, &coloring).unwrap();
        assert_eq!(neg.eigenvalue, Some(-3));
        neg.verify_on(&g).unwrap();
        let back = negate_on_bipartition(&neg, &g, &coloring).unwrap();
        assert_eq!(back, ones);

        let map = schreier_projection(2, 4).unwrap();
        let lifted: Vec<SignedVector> = build_schreier_eigenvectors(2, 4)
            .unwrap()
            .iter()
            .map(|v| lift_along_projection(v, &map, &g).unwrap())
            .collect();
        assert_eq!(lifted[0].eigenvalue, Some(1));
        let negated: Vec<SignedVector> =
            lifted.iter().map(|v| negate_on_bipartition(v, &g, &coloring).unwrap()).collect();
        for v in &negated {
            v.verify_on(&g).unwrap();
        }
        assert_eq!(family_rank(&negated).unwrap(), family_rank(&lifted).unwrap());

        let s = build_schreier(1, 4).unwrap();
        let fake = TwoColoring { colors: vec![1, -1, -1, -1] };
        let v = SignedVector {
            graph: s.kind(),
            id: "v".into(),
            values: vec![1; 4],
            eigenvalue: Some(3),
        };
        assert!(negate_on_bipartition(&v, &s, &fake).is_err());
    }

    #[test]
    fn zero_basis_examples() {
        let g = build_k2(4).unwrap();
        let basis = zero_eigenbasis_on(&g).unwrap();
        assert_eq!(basis.len(), 3);
        let first = &basis[0];
        let at = |i: u32, j: u32| first.values[g.index_of(&[i, j]).unwrap()];
        assert_eq!((at(1, 2), at(1, 3), at(4, 2), at(4, 3)), (1, -1, -1, 1));
        assert_eq!((at(1, 4), at(2, 3)), (0, 0));
        for v in &basis {
            for (u, label) in g.labels().iter().enumerate() {
                let t = g.index_of(&[label.values()[1], label.values()[0]]).unwrap();
                assert_eq!(v.values[u], v.values[t]);
                let s: i64 = g.neighbors(u).iter().map(|&(w, m)| m as i64 * v.values[w]).sum();
                assert_eq!(s, 0);
            }
        }
        // x1 - x2 = -x3 on the unordered pairs {12,13,14,23,24,34}
        let pairs = |v: &SignedVector| -> Vec<i64> {
            [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
                .iter()
                .map(|p| v.values[g.index_of(p).unwrap()])
                .collect()
        };
        assert_eq!(pairs(&basis[0]), vec![1, -1, 0, 0, -1, 1]);
        assert_eq!(pairs(&basis[1]), vec![1, 0, -1, -1, 0, 1]);
        assert_eq!(pairs(&basis[2]), vec![0, 1, -1, -1, 1, 0]);
        assert_eq!(family_rank(&basis).unwrap(), 2);
        assert_eq!(exact_nullity(&g, 0, &Limits::default()).unwrap(), 2);

        let five = build_zero_eigenbasis(5).unwrap();
        assert_eq!(five.len(), 6);
        assert_eq!(family_rank(&five).unwrap(), 5);
        assert!(build_zero_eigenbasis(3).is_err());
    }

    #[test]
    fn support_pair_validation() {
        assert!(SupportPair::from_pairs(5, [1, 4], [4, 5]).is_err());
        assert!(SupportPair::from_pairs(4, [1, 5], [2, 3]).is_err());
        let p = SupportPair::from_pairs(5, [4, 1], [2, 3]).unwrap();
        assert_eq!(p.alpha, vec![1, 0, 0, -1, 0]);
        assert_eq!(p.a, vec![1, 4]);
        let mut bad = p.clone();
        bad.alpha[0] = 2;
        assert!(bad.validate().is_err());
    }
}
