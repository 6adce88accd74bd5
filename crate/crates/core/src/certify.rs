//! Exact lower bounds on eigenvalue multiplicities of the star-transposition
//! Cayley graph.
//!
//! For `n ≥ 2` and `1 ≤ ℓ ≤ n-1`, `±(n-ℓ)` has multiplicity at least
//! `C(n-2, ℓ-1)`; for `n ≥ 4`, `0` has multiplicity at least `C(n-1, 2)`.
//! Each bound is witnessed by an explicit family:
//!
//! * `n-1`: the all-ones vector;
//! * `n-1-k` for `1 ≤ k ≤ n-2`: Schreier eigenvectors on `schreier(k, n)`
//!   pulled back along the coset projection;
//! * `0`: the `k2(n)` zero basis pulled back along the covering projection;
//! * negatives: sign flip on the bipartition.
//!
//! Every vector is checked with exact integer arithmetic on the Cayley graph
//! and every family's rank is computed exactly.

use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::eigen::{
    family_rank, lift_along_projection, negate_on_bipartition, schreier_eigenvectors_on, zero_eigenbasis_on,
    SignedVector,
};
use crate::error::{Error, Result};
use crate::exact::exact_nullity;
use crate::graph::{bipartition, build, covering_projection, schreier_projection, GraphKind, LoopyGraph};
use crate::limits::Limits;
use crate::numeric::{dense_symmetric_eigenvalues, integrality_check, SpectrumReport, DEFAULT_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyOptions {
    pub limits: Limits,
    /// Compute `dim ker(A - λI)` for each certified `λ` when the Cayley
    /// graph is within `limits.max_exact_vertices`.
    pub exact_nullity: bool,
    /// Attach a numeric integrality check when the Cayley graph has at most
    /// this many vertices.
    pub integrality_max_vertices: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            limits: Limits::default(),
            exact_nullity: true,
            integrality_max_vertices: 120,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateStatus {
    Certified,
    Partial,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueCertificate {
    pub lambda: i64,
    /// The multiplicity the construction is meant to reach.
    pub lower_bound: u64,
    pub construction: String,
    pub vectors: usize,
    pub certified_rank: usize,
    pub exact_nullity: Option<usize>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationFailure {
    pub lambda: i64,
    pub vector: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub n: usize,
    pub status: CertificateStatus,
    /// Ordered by descending `lambda`.
    pub per_eigenvalue: Vec<EigenvalueCertificate>,
    pub integrality: Option<SpectrumReport>,
    pub failure: Option<CertificationFailure>,
}

impl CertificateReport {
    pub fn entry(&self, lambda: i64) -> Option<&EigenvalueCertificate> {
        self.per_eigenvalue.iter().find(|e| e.lambda == lambda)
    }

    fn derive_status(entries: &[EigenvalueCertificate]) -> CertificateStatus {
        if entries.iter().any(|e| !e.verified) {
            CertificateStatus::Failed
        } else if entries.iter().any(|e| (e.certified_rank as u64) < e.lower_bound) {
            CertificateStatus::Partial
        } else {
            CertificateStatus::Certified
        }
    }
}

/// Verify every vector of `vectors` as a `lambda`-eigenvector of `g` and
/// compute the family's exact rank. Failures are reported, not raised.
pub fn certify_family(
    g: &LoopyGraph,
    lambda: i64,
    lower_bound: u64,
    construction: &str,
    vectors: &[SignedVector],
) -> (EigenvalueCertificate, Option<CertificationFailure>) {
    let mut entry = EigenvalueCertificate {
        lambda,
        lower_bound,
        construction: construction.to_string(),
        vectors: vectors.len(),
        certified_rank: 0,
        exact_nullity: None,
        verified: false,
    };
    let fail = |vector: &str, detail: String| CertificationFailure {
        lambda,
        vector: vector.to_string(),
        detail,
    };
    for v in vectors {
        if v.eigenvalue != Some(lambda) {
            let detail = format!("vector claims eigenvalue {:?}", v.eigenvalue);
            return (entry, Some(fail(&v.id, detail)));
        }
        if let Err(e) = v.verify_on(g) {
            return (entry, Some(fail(&v.id, e.to_string())));
        }
    }
    match family_rank(vectors) {
        Ok(rank) => {
            entry.certified_rank = rank;
            entry.verified = true;
            (entry, None)
        }
        Err(e) => (entry, Some(fail(construction, e.to_string()))),
    }
}

struct PositiveFamily {
    lambda: i64,
    lower_bound: u64,
    construction: String,
    vectors: Result<Vec<SignedVector>>,
}

pub fn certify_spectrum_lower_bounds(n: usize, options: &CertifyOptions) -> Result<CertificateReport> {
    let limits = &options.limits;
    let cayley = build(GraphKind::Cayley { n }, limits)?;
    let coloring = bipartition(&cayley)?;

    let mut positive = vec![PositiveFamily {
        lambda: (n - 1) as i64,
        lower_bound: 1,
        construction: "all-ones".into(),
        vectors: Ok(vec![SignedVector {
            graph: cayley.kind(),
            id: "ones".into(),
            values: vec![1; cayley.vertex_count()],
            eigenvalue: Some((n - 1) as i64),
        }]),
    }];
    for k in 1..=n.saturating_sub(2) {
        positive.push(PositiveFamily {
            lambda: (n - 1 - k) as i64,
            lower_bound: binomial(n - 2, k) as u64,
            construction: format!("schreier(k={k}) lifted along coset projection"),
            vectors: lifted_schreier_family(k, n, &cayley, limits),
        });
    }
    if n >= 4 {
        positive.push(PositiveFamily {
            lambda: 0,
            lower_bound: binomial(n - 1, 2) as u64,
            construction: "k2 zero basis lifted along covering projection".into(),
            vectors: lifted_zero_family(n, &cayley, limits),
        });
    }

    let mut entries = Vec::new();
    let mut negatives = Vec::new();
    let mut failure: Option<CertificationFailure> = None;
    for fam in positive {
        let vectors = match fam.vectors {
            Ok(v) => v,
            Err(e) => {
                let (vector, detail) = match e {
                    Error::VerificationFailed { vector, detail } => (vector, detail),
                    other => (fam.construction.clone(), other.to_string()),
                };
                failure.get_or_insert(CertificationFailure {
                    lambda: fam.lambda,
                    vector,
                    detail,
                });
                entries.push(EigenvalueCertificate {
                    lambda: fam.lambda,
                    lower_bound: fam.lower_bound,
                    construction: fam.construction,
                    vectors: 0,
                    certified_rank: 0,
                    exact_nullity: None,
                    verified: false,
                });
                continue;
            }
        };
        let (entry, fail) = certify_family(&cayley, fam.lambda, fam.lower_bound, &fam.construction, &vectors);
        if let Some(f) = fail {
            failure.get_or_insert(f);
        }
        if fam.lambda != 0 {
            let flipped = vectors
                .iter()
                .map(|v| negate_on_bipartition(v, &cayley, &coloring))
                .collect::<Result<Vec<_>>>()?;
            negatives.push((fam.lambda, fam.lower_bound, fam.construction, flipped));
        }
        entries.push(entry);
    }
    for (lambda, bound, construction, flipped) in negatives.into_iter().rev() {
        let construction = format!("sign flip of {construction}");
        let (entry, fail) = certify_family(&cayley, -lambda, bound, &construction, &flipped);
        if let Some(f) = fail {
            failure.get_or_insert(f);
        }
        entries.push(entry);
    }

    if options.exact_nullity && cayley.vertex_count() <= limits.max_exact_vertices {
        // With D the ±1 colouring, D(A - λI)D = -(A + λI), so λ and -λ
        // have the same nullity and each |λ| is eliminated once.
        let mut by_magnitude: Vec<(i64, usize)> = Vec::new();
        for entry in &mut entries {
            let magnitude = entry.lambda.abs();
            let nullity = match by_magnitude.iter().find(|(m, _)| *m == magnitude) {
                Some(&(_, nullity)) => nullity,
                None => {
                    let nullity = exact_nullity(&cayley, magnitude, limits)?;
                    by_magnitude.push((magnitude, nullity));
                    nullity
                }
            };
            entry.exact_nullity = Some(nullity);
            if entry.verified && nullity < entry.certified_rank {
                entry.verified = false;
                failure.get_or_insert(CertificationFailure {
                    lambda: entry.lambda,
                    vector: entry.construction.clone(),
                    detail: format!("exact nullity {nullity} below certified rank {}", entry.certified_rank),
                });
            }
        }
    }

    let integrality = if cayley.vertex_count() <= options.integrality_max_vertices {
        let spectrum = dense_symmetric_eigenvalues(&cayley, limits)?;
        Some(integrality_check(&spectrum, DEFAULT_TOLERANCE))
    } else {
        None
    };

    Ok(CertificateReport {
        n,
        status: CertificateReport::derive_status(&entries),
        per_eigenvalue: entries,
        integrality,
        failure,
    })
}

/// Schreier eigenvectors for `k`, pulled back to the Cayley graph; the
/// pullback must keep the exact rank.
fn lifted_schreier_family(k: usize, n: usize, cayley: &LoopyGraph, limits: &Limits) -> Result<Vec<SignedVector>> {
    let schreier = build(GraphKind::Schreier { k, n }, limits)?;
    let base = schreier_eigenvectors_on(&schreier, limits)?;
    let map = schreier_projection(k, n)?;
    lift_keeping_rank(&base, &map, cayley)
}

fn lifted_zero_family(n: usize, cayley: &LoopyGraph, limits: &Limits) -> Result<Vec<SignedVector>> {
    let k2 = build(GraphKind::K2 { n }, limits)?;
    let base = zero_eigenbasis_on(&k2)?;
    let map = covering_projection(n)?;
    lift_keeping_rank(&base, &map, cayley)
}

fn lift_keeping_rank(
    base: &[SignedVector],
    map: &crate::graph::VertexMap,
    top: &LoopyGraph,
) -> Result<Vec<SignedVector>> {
    let lifted = base
        .iter()
        .map(|v| lift_along_projection(v, map, top))
        .collect::<Result<Vec<_>>>()?;
    let (before, after) = (family_rank(base)?, family_rank(&lifted)?);
    if before != after {
        return Err(Error::VerificationFailed {
            vector: format!("lift to {}", top.kind()),
            detail: format!("rank {before} on the base became {after} after lifting"),
        });
    }
    Ok(lifted)
}
