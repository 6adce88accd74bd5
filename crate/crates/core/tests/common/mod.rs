//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use startrans_core::eigen::IndexFamily;
use startrans_core::graph::build_partial_permutation;
use startrans_core::LoopyGraph;

/// Bron–Kerbosch with pivoting over the simple graph underlying `g`.
pub fn bron_kerbosch(g: &LoopyGraph) -> BTreeSet<Vec<usize>> {
    fn recurse(
        g: &LoopyGraph,
        r: &mut Vec<usize>,
        p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut clique = r.clone();
            clique.sort_unstable();
            out.insert(clique);
            return;
        }
        let adjacent = |u: usize, v: usize| u != v && g.multiplicity(u, v) > 0;
        let pivot = *p.union(&x).max_by_key(|&&u| p.iter().filter(|&&v| adjacent(u, v)).count()).unwrap();
        let mut p = p;
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adjacent(pivot, v)).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| adjacent(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| adjacent(v, w)).collect();
            recurse(g, r, np, nx, out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = BTreeSet::new();
    recurse(g, &mut Vec::new(), (0..g.vertex_count()).collect(), BTreeSet::new(), &mut out);
    out
}

/// Every non-empty subfamily has a tuple whose entries lie in exactly one member.
pub fn independent_by_tuples(fam: &IndexFamily) -> bool {
    let g = build_partial_permutation(fam.d, fam.n).unwrap();
    let membership: Vec<u32> = g
        .labels()
        .iter()
        .map(|label| {
            fam.sets
                .iter()
                .enumerate()
                .filter(|(_, set)| label.values().iter().all(|v| set.contains(v)))
                .fold(0, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    (1u32..1 << fam.len()).all(|sub| membership.iter().any(|&m| (m & sub).count_ones() == 1))
}

/// Adjacency eigenvalues of the cycle on `m` vertices: `2 cos(2πj/m)`, ascending.
pub fn cycle_spectrum(m: usize) -> Vec<f64> {
    let mut eig: Vec<f64> = (0..m).map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / m as f64).cos()).collect();
    eig.sort_by(f64::total_cmp);
    eig
}
