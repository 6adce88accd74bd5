mod common;

use std::collections::BTreeSet;

use common::bron_kerbosch;
use startrans_core::combinatorics::{factorial, falling_factorial, parity, Permutation, Sign};
use startrans_core::graph::{
    bipartition, build_cayley_star, build_k2, build_partial_permutation, build_schreier, covering_projection,
    iso_partial_to_cayley, maximal_cliques_partial, partial_clique_count, schreier_projection, verify_cover,
    verify_equivariance, verify_isomorphism,
};

#[test]
fn partial_counts_and_regularity() {
    for n in 1..=5 {
        for d in 1..=n {
            let g = build_partial_permutation(d, n).unwrap();
            assert_eq!(g.vertex_count() as u128, falling_factorial(n, d).unwrap(), "d={d} n={n}");
            assert_eq!(g.regularity(), Some(d * (n - d)), "d={d} n={n}");
            assert!(g.is_symmetric() && !g.has_loops());
            assert!(g.max_edge_multiplicity() <= 1);
        }
    }
}

#[test]
fn partial_cliques_match_bron_kerbosch() {
    for n in 2..=5 {
        for d in 1..n {
            let g = build_partial_permutation(d, n).unwrap();
            let ours: BTreeSet<Vec<usize>> = maximal_cliques_partial(d, n)
                .unwrap()
                .into_iter()
                .map(|mut c| {
                    c.sort_unstable();
                    c
                })
                .collect();
            let oracle = bron_kerbosch(&g);
            assert_eq!(ours, oracle, "d={d} n={n}");
            assert!(ours.iter().all(|c| c.len() == n - d + 1));
            let expected = d as u128 * factorial(n).unwrap() / factorial(n - d + 1).unwrap();
            assert_eq!(ours.len() as u128, expected);
            assert_eq!(partial_clique_count(d, n), expected);
        }
        assert!(maximal_cliques_partial(n, n).is_err());
    }
}

#[test]
fn isomorphism_is_exhaustive_up_to_six() {
    for n in 2..=6 {
        let map = iso_partial_to_cayley(n).unwrap();
        let from = build_partial_permutation(n - 1, n).unwrap();
        let to = build_cayley_star(n).unwrap();
        assert!(map.is_bijective());
        let check = verify_isomorphism(&map, &from, &to).unwrap();
        assert!(check.holds, "n={n}: {:?}", check.failure);
    }
}

#[test]
fn schreier_loop_and_neighbour_census() {
    for n in 2..=6 {
        for k in 1..n {
            let g = build_schreier(k, n).unwrap();
            assert_eq!(g.vertex_count() as u128, falling_factorial(n, k).unwrap());
            assert_eq!(g.regularity(), Some(n - 1));
            assert!(g.max_edge_multiplicity() <= 1);
            let has_one = |v: usize| g.label(v).values().contains(&1);
            for v in 0..g.vertex_count() {
                let neighbours = g.neighbors(v);
                if has_one(v) {
                    assert_eq!(g.loops(v), 0, "k={k} n={n} v={v}");
                    let avoiding = neighbours.iter().filter(|&&(u, _)| !has_one(u)).count();
                    assert_eq!(avoiding, n - k, "k={k} n={n} v={v}");
                } else {
                    assert_eq!(g.loops(v) as usize, n - k - 1, "k={k} n={n} v={v}");
                    assert_eq!(neighbours.len(), k, "k={k} n={n} v={v}");
                    assert!(neighbours.iter().all(|&(u, _)| has_one(u)), "k={k} n={n} v={v}");
                }
            }
        }
    }
}

#[test]
fn top_schreier_graph_is_the_cayley_graph() {
    for n in 2..=6 {
        let map = schreier_projection(n - 1, n).unwrap();
        let check = verify_isomorphism(&map, &build_cayley_star(n).unwrap(), &build_schreier(n - 1, n).unwrap()).unwrap();
        assert!(check.holds, "n={n}: {:?}", check.failure);
    }
}

#[test]
fn schreier_projection_is_an_equivariant_cover() {
    for n in 2..=6 {
        let cayley = build_cayley_star(n).unwrap();
        for k in 1..n {
            let map = schreier_projection(k, n).unwrap();
            let base = build_schreier(k, n).unwrap();
            assert_eq!(map.uniform_fiber_size().map(|s| s as u128), factorial(n - k));
            assert!(verify_equivariance(&map, &cayley, &base).unwrap().holds, "k={k} n={n}");
            assert!(verify_cover(&map, &cayley, &base).unwrap().holds, "k={k} n={n}");
        }
    }
}

#[test]
fn covering_projection_census() {
    for n in 4..=6 {
        let map = covering_projection(n).unwrap();
        let cayley = build_cayley_star(n).unwrap();
        let k2 = build_k2(n).unwrap();
        assert_eq!(k2.vertex_count(), n * (n - 1));
        assert_eq!(k2.regularity(), Some(n - 1));
        assert_eq!(map.uniform_fiber_size().map(|s| s as u128), factorial(n - 2));
        let check = verify_cover(&map, &cayley, &k2).unwrap();
        assert!(check.holds, "n={n}: {:?}", check.failure);
    }
}

#[test]
fn bipartition_is_permutation_parity() {
    for n in 2..=6 {
        let g = build_cayley_star(n).unwrap();
        let coloring = bipartition(&g).unwrap();
        let sign = |v: usize| {
            let p = Permutation::new(g.label(v).values().to_vec()).unwrap();
            if parity(&p) == Sign::Even {
                1
            } else {
                -1
            }
        };
        let flip = coloring.color(0) * sign(0);
        assert!((0..g.vertex_count()).all(|v| coloring.color(v) * sign(v) == flip), "n={n}");
        assert_eq!(coloring.class_sizes().0, g.vertex_count() / 2);
    }
    assert!(bipartition(&build_schreier(1, 4).unwrap()).is_err());
}
