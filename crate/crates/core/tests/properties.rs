mod common;

use common::{column_shift, floyd_warshall, pair_histogram, pair_sums};
use mobius_hosoya::{Graph, LadderSpec, Rational};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Random connected graph on `n` vertices: a random spanning tree plus extras.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=30).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let extras = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), parents, extras).prop_map(|(n, parents, extras)| {
            let mut edges: Vec<(usize, usize)> =
                parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            for (u, v) in extras {
                if u != v {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn distance_matrix_is_a_metric(g in connected_graph()) {
        let dm = g.distance_matrix().unwrap();
        let n = dm.size();
        for i in 0..n {
            prop_assert_eq!(dm.get(i, i), 0);
            for j in 0..n {
                prop_assert_eq!(dm.get(i, j), dm.get(j, i));
                if i != j {
                    prop_assert!(dm.get(i, j) >= 1);
                }
                for k in 0..n {
                    prop_assert!(dm.get(i, j) <= dm.get(i, k) + dm.get(k, j));
                }
            }
        }
    }

    #[test]
    fn bfs_agrees_with_floyd_warshall(g in connected_graph()) {
        let dm = g.distance_matrix().unwrap();
        let fw = floyd_warshall(&g);
        for s in 0..g.vertex_count() {
            let row = g.bfs_distances(s).unwrap();
            prop_assert_eq!(row.as_slice(), dm.row(s));
            for (t, &d) in row.iter().enumerate() {
                prop_assert_eq!(u64::from(d), fw[s][t]);
            }
        }
        let h = g.hosoya_polynomial().unwrap();
        prop_assert_eq!(h.coefficients().to_vec(), pair_histogram(&fw));
    }

    #[test]
    fn polynomial_indices_equal_pair_sums(g in connected_graph()) {
        let h = g.hosoya_polynomial().unwrap();
        let v = g.vertex_count() as u128;
        prop_assert_eq!(h.pair_count(), v * (v - 1) / 2);
        prop_assert_eq!(h.coefficient(1), g.edge_count() as u64);
        let r = h.indices::<Rational>();
        let sums = pair_sums(&floyd_warshall(&g));
        prop_assert_eq!(&r.wiener, &sums[0]);
        prop_assert_eq!(&r.hyper_wiener, &sums[1]);
        prop_assert_eq!(&r.harary, &sums[2]);
        prop_assert_eq!(&r.tsz, &sums[3]);
        prop_assert!(r.wiener.is_integer() && r.hyper_wiener.is_integer() && r.tsz.is_integer());
        prop_assert!(g.distance_matrix().unwrap().direct_indices::<Rational>().same_values(&r));
    }

    #[test]
    fn hosoya_invariant_under_relabeling(g in connected_graph(), seed in any::<u64>()) {
        let h = g.hosoya_polynomial().unwrap();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        prop_assert_eq!(g.relabel(&perm).hosoya_polynomial().unwrap(), h);
    }

    #[test]
    fn ladder_is_simple_and_connected(m in 4usize..=61, n in 2usize..=5) {
        let spec = LadderSpec::new(m, n).unwrap();
        let edges = spec.edges();
        let mut normalized: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        normalized.sort_unstable();
        normalized.dedup();
        prop_assert_eq!(normalized.len(), edges.len());
        prop_assert!(edges.iter().all(|&(u, v)| u != v));
        let g = spec.build();
        prop_assert_eq!(g.vertex_count(), n * (m - 1));
        prop_assert_eq!(g.edge_count(), (m - 1) * (2 * n - 1));
        prop_assert!(g.is_connected());
    }

    #[test]
    fn column_shift_is_an_automorphism(m in 4usize..=30, n in 2usize..=5) {
        let g = LadderSpec::new(m, n).unwrap().build();
        let shift = column_shift(m, n);
        for (u, v) in g.edges() {
            prop_assert!(g.has_edge(shift[u], shift[v]));
        }
        prop_assert_eq!(g.relabel(&shift), g.clone());
    }
}

#[test]
fn ladder_triangle_inequality_exhaustive() {
    // All n = 3 ladders with at most 30 vertices.
    for m in 4..=11 {
        let dm = LadderSpec::new(m, 3).unwrap().build().distance_matrix().unwrap();
        let n = dm.size();
        assert!(n <= 30);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert!(dm.get(i, j) <= dm.get(i, k) + dm.get(k, j));
                }
            }
        }
    }
}

#[test]
fn ladder_relabeling_twenty_permutations() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for (m, n) in [(4, 3), (7, 3), (10, 3), (7, 2), (9, 4)] {
        let g = LadderSpec::new(m, n).unwrap().build();
        let h = g.hosoya_polynomial().unwrap();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        for _ in 0..20 {
            perm.shuffle(&mut rng);
            assert_eq!(g.relabel(&perm).hosoya_polynomial().unwrap(), h);
        }
    }
}

#[test]
fn paths_and_k2_pair_sums() {
    for n in 2..=10 {
        let g = Graph::path(n).unwrap();
        let r = g.hosoya_polynomial().unwrap().indices::<Rational>();
        let sums = pair_sums(&floyd_warshall(&g));
        assert_eq!([r.wiener, r.hyper_wiener, r.harary, r.tsz], sums, "P_{n}");
    }
}
