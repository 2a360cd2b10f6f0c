#![allow(dead_code)]

use mobius_hosoya::Graph;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// All-pairs distances by Floyd–Warshall over the edge list; shares no code
/// with the BFS path in the library.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Pair counts per distance, from a Floyd–Warshall table.
pub fn pair_histogram(d: &[Vec<u64>]) -> Vec<u64> {
    let mut counts: Vec<u64> = Vec::new();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let k = d[i][j] as usize;
            if counts.len() < k {
                counts.resize(k, 0);
            }
            counts[k - 1] += 1;
        }
    }
    counts
}

/// `(Σd, ½Σ(d²+d), Σ1/d, (1/6)Σd(d+1)(d+2))` straight from a distance table.
pub fn pair_sums(d: &[Vec<u64>]) -> [BigRational; 4] {
    let mut out = [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
    let r = |v: u64| BigRational::from_integer(v.into());
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let x = d[i][j];
            out[0] += r(x);
            out[1] += r(x * x + x) / r(2);
            out[2] += BigRational::one() / r(x);
            out[3] += r(x * (x + 1) * (x + 2)) / r(6);
        }
    }
    out
}

/// The printed upper triangle of `M(4,3)`'s distance matrix.
pub const M4_UPPER: [&[u32]; 9] = [
    &[0, 1, 2, 1, 2, 2, 2, 2, 1],
    &[0, 1, 2, 1, 2, 2, 1, 2],
    &[0, 2, 2, 1, 1, 2, 2],
    &[0, 1, 2, 1, 2, 2],
    &[0, 1, 2, 1, 2],
    &[0, 2, 2, 1],
    &[0, 1, 2],
    &[0, 1],
    &[0],
];

/// The printed upper triangle of `M(5,3)`'s distance matrix.
pub const M5_UPPER: [&[u32]; 12] = [
    &[0, 1, 2, 1, 2, 3, 2, 3, 2, 3, 2, 1],
    &[0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2],
    &[0, 3, 2, 1, 2, 3, 2, 1, 2, 2],
    &[0, 1, 2, 1, 2, 3, 2, 3, 2],
    &[0, 1, 2, 1, 2, 3, 2, 3],
    &[0, 3, 2, 1, 2, 3, 2],
    &[0, 1, 2, 1, 2, 3],
    &[0, 1, 2, 1, 2],
    &[0, 3, 2, 1],
    &[0, 1, 2],
    &[0, 1],
    &[0],
];

/// Completes an upper triangle (row `i` starts at column `i`) by symmetry.
pub fn complete_upper(upper: &[&[u32]]) -> Vec<Vec<u32>> {
    let n = upper.len();
    let mut full = vec![vec![0; n]; n];
    for (i, row) in upper.iter().enumerate() {
        assert_eq!(row.len(), n - i);
        for (off, &v) in row.iter().enumerate() {
            full[i][i + off] = v;
            full[i + off][i] = v;
        }
    }
    full
}

/// Column shift `(i, j) -> (i + 1, j)`, wrapping through the twist.
pub fn column_shift(m: usize, n: usize) -> Vec<usize> {
    let cols = m - 1;
    (0..cols * n)
        .map(|v| {
            let (i, j) = (v / n, v % n);
            if i + 1 < cols {
                (i + 1) * n + j
            } else {
                n - 1 - j
            }
        })
        .collect()
}
