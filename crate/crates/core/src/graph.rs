//! Simple undirected graphs, all-pairs BFS distances and the brute-force
//! Hosoya polynomial.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polynomial::{HosoyaPolynomial, IndexReport, IndexSource};
use crate::scalar::Scalar;

/// Simple undirected graph on dense vertex indices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, neighbors) in adjacency.iter_mut().enumerate() {
            neighbors.sort_unstable();
            if let Some(w) = neighbors.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self { adjacency })
    }

    pub fn path(vertex_count: usize) -> Result<Self> {
        let edges: Vec<_> = (1..vertex_count).map(|v| (v - 1, v)).collect();
        Self::from_edges(vertex_count, &edges)
    }

    pub fn complete(vertex_count: usize) -> Result<Self> {
        let edges: Vec<_> = (0..vertex_count)
            .flat_map(|u| (u + 1..vertex_count).map(move |v| (u, v)))
            .collect();
        Self::from_edges(vertex_count, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `vertex`.
    pub fn neighbors(&self, vertex: usize) -> &[usize] {
        &self.adjacency[vertex]
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// The same graph with vertex `v` renamed to `permutation[v]`.
    ///
    /// Panics if `permutation` is not a permutation of `0..vertex_count`.
    pub fn relabel(&self, permutation: &[usize]) -> Self {
        assert_eq!(permutation.len(), self.vertex_count(), "permutation length");
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (permutation[u], permutation[v]))
            .collect();
        Self::from_edges(self.vertex_count(), &edges).expect("relabeling preserves simplicity")
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).is_ok()
    }

    /// Shortest-path lengths from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<u32>> {
        let n = self.vertex_count();
        if source >= n {
            return Err(Error::VertexOutOfRange { vertex: source, vertex_count: n });
        }
        let mut dist = vec![u32::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        match dist.iter().position(|&d| d == u32::MAX) {
            Some(unreachable) => Err(Error::NotConnected { origin: source, unreachable }),
            None => Ok(dist),
        }
    }

    /// All-pairs distances, one BFS per source (sources run in parallel,
    /// rows are assembled in source order).
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let rows = (0..self.vertex_count())
            .into_par_iter()
            .map(|s| self.bfs_distances(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(DistanceMatrix::from_rows_unchecked(rows))
    }

    pub fn diameter(&self) -> Result<u32> {
        Ok(self.distance_matrix()?.diameter())
    }

    /// Brute-force Hosoya polynomial: counts unordered pairs at each distance.
    pub fn hosoya_polynomial(&self) -> Result<HosoyaPolynomial> {
        if self.vertex_count() < 2 {
            return Err(Error::NoPairs);
        }
        self.distance_matrix()?.hosoya_polynomial()
    }
}

/// Dense symmetric table of exact pairwise distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let size = rows.len();
        Self { size, entries: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix from explicit rows. Rows must be square, symmetric,
    /// zero on the diagonal and positive off it.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> std::result::Result<Self, String> {
        let size = rows.len();
        if size == 0 {
            return Err("empty distance matrix".into());
        }
        if let Some(i) = rows.iter().position(|r| r.len() != size) {
            return Err(format!("row {i} has length {}, expected {size}", rows[i].len()));
        }
        for i in 0..size {
            if rows[i][i] != 0 {
                return Err(format!("nonzero diagonal entry at {i}"));
            }
            for j in i + 1..size {
                if rows[i][j] != rows[j][i] {
                    return Err(format!("asymmetric entries at ({i},{j})"));
                }
                if rows[i][j] == 0 {
                    return Err(format!("zero off-diagonal entry at ({i},{j})"));
                }
            }
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.size + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.entries[row * self.size..(row + 1) * self.size]
    }

    pub fn diameter(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Distances `d(i, j)` over unordered pairs `i < j`.
    pub fn pair_distances(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.size).flat_map(move |i| self.row(i)[i + 1..].iter().copied())
    }

    /// First cell where `self` and `other` differ, as `(row, col, self, other)`.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, u32, u32)> {
        if self.size != other.size {
            return Some((self.size.min(other.size), 0, 0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|idx| {
                let (r, c) = (idx / self.size, idx % self.size);
                (r, c, self.entries[idx], other.entries[idx])
            })
    }

    pub fn hosoya_polynomial(&self) -> Result<HosoyaPolynomial> {
        if self.size < 2 {
            return Err(Error::NoPairs);
        }
        let mut counts = vec![0u64; self.diameter() as usize];
        for d in self.pair_distances() {
            counts[d as usize - 1] += 1;
        }
        HosoyaPolynomial::new(counts)
    }

    /// W, WW, Ha, TSZ by summing over pairs directly, without going through
    /// the polynomial.
    pub fn direct_indices<T: Scalar>(&self) -> IndexReport<T> {
        let mut wiener = T::zero();
        let mut hyper = T::zero();
        let mut harary = T::zero();
        let mut tsz = T::zero();
        let mut row_counts = vec![0u64; self.diameter() as usize + 1];
        for i in 0..self.size {
            // Integer sums over one row fit in u128 for any matrix that fits in memory.
            let (mut w, mut ww, mut t) = (0u128, 0u128, 0u128);
            row_counts.iter_mut().for_each(|c| *c = 0);
            for &d in &self.row(i)[i + 1..] {
                let d = u128::from(d);
                w = w.checked_add(d).expect("row sum overflow");
                ww = ww.checked_add(d * d + d).expect("row sum overflow");
                t = t.checked_add(d * (d + 1) * (d + 2)).expect("row sum overflow");
                row_counts[d as usize] += 1;
            }
            wiener = wiener + from_wide(w);
            hyper = hyper + from_wide(ww);
            tsz = tsz + from_wide(t);
            for (d, &count) in row_counts.iter().enumerate().skip(1).filter(|(_, &c)| c > 0) {
                harary = harary + T::from_count(count) / T::from_count(d as u64);
            }
        }
        IndexReport {
            wiener,
            hyper_wiener: hyper / T::from_count(2),
            harary,
            tsz: tsz / T::from_count(6),
            source: IndexSource::DirectSummation,
        }
    }

    /// Σ 1/d² over unordered pairs: the squared-reciprocal Harary variant.
    pub fn harary_squared<T: Scalar>(&self) -> T {
        self.pair_distances().fold(T::zero(), |acc, d| {
            let d = u64::from(d);
            acc + T::one() / T::from_count(d * d)
        })
    }
}

fn from_wide<T: Scalar>(x: u128) -> T {
    let high = T::from_count((x >> 64) as u64);
    let low = T::from_count(x as u64);
    let shift = T::from_count(1 << 32);
    high * shift.clone() * shift + low
}
