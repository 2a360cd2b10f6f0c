//! Generalized Möbius ladders `M(m, n)` and the block description of the
//! `n = 3` distance matrix.
//!
//! `M(m, n)` is the grid `P_m × P_n` whose first column is glued onto the
//! last column turned upside down. After gluing there are `m - 1` distinct
//! columns of `n` vertices each. Vertex `(i, j)` (column `i`, row `j`, both
//! 0-based; `(u_{i+1}, v_{j+1})` in 1-based grid labels) has index `i * n + j`.
//!
//! Edges:
//! - rungs `(i, j) – (i, j + 1)`,
//! - rails `(i, j) – (i + 1, j)` for `i < m - 2`,
//! - twist edges `(m - 2, j) – (0, n - 1 - j)`, which are the rails into the
//!   glued column.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Parameters of `M(m, n)`: `m` grid columns before gluing, `n` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LadderSpec {
    m: usize,
    n: usize,
}

impl LadderSpec {
    pub const MIN_M: usize = 4;
    pub const MIN_N: usize = 2;

    /// `m >= 4` keeps the graph simple: at `m = 3` the middle-row rail and
    /// twist edge coincide.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < Self::MIN_M {
            return Err(Error::LadderRange { m, n, constraint: "m must be at least 4" });
        }
        if n < Self::MIN_N {
            return Err(Error::LadderRange { m, n, constraint: "n must be at least 2" });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distinct columns after gluing.
    pub fn columns(&self) -> usize {
        self.m - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n * (self.m - 1)
    }

    /// `(m - 1)(n - 1)` rungs plus `(m - 1) n` rails and twist edges.
    pub fn edge_count(&self) -> usize {
        (self.m - 1) * (2 * self.n - 1)
    }

    pub fn vertex(&self, column: usize, row: usize) -> usize {
        debug_assert!(column < self.columns() && row < self.n);
        column * self.n + row
    }

    /// Inverse of [`LadderSpec::vertex`].
    pub fn position(&self, vertex: usize) -> (usize, usize) {
        (vertex / self.n, vertex % self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let (cols, n) = (self.columns(), self.n);
        let mut edges = Vec::with_capacity(self.edge_count());
        for i in 0..cols {
            for j in 0..n - 1 {
                edges.push((self.vertex(i, j), self.vertex(i, j + 1)));
            }
        }
        for i in 0..cols - 1 {
            for j in 0..n {
                edges.push((self.vertex(i, j), self.vertex(i + 1, j)));
            }
        }
        for j in 0..n {
            edges.push((self.vertex(cols - 1, j), self.vertex(0, n - 1 - j)));
        }
        edges
    }

    pub fn build(&self) -> Graph {
        Graph::from_edges(self.vertex_count(), &self.edges())
            .expect("Möbius ladder with m >= 4, n >= 2 is a simple graph")
    }
}

impl fmt::Display for LadderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.m, self.n)
    }
}

pub fn build_ladder(spec: LadderSpec) -> Graph {
    spec.build()
}

/// Distances between the three vertices of column `r` (rows) and the three
/// vertices of column `r + q` (columns) in `M(m, 3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockMatrix(pub [[u32; 3]; 3]);

impl BlockMatrix {
    pub fn entries(&self) -> &[[u32; 3]; 3] {
        &self.0
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.0[i][j] == self.0[j][i]))
    }

    /// `[[q, q+1, q+2], [q+1, q, q+1], [q+2, q+1, q]]`
    fn rising(q: u32) -> Self {
        Self([[q, q + 1, q + 2], [q + 1, q, q + 1], [q + 2, q + 1, q]])
    }

    /// Mirror of [`BlockMatrix::rising`] across the twist; `t = m - q`.
    fn falling(t: u32) -> Self {
        Self([[t + 1, t, t - 1], [t, t - 1, t], [t - 1, t, t + 1]])
    }
}

impl fmt::Display for BlockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("{} {} {}", r[0], r[1], r[2]))
            .collect();
        write!(f, "({})", rows.join(" / "))
    }
}

/// Smallest `m` with a block description (`m = 6` even, `m = 7` odd).
pub const MIN_BLOCK_M: usize = 6;

fn check_block_m(m: usize) -> Result<()> {
    if m < MIN_BLOCK_M {
        return Err(Error::MRange { m, constraint: "block matrices need m >= 6" });
    }
    Ok(())
}

/// The block `B_q` of `M(m, 3)`, `0 <= q <= m - 2`.
///
/// Even `m` (`h = m/2`): `B_0`; rising blocks for `1 <= q <= h - 2`; two
/// transitional blocks at `q = h - 1` and `q = h`; falling blocks up to
/// `q = m - 2`. Odd `m` (`h = (m - 1)/2`): one transitional block at `q = h`.
pub fn block_matrix(q: usize, m: usize) -> Result<BlockMatrix> {
    check_block_m(m)?;
    if q > m - 2 {
        return Err(Error::BlockIndex { q, m, max: m - 2 });
    }
    if q == 0 {
        return Ok(BlockMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]]));
    }
    let (q32, m32) = (q as u32, m as u32);
    let block = if m.is_multiple_of(2) {
        let h = m32 / 2;
        match q32 {
            q if q <= h - 2 => BlockMatrix::rising(q),
            q if q == h - 1 => {
                let (a, b) = (h - 1, h);
                BlockMatrix([[a, b, b], [b, a, b], [b, b, a]])
            }
            q if q == h => {
                let (a, b) = (h - 1, h);
                BlockMatrix([[b, b, a], [b, a, b], [a, b, b]])
            }
            q => BlockMatrix::falling(m32 - q),
        }
    } else {
        let h = (m32 - 1) / 2;
        match q32 {
            q if q < h => BlockMatrix::rising(q),
            q if q == h => {
                let (a, b) = (h, h + 1);
                BlockMatrix([[a, b, a], [b, a, b], [a, b, a]])
            }
            q => BlockMatrix::falling(m32 - q),
        }
    };
    Ok(block)
}

/// The `3(m-1) × 3(m-1)` distance matrix of `M(m, 3)` assembled from blocks:
/// block `(r, c)` with `r <= c` is `B_{c-r}`, the lower triangle mirrors it.
pub fn assemble_block_distance_matrix(m: usize) -> Result<DistanceMatrix> {
    check_block_m(m)?;
    let blocks = (0..=m - 2)
        .map(|q| block_matrix(q, m))
        .collect::<Result<Vec<_>>>()?;
    let size = 3 * (m - 1);
    let mut rows = vec![vec![0u32; size]; size];
    for r in 0..m - 1 {
        for c in r..m - 1 {
            let b = &blocks[c - r].0;
            for i in 0..3 {
                for j in 0..3 {
                    rows[3 * r + i][3 * c + j] = b[i][j];
                    rows[3 * c + j][3 * r + i] = b[i][j];
                }
            }
        }
    }
    Ok(DistanceMatrix::from_rows(rows).expect("block assembly yields a valid distance matrix"))
}
