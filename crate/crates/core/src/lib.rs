//! Hosoya polynomials and distance-based topological indices of generalized
//! Möbius ladders `M(m, n)`.
//!
//! Every quantity is computed two ways: by brute force from BFS distances,
//! and from the published closed forms for `n = 3`. [`verify`] compares them.
//!
//! Index arithmetic is generic over [`Scalar`]. Use [`Rational`] for exact
//! values and `f64` for quick approximations.
//!
//! ```
//! use mobius_hosoya::{LadderSpec, Rational};
//!
//! let g = LadderSpec::new(10, 3).unwrap().build();
//! let h = g.hosoya_polynomial().unwrap();
//! assert_eq!(h.coefficients(), &[45, 72, 81, 81, 72]);
//! assert_eq!(h.wiener::<Rational>(), Rational::from_integer(1116.into()));
//! ```

pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod ladder;
pub mod polynomial;
pub mod scalar;
pub mod verify;

pub use closed_forms::{hosoya_coeffs_closed, indices_closed, ParityCase};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use ladder::{assemble_block_distance_matrix, block_matrix, build_ladder, BlockMatrix, LadderSpec};
pub use polynomial::{indices_from_polynomial, HosoyaPolynomial, IndexReport, IndexSource};
pub use scalar::Scalar;
pub use verify::{sweep, verify_all, verify_blocks, verify_hosoya, verify_indices, VerificationReport};

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Index values in exact arithmetic.
pub type ExactIndexReport = IndexReport<Rational>;

/// Index values in double precision.
pub type F64IndexReport = IndexReport<f64>;

/// Index values in single precision.
pub type F32IndexReport = IndexReport<f32>;
