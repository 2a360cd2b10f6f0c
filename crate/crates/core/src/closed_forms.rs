//! Published closed forms for `M(m, 3)`, evaluated verbatim.
//!
//! The coefficient formulas and the W/WW/Ha index formulas agree with the
//! brute-force values. The TSZ formulas do not, and are kept exactly as
//! published so [`crate::verify`] can report the disagreement.

use crate::error::{Error, Result};
use crate::polynomial::{HosoyaPolynomial, IndexReport, IndexSource};
use crate::scalar::{powi, Scalar};

/// Which published case covers a given `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityCase {
    /// Even `m >= 6`.
    EvenM,
    /// Odd `m >= 7`.
    OddM,
    SpecialM4,
    SpecialM5,
}

impl ParityCase {
    pub fn of(m: usize) -> Result<Self> {
        match m {
            0..=3 => Err(Error::MRange { m, constraint: "closed-form coefficients require m >= 4" }),
            4 => Ok(ParityCase::SpecialM4),
            5 => Ok(ParityCase::SpecialM5),
            _ if m.is_multiple_of(2) => Ok(ParityCase::EvenM),
            _ => Ok(ParityCase::OddM),
        }
    }

    /// Whether the published index formulas cover this case.
    pub fn has_index_formulas(self) -> bool {
        matches!(self, ParityCase::EvenM | ParityCase::OddM)
    }
}

/// Published Hosoya coefficients of `M(m, 3)`.
pub fn hosoya_coeffs_closed(m: usize) -> Result<HosoyaPolynomial> {
    let base = (m as u64).saturating_sub(1);
    let coeffs = match ParityCase::of(m)? {
        ParityCase::SpecialM4 => vec![15, 21],
        ParityCase::SpecialM5 => vec![20, 30, 16],
        ParityCase::EvenM => {
            // k = 1, 2, 3..m/2-1, m/2
            let mut c = vec![5 * base, 8 * base];
            c.extend(std::iter::repeat_n(9 * base, (m - 6) / 2));
            c.push(8 * base);
            c
        }
        ParityCase::OddM => {
            // k = 1, 2, 3..(m-3)/2, (m-1)/2, (m+1)/2
            let mut c = vec![5 * base, 8 * base];
            c.extend(std::iter::repeat_n(9 * base, (m - 7) / 2));
            c.push(17 * base / 2);
            c.push(4 * base);
            c
        }
    };
    HosoyaPolynomial::new(coeffs)
}

/// `C(3(m-1), 2)`, the number of vertex pairs of `M(m, 3)`.
pub fn pair_count(m: usize) -> u128 {
    let m = m as u128;
    3 * (m - 1) * (3 * m - 4) / 2
}

/// Σ_{i=3}^{⌊(m-2)/2⌋} 1/i; empty when the upper bound is below 3.
fn harmonic_tail<T: Scalar>(m: usize) -> T {
    let upper = m.saturating_sub(2) / 2;
    (3..=upper).fold(T::zero(), |acc, i| acc + T::one() / T::from_count(i as u64))
}

fn even_indices<T: Scalar>(m: &T, mm: usize) -> IndexReport<T> {
    let p = |e| powi(m, e);
    let r = T::ratio;
    let i = T::from_int;
    let wiener = (i(9) * p(3) + i(5) * p(2) - i(62) * m.clone() + i(48)) / i(8);
    let hyper_wiener = r(3, 16) * p(4) + r(13, 16) * p(3) + r(1, 4) * p(2) - r(33, 4) * m.clone() + i(7);
    let harary = i(9) * m.clone() + i(7) - i(16) / m.clone()
        + i(9) * (m.clone() - T::one()) * harmonic_tail::<T>(mm);
    let tsz = r(1, 16) * p(4) + r(43, 24) * p(2) + r(31, 48) * p(3) + r(19, 3) - r(53, 6) * m.clone();
    IndexReport { wiener, hyper_wiener, harary, tsz, source: IndexSource::ClosedForm }
}

fn odd_indices<T: Scalar>(m: &T, mm: usize) -> IndexReport<T> {
    let p = |e| powi(m, e);
    let r = T::ratio;
    let i = T::from_int;
    let wiener = (i(9) * p(3) + i(5) * p(2) - i(53) * m.clone() + i(39)) / i(8);
    let hyper_wiener =
        r(3, 16) * p(4) + r(13, 16) * p(3) + r(13, 16) * p(2) - r(125, 16) * m.clone() + i(6);
    let harary = m.clone() * (i(9) * m.clone() + i(25)) / (m.clone() + T::one())
        + i(9) * (m.clone() - T::one()) * harmonic_tail::<T>(mm);
    let tsz = r(1, 16) * p(4) + r(31, 48) * p(3) + r(95, 48) * p(2) - r(133, 16) * m.clone() + r(45, 8);
    IndexReport { wiener, hyper_wiener, harary, tsz, source: IndexSource::ClosedForm }
}

/// Published W, WW, Ha and TSZ of `M(m, 3)` for `m >= 6`.
///
/// The TSZ entry is the published formula as printed; it does not agree with
/// the TSZ value of the published polynomial.
pub fn indices_closed<T: Scalar>(m: usize) -> Result<IndexReport<T>> {
    let case = ParityCase::of(m).map_err(|_| closed_index_range(m))?;
    let mt = T::from_count(m as u64);
    match case {
        ParityCase::EvenM => Ok(even_indices(&mt, m)),
        ParityCase::OddM => Ok(odd_indices(&mt, m)),
        ParityCase::SpecialM4 | ParityCase::SpecialM5 => Err(closed_index_range(m)),
    }
}

fn closed_index_range(m: usize) -> Error {
    Error::MRange { m, constraint: "closed-form indices require m >= 6" }
}
