//! The Hosoya polynomial and the four distance-based indices recovered from
//! it through derivative and integral relations.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `H(x) = Σ_{k=1}^{D} c_k x^k`, where `c_k` counts unordered vertex pairs at
/// distance `k` and `D` is the diameter. There is no constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HosoyaPolynomial {
    coeffs: Vec<u64>,
}

impl HosoyaPolynomial {
    /// `coeffs[k - 1]` is `c_k`. The sequence must be nonempty and end in a
    /// positive coefficient.
    pub fn new(coeffs: Vec<u64>) -> Result<Self> {
        match coeffs.last() {
            None => Err(Error::InvalidPolynomial("no coefficients")),
            Some(0) => Err(Error::InvalidPolynomial("leading coefficient is zero")),
            Some(_) => Ok(Self { coeffs }),
        }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// `c_k` for `k >= 1`; zero above the diameter.
    pub fn coefficient(&self, k: usize) -> u64 {
        k.checked_sub(1).and_then(|i| self.coeffs.get(i)).copied().unwrap_or(0)
    }

    /// Degree of the polynomial, i.e. the diameter of the graph.
    pub fn diameter(&self) -> usize {
        self.coeffs.len()
    }

    /// `(k, c_k)` pairs in increasing `k`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.coeffs.iter().enumerate().map(|(i, &c)| (i as u64 + 1, c))
    }

    /// Total number of unordered pairs, `H(1)`.
    pub fn pair_count(&self) -> u128 {
        self.coeffs.iter().map(|&c| u128::from(c)).sum()
    }

    /// `H(x)` by Horner's rule.
    pub fn evaluate<T: Scalar>(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| (acc + T::from_count(c)) * x.clone())
    }

    /// Wiener index, `H'(1) = Σ k c_k`.
    pub fn wiener<T: Scalar>(&self) -> T {
        self.weighted_sum(|k| T::from_count(k))
    }

    /// Hyper-Wiener index, `½ (x H)''(1) = ½ Σ k(k+1) c_k`.
    pub fn hyper_wiener<T: Scalar>(&self) -> T {
        self.weighted_sum(|k| T::from_count(k) * T::from_count(k + 1)) / T::from_count(2)
    }

    /// Harary index, `∫₀¹ H(x)/x dx = Σ c_k / k`.
    pub fn harary<T: Scalar>(&self) -> T {
        self.weighted_sum(|k| T::one() / T::from_count(k))
    }

    /// Tratch-Stankevitch-Zefirov index, `(1/3!) (x² H)'''(1) = (1/6) Σ k(k+1)(k+2) c_k`.
    pub fn tsz<T: Scalar>(&self) -> T {
        self.weighted_sum(|k| T::from_count(k) * T::from_count(k + 1) * T::from_count(k + 2))
            / T::from_count(6)
    }

    pub fn indices<T: Scalar>(&self) -> IndexReport<T> {
        IndexReport {
            wiener: self.wiener(),
            hyper_wiener: self.hyper_wiener(),
            harary: self.harary(),
            tsz: self.tsz(),
            source: IndexSource::FromPolynomial,
        }
    }

    fn weighted_sum<T: Scalar>(&self, weight: impl Fn(u64) -> T) -> T {
        self.terms()
            .fold(T::zero(), |acc, (k, c)| acc + weight(k) * T::from_count(c))
    }
}

impl fmt::Display for HosoyaPolynomial {
    /// Renders as `45x + 72x^2 + ...`, skipping zero coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms().filter(|&(_, c)| c != 0) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Where a set of index values came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexSource {
    FromPolynomial,
    ClosedForm,
    DirectSummation,
}

impl IndexSource {
    pub fn as_str(self) -> &'static str {
        match self {
            IndexSource::FromPolynomial => "polynomial",
            IndexSource::ClosedForm => "closed",
            IndexSource::DirectSummation => "direct",
        }
    }
}

/// Wiener, hyper-Wiener, Harary and TSZ values of one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport<T> {
    pub wiener: T,
    pub hyper_wiener: T,
    pub harary: T,
    pub tsz: T,
    pub source: IndexSource,
}

/// Names of the four indices, in report order.
pub const INDEX_NAMES: [&str; 4] = ["W", "WW", "Ha", "TSZ"];

impl<T> IndexReport<T> {
    /// `(name, value)` pairs in the order W, WW, Ha, TSZ.
    pub fn named(&self) -> [(&'static str, &T); 4] {
        [
            (INDEX_NAMES[0], &self.wiener),
            (INDEX_NAMES[1], &self.hyper_wiener),
            (INDEX_NAMES[2], &self.harary),
            (INDEX_NAMES[3], &self.tsz),
        ]
    }

    /// Values equal, ignoring provenance.
    pub fn same_values(&self, other: &Self) -> bool
    where
        T: PartialEq,
    {
        self.wiener == other.wiener
            && self.hyper_wiener == other.hyper_wiener
            && self.harary == other.harary
            && self.tsz == other.tsz
    }
}

pub fn evaluate<T: Scalar>(p: &HosoyaPolynomial, x: &T) -> T {
    p.evaluate(x)
}

pub fn wiener<T: Scalar>(p: &HosoyaPolynomial) -> T {
    p.wiener()
}

pub fn hyper_wiener<T: Scalar>(p: &HosoyaPolynomial) -> T {
    p.hyper_wiener()
}

pub fn harary<T: Scalar>(p: &HosoyaPolynomial) -> T {
    p.harary()
}

pub fn tsz<T: Scalar>(p: &HosoyaPolynomial) -> T {
    p.tsz()
}

pub fn indices_from_polynomial<T: Scalar>(p: &HosoyaPolynomial) -> IndexReport<T> {
    p.indices()
}
