//! Exact scalar domains and dense square matrices over them.

mod interval;
mod io;
mod laurent;
mod matrix;
mod rational;

use std::fmt;

pub use interval::{nth_root_enclosure, CertInterval, RootEnclosure, MAX_PRECISION_BITS};
pub use io::{AnyMatrix, MatrixFormat};
pub use laurent::LaurentPoly;
pub use matrix::{Matrix, SparseGenerator};
pub use num_rational::BigRational;
pub use rational::{format_rational, parse_rational, rational_pow};

/// Tag naming the scalar domain of a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    Laurent,
    Interval,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Rational => "rational",
            Domain::Laurent => "laurent",
            Domain::Interval => "interval",
        }
    }

    pub fn from_name(name: &str) -> Option<Domain> {
        match name {
            "rational" => Some(Domain::Rational),
            "laurent" => Some(Domain::Laurent),
            "interval" => Some(Domain::Interval),
            _ => None,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ring operations shared by every scalar domain.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `sum a_i * b_i`. Domains with expensive intermediates override this.
    fn sum_of_products<'a, I>(terms: I) -> Self
    where
        I: Iterator<Item = (&'a Self, &'a Self)>,
    {
        terms.fold(Self::zero(), |acc, (a, b)| {
            if a.is_zero() || b.is_zero() {
                acc
            } else {
                acc.plus(&a.times(b))
            }
        })
    }
}

impl Scalar for BigRational {
    const DOMAIN: Domain = Domain::Rational;

    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}
