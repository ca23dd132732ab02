use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use super::rational::format_rational;
use super::{Domain, Scalar};
use crate::error::{Error, Result};

/// Largest working precision accepted anywhere in the engine.
pub const MAX_PRECISION_BITS: u32 = 1 << 16;

/// A closed interval `[lower, upper]` with rational endpoints that is
/// guaranteed to contain some real value.
///
/// Arithmetic is exact on the endpoints and then rounded outward to
/// `precision` significant bits (dyadic endpoints), so containment is never
/// lost. A `precision` of `None` means no rounding. Equality compares
/// endpoints only.
#[derive(Debug, Clone, Eq, Hash)]
pub struct CertInterval {
    lower: BigRational,
    upper: BigRational,
    precision: Option<u32>,
}

impl PartialEq for CertInterval {
    fn eq(&self, other: &Self) -> bool {
        self.lower == other.lower && self.upper == other.upper
    }
}

impl CertInterval {
    pub fn new(lower: BigRational, upper: BigRational) -> Self {
        assert!(lower <= upper, "empty interval");
        CertInterval {
            lower,
            upper,
            precision: None,
        }
    }

    pub fn point(x: BigRational) -> Self {
        CertInterval {
            lower: x.clone(),
            upper: x,
            precision: None,
        }
    }

    pub fn with_precision(mut self, bits: u32) -> Self {
        self.precision = Some(bits);
        self.rounded()
    }

    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    pub fn upper(&self) -> &BigRational {
        &self.upper
    }

    pub fn precision(&self) -> Option<u32> {
        self.precision
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    /// True when no real number lies in both intervals.
    pub fn is_disjoint(&self, other: &CertInterval) -> bool {
        self.upper < other.lower || other.upper < self.lower
    }

    /// Certifies that every value in the interval differs from `x`.
    pub fn excludes(&self, x: &BigRational) -> bool {
        !self.contains(x)
    }

    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }

    fn combine_precision(a: Option<u32>, b: Option<u32>) -> Option<u32> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    fn rounded(mut self) -> Self {
        if let Some(bits) = self.precision {
            self.lower = round_down(&self.lower, bits);
            self.upper = round_up(&self.upper, bits);
        }
        self
    }

    /// Multiplies by an exact rational; no widening beyond rounding.
    pub fn scale(&self, c: &BigRational) -> Self {
        let (a, b) = (&self.lower * c, &self.upper * c);
        let (lower, upper) = if c.is_negative() { (b, a) } else { (a, b) };
        CertInterval {
            lower,
            upper,
            precision: self.precision,
        }
        .rounded()
    }
}

/// Rounds `x` down to a dyadic rational with about `bits` significant bits.
fn round_down(x: &BigRational, bits: u32) -> BigRational {
    if x.is_zero() {
        return x.clone();
    }
    let mag = x.numer().bits() as i64 - x.denom().bits() as i64;
    let shift = bits as i64 - mag;
    let (num, den) = if shift >= 0 {
        (x.numer() << shift as usize, x.denom().clone())
    } else {
        (x.numer().clone(), x.denom() << (-shift) as usize)
    };
    let q = num.div_floor(&den);
    if shift >= 0 {
        BigRational::new(q, BigInt::from(1u8) << shift as usize)
    } else {
        BigRational::from_integer(q << (-shift) as usize)
    }
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    -round_down(&-x, bits)
}

impl Scalar for CertInterval {
    const DOMAIN: Domain = Domain::Interval;

    fn zero() -> Self {
        CertInterval::point(BigRational::zero())
    }

    fn one() -> Self {
        CertInterval::point(BigRational::one())
    }

    /// Only the exact point zero counts as zero.
    fn is_zero(&self) -> bool {
        self.lower.is_zero() && self.upper.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        CertInterval {
            lower: &self.lower + &other.lower,
            upper: &self.upper + &other.upper,
            precision: Self::combine_precision(self.precision, other.precision),
        }
        .rounded()
    }

    fn times(&self, other: &Self) -> Self {
        let precision = Self::combine_precision(self.precision, other.precision);
        if other.is_point() {
            return CertInterval { precision, ..self.scale(&other.lower) }.rounded();
        }
        if self.is_point() {
            return CertInterval { precision, ..other.scale(&self.lower) }.rounded();
        }
        let products = [
            &self.lower * &other.lower,
            &self.lower * &other.upper,
            &self.upper * &other.lower,
            &self.upper * &other.upper,
        ];
        let lower = products.iter().min().unwrap().clone();
        let upper = products.iter().max().unwrap().clone();
        CertInterval {
            lower,
            upper,
            precision,
        }
        .rounded()
    }

    fn negate(&self) -> Self {
        CertInterval {
            lower: -&self.upper,
            upper: -&self.lower,
            precision: self.precision,
        }
    }
}

impl fmt::Display for CertInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{}", self.lower)
        } else {
            write!(
                f,
                "[{}, {}]",
                format_rational(&self.lower),
                format_rational(&self.upper)
            )
        }
    }
}

/// Either the exact positive rational `x` with `x^n = value`, or a certified
/// dyadic enclosure of the positive real root of width at most `2^-bits`
/// (absolute) when the root is irrational.
///
/// `value` must be positive and `n >= 1`.
pub fn nth_root_enclosure(value: &BigRational, n: u32, bits: u32) -> Result<RootEnclosure> {
    if !value.is_positive() {
        return Err(Error::NonPositiveScalar(value.to_string()));
    }
    assert!(n >= 1, "root degree must be positive");
    if bits == 0 || bits > MAX_PRECISION_BITS {
        return Err(Error::PrecisionExhausted { bits });
    }
    let rn = value.numer().nth_root(n);
    let rd = value.denom().nth_root(n);
    if num_traits::pow(rn.clone(), n as usize) == *value.numer()
        && num_traits::pow(rd.clone(), n as usize) == *value.denom()
    {
        return Ok(RootEnclosure::Exact(BigRational::new(rn, rd)));
    }
    // floor(value * 2^(n*bits)) bracketed by consecutive integer n-th powers.
    let scaled = (value.numer() << (n as usize * bits as usize)).div_floor(value.denom());
    let r = scaled.nth_root(n);
    let den = BigInt::from(1u8) << bits as usize;
    let lower = BigRational::new(r.clone(), den.clone());
    let upper = BigRational::new(r + 1, den);
    Ok(RootEnclosure::Interval(CertInterval {
        lower,
        upper,
        precision: Some(bits),
    }))
}

#[derive(Debug, Clone, PartialEq)]
pub enum RootEnclosure {
    Exact(BigRational),
    Interval(CertInterval),
}
