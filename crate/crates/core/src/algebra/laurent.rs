use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::rational::rational_pow;
use super::{Domain, Scalar};
use crate::error::{Error, Result};

/// Bivariate Laurent polynomial in `q` and `t` with rational coefficients.
///
/// Keys are `(a, b)` for the monomial `q^a t^b`. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i32, i32), BigRational>,
}

impl LaurentPoly {
    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `c q^a t^b`.
    pub fn monomial(c: BigRational, a: i32, b: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        LaurentPoly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `q^a t^b`.
    pub fn qt(a: i32, b: i32) -> Self {
        Self::monomial(BigRational::one(), a, b)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i32, i32), BigRational)>,
    {
        let mut p = LaurentPoly::default();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, key: (i32, i32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exact evaluation at `q = q0`, `t = t0`.
    pub fn specialize(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() || t0.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * rational_pow(q0, a as i64) * rational_pow(t0, b as i64);
        }
        Ok(acc)
    }

    /// Sum of all coefficients (the value at `q = t = 1`).
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Scalar for LaurentPoly {
    const DOMAIN: Domain = Domain::Laurent;

    fn zero() -> Self {
        LaurentPoly::default()
    }

    fn one() -> Self {
        LaurentPoly::from_int(1)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        Self::sum_of_products(std::iter::once((self, other)))
    }

    fn negate(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    fn sum_of_products<'a, I>(terms: I) -> Self
    where
        I: Iterator<Item = (&'a Self, &'a Self)>,
    {
        let mut acc: BTreeMap<(i32, i32), BigRational> = BTreeMap::new();
        for (x, y) in terms {
            for (&(a1, b1), c1) in &x.terms {
                for (&(a2, b2), c2) in &y.terms {
                    let key = (a1 + a2, b1 + b2);
                    let prod = c1 * c2;
                    match acc.get_mut(&key) {
                        Some(v) => *v += prod,
                        None => {
                            acc.insert(key, prod);
                        }
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        LaurentPoly { terms: acc }
    }
}

/// Human-readable form, highest `q`-degree first: `q^2*t - 3*q^-1 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (a == 0 && b == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("q", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let one = LaurentPoly::one();
        let q = LaurentPoly::q();
        let qinv = LaurentPoly::qt(-1, 0);
        // (q - 1)(q^-1 + 1) = q - q^-1
        let lhs = q.plus(&one.negate()).times(&qinv.plus(&one));
        assert_eq!(lhs, q.plus(&qinv.negate()));
        assert_eq!(q.plus(&LaurentPoly::zero()), q);
        assert_eq!(LaurentPoly::qt(1, 1).times(&LaurentPoly::qt(-1, -1)), one);
    }

    #[test]
    fn specialize_examples() {
        let p = LaurentPoly::q().plus(&LaurentPoly::qt(-1, 0).negate());
        assert_eq!(p.specialize(&r("2"), &r("1")).unwrap(), r("3/2"));
        let m = LaurentPoly::qt(2, 1);
        assert_eq!(m.specialize(&r("1/2"), &r("3")).unwrap(), r("3/4"));
        let s = LaurentPoly::from_terms([((3, -2), r("5")), ((-1, 4), r("-2/3"))]);
        assert_eq!(s.specialize(&r("1"), &r("1")).unwrap(), s.coefficient_sum());
        assert!(matches!(
            s.specialize(&r("0"), &r("1")),
            Err(Error::ZeroSubstitution)
        ));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = LaurentPoly::q().plus(&LaurentPoly::q().negate());
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([((2, 1), r("1")), ((-1, 0), r("-3")), ((0, 0), r("1"))]);
        assert_eq!(p.to_string(), "q^2*t + 1 - 3*q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
