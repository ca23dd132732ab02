//! Rescaling the specialised Lawrence–Krammer representation by a character
//! so that it descends to the mapping class group of the sphere with `g`
//! movable punctures and one fixed puncture.
//!
//! The kernel of `B_g -> M(S_{0,g,1})` is the centre, generated by
//! `z = (s_1 ... s_{g-1})^g`. LK sends `z` to the scalar `lambda_z`, and
//! `L'(w) = u^(-e(w)) LK(w)` with `u^(g(g-1)) = lambda_z`, `u > 0`, kills it.
//! The word `tau = s_1 ... s_{g-1} s_{g-1} ... s_1` is carried along as data:
//! it is the sphere relator for `g` punctures in total, it is not central in
//! `B_g`, and its LK image is not scalar.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::algebra::{
    format_rational, nth_root_enclosure, rational_pow, CertInterval, Matrix, RootEnclosure,
};
use crate::error::{Error, Result};
use crate::lk::SpecializedLk;
use crate::par::Parallelism;
use crate::rep::{Mode, RepMatrix};
use crate::words::{Alphabet, Generator, GroupWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelWords {
    pub tau: GroupWord,
    pub z: GroupWord,
}

impl KernelWords {
    pub fn new(g: u32) -> Self {
        let sigmas = |range: Vec<u32>| {
            GroupWord::from_letters(
                Alphabet::Braid,
                g,
                range.into_iter().map(|i| (Generator::sigma(i), 1)),
            )
            .expect("indices in range")
        };
        let up: Vec<u32> = (1..g).collect();
        let down: Vec<u32> = (1..g).rev().collect();
        let tau = sigmas(up.iter().copied().chain(down).collect());
        let z = sigmas(up).pow(g as i64);
        KernelWords { tau, z }
    }

    /// Root degree for `z`: its exponent sum `g(g - 1)`.
    pub fn z_degree(&self) -> u32 {
        self.z.exponent_sum() as u32
    }
}

/// Verifies that the specialised image of `w` is `c * Id` and returns `c`.
pub fn check_scalarity(table: &SpecializedLk, w: &GroupWord) -> Result<BigRational> {
    let m = table.eval(w)?;
    m.as_scalar().map_err(|(row, col)| Error::NotScalar {
        word: w.to_string(),
        row,
        col,
        value: m.get(row, col).to_string(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum UnitValue {
    Exact(BigRational),
    Interval(CertInterval),
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitValue::Exact(x) => write!(f, "{x}"),
            UnitValue::Interval(iv) => write!(f, "{iv}"),
        }
    }
}

/// The positive real `u` with `u^degree = lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct RescaleUnit {
    lambda: BigRational,
    degree: u32,
    precision: u32,
    value: UnitValue,
}

impl RescaleUnit {
    pub fn lambda(&self) -> &BigRational {
        &self.lambda
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn value(&self) -> &UnitValue {
        &self.value
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.value, UnitValue::Exact(_))
    }

    /// `u^(-e)`: exact when `u` is rational or `degree | e`, otherwise a
    /// certified enclosure of width at most `2^-(precision + 1)`.
    pub fn character_factor(&self, exponent_sum: i64) -> Result<UnitValue> {
        match &self.value {
            UnitValue::Exact(u) => Ok(UnitValue::Exact(rational_pow(u, -exponent_sum))),
            UnitValue::Interval(_) => {
                let power = rational_pow(&self.lambda, -exponent_sum);
                match nth_root_enclosure(&power, self.degree, self.precision + 1)? {
                    RootEnclosure::Exact(x) => Ok(UnitValue::Exact(x)),
                    RootEnclosure::Interval(iv) => Ok(UnitValue::Interval(iv)),
                }
            }
        }
    }

    /// Re-checks the defining equation: `u^n = lambda` exactly, or
    /// `lo^n <= lambda <= hi^n` for the enclosure.
    pub fn verify(&self) -> bool {
        let n = self.degree as i64;
        match &self.value {
            UnitValue::Exact(u) => u.is_positive() && rational_pow(u, n) == self.lambda,
            UnitValue::Interval(iv) => {
                iv.lower().is_positive()
                    && rational_pow(iv.lower(), n) <= self.lambda
                    && self.lambda <= rational_pow(iv.upper(), n)
            }
        }
    }

    pub fn certificate(&self) -> String {
        match &self.value {
            UnitValue::Exact(u) => format!(
                "u = {} satisfies u^{} = {} exactly",
                u,
                self.degree,
                self.lambda
            ),
            UnitValue::Interval(iv) => format!(
                "u in [{}, {}] with lo^{n} <= {} <= hi^{n}, width <= 2^-{}",
                format_rational(iv.lower()),
                format_rational(iv.upper()),
                self.lambda,
                self.precision + 1,
                n = self.degree
            ),
        }
    }
}

/// Solves `u^{n_i} = lambda_i` for one positive real `u`.
///
/// The conditions are compatible iff `lambda_i^{n_j} = lambda_j^{n_i}` for
/// all pairs, checked exactly. The unit is exact when the first condition
/// has a rational root, otherwise a certified enclosure at `precision` bits.
pub fn solve_rescale_unit(conditions: &[(BigRational, u32)], precision: u32) -> Result<RescaleUnit> {
    let Some((lambda, degree)) = conditions.first().cloned() else {
        return Err(Error::Incompatible("no conditions".into()));
    };
    for (l, n) in conditions {
        if !l.is_positive() {
            return Err(Error::NonPositiveScalar(l.to_string()));
        }
        if *n == 0 {
            return Err(Error::Incompatible("root degree 0".into()));
        }
    }
    for (l2, n2) in &conditions[1..] {
        if rational_pow(&lambda, *n2 as i64) != rational_pow(l2, degree as i64) {
            return Err(Error::Incompatible(format!(
                "{lambda}^(1/{degree}) != {l2}^(1/{n2})"
            )));
        }
    }
    let value = match nth_root_enclosure(&lambda, degree, precision + 1)? {
        RootEnclosure::Exact(x) => UnitValue::Exact(x),
        RootEnclosure::Interval(iv) => UnitValue::Interval(iv),
    };
    Ok(RescaleUnit {
        lambda,
        degree,
        precision,
        value,
    })
}

/// The rescaled representation `L'` of `B_g / <z>` at a rational point.
#[derive(Debug, Clone)]
pub struct LPrime {
    table: SpecializedLk,
    unit: RescaleUnit,
    mode: Mode,
}

impl LPrime {
    /// Checks scalarity of `z`, solves for the unit, and fails in exact mode
    /// when the unit is irrational.
    pub fn new(table: SpecializedLk, precision: u32, mode: Mode) -> Result<Self> {
        let kernel = KernelWords::new(table.genus());
        let lambda_z = check_scalarity(&table, &kernel.z)?;
        let unit = solve_rescale_unit(&[(lambda_z, kernel.z_degree())], precision)?;
        Self::with_unit(table, unit, mode)
    }

    pub fn with_unit(table: SpecializedLk, unit: RescaleUnit, mode: Mode) -> Result<Self> {
        if mode == Mode::Exact && !unit.is_exact() {
            return Err(Error::IrrationalUnit {
                lambda: unit.lambda.to_string(),
                degree: unit.degree,
            });
        }
        Ok(LPrime { table, unit, mode })
    }

    pub fn table(&self) -> &SpecializedLk {
        &self.table
    }

    pub fn unit(&self) -> &RescaleUnit {
        &self.unit
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn genus(&self) -> u32 {
        self.table.genus()
    }

    pub fn dimension(&self) -> usize {
        self.table.dimension()
    }

    pub fn eval(&self, w: &GroupWord) -> Result<RepMatrix> {
        self.eval_with(w, Parallelism::Sequential)
    }

    pub fn eval_with(&self, w: &GroupWord, par: Parallelism) -> Result<RepMatrix> {
        let m = self.table.eval_with(w, par)?;
        let factor = self.unit.character_factor(w.exponent_sum())?;
        Ok(match (factor, self.mode) {
            (UnitValue::Exact(c), Mode::Exact) => RepMatrix::Exact(scale_exact(&m, &c)),
            (UnitValue::Exact(c), Mode::Interval) => {
                RepMatrix::Exact(scale_exact(&m, &c)).into_mode(Mode::Interval)
            }
            (UnitValue::Interval(iv), _) => {
                RepMatrix::Interval(m.map(|x| iv.scale(x)))
            }
        })
    }
}

fn scale_exact(m: &Matrix<BigRational>, c: &BigRational) -> Matrix<BigRational> {
    if c.is_one() {
        m.clone()
    } else {
        m.map(|x| x * c)
    }
}

pub fn lprime_eval(lprime: &LPrime, w: &GroupWord) -> Result<RepMatrix> {
    lprime.eval(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn kernel_words() {
        let k = KernelWords::new(4);
        assert_eq!(k.tau.to_string(), "s1 s2 s3^2 s2 s1");
        assert_eq!(k.tau.exponent_sum(), 6);
        assert_eq!(k.z.exponent_sum(), 12);
        assert_eq!(k.z_degree(), 12);
        let k6 = KernelWords::new(6);
        assert_eq!(k6.tau.exponent_sum(), 10);
        assert_eq!(k6.z.exponent_sum(), 30);
    }

    #[test]
    fn unit_examples() {
        let u = solve_rescale_unit(&[(r("64"), 6)], 128).unwrap();
        assert_eq!(u.value(), &UnitValue::Exact(r("2")));
        assert!(u.verify());
        let one = solve_rescale_unit(&[(r("1"), 6)], 128).unwrap();
        assert_eq!(one.value(), &UnitValue::Exact(r("1")));
        let irr = solve_rescale_unit(&[(r("2"), 6)], 128).unwrap();
        assert!(!irr.is_exact());
        assert!(irr.verify());
    }

    #[test]
    fn incompatible_conditions() {
        // 2^(1/6) vs 3^(1/12)
        assert!(matches!(
            solve_rescale_unit(&[(r("2"), 6), (r("3"), 12)], 64),
            Err(Error::Incompatible(_))
        ));
        // 2^(1/6) = 4^(1/12)
        assert!(solve_rescale_unit(&[(r("2"), 6), (r("4"), 12)], 64).is_ok());
        assert!(matches!(
            solve_rescale_unit(&[(r("-2"), 6)], 64),
            Err(Error::NonPositiveScalar(_))
        ));
    }

    #[test]
    fn character_factor_exact_multiples() {
        let u = solve_rescale_unit(&[(r("2"), 6)], 64).unwrap();
        // u^-6 = 1/2 exactly even though u is irrational.
        assert_eq!(u.character_factor(6).unwrap(), UnitValue::Exact(r("1/2")));
        match u.character_factor(1).unwrap() {
            UnitValue::Interval(iv) => {
                assert!(rational_pow(iv.lower(), 6) <= r("1/2"));
                assert!(rational_pow(iv.upper(), 6) >= r("1/2"));
            }
            v => panic!("{v:?}"),
        }
    }
}
