//! Representation matrices in exact or certified-interval form, and the
//! comparison verdicts built on them.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{AnyMatrix, CertInterval, Matrix, Scalar};
use crate::error::{Error, Result};
use crate::par::Parallelism;

/// Evaluation mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// All-rational arithmetic; requires a rational rescale unit.
    #[default]
    Exact,
    /// Certified rational intervals; equality is never asserted.
    Interval,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Interval => "interval",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "exact" => Ok(Mode::Exact),
            "interval" => Ok(Mode::Interval),
            _ => Err(Error::Config(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RepMatrix {
    Exact(Matrix<BigRational>),
    Interval(Matrix<CertInterval>),
}

/// An entry at which two matrices certifiably differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry ({}, {}): {} vs {}", self.row, self.col, self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Distinct(Witness),
    EqualExact,
    Uncertified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Distinct(w) => write!(f, "distinct ({w})"),
            Verdict::EqualExact => write!(f, "equal-exact"),
            Verdict::Uncertified => write!(f, "uncertified"),
        }
    }
}

fn to_interval(m: &Matrix<BigRational>) -> Matrix<CertInterval> {
    m.map(|x| CertInterval::point(x.clone()))
}

impl RepMatrix {
    pub fn identity(dim: usize, mode: Mode) -> RepMatrix {
        match mode {
            Mode::Exact => RepMatrix::Exact(Matrix::identity(dim)),
            Mode::Interval => RepMatrix::Interval(Matrix::identity(dim)),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            RepMatrix::Exact(m) => m.dim(),
            RepMatrix::Interval(m) => m.dim(),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            RepMatrix::Exact(_) => Mode::Exact,
            RepMatrix::Interval(_) => Mode::Interval,
        }
    }

    pub fn into_mode(self, mode: Mode) -> RepMatrix {
        match (self, mode) {
            (RepMatrix::Exact(m), Mode::Interval) => RepMatrix::Interval(to_interval(&m)),
            (m, _) => m,
        }
    }

    pub fn as_interval(&self) -> Matrix<CertInterval> {
        match self {
            RepMatrix::Exact(m) => to_interval(m),
            RepMatrix::Interval(m) => m.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&Matrix<BigRational>> {
        match self {
            RepMatrix::Exact(m) => Some(m),
            RepMatrix::Interval(_) => None,
        }
    }

    pub fn mul(&self, other: &RepMatrix) -> Result<RepMatrix> {
        self.mul_with(other, Parallelism::Sequential)
    }

    pub fn mul_with(&self, other: &RepMatrix, mode: Parallelism) -> Result<RepMatrix> {
        Ok(match (self, other) {
            (RepMatrix::Exact(a), RepMatrix::Exact(b)) => RepMatrix::Exact(a.mul_with(b, mode)?),
            _ => RepMatrix::Interval(self.as_interval().mul_with(&other.as_interval(), mode)?),
        })
    }

    /// Block-diagonal sum; interval if any block is.
    pub fn direct_sum(blocks: &[&RepMatrix]) -> RepMatrix {
        if blocks.iter().all(|b| matches!(b, RepMatrix::Exact(_))) {
            let ms: Vec<&Matrix<BigRational>> = blocks.iter().filter_map(|b| b.as_exact()).collect();
            RepMatrix::Exact(Matrix::direct_sum(&ms))
        } else {
            let ms: Vec<Matrix<CertInterval>> = blocks.iter().map(|b| b.as_interval()).collect();
            let refs: Vec<&Matrix<CertInterval>> = ms.iter().collect();
            RepMatrix::Interval(Matrix::direct_sum(&refs))
        }
    }

    /// `[[top_left, top_right], [bottom_left, bottom_right]]` from four equal
    /// blocks, any of which may be `None` for zero.
    pub fn two_by_two(
        size: usize,
        blocks: [Option<&RepMatrix>; 4],
        mode: Mode,
    ) -> RepMatrix {
        let exact = mode == Mode::Exact
            && blocks
                .iter()
                .flatten()
                .all(|b| matches!(b, RepMatrix::Exact(_)));
        let offsets = [(0, 0), (0, size), (size, 0), (size, size)];
        if exact {
            let mut m = Matrix::<BigRational>::zeros(2 * size);
            for (b, (r, c)) in blocks.iter().zip(offsets) {
                if let Some(RepMatrix::Exact(x)) = b {
                    m.place(x, r, c);
                }
            }
            RepMatrix::Exact(m)
        } else {
            let mut m = Matrix::<CertInterval>::zeros(2 * size);
            for (b, (r, c)) in blocks.iter().zip(offsets) {
                if let Some(x) = b {
                    m.place(&x.as_interval(), r, c);
                }
            }
            RepMatrix::Interval(m)
        }
    }

    pub fn block(&self, row: usize, col: usize, size: usize) -> RepMatrix {
        match self {
            RepMatrix::Exact(m) => RepMatrix::Exact(m.block(row, col, size)),
            RepMatrix::Interval(m) => RepMatrix::Interval(m.block(row, col, size)),
        }
    }

    /// Certified zero block: exact zeros, or point-zero intervals.
    pub fn block_is_zero(&self, row: usize, col: usize, size: usize) -> bool {
        match self {
            RepMatrix::Exact(m) => m.block_is_zero(row, col, size),
            RepMatrix::Interval(m) => m.block_is_zero(row, col, size),
        }
    }

    pub fn compare(&self, other: &RepMatrix) -> Verdict {
        if self.dim() != other.dim() {
            return Verdict::Distinct(Witness {
                row: 0,
                col: 0,
                left: format!("dim {}", self.dim()),
                right: format!("dim {}", other.dim()),
            });
        }
        match (self, other) {
            (RepMatrix::Exact(a), RepMatrix::Exact(b)) => match a.first_difference(b) {
                None => Verdict::EqualExact,
                Some((row, col)) => Verdict::Distinct(Witness {
                    row,
                    col,
                    left: a.get(row, col).to_string(),
                    right: b.get(row, col).to_string(),
                }),
            },
            _ => {
                let (a, b) = (self.as_interval(), other.as_interval());
                let n = a.dim();
                for row in 0..n {
                    for col in 0..n {
                        let (x, y) = (a.get(row, col), b.get(row, col));
                        if x.is_disjoint(y) {
                            return Verdict::Distinct(Witness {
                                row,
                                col,
                                left: x.to_string(),
                                right: y.to_string(),
                            });
                        }
                    }
                }
                Verdict::Uncertified
            }
        }
    }

    pub fn compare_identity(&self) -> Verdict {
        self.compare(&RepMatrix::identity(self.dim(), self.mode()))
    }

    /// Exactly equal (exact mode) or entrywise-overlapping (interval mode).
    /// In interval mode this is compatibility, not equality.
    pub fn is_compatible(&self, other: &RepMatrix) -> bool {
        !matches!(self.compare(other), Verdict::Distinct(_))
    }

    pub fn is_compatible_with_identity(&self) -> bool {
        !matches!(self.compare_identity(), Verdict::Distinct(_))
    }

    pub fn to_any(&self) -> AnyMatrix {
        match self {
            RepMatrix::Exact(m) => AnyMatrix::Rational(m.clone()),
            RepMatrix::Interval(m) => AnyMatrix::Interval(m.clone()),
        }
    }
}

/// True when some interval entry certifiably differs from the identity.
/// `false` means "not certified", never "equal".
pub fn interval_ne_identity(m: &Matrix<CertInterval>) -> bool {
    let n = m.dim();
    (0..n).any(|i| {
        (0..n).any(|j| {
            let target = if i == j {
                <BigRational as Scalar>::one()
            } else {
                <BigRational as Scalar>::zero()
            };
            m.get(i, j).excludes(&target)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn interval_identity_checks() {
        assert!(!interval_ne_identity(&Matrix::<CertInterval>::identity(3)));
        let mut m = Matrix::<CertInterval>::identity(3);
        m.set(1, 1, CertInterval::new(r("2"), r("3")));
        assert!(interval_ne_identity(&m));
        let mut w = Matrix::<CertInterval>::identity(2);
        w.set(0, 0, CertInterval::new(r("1/2"), r("3/2")));
        assert!(!interval_ne_identity(&w));
    }

    #[test]
    fn interval_mode_never_asserts_equality() {
        let id = RepMatrix::identity(2, Mode::Interval);
        assert_eq!(id.compare_identity(), Verdict::Uncertified);
        let ex = RepMatrix::identity(2, Mode::Exact);
        assert_eq!(ex.compare_identity(), Verdict::EqualExact);
    }

    #[test]
    fn distinct_witness() {
        let a = RepMatrix::Exact(Matrix::scalar(2, r("-1")));
        match a.compare_identity() {
            Verdict::Distinct(w) => assert_eq!((w.row, w.col), (0, 0)),
            v => panic!("{v:?}"),
        }
    }
}
