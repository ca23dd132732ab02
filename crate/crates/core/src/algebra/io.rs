//! JSON and CSV matrix files.
//!
//! JSON: `{"dim": n, "domain": "rational"|"laurent"|"interval", "entries": [...]}`
//! with `n * n` row-major entries. Rationals are `"p/q"` strings, Laurent
//! entries are lists of `[a, b, "p/q"]` triples for `c q^a t^b`, intervals
//! are `["lo", "hi"]` pairs. CSV holds rational matrices only, one row per
//! line.

use std::fs;
use std::path::Path;

use num_rational::BigRational;
use serde_json::{json, Value};

use super::rational::{format_rational, parse_rational};
use super::{CertInterval, Domain, LaurentPoly, Matrix, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
}

/// A matrix over a domain chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Rational(Matrix<BigRational>),
    Laurent(Matrix<LaurentPoly>),
    Interval(Matrix<CertInterval>),
}

impl From<Matrix<BigRational>> for AnyMatrix {
    fn from(m: Matrix<BigRational>) -> Self {
        AnyMatrix::Rational(m)
    }
}

impl From<Matrix<LaurentPoly>> for AnyMatrix {
    fn from(m: Matrix<LaurentPoly>) -> Self {
        AnyMatrix::Laurent(m)
    }
}

impl From<Matrix<CertInterval>> for AnyMatrix {
    fn from(m: Matrix<CertInterval>) -> Self {
        AnyMatrix::Interval(m)
    }
}

fn rational_json(x: &BigRational) -> Value {
    Value::String(format_rational(x))
}

fn entries_json<S: Scalar>(m: &Matrix<S>, f: impl Fn(&S) -> Value) -> Value {
    Value::Array(m.entries().iter().map(f).collect())
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    v.as_str()
        .ok_or_else(|| bad(format!("expected rational string, got {v}")))
        .and_then(parse_rational)
}

impl AnyMatrix {
    pub fn domain(&self) -> Domain {
        match self {
            AnyMatrix::Rational(_) => Domain::Rational,
            AnyMatrix::Laurent(_) => Domain::Laurent,
            AnyMatrix::Interval(_) => Domain::Interval,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyMatrix::Rational(m) => m.dim(),
            AnyMatrix::Laurent(m) => m.dim(),
            AnyMatrix::Interval(m) => m.dim(),
        }
    }

    pub fn to_json(&self) -> Value {
        let entries = match self {
            AnyMatrix::Rational(m) => entries_json(m, rational_json),
            AnyMatrix::Laurent(m) => entries_json(m, |p| {
                Value::Array(
                    p.terms()
                        .map(|(&(a, b), c)| json!([a, b, format_rational(c)]))
                        .collect(),
                )
            }),
            AnyMatrix::Interval(m) => entries_json(m, |x| {
                json!([format_rational(x.lower()), format_rational(x.upper())])
            }),
        };
        json!({
            "dim": self.dim(),
            "domain": self.domain().name(),
            "entries": entries,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("matrix JSON is always serializable")
    }

    pub fn from_json(v: &Value) -> Result<AnyMatrix> {
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing \"dim\""))? as usize;
        let domain = v
            .get("domain")
            .and_then(Value::as_str)
            .and_then(Domain::from_name)
            .ok_or_else(|| bad("missing or unknown \"domain\""))?;
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"entries\""))?;
        if entries.len() != dim * dim {
            return Err(bad(format!(
                "expected {} entries for dim {dim}, found {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(match domain {
            Domain::Rational => AnyMatrix::Rational(Matrix::from_row_major(
                dim,
                entries.iter().map(rational_from_json).collect::<Result<_>>()?,
            )?),
            Domain::Laurent => AnyMatrix::Laurent(Matrix::from_row_major(
                dim,
                entries.iter().map(laurent_from_json).collect::<Result<_>>()?,
            )?),
            Domain::Interval => AnyMatrix::Interval(Matrix::from_row_major(
                dim,
                entries.iter().map(interval_from_json).collect::<Result<_>>()?,
            )?),
        })
    }

    pub fn from_json_str(s: &str) -> Result<AnyMatrix> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    /// CSV is restricted to the rational domain.
    pub fn to_csv(&self) -> Result<String> {
        let AnyMatrix::Rational(m) = self else {
            return Err(bad(format!(
                "csv export is restricted to the rational domain, matrix is {}",
                self.domain()
            )));
        };
        let mut out = String::new();
        for row in m.rows() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn from_csv(s: &str) -> Result<AnyMatrix> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(parse_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(AnyMatrix::Rational(Matrix::from_rows(rows)?))
    }

    pub fn write_file(&self, path: &Path, format: MatrixFormat) -> Result<()> {
        let text = match format {
            MatrixFormat::Json => self.to_json_string() + "\n",
            MatrixFormat::Csv => self.to_csv()?,
        };
        fs::write(path, text)?;
        Ok(())
    }

    pub fn read_file(path: &Path, format: MatrixFormat) -> Result<AnyMatrix> {
        let text = fs::read_to_string(path)?;
        match format {
            MatrixFormat::Json => Self::from_json_str(&text),
            MatrixFormat::Csv => Self::from_csv(&text),
        }
    }
}

fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let terms = v
        .as_array()
        .ok_or_else(|| bad(format!("expected list of Laurent terms, got {v}")))?;
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        let parts = term
            .as_array()
            .filter(|p| p.len() == 3)
            .ok_or_else(|| bad(format!("expected [a, b, \"p/q\"], got {term}")))?;
        let exp = |x: &Value| {
            x.as_i64()
                .and_then(|e| i32::try_from(e).ok())
                .ok_or_else(|| bad(format!("bad exponent {x}")))
        };
        out.push(((exp(&parts[0])?, exp(&parts[1])?), rational_from_json(&parts[2])?));
    }
    Ok(LaurentPoly::from_terms(out))
}

fn interval_from_json(v: &Value) -> Result<CertInterval> {
    let pair = v
        .as_array()
        .filter(|p| p.len() == 2)
        .ok_or_else(|| bad(format!("expected [\"lo\", \"hi\"], got {v}")))?;
    let lo = rational_from_json(&pair[0])?;
    let hi = rational_from_json(&pair[1])?;
    if lo > hi {
        return Err(bad(format!("empty interval {v}")));
    }
    Ok(CertInterval::new(lo, hi))
}
