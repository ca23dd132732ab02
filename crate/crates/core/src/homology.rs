//! The `(g - 1)`-dimensional homology representation `L2`.
//!
//! The default model acts on the span of a chain of curves `c_1 .. c_{g-1}`
//! with the antisymmetric intersection form `J` (`J[i][i+1] = 1`). `T_i` is
//! the transvection `x -> x + <x, c_i> c_i`, `R` is the anti-symplectic
//! involution `diag(-1, 1, -1, ...)` with `R T_i R = T_i^-1`, and the
//! hyperelliptic involution `Y` is `-Id`.
//!
//! Residues are computed from the model: each lifted sphere relator must
//! evaluate to `Id` (residue 0) or to `C` (residue 1).

use std::path::Path;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, Matrix};
use crate::certify::CertReport;
use crate::error::{Error, Result};
use crate::model::{sphere_relators, ResidueTable};
use crate::words::{Alphabet, Family, GroupWord, MIN_GENUS};

#[derive(Debug, Clone, PartialEq)]
pub struct HomologyModel {
    genus: u32,
    a: Vec<Matrix<BigRational>>,
    a_inv: Vec<Matrix<BigRational>>,
    b: Matrix<BigRational>,
    b_inv: Matrix<BigRational>,
    c: Matrix<BigRational>,
    c_inv: Matrix<BigRational>,
    j: Matrix<BigRational>,
    residues: ResidueTable,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// The chain intersection form on `g - 1` curves.
pub fn chain_form(g: u32) -> Matrix<BigRational> {
    let d = (g - 1) as usize;
    let mut j = Matrix::zeros(d);
    for i in 0..d.saturating_sub(1) {
        j.set(i, i + 1, int(1));
        j.set(i + 1, i, int(-1));
    }
    j
}

/// `I + c c^T J^T` for a curve `c`.
pub fn transvection(j: &Matrix<BigRational>, c: &[BigRational]) -> Matrix<BigRational> {
    let d = j.dim();
    // (J c)_k
    let jc: Vec<BigRational> = (0..d)
        .map(|k| (0..d).map(|l| j.get(k, l) * &c[l]).sum())
        .collect();
    let mut m = Matrix::identity(d);
    for r in 0..d {
        for s in 0..d {
            let v = m.get(r, s) + &c[r] * &jc[s];
            m.set(r, s, v);
        }
    }
    m
}

impl HomologyModel {
    /// Builds a model from its generator images and computes residues.
    pub fn from_parts(
        g: u32,
        a: Vec<Matrix<BigRational>>,
        b: Matrix<BigRational>,
        c: Matrix<BigRational>,
        j: Matrix<BigRational>,
    ) -> Result<Self> {
        let mut model = Self::unchecked(g, a, b, c, j)?;
        model.residues = model.compute_residues()?;
        Ok(model)
    }

    /// Builds a model with a caller-supplied residue table. Nothing is checked
    /// beyond shapes and invertibility; run [`residue_check`] on the result.
    pub fn with_residues(
        g: u32,
        a: Vec<Matrix<BigRational>>,
        b: Matrix<BigRational>,
        c: Matrix<BigRational>,
        j: Matrix<BigRational>,
        residues: ResidueTable,
    ) -> Result<Self> {
        let mut model = Self::unchecked(g, a, b, c, j)?;
        model.residues = residues;
        Ok(model)
    }

    fn unchecked(
        g: u32,
        a: Vec<Matrix<BigRational>>,
        b: Matrix<BigRational>,
        c: Matrix<BigRational>,
        j: Matrix<BigRational>,
    ) -> Result<Self> {
        if g < MIN_GENUS {
            return Err(Error::GenusTooSmall {
                genus: g,
                min: MIN_GENUS,
            });
        }
        let d = (g - 1) as usize;
        if a.len() != d {
            return Err(Error::InvalidModel(format!(
                "expected {d} transvection matrices, got {}",
                a.len()
            )));
        }
        for m in a.iter().chain([&b, &c, &j]) {
            if m.dim() != d {
                return Err(Error::DimensionMismatch {
                    left: d,
                    right: m.dim(),
                });
            }
        }
        let a_inv = a.iter().map(|m| m.inverse()).collect::<Result<Vec<_>>>()?;
        let b_inv = b.inverse()?;
        let c_inv = c.inverse()?;
        Ok(HomologyModel {
            genus: g,
            a,
            a_inv,
            b,
            b_inv,
            c,
            c_inv,
            j,
            residues: ResidueTable::new(),
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn dimension(&self) -> usize {
        (self.genus - 1) as usize
    }

    /// Image of `T_i`, 1-based.
    pub fn a(&self, i: u32) -> &Matrix<BigRational> {
        &self.a[(i - 1) as usize]
    }

    pub fn b(&self) -> &Matrix<BigRational> {
        &self.b
    }

    pub fn c(&self) -> &Matrix<BigRational> {
        &self.c
    }

    pub fn form(&self) -> &Matrix<BigRational> {
        &self.j
    }

    pub fn residues(&self) -> &ResidueTable {
        &self.residues
    }

    /// Replaces one generator image; used to build negative controls.
    pub fn with_a(mut self, i: u32, m: Matrix<BigRational>) -> Result<Self> {
        let k = (i - 1) as usize;
        self.a_inv[k] = m.inverse()?;
        self.a[k] = m;
        Ok(self)
    }

    pub fn with_c(mut self, m: Matrix<BigRational>) -> Result<Self> {
        self.c_inv = m.inverse()?;
        self.c = m;
        Ok(self)
    }

    fn letter(&self, family: Family, index: Option<u32>, exp: i64) -> &Matrix<BigRational> {
        let inv = exp < 0;
        match (family, index) {
            (Family::T, Some(i)) if inv => &self.a_inv[(i - 1) as usize],
            (Family::T, Some(i)) => &self.a[(i - 1) as usize],
            (Family::R, _) if inv => &self.b_inv,
            (Family::R, _) => &self.b,
            (Family::Y, _) if inv => &self.c_inv,
            (Family::Y, _) => &self.c,
            _ => unreachable!("hyper alphabet only"),
        }
    }

    /// `L2(w)` for a word in `T_i, R, Y`.
    pub fn eval(&self, w: &GroupWord) -> Result<Matrix<BigRational>> {
        w.require(Alphabet::HyperMcg)?;
        if w.genus() != self.genus {
            return Err(Error::GenusMismatch {
                left: w.genus(),
                right: self.genus,
            });
        }
        let mut acc = Matrix::identity(self.dimension());
        for l in w.letters() {
            let m = self.letter(l.gen.family(), l.gen.index(), l.exp);
            for _ in 0..l.exp.unsigned_abs() {
                acc = acc.mul(m)?;
            }
        }
        Ok(acc)
    }

    fn compute_residues(&self) -> Result<ResidueTable> {
        let mut out = ResidueTable::new();
        for rel in sphere_relators(self.genus) {
            let m = self.eval(&rel.lift)?;
            let e = if m.is_identity() {
                0
            } else if m == self.c {
                1
            } else {
                return Err(Error::InconsistentModel {
                    relator: rel.name(),
                    detail: "lift is neither Id nor C".into(),
                });
            };
            out.insert(rel.name(), e);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let mat = |m: &Matrix<BigRational>| -> Value {
            m.rows()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into()
        };
        json!({
            "g": self.genus,
            "A": self.a.iter().map(mat).collect::<Vec<_>>(),
            "B": mat(&self.b),
            "C": mat(&self.c),
            "J": mat(&self.j),
            "residues": self.residues,
        })
    }

    /// Reads a model override. Residues are taken from the file when
    /// present, otherwise computed.
    pub fn from_json(v: &Value) -> Result<Self> {
        let g = v
            .get("g")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Format("model needs integer \"g\"".into()))? as u32;
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Format(format!("model needs {k:?}")));
        let a = field("A")?
            .as_array()
            .ok_or_else(|| Error::Format("\"A\" must be a list of matrices".into()))?
            .iter()
            .map(json_matrix)
            .collect::<Result<Vec<_>>>()?;
        let b = json_matrix(field("B")?)?;
        let c = json_matrix(field("C")?)?;
        let j = match v.get("J") {
            Some(j) => json_matrix(j)?,
            None => chain_form(g),
        };
        match v.get("residues") {
            Some(r) => {
                let residues: ResidueTable = serde_json::from_value(r.clone())?;
                Self::with_residues(g, a, b, c, j, residues)
            }
            None => Self::from_parts(g, a, b, c, j),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&serde_json::from_str(&text)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(&self.to_json())?)?;
        Ok(())
    }
}

fn json_entry(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| Error::Format(format!("non-integer number {n}; use \"p/q\""))),
        other => Err(Error::Format(format!("bad matrix entry {other}"))),
    }
}

fn json_matrix(v: &Value) -> Result<Matrix<BigRational>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Format("matrix must be a list of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Format("row must be a list".into()))?
                .iter()
                .map(json_entry)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// The chain-transvection model with `C = -Id`.
pub fn default_model(g: u32) -> Result<HomologyModel> {
    if g < MIN_GENUS {
        return Err(Error::GenusTooSmall {
            genus: g,
            min: MIN_GENUS,
        });
    }
    let d = (g - 1) as usize;
    let j = chain_form(g);
    let a = (0..d)
        .map(|i| {
            let c: Vec<BigRational> = (0..d).map(|k| int((k == i) as i64)).collect();
            transvection(&j, &c)
        })
        .collect();
    let mut b = Matrix::zeros(d);
    for i in 0..d {
        b.set(i, i, int(if i % 2 == 0 { -1 } else { 1 }));
    }
    let c = Matrix::scalar(d, int(-1));
    HomologyModel::from_parts(g, a, b, c, j)
}

pub fn l2_eval(model: &HomologyModel, w: &GroupWord) -> Result<Matrix<BigRational>> {
    model.eval(w)
}

/// Checks every sphere relator against its residue, plus the structural
/// requirements on `C`.
pub fn residue_check(model: &HomologyModel) -> CertReport {
    let g = model.genus;
    let mut report = CertReport::new();
    let id = Matrix::<BigRational>::identity(model.dimension());
    report.check(
        format!("g={g} homology.separation"),
        model.c != id,
        "C != Id".to_string(),
    );
    let c2 = model.c.mul(&model.c).expect("square");
    report.check(
        format!("g={g} homology.c-involution"),
        c2.is_identity(),
        match c2.first_difference(&id) {
            None => "C^2 = Id".to_string(),
            Some((r, s)) => format!("C^2 differs from Id at ({r}, {s})"),
        },
    );
    let gens: Vec<(String, &Matrix<BigRational>)> = (1..g)
        .map(|i| (format!("T{i}"), model.a(i)))
        .chain([("R".to_string(), &model.b)])
        .collect();
    let mut central = true;
    let mut detail = "C commutes with every T_i and R".to_string();
    for (name, m) in &gens {
        let (l, r) = (model.c.mul(m).expect("dims"), m.mul(&model.c).expect("dims"));
        if let Some((i, j)) = l.first_difference(&r) {
            central = false;
            detail = format!("C {name} != {name} C at ({i}, {j})");
            break;
        }
    }
    report.check(format!("g={g} homology.c-central"), central, detail);
    let mut unimodular = true;
    let mut detail = "det = +-1 for T_i, R, C".to_string();
    for (name, m) in gens.iter().map(|(n, m)| (n.as_str(), *m)).chain([("C", &model.c)]) {
        let det = m.determinant();
        if !det.abs().is_one() {
            unimodular = false;
            detail = format!("det {name} = {det}");
            break;
        }
    }
    report.check(format!("g={g} homology.unimodular"), unimodular, detail);
    for rel in sphere_relators(g) {
        let name = rel.name();
        let label = format!("g={g} homology.residue {name}");
        let m = match model.eval(&rel.lift) {
            Ok(m) => m,
            Err(e) => {
                report.check(label, false, e.to_string());
                continue;
            }
        };
        let observed = if m.is_identity() {
            Some(0u8)
        } else if m == model.c {
            Some(1)
        } else {
            None
        };
        let expected = model.residues.get(&name).copied();
        let (ok, detail) = match (observed, expected) {
            (Some(o), Some(e)) if o == e => (true, format!("e = {e}")),
            (Some(o), Some(e)) => (false, format!("table says {e}, model gives {o}")),
            (Some(o), None) => (false, format!("missing from table, model gives {o}")),
            (None, _) => {
                let (r, s) = m.first_difference(&id).unwrap_or((0, 0));
                let v = m.get(r, s);
                let v = if v.is_zero() { "0".to_string() } else { v.to_string() };
                (false, format!("lift is neither Id nor C: entry ({r}, {s}) = {v}"))
            }
        };
        report.check(label, ok, detail);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(s: &str, g: u32) -> GroupWord {
        parse_word(s, Alphabet::HyperMcg, g).unwrap()
    }

    #[test]
    fn g4_basics() {
        let m = default_model(4).unwrap();
        assert_eq!(m.dimension(), 3);
        for i in 1..4 {
            assert!(m.a(i).determinant().is_one());
            assert!(m.a(i).is_integral());
        }
        assert_eq!(m.eval(&w("Y", 4)).unwrap(), Matrix::scalar(3, int(-1)));
        assert!(m.eval(&w("Y Y", 4)).unwrap().is_identity());
        let lhs = m.eval(&w("T1 T2 T1", 4)).unwrap();
        let rhs = m.eval(&w("T2 T1 T2", 4)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn default_residues() {
        for g in 4..=12u32 {
            let m = default_model(g).unwrap();
            let report = residue_check(&m);
            assert!(report.all_pass(), "g={g}\n{}", report.render());
            for (name, e) in m.residues() {
                let want = if name == "centre" { (g % 2) as u8 } else { 0 };
                assert_eq!(*e, want, "g={g} {name}");
            }
        }
    }

    #[test]
    fn broken_generator_fails_braid() {
        let m = default_model(4).unwrap();
        let doubled = m.a(1).map(|x| x * int(2));
        let bad = m.with_a(1, doubled).unwrap();
        let report = residue_check(&bad);
        assert!(!report.all_pass());
        assert!(report.failures().any(|e| e.name.contains("braid(1)")));
        let m = default_model(4).unwrap();
        assert!(matches!(
            HomologyModel::from_parts(4, vec![m.a(1).map(|x| x * int(2)), m.a(2).clone(), m.a(3).clone()], m.b.clone(), m.c.clone(), m.j.clone()),
            Err(Error::InconsistentModel { .. })
        ));
    }

    #[test]
    fn trivial_c_is_flagged() {
        let m = default_model(4).unwrap().with_c(Matrix::identity(3)).unwrap();
        let report = residue_check(&m);
        assert!(report.failures().any(|e| e.name.ends_with("homology.separation")));
    }

    #[test]
    fn json_round_trip() {
        let m = default_model(5).unwrap();
        let back = HomologyModel::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.json");
        m.save(&path).unwrap();
        assert_eq!(HomologyModel::load(&path).unwrap(), m);
    }

    #[test]
    fn integer_entries_accepted() {
        let v = json!({
            "g": 4,
            "A": [[[1,-1,0],[0,1,0],[0,0,1]], [[1,0,0],[1,1,-1],[0,0,1]], [[1,0,0],[0,1,0],[0,1,1]]],
            "B": [[-1,0,0],[0,1,0],[0,0,-1]],
            "C": [[-1,0,0],[0,-1,0],[0,0,-1]],
        });
        let m = HomologyModel::from_json(&v).unwrap();
        assert_eq!(m, default_model(4).unwrap());
    }
}
