//! `L = L1 (+) L2` on hyperelliptic words, word comparison, dimension
//! bookkeeping and matrix export.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::algebra::MatrixFormat;
use crate::config::RepConfig;
use crate::error::{Error, Result};
use crate::homology::{default_model, HomologyModel};
use crate::induced::InducedRep;
use crate::lk::LkGeneratorTable;
use crate::model::ResidueTable;
use crate::par::{self, Parallelism};
use crate::rep::{Mode, RepMatrix, Verdict};
use crate::rescale::LPrime;
use crate::words::{Alphabet, GroupWord, PuncturePermOrient};

#[derive(Debug, Clone)]
pub struct AssembledRep {
    l1: InducedRep,
    homology: HomologyModel,
    par: Parallelism,
}

impl AssembledRep {
    pub fn new(l1: InducedRep, homology: HomologyModel) -> Result<Self> {
        if l1.genus() != homology.genus() {
            return Err(Error::GenusMismatch {
                left: l1.genus(),
                right: homology.genus(),
            });
        }
        Ok(AssembledRep {
            l1,
            homology,
            par: Parallelism::default(),
        })
    }

    /// Builds every layer for genus `g` from a config.
    pub fn from_config(g: u32, cfg: &RepConfig) -> Result<Self> {
        let table = LkGeneratorTable::build(g)?;
        let (q0, t0) = cfg.point_for(g)?;
        let lprime = LPrime::new(table.specialize(&q0, &t0)?, cfg.precision, cfg.mode)?;
        let homology = homology_for(g, cfg)?;
        Self::new(InducedRep::new(lprime), homology)
    }

    pub fn with_parallelism(mut self, par: Parallelism) -> Self {
        self.par = par;
        self
    }

    pub fn parallelism(&self) -> Parallelism {
        self.par
    }

    pub fn genus(&self) -> u32 {
        self.l1.genus()
    }

    pub fn mode(&self) -> Mode {
        self.l1.lprime().mode()
    }

    pub fn dimension(&self) -> usize {
        self.l1.dimension() + self.homology.dimension()
    }

    pub fn induced(&self) -> &InducedRep {
        &self.l1
    }

    pub fn homology(&self) -> &HomologyModel {
        &self.homology
    }

    pub fn l1_eval(&self, w: &GroupWord) -> Result<RepMatrix> {
        self.l1.l1_eval_with(w, self.par)
    }

    pub fn l2_eval(&self, w: &GroupWord) -> Result<crate::algebra::Matrix<num_rational::BigRational>> {
        self.homology.eval(w)
    }

    /// `L(w) = diag(L1(w), L2(w))`.
    pub fn eval(&self, w: &GroupWord) -> Result<RepMatrix> {
        w.require(Alphabet::HyperMcg)?;
        let (a, b) = par::join(self.par, || self.l1_eval(w), || self.l2_eval(w));
        let (a, b) = (a?, RepMatrix::Exact(b?).into_mode(self.mode()));
        Ok(RepMatrix::direct_sum(&[&a, &b]))
    }

    /// Compares `L(w1)` and `L(w2)`.
    pub fn compare_words(&self, w1: &GroupWord, w2: &GroupWord) -> Result<Verdict> {
        let (a, b) = par::join(self.par, || self.eval(w1), || self.eval(w2));
        Ok(a?.compare(&b?))
    }

    pub fn export(&self, w: &GroupWord, path: &Path, format: MatrixFormat) -> Result<()> {
        self.eval(w)?.to_any().write_file(path, format)
    }
}

/// The homology model a config asks for: the override file if set, the
/// default otherwise, with the residue table replaced when one is given.
pub fn homology_for(g: u32, cfg: &RepConfig) -> Result<HomologyModel> {
    let model = match &cfg.homology_model {
        Some(path) => {
            let m = HomologyModel::load(path)?;
            if m.genus() != g {
                return Err(Error::GenusMismatch {
                    left: m.genus(),
                    right: g,
                });
            }
            m
        }
        None => default_model(g)?,
    };
    Ok(match &cfg.residues {
        Some(table) => override_residues(model, table)?,
        None => model,
    })
}

fn override_residues(model: HomologyModel, table: &ResidueTable) -> Result<HomologyModel> {
    let g = model.genus();
    let a = (1..g).map(|i| model.a(i).clone()).collect();
    HomologyModel::with_residues(
        g,
        a,
        model.b().clone(),
        model.c().clone(),
        model.form().clone(),
        table.clone(),
    )
}

pub fn l_eval(rep: &AssembledRep, w: &GroupWord) -> Result<RepMatrix> {
    rep.eval(w)
}

pub fn compare_words(rep: &AssembledRep, w1: &GroupWord, w2: &GroupWord) -> Result<Verdict> {
    rep.compare_words(w1, w2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub genus: u32,
    pub l1: u64,
    pub l2: u64,
    pub main: u64,
    /// `2g * C(2g - 1, 2) + 2(g - 1)`.
    pub naive: u64,
    /// `2(g - 1)(2g^2 - g + 1)`, which must equal `naive`.
    pub naive_closed: u64,
}

impl DimensionReport {
    pub fn identity_holds(&self) -> bool {
        self.naive == self.naive_closed
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={}: main {} = {} + {}, naive {} (closed form {})",
            self.genus, self.main, self.l1, self.l2, self.naive, self.naive_closed
        )
    }
}

pub fn dimension_report(g: u32) -> DimensionReport {
    let g64 = g as u64;
    let big = |n: u64| BigInt::from(n);
    let naive = big(2 * g64) * binomial(big(2 * g64 - 1), big(2)) + big(2 * (g64 - 1));
    let closed = big(2 * (g64 - 1)) * (big(2 * g64 * g64) - big(g64) + big(1));
    let to_u64 = |x: BigInt| u64::try_from(x).expect("dimensions fit in u64");
    DimensionReport {
        genus: g,
        l1: g64 * (g64 - 1),
        l2: g64 - 1,
        main: g64 * g64 - 1,
        naive: to_u64(naive),
        naive_closed: to_u64(closed),
    }
}

/// The cheap invariants of a hyperelliptic word: the puncture permutation
/// with orientation, and the parity of the `Y` exponent. The parity is only
/// an invariant of the group element when every residue is zero; otherwise
/// it is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperInvariant {
    pub perm_orient: PuncturePermOrient,
    pub y_parity: Option<u8>,
}

pub fn hyper_invariant(w: &GroupWord, residues: &ResidueTable) -> HyperInvariant {
    let y_parity = residues
        .values()
        .all(|&e| e == 0)
        .then(|| w.y_exponent().rem_euclid(2) as u8);
    HyperInvariant {
        perm_orient: w.perm_orient(),
        y_parity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn dimensions() {
        let r4 = dimension_report(4);
        assert_eq!((r4.main, r4.naive), (15, 174));
        assert_eq!(dimension_report(5).naive, 368);
        for g in 4..=12 {
            assert!(dimension_report(g).identity_holds());
        }
    }

    #[test]
    fn y_is_separated() {
        let rep = AssembledRep::from_config(4, &RepConfig::default()).unwrap();
        assert_eq!(rep.dimension(), 15);
        let y = parse_word("Y", Alphabet::HyperMcg, 4).unwrap();
        let m = rep.eval(&y).unwrap();
        assert!(matches!(m.compare_identity(), Verdict::Distinct(_)));
        assert_eq!(m.mul(&m).unwrap().compare_identity(), Verdict::EqualExact);
        let one = GroupWord::empty(Alphabet::HyperMcg, 4);
        assert!(matches!(rep.compare_words(&y, &one).unwrap(), Verdict::Distinct(_)));
    }

    #[test]
    fn invariant_parity_depends_on_residues() {
        let w = parse_word("T1 Y", Alphabet::HyperMcg, 4).unwrap();
        let zero: ResidueTable = [("centre".to_string(), 0)].into_iter().collect();
        let one: ResidueTable = [("centre".to_string(), 1)].into_iter().collect();
        assert_eq!(hyper_invariant(&w, &zero).y_parity, Some(1));
        assert_eq!(hyper_invariant(&w, &one).y_parity, None);
    }
}
