//! The presented-group model of the hyperelliptic group: generators
//! `T_1 .. T_{g-1}, R, Y`, relators = lifted sphere relators times `Y^e`,
//! plus `Y^2` and centrality of `Y`.
//!
//! The extended sphere group `M^+-(S_{0,g,1})` is presented by the braid
//! relators, the centre word `(s_1 ... s_{g-1})^g`, `R^2`, and
//! `R s_i R^-1 s_i`. The residue `e` of each relator records which power of
//! `Y` its lift equals in the hyperelliptic group.

use std::collections::BTreeMap;
use std::fmt;

use crate::assembly::AssembledRep;
use crate::certify::CertReport;
use crate::error::{Error, Result};
use crate::rep::Verdict;
use crate::rescale::KernelWords;
use crate::words::{Alphabet, Generator, GroupWord, MIN_GENUS};

/// Relator name -> power of `Y` (0 or 1) its lift equals.
pub type ResidueTable = BTreeMap<String, u8>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelatorKind {
    Braid(u32),
    Far(u32, u32),
    Centre,
    ReflSquare,
    ReflConj(u32),
    YSquare,
    YCommT(u32),
    YCommR,
}

impl RelatorKind {
    pub fn name(&self) -> String {
        match *self {
            RelatorKind::Braid(i) => format!("braid({i})"),
            RelatorKind::Far(i, j) => format!("far({i},{j})"),
            RelatorKind::Centre => "centre".into(),
            RelatorKind::ReflSquare => "refl-square".into(),
            RelatorKind::ReflConj(i) => format!("refl-conj({i})"),
            RelatorKind::YSquare => "y-square".into(),
            RelatorKind::YCommT(i) => format!("y-comm(T{i})"),
            RelatorKind::YCommR => "y-comm(R)".into(),
        }
    }

    /// Sphere relators carry a residue slot; the `Y` relators do not.
    pub fn has_residue(&self) -> bool {
        !matches!(
            self,
            RelatorKind::YSquare | RelatorKind::YCommT(_) | RelatorKind::YCommR
        )
    }
}

/// A sphere relator lifted letterwise (`s_i -> T_i`) to the hyperelliptic
/// alphabet, before any `Y` correction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedRelator {
    pub kind: RelatorKind,
    pub lift: GroupWord,
}

impl LiftedRelator {
    pub fn name(&self) -> String {
        self.kind.name()
    }
}

fn hyper(g: u32, letters: &[(Generator, i64)]) -> GroupWord {
    GroupWord::from_letters(Alphabet::HyperMcg, g, letters.iter().copied())
        .expect("relator letters are in range")
}

/// The sphere relators in the `T`/`R` alphabet, in a fixed order.
pub fn sphere_relators(g: u32) -> Vec<LiftedRelator> {
    let t = Generator::t;
    let r = Generator::r();
    let mut out = Vec::new();
    for i in 1..g - 1 {
        out.push(LiftedRelator {
            kind: RelatorKind::Braid(i),
            lift: hyper(
                g,
                &[(t(i), 1), (t(i + 1), 1), (t(i), 1), (t(i + 1), -1), (t(i), -1), (t(i + 1), -1)],
            ),
        });
    }
    for i in 1..g {
        for j in i + 2..g {
            out.push(LiftedRelator {
                kind: RelatorKind::Far(i, j),
                lift: hyper(g, &[(t(i), 1), (t(j), 1), (t(i), -1), (t(j), -1)]),
            });
        }
    }
    out.push(LiftedRelator {
        kind: RelatorKind::Centre,
        lift: KernelWords::new(g).z.lift_to_hyper().expect("braid word"),
    });
    out.push(LiftedRelator {
        kind: RelatorKind::ReflSquare,
        lift: hyper(g, &[(r, 2)]),
    });
    for i in 1..g {
        out.push(LiftedRelator {
            kind: RelatorKind::ReflConj(i),
            lift: hyper(g, &[(r, 1), (t(i), 1), (r, -1), (t(i), 1)]),
        });
    }
    out
}

/// The relators of the extended sphere group (lifts projected back).
pub fn sphere_presentation(g: u32) -> Vec<(String, GroupWord)> {
    sphere_relators(g)
        .into_iter()
        .map(|r| (r.name(), r.lift.project_to_sphere().expect("hyper word")))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedRelator {
    pub kind: RelatorKind,
    pub residue: u8,
    pub word: GroupWord,
}

impl TaggedRelator {
    pub fn name(&self) -> String {
        self.kind.name()
    }
}

impl fmt::Display for TaggedRelator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.has_residue() {
            write!(f, "{:<14} e={}  {}", self.name(), self.residue, self.word)
        } else {
            write!(f, "{:<14}      {}", self.name(), self.word)
        }
    }
}

/// Every relator of the presented hyperelliptic group, tagged with its
/// residue. Sphere relators become `lift * Y^-e`.
pub fn relator_suite(g: u32, residues: &ResidueTable) -> Result<Vec<TaggedRelator>> {
    if g < MIN_GENUS {
        return Err(Error::GenusTooSmall {
            genus: g,
            min: MIN_GENUS,
        });
    }
    let y = Generator::y();
    let mut out = Vec::new();
    for rel in sphere_relators(g) {
        let name = rel.name();
        let residue = *residues.get(&name).ok_or_else(|| {
            Error::InconsistentModel {
                relator: name.clone(),
                detail: "missing from the residue table".into(),
            }
        })?;
        let mut word = rel.lift.clone();
        word.push(y, -(residue as i64))?;
        out.push(TaggedRelator {
            kind: rel.kind,
            residue,
            word,
        });
    }
    out.push(TaggedRelator {
        kind: RelatorKind::YSquare,
        residue: 0,
        word: hyper(g, &[(y, 2)]),
    });
    for i in 1..g {
        out.push(TaggedRelator {
            kind: RelatorKind::YCommT(i),
            residue: 0,
            word: hyper(g, &[(y, 1), (Generator::t(i), 1), (y, -1), (Generator::t(i), -1)]),
        });
    }
    out.push(TaggedRelator {
        kind: RelatorKind::YCommR,
        residue: 0,
        word: hyper(g, &[(y, 1), (Generator::r(), 1), (y, -1), (Generator::r(), -1)]),
    });
    Ok(out)
}

/// The model group for one genus.
#[derive(Debug, Clone)]
pub struct PresentedGroup {
    genus: u32,
    residues: ResidueTable,
    relators: Vec<TaggedRelator>,
}

impl PresentedGroup {
    pub fn new(g: u32, residues: ResidueTable) -> Result<Self> {
        let relators = relator_suite(g, &residues)?;
        Ok(PresentedGroup {
            genus: g,
            residues,
            relators,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn relators(&self) -> &[TaggedRelator] {
        &self.relators
    }

    pub fn residues(&self) -> &ResidueTable {
        &self.residues
    }

    /// The parity of the `Y` exponent is a group invariant exactly when
    /// every residue is zero.
    pub fn y_parity_is_invariant(&self) -> bool {
        self.residues.values().all(|&e| e == 0)
    }
}

/// Checks the commuting square for `w`: `L1` factors through the projection,
/// and inserting `Y` at any position leaves `L1` unchanged and negates `L2`.
pub fn verify_word_maps(rep: &AssembledRep, w: &GroupWord) -> Result<CertReport> {
    let mut report = CertReport::new();
    let g = rep.genus();
    let l1 = rep.l1_eval(w)?;
    let via_sphere = rep.induced().induced_eval(&w.project_to_sphere()?)?;
    report.check(
        format!("g={g} word-maps.l1-factors-through-projection"),
        l1.is_compatible(&via_sphere),
        format!("{w}"),
    );
    let l2 = rep.l2_eval(w)?;
    let c = rep.homology().c().clone();
    let y = hyper(g, &[(Generator::y(), 1)]);
    let mut l1_ok = true;
    let mut l2_ok = true;
    let mut witness = String::new();
    for pos in 0..=w.syllable_length() {
        let wy = w.insert_at(pos, &y)?;
        let l1y = rep.l1_eval(&wy)?;
        if let Verdict::Distinct(d) = l1y.compare(&l1) {
            l1_ok = false;
            witness = format!("insert Y at {pos}: {d}");
        }
        let expected = c.mul(&l2)?;
        if let Some((i, j)) = rep.l2_eval(&wy)?.first_difference(&expected) {
            l2_ok = false;
            witness = format!("insert Y at {pos}: L2 differs from C*L2 at ({i}, {j})");
        }
    }
    report.check(
        format!("g={g} word-maps.y-insertion-l1-unchanged"),
        l1_ok,
        if l1_ok { format!("{w}") } else { witness.clone() },
    );
    report.check(
        format!("g={g} word-maps.y-insertion-l2-signed"),
        l2_ok,
        if l2_ok { format!("{w}") } else { witness },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn zero_residues(g: u32) -> ResidueTable {
        sphere_relators(g).iter().map(|r| (r.name(), 0)).collect()
    }

    #[test]
    fn counts() {
        for g in 4..=9u32 {
            let far = (1..g).map(|i| (i + 2..g).count() as u32).sum::<u32>();
            let suite = relator_suite(g, &zero_residues(g)).unwrap();
            // braid + far + centre + R^2 + conj + Y^2 + [Y,T_i] + [Y,R]
            let expected = (g - 2) + far + 1 + 1 + (g - 1) + 1 + (g - 1) + 1;
            assert_eq!(suite.len() as u32, expected, "g={g}");
        }
        let far4 = sphere_relators(4)
            .iter()
            .filter(|r| matches!(r.kind, RelatorKind::Far(..)))
            .count();
        assert_eq!(far4, 1);
    }

    #[test]
    fn g4_examples() {
        let suite = relator_suite(4, &zero_residues(4)).unwrap();
        let braid1 = parse_word("T1 T2 T1 T2^-1 T1^-1 T2^-1", Alphabet::HyperMcg, 4).unwrap();
        assert!(suite.iter().any(|r| r.word == braid1));
        let centre = parse_word("(T1 T2 T3)^4", Alphabet::HyperMcg, 4).unwrap();
        assert!(suite.iter().any(|r| r.word == centre));
        assert!(suite.iter().any(|r| r.kind == RelatorKind::Far(1, 3)));
    }

    #[test]
    fn residue_appends_y() {
        let mut res = zero_residues(5);
        res.insert("centre".into(), 1);
        let suite = relator_suite(5, &res).unwrap();
        let c = suite.iter().find(|r| r.kind == RelatorKind::Centre).unwrap();
        assert_eq!(c.word.y_exponent(), -1);
        assert!(!PresentedGroup::new(5, res).unwrap().y_parity_is_invariant());
    }

    #[test]
    fn missing_residue_is_an_error() {
        assert!(matches!(
            relator_suite(4, &ResidueTable::new()),
            Err(Error::InconsistentModel { .. })
        ));
        assert!(matches!(
            relator_suite(3, &ResidueTable::new()),
            Err(Error::GenusTooSmall { .. })
        ));
    }

    #[test]
    fn projection_recovers_sphere_relators() {
        let suite = relator_suite(5, &zero_residues(5)).unwrap();
        let sphere = sphere_presentation(5);
        for (rel, (name, word)) in suite.iter().zip(&sphere) {
            assert_eq!(&rel.name(), name);
            assert_eq!(&rel.word.project_to_sphere().unwrap(), word);
        }
        for rel in &suite[sphere.len()..] {
            // Y relators project to the empty word.
            assert!(rel.word.project_to_sphere().unwrap().is_empty());
        }
    }
}
