//! Certification reports: named pass/fail checks with witnesses, rendered
//! deterministically.

use std::fmt;

use crate::algebra::{LaurentPoly, Matrix};
use crate::assembly::{dimension_report, AssembledRep};
use crate::config::RepConfig;
use crate::error::{Error, Result};
use crate::garside::is_trivial_braid;
use crate::homology::residue_check;
use crate::induced::split_by_orientation;
use crate::lk::LkGeneratorTable;
use crate::model::{relator_suite, sphere_presentation};
use crate::par::{self, Parallelism};
use crate::rep::{Mode, RepMatrix, Verdict};
use crate::rescale::{check_scalarity, KernelWords};
use crate::sample::WordSampler;
use crate::words::{parse_word, Alphabet, GroupWord, MIN_GENUS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Interval arithmetic could neither confirm nor refute.
    Uncertified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Uncertified => "UNCERTIFIED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CertReport {
    entries: Vec<CheckEntry>,
}

impl CertReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.entries.push(CheckEntry {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, status, detail);
    }

    pub fn extend(&mut self, other: CertReport) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[CheckEntry] {
        &self.entries
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// Every entry passed. Uncertified entries count as not passing.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    /// One line per check plus a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{:<11} {}: {}\n", e.status, e.name, e.detail));
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} uncertified\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Uncertified)
        ));
        out
    }
}

impl fmt::Display for CertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn verdict_status(v: &Verdict) -> Status {
    match v {
        Verdict::EqualExact => Status::Pass,
        Verdict::Distinct(_) => Status::Fail,
        Verdict::Uncertified => Status::Uncertified,
    }
}

/// `Pass` when `m` is the identity exactly, or compatible with it in
/// interval mode (the only positive answer intervals can give).
fn identity_status(m: &RepMatrix) -> (Status, String) {
    match m.compare_identity() {
        Verdict::EqualExact => (Status::Pass, "= Id exactly".into()),
        Verdict::Uncertified => (Status::Pass, "compatible with Id (interval)".into()),
        Verdict::Distinct(w) => (Status::Fail, w.to_string()),
    }
}

fn laurent_diff(a: &Matrix<LaurentPoly>, b: &Matrix<LaurentPoly>) -> String {
    match a.first_difference(b) {
        None => "equal".into(),
        Some((r, c)) => format!("entry ({r}, {c}): {} vs {}", a.get(r, c), b.get(r, c)),
    }
}

fn braid(g: u32, text: &str) -> GroupWord {
    parse_word(text, Alphabet::Braid, g).expect("well-formed")
}

/// Symbolic Lawrence–Krammer checks: inverse pairs, braid relations, far
/// commutations, and the centre scalar.
pub fn lk_checks(table: &LkGeneratorTable, par: Parallelism) -> CertReport {
    let g = table.genus();
    let mut report = CertReport::new();
    let ks: Vec<u32> = (1..g).collect();
    let inverses = par::map(par, &ks, |&k| {
        table.generator(k).mul(table.inverse(k)).map(|m| m.is_identity())
    });
    for (k, ok) in ks.iter().zip(inverses) {
        report.check(
            format!("g={g} lk.inverse(s{k})"),
            ok.unwrap_or(false),
            "M_k M_k^-1 = Id",
        );
    }
    let mut pairs: Vec<(String, GroupWord, GroupWord)> = Vec::new();
    for i in 1..g - 1 {
        pairs.push((
            format!("braid({i})"),
            braid(g, &format!("s{i} s{} s{i}", i + 1)),
            braid(g, &format!("s{} s{i} s{}", i + 1, i + 1)),
        ));
    }
    for i in 1..g {
        for j in i + 2..g {
            pairs.push((
                format!("far({i},{j})"),
                braid(g, &format!("s{i} s{j}")),
                braid(g, &format!("s{j} s{i}")),
            ));
        }
    }
    let results = par::map(par, &pairs, |(_, a, b)| {
        let (ma, mb) = (table.eval(a), table.eval(b));
        match (ma, mb) {
            (Ok(ma), Ok(mb)) => (ma == mb, laurent_diff(&ma, &mb)),
            (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
        }
    });
    for ((name, _, _), (ok, detail)) in pairs.iter().zip(results) {
        report.check(format!("g={g} lk.{name}"), ok, detail);
    }
    let z = KernelWords::new(g).z;
    let expected = LaurentPoly::qt(2 * g as i32, 2);
    let (ok, detail) = match table.eval(&z) {
        Ok(m) => match m.as_scalar() {
            Ok(c) if c == expected => (true, format!("LK(z) = ({c}) Id")),
            Ok(c) => (false, format!("LK(z) = ({c}) Id, expected {expected}")),
            Err((r, c)) => (false, format!("not scalar at ({r}, {c})")),
        },
        Err(e) => (false, e.to_string()),
    };
    report.check(format!("g={g} lk.centre-scalar"), ok, detail);
    report
}

/// `LK(w) = Id` iff the Garside normal form of `w` is trivial, over a mix of
/// random words and conjugated relators.
pub fn garside_agreement(
    table: &LkGeneratorTable,
    samples: usize,
    max_len: usize,
    seed: u64,
    par: Parallelism,
) -> (usize, Vec<String>) {
    let g = table.genus();
    let mut sampler = WordSampler::new(seed, g);
    let words: Vec<GroupWord> = (0..samples)
        .map(|k| {
            if k % 2 == 0 {
                sampler.braid_word(max_len)
            } else {
                sampler.trivial_braid(max_len)
            }
        })
        .collect();
    let outcomes = par::map(par, &words, |w| {
        let lk = table.eval(w).map(|m| m.is_identity());
        let gs = is_trivial_braid(w);
        match (lk, gs) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(a), Ok(b)) => Some(format!("{w}: lk trivial {a}, garside trivial {b}")),
            (Err(e), _) | (_, Err(e)) => Some(format!("{w}: {e}")),
        }
    });
    (words.len(), outcomes.into_iter().flatten().collect())
}

/// Every check for one genus.
pub fn certify_genus(g: u32, cfg: &RepConfig, par: Parallelism) -> Result<CertReport> {
    if g < MIN_GENUS {
        return Err(Error::GenusTooSmall {
            genus: g,
            min: MIN_GENUS,
        });
    }
    let mut report = CertReport::new();
    let table = LkGeneratorTable::build(g)?;
    report.extend(lk_checks(&table, par));

    let (n, bad) = garside_agreement(&table, cfg.samples, cfg.max_length, cfg.seed, par);
    report.check(
        format!("g={g} garside.agreement"),
        bad.is_empty(),
        match bad.first() {
            None => format!("{n} words, 0 disagreements"),
            Some(w) => format!("{} of {n} disagree, first {w}", bad.len()),
        },
    );

    let (q0, t0) = cfg.point_for(g)?;
    let spec = table.specialize(&q0, &t0)?;
    let kernel = KernelWords::new(g);
    match check_scalarity(&spec, &kernel.z) {
        Ok(c) => report.check(format!("g={g} rescale.z-scalar"), true, format!("lambda_z = {c}")),
        Err(e) => report.check(format!("g={g} rescale.z-scalar"), false, e.to_string()),
    }
    // tau is part of the kernel contract, so it is checked like z. It is not
    // central in B_g and this check is expected to fail with a witness.
    match check_scalarity(&spec, &kernel.tau) {
        Ok(c) => report.check(format!("g={g} rescale.tau-scalar"), true, format!("lambda_tau = {c}")),
        Err(e) => report.check(format!("g={g} rescale.tau-scalar"), false, e.to_string()),
    }

    let rep = AssembledRep::from_config(g, cfg)?.with_parallelism(par);
    let lprime = rep.induced().lprime();
    report.check(
        format!("g={g} rescale.unit"),
        lprime.unit().verify(),
        lprime.unit().certificate(),
    );
    let (status, detail) = identity_status(&lprime.eval(&kernel.z)?);
    report.push(format!("g={g} rescale.lprime(z)"), status, detail);

    report.extend(induced_checks(&rep, cfg)?);
    report.extend(residue_check(rep.homology()));
    report.extend(relator_checks(&rep)?);
    report.extend(separation_checks(&rep)?);

    let dims = dimension_report(g);
    let main = rep.eval(&GroupWord::empty(Alphabet::HyperMcg, g))?.dim();
    report.check(
        format!("g={g} dims.main"),
        main as u64 == dims.main && main as u64 == (g * g - 1) as u64,
        format!("dim L = {main}"),
    );
    report.check(format!("g={g} dims.identity"), dims.identity_holds(), dims.to_string());
    Ok(report)
}

fn induced_checks(rep: &AssembledRep, cfg: &RepConfig) -> Result<CertReport> {
    let g = rep.genus();
    let l1 = rep.induced();
    let n = l1.lprime().dimension();
    let mut report = CertReport::new();
    let mut sampler = WordSampler::new(cfg.seed.wrapping_add(1), g);
    let words: Vec<GroupWord> = (0..cfg.samples).map(|_| sampler.sphere_word(cfg.max_length)).collect();
    let results = par::map(rep.parallelism(), &words, |w| -> Result<Option<String>> {
        let m = l1.induced_eval(w)?;
        let (_, sign) = split_by_orientation(w)?;
        let diagonal = m.block_is_zero(0, n, n) && m.block_is_zero(n, 0, n);
        let anti = m.block_is_zero(0, 0, n) && m.block_is_zero(n, n, n);
        let ok = if sign > 0 { diagonal } else { anti };
        Ok((!ok).then(|| format!("{w} (sign {sign:+})")))
    });
    let mut bad = Vec::new();
    for r in results {
        bad.extend(r?);
    }
    report.check(
        format!("g={g} induced.block-structure"),
        bad.is_empty(),
        match bad.first() {
            None => format!("{} words", words.len()),
            Some(w) => format!("wrong block shape for {w}"),
        },
    );
    let r = parse_word("R", Alphabet::SphereExt, g)?;
    let mr = l1.induced_eval(&r)?;
    let (status, detail) = identity_status(&mr.mul(&mr)?);
    report.push(format!("g={g} induced.R-squared"), status, detail);

    // Homomorphism on consecutive sample pairs.
    let pairs: Vec<(&GroupWord, &GroupWord)> = words.iter().zip(words.iter().skip(1)).take(20).collect();
    let mut status = Status::Pass;
    let mut detail = format!("{} pairs", pairs.len());
    for (a, b) in pairs {
        let lhs = l1.induced_eval(&a.compose(b)?)?;
        let rhs = l1.induced_eval(a)?.mul(&l1.induced_eval(b)?)?;
        let v = lhs.compare(&rhs);
        if let Verdict::Distinct(w) = &v {
            status = Status::Fail;
            detail = format!("{a} | {b}: {w}");
            break;
        }
        if rep.mode() == Mode::Exact && verdict_status(&v) != Status::Pass {
            status = Status::Uncertified;
        }
    }
    report.push(format!("g={g} induced.homomorphism"), status, detail);
    Ok(report)
}

fn relator_checks(rep: &AssembledRep) -> Result<CertReport> {
    let g = rep.genus();
    let mut report = CertReport::new();
    let suite = relator_suite(g, rep.homology().residues())?;
    let results = par::map(rep.parallelism(), &suite, |rel| rep.eval(&rel.word));
    for (rel, m) in suite.iter().zip(results) {
        let (status, detail) = identity_status(&m?);
        report.push(format!("g={g} relator {}", rel.name()), status, format!("{}: {detail}", rel.word));
    }
    // The projected relators also hold in L1 (no Y needed).
    let mut bad = None;
    for (name, w) in sphere_presentation(g) {
        if !rep.induced().induced_eval(&w)?.is_compatible_with_identity() {
            bad = Some(name);
            break;
        }
    }
    report.check(
        format!("g={g} relator sphere-presentation"),
        bad.is_none(),
        match bad {
            None => "all sphere relators map to Id under L1".to_string(),
            Some(name) => format!("{name} fails under L1"),
        },
    );
    Ok(report)
}

fn separation_checks(rep: &AssembledRep) -> Result<CertReport> {
    let g = rep.genus();
    let mut report = CertReport::new();
    let y = parse_word("Y", Alphabet::HyperMcg, g)?;
    let (status, detail) = identity_status(&rep.l1_eval(&y)?);
    report.push(format!("g={g} separation.l1(Y)=Id"), status, detail);
    let l2 = rep.l2_eval(&y)?;
    let minus = Matrix::scalar(l2.dim(), -num_rational::BigRational::from_integer(1.into()));
    report.check(
        format!("g={g} separation.l2(Y)=-Id"),
        l2 == minus,
        format!("dim {}", l2.dim()),
    );
    let ly = rep.eval(&y)?;
    let v = ly.compare_identity();
    report.check(
        format!("g={g} separation.l(Y)!=Id"),
        matches!(v, Verdict::Distinct(_)),
        v.to_string(),
    );
    let (status, detail) = identity_status(&ly.mul(&ly)?);
    report.push(format!("g={g} separation.l(Y)^2=Id"), status, detail);
    Ok(report)
}

/// Runs [`certify_genus`] for each genus, in order.
pub fn certify(genera: &[u32], cfg: &RepConfig, par: Parallelism) -> Result<CertReport> {
    let mut report = CertReport::new();
    for &g in genera {
        report.extend(certify_genus(g, cfg, par)?);
    }
    Ok(report)
}
