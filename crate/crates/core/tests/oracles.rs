//! Values frozen from an independent computer-algebra build of the
//! Lawrence–Krammer action (basis vectors pushed through the action rules,
//! no shared code), plus closed-form values.

use mcgrep_core::algebra::{parse_rational, BigRational, LaurentPoly, Matrix, Scalar};
use mcgrep_core::assembly::{dimension_report, AssembledRep};
use mcgrep_core::config::RepConfig;
use mcgrep_core::garside::normal_form;
use mcgrep_core::homology::default_model;
use mcgrep_core::lk::LkGeneratorTable;
use mcgrep_core::rescale::{check_scalarity, KernelWords};
use mcgrep_core::{parse_word, Alphabet, Error};

fn r(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

fn poly(terms: &[((i32, i32), i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(k, c)| (k, BigRational::from_integer(c.into()))))
}

fn trace<S: Scalar>(m: &Matrix<S>) -> S {
    (0..m.dim()).fold(S::zero(), |acc, i| acc.plus(m.get(i, i)))
}

#[test]
fn generator_determinants() {
    // det M_1 = q^4 t at g = 4; det M_2 = -q^5 t at g = 5.
    let t4 = LkGeneratorTable::build(4).unwrap();
    for (q0, t0, want) in [("1/2", "1/4", "1/64"), ("3", "5", "405")] {
        let m = t4.specialize(&r(q0), &r(t0)).unwrap().generator(1);
        assert_eq!(m.determinant(), r(want));
    }
    let t5 = LkGeneratorTable::build(5).unwrap();
    let m = t5.specialize(&r("2"), &r("3")).unwrap().generator(2);
    assert_eq!(m.determinant(), r("-96"));
}

#[test]
fn symbolic_word_image() {
    let table = LkGeneratorTable::build(4).unwrap();
    let w = parse_word("s1 s2^-1 s3 s1", Alphabet::Braid, 4).unwrap();
    let m = table.eval(&w).unwrap();
    let want_trace = poly(&[
        ((4, 2), 1),
        ((3, 2), -1),
        ((3, 1), -1),
        ((3, 0), -1),
        ((2, 1), 3),
        ((2, 0), 3),
        ((1, 1), -2),
        ((1, 0), -5),
        ((1, -1), -1),
        ((0, 0), 5),
        ((0, -1), 2),
        ((-1, 0), -2),
        ((-1, -1), -2),
        ((-2, -1), 1),
    ]);
    assert_eq!(trace(&m), want_trace);
    assert_eq!(m.get(0, 1), &poly(&[((4, 2), 1), ((3, 2), -2), ((2, 2), 1)]));
}

#[test]
fn kernel_words_at_shipped_point() {
    let cfg = RepConfig::default();
    let (q0, t0) = cfg.point_for(4).unwrap();
    let spec = LkGeneratorTable::build(4).unwrap().specialize(&q0, &t0).unwrap();
    let k = KernelWords::new(4);
    let tau = spec.eval(&k.tau).unwrap();
    assert_eq!(trace(&tau), r("3089/4096"));
    assert_eq!(tau.get(0, 0), &r("1/1024"));
    assert_eq!(tau.get(0, 1), &r("-1/1024"));
    assert!(matches!(
        check_scalarity(&spec, &k.tau),
        Err(Error::NotScalar { row: 0, col: 1, .. })
    ));
    assert_eq!(check_scalarity(&spec, &k.z).unwrap(), r("1/4096"));

    let (q0, t0) = cfg.point_for(5).unwrap();
    assert_eq!((q0.clone(), t0.clone()), (r("1/2"), r("1/32")));
    let spec = LkGeneratorTable::build(5).unwrap().specialize(&q0, &t0).unwrap();
    let k = KernelWords::new(5);
    let tau = spec.eval(&k.tau).unwrap();
    assert_eq!(trace(&tau), r("1572913/1048576"));
    assert_eq!(tau.get(0, 1), &r("-1/131072"));
    assert_eq!(check_scalarity(&spec, &k.z).unwrap(), r("1/1048576"));
}

#[test]
fn centre_is_t2_q2g() {
    for g in 4..=6 {
        let table = LkGeneratorTable::build(g).unwrap();
        let m = table.eval(&KernelWords::new(g).z).unwrap();
        assert_eq!(m.as_scalar().unwrap(), LaurentPoly::qt(2 * g as i32, 2), "g={g}");
    }
}

#[test]
fn garside_of_full_twist() {
    let z = KernelWords::new(5).z;
    let nf = normal_form(&z).unwrap();
    assert_eq!(nf.delta_power(), 2);
    assert!(nf.factors().is_empty());
    let w = parse_word("s1 s2 s1 s3 s2 s1", Alphabet::Braid, 4).unwrap();
    assert_eq!(normal_form(&w).unwrap().delta_power(), 1);
}

#[test]
fn homology_chain_relation() {
    // (A_1 ... A_{g-1})^g = (-1)^g Id.
    for g in 4..=9u32 {
        let m = default_model(g).unwrap();
        let word = format!("({})^{g}", (1..g).map(|i| format!("T{i}")).collect::<Vec<_>>().join(" "));
        let v = m.eval(&parse_word(&word, Alphabet::HyperMcg, g).unwrap()).unwrap();
        let sign = if g % 2 == 0 { "1" } else { "-1" };
        assert_eq!(v, Matrix::scalar((g - 1) as usize, r(sign)), "g={g}");
        assert_eq!(m.residues()["centre"], (g % 2) as u8);
    }
}

#[test]
fn dimension_values() {
    assert_eq!((dimension_report(4).main, dimension_report(4).naive), (15, 174));
    assert_eq!((dimension_report(5).main, dimension_report(5).naive), (24, 368));
    let rep = AssembledRep::from_config(5, &RepConfig::default()).unwrap();
    assert_eq!(rep.dimension(), 24);
}
