use mcgrep_core::algebra::{parse_rational, BigRational, CertInterval, LaurentPoly, Scalar};
use mcgrep_core::assembly::AssembledRep;
use mcgrep_core::config::RepConfig;
use mcgrep_core::garside::normal_form;
use mcgrep_core::lk::LkGeneratorTable;
use mcgrep_core::model::relator_suite;
use mcgrep_core::rep::Verdict;
use mcgrep_core::{parse_word, Alphabet, Generator, GroupWord};
use proptest::prelude::*;
use std::sync::OnceLock;

const G: u32 = 4;

fn rep4() -> &'static AssembledRep {
    static REP: OnceLock<AssembledRep> = OnceLock::new();
    REP.get_or_init(|| AssembledRep::from_config(G, &RepConfig::default()).unwrap())
}

fn table4() -> &'static LkGeneratorTable {
    static T: OnceLock<LkGeneratorTable> = OnceLock::new();
    T.get_or_init(|| LkGeneratorTable::build(G).unwrap())
}

fn letters(max: usize, families: u32) -> impl Strategy<Value = Vec<(u32, i64)>> {
    prop::collection::vec((0..families, prop::sample::select(vec![-2i64, -1, 1, 2])), 0..max)
}

fn braid_word(ls: &[(u32, i64)]) -> GroupWord {
    GroupWord::from_letters(
        Alphabet::Braid,
        G,
        ls.iter().map(|&(k, e)| (Generator::sigma(k % (G - 1) + 1), e)),
    )
    .unwrap()
}

/// Families `0..G-1` are `T_i`, then `R`, then `Y`.
fn hyper_word(ls: &[(u32, i64)]) -> GroupWord {
    GroupWord::from_letters(
        Alphabet::HyperMcg,
        G,
        ls.iter().map(|&(k, e)| {
            let gen = match k {
                k if k < G - 1 => Generator::t(k + 1),
                k if k == G - 1 => Generator::r(),
                _ => Generator::y(),
            };
            (gen, e)
        }),
    )
    .unwrap()
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..4, -3i32..4), -5i64..6), 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|(k, c)| (k, BigRational::from_integer(c.into()))),
        )
    })
}

fn interval() -> impl Strategy<Value = (CertInterval, BigRational)> {
    (rational(), 0i64..20, 0i64..=20).prop_map(|(lo, w, frac)| {
        let width = BigRational::new(w.into(), 7.into());
        let hi = &lo + &width;
        let x = &lo + &width * BigRational::new(frac.into(), 20.into());
        (CertInterval::new(lo, hi), x)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_round_trip(ls in letters(20, G + 1)) {
        let w = hyper_word(&ls);
        let back = parse_word(&w.to_string(), Alphabet::HyperMcg, G).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn free_reduction_is_confluent(a in letters(12, G + 1), b in letters(12, G + 1), c in letters(12, G + 1)) {
        let (a, b, c) = (hyper_word(&a), hyper_word(&b), hyper_word(&c));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert!(a.compose(&a.invert()).unwrap().is_empty());
        let ab_inv = a.compose(&b).unwrap().invert();
        prop_assert_eq!(ab_inv, b.invert().compose(&a.invert()).unwrap());
    }

    #[test]
    fn perm_orient_is_a_homomorphism(a in letters(15, G + 1), b in letters(15, G + 1)) {
        let (a, b) = (hyper_word(&a), hyper_word(&b));
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.perm_orient(), a.perm_orient().mul(&b.perm_orient()));
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.plus(&a.negate()).is_zero());
        prop_assert_eq!(a.times(&LaurentPoly::one()), a.clone());
    }

    #[test]
    fn specialisation_is_a_ring_map(a in laurent(), b in laurent(), q0 in rational(), t0 in rational()) {
        prop_assume!(q0 != BigRational::zero() && t0 != BigRational::zero());
        let s = |p: &LaurentPoly| p.specialize(&q0, &t0).unwrap();
        prop_assert_eq!(s(&a.times(&b)), s(&a) * s(&b));
        prop_assert_eq!(s(&a.plus(&b)), s(&a) + s(&b));
    }

    #[test]
    fn interval_arithmetic_contains_results((x, a) in interval(), (y, b) in interval(), bits in 4u32..64) {
        prop_assert!(x.plus(&y).contains(&(&a + &b)));
        prop_assert!(x.times(&y).contains(&(&a * &b)));
        prop_assert!(x.negate().contains(&-a.clone()));
        let rounded = x.times(&y).with_precision(bits);
        prop_assert!(rounded.contains(&(&a * &b)));
    }

    #[test]
    fn garside_invariant_under_relator_insertion(ls in letters(16, G - 1), pos in 0u64..40, which in 0usize..3) {
        let w = braid_word(&ls);
        let rel = ["s1 s2 s1 s2^-1 s1^-1 s2^-1", "s1 s3 s1^-1 s3^-1", "s2 s3 s2 s3^-1 s2^-1 s3^-1"][which];
        let rel = parse_word(rel, Alphabet::Braid, G).unwrap();
        let w2 = w.insert_at(pos % (w.syllable_length() + 1), &rel).unwrap();
        prop_assert_eq!(normal_form(&w).unwrap(), normal_form(&w2).unwrap());
        prop_assert!(normal_form(&w.compose(&w.invert()).unwrap()).unwrap().is_trivial());
    }

    #[test]
    fn lk_is_a_homomorphism(a in letters(10, G - 1), b in letters(10, G - 1)) {
        let (a, b) = (braid_word(&a), braid_word(&b));
        let t = table4();
        let lhs = t.eval(&a.compose(&b).unwrap()).unwrap();
        let rhs = t.eval(&a).unwrap().mul(&t.eval(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lk_agrees_with_garside_equality(a in letters(10, G - 1), b in letters(10, G - 1)) {
        let (a, b) = (braid_word(&a), braid_word(&b));
        let t = table4();
        let same_lk = t.eval(&a).unwrap() == t.eval(&b).unwrap();
        let same_nf = normal_form(&a).unwrap() == normal_form(&b).unwrap();
        prop_assert_eq!(same_lk, same_nf);
    }

    #[test]
    fn assembled_is_a_homomorphism(a in letters(10, G + 1), b in letters(10, G + 1)) {
        let (a, b) = (hyper_word(&a), hyper_word(&b));
        let rep = rep4();
        let lhs = rep.eval(&a.compose(&b).unwrap()).unwrap();
        let rhs = rep.eval(&a).unwrap().mul(&rep.eval(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs.compare(&rhs), Verdict::EqualExact);
    }

    #[test]
    fn assembled_is_block_diagonal(ls in letters(14, G + 1)) {
        let rep = rep4();
        let m = rep.eval(&hyper_word(&ls)).unwrap();
        let n1 = rep.induced().dimension();
        let m = m.as_exact().unwrap();
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                if (i < n1) != (j < n1) {
                    prop_assert!(m.get(i, j) == &BigRational::zero());
                }
            }
        }
    }

    #[test]
    fn relator_insertion_preserves_l(ls in letters(10, G + 1), pos in 0u64..30, k in 0usize..64) {
        let rep = rep4();
        let w = hyper_word(&ls);
        let suite = relator_suite(G, rep.homology().residues()).unwrap();
        let rel = &suite[k % suite.len()].word;
        let w2 = w.insert_at(pos % (w.syllable_length() + 1), rel).unwrap();
        prop_assert_eq!(rep.compare_words(&w, &w2).unwrap(), Verdict::EqualExact);
    }

    #[test]
    fn parse_rational_round_trip(x in rational()) {
        let s = mcgrep_core::algebra::format_rational(&x);
        prop_assert_eq!(parse_rational(&s).unwrap(), x);
    }
}
