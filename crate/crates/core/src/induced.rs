//! Index-2 induction from `M(S_{0,g,1})` to the extended group
//! `M^+-(S_{0,g,1})`, modelled as the semidirect product with an involution
//! `R` acting by `R s_i R = s_i^-1`.
//!
//! With coset representatives `{1, R}`, a braid word `u` maps to
//! `diag(L'(u), L'(bar u))` and `u R` maps to the antidiagonal matrix with
//! `L'(u)` top-right and `L'(bar u)` bottom-left.

use crate::error::Result;
use crate::par::{self, Parallelism};
use crate::rep::RepMatrix;
use crate::rescale::LPrime;
use crate::words::{Alphabet, Family, Generator, GroupWord};

/// The automorphism inverting every generator, letter by letter.
pub fn bar(w: &GroupWord) -> GroupWord {
    GroupWord::from_letters(
        w.alphabet(),
        w.genus(),
        w.letters().iter().map(|l| {
            let exp = if l.gen.family() == Family::Sigma || l.gen.family() == Family::T {
                -l.exp
            } else {
                l.exp
            };
            (l.gen, exp)
        }),
    )
    .expect("letters already validated")
}

/// Rewrites a sphere word as `u R^e` by pushing every `R` to the right.
/// Returns `u` and `(-1)^e`.
pub fn split_by_orientation(w: &GroupWord) -> Result<(GroupWord, i8)> {
    w.require(Alphabet::SphereExt)?;
    let mut flipped = false;
    let mut u = GroupWord::empty(Alphabet::Braid, w.genus());
    for l in w.letters() {
        match l.gen.family() {
            Family::R => flipped ^= l.exp % 2 != 0,
            Family::Sigma => {
                let exp = if flipped { -l.exp } else { l.exp };
                u.push(Generator::sigma(l.gen.index().unwrap()), exp)?;
            }
            Family::T | Family::Y => unreachable!("validated alphabet"),
        }
    }
    Ok((u, if flipped { -1 } else { 1 }))
}

/// `L1`: the induced representation, evaluated on sphere or hyperelliptic
/// words.
#[derive(Debug, Clone)]
pub struct InducedRep {
    lprime: LPrime,
}

impl InducedRep {
    pub fn new(lprime: LPrime) -> Self {
        InducedRep { lprime }
    }

    pub fn lprime(&self) -> &LPrime {
        &self.lprime
    }

    pub fn genus(&self) -> u32 {
        self.lprime.genus()
    }

    /// `2 * C(g, 2) = g^2 - g`.
    pub fn dimension(&self) -> usize {
        2 * self.lprime.dimension()
    }

    pub fn induced_eval(&self, w: &GroupWord) -> Result<RepMatrix> {
        self.induced_eval_with(w, Parallelism::Sequential)
    }

    pub fn induced_eval_with(&self, w: &GroupWord, mode: Parallelism) -> Result<RepMatrix> {
        let (u, sign) = split_by_orientation(w)?;
        let ubar = bar(&u);
        let (a, b) = par::join(
            mode,
            || self.lprime.eval_with(&u, mode),
            || self.lprime.eval_with(&ubar, mode),
        );
        let (a, b) = (a?, b?);
        let n = self.lprime.dimension();
        let m = self.lprime.mode();
        Ok(if sign > 0 {
            RepMatrix::two_by_two(n, [Some(&a), None, None, Some(&b)], m)
        } else {
            RepMatrix::two_by_two(n, [None, Some(&a), Some(&b), None], m)
        })
    }

    /// `L1(w) = induced(project(w))`; `Y` is in the kernel.
    pub fn l1_eval(&self, w: &GroupWord) -> Result<RepMatrix> {
        self.induced_eval(&w.project_to_sphere()?)
    }

    pub fn l1_eval_with(&self, w: &GroupWord, mode: Parallelism) -> Result<RepMatrix> {
        self.induced_eval_with(&w.project_to_sphere()?, mode)
    }
}

pub fn induced_eval(rep: &InducedRep, w: &GroupWord) -> Result<RepMatrix> {
    rep.induced_eval(w)
}

pub fn l1_eval(rep: &InducedRep, w: &GroupWord) -> Result<RepMatrix> {
    rep.l1_eval(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn sphere(s: &str) -> GroupWord {
        parse_word(s, Alphabet::SphereExt, 4).unwrap()
    }

    fn braid(s: &str) -> GroupWord {
        parse_word(s, Alphabet::Braid, 4).unwrap()
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_by_orientation(&sphere("R s1 R")).unwrap(), (braid("s1^-1"), 1));
        assert_eq!(split_by_orientation(&sphere("R")).unwrap(), (braid("1"), -1));
        assert_eq!(
            split_by_orientation(&sphere("s1 R s2")).unwrap(),
            (braid("s1 s2^-1"), -1)
        );
        assert_eq!(split_by_orientation(&sphere("R^2 s3")).unwrap(), (braid("s3"), 1));
    }

    #[test]
    fn bar_is_involutive() {
        let w = braid("s1 s2^-3 s3 s1");
        assert_eq!(bar(&w), braid("s1^-1 s2^3 s3^-1 s1^-1"));
        assert_eq!(bar(&bar(&w)), w);
    }
}
