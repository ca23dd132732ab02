//! Left-greedy Garside normal form in the braid group `B_n`.
//!
//! Simple elements are permutation braids, represented by their permutation.
//! A positive word `s_{a_1} ... s_{a_k}` maps to the composition
//! `s_{a_1} o ... o s_{a_k}`, and the half twist `Delta` is the reversal.
//! Every braid is written uniquely as `Delta^p A_1 ... A_r` with each `A_j`
//! a proper, nonidentity simple element and every adjacent pair left
//! weighted.

use std::fmt;

use crate::error::Result;
use crate::perm::Perm;
use crate::words::{Alphabet, Family, GroupWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Perm>,
}

impl GarsideNormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Perm] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Checks the structural invariants of a normal form.
    pub fn is_well_formed(&self) -> bool {
        let delta = Perm::reversal(self.strands);
        self.factors.iter().all(|f| !f.is_identity() && *f != delta)
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]))
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "delta^{}", self.delta_power)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

/// `s_k` (0-based) is a left divisor of the simple element `b`.
fn starts_with(b: &Perm, k: usize) -> bool {
    let inv = b.inverse();
    inv.apply(k) > inv.apply(k + 1)
}

/// `s_k` (0-based) is a right divisor of the simple element `a`.
fn finishes_with(a: &Perm, k: usize) -> bool {
    a.apply(k) > a.apply(k + 1)
}

/// The starting set of `b` is contained in the finishing set of `a`.
pub fn is_left_weighted(a: &Perm, b: &Perm) -> bool {
    (0..a.len().saturating_sub(1)).all(|k| !starts_with(b, k) || finishes_with(a, k))
}

/// Slides letters from `b` into `a` until the pair is left weighted.
/// Returns whether anything moved.
fn make_left_weighted(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut moved = false;
    loop {
        let Some(k) = (0..n - 1).find(|&k| starts_with(b, k) && !finishes_with(a, k)) else {
            return moved;
        };
        let s = Perm::adjacent(n, k);
        *a = a.compose(&s);
        *b = s.compose(b);
        moved = true;
    }
}

/// Normal form of `s_{i_1}^{e_1} ... ` given as `(i, e)` pairs with 1-based
/// generator indices in `1..strands`.
pub fn normal_form_letters<I>(strands: usize, letters: I) -> GarsideNormalForm
where
    I: IntoIterator<Item = (usize, i64)>,
{
    assert!(strands >= 2, "braid groups need at least two strands");
    let n = strands;
    let delta = Perm::reversal(n);
    let mut delta_power = 0i64;
    let mut factors: Vec<Perm> = Vec::new();
    for (i, e) in letters {
        assert!((1..n).contains(&i), "generator index {i} outside 1..{n}");
        let s = Perm::adjacent(n, i - 1);
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                factors.push(s.clone());
            } else {
                // X s^-1 = X Delta^-1 (Delta s^-1) = Delta^-1 tau(X) (Delta s^-1)
                for f in factors.iter_mut() {
                    *f = delta.compose(f).compose(&delta);
                }
                delta_power -= 1;
                factors.push(delta.compose(&s));
            }
        }
    }
    loop {
        let mut changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(j + 1);
            changed |= make_left_weighted(&mut left[j], &mut right[0]);
        }
        if !changed {
            break;
        }
    }
    factors.retain(|f| !f.is_identity());
    let leading = factors.iter().take_while(|f| **f == delta).count();
    delta_power += leading as i64;
    factors.drain(..leading);
    GarsideNormalForm {
        strands: n,
        delta_power,
        factors,
    }
}

/// Normal form of a braid word in `B_g`.
pub fn normal_form(w: &GroupWord) -> Result<GarsideNormalForm> {
    w.require(Alphabet::Braid)?;
    Ok(normal_form_letters(
        w.genus() as usize,
        w.letters().iter().map(|l| {
            debug_assert_eq!(l.gen.family(), Family::Sigma);
            (l.gen.index().unwrap() as usize, l.exp)
        }),
    ))
}

pub fn is_trivial_braid(w: &GroupWord) -> Result<bool> {
    Ok(normal_form(w)?.is_trivial())
}

/// Word-problem equality in `B_g`.
pub fn same_braid(a: &GroupWord, b: &GroupWord) -> Result<bool> {
    Ok(normal_form(a)? == normal_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn nf(s: &str) -> GarsideNormalForm {
        normal_form(&parse_word(s, Alphabet::Braid, 4).unwrap()).unwrap()
    }

    #[test]
    fn trivial_braid() {
        assert!(nf("s1 s1^-1").is_trivial());
        assert!(nf("1").is_trivial());
        assert!(!nf("s1").is_trivial());
    }

    #[test]
    fn braid_relation() {
        assert_eq!(nf("s1 s2 s1"), nf("s2 s1 s2"));
        assert!(nf("s1 s2 s1 s2^-1 s1^-1 s2^-1").is_trivial());
        assert!(nf("s1 s3 s1^-1 s3^-1").is_trivial());
    }

    #[test]
    fn half_twist_in_b3() {
        let f = normal_form_letters(3, [(1, 1), (2, 1), (1, 1)]);
        assert_eq!(f.delta_power(), 1);
        assert!(f.factors().is_empty());
        let g = normal_form_letters(3, [(2, 1), (1, 1), (2, 1)]);
        assert_eq!(f, g);
    }

    #[test]
    fn negative_letters_give_negative_delta() {
        let f = nf("s1^-1");
        assert_eq!(f.delta_power(), -1);
        assert_eq!(f.factors().len(), 1);
        assert!(f.is_well_formed());
        // Delta^2 is central and positive.
        let z = nf("(s1 s2 s3)^4");
        assert_eq!(z.delta_power(), 2);
        assert!(z.factors().is_empty());
    }

    #[test]
    fn distinct_braids_distinct_forms() {
        assert_ne!(nf("s1 s2"), nf("s2 s1"));
        assert_ne!(nf("s1^2"), nf("1"));
        assert_eq!(nf("s1 s3"), nf("s3 s1"));
    }
}
