//! The Lawrence–Krammer representation of `B_g` on the free module with basis
//! `x_{ij}`, `1 <= i < j <= g`, over `Z[q^+-1, t^+-1]`.
//!
//! Convention: matrices act on column vectors, column `(i, j)` of `M_k` is
//! the image of `x_{ij}` under `s_k`, and a word evaluates to the product of
//! its letter matrices in word order. With `a = x_{k,k+1}`:
//!
//! ```text
//! s_k a          = t q^2 a
//! s_k x_{i,k}    = (1 - q) x_{i,k} + q x_{i,k+1}               i < k
//! s_k x_{i,k+1}  = x_{i,k} + t q^{k-i+1} (q - 1) a             i < k
//! s_k x_{k,j}    = t q (q - 1) a + q x_{k+1,j}                 k + 1 < j
//! s_k x_{k+1,j}  = x_{k,j} + (1 - q) x_{k+1,j}                 k + 1 < j
//! s_k x_{i,j}    = x_{i,j} + t q^{k-i} (q - 1)^2 a             i < k < k + 1 < j
//! s_k x_{i,j}    = x_{i,j}                                     otherwise
//! ```
//!
//! The inverse matrices come from the inverse action, solved by hand from the
//! rules above, not from matrix inversion. The centre generator
//! `Delta^2 = (s_1 ... s_{g-1})^g` acts as the scalar `t^2 q^(2g)`.

use num_rational::BigRational;

use crate::algebra::{LaurentPoly, Matrix, Scalar, SparseGenerator};
use crate::error::{Error, Result};
use crate::par::{self, Parallelism};
use crate::words::{Alphabet, GroupWord, MIN_GENUS};

/// Words with more unit letters than this are split and evaluated in halves.
const SPLIT_THRESHOLD: u64 = 64;

/// Pair-basis index `(i, j)`, `1 <= i < j <= g`, in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LkBasisIndex {
    pub i: u32,
    pub j: u32,
}

pub fn lk_basis(g: u32) -> Vec<LkBasisIndex> {
    let mut out = Vec::new();
    for i in 1..=g {
        for j in i + 1..=g {
            out.push(LkBasisIndex { i, j });
        }
    }
    out
}

pub fn lk_dimension(g: u32) -> usize {
    (g as usize) * (g as usize - 1) / 2
}

fn basis_position(g: u32, i: u32, j: u32) -> usize {
    debug_assert!(1 <= i && i < j && j <= g);
    let (g, i, j) = (g as usize, i as usize, j as usize);
    // Pairs with first index < i, then offset inside row i.
    (i - 1) * (2 * g - i) / 2 + (j - i - 1)
}

/// Generator matrices `M_k` and `M_k^-1`, `k = 1..g-1`, over Laurent
/// polynomials.
#[derive(Debug, Clone)]
pub struct LkGeneratorTable {
    genus: u32,
    gens: Vec<Matrix<LaurentPoly>>,
    invs: Vec<Matrix<LaurentPoly>>,
    sparse: Vec<(SparseGenerator<LaurentPoly>, SparseGenerator<LaurentPoly>)>,
}

fn poly(terms: &[((i32, i32), i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(
        terms
            .iter()
            .map(|&(k, c)| (k, BigRational::from_integer(c.into()))),
    )
}

/// `(q - 1)^2 = q^2 - 2q + 1`, times `q^a t^b`.
fn q_minus_one_sq(a: i32, b: i32) -> LaurentPoly {
    poly(&[((a + 2, b), 1), ((a + 1, b), -2), ((a, b), 1)])
}

/// `(q - 1) q^a t^b`.
fn q_minus_one(a: i32, b: i32) -> LaurentPoly {
    poly(&[((a + 1, b), 1), ((a, b), -1)])
}

fn generator_matrix(g: u32, k: u32, inverse: bool) -> Matrix<LaurentPoly> {
    let n = lk_dimension(g);
    let mut m = Matrix::<LaurentPoly>::zeros(n);
    let pos = |i: u32, j: u32| basis_position(g, i, j);
    let a = pos(k, k + 1);
    let mut put = |src: usize, dst: usize, c: LaurentPoly| {
        let cur = m.get(dst, src).plus(&c);
        m.set(dst, src, cur);
    };
    for b in lk_basis(g) {
        let (i, j) = (b.i, b.j);
        let src = pos(i, j);
        let ki = k as i32 - i as i32;
        if !inverse {
            if (i, j) == (k, k + 1) {
                put(src, src, LaurentPoly::qt(2, 1));
            } else if j == k && i < k {
                put(src, pos(i, k), poly(&[((0, 0), 1), ((1, 0), -1)]));
                put(src, pos(i, k + 1), LaurentPoly::q());
            } else if j == k + 1 && i < k {
                put(src, pos(i, k), LaurentPoly::one());
                put(src, a, q_minus_one(ki + 1, 1));
            } else if i == k && j > k + 1 {
                put(src, a, q_minus_one(1, 1));
                put(src, pos(k + 1, j), LaurentPoly::q());
            } else if i == k + 1 && j > k + 1 {
                put(src, pos(k, j), LaurentPoly::one());
                put(src, pos(k + 1, j), poly(&[((0, 0), 1), ((1, 0), -1)]));
            } else if i < k && j > k + 1 {
                put(src, src, LaurentPoly::one());
                put(src, a, q_minus_one_sq(ki, 1));
            } else {
                put(src, src, LaurentPoly::one());
            }
        } else if (i, j) == (k, k + 1) {
            put(src, src, LaurentPoly::qt(-2, -1));
        } else if j == k && i < k {
            put(src, pos(i, k + 1), LaurentPoly::one());
            put(src, a, q_minus_one(ki - 1, 0).negate());
        } else if j == k + 1 && i < k {
            put(src, pos(i, k), LaurentPoly::qt(-1, 0));
            put(src, pos(i, k + 1), poly(&[((0, 0), 1), ((-1, 0), -1)]));
            put(src, a, q_minus_one_sq(ki - 2, 0).negate());
        } else if i == k && j > k + 1 {
            put(src, pos(k, j), poly(&[((0, 0), 1), ((-1, 0), -1)]));
            put(src, pos(k + 1, j), LaurentPoly::one());
            put(src, a, q_minus_one_sq(-2, 0).negate());
        } else if i == k + 1 && j > k + 1 {
            put(src, pos(k, j), LaurentPoly::qt(-1, 0));
            put(src, a, q_minus_one(-2, 0).negate());
        } else if i < k && j > k + 1 {
            put(src, src, LaurentPoly::one());
            put(src, a, q_minus_one_sq(ki - 2, 0).negate());
        } else {
            put(src, src, LaurentPoly::one());
        }
    }
    m
}

impl LkGeneratorTable {
    pub fn build(g: u32) -> Result<Self> {
        if g < MIN_GENUS {
            return Err(Error::GenusTooSmall {
                genus: g,
                min: MIN_GENUS,
            });
        }
        let gens: Vec<_> = (1..g).map(|k| generator_matrix(g, k, false)).collect();
        let invs: Vec<_> = (1..g).map(|k| generator_matrix(g, k, true)).collect();
        let sparse = gens
            .iter()
            .zip(&invs)
            .map(|(m, mi)| (SparseGenerator::from_dense(m), SparseGenerator::from_dense(mi)))
            .collect();
        Ok(LkGeneratorTable {
            genus: g,
            gens,
            invs,
            sparse,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn dimension(&self) -> usize {
        lk_dimension(self.genus)
    }

    /// `M_k`, 1-based.
    pub fn generator(&self, k: u32) -> &Matrix<LaurentPoly> {
        &self.gens[k as usize - 1]
    }

    /// `M_k^-1`, 1-based.
    pub fn inverse(&self, k: u32) -> &Matrix<LaurentPoly> {
        &self.invs[k as usize - 1]
    }

    /// Replaces one generator matrix; used to build corrupted tables for
    /// negative controls.
    pub fn with_generator(mut self, k: u32, m: Matrix<LaurentPoly>) -> Self {
        self.sparse[k as usize - 1].0 = SparseGenerator::from_dense(&m);
        self.gens[k as usize - 1] = m;
        self
    }

    /// The image of a braid word.
    pub fn eval(&self, w: &GroupWord) -> Result<Matrix<LaurentPoly>> {
        self.eval_with(w, Parallelism::Sequential)
    }

    pub fn eval_with(&self, w: &GroupWord, mode: Parallelism) -> Result<Matrix<LaurentPoly>> {
        check_word(self.genus, w)?;
        Ok(eval_sparse(&self.sparse, self.dimension(), w, mode))
    }

    /// Evaluates every generator at `q = q0`, `t = t0`.
    pub fn specialize(&self, q0: &BigRational, t0: &BigRational) -> Result<SpecializedLk> {
        let spec = |m: &SparseGenerator<LaurentPoly>| m.try_map(|p| p.specialize(q0, t0));
        let sparse = self
            .sparse
            .iter()
            .map(|(m, mi)| Ok((spec(m)?, spec(mi)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpecializedLk {
            genus: self.genus,
            q0: q0.clone(),
            t0: t0.clone(),
            sparse,
        })
    }
}

pub fn build_lk_table(g: u32) -> Result<LkGeneratorTable> {
    LkGeneratorTable::build(g)
}

pub fn lk_eval(table: &LkGeneratorTable, w: &GroupWord) -> Result<Matrix<LaurentPoly>> {
    table.eval(w)
}

fn check_word(genus: u32, w: &GroupWord) -> Result<()> {
    w.require(Alphabet::Braid)?;
    if w.genus() != genus {
        return Err(Error::GenusMismatch {
            left: w.genus(),
            right: genus,
        });
    }
    Ok(())
}

/// Unit-letter sequence `(generator index, positive?)`.
fn unit_letters(w: &GroupWord) -> Vec<(usize, bool)> {
    let mut out = Vec::with_capacity(w.syllable_length() as usize);
    for l in w.letters() {
        let k = l.gen.index().expect("braid letters carry an index") as usize - 1;
        for _ in 0..l.exp.unsigned_abs() {
            out.push((k, l.exp > 0));
        }
    }
    out
}

fn eval_units<S: Scalar>(
    gens: &[(SparseGenerator<S>, SparseGenerator<S>)],
    dim: usize,
    units: &[(usize, bool)],
    mode: Parallelism,
) -> Matrix<S> {
    if mode.is_parallel() && units.len() as u64 > SPLIT_THRESHOLD {
        let (left, right) = units.split_at(units.len() / 2);
        let (a, b) = par::join(
            mode,
            || eval_units(gens, dim, left, mode),
            || eval_units(gens, dim, right, mode),
        );
        return a.mul_with(&b, mode).expect("equal dimensions");
    }
    let mut acc = Matrix::identity(dim);
    for &(k, pos) in units {
        let (g, gi) = &gens[k];
        if pos { g } else { gi }.apply_right(&mut acc);
    }
    acc
}

fn eval_sparse<S: Scalar>(
    gens: &[(SparseGenerator<S>, SparseGenerator<S>)],
    dim: usize,
    w: &GroupWord,
    mode: Parallelism,
) -> Matrix<S> {
    eval_units(gens, dim, &unit_letters(w), mode)
}

/// The generator table evaluated at a rational point `(q0, t0)`.
#[derive(Debug, Clone)]
pub struct SpecializedLk {
    genus: u32,
    q0: BigRational,
    t0: BigRational,
    sparse: Vec<(SparseGenerator<BigRational>, SparseGenerator<BigRational>)>,
}

impl SpecializedLk {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn dimension(&self) -> usize {
        lk_dimension(self.genus)
    }

    pub fn point(&self) -> (&BigRational, &BigRational) {
        (&self.q0, &self.t0)
    }

    pub fn generator(&self, k: u32) -> Matrix<BigRational> {
        self.sparse[k as usize - 1].0.to_dense()
    }

    pub fn inverse(&self, k: u32) -> Matrix<BigRational> {
        self.sparse[k as usize - 1].1.to_dense()
    }

    pub fn eval(&self, w: &GroupWord) -> Result<Matrix<BigRational>> {
        self.eval_with(w, Parallelism::Sequential)
    }

    pub fn eval_with(&self, w: &GroupWord, mode: Parallelism) -> Result<Matrix<BigRational>> {
        check_word(self.genus, w)?;
        Ok(eval_sparse(&self.sparse, self.dimension(), w, mode))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_positions_are_lexicographic() {
        for g in 4..8 {
            for (k, b) in lk_basis(g).iter().enumerate() {
                assert_eq!(basis_position(g, b.i, b.j), k);
            }
            assert_eq!(lk_basis(g).len(), lk_dimension(g));
        }
    }

    #[test]
    fn dimensions() {
        let t4 = build_lk_table(4).unwrap();
        assert_eq!(t4.dimension(), 6);
        assert_eq!(t4.gens.len(), 3);
        let t5 = build_lk_table(5).unwrap();
        assert_eq!(t5.dimension(), 10);
        assert_eq!(t5.gens.len(), 4);
        assert!(matches!(build_lk_table(3), Err(Error::GenusTooSmall { .. })));
    }

    #[test]
    fn entries_are_integral_laurent() {
        let t = build_lk_table(5).unwrap();
        for k in 1..5 {
            assert!(t.generator(k).entries().iter().all(|p| p.has_integer_coefficients()));
            assert!(t.inverse(k).entries().iter().all(|p| p.has_integer_coefficients()));
        }
    }

    #[test]
    fn inverse_pairs() {
        for g in 4..=6 {
            let t = build_lk_table(g).unwrap();
            for k in 1..g {
                assert!(t.generator(k).mul(t.inverse(k)).unwrap().is_identity(), "g={g} k={k}");
                assert!(t.inverse(k).mul(t.generator(k)).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn empty_word_is_identity() {
        let t = build_lk_table(4).unwrap();
        let w = GroupWord::empty(Alphabet::Braid, 4);
        assert!(t.eval(&w).unwrap().is_identity());
    }

    #[test]
    fn centre_acts_by_scalar() {
        let t = build_lk_table(4).unwrap();
        let z = crate::words::parse_word("(s1 s2 s3)^4", Alphabet::Braid, 4).unwrap();
        assert_eq!(t.eval(&z).unwrap().as_scalar(), Ok(LaurentPoly::qt(8, 2)));
    }
}
