//! Generator alphabets, freely reduced words, and the homomorphisms between
//! the braid group, the extended sphere group and the hyperelliptic group.
//!
//! Words are kept freely reduced with run-length collapsed letters; no group
//! relation is ever applied here.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Smallest genus the representation chain supports.
pub const MIN_GENUS: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Half-twist `s_i` swapping punctures `i` and `i + 1`.
    Sigma,
    /// Lift of `s_i` to the hyperelliptic group.
    T,
    /// Orientation-reversing involution.
    R,
    /// The hyperelliptic involution.
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    family: Family,
    index: u32,
}

impl Generator {
    pub fn sigma(i: u32) -> Self {
        assert!(i >= 1, "generator indices start at 1");
        Generator {
            family: Family::Sigma,
            index: i,
        }
    }

    pub fn t(i: u32) -> Self {
        assert!(i >= 1, "generator indices start at 1");
        Generator {
            family: Family::T,
            index: i,
        }
    }

    pub fn r() -> Self {
        Generator {
            family: Family::R,
            index: 0,
        }
    }

    pub fn y() -> Self {
        Generator {
            family: Family::Y,
            index: 0,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `None` for `R` and `Y`.
    pub fn index(&self) -> Option<u32> {
        match self.family {
            Family::Sigma | Family::T => Some(self.index),
            Family::R | Family::Y => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sigma => write!(f, "s{}", self.index),
            Family::T => write!(f, "T{}", self.index),
            Family::R => write!(f, "R"),
            Family::Y => write!(f, "Y"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// The braid group `B_g`: `s_1 .. s_{g-1}`.
    Braid,
    /// The extended sphere group: `s_i` and `R`.
    SphereExt,
    /// The hyperelliptic group: `T_i`, `R`, `Y`.
    HyperMcg,
}

impl Alphabet {
    pub fn allows(self, family: Family) -> bool {
        matches!(
            (self, family),
            (Alphabet::Braid, Family::Sigma)
                | (Alphabet::SphereExt, Family::Sigma | Family::R)
                | (Alphabet::HyperMcg, Family::T | Family::R | Family::Y)
        )
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::Braid => "braid",
            Alphabet::SphereExt => "sphere-ext",
            Alphabet::HyperMcg => "hyper-mcg",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub exp: i64,
}

/// A freely reduced word over one alphabet, for a fixed genus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    alphabet: Alphabet,
    genus: u32,
    letters: Vec<Letter>,
}

impl GroupWord {
    /// The empty word. `genus` must be at least 2 (so that `B_genus` is
    /// nontrivial); representation code enforces its own lower bound.
    pub fn empty(alphabet: Alphabet, genus: u32) -> Self {
        assert!(genus >= 2, "genus must be at least 2");
        GroupWord {
            alphabet,
            genus,
            letters: Vec::new(),
        }
    }

    /// Builds a word from `(generator, exponent)` pairs, validating every
    /// letter and freely reducing.
    pub fn from_letters<I>(alphabet: Alphabet, genus: u32, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Generator, i64)>,
    {
        let mut w = Self::empty(alphabet, genus);
        for (gen, exp) in letters {
            w.push(gen, exp)?;
        }
        Ok(w)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of run-length letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Total number of unit letters, `sum |exp|`.
    pub fn syllable_length(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    fn check(&self, gen: Generator) -> Result<()> {
        if !self.alphabet.allows(gen.family) {
            return Err(Error::IllegalSymbol {
                symbol: gen.to_string(),
                alphabet: self.alphabet,
            });
        }
        if let Some(i) = gen.index() {
            if i == 0 || i >= self.genus {
                return Err(Error::IndexOutOfRange {
                    symbol: gen.to_string(),
                    index: i,
                    genus: self.genus,
                });
            }
        }
        Ok(())
    }

    /// Appends `gen^exp`, merging with the last letter when it has the same
    /// generator.
    pub fn push(&mut self, gen: Generator, exp: i64) -> Result<()> {
        self.check(gen)?;
        self.push_unchecked(gen, exp);
        Ok(())
    }

    fn push_unchecked(&mut self, gen: Generator, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.gen == gen {
                last.exp += exp;
                if last.exp == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push(Letter { gen, exp });
    }

    fn same_group(&self, other: &GroupWord) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            });
        }
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(())
    }

    /// Freely reduced concatenation `self * other`.
    pub fn compose(&self, other: &GroupWord) -> Result<GroupWord> {
        self.same_group(other)?;
        let mut out = self.clone();
        for l in &other.letters {
            out.push_unchecked(l.gen, l.exp);
        }
        Ok(out)
    }

    pub fn invert(&self) -> GroupWord {
        GroupWord {
            alphabet: self.alphabet,
            genus: self.genus,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> GroupWord {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = GroupWord::empty(self.alphabet, self.genus);
        for _ in 0..n.unsigned_abs() {
            for l in &base.letters {
                out.push_unchecked(l.gen, l.exp);
            }
        }
        out
    }

    /// Inserts `other` before the letter at unit position `pos`
    /// (`0..=syllable_length`), splitting a power if needed.
    pub fn insert_at(&self, pos: u64, other: &GroupWord) -> Result<GroupWord> {
        self.same_group(other)?;
        let mut out = GroupWord::empty(self.alphabet, self.genus);
        let mut remaining = pos;
        let mut inserted = false;
        for l in &self.letters {
            let n = l.exp.unsigned_abs();
            if !inserted && remaining <= n {
                let sign = l.exp.signum();
                let head = remaining as i64 * sign;
                out.push_unchecked(l.gen, head);
                for m in &other.letters {
                    out.push_unchecked(m.gen, m.exp);
                }
                out.push_unchecked(l.gen, l.exp - head);
                inserted = true;
            } else {
                out.push_unchecked(l.gen, l.exp);
                if !inserted {
                    remaining -= n;
                }
            }
        }
        if !inserted {
            for m in &other.letters {
                out.push_unchecked(m.gen, m.exp);
            }
        }
        Ok(out)
    }

    /// Sum of exponents of the index-carrying letters (`s_i`, `T_i`).
    ///
    /// On braid words this is the abelianisation character.
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .filter(|l| matches!(l.gen.family, Family::Sigma | Family::T))
            .map(|l| l.exp)
            .sum()
    }

    /// Sum of exponents of `Y` letters.
    pub fn y_exponent(&self) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen.family == Family::Y)
            .map(|l| l.exp)
            .sum()
    }

    /// The induced permutation of the `g` movable punctures together with the
    /// orientation character.
    pub fn perm_orient(&self) -> PuncturePermOrient {
        let n = self.genus as usize;
        let mut acc = PuncturePermOrient::identity(n);
        for l in &self.letters {
            let step = match l.gen.family {
                Family::Sigma | Family::T => {
                    if l.exp % 2 == 0 {
                        continue;
                    }
                    PuncturePermOrient {
                        perm: Perm::adjacent(n, l.gen.index as usize - 1),
                        orient: 1,
                    }
                }
                Family::R => {
                    if l.exp % 2 == 0 {
                        continue;
                    }
                    PuncturePermOrient {
                        perm: Perm::identity(n),
                        orient: -1,
                    }
                }
                Family::Y => continue,
            };
            acc = acc.mul(&step);
        }
        acc
    }

    /// Projection `T_i -> s_i`, `R -> R`, `Y -> 1` from the hyperelliptic
    /// group onto the extended sphere group.
    pub fn project_to_sphere(&self) -> Result<GroupWord> {
        self.require(Alphabet::HyperMcg)?;
        let mut out = GroupWord::empty(Alphabet::SphereExt, self.genus);
        for l in &self.letters {
            match l.gen.family {
                Family::T => out.push_unchecked(Generator::sigma(l.gen.index), l.exp),
                Family::R => out.push_unchecked(Generator::r(), l.exp),
                Family::Y => {}
                Family::Sigma => unreachable!("validated alphabet"),
            }
        }
        Ok(out)
    }

    /// Reinterprets a braid word as a sphere word.
    pub fn braid_to_sphere(&self) -> Result<GroupWord> {
        self.require(Alphabet::Braid)?;
        Ok(GroupWord {
            alphabet: Alphabet::SphereExt,
            genus: self.genus,
            letters: self.letters.clone(),
        })
    }

    /// Lifts a braid or sphere word letterwise to the hyperelliptic alphabet
    /// (`s_i -> T_i`).
    pub fn lift_to_hyper(&self) -> Result<GroupWord> {
        if self.alphabet == Alphabet::HyperMcg {
            return Ok(self.clone());
        }
        let letters = self
            .letters
            .iter()
            .map(|l| {
                let gen = match l.gen.family {
                    Family::Sigma => Generator::t(l.gen.index),
                    _ => l.gen,
                };
                Letter { gen, exp: l.exp }
            })
            .collect();
        Ok(GroupWord {
            alphabet: Alphabet::HyperMcg,
            genus: self.genus,
            letters,
        })
    }

    pub fn require(&self, alphabet: Alphabet) -> Result<()> {
        if self.alphabet != alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: alphabet,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GroupWord {
    /// Whitespace-separated tokens; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l.exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^{}", l.gen, l.exp)?;
            }
        }
        Ok(())
    }
}

/// Image in `S_g x {+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuncturePermOrient {
    pub perm: Perm,
    pub orient: i8,
}

impl PuncturePermOrient {
    pub fn identity(n: usize) -> Self {
        PuncturePermOrient {
            perm: Perm::identity(n),
            orient: 1,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        PuncturePermOrient {
            perm: self.perm.compose(&other.perm),
            orient: self.orient * other.orient,
        }
    }
}

impl fmt::Display for PuncturePermOrient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:+})", self.perm, self.orient)
    }
}

/// Parses the whitespace-separated word grammar: `s<k>`, `T<k>`, `R`, `Y`,
/// optional `^<int>` suffixes, parenthesised subwords with a power suffix,
/// and `1` for the empty word.
pub fn parse_word(text: &str, alphabet: Alphabet, genus: u32) -> Result<GroupWord> {
    if genus < MIN_GENUS {
        return Err(Error::GenusTooSmall {
            genus,
            min: MIN_GENUS,
        });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        alphabet,
        genus,
    };
    let w = p.sequence()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected ')'"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: Alphabet,
    genus: u32,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<GroupWord> {
        let mut w = GroupWord::empty(self.alphabet, self.genus);
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(b')') => return Ok(w),
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.sequence()?;
                    self.skip_ws();
                    if self.peek() != Some(b')') {
                        return Err(self.err("missing ')'"));
                    }
                    self.pos += 1;
                    let e = self.power()?;
                    w = w.compose(&inner.pow(e))?;
                }
                Some(b'1') => {
                    self.pos += 1;
                    self.end_of_token()?;
                }
                Some(_) => {
                    let gen = self.generator()?;
                    let e = self.power()?;
                    w.push(gen, e)?;
                }
            }
        }
    }

    fn end_of_token(&self) -> Result<()> {
        match self.peek() {
            None | Some(b')') | Some(b'(') => Ok(()),
            Some(c) if c.is_ascii_whitespace() => Ok(()),
            Some(_) => Err(self.err("unexpected character after token")),
        }
    }

    fn generator(&mut self) -> Result<Generator> {
        let c = self.peek().unwrap();
        self.pos += 1;
        let gen = match c {
            b's' | b'T' => {
                let i = self.unsigned()?;
                if i == 0 {
                    return Err(Error::IndexOutOfRange {
                        symbol: format!("{}0", c as char),
                        index: 0,
                        genus: self.genus,
                    });
                }
                if c == b's' {
                    Generator::sigma(i)
                } else {
                    Generator::t(i)
                }
            }
            b'R' => Generator::r(),
            b'Y' => Generator::y(),
            _ => {
                self.pos -= 1;
                return Err(self.err(format!("unknown symbol '{}'", c as char)));
            }
        };
        Ok(gen)
    }

    fn unsigned(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected generator index"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("index too large"))
    }

    fn power(&mut self) -> Result<i64> {
        if self.peek() != Some(b'^') {
            self.end_of_token()?;
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let e = s.parse().map_err(|_| self.err("expected integer exponent"))?;
        self.end_of_token()?;
        Ok(e)
    }
}
