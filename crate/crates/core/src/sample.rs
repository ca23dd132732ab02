//! Seeded random words for sampling checks. Every sampler is a ChaCha8
//! stream, so a `(seed, genus)` pair always yields the same words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::words::{Alphabet, Generator, GroupWord};

#[derive(Debug, Clone)]
pub struct WordSampler {
    rng: ChaCha8Rng,
    genus: u32,
}

impl WordSampler {
    pub fn new(seed: u64, genus: u32) -> Self {
        WordSampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ ((genus as u64) << 56)),
            genus,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    fn sign(&mut self) -> i64 {
        if self.rng.gen_bool(0.5) {
            1
        } else {
            -1
        }
    }

    fn word(&mut self, alphabet: Alphabet, max_len: usize, gens: &[Generator]) -> GroupWord {
        let len = self.rng.gen_range(0..=max_len);
        let mut w = GroupWord::empty(alphabet, self.genus);
        for _ in 0..len {
            let gen = gens[self.rng.gen_range(0..gens.len())];
            let e = self.sign();
            w.push(gen, e).expect("generator in range");
        }
        w
    }

    /// A word of at most `max_len` unit letters in `s_i^+-1`. Free
    /// cancellation can make it shorter.
    pub fn braid_word(&mut self, max_len: usize) -> GroupWord {
        let gens: Vec<Generator> = (1..self.genus).map(Generator::sigma).collect();
        self.word(Alphabet::Braid, max_len, &gens)
    }

    pub fn sphere_word(&mut self, max_len: usize) -> GroupWord {
        let gens: Vec<Generator> = (1..self.genus)
            .map(Generator::sigma)
            .chain([Generator::r()])
            .collect();
        self.word(Alphabet::SphereExt, max_len, &gens)
    }

    pub fn hyper_word(&mut self, max_len: usize) -> GroupWord {
        let gens: Vec<Generator> = (1..self.genus)
            .map(Generator::t)
            .chain([Generator::r(), Generator::y()])
            .collect();
        self.word(Alphabet::HyperMcg, max_len, &gens)
    }

    /// A braid relator: `s_i s_{i+1} s_i s_{i+1}^-1 s_i^-1 s_{i+1}^-1` or a
    /// far commutator, chosen uniformly, in a random cyclic rotation and
    /// orientation.
    pub fn braid_relator(&mut self) -> GroupWord {
        let g = self.genus;
        let s = Generator::sigma;
        let mut choices: Vec<Vec<(Generator, i64)>> = (1..g - 1)
            .map(|i| vec![(s(i), 1), (s(i + 1), 1), (s(i), 1), (s(i + 1), -1), (s(i), -1), (s(i + 1), -1)])
            .collect();
        for i in 1..g {
            for j in i + 2..g {
                choices.push(vec![(s(i), 1), (s(j), 1), (s(i), -1), (s(j), -1)]);
            }
        }
        let mut letters = choices.swap_remove(self.rng.gen_range(0..choices.len()));
        let k = self.rng.gen_range(0..letters.len());
        letters.rotate_left(k);
        let w = GroupWord::from_letters(Alphabet::Braid, g, letters).expect("in range");
        if self.rng.gen_bool(0.5) {
            w.invert()
        } else {
            w
        }
    }

    /// `u r u^-1` with `r` a braid relator, at most `max_len` unit letters.
    /// Always the trivial braid.
    pub fn trivial_braid(&mut self, max_len: usize) -> GroupWord {
        let r = self.braid_relator();
        let budget = max_len.saturating_sub(r.syllable_length() as usize) / 2;
        let u = self.braid_word(budget);
        u.compose(&r)
            .and_then(|ur| ur.compose(&u.invert()))
            .expect("same group")
    }

    /// Inserts a braid relator at a random position of `w` (a braid word).
    pub fn insert_relator(&mut self, w: &GroupWord) -> GroupWord {
        let r = self.braid_relator();
        let pos = self.rng.gen_range(0..=w.syllable_length());
        w.insert_at(pos, &r).expect("braid words")
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}
