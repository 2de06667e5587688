use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use super::{quasi_shuffle, Letter, Model, Word, WordSum};
use crate::exact_core::Rational;

/// Where a word sits relative to the subspaces `𝔓⁰ ⊂ 𝔓¹` and the complement `𝔑`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    /// `u z_{k_1}…z_{k_r}` with `u` ending in `(1;d)`, `d >= 1`, and `k_1 >= 2`.
    P0,
    /// As `P0` but with `(1;0)^j` inserted between the two blocks, `j >= 1`.
    P1(u32),
    /// Neither of the above.
    N,
}

/// Splits `w = u (1;0)^j v` when `w ∈ 𝔓¹`.
fn split(w: &Word) -> Option<(Word, u32, Word)> {
    let l = &w.0;
    let p = l.iter().take_while(|x| x.k == 1).count();
    if l[p..].iter().any(|x| x.d != 0) {
        return None;
    }
    let t = l[..p].iter().rposition(|x| x.d >= 1).map_or(0, |i| i + 1);
    Some((Word(l[..t].to_vec()), (p - t) as u32, Word(l[p..].to_vec())))
}

pub fn classify(w: &Word) -> Class {
    match split(w) {
        None => Class::N,
        Some((_, 0, _)) => Class::P0,
        Some((_, j, _)) => Class::P1(j),
    }
}

/// A polynomial `Σ_j w_j T^j` with `w_j ∈ 𝔓⁰`, standing for `Σ_j w_j ∗ (1;0)^{∗j}` modulo `𝔑`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Regularized {
    pub coeffs: Vec<WordSum>,
}

impl Regularized {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(WordSum::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    fn add_scaled(&mut self, o: &Regularized, c: &Rational) {
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), WordSum::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            a.add_scaled(b, c);
        }
    }

    fn times_t(&self) -> Regularized {
        let mut coeffs = vec![WordSum::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Regularized { coeffs }.trim()
    }

    /// `Σ_j w_j ∗_b (1;0)^{∗j}`, which agrees with the input modulo `𝔑`.
    pub fn reconstruct(&self) -> WordSum {
        let one_zero = WordSum::from_word(Word(vec![Letter { k: 1, d: 0 }]));
        let mut pow = WordSum::one();
        let mut out = WordSum::zero();
        for c in &self.coeffs {
            out += &quasi_shuffle(Model::Binomial, c, &pow);
            pow = quasi_shuffle(Model::Binomial, &pow, &one_zero);
        }
        out
    }
}

fn cache() -> &'static RwLock<HashMap<Word, Regularized>> {
    static C: OnceLock<RwLock<HashMap<Word, Regularized>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn regularize_word(w: &Word) -> Regularized {
    if let Some(r) = cache().read().unwrap().get(w) {
        return r.clone();
    }
    let r = match split(w) {
        None => Regularized::default(),
        Some((_, 0, _)) => Regularized {
            coeffs: vec![WordSum::from_word(w.clone())],
        },
        Some((u, j, v)) => {
            // j·w = w' ∗_b (1;0) - E, where every word of E has fewer (1;0) in the middle or lies in 𝔑
            let mut shorter = u.0.clone();
            shorter.extend(std::iter::repeat_n(Letter { k: 1, d: 0 }, j as usize - 1));
            shorter.extend_from_slice(&v.0);
            let shorter = WordSum::from_word(Word(shorter));
            let prod = quasi_shuffle(
                Model::Binomial,
                &shorter,
                &WordSum::from_word(Word(vec![Letter { k: 1, d: 0 }])),
            );
            let mut rest = prod.clone();
            rest.add_term(w.clone(), -Rational::from_integer(j.into()));
            let mut out = regularize(&shorter).times_t();
            out.add_scaled(&regularize(&rest), &-Rational::one());
            let inv = Rational::one() / Rational::from_integer(j.into());
            Regularized {
                coeffs: out.coeffs.iter().map(|c| c.scale(&inv)).collect(),
            }
            .trim()
        }
    };
    cache().write().unwrap().insert(w.clone(), r.clone());
    r
}

/// Writes an element of `𝔓¹` as a polynomial in `(1;0)` with coefficients in `𝔓⁰`, modulo `𝔑`,
/// for the binomial quasi-shuffle. Words in `𝔑` map to zero.
pub fn regularize(s: &WordSum) -> Regularized {
    let mut out = Regularized::default();
    for (w, c) in s.iter() {
        out.add_scaled(&regularize_word(w), c);
    }
    out.trim()
}
