//! The word algebra on letters `(k;d)` with `k >= 1`, `d >= 0`.
//!
//! A word `(k_1,…,k_r; d_1,…,d_r)` stands for the polynomial function
//! `λ ↦ Σ_{m_1>…>m_r>0} Π_j m_j^{d_j} f_{k_j}(r_{m_j}(λ))`, where the family `f` is fixed by a [`Model`].
//! On top of the vector space we provide the quasi-shuffle products, the involution ι,
//! the shuffle product, the derivation, regularization and changes of model.

mod classify;
mod convert;
mod derive;
mod iota;
mod model;
pub mod parse;
mod product;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_core::{parse_rational, Rational};

pub use classify::{classify, regularize, Class, Regularized};
pub use convert::{canonicalize_psi, exp_to_strict, model_convert, psi_to_direct, ReprPoly};
pub use derive::derive;
pub use iota::{iota_s, iota_s_explicit, iota_s_genseries, set_genseries_depth_cap};
pub use model::{
    alpha, alpha_by_linear_system, delta_f, diamond, diamond_constants, express_in, Model,
};
pub use product::{pointwise_product, quasi_shuffle, shuffle};

/// A letter `(k;d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub k: u32,
    pub d: u32,
}

impl Letter {
    pub fn new(k: u32, d: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInput("letters need k >= 1".into()));
        }
        Ok(Letter { k, d })
    }

    pub fn weight(&self) -> u32 {
        self.k + self.d
    }
}

/// A finite sequence of letters. Ordered by weight, then depth, then lexicographically on `(k,d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds `(k_1,…,k_r; d_1,…,d_r)`.
    pub fn new(k: &[u32], d: &[u32]) -> Result<Self> {
        if k.len() != d.len() {
            return Err(Error::InvalidInput("k and d must have equal length".into()));
        }
        k.iter()
            .zip(d)
            .map(|(&k, &d)| Letter::new(k, d))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(Letter::weight).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ks(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.k).collect()
    }

    pub fn ds(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.d).collect()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.weight()
            .cmp(&o.weight())
            .then(self.depth().cmp(&o.depth()))
            .then_with(|| {
                self.0
                    .iter()
                    .map(|l| (l.k, l.d))
                    .cmp(o.0.iter().map(|l| (l.k, l.d)))
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.0.iter().map(|l| l.k.to_string()).collect();
        let ds: Vec<String> = self.0.iter().map(|l| l.d.to_string()).collect();
        write!(f, "({};{})", ks.join(","), ds.join(","))
    }
}

/// All words of weight at most `w`, including the empty word, in display order.
pub fn basis_words(w: u32) -> Vec<Word> {
    fn rec(left: u32, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        out.push(Word(cur.clone()));
        for wt in 1..=left {
            for k in 1..=wt {
                cur.push(Letter { k, d: wt - k });
                rec(left - wt, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A finite rational combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct WordSum {
    terms: BTreeMap<Word, Rational>,
}

impl WordSum {
    pub fn zero() -> Self {
        WordSum::default()
    }

    /// The empty word with coefficient one.
    pub fn one() -> Self {
        Self::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut s = WordSum::zero();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · o`.
    pub fn add_scaled(&mut self, o: &WordSum, c: &Rational) {
        for (w, a) in &o.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut s = WordSum::zero();
        s.add_scaled(self, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Word::weight).max()
    }

    /// Extends a map on words linearly.
    pub fn map_linear(&self, mut f: impl FnMut(&Word) -> WordSum) -> WordSum {
        let mut s = WordSum::zero();
        for (w, c) in &self.terms {
            s.add_scaled(&f(w), c);
        }
        s
    }

    /// Prepends a letter to every word.
    pub fn prepend(&self, l: Letter) -> WordSum {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut v = Vec::with_capacity(w.0.len() + 1);
                v.push(l);
                v.extend_from_slice(&w.0);
                (Word(v), c.clone())
            })
            .collect();
        WordSum { terms }
    }

    pub fn to_json(&self, model: Model) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(w, c)| JsonTerm {
                coeff: c.to_string(),
                word: w.0.iter().map(|l| [l.k, l.d]).collect(),
            })
            .collect();
        serde_json::json!({ "model": model, "terms": terms })
    }

    /// Reads `{"model": …, "terms": [{"coeff": …, "word": [[k,d], …]}, …]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<(Model, WordSum)> {
        let j: JsonWordSum =
            serde_json::from_value(v.clone()).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let mut s = WordSum::zero();
        for t in j.terms {
            let letters = t
                .word
                .iter()
                .map(|p| Letter::new(p[0], p[1]))
                .collect::<Result<Vec<_>>>()?;
            s.add_term(Word(letters), parse_rational(&t.coeff)?);
        }
        Ok((j.model, s))
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: String,
    word: Vec<[u32; 2]>,
}

#[derive(Serialize, Deserialize)]
struct JsonWordSum {
    model: Model,
    terms: Vec<JsonTerm>,
}

impl From<Word> for WordSum {
    fn from(w: Word) -> Self {
        WordSum::from_word(w)
    }
}

impl Add for &WordSum {
    type Output = WordSum;
    fn add(self, o: &WordSum) -> WordSum {
        let mut s = self.clone();
        s.add_scaled(o, &Rational::one());
        s
    }
}

impl Sub for &WordSum {
    type Output = WordSum;
    fn sub(self, o: &WordSum) -> WordSum {
        let mut s = self.clone();
        s.add_scaled(o, &-Rational::one());
        s
    }
}

impl Neg for &WordSum {
    type Output = WordSum;
    fn neg(self) -> WordSum {
        self.scale(&-Rational::one())
    }
}

impl AddAssign<&WordSum> for WordSum {
    fn add_assign(&mut self, o: &WordSum) {
        self.add_scaled(o, &Rational::one());
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.to_string()
            };
            if a.is_one() {
                write!(f, "{word}")?;
            } else if w.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_integer() {
                write!(f, "{a}{word}")?;
            } else {
                write!(f, "({a}){word}")?;
            }
        }
        Ok(())
    }
}
