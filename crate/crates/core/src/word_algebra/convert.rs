use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::model::express_in;
use super::{Letter, Model, Word, WordSum};
use crate::error::{Error, Result};
use crate::exact_core::{factorial_rat, faulhaber_poly, Rational, UnivariatePoly};

/// Expands a polynomial with `p(0) = 0` in the basis `f_1, f_2, …` of `model`.
fn expand_in_basis(model: Model, p: &UnivariatePoly) -> Vec<Rational> {
    let deg = p.degree().unwrap_or(0);
    let mut rem = p.clone();
    let mut c = vec![Rational::zero(); deg];
    for j in (1..=deg).rev() {
        let g = model.f_poly(j as u32);
        let x = rem.coeff(j) / g.leading();
        rem = &rem - &g.scale(&x);
        c[j - 1] = x;
    }
    debug_assert!(rem.is_zero(), "polynomial must vanish at zero");
    c
}

/// Multiplies out per-position choices `[(letter, coeff)]` into a word sum.
fn expand_positions(choices: &[Vec<(Letter, Rational)>], coeff: &Rational, out: &mut WordSum) {
    fn rec(
        i: usize,
        choices: &[Vec<(Letter, Rational)>],
        cur: &mut Vec<Letter>,
        c: Rational,
        out: &mut WordSum,
    ) {
        if i == choices.len() {
            out.add_term(Word(cur.clone()), c);
            return;
        }
        for (l, x) in &choices[i] {
            cur.push(*l);
            rec(i + 1, choices, cur, &c * x, out);
            cur.pop();
        }
    }
    rec(0, choices, &mut Vec::new(), coeff.clone(), out);
}

/// Rewrites a combination of words from one model into another, representing the same function.
pub fn model_convert(from: Model, to: Model, s: &WordSum) -> WordSum {
    if from == to {
        return s.clone();
    }
    let mut out = WordSum::zero();
    for (w, c) in s.iter() {
        let choices: Vec<Vec<(Letter, Rational)>> =
            w.0.iter()
                .map(|l| {
                    express_in(from, to, l.k)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(j, x)| {
                            (
                                Letter {
                                    k: j as u32 + 1,
                                    d: l.d,
                                },
                                x,
                            )
                        })
                        .collect()
                })
                .collect();
        expand_positions(&choices, c, &mut out);
    }
    out
}

/// Converts an exp-word, summed over weakly decreasing `m_1 >= … >= m_r > 0` with weight `1/Aut(m)`,
/// into ordinary words of `model`.
pub fn exp_to_strict(model: Model, w: &Word) -> WordSum {
    let r = w.depth();
    let mut out = WordSum::zero();
    if r == 0 {
        return WordSum::one();
    }
    // each subset of the r-1 gaps marks a block boundary
    for mask in 0u32..(1 << (r - 1)) {
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 0..r {
            if i == r - 1 || mask & (1 << i) != 0 {
                blocks.push(&w.0[start..=i]);
                start = i + 1;
            }
        }
        let mut choices = Vec::with_capacity(blocks.len());
        for b in blocks {
            let mut p = UnivariatePoly::constant(Rational::one());
            for l in b {
                p = &p * &model.f_poly(l.k);
            }
            let d: u32 = b.iter().map(|l| l.d).sum();
            let aut = Rational::one() / factorial_rat(b.len() as u32);
            let opts = expand_in_basis(model, &p)
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (Letter { k: j as u32 + 1, d }, x * &aut))
                .collect();
            choices.push(opts);
        }
        expand_positions(&choices, &Rational::one(), &mut out);
    }
    out
}

/// A polynomial in `x_1..x_n, y_1..y_n`, read as the function
/// `λ ↦ Σ_{m_1>…>m_n>0} p(m_1,…,m_n, r_{m_1}(λ),…,r_{m_n}(λ))`.
///
/// Keys are exponent pairs `(a_i, b_i)` of `x_i^{a_i} y_i^{b_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReprPoly {
    pub n: usize,
    pub terms: BTreeMap<Vec<(u32, u32)>, Rational>,
}

impl ReprPoly {
    pub fn new(n: usize) -> Self {
        ReprPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, c: Rational, x: &[u32], y: &[u32]) -> Result<()> {
        if x.len() != self.n || y.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "expected {} exponents per row",
                self.n
            )));
        }
        let key: Vec<(u32, u32)> = x.iter().copied().zip(y.iter().copied()).collect();
        let e = self.terms.entry(key).or_insert_with(Rational::zero);
        *e += c;
        self.terms.retain(|_, c| !c.is_zero());
        Ok(())
    }

    /// Direct evaluation, summing `m` over `1..=max_m`. Terms with a `y` exponent of zero see every `m`,
    /// so the cutoff must exceed the largest part for a faithful value.
    pub fn eval_brute(&self, multiplicity: impl Fn(u32) -> u32, max_m: u32) -> Rational {
        fn rec(
            p: &ReprPoly,
            pos: usize,
            below: u32,
            ms: &mut Vec<u32>,
            mult: &dyn Fn(u32) -> u32,
            acc: &mut Rational,
        ) {
            if pos == p.n {
                for (e, c) in &p.terms {
                    let mut t = c.clone();
                    for (i, &(a, b)) in e.iter().enumerate() {
                        let m = ms[i];
                        let r = mult(m);
                        if b > 0 && r == 0 {
                            t = Rational::zero();
                            break;
                        }
                        t *= Rational::from_integer((m as u64).pow(a).into())
                            * Rational::from_integer((r as u64).pow(b).into());
                    }
                    *acc += t;
                }
                return;
            }
            for m in (1..below).rev() {
                ms.push(m);
                rec(p, pos + 1, m, ms, mult, acc);
                ms.pop();
            }
        }
        let mut acc = Rational::zero();
        rec(self, 0, max_m + 1, &mut Vec::new(), &multiplicity, &mut acc);
        acc
    }
}

/// Rewrites a polynomial given in the summed form
/// `Σ_{m_1>…>m_n>0} Σ_{1<=r_i<=r_{m_i}(λ)} p(m, r)` as an equivalent [`ReprPoly`].
pub fn psi_to_direct(p: &ReprPoly) -> ReprPoly {
    let mut out = ReprPoly::new(p.n);
    for (e, c) in &p.terms {
        let polys: Vec<UnivariatePoly> = e.iter().map(|&(_, b)| faulhaber_poly(b)).collect();
        let mut acc: Vec<(Vec<(u32, u32)>, Rational)> = vec![(vec![], c.clone())];
        for (i, q) in polys.iter().enumerate() {
            let mut next = Vec::new();
            for (key, x) in &acc {
                for (b, y) in q.coeffs().iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    let mut k2 = key.clone();
                    k2.push((e[i].0, b as u32));
                    next.push((k2, x * y));
                }
            }
            acc = next;
        }
        for (key, x) in acc {
            *out.terms.entry(key).or_insert_with(Rational::zero) += x;
        }
    }
    out.terms.retain(|_, c| !c.is_zero());
    out
}

/// Writes a [`ReprPoly`] in the word basis of `model`.
///
/// Positions whose `y` exponent vanishes are summed out with Faulhaber polynomials; the first position
/// must carry a positive `y` exponent in every term, otherwise the sum over `m_1` is infinite.
pub fn canonicalize_psi(model: Model, p: &ReprPoly) -> Result<WordSum> {
    let mut work: Vec<(Vec<(u32, u32)>, Rational)> = p
        .terms
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let mut out = WordSum::zero();
    while let Some((e, c)) = work.pop() {
        let Some(i) = e.iter().rposition(|&(_, b)| b == 0) else {
            let letters = e.iter().map(|&(a, b)| Letter { k: b, d: a }).collect();
            out.add_term(Word(letters), c);
            continue;
        };
        if i == 0 {
            return Err(Error::Divergent(
                "the outermost variable has y-exponent 0, the sum over m_1 is infinite".into(),
            ));
        }
        let a = e[i].0;
        let f = faulhaber_poly(a);
        // Σ_{m_{i+1} < m < m_{i-1}} m^a = F_a(m_{i-1} - 1) - F_a(m_{i+1})
        let up = f.compose_linear(&Rational::one(), &-Rational::one());
        let mut rest = e.clone();
        rest.remove(i);
        for (x, y) in up.coeffs().iter().enumerate() {
            if !y.is_zero() {
                let mut k2 = rest.clone();
                k2[i - 1].0 += x as u32;
                work.push((k2, &c * y));
            }
        }
        if i < e.len() - 1 {
            for (x, y) in f.coeffs().iter().enumerate() {
                if !y.is_zero() {
                    let mut k2 = rest.clone();
                    k2[i].0 += x as u32;
                    work.push((k2, -(&c * y)));
                }
            }
        }
    }
    Ok(model_convert(Model::Monomial, model, &out))
}
