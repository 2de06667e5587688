//! The q-bracket of word combinations through the u-bracket factorization
//! `⟨P_F(k;d)⟩_q = Σ_{m_1>…>m_r>0} Π_j m_j^{d_j} Σ_{n>=1} ∂f_{k_j}(n) q^{m_j n}`,
//! Eisenstein series, quasimodularity detection and numerical evaluation near `q = 1`.

mod float;
mod quasimod;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_core::{bernoulli_number, factorial_rat, QSeries, Rational};
use crate::word_algebra::{delta_f, Model, Word, WordSum};

pub use float::{degree_probe, qbracket_float, ProbeResult, Trend};
pub use quasimod::{quasimod_detect, QuasimodularPoly};

type Cache = RwLock<HashMap<(Model, Word, usize), QSeries>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn word_series(model: Model, w: &Word, order: usize) -> QSeries {
    let key = (model, w.clone(), order);
    if let Some(s) = cache().read().unwrap().get(&key) {
        return s.clone();
    }
    let r = w.depth();
    let s = if r == 0 {
        QSeries::one(order)
    } else {
        // c[m]: series of Σ over the tail starting at position j with m_j = m
        let mut below: Vec<Option<Vec<Rational>>> = vec![None; order + 1];
        for j in (0..r).rev() {
            let le = w.0[j];
            let df: Vec<Rational> = (0..=order as u32)
                .map(|n| delta_f(model, le.k, n))
                .collect();
            let mut next: Vec<Option<Vec<Rational>>> = vec![None; order + 1];
            // running Σ_{m' < m} below[m']
            let mut prefix = vec![Rational::zero(); order + 1];
            let mut prefix_nonzero = j == r - 1;
            for m in 1..=order {
                if j < r - 1 {
                    if let Some(b) = &below[m - 1] {
                        for (p, x) in prefix.iter_mut().zip(b) {
                            *p += x;
                        }
                        prefix_nonzero = true;
                    }
                }
                if !prefix_nonzero {
                    continue;
                }
                let md = Rational::from_integer(BigInt::from(m).pow(le.d));
                let mut out = vec![Rational::zero(); order + 1];
                let mut any = false;
                for n in 1..=order / m {
                    let a = &df[n] * &md;
                    if a.is_zero() {
                        continue;
                    }
                    let e = m * n;
                    if j == r - 1 {
                        out[e] += &a;
                    } else {
                        for (t, p) in prefix[..=order - e].iter().enumerate() {
                            if !p.is_zero() {
                                out[e + t] += &a * p;
                            }
                        }
                    }
                    any = true;
                }
                if any {
                    next[m] = Some(out);
                }
            }
            below = next;
        }
        let mut total = vec![Rational::zero(); order + 1];
        for b in below.iter().flatten() {
            for (t, x) in total.iter_mut().zip(b) {
                *t += x;
            }
        }
        QSeries::from_coeffs(total)
    };
    cache().write().unwrap().insert(key, s.clone());
    s
}

/// `⟨σ_F(w)⟩_q` to order `N` without enumerating partitions.
pub fn qbracket_fast(model: Model, s: &WordSum, order: usize) -> QSeries {
    let mut out = QSeries::zero(order);
    for (w, c) in s.iter() {
        out.add_scaled(&word_series(model, w, order), c)
            .expect("equal orders");
    }
    out
}

/// `G_k = -B_k/(2·k!) + 1/(k-1)! Σ_{m,r>=1} m^{k-1} q^{mr}` for even `k >= 2`.
pub fn eisenstein(k: u32, order: usize) -> Result<QSeries> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::OutOfRange(format!(
            "Eisenstein series needs even k >= 2, got {k}"
        )));
    }
    let mut s = QSeries::zero(order);
    *s.coeff_mut(0) = -bernoulli_number(k) / (factorial_rat(k) * Rational::from_integer(2.into()));
    let inv = factorial_rat(k - 1).recip();
    for m in 1..=order {
        let v = Rational::from_integer(BigInt::from(m).pow(k - 1)) * &inv;
        let mut e = m;
        while e <= order {
            *s.coeff_mut(e) += &v;
            e += m;
        }
    }
    Ok(s)
}
