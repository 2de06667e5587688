use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::poly::UnivariatePoly;
use super::rational::{binomial, rat, Rational};

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Vec::new()))
}

/// Bernoulli number `B_k` with the convention `B_1 = -1/2`.
///
/// Computed with the Akiyama–Tanigawa recurrence and memoized for all indices up to `k`.
pub fn bernoulli_number(k: u32) -> Rational {
    let k = k as usize;
    {
        let t = bernoulli_table().read().unwrap();
        if k < t.len() {
            return t[k].clone();
        }
    }
    let mut t = bernoulli_table().write().unwrap();
    if k >= t.len() {
        let n = (k + 1).max(2 * t.len());
        let mut a: Vec<Rational> = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        for m in 0..n {
            a.push(rat(1, m as i64 + 1));
            for j in (1..=m).rev() {
                let d = &a[j - 1] - &a[j];
                a[j - 1] = d * Rational::from_integer((j as i64).into());
            }
            // the recurrence yields B_1 = +1/2
            out.push(if m == 1 { -a[0].clone() } else { a[0].clone() });
        }
        *t = out;
    }
    t[k].clone()
}

/// `B_j(1/2) = (2^{1-j} - 1) B_j`. Vanishes for odd `j`.
pub fn bernoulli_poly_at_half(j: u32) -> Rational {
    if j % 2 == 1 {
        return Rational::zero();
    }
    let two_pow = Rational::from_integer(num_bigint::BigInt::from(2).pow(j));
    (Rational::from_integer(2.into()) / two_pow - Rational::one()) * bernoulli_number(j)
}

fn faulhaber_cache() -> &'static RwLock<HashMap<u32, UnivariatePoly>> {
    static C: OnceLock<RwLock<HashMap<u32, UnivariatePoly>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The polynomial `p` of degree `k+1` with `p(n) = Σ_{i=1}^{n} i^k` for all `n >= 0`.
pub fn faulhaber_poly(k: u32) -> UnivariatePoly {
    if let Some(p) = faulhaber_cache().read().unwrap().get(&k) {
        return p.clone();
    }
    // Σ_{i=0}^{n-1} i^k = 1/(k+1) Σ_j C(k+1, j) B_j n^{k+1-j}, then add n^k (for k = 0 the i = 0 term already supplies it)
    let mut v = vec![Rational::zero(); k as usize + 2];
    let inv = rat(1, k as i64 + 1);
    for j in 0..=k {
        let c =
            Rational::from_integer(binomial(k as i64 + 1, j as i64)) * bernoulli_number(j) * &inv;
        v[(k + 1 - j) as usize] += c;
    }
    if k > 0 {
        v[k as usize] += Rational::one();
    }
    let p = UnivariatePoly::new(v);
    faulhaber_cache().write().unwrap().insert(k, p.clone());
    p
}

/// The polynomial `S_a` of degree `a+1` with `S_a(n) = Σ_{i=1}^{n} (i - 1/2)^a`.
pub fn shifted_power_sum_poly(a: u32) -> UnivariatePoly {
    let mut v = vec![Rational::zero(); a as usize + 2];
    let inv = rat(1, a as i64 + 1);
    for j in 0..=a {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = Rational::from_integer(binomial(a as i64 + 1, j as i64) * sign)
            * bernoulli_poly_at_half(j)
            * &inv;
        v[(a + 1 - j) as usize] += c;
    }
    UnivariatePoly::new(v)
}
