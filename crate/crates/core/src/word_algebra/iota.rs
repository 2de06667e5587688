use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Letter, Word, WordSum};
use crate::exact_core::{binomial, factorial, Rational};

static GENSERIES_DEPTH_CAP: AtomicUsize = AtomicUsize::new(5);

/// Words deeper than this are sent through the explicit-constants route by [`iota_s`].
pub fn set_genseries_depth_cap(cap: usize) {
    GENSERIES_DEPTH_CAP.store(cap, Ordering::Relaxed);
}

fn cache() -> &'static RwLock<HashMap<Word, WordSum>> {
    static C: OnceLock<RwLock<HashMap<Word, WordSum>>> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The involution ι on the seki model, extended linearly. Results per word are memoized.
pub fn iota_s(s: &WordSum) -> WordSum {
    s.map_linear(|w| {
        if let Some(v) = cache().read().unwrap().get(w) {
            return v.clone();
        }
        let v = if w.depth() <= GENSERIES_DEPTH_CAP.load(Ordering::Relaxed) {
            iota_s_genseries(w)
        } else {
            iota_s_explicit(w)
        };
        cache().write().unwrap().insert(w.clone(), v.clone());
        v
    })
}

/// Compositions of `total` into `r` parts, each at least `min`.
fn compositions(total: u32, r: usize, min: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, r: usize, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r == 1 {
            if left >= min {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let mut x = min;
        while x + min * (r as u32 - 1) <= left {
            cur.push(x);
            rec(left - x, r - 1, min, cur, out);
            cur.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if total == 0 {
            out.push(vec![]);
        }
        return out;
    }
    if total >= min * r as u32 {
        rec(total, r, min, &mut Vec::new(), &mut out);
    }
    out
}

type Poly = HashMap<Vec<u32>, BigInt>;

fn mul_linear(p: &Poly, form: &[(usize, i64)], bound: &[u32]) -> Poly {
    let mut out = Poly::new();
    for (e, c) in p {
        for &(v, a) in form {
            if e[v] >= bound[v] {
                continue;
            }
            let mut e2 = e.clone();
            e2[v] += 1;
            *out.entry(e2).or_insert_with(BigInt::zero) += c * a;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// For every exponent vector `e` with `|e| = total`, the coefficient of `X^target` in `Π_i L_i^{e_i}`.
fn extract(forms: &[Vec<(usize, i64)>], total: u32, target: &[u32]) -> Vec<(Vec<u32>, BigInt)> {
    fn rec(
        i: usize,
        left: u32,
        p: Poly,
        forms: &[Vec<(usize, i64)>],
        target: &[u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, BigInt)>,
    ) {
        if i == forms.len() - 1 {
            let mut q = p;
            for _ in 0..left {
                q = mul_linear(&q, &forms[i], target);
            }
            if let Some(c) = q.get(target) {
                cur.push(left);
                out.push((cur.clone(), c.clone()));
                cur.pop();
            }
            return;
        }
        let mut q = p;
        for e in 0..=left {
            if q.is_empty() {
                break;
            }
            cur.push(e);
            rec(i + 1, left - e, q.clone(), forms, target, cur, out);
            cur.pop();
            q = mul_linear(&q, &forms[i], target);
        }
    }
    let mut out = Vec::new();
    let mut p = Poly::new();
    p.insert(vec![0; target.len()], BigInt::one());
    rec(0, total, p, forms, target, &mut Vec::new(), &mut out);
    out
}

/// ι through the generating series identity
/// `ι G(X_1..X_r; Y_1..Y_r) = G(Y_1+…+Y_r, …, Y_1+Y_2, Y_1; X_r, X_{r-1}-X_r, …, X_1-X_2)`
/// with `G = Σ (k;d) Π X^{k-1} Y^d/d!`; coefficients are read off by expanding the right side.
pub fn iota_s_genseries(w: &Word) -> WordSum {
    let r = w.depth();
    if r == 0 {
        return WordSum::one();
    }
    let k = w.ks();
    let d = w.ds();
    // top row: X'_i = Y_1 + … + Y_{r+1-i}
    let y_forms: Vec<Vec<(usize, i64)>> = (0..r)
        .map(|i| (0..r - i).map(|v| (v, 1)).collect())
        .collect();
    // bottom row: Y'_1 = X_r, Y'_i = X_{r+1-i} - X_{r+2-i}
    let x_forms: Vec<Vec<(usize, i64)>> = (0..r)
        .map(|i| {
            if i == 0 {
                vec![(r - 1, 1)]
            } else {
                vec![(r - 1 - i, 1), (r - i, -1)]
            }
        })
        .collect();
    let d_sum: u32 = d.iter().sum();
    let k_sum: u32 = k.iter().sum();
    let k_minus: Vec<u32> = k.iter().map(|x| x - 1).collect();
    let y_part = extract(&y_forms, d_sum, &d);
    let x_part = extract(&x_forms, k_sum - r as u32, &k_minus);
    let dfact: BigInt = d.iter().map(|&x| factorial(x)).product();
    let mut out = WordSum::zero();
    for (e, yc) in &y_part {
        for (b, xc) in &x_part {
            let bfact: BigInt = b.iter().map(|&x| factorial(x)).product();
            let c = Rational::new(yc * xc * &dfact, bfact);
            let letters = e
                .iter()
                .zip(b)
                .map(|(&ei, &bi)| Letter { k: ei + 1, d: bi })
                .collect();
            out.add_term(Word(letters), c);
        }
    }
    out
}

/// ι through closed-form constants: `ι(k;d) = Σ_{a,b} C^{k,d}_{a,b} (a;b)`, summed over `a_i >= 1` with
/// `|a| = |d| + r` and `b_i >= 0` with `|b| = |k| - r`.
pub fn iota_s_explicit(w: &Word) -> WordSum {
    let r = w.depth();
    if r == 0 {
        return WordSum::one();
    }
    let k: Vec<i64> = w.ks().iter().map(|&x| x as i64).collect();
    let d: Vec<i64> = w.ds().iter().map(|&x| x as i64).collect();
    let d_sum: i64 = d.iter().sum();
    let k_sum: i64 = k.iter().sum();
    // s_j(l) = l_1 + … + l_j, s^j(l) = l_{r-j+2} + … + l_r (1-indexed)
    let lower = |l: &[i64], j: usize| -> i64 { l[..j].iter().sum() };
    let upper = |l: &[i64], j: usize| -> i64 { l[r + 1 - j..].iter().sum() };
    let mut out = WordSum::zero();
    for a in compositions((d_sum + r as i64) as u32, r, 1) {
        let a: Vec<i64> = a.into_iter().map(|x| x as i64).collect();
        for b in compositions((k_sum - r as i64) as u32, r, 0) {
            let b: Vec<i64> = b.into_iter().map(|x| x as i64).collect();
            let b_sum: i64 = b.iter().sum();
            let mut num = BigInt::one();
            let mut sign = b_sum;
            let mut den = BigInt::one();
            for j in 1..=r {
                num *= binomial(lower(&d, j) - upper(&a, j) + j as i64 - 1, a[r - j] - 1);
                num *= binomial(k[r - j] - 1, lower(&b, j) - upper(&k, j) + j as i64 - 1);
                if num.is_zero() {
                    break;
                }
                num *= factorial((a[j - 1] - 1) as u32);
                den *= factorial((k[j - 1] - 1) as u32);
                sign += lower(&k, j) + upper(&b, j) + j as i64;
            }
            if num.is_zero() {
                continue;
            }
            let c = Rational::new(if sign % 2 == 0 { num } else { -num }, den);
            let letters = a
                .iter()
                .zip(&b)
                .map(|(&ai, &bi)| Letter {
                    k: ai as u32,
                    d: bi as u32,
                })
                .collect();
            out.add_term(Word(letters), c);
        }
    }
    out
}
