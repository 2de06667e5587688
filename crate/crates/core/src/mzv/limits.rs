use num_bigint::BigInt;
use num_traits::One;

use super::reduce::tail_power_expansion;
use super::{reduce_general_zeta, xi_expand, BiMzvValue, GeneralIndex, MzvIndex, MzvLin};
use crate::error::{Error, Result};
use crate::exact_core::{binomial, factorial, factorial_rat, Rational};
use crate::word_algebra::{regularize, Word, WordSum};

/// The ζ-value of a word of `𝔓⁰`: `ξ(d_1,…,d_m) ζ(k_1,…,k_r)` for `v_{d_1}…v_{d_m} z_{k_1}…z_{k_r}`.
fn zeta_p0(w: &Word) -> Result<MzvLin> {
    let p = w.0.iter().take_while(|l| l.k == 1).count();
    let d: Vec<u32> = w.0[..p].iter().map(|l| l.d).collect();
    let k: Vec<u32> = w.0[p..].iter().map(|l| l.k).collect();
    let xi = xi_expand(&d)?;
    Ok(&xi * &MzvLin::zeta(MzvIndex::new(k)?))
}

/// The bi-MZV map: regularize to a polynomial in `(1;0)`, send `(1;0) ↦ T` and each `𝔓⁰` word to its ζ-value.
/// Words outside `𝔓¹` contribute zero.
pub fn bimzv(s: &WordSum) -> Result<BiMzvValue> {
    let reg = regularize(s);
    let mut out = BiMzvValue::default();
    for (p, c) in reg.coeffs.iter().enumerate() {
        let mut lin = MzvLin::zero();
        for (w, x) in c.iter() {
            lin.add_scaled(&zeta_p0(w)?, x);
        }
        let mut coeffs = vec![MzvLin::zero(); p + 1];
        coeffs[p] = lin;
        out.add_scaled(&BiMzvValue { coeffs }, &Rational::one());
    }
    Ok(out)
}

/// `deg(w) = max_j Σ_{i<=j} (d_i+1) + Σ_{i>j} k_i` together with every maximizing `j`.
pub fn degree(w: &Word) -> (u32, Vec<usize>) {
    let r = w.depth();
    let vals: Vec<u32> = (0..=r)
        .map(|j| {
            w.0[..j].iter().map(|l| l.d + 1).sum::<u32>()
                + w.0[j..].iter().map(|l| l.k).sum::<u32>()
        })
        .collect();
    let m = *vals.iter().max().unwrap();
    (m, (0..=r).filter(|&j| vals[j] == m).collect())
}

/// Outcome of a degree or weight limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    Value(MzvLin),
    /// The maximum defining the degree is attained more than once; the rescaled bracket grows logarithmically.
    Divergent,
}

/// `Σ_{0<r_1<…<r_t} Π_i (r_i - r_{i-1})^{k_i-1}/((k_i-1)! r_i) · Ω[Π_i (1/r_i + … + 1/r_t)^{d_i}]` with `r_0 = 0`.
fn l_sum(g: &Word) -> Result<MzvLin> {
    let t = g.depth();
    if t == 0 {
        return Ok(MzvLin::one());
    }
    let k = g.ks();
    let d = g.ds();
    let mut out = MzvLin::zero();
    for (l, c) in tail_power_expansion(&d) {
        let omega: BigInt = l.iter().map(|&x| factorial(x)).product();
        let norm: BigInt = k.iter().map(|&x| factorial(x - 1)).product();
        let base = Rational::new(c * omega, norm);
        // e_i copies of r_i from (r_i - r_{i-1})^{k_i - 1}; the factor for i = 1 is r_1^{k_1 - 1}
        let mut e = vec![0u32; t];
        e[0] = k[0] - 1;
        'odometer: loop {
            let mut coeff = base.clone();
            let mut kappa: Vec<i64> = (0..t).map(|j| 1 + l[j] as i64 - e[j] as i64).collect();
            for i in 1..t {
                let rest = k[i] - 1 - e[i];
                coeff *= Rational::from_integer(binomial((k[i] - 1) as i64, e[i] as i64));
                if rest % 2 == 1 {
                    coeff = -coeff;
                }
                kappa[i - 1] -= rest as i64;
            }
            // sum over 0 < r_1 < … < r_t, i.e. ζ with the outermost variable r_t first
            kappa.reverse();
            out.add_scaled(&reduce_general_zeta(&GeneralIndex(kappa))?, &coeff);
            let mut i = 1;
            loop {
                if i >= t {
                    break 'odometer;
                }
                if e[i] < k[i] - 1 {
                    e[i] += 1;
                    break;
                }
                e[i] = 0;
                i += 1;
            }
        }
    }
    Ok(out)
}

/// `lim_{q→1} (1-q)^{deg w} ⟨σ_s(w)⟩_q` as a combination of MZVs.
///
/// With `t` the unique maximizer in [`degree`], the word splits as `g h` after position `t`;
/// the limit is `L(g) · ζ(k_{t+1}-d_{t+1}, …, k_r-d_r)`.
pub fn zdegree_limit(w: &Word) -> Result<Limit> {
    let (_, arg) = degree(w);
    if arg.len() != 1 {
        return Ok(Limit::Divergent);
    }
    let t = arg[0];
    let g = Word(w.0[..t].to_vec());
    let h: Vec<i64> = w.0[t..].iter().map(|l| l.k as i64 - l.d as i64).collect();
    let hz = if h.is_empty() {
        MzvLin::one()
    } else {
        reduce_general_zeta(&GeneralIndex(h))?
    };
    Ok(Limit::Value(&l_sum(&g)? * &hz))
}

/// The limit at the weight: equal to [`zdegree_limit`] when the degree equals the weight, zero otherwise.
pub fn weight_limit(w: &Word) -> Result<Limit> {
    if degree(w).0 == w.weight() {
        zdegree_limit(w)
    } else {
        Ok(Limit::Value(MzvLin::zero()))
    }
}

/// Both sides of the sum formula for a pair `(a, b)`.
#[derive(Clone, Debug)]
pub struct SumFormulaReport {
    /// `Σ_i (-1)^{a-i}/(i!(a+1-i)!) ξ(i, 0^{b-1}, a-i+1)`.
    pub lhs: MzvLin,
    /// Sum of all admissible `ζ(k)` of depth `b+1` and weight `a+b+2`.
    pub depth_sum: MzvLin,
    pub lhs_value: f64,
    pub zeta_value: f64,
    pub depth_sum_value: f64,
}

impl SumFormulaReport {
    pub fn holds(&self, tol: f64) -> bool {
        (self.lhs_value - self.zeta_value).abs() < tol
            && (self.depth_sum_value - self.zeta_value).abs() < tol
    }
}

fn admissible_of(weight: u32, depth: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let min = if cur.is_empty() { 2 } else { 1 };
        for x in min..=left.saturating_sub(slots as u32 - 1) {
            cur.push(x);
            rec(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, depth, &mut Vec::new(), &mut out);
    out
}

/// Checks `Σ_i (-1)^{a-i}/(i!(a+1-i)!) ξ(i, 0^{b-1}, a-i+1) = ζ(a+b+2)` and the classical sum formula.
///
/// For `b = 0` the two outer entries fall on the same variable, so the index is the single entry `a+1`.
pub fn verify_sum_formula(a: u32, b: u32) -> Result<SumFormulaReport> {
    let mut lhs = MzvLin::zero();
    for i in 0..=a {
        let c = Rational::one() / (factorial_rat(i) * factorial_rat(a + 1 - i));
        let c = if (a - i) % 2 == 1 { -c } else { c };
        let d: Vec<u32> = if b == 0 {
            vec![a + 1]
        } else {
            let mut v = vec![i];
            v.extend(std::iter::repeat_n(0, b as usize - 1));
            v.push(a - i + 1);
            v
        };
        lhs.add_scaled(&xi_expand(&d)?, &c);
    }
    let mut depth_sum = MzvLin::zero();
    for k in admissible_of(a + b + 2, b as usize + 1) {
        depth_sum.add_term(MzvIndex(k), Rational::one());
    }
    if depth_sum.is_zero() {
        return Err(Error::OutOfRange("no admissible indices".into()));
    }
    let zeta_value = super::mzv_value(&MzvIndex(vec![a + b + 2]));
    Ok(SumFormulaReport {
        lhs_value: lhs.eval(),
        depth_sum_value: depth_sum.eval(),
        lhs,
        depth_sum,
        zeta_value,
    })
}
