//! Pointwise evaluation of functions on partitions and the enumerative q-bracket
//! `⟨f⟩_q = Σ_λ f(λ) q^{|λ|} / Σ_λ q^{|λ|}`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact_core::{
    bernoulli_poly_at_half, factorial, factorial_rat, partition_gf, rat, QSeries, Rational,
};
use crate::partitions::{character, partitions_of, Partition};
use crate::word_algebra::{Model, Word, WordSum};

/// Evaluator closure for [`PartitionFunction::Custom`].
pub type CustomFn = Arc<dyn Fn(&Partition) -> Rational + Send + Sync>;

/// A function on partitions that can be evaluated exactly.
#[derive(Clone)]
pub enum PartitionFunction {
    /// A combination of words read in a model.
    Word(Model, WordSum),
    /// An exp-word, summed over weakly decreasing parts with weight `1/Aut`.
    ExpWord(Model, Word),
    /// The shifted symmetric power sum `Q_k`.
    ShiftedSymmetricQ(u32),
    /// `Σ_cells (a+1/2)^a (l+1/2)^b / (a! b!)` over arms `a(ξ)` and legs `l(ξ)`; see [`eval_armleg`].
    ArmLeg(u32, u32),
    /// `T_k(λ) = Σ_cells h^{k-2}`.
    HookMoment(u32),
    /// The Möbius function on partitions.
    Moebius,
    Custom(String, CustomFn),
}

impl fmt::Debug for PartitionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionFunction::Word(m, s) => write!(f, "Word({m}, {s})"),
            PartitionFunction::ExpWord(m, w) => write!(f, "ExpWord({m}, {w})"),
            PartitionFunction::ShiftedSymmetricQ(k) => write!(f, "Q_{k}"),
            PartitionFunction::ArmLeg(a, b) => write!(f, "ArmLeg({a},{b})"),
            PartitionFunction::HookMoment(k) => write!(f, "T_{k}"),
            PartitionFunction::Moebius => write!(f, "Moebius"),
            PartitionFunction::Custom(n, _) => write!(f, "Custom({n})"),
        }
    }
}

impl PartitionFunction {
    pub fn word(model: Model, s: WordSum) -> Self {
        PartitionFunction::Word(model, s)
    }

    pub fn custom(name: &str, f: impl Fn(&Partition) -> Rational + Send + Sync + 'static) -> Self {
        PartitionFunction::Custom(name.to_string(), Arc::new(f))
    }

    pub fn eval(&self, l: &Partition) -> Rational {
        match self {
            PartitionFunction::Word(m, s) => eval_wordsum(*m, s, l),
            PartitionFunction::ExpWord(m, w) => eval_expword(*m, w, l),
            PartitionFunction::ShiftedSymmetricQ(k) => eval_qk(*k, l),
            PartitionFunction::ArmLeg(a, b) => eval_armleg(*a, *b, l),
            PartitionFunction::HookMoment(k) => eval_hook_moment(*k, l),
            PartitionFunction::Moebius => moebius(l),
            PartitionFunction::Custom(_, f) => f(l),
        }
    }
}

/// Serializable description of the non-custom variants, as used on the command line.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionSpec {
    Word {
        model: Model,
        wordsum: serde_json::Value,
    },
    Expword {
        model: Model,
        word: Vec<[u32; 2]>,
    },
    #[serde(rename = "shifted_symmetric_Q")]
    ShiftedSymmetricQ {
        k: u32,
    },
    Armleg {
        a: u32,
        b: u32,
    },
    HookMoment {
        k: u32,
    },
    Moebius,
}

impl FunctionSpec {
    pub fn build(&self) -> Result<PartitionFunction> {
        Ok(match self {
            FunctionSpec::Word { model, wordsum } => {
                let mut v = wordsum.clone();
                if v.get("model").is_none() {
                    v["model"] = serde_json::to_value(model).unwrap();
                }
                let (_, s) = WordSum::from_json(&v)?;
                PartitionFunction::Word(*model, s)
            }
            FunctionSpec::Expword { model, word } => {
                let letters = word
                    .iter()
                    .map(|p| crate::word_algebra::Letter::new(p[0], p[1]))
                    .collect::<Result<Vec<_>>>()?;
                PartitionFunction::ExpWord(*model, Word(letters))
            }
            FunctionSpec::ShiftedSymmetricQ { k } => PartitionFunction::ShiftedSymmetricQ(*k),
            FunctionSpec::Armleg { a, b } => PartitionFunction::ArmLeg(*a, *b),
            FunctionSpec::HookMoment { k } => PartitionFunction::HookMoment(*k),
            FunctionSpec::Moebius => PartitionFunction::Moebius,
        })
    }
}

fn pow_int(m: u32, e: u32) -> Rational {
    Rational::from_integer(BigInt::from(m).pow(e))
}

/// `Σ_{m_1>…>m_r>0} Π_j m_j^{d_j} f_{k_j}(r_{m_j}(λ))` for a single word.
pub fn eval_word(model: Model, w: &Word, l: &Partition) -> Rational {
    let c = l.stanley();
    let r = w.depth();
    // dp[j]: sum over choices for the first j letters among the parts seen so far
    let mut dp = vec![Rational::zero(); r + 1];
    dp[0] = Rational::one();
    for (&mult, &m) in c.r.iter().zip(&c.m) {
        for j in (0..r).rev() {
            if dp[j].is_zero() {
                continue;
            }
            let le = w.0[j];
            let v = pow_int(m, le.d) * model.f_value(le.k, mult);
            let t = &dp[j] * v;
            dp[j + 1] += t;
        }
    }
    dp[r].clone()
}

pub fn eval_wordsum(model: Model, s: &WordSum, l: &Partition) -> Rational {
    s.iter().map(|(w, c)| c * eval_word(model, w, l)).sum()
}

/// Exp-word evaluated directly over weakly decreasing index chains.
pub fn eval_expword(model: Model, w: &Word, l: &Partition) -> Rational {
    let c = l.stanley();
    // values of each letter at each distinct part
    let vals: Vec<Vec<Rational>> =
        w.0.iter()
            .map(|le| {
                c.m.iter()
                    .zip(&c.r)
                    .map(|(&m, &r)| pow_int(m, le.d) * model.f_value(le.k, r))
                    .collect()
            })
            .collect();
    let mut out = Rational::zero();
    let mut idx = vec![0usize; w.depth()];
    if c.m.is_empty() {
        return if w.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    loop {
        let mut t = Rational::one();
        let mut run = 0u32;
        for j in 0..idx.len() {
            run = if j > 0 && idx[j] == idx[j - 1] {
                run + 1
            } else {
                1
            };
            t *= &vals[j][idx[j]];
            t /= Rational::from_integer(run.into());
        }
        out += t;
        // next weakly increasing index vector
        let mut j = idx.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if idx[j] + 1 < c.m.len() {
                idx[j] += 1;
                for i in j + 1..idx.len() {
                    idx[i] = idx[j];
                }
                break;
            }
        }
    }
}

/// `Q_k(λ) = β_k + 1/(k-1)! Σ_i ((λ_i - i + 1/2)^{k-1} - (-i + 1/2)^{k-1})` with `β_k = B_k(1/2)/k!`.
pub fn eval_qk(k: u32, l: &Partition) -> Rational {
    if k == 0 {
        return Rational::zero();
    }
    let mut s = Rational::zero();
    for (i, &p) in l.parts().iter().enumerate() {
        let i = i as i64 + 1;
        let a = rat(2 * (p as i64 - i) + 1, 2);
        let b = rat(-2 * i + 1, 2);
        s += num_traits::pow(a, (k - 1) as usize) - num_traits::pow(b, (k - 1) as usize);
    }
    bernoulli_poly_at_half(k) / factorial_rat(k) + s / factorial_rat(k - 1)
}

/// `Σ_ξ (a(ξ)+1/2)^a (l(ξ)+1/2)^b / (a! b!)` over the cells `ξ` of `λ`.
pub fn eval_armleg(a: u32, b: u32, l: &Partition) -> Rational {
    let den = factorial_rat(a) * factorial_rat(b);
    l.arm_leg_cells()
        .iter()
        .map(|c| {
            num_traits::pow(rat(2 * c.arm as i64 + 1, 2), a as usize)
                * num_traits::pow(rat(2 * c.leg as i64 + 1, 2), b as usize)
        })
        .sum::<Rational>()
        / den
}

/// `T_k(λ) = Σ_ξ h(ξ)^{k-2}` for `k >= 2`.
pub fn eval_hook_moment(k: u32, l: &Partition) -> Rational {
    let e = k.saturating_sub(2);
    l.hooks().iter().map(|&h| pow_int(h, e)).sum()
}

/// `(-1)^{ℓ(λ)}` on strict partitions, zero otherwise.
pub fn moebius(l: &Partition) -> Rational {
    if !l.is_strict() {
        Rational::zero()
    } else if l.len() % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `f ↦ f(λ̄)`.
pub fn omega_conj(f: &PartitionFunction, l: &Partition) -> Rational {
    f.eval(&l.conjugate())
}

/// `(f ⊛ g)(λ) = Σ_{α ⊆ λ} f(α) g(λ∖α)` over sub-multisets.
pub fn convolution(f: &PartitionFunction, g: &PartitionFunction, l: &Partition) -> Rational {
    l.sub_multisets()
        .iter()
        .map(|(a, b)| f.eval(a) * g.eval(b))
        .sum()
}

/// Möller transform `Mf(λ) = 1/n! Σ_{μ ⊢ n} |C_μ| χ_λ(μ)² f(μ)`.
pub fn moller_transform(f: &PartitionFunction, l: &Partition) -> Rational {
    let n = l.size();
    let mut s = Rational::zero();
    for mu in partitions_of(n) {
        let chi = character(l, &mu).expect("sizes agree");
        if chi == 0 {
            continue;
        }
        let w = mu.class_size() * BigInt::from(chi) * BigInt::from(chi);
        s += Rational::from_integer(w) * f.eval(&mu);
    }
    s / Rational::from_integer(factorial(n))
}

/// Coefficients `a_λ(f) = (f ⊛ μ)(λ)` of the u-bracket; only strict sub-multisets contribute.
pub fn ubracket_coeff(f: &PartitionFunction, l: &Partition) -> Rational {
    let c = l.stanley();
    let t = c.m.len();
    let mut s = Rational::zero();
    for mask in 0u32..(1 << t) {
        let mut keep = Vec::new();
        for i in 0..t {
            let drop = (mask >> i) & 1;
            keep.extend(std::iter::repeat_n(c.m[i], (c.r[i] - drop) as usize));
        }
        let v = f.eval(&Partition::from_unsorted(keep));
        if mask.count_ones() % 2 == 0 {
            s += v;
        } else {
            s -= v;
        }
    }
    s
}

/// Numerator series `Σ_{|λ| <= N} f(λ) q^{|λ|}`.
pub fn partition_sum(f: &PartitionFunction, order: usize) -> QSeries {
    QSeries::from_fn(order, |n| {
        partitions_of(n as u32).iter().map(|l| f.eval(l)).sum()
    })
}

/// `⟨f⟩_q` to order `N` by enumerating all partitions of size at most `N`.
pub fn qbracket_enum(f: &PartitionFunction, order: usize) -> QSeries {
    partition_sum(f, order)
        .divide_by_unit(&partition_gf(order))
        .expect("partition_gf is a unit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat_int;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn wf(model: Model, k: &[u32], d: &[u32]) -> PartitionFunction {
        PartitionFunction::Word(model, WordSum::from_word(Word::new(k, d).unwrap()))
    }

    #[test]
    fn basic_words() {
        let l = p(&[3, 3, 1]);
        // (1;1) is |λ|, (1;0) is ℓ(λ)
        assert_eq!(wf(Model::Seki, &[1], &[1]).eval(&l), rat_int(7));
        assert_eq!(wf(Model::Monomial, &[1], &[0]).eval(&l), rat_int(3));
        assert_eq!(wf(Model::Monomial, &[1, 1], &[0, 0]).eval(&l), rat_int(2));
        assert_eq!(eval_word(Model::Seki, &Word::empty(), &l), rat_int(1));
    }

    #[test]
    fn q_and_hooks() {
        assert_eq!(eval_qk(2, &p(&[4, 2])), rat(6 * 24 - 1, 24));
        assert_eq!(eval_qk(2, &Partition::empty()), rat(-1, 24));
        assert_eq!(eval_armleg(1, 0, &p(&[2])), rat_int(2));
        assert_eq!(eval_hook_moment(3, &p(&[2, 1])), rat_int(5));
        assert_eq!(eval_hook_moment(2, &p(&[4, 1])), rat_int(5));
    }

    #[test]
    fn enum_brackets() {
        let size = wf(Model::Seki, &[1], &[1]);
        let s = qbracket_enum(&size, 12);
        let sigma = |n: usize| (1..=n).filter(|d| n % d == 0).sum::<usize>() as i64;
        for n in 1..=12 {
            assert_eq!(s.coeff(n), &rat_int(sigma(n)));
        }
        let depth = PartitionFunction::custom("depth", |l| rat_int(l.depth() as i64));
        let s = qbracket_enum(&depth, 10);
        assert!(s.coeffs()[1..].iter().all(|c| c == &rat_int(1)));
        let mu = qbracket_enum(&PartitionFunction::Moebius, 6);
        let want = [1, -2, -1, 2, 1, 2, -2];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(mu.coeff(n), &rat_int(*w), "n = {n}");
        }
    }

    #[test]
    fn expword_matches_conversion() {
        let w = Word::new(&[1, 2, 1], &[0, 1, 2]).unwrap();
        for model in Model::ALL {
            let strict = crate::word_algebra::exp_to_strict(model, &w);
            for n in 0..=8 {
                for l in partitions_of(n) {
                    assert_eq!(
                        eval_expword(model, &w, &l),
                        eval_wordsum(model, &strict, &l)
                    );
                }
            }
        }
    }

    #[test]
    fn spec_json() {
        let j = r#"{"kind":"shifted_symmetric_Q","k":4}"#;
        let f: FunctionSpec = serde_json::from_str(j).unwrap();
        assert!(matches!(
            f.build().unwrap(),
            PartitionFunction::ShiftedSymmetricQ(4)
        ));
        let j =
            r#"{"kind":"word","model":"seki","wordsum":{"terms":[{"coeff":"1","word":[[1,1]]}]}}"#;
        let f: FunctionSpec = serde_json::from_str(j).unwrap();
        assert_eq!(f.build().unwrap().eval(&p(&[2, 1])), rat_int(3));
    }
}
