use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Letter;
use crate::error::{Error, Result};
use crate::exact_core::linalg::{solve, LinearSolution};
use crate::exact_core::{
    bernoulli_number, binomial, factorial_rat, faulhaber_poly, Rational, UnivariatePoly,
};

/// The family of polynomials `f_k` used to read words as functions on partitions.
///
/// Every family has `f_0 = 1` and `f_k(0) = 0` for `k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Model {
    /// `f_k(x) = x^k`.
    #[serde(rename = "monomial")]
    Monomial,
    /// `∂f_k(n) = n^{k-1}/(k-1)!`.
    #[serde(rename = "seki")]
    Seki,
    /// `f_k(x) = C(x, k)`.
    #[serde(rename = "binomial")]
    Binomial,
    /// `f_k(x) = C(x+1, k) - δ_{k,1}`.
    #[serde(rename = "binomial-shifted")]
    BinomialShifted,
}

impl Model {
    pub const ALL: [Model; 4] = [
        Model::Monomial,
        Model::Seki,
        Model::Binomial,
        Model::BinomialShifted,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Model::Monomial => "monomial",
            Model::Seki => "seki",
            Model::Binomial => "binomial",
            Model::BinomialShifted => "binomial-shifted",
        }
    }

    /// Whether `∂f_k` has leading coefficient `1/(k-1)!`, so that the product constants have the form `1 + α`.
    pub fn is_well_normalized(&self) -> bool {
        !matches!(self, Model::Monomial)
    }

    /// `f_k` as a polynomial.
    pub fn f_poly(&self, k: u32) -> UnivariatePoly {
        let key = (*self, k);
        if let Some(p) = f_cache().read().unwrap().get(&key) {
            return p.clone();
        }
        let p = if k == 0 {
            UnivariatePoly::constant(Rational::one())
        } else {
            match self {
                Model::Monomial => UnivariatePoly::monomial(Rational::one(), k as usize),
                Model::Seki => {
                    faulhaber_poly(k - 1).scale(&(Rational::one() / factorial_rat(k - 1)))
                }
                Model::Binomial => UnivariatePoly::binomial_poly(0, k),
                Model::BinomialShifted => {
                    let p = UnivariatePoly::binomial_poly(1, k);
                    if k == 1 {
                        &p - &UnivariatePoly::constant(Rational::one())
                    } else {
                        p
                    }
                }
            }
        };
        f_cache().write().unwrap().insert(key, p.clone());
        p
    }

    /// `f_k(n)` for a non-negative integer `n`, memoized.
    pub fn f_value(&self, k: u32, n: u32) -> Rational {
        let key = (*self, k, n);
        if let Some(v) = fval_cache().read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.f_poly(k).eval_int(n as i64);
        fval_cache().write().unwrap().insert(key, v.clone());
        v
    }

    /// `∂f_k(n) = f_k(n) - f_k(n-1)` as a polynomial in `n`, valid for `n >= 1` and `k >= 1`.
    pub fn delta_f_poly(&self, k: u32) -> UnivariatePoly {
        let p = self.f_poly(k);
        &p - &p.compose_linear(&Rational::one(), &-Rational::one())
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(Model::Monomial),
            "seki" | "bernoulli_seki" | "bernoulli-seki" => Ok(Model::Seki),
            "binomial" => Ok(Model::Binomial),
            "binomial-shifted" | "binomial_shifted" => Ok(Model::BinomialShifted),
            _ => Err(Error::InvalidInput(format!("unknown model {s:?}"))),
        }
    }
}

type PolyCache = RwLock<HashMap<(Model, u32), UnivariatePoly>>;

fn f_cache() -> &'static PolyCache {
    static C: OnceLock<PolyCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

type ValCache = RwLock<HashMap<(Model, u32, u32), Rational>>;

fn fval_cache() -> &'static ValCache {
    static C: OnceLock<ValCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `∂f_k(n)`, with `∂f_k(0) = f_k(0)` and `∂f_0(n) = δ_{n,0}`.
pub fn delta_f(model: Model, k: u32, n: u32) -> Rational {
    if k == 0 {
        return if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
    }
    if n == 0 {
        return model.f_value(k, 0);
    }
    model.f_value(k, n) - model.f_value(k, n - 1)
}

type ConstCache = RwLock<HashMap<(Model, u32, u32), Arc<Vec<Rational>>>>;

fn const_cache() -> &'static ConstCache {
    static C: OnceLock<ConstCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Constants `c_1,…,c_{k1+k2}` with `Σ_{n1+n2=n} ∂f_{k1}(n1) ∂f_{k2}(n2) = Σ_j c_j ∂f_j(n)` for all `n >= 1`.
///
/// For well-normalized models `c_{k1+k2} = 1` and `c_j = α(k1,k2,j)` below the top.
/// The monomial model is not well-normalized and its top constant differs from one.
pub fn diamond_constants(model: Model, k1: u32, k2: u32) -> Arc<Vec<Rational>> {
    let (a, b) = (k1.min(k2), k1.max(k2));
    if let Some(c) = const_cache().read().unwrap().get(&(model, a, b)) {
        return c.clone();
    }
    let top = (a + b) as usize;
    let c = match model {
        Model::Binomial => {
            let mut v = vec![Rational::zero(); top];
            v[top - 1] = Rational::one();
            v
        }
        Model::Seki => {
            let mut v: Vec<Rational> = (1..a + b).map(|j| alpha_seki(a, b, j)).collect();
            v.push(Rational::one());
            v
        }
        _ => {
            alpha_by_linear_system(model, a, b).expect("structure constants exist for every model")
        }
    };
    let c = Arc::new(c);
    const_cache()
        .write()
        .unwrap()
        .insert((model, a, b), c.clone());
    c
}

fn alpha_seki(k1: u32, k2: u32, j: u32) -> Rational {
    let (k1, k2, j) = (k1 as i64, k2 as i64, j as i64);
    let s1 = if k1 % 2 == 0 { 1 } else { -1 };
    let s2 = if k2 % 2 == 0 { 1 } else { -1 };
    let c = binomial(k1 + k2 - 1 - j, k2 - j) * s1 + binomial(k1 + k2 - 1 - j, k1 - j) * s2;
    let e = (k1 + k2 - j) as u32;
    -Rational::from_integer(c) * bernoulli_number(e) / factorial_rat(e)
}

/// `α_F(k1,k2,j)` for `1 <= j < k1+k2`.
pub fn alpha(model: Model, k1: u32, k2: u32, j: u32) -> Result<Rational> {
    if k1 == 0 || k2 == 0 || j == 0 || j >= k1 + k2 {
        return Err(Error::OutOfRange(format!(
            "alpha({k1},{k2},{j}) needs k1,k2 >= 1 and 1 <= j < k1+k2"
        )));
    }
    Ok(diamond_constants(model, k1, k2)[j as usize - 1].clone())
}

fn convolution(model: Model, k1: u32, k2: u32, n: u32) -> Rational {
    (1..n)
        .map(|n1| delta_f(model, k1, n1) * delta_f(model, k2, n - n1))
        .sum()
}

/// Solves for the product constants by sampling at `n = 1..=k1+k2`, then checks five further points.
pub fn alpha_by_linear_system(model: Model, k1: u32, k2: u32) -> Result<Vec<Rational>> {
    let top = k1 + k2;
    let rows: Vec<Vec<Rational>> = (1..=top)
        .map(|n| (1..=top).map(|j| delta_f(model, j, n)).collect())
        .collect();
    let rhs: Vec<Rational> = (1..=top).map(|n| convolution(model, k1, k2, n)).collect();
    let LinearSolution::Unique(c) = solve(&rows, &rhs) else {
        return Err(Error::Singular(format!(
            "product constants for ({k1},{k2}) in model {model}"
        )));
    };
    for n in top + 1..=top + 5 {
        let lhs = convolution(model, k1, k2, n);
        let rhs: Rational = (1..=top)
            .map(|j| &c[j as usize - 1] * delta_f(model, j, n))
            .sum();
        if lhs != rhs {
            return Err(Error::Singular(format!(
                "product constants for ({k1},{k2}) fail at n = {n}"
            )));
        }
    }
    Ok(c)
}

/// The letter product `(k1;d1) ⋄ (k2;d2) = Σ_j c_j (j; d1+d2)`.
pub fn diamond(model: Model, a: Letter, b: Letter) -> Vec<(Letter, Rational)> {
    let c = diamond_constants(model, a.k, b.k);
    c.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| {
            (
                Letter {
                    k: j as u32 + 1,
                    d: a.d + b.d,
                },
                x.clone(),
            )
        })
        .collect()
}

/// Coefficients `c_1..c_k` with `f_k^{from} = Σ_j c_j f_j^{to}`.
pub fn express_in(from: Model, to: Model, k: u32) -> Vec<Rational> {
    let mut rem = from.f_poly(k);
    let mut c = vec![Rational::zero(); k as usize];
    for j in (1..=k).rev() {
        let g = to.f_poly(j);
        let x = rem.coeff(j as usize) / g.leading();
        rem = &rem - &g.scale(&x);
        c[j as usize - 1] = x;
    }
    debug_assert!(rem.is_zero());
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    #[test]
    fn delta_values() {
        assert_eq!(delta_f(Model::Seki, 3, 4), rat_int(8));
        assert_eq!(delta_f(Model::Binomial, 2, 1), rat_int(0));
        for n in 1..10 {
            assert_eq!(delta_f(Model::Monomial, 1, n), rat_int(1));
            assert_eq!(delta_f(Model::BinomialShifted, 1, n), rat_int(1));
        }
        assert_eq!(delta_f(Model::Seki, 0, 0), rat_int(1));
        assert_eq!(delta_f(Model::Seki, 0, 3), rat_int(0));
        assert_eq!(delta_f(Model::Seki, 2, 0), rat_int(0));
    }

    #[test]
    fn seki_f2() {
        let p = Model::Seki.f_poly(2);
        assert_eq!(p.coeffs(), &[rat_int(0), rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(Model::Seki, 2, 3, 3).unwrap(), rat(-1, 12));
        assert_eq!(alpha(Model::Seki, 1, 1, 1).unwrap(), rat_int(-1));
        assert_eq!(alpha(Model::Binomial, 2, 3, 4).unwrap(), rat_int(0));
        assert!(matches!(
            alpha(Model::Seki, 2, 3, 5),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            alpha(Model::Seki, 2, 3, 0),
            Err(Error::OutOfRange(_))
        ));
    }

    // the closed form and the sampled linear system are independent routes
    #[test]
    fn seki_closed_form_matches_linear_system() {
        for k1 in 1..=6 {
            for k2 in 1..=6 {
                let lin = alpha_by_linear_system(Model::Seki, k1, k2).unwrap();
                assert_eq!(*diamond_constants(Model::Seki, k1, k2), lin, "({k1},{k2})");
            }
        }
    }

    #[test]
    fn binomial_constants_vanish() {
        for k1 in 1..=5 {
            for k2 in 1..=5 {
                let lin = alpha_by_linear_system(Model::Binomial, k1, k2).unwrap();
                assert_eq!(*diamond_constants(Model::Binomial, k1, k2), lin);
            }
        }
    }

    #[test]
    fn monomial_top_constant() {
        // (n-1) = 1/2 (2n-1) - 1/2
        let c = diamond_constants(Model::Monomial, 1, 1);
        assert_eq!(*c, vec![rat(-1, 2), rat(1, 2)]);
        let c = diamond_constants(Model::BinomialShifted, 2, 3);
        assert_eq!(c[4], rat_int(1));
    }

    #[test]
    fn change_of_basis() {
        assert_eq!(
            express_in(Model::Monomial, Model::Seki, 2),
            vec![rat_int(-1), rat_int(2)]
        );
        for from in Model::ALL {
            for to in Model::ALL {
                for k in 1..=5 {
                    let c = express_in(from, to, k);
                    let mut acc = UnivariatePoly::zero();
                    for (j, x) in c.iter().enumerate() {
                        acc = &acc + &to.f_poly(j as u32 + 1).scale(x);
                    }
                    assert_eq!(acc, from.f_poly(k));
                }
            }
        }
    }

    #[test]
    fn parse_models() {
        assert_eq!(
            "binomial-shifted".parse::<Model>().unwrap(),
            Model::BinomialShifted
        );
        assert!("other".parse::<Model>().is_err());
        assert_eq!(serde_json::to_string(&Model::Seki).unwrap(), "\"seki\"");
    }
}
