use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{binomial, factorial_rat, Rational};

/// Polynomial in one variable with rational coefficients, stored in ascending order.
/// Trailing zero coefficients are always stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^e`.
    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(x.into()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational::to_f64(c);
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(a·x + b)`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Self {
        let lin = UnivariatePoly::new(vec![b.clone(), a.clone()]);
        let mut acc = UnivariatePoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &UnivariatePoly::constant(c.clone());
        }
        acc
    }

    /// `S(n) = Σ_{i=1}^{n} p(i)` as a polynomial in `n`.
    pub fn indefinite_sum(&self) -> Self {
        let mut acc = UnivariatePoly::zero();
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &super::bernoulli::faulhaber_poly(e as u32).scale(c);
            }
        }
        acc
    }

    /// `C(x + s, k)` as a polynomial in `x`.
    pub fn binomial_poly(s: i64, k: u32) -> Self {
        let mut acc = UnivariatePoly::constant(Rational::one());
        for i in 0..k as i64 {
            let lin = UnivariatePoly::new(vec![
                Rational::from_integer((s - i).into()),
                Rational::one(),
            ]);
            acc = &acc * &lin;
        }
        acc.scale(&(Rational::one() / factorial_rat(k)))
    }

    /// `(x + c)^e` expanded.
    pub fn shifted_power(c: &Rational, e: u32) -> Self {
        let v = (0..=e)
            .map(|i| {
                Rational::from_integer(binomial(e as i64, i as i64))
                    * num_traits::pow(c.clone(), (e - i) as usize)
            })
            .collect();
        Self::new(v)
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn add(self, o: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UnivariatePoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn sub(self, o: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UnivariatePoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Neg for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn neg(self) -> UnivariatePoly {
        UnivariatePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn mul(self, o: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || o.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UnivariatePoly::new(v)
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    #[test]
    fn arithmetic_and_eval() {
        let p = UnivariatePoly::new(vec![rat_int(1), rat_int(2), rat_int(0)]);
        assert_eq!(p.degree(), Some(1));
        let q = &p * &p;
        assert_eq!(q.coeffs(), &[rat_int(1), rat_int(4), rat_int(4)]);
        assert_eq!(q.eval_int(3), rat_int(49));
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn binomial_poly_values() {
        let p = UnivariatePoly::binomial_poly(1, 2);
        for n in 0..10i64 {
            assert_eq!(p.eval_int(n), rat((n + 1) * n, 2));
        }
    }

    #[test]
    fn compose_shift() {
        let p = UnivariatePoly::monomial(rat_int(1), 3);
        let q = p.compose_linear(&rat_int(1), &rat_int(-1));
        assert_eq!(q.eval_int(5), rat_int(64));
    }

    #[test]
    fn indefinite_sum_matches_loop() {
        let p = UnivariatePoly::new(vec![rat(1, 3), rat_int(-2), rat_int(0), rat(5, 7)]);
        let s = p.indefinite_sum();
        let mut acc = rat_int(0);
        for n in 1..=20 {
            acc += p.eval_int(n);
            assert_eq!(s.eval_int(n), acc);
        }
        assert!(s.eval_int(0).is_zero());
    }
}
