use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{parse_rational, to_f64, Rational};
use crate::error::{Error, Result};

/// Power series `Σ_{n=0}^{N} a_n q^n` known modulo `q^{N+1}`.
///
/// Binary operations require equal orders; mismatches are reported, never silently truncated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds a series from coefficients `a_0..=a_N`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        QSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        QSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut Rational {
        &mut self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check(&self, o: &QSeries) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: o.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &QSeries) -> Result<Self> {
        self.check(o)?;
        Ok(QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, o: &QSeries) -> Result<Self> {
        self.check(o)?;
        Ok(QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn negate(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// In-place `self += c · o`.
    pub fn add_scaled(&mut self, o: &QSeries, c: &Rational) -> Result<()> {
        self.check(o)?;
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
        Ok(())
    }

    pub fn multiply(&self, o: &QSeries) -> Result<Self> {
        self.check(o)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(QSeries { coeffs: out })
    }

    /// `self / o`; fails unless the constant term of `o` is nonzero.
    pub fn divide_by_unit(&self, o: &QSeries) -> Result<Self> {
        self.check(o)?;
        if o.coeffs[0].is_zero() {
            return Err(Error::NotAUnit);
        }
        let inv0 = Rational::one() / &o.coeffs[0];
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut s = self.coeffs[k].clone();
            for j in 1..=k {
                if !o.coeffs[j].is_zero() {
                    s -= &o.coeffs[j] * &out[k - j];
                }
            }
            out.push(s * &inv0);
        }
        Ok(QSeries { coeffs: out })
    }

    /// The operator `q d/dq`.
    pub fn q_d_dq(&self) -> Self {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a * Rational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }

    /// Evaluates the truncated polynomial at a float `q`.
    pub fn eval_float(&self, q: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * q + to_f64(c);
        }
        acc
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct QSeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QSeriesJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = QSeriesJson::deserialize(d)?;
        if j.coeffs.len() != j.order + 1 {
            return Err(serde::de::Error::custom("coeffs length must be order + 1"));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(QSeries { coeffs })
    }
}

/// `Σ_{n=0}^{N} p(n) q^n`, the reciprocal of `(q;q)_∞`, via Euler's pentagonal recurrence.
pub fn partition_gf(order: usize) -> QSeries {
    let mut p: Vec<BigInt> = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for n in 1..=order {
        let mut s = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = k % 2 == 1;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            let t = if g2 <= n {
                &p[n - g1] + &p[n - g2]
            } else {
                p[n - g1].clone()
            };
            if sign {
                s += t;
            } else {
                s -= t;
            }
            k += 1;
        }
        p[n] = s;
    }
    QSeries {
        coeffs: p.into_iter().map(Rational::from_integer).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    #[test]
    fn partition_numbers() {
        let p = partition_gf(20);
        let want = [1, 1, 2, 3, 5, 7];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(p.coeff(i), &rat_int(*w));
        }
        assert_eq!(p.coeff(20), &rat_int(627));
        assert_eq!(
            partition_gf(100).coeff(100),
            &Rational::from_integer("190569292".parse().unwrap())
        );
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = QSeries::one(3);
        let b = QSeries::one(4);
        assert_eq!(a.add(&b), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert!(a.multiply(&b).is_err());
    }

    #[test]
    fn non_unit_divisor() {
        let a = QSeries::one(3);
        let b = QSeries::zero(3);
        assert_eq!(a.divide_by_unit(&b), Err(Error::NotAUnit));
    }

    #[test]
    fn geometric_series() {
        let mut one_minus_q = QSeries::one(10);
        *one_minus_q.coeff_mut(1) = rat_int(-1);
        let g = QSeries::one(10).divide_by_unit(&one_minus_q).unwrap();
        assert!(g.coeffs().iter().all(|c| c == &rat_int(1)));
        let d = g.q_d_dq();
        assert_eq!(d.coeff(7), &rat_int(7));
        assert!((g.eval_float(0.5) - (2.0 - 0.5f64.powi(11) * 2.0)).abs() < 1e-12);
    }

    #[test]
    fn json_shape() {
        let s = QSeries::from_coeffs(vec![rat_int(1), rat(-1, 2)]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"order":1,"coeffs":["1","-1/2"]}"#);
        let back: QSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
