//! Multiple zeta values `ζ(k_1,…,k_r) = Σ_{m_1>…>m_r>0} m_1^{-k_1}…m_r^{-k_r}` kept as formal
//! rational combinations, the ξ-values, the bi-MZV map on words and the degree limits of q-brackets.
//!
//! No relations among MZVs are applied; products are expanded with the harmonic (stuffle) product,
//! which is an identity of the defining series.

mod eval;
mod limits;
mod reduce;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_core::{parse_rational, to_f64, Rational};

pub use eval::{mzv_eval, mzv_value, MzvEstimate};
pub use limits::{
    bimzv, degree, verify_sum_formula, weight_limit, zdegree_limit, Limit, SumFormulaReport,
};
pub use reduce::{reduce_general_zeta, xi_expand};

/// An admissible index: entries `>= 1` and first entry `>= 2`. The empty index stands for `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct MzvIndex(pub Vec<u32>);

impl MzvIndex {
    pub fn new(v: Vec<u32>) -> Result<Self> {
        if v.contains(&0) || v.first().is_some_and(|&k| k < 2) {
            return Err(Error::InvalidInput(format!(
                "index {v:?} is not admissible"
            )));
        }
        Ok(MzvIndex(v))
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "ζ({})", v.join(","))
    }
}

fn stuffle(a: &[u32], b: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    if a.is_empty() || b.is_empty() {
        out.insert(if a.is_empty() { b.to_vec() } else { a.to_vec() }, 1);
        return out;
    }
    let mut push = |head: u32, tail: BTreeMap<Vec<u32>, u64>| {
        for (t, c) in tail {
            let mut v = vec![head];
            v.extend(t);
            *out.entry(v).or_insert(0) += c;
        }
    };
    push(a[0], stuffle(&a[1..], b));
    push(b[0], stuffle(a, &b[1..]));
    push(a[0] + b[0], stuffle(&a[1..], &b[1..]));
    out
}

/// A rational combination of MZVs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MzvLin {
    terms: BTreeMap<MzvIndex, Rational>,
}

impl MzvLin {
    pub fn zero() -> Self {
        MzvLin::default()
    }

    pub fn one() -> Self {
        Self::zeta(MzvIndex::default())
    }

    pub fn zeta(i: MzvIndex) -> Self {
        let mut s = MzvLin::zero();
        s.add_term(i, Rational::one());
        s
    }

    pub fn add_term(&mut self, i: MzvIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(i.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, o: &MzvLin, c: &Rational) {
        for (i, x) in &o.terms {
            self.add_term(i.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> MzvLin {
        let mut s = MzvLin::zero();
        s.add_scaled(self, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MzvIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: &MzvIndex) -> Rational {
        self.terms.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Numerical value, each MZV evaluated by [`mzv_value`].
    pub fn eval(&self) -> f64 {
        self.terms
            .iter()
            .map(|(i, c)| to_f64(c) * mzv_value(i))
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(i, c)| serde_json::json!({ "index": i.0, "coeff": c.to_string() }))
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct T {
            index: Vec<u32>,
            coeff: String,
        }
        #[derive(Deserialize)]
        struct J {
            terms: Vec<T>,
        }
        let j: J =
            serde_json::from_value(v.clone()).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let mut s = MzvLin::zero();
        for t in j.terms {
            s.add_term(MzvIndex::new(t.index)?, parse_rational(&t.coeff)?);
        }
        Ok(s)
    }
}

impl Add for &MzvLin {
    type Output = MzvLin;
    fn add(self, o: &MzvLin) -> MzvLin {
        let mut s = self.clone();
        s.add_scaled(o, &Rational::one());
        s
    }
}

/// Product through the stuffle expansion of the series.
impl Mul for &MzvLin {
    type Output = MzvLin;
    fn mul(self, o: &MzvLin) -> MzvLin {
        let mut s = MzvLin::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let xy = x * y;
                for (v, c) in stuffle(&a.0, &b.0) {
                    s.add_term(MzvIndex(v), &xy * Rational::from_integer(c.into()));
                }
            }
        }
        s
    }
}

impl fmt::Display for MzvLin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.terms.iter().enumerate() {
            let a = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if i.0.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{i}")?;
            } else {
                write!(f, "{a}*{i}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial `Σ_j c_j T^j` with MZV coefficients; `T` stands for the regularized `ζ(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiMzvValue {
    pub coeffs: Vec<MzvLin>,
}

impl BiMzvValue {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(MzvLin::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn constant(c: MzvLin) -> Self {
        BiMzvValue { coeffs: vec![c] }.trim()
    }

    pub fn add_scaled(&mut self, o: &BiMzvValue, c: &Rational) {
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), MzvLin::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            a.add_scaled(b, c);
        }
        let t = std::mem::take(self).trim();
        *self = t;
    }

    pub fn mul(&self, o: &BiMzvValue) -> BiMzvValue {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return BiMzvValue::default();
        }
        let mut v = vec![MzvLin::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        BiMzvValue { coeffs: v }.trim()
    }

    /// Numerical value of each `T`-coefficient.
    pub fn eval(&self) -> Vec<f64> {
        self.coeffs.iter().map(MzvLin::eval).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut terms = Vec::new();
        for (p, c) in self.coeffs.iter().enumerate() {
            for (i, x) in c.iter() {
                terms.push(serde_json::json!({ "index": i.0, "coeff": x.to_string(), "tpow": p }));
            }
        }
        serde_json::json!({ "terms": terms })
    }
}

impl fmt::Display for BiMzvValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match p {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{p}")?,
            }
        }
        Ok(())
    }
}

/// An index with arbitrary integer entries, convergent when every partial sum satisfies `κ_1+…+κ_j > j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralIndex(pub Vec<i64>);

impl GeneralIndex {
    pub fn converges(&self) -> bool {
        let mut s = 0;
        self.0.iter().enumerate().all(|(j, &k)| {
            s += k;
            s > j as i64 + 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::rat_int;

    fn z(v: &[u32]) -> MzvLin {
        MzvLin::zeta(MzvIndex::new(v.to_vec()).unwrap())
    }

    #[test]
    fn admissibility() {
        assert!(MzvIndex::new(vec![1, 2]).is_err());
        assert!(MzvIndex::new(vec![2, 0]).is_err());
        assert!(MzvIndex::new(vec![]).is_ok());
        assert!(GeneralIndex(vec![4, -1]).converges());
        assert!(!GeneralIndex(vec![1, 3]).converges());
        assert!(!GeneralIndex(vec![2, 0]).converges());
    }

    #[test]
    fn stuffle_product() {
        let p = &z(&[2]) * &z(&[3]);
        let mut want = &z(&[2, 3]) + &z(&[3, 2]);
        want.add_term(MzvIndex(vec![5]), rat_int(1));
        assert_eq!(p, want);
        assert_eq!(&MzvLin::one() * &z(&[2]), z(&[2]));
    }

    #[test]
    fn json() {
        let v = z(&[2, 1]).to_json();
        assert_eq!(
            v,
            serde_json::json!({"terms":[{"index":[2,1],"coeff":"1"}]})
        );
        assert_eq!(MzvLin::from_json(&v).unwrap(), z(&[2, 1]));
    }
}
