use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::eisenstein;
use crate::error::{Error, Result};
use crate::exact_core::linalg::{solve, LinearSolution};
use crate::exact_core::{parse_rational, QSeries, Rational};

/// A polynomial in `G_2, G_4, G_6`, keyed by exponents `(a, b, c)` of `G_2^a G_4^b G_6^c`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuasimodularPoly {
    pub terms: BTreeMap<(u32, u32, u32), Rational>,
}

fn monomials(max_weight: u32) -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for c in 0..=max_weight / 6 {
        for b in 0..=(max_weight - 6 * c) / 4 {
            for a in 0..=(max_weight - 6 * c - 4 * b) / 2 {
                v.push((a, b, c));
            }
        }
    }
    v.sort_by_key(|&(a, b, c)| {
        (
            2 * a + 4 * b + 6 * c,
            std::cmp::Reverse(a),
            std::cmp::Reverse(b),
        )
    });
    v
}

fn monomial_series(e: (u32, u32, u32), order: usize, g: &[QSeries; 3]) -> QSeries {
    let mut s = QSeries::one(order);
    for (i, &p) in [e.0, e.1, e.2].iter().enumerate() {
        for _ in 0..p {
            s = s.multiply(&g[i]).expect("equal orders");
        }
    }
    s
}

impl QuasimodularPoly {
    /// Largest weight `2a + 4b + 6c` present.
    pub fn weight(&self) -> u32 {
        self.terms
            .keys()
            .map(|&(a, b, c)| 2 * a + 4 * b + 6 * c)
            .max()
            .unwrap_or(0)
    }

    pub fn to_series(&self, order: usize) -> QSeries {
        let g = [
            eisenstein(2, order).unwrap(),
            eisenstein(4, order).unwrap(),
            eisenstein(6, order).unwrap(),
        ];
        let mut s = QSeries::zero(order);
        for (&e, c) in &self.terms {
            s.add_scaled(&monomial_series(e, order, &g), c).unwrap();
        }
        s
    }
}

/// Looks for `F = Σ c_{abc} G_2^a G_4^b G_6^c` over all monomials of weight at most `max_weight`,
/// including the constant. Needs at least five more coefficients than unknowns.
///
/// Returns `Ok(None)` when the overdetermined system is inconsistent. A match only certifies
/// consistency with quasimodularity up to the order of `F`.
pub fn quasimod_detect(f: &QSeries, max_weight: u32) -> Result<Option<QuasimodularPoly>> {
    let basis = monomials(max_weight);
    let order = f.order();
    let needed = basis.len() + 4;
    if order < needed {
        return Err(Error::InsufficientOrder {
            needed,
            have: order,
        });
    }
    let g = [
        eisenstein(2, order)?,
        eisenstein(4, order)?,
        eisenstein(6, order)?,
    ];
    let cols: Vec<QSeries> = basis
        .iter()
        .map(|&e| monomial_series(e, order, &g))
        .collect();
    let rows: Vec<Vec<Rational>> = (0..=order)
        .map(|n| cols.iter().map(|s| s.coeff(n).clone()).collect())
        .collect();
    match solve(&rows, f.coeffs()) {
        LinearSolution::Unique(x) => {
            let terms = basis
                .into_iter()
                .zip(x)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            Ok(Some(QuasimodularPoly { terms }))
        }
        LinearSolution::Inconsistent => Ok(None),
        LinearSolution::Underdetermined { rank } => Err(Error::Singular(format!(
            "Eisenstein monomials are dependent to this order (rank {rank})"
        ))),
    }
}

impl fmt::Display for QuasimodularPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b, c)| {
            (
                std::cmp::Reverse(2 * a + 4 * b + 6 * c),
                std::cmp::Reverse(a),
                std::cmp::Reverse(b),
            )
        });
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[e];
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let mut mon = Vec::new();
            for (name, p) in [("G2", e.0), ("G4", e.1), ("G6", e.2)] {
                match p {
                    0 => {}
                    1 => mon.push(name.to_string()),
                    _ => mon.push(format!("{name}^{p}")),
                }
            }
            if mon.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mon.join("*"))?;
            } else {
                write!(f, "{a}*{}", mon.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    g2: u32,
    g4: u32,
    g6: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct Terms {
    terms: Vec<Term>,
}

impl Serialize for QuasimodularPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(&(g2, g4, g6), c)| Term {
                g2,
                g4,
                g6,
                coeff: c.to_string(),
            })
            .collect();
        Terms { terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasimodularPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = Terms::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for x in t.terms {
            let c = parse_rational(&x.coeff).map_err(serde::de::Error::custom)?;
            terms.insert((x.g2, x.g4, x.g6), c);
        }
        Ok(QuasimodularPoly { terms })
    }
}
