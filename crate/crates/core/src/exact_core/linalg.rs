//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use super::rational::Rational;

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    /// Consistent but rank-deficient; the rank is reported.
    Underdetermined {
        rank: usize,
    },
}

/// Solves `A x = b` for a rectangular system (rows = equations).
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> LinearSolution {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r][c..].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    if pivots.len() < cols {
        return LinearSolution::Underdetermined { rank: pivots.len() };
    }
    LinearSolution::Unique((0..cols).map(|i| m[i][cols].clone()).collect())
}
