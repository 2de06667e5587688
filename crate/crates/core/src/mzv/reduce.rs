use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GeneralIndex, MzvIndex, MzvLin};
use crate::error::{Error, Result};
use crate::exact_core::{factorial, faulhaber_poly, Rational};

/// Rewrites `ζ(κ_1,…,κ_r)` with integer entries, some possibly non-positive, as a combination of
/// admissible MZVs by summing out the innermost non-positive exponent with a Faulhaber polynomial.
pub fn reduce_general_zeta(idx: &GeneralIndex) -> Result<MzvLin> {
    if !idx.converges() {
        return Err(Error::Divergent(format!("ζ{:?} does not converge", idx.0)));
    }
    let mut out = MzvLin::zero();
    let mut work: Vec<(Vec<i64>, Rational)> = vec![(idx.0.clone(), Rational::one())];
    while let Some((k, c)) = work.pop() {
        let Some(i) = k.iter().rposition(|&x| x <= 0) else {
            out.add_term(MzvIndex(k.iter().map(|&x| x as u32).collect()), c);
            continue;
        };
        // i >= 1 because the first entry of a convergent index exceeds one
        let f = faulhaber_poly((-k[i]) as u32);
        let mut rest = k.clone();
        rest.remove(i);
        // Σ_{m_{i+1} < m < m_{i-1}} m^p = F_p(m_{i-1} - 1) - F_p(m_{i+1})
        let up = f.compose_linear(&Rational::one(), &-Rational::one());
        for (e, y) in up.coeffs().iter().enumerate() {
            if !y.is_zero() {
                let mut k2 = rest.clone();
                k2[i - 1] -= e as i64;
                work.push((k2, &c * y));
            }
        }
        if i < k.len() - 1 {
            for (e, y) in f.coeffs().iter().enumerate() {
                if !y.is_zero() {
                    let mut k2 = rest.clone();
                    k2[i] -= e as i64;
                    work.push((k2, -(&c * y)));
                }
            }
        }
    }
    Ok(out)
}

/// Expands `Π_i (u_i + … + u_r)^{d_i}` into monomials `u^l`.
pub(crate) fn tail_power_expansion(d: &[u32]) -> HashMap<Vec<u32>, BigInt> {
    let r = d.len();
    let mut p: HashMap<Vec<u32>, BigInt> = HashMap::new();
    p.insert(vec![0; r], BigInt::one());
    for (i, &di) in d.iter().enumerate() {
        for _ in 0..di {
            let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
            for (e, c) in &p {
                for j in i..r {
                    let mut e2 = e.clone();
                    e2[j] += 1;
                    *next.entry(e2).or_insert_with(BigInt::zero) += c;
                }
            }
            p = next;
        }
    }
    p
}

/// `ξ(d_1,…,d_r) = Σ_{0<m_1<…<m_r} 1/(m_1⋯m_r) Ω[Π_i (1/m_i + … + 1/m_r)^{d_i}]`,
/// where `Ω` multiplies each `Π m_j^{-l_j}` by `Π l_j!`.
pub fn xi_expand(d: &[u32]) -> Result<MzvLin> {
    if d.is_empty() {
        return Ok(MzvLin::one());
    }
    if d[d.len() - 1] == 0 {
        return Err(Error::Divergent("ξ needs a positive last entry".into()));
    }
    let mut out = MzvLin::zero();
    for (l, c) in tail_power_expansion(d) {
        let omega: BigInt = l.iter().map(|&x| factorial(x)).product();
        let idx: Vec<u32> = l.iter().rev().map(|&x| x + 1).collect();
        out.add_term(MzvIndex(idx), Rational::from_integer(c * omega));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{rat, rat_int};

    fn z(v: &[u32]) -> MzvLin {
        MzvLin::zeta(MzvIndex::new(v.to_vec()).unwrap())
    }

    #[test]
    fn general_examples() {
        let got = reduce_general_zeta(&GeneralIndex(vec![4, -1])).unwrap();
        let mut want = z(&[2]).scale(&rat(1, 2));
        want.add_term(MzvIndex(vec![3]), rat(-1, 2));
        assert_eq!(got, want);

        let got = reduce_general_zeta(&GeneralIndex(vec![3, 0])).unwrap();
        let mut want = z(&[2]);
        want.add_term(MzvIndex(vec![3]), rat_int(-1));
        assert_eq!(got, want);

        assert!(matches!(
            reduce_general_zeta(&GeneralIndex(vec![2, 0])),
            Err(Error::Divergent(_))
        ));
    }

    // compare against the truncated defining sum
    #[test]
    fn general_numeric() {
        let cases: [&[i64]; 4] = [&[5, -1, 2], &[3, 0, 1], &[6, -2, 0], &[4, 1, -1]];
        for k in cases {
            let lin = reduce_general_zeta(&GeneralIndex(k.to_vec())).unwrap();
            let n = 400usize;
            let mut brute = 0.0;
            for m1 in 1..=n {
                for m2 in 1..m1 {
                    for m3 in 1..m2 {
                        brute += (m1 as f64).powi(-k[0] as i32)
                            * (m2 as f64).powi(-k[1] as i32)
                            * (m3 as f64).powi(-k[2] as i32);
                    }
                }
            }
            assert!(
                (lin.eval() - brute).abs() < 2e-2,
                "{k:?}: {} vs {brute}",
                lin.eval()
            );
        }
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi_expand(&[1]).unwrap(), z(&[2]));
        assert_eq!(xi_expand(&[0, 1]).unwrap(), z(&[2, 1]));
        assert_eq!(xi_expand(&[2]).unwrap(), z(&[3]).scale(&rat_int(2)));
        assert_eq!(xi_expand(&[]).unwrap(), MzvLin::one());
        assert!(xi_expand(&[1, 0]).is_err());
    }
}
