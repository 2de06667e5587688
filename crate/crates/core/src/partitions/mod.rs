//! Integer partitions: Stanley coordinates, conjugation, hooks, centralizers
//! and irreducible characters of the symmetric group.

mod character;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_core::factorial;

pub use character::character;

/// A partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Stanley coordinates `r × m`: part `m[i]` occurs `r[i]` times, `m` strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyCoords {
    pub r: Vec<u32>,
    pub m: Vec<u32>,
}

/// Arm, leg and hook length of one cell of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
    pub arm: u32,
    pub leg: u32,
}

impl Cell {
    pub fn hook(&self) -> u32 {
        self.arm + self.leg + 1
    }
}

impl Partition {
    /// Validates that parts are positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of distinct part sizes.
    pub fn depth(&self) -> usize {
        self.stanley().m.len()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `r_m(λ)`, the number of parts equal to `m`.
    pub fn multiplicity(&self, m: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == m).count() as u32
    }

    pub fn stanley(&self) -> StanleyCoords {
        let mut r = Vec::new();
        let mut m = Vec::new();
        for &p in &self.parts {
            if m.last() == Some(&p) {
                *r.last_mut().unwrap() += 1;
            } else {
                m.push(p);
                r.push(1);
            }
        }
        StanleyCoords { r, m }
    }

    pub fn from_stanley(c: &StanleyCoords) -> Result<Self> {
        if c.r.len() != c.m.len() {
            return Err(Error::InvalidInput("r and m must have equal length".into()));
        }
        if c.m.windows(2).any(|w| w[0] <= w[1]) || c.m.iter().chain(&c.r).any(|&x| x == 0) {
            return Err(Error::InvalidInput(
                "m must be strictly decreasing and r, m positive".into(),
            ));
        }
        let mut parts = Vec::new();
        for (&r, &m) in c.r.iter().zip(&c.m) {
            parts.extend(std::iter::repeat_n(m, r as usize));
        }
        Ok(Partition { parts })
    }

    pub fn conjugate(&self) -> Self {
        let n = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=n)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All cells with their arm and leg lengths, row by row.
    pub fn arm_leg_cells(&self) -> Vec<Cell> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                out.push(Cell {
                    row: i as u32,
                    col: j,
                    arm: p - j - 1,
                    leg: conj.parts[j as usize] - i as u32 - 1,
                });
            }
        }
        out
    }

    pub fn hooks(&self) -> Vec<u32> {
        self.arm_leg_cells().iter().map(Cell::hook).collect()
    }

    /// `z_λ = Π_m m^{r_m} r_m!`.
    pub fn centralizer_size(&self) -> BigInt {
        let c = self.stanley();
        let mut z = BigInt::one();
        for (&r, &m) in c.r.iter().zip(&c.m) {
            z *= BigInt::from(m).pow(r) * factorial(r);
        }
        z
    }

    /// `|C_λ| = n!/z_λ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.centralizer_size()
    }

    /// All sub-multisets, as pairs `(α, λ∖α)`.
    pub fn sub_multisets(&self) -> Vec<(Partition, Partition)> {
        let c = self.stanley();
        let mut out = Vec::new();
        let mut take = vec![0u32; c.m.len()];
        loop {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (i, &m) in c.m.iter().enumerate() {
                a.extend(std::iter::repeat_n(m, take[i] as usize));
                b.extend(std::iter::repeat_n(m, (c.r[i] - take[i]) as usize));
            }
            out.push((Partition { parts: a }, Partition { parts: b }));
            let mut i = 0;
            loop {
                if i == take.len() {
                    return out;
                }
                if take[i] < c.r[i] {
                    take[i] += 1;
                    break;
                }
                take[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse lexicographic order, starting with `(n)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by size and then as in [`partitions_of`].
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        let ps = partitions_of(4);
        let want: Vec<Partition> = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
            .iter()
            .map(|v| p(v))
            .collect();
        assert_eq!(ps, want);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(20).len(), 627);
    }

    #[test]
    fn conjugation_example() {
        assert_eq!(
            p(&[6, 4, 4, 3, 2, 2, 2, 1]).conjugate(),
            p(&[8, 7, 4, 3, 1, 1])
        );
    }

    #[test]
    fn stanley_example() {
        let s = p(&[6, 4, 4, 3, 2, 2, 2, 1]).stanley();
        assert_eq!(s.r, vec![1, 2, 1, 3, 1]);
        assert_eq!(s.m, vec![6, 4, 3, 2, 1]);
        assert!(Partition::from_stanley(&StanleyCoords {
            r: vec![1],
            m: vec![0]
        })
        .is_err());
    }

    #[test]
    fn hooks_of_21() {
        let mut h = p(&[2, 1]).hooks();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
    }

    #[test]
    fn centralizers() {
        assert_eq!(p(&[2, 2, 1]).centralizer_size(), BigInt::from(8));
        assert_eq!(p(&[2, 2, 1]).class_size(), BigInt::from(15));
        assert_eq!(Partition::empty().centralizer_size(), BigInt::from(1));
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let j = serde_json::to_string(&p(&[3, 1, 1])).unwrap();
        assert_eq!(j, "[3,1,1]");
    }

    #[test]
    fn submultisets_count() {
        assert_eq!(p(&[3, 3, 1]).sub_multisets().len(), 6);
    }
}
