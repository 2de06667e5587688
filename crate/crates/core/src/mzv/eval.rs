use super::MzvIndex;

/// Value of a truncated nested sum together with a rough size of the neglected tail.
#[derive(Clone, Copy, Debug)]
pub struct MzvEstimate {
    pub value: f64,
    pub error_bound: f64,
}

/// Tail sums `t[n] = n^{-s_1} Σ_{n>n_2>…} Π_{i>=2} n_i^{-s_i}` for `n = 0..=n_max`.
fn nested_terms(s: &[u32], n_max: usize) -> Vec<f64> {
    let last = s[s.len() - 1] as i32;
    let mut t: Vec<f64> = (0..=n_max)
        .map(|n| if n == 0 { 0.0 } else { (n as f64).powi(-last) })
        .collect();
    for &k in s[..s.len() - 1].iter().rev() {
        let mut next = vec![0.0; n_max + 1];
        let mut acc = 0.0;
        for n in 1..=n_max {
            next[n] = acc * (n as f64).powi(-(k as i32));
            acc += t[n];
        }
        t = next;
    }
    t
}

/// Inner sums `H(m) = Σ_{m>m_2>…>m_r>0} Π_{i>=2} m_i^{-k_i}` for `m = 0..=cutoff+1`.
fn inner_sums(idx: &[u32], cutoff: usize) -> Vec<f64> {
    let n = cutoff + 1;
    if idx.len() == 1 {
        return vec![1.0; n + 1];
    }
    let t = nested_terms(&idx[1..], n);
    let mut h = vec![0.0; n + 1];
    let mut acc = 0.0;
    for m in 1..=n {
        h[m] = acc;
        acc += t[m];
    }
    h
}

/// Truncated nested summation with the outer variable up to `cutoff`, plus a tail correction
/// `Σ_{m>M} H(m) m^{-k_1}` with `H(m) ≈ H(M+1) + c log(m/M)` and `c` read off from `H(M/2)`.
pub fn mzv_eval(idx: &MzvIndex, cutoff: usize) -> MzvEstimate {
    if idx.0.is_empty() {
        return MzvEstimate {
            value: 1.0,
            error_bound: 0.0,
        };
    }
    let k1 = idx.0[0] as f64;
    let h = inner_sums(&idx.0, cutoff);
    let mut partial = 0.0;
    // sum small terms first
    for m in (1..=cutoff).rev() {
        partial += h[m] * (m as f64).powf(-k1);
    }
    let mm = cutoff as f64;
    let tail_pow =
        mm.powf(1.0 - k1) / (k1 - 1.0) - 0.5 * mm.powf(-k1) + k1 / 12.0 * mm.powf(-k1 - 1.0);
    // H keeps growing past M, roughly like c·log m
    let slope = (h[cutoff + 1] - h[cutoff / 2 + 1]) / std::f64::consts::LN_2;
    let growth = slope * mm.powf(1.0 - k1) / ((k1 - 1.0) * (k1 - 1.0));
    let tail = h[cutoff + 1] * tail_pow + growth;
    MzvEstimate {
        value: partial + tail,
        error_bound: growth.abs() + 1e-15 * partial.abs(),
    }
}

/// `Li_{s_1,…,s_k}(1/2) = Σ_{n_1>…>n_k>0} 2^{-n_1} Π n_i^{-s_i}`; terms decay geometrically.
fn li_half(s: &[u32]) -> f64 {
    if s.is_empty() {
        return 1.0;
    }
    let t = nested_terms(s, 200);
    let mut total = 0.0;
    let mut z = 1.0;
    for v in t.iter().skip(1) {
        z *= 0.5;
        total += z * v;
    }
    total
}

/// Converts an index to its word in `x = dt/t`, `y = dt/(1-t)`: `x^{s_1-1} y … x^{s_k-1} y`.
fn to_word(s: &[u32]) -> Vec<bool> {
    let mut w = Vec::new();
    for &k in s {
        w.extend(std::iter::repeat_n(false, k as usize - 1));
        w.push(true);
    }
    w
}

/// Inverse of [`to_word`]; the word must be empty or end in `y`.
fn from_word(w: &[bool]) -> Vec<u32> {
    let mut s = Vec::new();
    let mut run = 1;
    for &c in w {
        if c {
            s.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    s
}

/// High-accuracy value of an admissible MZV.
///
/// The iterated integral over `[0,1]` is split at `1/2`; the piece over `[1/2,1]` turns into an integral
/// over `[0,1/2]` under `t ↦ 1-t` (swapping the two forms and reversing their order), so only multiple polylogarithms at `1/2` are needed.
pub fn mzv_value(idx: &MzvIndex) -> f64 {
    if idx.0.is_empty() {
        return 1.0;
    }
    let w = to_word(&idx.0);
    let n = w.len();
    let mut total = 0.0;
    for j in 0..=n {
        let head: Vec<bool> = w[..j].iter().rev().map(|&c| !c).collect();
        let a = li_half(&from_word(&head));
        let b = li_half(&from_word(&w[j..]));
        total += a * b;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn idx(v: &[u32]) -> MzvIndex {
        MzvIndex::new(v.to_vec()).unwrap()
    }

    const ZETA3: f64 = 1.202_056_903_159_594_2;

    #[test]
    fn convolution_values() {
        assert!((mzv_value(&idx(&[2])) - PI * PI / 6.0).abs() < 1e-14);
        assert!((mzv_value(&idx(&[2, 1])) - ZETA3).abs() < 1e-14);
        assert!((mzv_value(&idx(&[4])) - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((mzv_value(&idx(&[3, 1])) - PI.powi(4) / 360.0).abs() < 1e-14);
        assert!((mzv_value(&idx(&[2, 1, 1])) - PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn nested_sums() {
        let e = mzv_eval(&idx(&[2]), 100_000);
        assert!((e.value - PI * PI / 6.0).abs() < 1e-6);
        let e = mzv_eval(&idx(&[2, 1]), 100_000);
        assert!((e.value - ZETA3).abs() < 1e-5, "{}", e.value);
        let e = mzv_eval(&idx(&[4]), 100_000);
        assert!((e.value - PI.powi(4) / 90.0).abs() < 1e-8);
    }

    // both evaluation routes on a spread of indices
    #[test]
    fn routes_agree() {
        for v in [&[3u32, 2][..], &[2, 2], &[3, 1, 1], &[5], &[2, 3, 1]] {
            let i = idx(v);
            let a = mzv_value(&i);
            let b = mzv_eval(&i, 200_000);
            assert!((a - b.value).abs() < 1e-5, "{v:?}: {a} vs {}", b.value);
        }
    }
}
