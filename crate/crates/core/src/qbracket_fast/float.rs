use nalgebra::{DMatrix, DVector};

use crate::exact_core::to_f64;
use crate::word_algebra::{Model, WordSum};

/// `Li_{-e}(x) = Σ_{n>=1} n^e x^n = Σ_{i=0}^{e} i! S(e+1, i+1) (x/(1-x))^{i+1}`.
fn neg_polylog(e: usize, x: f64) -> f64 {
    // Stirling numbers of the second kind, row e+1
    let n = e + 1;
    let mut s = vec![vec![0.0f64; n + 1]; n + 1];
    s[0][0] = 1.0;
    for i in 1..=n {
        for j in 1..=i {
            s[i][j] = j as f64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    let t = x / (1.0 - x);
    let mut acc = 0.0;
    let mut fact = 1.0;
    let mut pow = t;
    for i in 0..=e {
        if i > 0 {
            fact *= i as f64;
        }
        acc += fact * s[n][i + 1] * pow;
        pow *= t;
    }
    acc
}

/// `⟨σ_F(s)⟩_q` as a float for `0 < q < 1`, summing the u-bracket form over `m` until the tail is negligible.
pub fn qbracket_float(model: Model, s: &WordSum, q: f64) -> f64 {
    assert!(q > 0.0 && q < 1.0, "q must lie in (0, 1)");
    let lq = -q.ln();
    let dmax = s
        .iter()
        .flat_map(|(w, _)| w.0.iter().map(|l| l.d + l.k))
        .max()
        .unwrap_or(0) as f64;
    let mut cutoff = 16usize;
    while (cutoff as f64) * lq < 45.0 + dmax * (cutoff as f64).ln() {
        cutoff *= 2;
    }
    let mut total = 0.0;
    for (w, c) in s.iter() {
        let r = w.depth();
        if r == 0 {
            total += to_f64(c);
            continue;
        }
        // below[m] for the tail beyond the current position
        let mut below: Vec<f64> = vec![0.0; cutoff + 1];
        for j in (0..r).rev() {
            let le = w.0[j];
            let coeffs: Vec<f64> = model
                .delta_f_poly(le.k)
                .coeffs()
                .iter()
                .map(to_f64)
                .collect();
            let mut next = vec![0.0; cutoff + 1];
            let mut prefix = 0.0;
            for m in 1..=cutoff {
                if j < r - 1 {
                    prefix += below[m - 1];
                    if prefix == 0.0 {
                        continue;
                    }
                }
                let x = q.powi(m as i32);
                let mut g = 0.0;
                for (e, a) in coeffs.iter().enumerate() {
                    if *a != 0.0 {
                        g += a * neg_polylog(e, x);
                    }
                }
                g *= (m as f64).powi(le.d as i32);
                next[m] = if j == r - 1 { g } else { g * prefix };
            }
            below = next;
        }
        total += to_f64(c) * below.iter().sum::<f64>();
    }
    total
}

/// Whether the rescaled values settle as `q → 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trend {
    Converging,
    /// Successive differences do not shrink with `1 - q`, typical of a logarithmic growth.
    Diverging,
}

#[derive(Clone, Debug)]
pub struct ProbeResult {
    /// `(q, (1-q)^a F(q))` at each sample.
    pub values: Vec<(f64, f64)>,
    /// Extrapolation of the rescaled values to `q = 1`.
    pub estimate: f64,
    pub trend: Trend,
}

/// Correction terms `h log^j h` (`j <= 4`), `h^2`, `h^3`, as value and derivative in `h`.
fn corrections(h: f64) -> [(f64, f64); 7] {
    let l = h.ln();
    let mut out = [(0.0, 0.0); 7];
    for (j, o) in out.iter_mut().enumerate().take(5) {
        let lj = l.powi(j as i32);
        let dl = if j == 0 {
            0.0
        } else {
            j as f64 * l.powi(j as i32 - 1)
        };
        *o = (h * lj, lj + dl);
    }
    out[5] = (h * h, 2.0 * h);
    out[6] = (h * h * h, 3.0 * h * h);
    out
}

/// Estimates `lim_{q→1} (1-q)^a F(q)` from samples of `F`.
///
/// With `h = 1 - q`, the rescaled function `g(h) = h^a F(1-h)` is fitted by
/// `Z + h P(log h) + c h^2 + c' h^3`, `deg P <= 4`, matching both `g` and `g'` at every sample;
/// `g'` is taken by a five-point central difference. With fewer than four samples the
/// highest correction terms are dropped.
pub fn degree_probe(f: &dyn Fn(f64) -> f64, a: u32, samples: &[f64]) -> ProbeResult {
    let g = |h: f64| h.powi(a as i32) * f(1.0 - h);
    let values: Vec<(f64, f64)> = samples.iter().map(|&q| (q, g(1.0 - q))).collect();
    let n = (2 * values.len()).min(8);
    let estimate = if n == 0 {
        f64::NAN
    } else {
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for &(q, v) in &values {
            let h = 1.0 - q;
            let e = 1e-3 * h;
            let dv =
                (g(h - 2.0 * e) - 8.0 * g(h - e) + 8.0 * g(h + e) - g(h + 2.0 * e)) / (12.0 * e);
            let c = corrections(h);
            let mut r0 = vec![1.0];
            let mut r1 = vec![0.0];
            for &(x, dx) in &c[..n - 1] {
                r0.push(x);
                r1.push(dx);
            }
            rows.push(r0);
            rows.push(r1);
            rhs.push(v);
            rhs.push(dv);
        }
        let scale: Vec<f64> = (0..n)
            .map(|j| rows.iter().map(|r| r[j] * r[j]).sum::<f64>().sqrt())
            .collect();
        let m = DMatrix::from_fn(rows.len(), n, |i, j| rows[i][j] / scale[j]);
        let b = DVector::from_vec(rhs);
        match m.svd(true, true).solve(&b, 1e-15) {
            Ok(x) => x[0] / scale[0],
            Err(_) => f64::NAN,
        }
    };
    let mut sorted = values.clone();
    sorted.sort_by(|x, y| x.0.total_cmp(&y.0));
    let trend = if sorted.len() < 4 {
        Trend::Converging
    } else {
        let slope = |i: usize| {
            let (q1, v1) = sorted[i];
            let (q2, v2) = sorted[i + 1];
            (v2 - v1).abs() / ((1.0 - q1) / (1.0 - q2)).ln().abs()
        };
        let first = slope(0);
        let last = slope(sorted.len() - 2);
        let scale = sorted.iter().map(|x| x.1.abs()).fold(0.0, f64::max);
        if last > 0.5 * first && last > 1e-9 * scale {
            Trend::Diverging
        } else {
            Trend::Converging
        }
    };
    ProbeResult {
        values,
        estimate,
        trend,
    }
}
