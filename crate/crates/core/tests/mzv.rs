use std::f64::consts::PI;

use partmzv::exact_core::{bernoulli_poly_at_half, factorial_rat, rat_int, to_f64};
use partmzv::mzv::*;
use partmzv::partition_eval::{eval_qk, eval_wordsum};
use partmzv::partitions::partitions_up_to;
use partmzv::word_algebra::{
    exp_to_strict, pointwise_product, quasi_shuffle, Model, Word, WordSum,
};

fn idx(v: &[u32]) -> MzvIndex {
    MzvIndex::new(v.to_vec()).unwrap()
}

fn z(v: &[u32]) -> MzvLin {
    MzvLin::zeta(idx(v))
}

/// `Q_k` written as a combination of seki words.
fn q_as_words(k: u32) -> WordSum {
    let mut s = WordSum::one().scale(&(bernoulli_poly_at_half(k) / factorial_rat(k)));
    for i in 0..=k - 2 {
        for j in 0..=i {
            let mut c = bernoulli_poly_at_half(j) / (factorial_rat(k - i - 1) * factorial_rat(j));
            if (i + j) % 2 == 1 {
                c = -c;
            }
            let n = (i - j + 1) as usize;
            let mut d = vec![0; n];
            d[n - 1] = k - 1 - i;
            s.add_scaled(
                &exp_to_strict(Model::Seki, &Word::new(&vec![1; n], &d).unwrap()),
                &c,
            );
        }
    }
    s
}

#[test]
fn classical_values() {
    let cases: [(&[u32], f64); 6] = [
        (&[2], PI * PI / 6.0),
        (&[4], PI.powi(4) / 90.0),
        (&[2, 1], 1.202_056_903_159_594_2),
        (&[3, 1], PI.powi(4) / 360.0),
        (&[2, 2], PI.powi(4) / 120.0),
        (&[2, 1, 1], PI.powi(4) / 90.0),
    ];
    for (v, want) in cases {
        assert!((mzv_value(&idx(v)) - want).abs() < 1e-12, "{v:?}");
    }
    assert!(MzvIndex::new(vec![1, 2]).is_err());
}

#[test]
fn truncated_sums_agree_with_values() {
    for v in [&[2u32][..], &[3], &[2, 1], &[3, 2], &[2, 2, 1], &[4, 1, 1]] {
        let e = mzv_eval(&idx(v), 20_000);
        let exact = mzv_value(&idx(v));
        assert!(
            (e.value - exact).abs() <= e.error_bound + 1e-9,
            "{v:?}: {} vs {exact}",
            e.value
        );
    }
}

#[test]
fn stuffle_product_of_values() {
    for a in [&[2u32][..], &[3], &[2, 1]] {
        for b in [&[2u32][..], &[3, 1]] {
            let p = &z(a) * &z(b);
            let want = mzv_value(&idx(a)) * mzv_value(&idx(b));
            assert!((p.eval() - want).abs() < 1e-10, "{a:?} {b:?}");
        }
    }
}

#[test]
fn xi_values_multiply_by_shuffling() {
    for d1 in 1..=3u32 {
        for d2 in 1..=3u32 {
            let lhs = xi_expand(&[d1]).unwrap().eval() * xi_expand(&[d2]).unwrap().eval();
            let rhs = xi_expand(&[d1, d2]).unwrap().eval() + xi_expand(&[d2, d1]).unwrap().eval();
            assert!((lhs - rhs).abs() < 1e-10, "({d1},{d2}): {lhs} {rhs}");
        }
        assert_eq!(
            xi_expand(&[d1]).unwrap(),
            z(&[d1 + 1]).scale(&factorial_rat(d1))
        );
    }
    assert!(xi_expand(&[1, 0]).is_err());
}

#[test]
fn sum_formula() {
    for a in 0..=4 {
        for b in 0..=4 - a {
            let r = verify_sum_formula(a, b).unwrap();
            assert!(r.holds(1e-9), "({a},{b})");
        }
    }
}

#[test]
fn product_of_q4_and_q3_gives_a_relation() {
    let (q4, q3) = (q_as_words(4), q_as_words(3));
    for l in partitions_up_to(8) {
        assert_eq!(eval_wordsum(Model::Seki, &q4, &l), eval_qk(4, &l));
        assert_eq!(eval_wordsum(Model::Seki, &q3, &l), eval_qk(3, &l));
    }
    let diff = &pointwise_product(Model::Seki, &q4, &q3) - &quasi_shuffle(Model::Seki, &q4, &q3);
    let mut lim = MzvLin::zero();
    for (x, c) in diff.iter() {
        let (deg, arg) = degree(x);
        assert!(deg <= 6, "{x}");
        if deg == 6 {
            let Limit::Value(v) = zdegree_limit(x).unwrap() else {
                panic!("{x} diverges")
            };
            assert_eq!(arg.len(), 1);
            lim.add_scaled(&v, c);
        }
    }
    let mut want = MzvLin::zero();
    for (v, c) in [
        (&[5u32][..], -10),
        (&[2, 3], 1),
        (&[3, 2], 3),
        (&[4, 1], 16),
        (&[3, 1, 1], -16),
        (&[2, 2, 1], -3),
        (&[2, 1, 2], -1),
        (&[2, 1, 1, 1], 10),
    ] {
        want.add_term(idx(v), rat_int(c));
    }
    assert_eq!(lim, want.scale(&rat_int(-1)));
    let (v, e) = want.iter().fold((0.0, 0.0), |(v, e), (i, c)| {
        let est = mzv_eval(i, 200_000);
        let c = to_f64(c);
        (v + c * est.value, e + c.abs() * est.error_bound)
    });
    assert!(v.abs() < e + 1e-3, "{v}");
    assert!(want.eval().abs() < 1e-10);
}

#[test]
fn weight_limit_vanishes_below_the_weight() {
    // (2;1) has degree 2 < weight 3
    let x = Word::new(&[2], &[1]).unwrap();
    assert_eq!(degree(&x).0, 2);
    assert_eq!(weight_limit(&x).unwrap(), Limit::Value(MzvLin::zero()));
    let y = Word::new(&[3], &[0]).unwrap();
    assert_eq!(weight_limit(&y).unwrap(), Limit::Value(z(&[3])));
}

#[test]
fn json_round_trip() {
    let mut x = z(&[3, 1]).scale(&rat_int(2));
    x.add_term(idx(&[5]), rat_int(-7));
    assert_eq!(MzvLin::from_json(&x.to_json()).unwrap(), x);
}
