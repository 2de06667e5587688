use num_traits::{One, Zero};

use partmzv::exact_core::{rat, rat_int, Rational};
use partmzv::partition_eval::*;
use partmzv::partitions::{partitions_of, partitions_up_to, Partition};
use partmzv::word_algebra::{basis_words, pointwise_product, quasi_shuffle, Model, Word, WordSum};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn small_words() -> Vec<Word> {
    (1..=3).flat_map(basis_words).collect()
}

#[test]
fn pointwise_product_multiplies_values() {
    let parts = partitions_up_to(8);
    let ws = small_words();
    for m in Model::ALL {
        for u in &ws {
            for v in &ws {
                let (a, b) = (WordSum::from_word(u.clone()), WordSum::from_word(v.clone()));
                let prod = pointwise_product(m, &a, &b);
                for l in &parts {
                    assert_eq!(
                        eval_wordsum(m, &prod, l),
                        eval_word(m, u, l) * eval_word(m, v, l),
                        "{m} {u} {v} {l}"
                    );
                }
            }
        }
    }
}

#[test]
fn bracket_coefficients_are_moebius_convolutions() {
    let f = PartitionFunction::word(
        Model::Seki,
        WordSum::from_word(Word::new(&[2, 1], &[1, 0]).unwrap()),
    );
    let s = qbracket_enum(&f, 10);
    for n in 0..=10u32 {
        let mut by_u = Rational::zero();
        for l in partitions_of(n) {
            let a = ubracket_coeff(&f, &l);
            assert_eq!(a, convolution(&f, &PartitionFunction::Moebius, &l), "{l}");
            by_u += a;
        }
        assert_eq!(s.coeff(n as usize), &by_u, "n = {n}");
    }
}

#[test]
fn moebius_inverts_the_constant_function() {
    let one = PartitionFunction::custom("one", |_| Rational::one());
    for l in partitions_up_to(10) {
        let want = if l.size() == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
        assert_eq!(
            convolution(&PartitionFunction::Moebius, &one, &l),
            want,
            "{l}"
        );
    }
}

#[test]
fn enumerated_bracket_is_multiplicative_on_quasi_shuffles() {
    let ws: Vec<Word> = (1..=2).flat_map(basis_words).collect();
    let order = 10;
    for m in Model::ALL {
        for u in &ws {
            for v in &ws {
                let (a, b) = (WordSum::from_word(u.clone()), WordSum::from_word(v.clone()));
                let lhs =
                    qbracket_enum(&PartitionFunction::word(m, quasi_shuffle(m, &a, &b)), order);
                let rhs = qbracket_enum(&PartitionFunction::word(m, a), order)
                    .multiply(&qbracket_enum(&PartitionFunction::word(m, b), order))
                    .unwrap();
                assert_eq!(lhs, rhs, "{m} {u} {v}");
            }
        }
    }
}

#[test]
fn low_shifted_symmetric_functions() {
    for l in partitions_up_to(10) {
        assert!(eval_qk(1, &l).is_zero());
        assert_eq!(eval_qk(2, &l), rat_int(l.size() as i64) - rat(1, 24));
        // Q_3 is the content sum
        let mut content = 0i64;
        for (i, &row) in l.parts().iter().enumerate() {
            for j in 0..row as i64 {
                content += j - i as i64;
            }
        }
        assert_eq!(eval_qk(3, &l), rat_int(content), "{l}");
    }
}

#[test]
fn arms_legs_and_hooks() {
    for l in partitions_up_to(9) {
        let c = l.conjugate();
        for a in 0..=3 {
            for b in 0..=3 {
                assert_eq!(eval_armleg(a, b, &c), eval_armleg(b, a, &l));
                let f = PartitionFunction::ArmLeg(a, b);
                assert_eq!(omega_conj(&f, &l), eval_armleg(b, a, &l));
            }
        }
        assert_eq!(eval_hook_moment(2, &l), rat_int(l.size() as i64));
        let hooks: u32 = l.hooks().iter().sum();
        assert_eq!(eval_hook_moment(3, &l), rat_int(hooks as i64));
        // Σ (a + 1/2) + (l + 1/2) over cells is the sum of hooks
        assert_eq!(
            eval_armleg(1, 0, &l) + eval_armleg(0, 1, &l),
            rat_int(hooks as i64),
            "{l}"
        );
    }
    assert_eq!(eval_armleg(0, 0, &p(&[3, 1])), rat_int(4));
}

#[test]
fn moebius_values() {
    assert_eq!(moebius(&Partition::empty()), rat_int(1));
    assert_eq!(moebius(&p(&[3])), rat_int(-1));
    assert_eq!(moebius(&p(&[3, 1])), rat_int(1));
    assert_eq!(moebius(&p(&[2, 2])), rat_int(0));
    assert_eq!(moebius(&p(&[3, 2, 1])), rat_int(-1));
}

#[test]
fn size_bracket_is_the_divisor_sum_series() {
    let f = PartitionFunction::word(
        Model::Seki,
        WordSum::from_word(Word::new(&[1], &[1]).unwrap()),
    );
    let s = qbracket_enum(&f, 20);
    assert!(s.coeff(0).is_zero());
    for n in 1..=20usize {
        let sigma: usize = (1..=n).filter(|d| n % d == 0).sum();
        assert_eq!(s.coeff(n), &rat_int(sigma as i64));
    }
}

#[test]
fn function_specs_build() {
    let j = r#"{"kind":"armleg","a":1,"b":0}"#;
    let f: FunctionSpec = serde_json::from_str(j).unwrap();
    assert_eq!(f.build().unwrap().eval(&p(&[2])), rat_int(2));
    let j = r#"{"kind":"expword","model":"seki","word":[[1,0],[1,0]]}"#;
    let f: FunctionSpec = serde_json::from_str(j).unwrap();
    assert!(matches!(
        f.build().unwrap(),
        PartitionFunction::ExpWord(Model::Seki, _)
    ));
    let j = r#"{"kind":"expword","model":"seki","word":[[0,0]]}"#;
    let f: FunctionSpec = serde_json::from_str(j).unwrap();
    assert!(f.build().is_err());
}

#[test]
fn closed_form_brackets() {
    let order = 20;
    let mut prod = partmzv::QSeries::one(order);
    for m in 1..=order {
        let mut f = partmzv::QSeries::one(order);
        *f.coeff_mut(m) = -Rational::one();
        prod = prod.multiply(&f).unwrap().multiply(&f).unwrap();
    }
    assert_eq!(qbracket_enum(&PartitionFunction::Moebius, order), prod);

    // even parts minus odd parts
    let f = PartitionFunction::custom("parity", |l| {
        rat_int(
            l.parts()
                .iter()
                .map(|&p| if p % 2 == 0 { 1 } else { -1 })
                .sum(),
        )
    });
    let s = qbracket_enum(&f, order);
    for n in 1..=order {
        let want: i64 = (1..=n)
            .filter(|m| n % m == 0)
            .map(|m| if m % 2 == 0 { 1 } else { -1 })
            .sum();
        assert_eq!(s.coeff(n), &rat_int(want), "n = {n}");
    }
    // the bracket is Σ_m (-1)^m q^m/(1-q^m); its degree-one limit is Σ (-1)^m/m = -log 2
    let g = |q: f64| {
        (1..200_000)
            .map(|m| if m % 2 == 0 { 1.0 } else { -1.0 } * q.powi(m) / (1.0 - q.powi(m)))
            .sum::<f64>()
    };
    let p = partmzv::qbracket_fast::degree_probe(&g, 1, &[0.9, 0.95, 0.99, 0.995]);
    assert!(
        (p.estimate + std::f64::consts::LN_2).abs() < 1e-3,
        "{}",
        p.estimate
    );
}
