use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use partmzv::exact_core::factorial;
use partmzv::partitions::{character, partitions_of, partitions_up_to, Partition};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn counts() {
    let want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (n, &c) in want.iter().enumerate() {
        assert_eq!(partitions_of(n as u32).len(), c);
    }
    assert_eq!(partitions_up_to(12).len(), want.iter().sum::<usize>());
}

#[test]
fn column_orthogonality() {
    for n in 1..=8 {
        let ps = partitions_of(n);
        for mu in &ps {
            for nu in &ps {
                let s: i64 = ps
                    .iter()
                    .map(|l| character(l, mu).unwrap() * character(l, nu).unwrap())
                    .sum();
                let want = if mu == nu {
                    mu.centralizer_size()
                } else {
                    BigInt::zero()
                };
                assert_eq!(BigInt::from(s), want, "{mu} {nu}");
            }
        }
    }
}

#[test]
fn row_orthogonality() {
    for n in 1..=8 {
        let ps = partitions_of(n);
        for l in &ps {
            for r in &ps {
                let s: BigInt = ps
                    .iter()
                    .map(|mu| {
                        mu.class_size() * character(l, mu).unwrap() * character(r, mu).unwrap()
                    })
                    .sum();
                let want = if l == r { factorial(n) } else { BigInt::zero() };
                assert_eq!(s, want);
            }
        }
    }
}

#[test]
fn character_values() {
    assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
    assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
    assert_eq!(character(&p(&[3, 1]), &p(&[2, 2])).unwrap(), -1);
    assert!(character(&p(&[2]), &p(&[1])).is_err());
}

#[test]
fn stanley_round_trip() {
    for l in partitions_up_to(12) {
        assert_eq!(Partition::from_stanley(&l.stanley()).unwrap(), l);
    }
}

#[test]
fn conjugation_swaps_arms_and_legs() {
    for l in partitions_up_to(10) {
        let c = l.conjugate();
        assert_eq!(c.conjugate(), l);
        let mut a: Vec<(u32, u32)> = l.arm_leg_cells().iter().map(|x| (x.arm, x.leg)).collect();
        let mut b: Vec<(u32, u32)> = c.arm_leg_cells().iter().map(|x| (x.leg, x.arm)).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{l}");
    }
}

#[test]
fn hook_length_formula() {
    for l in partitions_up_to(9) {
        let prod: BigInt = l.hooks().iter().map(|&h| BigInt::from(h)).product();
        let dim = character(&l, &Partition::new(vec![1; l.size() as usize]).unwrap()).unwrap();
        assert_eq!(factorial(l.size()) / prod, BigInt::from(dim));
    }
}

#[test]
fn invalid_partitions_are_rejected() {
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
    assert_eq!(Partition::from_unsorted(vec![1, 3, 2]), p(&[3, 2, 1]));
}

proptest! {
    #[test]
    fn conjugate_preserves_size(parts in prop::collection::vec(1u32..15, 0..12)) {
        let l = Partition::from_unsorted(parts);
        let c = l.conjugate();
        prop_assert_eq!(c.size(), l.size());
        prop_assert_eq!(c.len() as u32, l.parts().first().copied().unwrap_or(0));
        prop_assert_eq!(c.conjugate(), l);
    }

    #[test]
    fn stanley_coordinates_round_trip(parts in prop::collection::vec(1u32..20, 0..15)) {
        let l = Partition::from_unsorted(parts);
        let s = l.stanley();
        prop_assert_eq!(Partition::from_stanley(&s).unwrap(), l);
    }

    #[test]
    fn serde_round_trip(parts in prop::collection::vec(1u32..20, 0..10)) {
        let l = Partition::from_unsorted(parts);
        let j = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&j).unwrap(), l);
    }
}
