mod common;

use common::*;
use detcalc::exactnum::special::{divided_differences, special_sequence, SeqKind};
use detcalc::exactnum::{bernoulli_numbers, binomial, int, pochhammer, q_binomial, rat};
use detcalc::guess::rate_guess;
use detcalc::{PolyQ, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pochhammer_inverse(num in -40i64..=40, den in 1i64..=7, k in -8i64..=8) {
        let a = rat(num, den);
        let fwd = pochhammer(&a, k);
        let back = pochhammer(&(&a + int(k)), -k);
        prop_assume!(fwd.is_ok() && back.is_ok());
        prop_assert_eq!(fwd.unwrap() * back.unwrap(), Rational::one());
    }

    #[test]
    fn pochhammer_matches_rising_product(num in -20i64..=20, den in 1i64..=5, k in 0i64..=8) {
        let a = rat(num, den);
        let want = (0..k).fold(Rational::one(), |p, i| p * (&a + int(i)));
        prop_assert_eq!(pochhammer(&a, k).unwrap(), want);
    }

    #[test]
    fn generalized_binomial(num in -30i64..=30, den in 1i64..=4, k in -2i64..=7) {
        let x = rat(num, den);
        prop_assert_eq!(binomial(&x, k), gbinom(&x, k));
    }

    #[test]
    fn divided_differences_vanish_past_degree(
        coeffs in proptest::collection::vec(-9i64..=9, 1..6),
        pts in proptest::collection::btree_set(-15i64..=15, 8..10),
    ) {
        let f = PolyQ::from_ints(&coeffs);
        let d = f.degree().unwrap_or(0);
        let points: Vec<Rational> = pts.into_iter().map(int).collect();
        let dd = divided_differences(&f, &points).unwrap();
        prop_assert_eq!(dd.len(), points.len());
        prop_assert_eq!(&dd[d], &f.leading());
        prop_assert!(dd[d + 1..].iter().all(Zero::is_zero));
    }
}

#[test]
fn q_binomial_at_one_is_binomial() {
    for alpha in 0..=10 {
        for k in 0..=alpha {
            assert_eq!(q_binomial(alpha, k, &Rational::one()).unwrap(), binom(alpha, k), "{alpha} choose {k}");
        }
    }
}

#[test]
fn q_binomial_pascal() {
    for q in [rat(1, 2), rat(-2, 3), int(3)] {
        for alpha in 1..=9i64 {
            for k in 1..alpha {
                let l = q_binomial(alpha, k, &q).unwrap();
                let r = q_binomial(alpha - 1, k - 1, &q).unwrap()
                    + pow(&q, k as u32) * q_binomial(alpha - 1, k, &q).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn bernoulli_against_recurrence() {
    let b = bernoulli_numbers(23);
    assert_eq!(b, bernoulli(23));
    for k in 1..=10 {
        assert!(b[2 * k + 1].is_zero(), "B_{}", 2 * k + 1);
    }
    assert_eq!(b[1], rat(-1, 2));
    assert_eq!(b[2], rat(1, 6));
    assert_eq!(b[12], rat(-691, 2730));
}

#[test]
fn asm_counts_follow_guessed_product() {
    let terms: Vec<Rational> = [1, 2, 7, 42, 429, 7436, 218348, 10850216].iter().map(|&x| int(x)).collect();
    let res = rate_guess(&terms, 3);
    assert!(res.accepted());
    let g = &res.guesses[0];
    for n in 1..=10 {
        assert_eq!(g.eval(n).unwrap(), special_sequence(SeqKind::Asm, &[n]).unwrap(), "n = {n}");
    }
    // prod_{k<n} (3k+1)!/(n+k)!
    for n in 1..=10i64 {
        let want = (0..n).fold(Rational::one(), |p, k| p * fact(3 * k + 1) / fact(n + k));
        assert_eq!(special_sequence(SeqKind::Asm, &[n as usize]).unwrap(), want);
    }
}
