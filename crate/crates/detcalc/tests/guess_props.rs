mod common;

use common::*;
use detcalc::exactnum::{int, rat};
use detcalc::guess::{fit_rational, linear_factors, rate_guess};
use detcalc::{PolyQ, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

/// `c (i + a)(i + a2) / ((i + b)(i + b2))` with shifts keeping it finite and
/// nonzero at positive integers.
fn law(c: &Rational, a: [i64; 2], b: [i64; 2]) -> impl Fn(i64) -> Rational + '_ {
    move |i| c * int(i + a[0]) * int(i + a[1]) / (int(i + b[0]) * int(i + b[1]))
}

/// Terms `t_1..t_len` of the nested product with the given level.
fn nested(level: usize, init: &[Rational], f: &dyn Fn(i64) -> Rational, len: usize) -> Vec<Rational> {
    if level == 0 {
        return (1..=len as i64).map(f).collect();
    }
    let inner = nested(level - 1, &init[1..], f, len);
    let mut out = Vec::with_capacity(len);
    let mut acc = init[0].clone();
    for k in 0..len {
        out.push(acc.clone());
        acc *= &inner[k];
    }
    out
}

#[test]
fn recovers_random_product_laws() {
    let mut r = rng(21);
    for case in 0..10 {
        let level = case % 3;
        let c = rat(r.gen_range(1..=5), r.gen_range(1..=4));
        let a = [r.gen_range(0..=4), r.gen_range(0..=4)];
        let b = [r.gen_range(1..=5), r.gen_range(1..=5)];
        let init: Vec<Rational> = (0..level).map(|_| rat(r.gen_range(1..=3), 1)).collect();
        let f = law(&c, a, b);
        let all = nested(level, &init, &f, 17);
        let res = rate_guess(&all[..12], 3);
        assert!(res.accepted(), "case {case}");
        for g in &res.guesses {
            for (k, t) in all.iter().enumerate() {
                assert_eq!(&g.eval(k + 1).unwrap(), t, "case {case}, term {}", k + 1);
            }
        }
    }
}

#[test]
fn accepted_guesses_reproduce_inputs() {
    let seqs: [&[i64]; 5] = [
        &[1, 2, 3],
        &[1, 2, 6, 20, 70],
        &[1, 2, 7, 42, 429, 7436, 218348, 10850216],
        &[1, 1, 2, 5, 14, 42, 132],
        &[2, 12, 120, 1680, 30240],
    ];
    // parity split: n odd gives n, n even gives 2^n
    let split: Vec<Rational> = [1, 4, 3, 16, 5, 64, 7, 256].iter().map(|&x| int(x)).collect();
    let res = rate_guess(&split, 3);
    assert!(res.guesses.is_empty() && res.accepted());
    for s in seqs {
        let terms: Vec<Rational> = s.iter().map(|&x| int(x)).collect();
        let res = rate_guess(&terms, 3);
        assert!(res.accepted(), "{s:?}");
        for g in &res.guesses {
            for (k, t) in terms.iter().enumerate() {
                assert_eq!(&g.eval(k + 1).unwrap(), t, "{s:?}");
            }
        }
        let odd: Vec<_> = terms.iter().step_by(2).collect();
        let even: Vec<_> = terms.iter().skip(1).step_by(2).collect();
        for (gs, part) in [(&res.odd, &odd), (&res.even, &even)] {
            for g in gs {
                for (k, t) in part.iter().enumerate() {
                    assert_eq!(&&g.eval(k + 1).unwrap(), t);
                }
            }
        }
    }
}

#[test]
fn rendered_examples() {
    let g = |s: &[i64]| rate_guess(&s.iter().map(|&x| int(x)).collect::<Vec<_>>(), 3);
    assert_eq!(g(&[1, 2, 3]).guesses[0].render(), "n");
    let cb = g(&[1, 2, 6, 20, 70]);
    assert_eq!(cb.guesses[0].render(), "prod_{i1=1}^{n-1} (2*(2*i1 - 1)/i1)");
    for n in 1..=10i64 {
        assert_eq!(cb.guesses[0].eval(n as usize).unwrap(), binom(2 * n - 2, n - 1));
    }
    assert!(!g(&[1, 1, 2, 3, 5, 8]).accepted());
}

#[test]
fn fit_rational_finds_degree_two_law() {
    let f = |x: i64| rat(x * x + 1, x + 3);
    let pts: Vec<_> = (1..=8).map(|x| (int(x), f(x))).collect();
    let got = fit_rational(&pts).unwrap();
    for x in 9..15 {
        assert_eq!(got.eval(&int(x)).unwrap(), f(x));
    }
}

fn lin(r: &Rational) -> PolyQ {
    PolyQ::new(vec![-r.clone(), Rational::one()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_factors_divide_exactly(
        roots in proptest::collection::vec((-9i64..=9, 1i64..=4), 0..5),
        extra in proptest::collection::vec(-5i64..=5, 0..3),
        lead in 1i64..=6,
    ) {
        let mut p = PolyQ::constant(int(lead));
        for &(a, b) in &roots {
            p = p * lin(&rat(a, b));
        }
        // x^2 + 1 + c x for |c| < 2 has no rational roots
        if let Some(&c) = extra.first() {
            let c = c.clamp(-1, 1);
            p = p * PolyQ::from_ints(&[1, c, 1]);
        }
        let (found, cof) = linear_factors(&p).unwrap();
        let mut e = cof.clone();
        for (r, m) in &found {
            prop_assert!(*m >= 1);
            e = e * lin(r).pow(*m as u32);
        }
        prop_assert_eq!(&e, &p);
        let total: usize = found.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(total, roots.len());
        for (r, _) in &found {
            prop_assert!(p.eval(r).is_zero());
            prop_assert!(!cof.eval(r).is_zero());
        }
    }
}
