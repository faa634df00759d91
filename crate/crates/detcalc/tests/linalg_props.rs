mod common;

use common::*;
use detcalc::exactnum::rat;
use detcalc::linalg::{desnanot_sides, det, kernel_basis, lu_decompose, pfaffian, Strategy as Det};
use detcalc::{MatrixQ, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl proptest::strategy::Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(a, b)| rat(a, b))
}

fn square(lo: usize, hi: usize) -> impl proptest::strategy::Strategy<Value = MatrixQ> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(rational(), n * n).prop_map(move |v| MatrixQ::new(n, n, v).unwrap())
    })
}

/// Low-rank matrices show up often enough to exercise the kernel.
fn sparse_square(lo: usize, hi: usize) -> impl proptest::strategy::Strategy<Value = MatrixQ> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(prop_oneof![3 => Just(Rational::zero()), 1 => rational()], n * n)
            .prop_map(move |v| MatrixQ::new(n, n, v).unwrap())
    })
}

fn skew(max_half: usize) -> impl proptest::strategy::Strategy<Value = MatrixQ> {
    (1..=max_half).prop_flat_map(|h| {
        let n = 2 * h;
        proptest::collection::vec(rational(), n * (n - 1) / 2).prop_map(move |v| {
            let mut m = MatrixQ::zeros(n, n);
            let mut it = v.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let x = it.next().unwrap();
                    m.set(j, i, -x.clone());
                    m.set(i, j, x);
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_agree_with_leibniz(m in square(1, 6)) {
        let want = leibniz(&m);
        for s in Det::ALL {
            prop_assert_eq!(det(&m, s).unwrap(), want.clone(), "strategy {}", s.name());
        }
    }

    #[test]
    fn strategies_agree_on_singular_matrices(m in sparse_square(1, 6)) {
        let want = leibniz(&m);
        for s in Det::ALL {
            prop_assert_eq!(det(&m, s).unwrap(), want.clone());
        }
    }

    #[test]
    fn pfaffian_squared_is_det(m in skew(4)) {
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(&pf, &matching_pfaffian(&m));
        prop_assert_eq!(&pf * &pf, det(&m, Det::Bareiss).unwrap());
    }

    #[test]
    fn desnanot(m in square(4, 6)) {
        let (l, r) = desnanot_sides(&m).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn lu_diagonal_product_is_det(m in square(1, 6)) {
        if let Ok((l, u)) = lu_decompose(&m) {
            let n = m.rows();
            prop_assert_eq!(m.mul_checked(&u).unwrap(), l.clone());
            let diag = (0..n).fold(Rational::one(), |a, i| a * l.get(i, i));
            prop_assert_eq!(diag, det(&m, Det::Bareiss).unwrap());
        }
    }

    #[test]
    fn kernel_vectors(m in sparse_square(1, 6)) {
        let basis = kernel_basis(&m).unwrap();
        for v in &basis {
            prop_assert!(v.iter().any(|x| !x.is_zero()));
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(basis.len(), m.cols() - rank(&m));
    }
}

#[test]
fn fifty_skew_matrices() {
    let mut r = rng(6);
    for t in 0..50 {
        let m = rand_skew(&mut r, 2 * (1 + t % 4));
        let pf = pfaffian(&m).unwrap();
        assert_eq!(&pf * &pf, leibniz(&m), "trial {t}");
    }
}

#[test]
fn fifty_desnanot_and_condensation() {
    let mut r = rng(7);
    for t in 0..50 {
        let m = rand_matrix(&mut r, 4 + t % 3);
        let (l, rhs) = desnanot_sides(&m).unwrap();
        assert_eq!(l, rhs, "trial {t}");
        let z = rand_int_matrix(&mut r, 1 + t % 6);
        assert_eq!(det(&z, Det::Condensation).unwrap(), det(&z, Det::Bareiss).unwrap(), "trial {t}");
    }
}

#[test]
fn condensation_survives_interior_zeros() {
    let m = MatrixQ::from_rows(
        [[1, 2, 3, 4], [5, 0, 7, 8], [9, 10, 11, 12], [13, 14, 15, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect(),
    )
    .unwrap();
    assert_eq!(det(&m, Det::Condensation).unwrap(), leibniz(&m));
}
