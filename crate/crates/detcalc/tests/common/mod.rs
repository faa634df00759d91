//! Test-side oracles, written without touching the algorithms under test.
#![allow(dead_code)]

use detcalc::exactnum::{int, rat};
use detcalc::{MatrixQ, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_rat(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-9..=9), r.gen_range(1..=5))
}

pub fn rand_matrix(r: &mut ChaCha8Rng, n: usize) -> MatrixQ {
    MatrixQ::from_fn(n, n, |_, _| rand_rat(r))
}

pub fn rand_int_matrix(r: &mut ChaCha8Rng, n: usize) -> MatrixQ {
    MatrixQ::from_fn(n, n, |_, _| int(r.gen_range(-9..=9)))
}

pub fn rand_skew(r: &mut ChaCha8Rng, n: usize) -> MatrixQ {
    let mut m = MatrixQ::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = rand_rat(r);
            m.set(j, i, -v.clone());
            m.set(i, j, v);
        }
    }
    m
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// Sum over all permutations.
pub fn leibniz(m: &MatrixQ) -> Rational {
    let n = m.rows();
    let mut acc = Rational::zero();
    for p in perms(n) {
        let mut t = Rational::one();
        for (i, &j) in p.iter().enumerate() {
            t *= m.get(i, j);
        }
        if parity(&p) {
            acc -= t;
        } else {
            acc += t;
        }
    }
    acc
}

/// Pfaffian as a signed sum over perfect matchings, sign from the
/// permutation `(i1 j1 i2 j2 ...)`.
pub fn matching_pfaffian(m: &MatrixQ) -> Rational {
    fn go(m: &MatrixQ, left: &[usize], word: &mut Vec<usize>, acc: &mut Rational) {
        if left.is_empty() {
            let mut t = Rational::one();
            for k in (0..word.len()).step_by(2) {
                t *= m.get(word[k], word[k + 1]);
            }
            if parity(word) {
                *acc -= t;
            } else {
                *acc += t;
            }
            return;
        }
        let a = left[0];
        for k in 1..left.len() {
            let b = left[k];
            let rest: Vec<usize> = left[1..].iter().copied().filter(|&x| x != b).collect();
            word.push(a);
            word.push(b);
            go(m, &rest, word, acc);
            word.truncate(word.len() - 2);
        }
    }
    let idx: Vec<usize> = (0..m.rows()).collect();
    let mut acc = Rational::zero();
    go(m, &idx, &mut Vec::new(), &mut acc);
    acc
}

/// Rank by plain row reduction.
pub fn rank(m: &MatrixQ) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in 0..cols {
                    let v = &f * &a[r][k];
                    a[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// `B_0..B_{count-1}` from `sum_{k<=m} C(m+1,k) B_k = 0`.
pub fn bernoulli(count: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(count);
    for m in 0..count {
        if m == 0 {
            b.push(Rational::one());
            continue;
        }
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += binom(m as i64 + 1, k as i64) * bk;
        }
        b.push(-s / int(m as i64 + 1));
    }
    b
}

pub fn binom(n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return Rational::zero();
    }
    let mut r = Rational::one();
    for i in 0..k {
        r = r * int(n - i) / int(i + 1);
    }
    r
}

pub fn fact(n: i64) -> Rational {
    (1..=n).fold(Rational::one(), |a, k| a * int(k))
}

/// Generalized binomial `x(x-1)...(x-k+1)/k!`, zero for negative `k`.
pub fn gbinom(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut r = Rational::one();
    for i in 0..k {
        r = r * (x - int(i)) / int(i + 1);
    }
    r
}

pub fn pow(x: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |a, _| a * x)
}
