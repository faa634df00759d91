//! Hankel determinants of classical sequences, Strehl-Wilf corollaries, the
//! circulant and Gordon's Pfaffian reductions.

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;

use super::util::{mat0, mat1, prod};
use super::{Domain, Elem, IdentityRecord, Outcome, Params};
use crate::exactnum::{
    bernoulli_numbers, euler_numbers, factorial, int, powi, rat, sign, special_poly, stirling1, stirling2, PolyKind,
};
use crate::linalg::{det, pfaffian, resultant, Strategy};
use crate::{Error, MatrixQ, PolyQ, Rational, Result};

fn variant(p: &Params, lo: i64, hi: i64) -> Result<i64> {
    let v = p.i("v")?;
    if (lo..=hi).contains(&v) {
        Ok(v)
    } else {
        Err(Error::Domain(format!("variant {v} outside {lo}..={hi}")))
    }
}

fn hankel_euler(p: &Params) -> Result<MatrixQ> {
    let shift = variant(p, 0, 1)?;
    let e = euler_numbers(4 * p.n + 2);
    mat0(p.n, |i, j| Ok(e[(2 * i + 2 * j + 2 * shift) as usize].clone()))
}

fn hankel_euler_rhs(p: &Params) -> Result<Rational> {
    let shift = variant(p, 0, 1)?;
    prod(0, p.n as i64 - 1, |i| {
        let f = factorial(2 * i + shift)?;
        Ok(&f * &f)
    })
}

fn poly_hankel(p: &Params, kind: PolyKind) -> Result<MatrixQ> {
    let x = p.r("x")?;
    let vals: Vec<Rational> = (0..2 * p.n).map(|m| special_poly(kind, m).eval(x)).collect();
    mat0(p.n, |i, j| Ok(vals[(i + j) as usize].clone()))
}

fn factorial_prod(n: i64) -> Result<Rational> {
    prod(0, n - 1, factorial)
}

fn hankel_bell(p: &Params) -> Result<MatrixQ> {
    poly_hankel(p, PolyKind::Bell)
}

fn hankel_bell_rhs(p: &Params) -> Result<Rational> {
    let n = p.n as i64;
    Ok(powi(p.r("x")?, n * (n - 1) / 2)? * factorial_prod(n)?)
}

fn hankel_hermite(p: &Params) -> Result<MatrixQ> {
    poly_hankel(p, PolyKind::Hermite)
}

fn hankel_hermite_rhs(p: &Params) -> Result<Rational> {
    let n = p.n as i64;
    Ok(sign(n * (n - 1) / 2) * factorial_prod(n)?)
}

/// Variants 5..=9 select `B_{i+j}`, `B_{i+j+1}`, `B_{i+j+2}`, `B_{2i+2j+2}`, `B_{2i+2j+4}`.
fn hankel_bernoulli(p: &Params) -> Result<MatrixQ> {
    let v = variant(p, 5, 9)?;
    let b = bernoulli_numbers(4 * p.n + 6);
    mat0(p.n, |i, j| {
        let k = match v {
            5 => i + j,
            6 => i + j + 1,
            7 => i + j + 2,
            8 => 2 * i + 2 * j + 2,
            _ => 2 * i + 2 * j + 4,
        };
        Ok(b[k as usize].clone())
    })
}

fn hankel_bernoulli_rhs(p: &Params) -> Result<Rational> {
    let v = variant(p, 5, 9)?;
    let n = p.n as i64;
    let f = factorial;
    let c2 = |k: i64| k * (k - 1) / 2;
    match v {
        5 => Ok(sign(c2(n)) * prod(1, n - 1, |i| Ok(powi(&f(i)?, 6)? / (f(2 * i)? * f(2 * i + 1)?)))?),
        6 => Ok(sign(c2(n + 1))
            * rat(1, 2)
            * prod(1, n - 1, |i| Ok(powi(&f(i)?, 3)? * powi(&f(i + 1)?, 3)? / (f(2 * i + 1)? * f(2 * i + 2)?)))?),
        7 => Ok(sign(c2(n))
            * rat(1, 6)
            * prod(1, n - 1, |i| Ok(f(i)? * powi(&f(i + 1)?, 4)? * f(i + 2)? / (f(2 * i + 2)? * f(2 * i + 3)?)))?),
        8 => prod(0, n - 1, |i| {
            Ok(f(2 * i)? * powi(&f(2 * i + 1)?, 4)? * f(2 * i + 2)? / (f(4 * i + 2)? * f(4 * i + 3)?))
        }),
        _ => Ok(sign(n)
            * prod(1, n, |i| Ok(f(2 * i - 1)? * powi(&f(2 * i)?, 4)? * f(2 * i + 1)? / (f(4 * i)? * f(4 * i + 1)?)))?),
    }
}

/// Order `n` means indices `0 <= i, j <= n-1`, so the exponent is `binom(n, 2)`.
fn stwi_stirling(p: &Params) -> Result<MatrixQ> {
    let kind = variant(p, 1, 2)?;
    let x = p.i("x")?;
    mat0(p.n, |i, j| {
        let (top, k) = ((x * i + j) as usize, (x * i) as usize);
        let s = if kind == 2 { stirling2(top, k) } else { stirling1(top, k) };
        Ok(factorial(x * i)? / factorial(x * i + j)? * s)
    })
}

fn stwi_stirling_rhs(p: &Params) -> Result<Rational> {
    let kind = variant(p, 1, 2)?;
    let n = p.n as i64;
    let base = rat(p.i("x")?, 2) * if kind == 2 { int(1) } else { int(-1) };
    powi(&base, n * (n - 1) / 2)
}

/// Number of ordered ways to write `j` as a sum of `i` values `t^power`, `t >= 0`.
fn representations(i: usize, j: usize, power: u32) -> Rational {
    let mut ways = vec![Rational::zero(); j + 1];
    ways[0] = Rational::one();
    let parts: Vec<usize> = (0..).map(|t: usize| t.pow(power)).take_while(|&v| v <= j).collect();
    for _ in 0..i {
        let mut next = vec![Rational::zero(); j + 1];
        for (s, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for &v in &parts {
                if s + v <= j {
                    next[s + v] += w;
                }
            }
        }
        ways = next;
    }
    ways[j].clone()
}

fn stwi_squares(p: &Params) -> Result<MatrixQ> {
    let power = variant(p, 2, 3)? as u32;
    mat0(p.n, |i, j| Ok(representations(i as usize, j as usize, power)))
}

fn one(_: &Params) -> Result<Rational> {
    Ok(Rational::one())
}

fn circulant(p: &Params) -> Result<MatrixQ> {
    let a = p.list("a", p.n)?;
    let n = p.n as i64;
    mat0(p.n, |i, j| Ok(a[(j - i).rem_euclid(n) as usize].clone()))
}

/// `prod_i a(omega^i) = Res(x^n - 1, a(x))`.
fn circulant_rhs(p: &Params) -> Result<Rational> {
    let a = PolyQ::new(p.list("a", p.n)?.to_vec());
    if a.degree().is_none() {
        return Ok(Rational::zero());
    }
    let mut c = vec![Rational::zero(); p.n + 1];
    c[0] = int(-1);
    c[p.n] = int(1);
    resultant(&PolyQ::new(c), &a)
}

/// Symmetric sequence `g_{-i} = g_i` for `|i| <= 2n + 1`.
fn gs(p: &Params) -> Result<impl Fn(i64) -> Rational + '_> {
    let g = p.list("g", 2 * p.n + 2)?;
    Ok(move |i: i64| g[i.unsigned_abs() as usize].clone())
}

fn window_sum(g: &impl Fn(i64) -> Rational, d: i64) -> Rational {
    (-d + 1..=d).map(g).fold(Rational::zero(), |acc, v| acc + v)
}

fn gordon_even(p: &Params, _: &mut ChaCha8Rng) -> Result<Outcome> {
    let g = gs(p)?;
    let n = p.n;
    let a = MatrixQ::from_fn(2 * n, 2 * n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => window_sum(&g, (j - i) as i64),
        std::cmp::Ordering::Greater => -window_sum(&g, (i - j) as i64),
        std::cmp::Ordering::Equal => Rational::zero(),
    });
    let lhs = pfaffian(&a)?;
    let rhs = det(&mat1(n, |i, j| Ok(g(i - j) + g(i + j - 1)))?, Strategy::Bareiss)?;
    Ok(Outcome::compare(&lhs, &rhs))
}

fn gordon_odd(p: &Params, _: &mut ChaCha8Rng) -> Result<Outcome> {
    let g = gs(p)?;
    let n = p.n;
    let x = p.r("X")?;
    let size = 2 * n + 2;
    let upper = |i: usize, j: usize| if j + 1 == size { x.clone() } else { window_sum(&g, (j - i) as i64) };
    let a = MatrixQ::from_fn(size, size, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => upper(i, j),
        std::cmp::Ordering::Greater => -upper(j, i),
        std::cmp::Ordering::Equal => Rational::zero(),
    });
    let lhs = pfaffian(&a)?;
    let rhs = x * det(&mat1(n, |i, j| Ok(g(i - j) - g(i + j)))?, Strategy::Bareiss)?;
    Ok(Outcome::compare(&lhs, &rhs))
}

pub(super) fn records() -> Vec<IdentityRecord> {
    let r = IdentityRecord::det_rec;
    let v = |lo, hi| ("v", Domain::Scalar(Elem::Int(lo, hi)));
    let x = ("x", Domain::Scalar(Elem::Rat));
    let tag = |mut rec: IdentityRecord, ps: &[(&'static str, Domain)]| {
        rec.params = ps.to_vec();
        rec.tags = &["hankel"];
        rec
    };
    let g = ("g", Domain::Doubled(Elem::Rat));
    let mut gordon = vec![
        IdentityRecord::custom("gordon-even", "Pf(sum_{|alpha| window} g_alpha) = det(g_{i-j} + g_{i+j-1})", gordon_even)
            .param(g.0, g.1)
            .sizes(1, 4),
        IdentityRecord::custom("gordon-odd", "bordered Pfaffian = X det(g_{i-j} - g_{i+j})", gordon_odd)
            .param(g.0, g.1)
            .param("X", Domain::Scalar(Elem::Rat))
            .sizes(1, 4),
    ];
    for rec in &mut gordon {
        rec.tags = &["pfaffian"];
    }
    let mut v_out = vec![
        tag(r("hankel-euler", "det(E_{2i+2j+2v}) = prod (2i+v)!^2, v in {0, 1}", hankel_euler, hankel_euler_rhs), &[v(0, 1)]),
        tag(r("hankel-bell", "det(Bell_{i+j}(x)) = x^{n(n-1)/2} prod i!", hankel_bell, hankel_bell_rhs), &[x]),
        tag(r("hankel-hermite", "det(H_{i+j}(x)) = (-1)^{n(n-1)/2} prod i!", hankel_hermite, hankel_hermite_rhs), &[x]),
        tag(
            r("hankel-bernoulli", "five Bernoulli Hankel determinants selected by v in 5..=9", hankel_bernoulli, hankel_bernoulli_rhs),
            &[v(5, 9)],
        ),
        tag(
            r("stwi-stirling", "det((xi)!/(xi+j)! S(xi+j, xi)) = (x/2)^{binom(n,2)}; v = 1 uses s(m,k)", stwi_stirling, stwi_stirling_rhs),
            &[v(1, 2), ("x", Domain::Scalar(Elem::Int(0, 3)))],
        ),
        tag(r("stwi-squares", "det(ordered representations of j by i squares, v = 3 cubes) = 1", stwi_squares, one), &[v(2, 3)]),
        tag(r("circulant", "circulant determinant = Res(x^n - 1, a(x))", circulant, circulant_rhs), &[(
            "a",
            Domain::List(Elem::Rat, 0),
        )])
        .sizes(1, 6),
    ];
    v_out.extend(gordon);
    v_out
}
