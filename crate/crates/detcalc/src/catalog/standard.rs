//! Vandermonde-type evaluations, Cauchy and Borchardt, and the general
//! product lemmas.

use num_traits::{One, Zero};

use super::util::{at, domain, mat1, nonzero, prod};
use super::{Domain, Elem, IdentityRecord, Params};
use crate::exactnum::{binomial_i, div, int, powi, rational_sqrt, sign};
use crate::linalg::permanent;
use crate::{Error, MatrixQ, Rational, Result};

const X: (&str, Domain) = ("X", Domain::List(Elem::Rat, 0));

fn xs(p: &Params) -> Result<&[Rational]> {
    p.list("X", p.n)
}

/// `prod_{i<j} f(i, j)` over `1..=n`.
fn pairs(n: usize, mut f: impl FnMut(i64, i64) -> Result<Rational>) -> Result<Rational> {
    let n = n as i64;
    prod(1, n, |i| prod(i + 1, n, |j| f(i, j)))
}

/// `prod_{lo <= i <= j <= hi} f(i, j)`.
fn tri(lo: i64, hi: i64, mut f: impl FnMut(i64, i64) -> Result<Rational>) -> Result<Rational> {
    prod(lo, hi, |i| prod(i, hi, |j| f(i, j)))
}

fn vandermonde(p: &Params) -> Result<MatrixQ> {
    let x = xs(p)?;
    mat1(p.n, |i, j| powi(&at(x, i), j - 1))
}

fn vandermonde_rhs(p: &Params) -> Result<Rational> {
    let x = xs(p)?;
    pairs(p.n, |i, j| Ok(at(x, j) - at(x, i)))
}

/// `p_j(x) = sum_{k < j} P[j-1][k] x^k`.
fn vpoly_eval(p: &Params, j: i64, x: &Rational) -> Result<Rational> {
    let t = p.table("P")?;
    let row = &t[(j - 1) as usize];
    let mut acc = Rational::zero();
    for k in (0..j as usize).rev() {
        acc = acc * x + &row[k];
    }
    Ok(acc)
}

fn vandermonde_poly(p: &Params) -> Result<MatrixQ> {
    let x = xs(p)?;
    mat1(p.n, |i, j| vpoly_eval(p, j, &at(x, i)))
}

fn vandermonde_poly_rhs(p: &Params) -> Result<Rational> {
    let t = p.table("P")?;
    let lead = prod(1, p.n as i64, |j| Ok(t[(j - 1) as usize][(j - 1) as usize].clone()))?;
    Ok(lead * vandermonde_rhs(p)?)
}

/// `prod_{i<j} (X_i - X_j)(1 - X_i X_j)`.
fn weyl_pairs(x: &[Rational], n: usize) -> Result<Rational> {
    pairs(n, |i, j| Ok((at(x, i) - at(x, j)) * (Rational::one() - at(x, i) * at(x, j))))
}

fn weyl_c(p: &Params) -> Result<MatrixQ> {
    let x = xs(p)?;
    mat1(p.n, |i, j| Ok(powi(&at(x, i), j)? - powi(&at(x, i), -j)?))
}

fn weyl_c_rhs(p: &Params) -> Result<Rational> {
    let x = xs(p)?;
    let n = p.n as i64;
    let xp = prod(1, n, |i| Ok(at(x, i)))?;
    Ok(powi(&xp, -n)? * weyl_pairs(x, p.n)? * prod(1, n, |i| Ok(at(x, i) * at(x, i) - int(1)))?)
}

/// Square roots of the sampled squares, so half-integer powers stay rational.
fn roots(p: &Params) -> Result<Vec<Rational>> {
    xs(p)?
        .iter()
        .map(|x| rational_sqrt(x).ok_or_else(|| Error::Domain(format!("{x} is not a rational square"))))
        .collect()
}

/// Shared right-hand side of the two half-integer variants.
fn weyl_half_rhs(p: &Params, shift: i64) -> Result<Rational> {
    let x = xs(p)?;
    let t = roots(p)?;
    let n = p.n as i64;
    let tp = prod(1, n, |i| Ok(at(&t, i)))?;
    Ok(powi(&tp, -2 * n + 1)? * weyl_pairs(x, p.n)? * prod(1, n, |i| Ok(at(x, i) + int(shift)))?)
}

fn weyl_b(p: &Params) -> Result<MatrixQ> {
    let t = roots(p)?;
    mat1(p.n, |i, j| Ok(powi(&at(&t, i), 2 * j - 1)? - powi(&at(&t, i), 1 - 2 * j)?))
}

fn weyl_b_rhs(p: &Params) -> Result<Rational> {
    weyl_half_rhs(p, -1)
}

fn weyl_b2(p: &Params) -> Result<MatrixQ> {
    let t = roots(p)?;
    mat1(p.n, |i, j| Ok(powi(&at(&t, i), 2 * j - 1)? + powi(&at(&t, i), 1 - 2 * j)?))
}

fn weyl_b2_rhs(p: &Params) -> Result<Rational> {
    weyl_half_rhs(p, 1)
}

fn weyl_d(p: &Params) -> Result<MatrixQ> {
    let x = xs(p)?;
    mat1(p.n, |i, j| Ok(powi(&at(x, i), j - 1)? + powi(&at(x, i), 1 - j)?))
}

fn weyl_d_rhs(p: &Params) -> Result<Rational> {
    let x = xs(p)?;
    let n = p.n as i64;
    let xp = prod(1, n, |i| Ok(at(x, i)))?;
    Ok(int(2) * powi(&xp, 1 - n)? * weyl_pairs(x, p.n)?)
}

fn cauchy_with(x: &[Rational], y: &[Rational], n: usize) -> Result<(MatrixQ, Rational)> {
    let m = mat1(n, |i, j| div(&int(1), &(at(x, i) + at(y, j))))?;
    let num = pairs(n, |i, j| Ok((at(x, i) - at(x, j)) * (at(y, i) - at(y, j))))?;
    let den = prod(1, n as i64, |i| prod(1, n as i64, |j| Ok(at(x, i) + at(y, j))))?;
    Ok((m, div(&num, &den)?))
}

fn cauchy(p: &Params) -> Result<MatrixQ> {
    Ok(cauchy_with(xs(p)?, p.list("Y", p.n)?, p.n)?.0)
}

fn cauchy_rhs(p: &Params) -> Result<Rational> {
    Ok(cauchy_with(xs(p)?, p.list("Y", p.n)?, p.n)?.1)
}

fn naturals(n: usize) -> Vec<Rational> {
    (1..=n as i64).map(int).collect()
}

fn cauchy_special(p: &Params) -> Result<MatrixQ> {
    let v = naturals(p.n);
    Ok(cauchy_with(&v, &v, p.n)?.0)
}

fn cauchy_special_rhs(p: &Params) -> Result<Rational> {
    let v = naturals(p.n);
    Ok(cauchy_with(&v, &v, p.n)?.1)
}

fn borchardt(p: &Params) -> Result<MatrixQ> {
    let (x, y) = (xs(p)?, p.list("Y", p.n)?);
    mat1(p.n, |i, j| {
        let d = at(x, i) - at(y, j);
        div(&int(1), &(&d * &d))
    })
}

/// Right-hand side with the Vandermonde factor in `Y` written as
/// `prod_{i<j} (Y_j - Y_i)`; the order `(Y_i - Y_j)` is off by
/// `(-1)^binom(n,2)`, as the order-2 case already shows.
fn borchardt_rhs(p: &Params) -> Result<Rational> {
    Ok(sign((p.n * p.n.saturating_sub(1) / 2) as i64) * borchardt_rhs_printed(p)?)
}

fn borchardt_rhs_printed(p: &Params) -> Result<Rational> {
    let (x, y) = (xs(p)?, p.list("Y", p.n)?);
    let n = p.n;
    let num = pairs(n, |i, j| Ok((at(x, i) - at(x, j)) * (at(y, i) - at(y, j))))?;
    let den = prod(1, n as i64, |i| prod(1, n as i64, |j| Ok(at(x, i) - at(y, j))))?;
    let per = permanent(&mat1(n, |i, j| div(&int(1), &(at(x, i) - at(y, j))))?)?;
    Ok(div(&num, &den)? * per)
}

fn lists<'a>(p: &'a Params, names: &[&str]) -> Result<Vec<&'a [Rational]>> {
    names.iter().map(|s| p.list(s, p.n)).collect()
}

fn krat1(p: &Params) -> Result<MatrixQ> {
    let v = lists(p, &["X", "A", "B"])?;
    let (x, a, b) = (v[0], v[1], v[2]);
    let n = p.n as i64;
    mat1(p.n, |i, j| {
        Ok(prod(j + 1, n, |s| Ok(at(x, i) + at(a, s)))? * prod(2, j, |s| Ok(at(x, i) + at(b, s)))?)
    })
}

fn krat1_rhs(p: &Params) -> Result<Rational> {
    let v = lists(p, &["X", "A", "B"])?;
    let (x, a, b) = (v[0], v[1], v[2]);
    Ok(pairs(p.n, |i, j| Ok(at(x, i) - at(x, j)))? * tri(2, p.n as i64, |i, j| Ok(at(b, i) - at(a, j)))?)
}

/// `prod_{i<j} (X_i - X_j)(1 - C/(X_i X_j))`.
fn symplectic_pairs(x: &[Rational], c: &Rational, n: usize) -> Result<Rational> {
    pairs(n, |i, j| Ok((at(x, i) - at(x, j)) * (Rational::one() - div(c, &(at(x, i) * at(x, j)))?)))
}

/// `prod_{i<j} (X_j - X_i)(C - X_i - X_j)`.
fn orthogonal_pairs(x: &[Rational], c: &Rational, n: usize) -> Result<Rational> {
    pairs(n, |i, j| Ok((at(x, j) - at(x, i)) * (c - at(x, i) - at(x, j))))
}

/// `prod_{s=lo}^{hi} (X + A_s)(C/X + A_s)`.
fn sym_run(x: &Rational, c: &Rational, a: &[Rational], lo: i64, hi: i64) -> Result<Rational> {
    let cx = div(c, x)?;
    prod(lo, hi, |s| Ok((x + at(a, s)) * (&cx + at(a, s))))
}

/// `prod_{s=lo}^{hi} (X + A_s)(X - A_s - C)`.
fn orth_run(x: &Rational, c: &Rational, a: &[Rational], lo: i64, hi: i64) -> Result<Rational> {
    prod(lo, hi, |s| Ok((x + at(a, s)) * (x - at(a, s) - c)))
}

fn krat2(p: &Params) -> Result<MatrixQ> {
    let v = lists(p, &["X", "A"])?;
    let c = p.r("C")?;
    let n = p.n as i64;
    mat1(p.n, |i, j| sym_run(&at(v[0], i), c, v[1], j + 1, n))
}

fn krat2_rhs(p: &Params) -> Result<Rational> {
    let v = lists(p, &["X", "A"])?;
    let c = p.r("C")?;
    Ok(prod(2, p.n as i64, |i| powi(&at(v[1], i), i - 1))? * symplectic_pairs(v[0], c, p.n)?)
}

fn krat2a(p: &Params) -> Result<MatrixQ> {
    let v = lists(p, &["X", "A"])?;
    let c = p.r("C")?;
    let n = p.n as i64;
    mat1(p.n, |i, j| orth_run(&at(v[0], i), c, v[1], j + 1, n))
}

fn krat2a_rhs(p: &Params) -> Result<Rational> {
    orthogonal_pairs(xs(p)?, p.r("C")?, p.n)
}

/// `p_{j-1}(X) = prod_{s=1}^{j-1} (X + B_{j,s})(C/X + B_{j,s})`.
fn krat3_p(p: &Params, j: i64, x: &Rational) -> Result<Rational> {
    let b = p.table("B")?;
    let c = p.r("C")?;
    let cx = div(c, x)?;
    let row = &b[(j - 1) as usize];
    prod(1, j - 1, |s| Ok((x + &row[(s - 1) as usize]) * (&cx + &row[(s - 1) as usize])))
}

fn krat3(p: &Params) -> Result<MatrixQ> {
    let v = lists(p, &["X", "A"])?;
    let c = p.r("C")?;
    let n = p.n as i64;
    mat1(p.n, |i, j| Ok(sym_run(&at(v[0], i), c, v[1], j + 1, n)? * krat3_p(p, j, &at(v[0], i))?))
}

fn krat3_rhs(p: &Params) -> Result<Rational> {
    let v = lists(p, &["X", "A"])?;
    let c = p.r("C")?;
    let n = p.n as i64;
    Ok(symplectic_pairs(v[0], c, p.n)?
        * prod(1, n, |i| powi(&at(v[1], i), i - 1))?
        * prod(1, n, |i| krat3_p(p, i, &-at(v[1], i)))?)
}

/// `p_{j-1}(X) = sum_{k <= j-1} P[j-1][k] X^k`.
fn krat3a_p(p: &Params, j: i64, x: &Rational) -> Result<Rational> {
    let row = &p.table("P")?[(j - 1) as usize];
    let mut acc = Rational::zero();
    for k in (0..j as usize).rev() {
        acc = acc * x + &row[k];
    }
    Ok(acc)
}

fn krat3a(p: &Params) -> Result<MatrixQ> {
    let v = lists(p, &["X", "A"])?;
    let n = p.n as i64;
    mat1(p.n, |i, j| {
        let x = at(v[0], i);
        Ok(prod(j + 1, n, |s| Ok(&x + at(v[1], s)))? * krat3a_p(p, j, &x)?)
    })
}

fn krat3a_rhs(p: &Params) -> Result<Rational> {
    let v = lists(p, &["X", "A"])?;
    let n = p.n as i64;
    Ok(pairs(p.n, |i, j| Ok(at(v[0], i) - at(v[0], j)))? * prod(1, n, |i| krat3a_p(p, i, &-at(v[1], i)))?)
}

/// `p_{j-1}(X) = sum_{k <= j-1} P[j-1][k] (X(C-X))^k`, symmetric under `X -> C-X`.
fn krat5_p(p: &Params, j: i64, x: &Rational) -> Result<Rational> {
    let c = p.r("C")?;
    krat3a_p(p, j, &(x * (c - x)))
}

fn krat5(p: &Params) -> Result<MatrixQ> {
    let v = lists(p, &["X", "A"])?;
    let c = p.r("C")?;
    let n = p.n as i64;
    mat1(p.n, |i, j| {
        let x = at(v[0], i);
        Ok(orth_run(&x, c, v[1], j + 1, n)? * krat5_p(p, j, &x)?)
    })
}

fn krat5_rhs(p: &Params) -> Result<Rational> {
    let v = lists(p, &["X", "A"])?;
    let n = p.n as i64;
    Ok(orthogonal_pairs(v[0], p.r("C")?, p.n)? * prod(1, n, |i| krat5_p(p, i, &-at(v[1], i)))?)
}

/// Column `j` of the two-block lemmas: `run(X, upper, j+1..n) run(X, lower, 2..j)`.
fn two_block(
    p: &Params,
    run: fn(&Rational, &Rational, &[Rational], i64, i64) -> Result<Rational>,
) -> Result<MatrixQ> {
    let v = lists(p, &["X", "A", "B", "a", "b"])?;
    let c = p.r("C")?;
    let m = p.i("m")?;
    let n = p.n as i64;
    mat1(p.n, |i, j| {
        let x = at(v[0], i);
        let (up, low) = if j < m { (v[1], v[2]) } else { (v[3], v[4]) };
        Ok(run(&x, c, up, j + 1, n)? * run(&x, c, low, 2, j)?)
    })
}

fn krat6(p: &Params) -> Result<MatrixQ> {
    two_block(p, sym_run)
}

fn krat6_rhs(p: &Params) -> Result<Rational> {
    let v = lists(p, &["X", "A", "B", "a", "b"])?;
    let (x, aa, bb, a, b) = (v[0], v[1], v[2], v[3], v[4]);
    let c = p.r("C")?;
    let m = p.i("m")?;
    let n = p.n as i64;
    let f = |u: Rational, w: Rational| -> Result<Rational> {
        Ok((&u - &w) * (Rational::one() - div(c, &(&u * &w))?))
    };
    let mut acc = symplectic_pairs(x, c, p.n)?;
    acc *= tri(2, m - 1, |i, j| f(at(bb, i), at(aa, j)))?;
    acc *= prod(2, m, |i| prod(m, n, |j| f(at(b, i), at(aa, j))))?;
    acc *= tri(m + 1, n, |i, j| f(at(b, i), at(a, j)))?;
    acc *= prod(2, m, |i| prod(i, n, |s| Ok(at(aa, s))))?;
    acc *= prod(m + 1, n, |i| prod(i, n, |s| Ok(at(a, s))))?;
    acc *= prod(2, m - 1, |i| prod(2, i, |s| Ok(at(bb, s))))?;
    acc *= prod(m, n, |i| prod(2, i, |s| Ok(at(b, s))))?;
    Ok(acc)
}

fn krat7(p: &Params) -> Result<MatrixQ> {
    two_block(p, orth_run)
}

fn krat7_rhs(p: &Params) -> Result<Rational> {
    let v = lists(p, &["X", "A", "B", "a", "b"])?;
    let (x, aa, bb, a, b) = (v[0], v[1], v[2], v[3], v[4]);
    let c = p.r("C")?;
    let m = p.i("m")?;
    let n = p.n as i64;
    let f = |u: Rational, w: Rational| -> Result<Rational> { Ok((&u - &w) * (&u + &w + c)) };
    let mut acc = pairs(p.n, |i, j| Ok((at(x, i) - at(x, j)) * (c - at(x, i) - at(x, j))))?;
    acc *= tri(2, m - 1, |i, j| f(at(bb, i), at(aa, j)))?;
    acc *= prod(2, m, |i| prod(m, n, |j| f(at(b, i), at(aa, j))))?;
    acc *= tri(m + 1, n, |i, j| f(at(b, i), at(a, j)))?;
    Ok(acc)
}

fn macmahon(p: &Params) -> Result<MatrixQ> {
    let (a, b) = (p.i("a")?, p.i("b")?);
    domain(a >= 0 && b >= 0, "a and b must be nonnegative")?;
    mat1(p.n, |i, j| Ok(binomial_i(a + b, a - i + j)))
}

fn macmahon_rhs(p: &Params) -> Result<Rational> {
    let (a, b) = (p.i("a")?, p.i("b")?);
    domain(a >= 0 && b >= 0, "a and b must be nonnegative")?;
    prod(1, p.n as i64, |i| {
        prod(1, a, |j| prod(1, b, |k| Ok(int(i + j + k - 1) / nonzero(int(i + j + k - 2), "i+j+k-2")?)))
    })
}

pub(super) fn records() -> Vec<IdentityRecord> {
    let list = |name| (name, Domain::List(Elem::Rat, 0));
    let nz = |name| (name, Domain::List(Elem::Square, 0));
    let c = ("C", Domain::Scalar(Elem::Rat));
    let r = IdentityRecord::det_rec;
    let with = |mut rec: IdentityRecord, ps: Vec<(&'static str, Domain)>| {
        rec.params = ps;
        rec
    };
    vec![
        with(r("vandermonde", "det(X_i^(j-1)) = prod_{i<j} (X_j - X_i)", vandermonde, vandermonde_rhs), vec![X])
            .tags(&["standard"]),
        with(
            r(
                "vandermonde-poly",
                "det(p_j(X_i)) = a_1...a_n prod_{i<j} (X_j - X_i) for p_j = a_j x^(j-1) + lower terms",
                vandermonde_poly,
                vandermonde_poly_rhs,
            ),
            vec![X, ("P", Domain::Table(Elem::Rat, 0))],
        )
        .tags(&["standard"]),
        with(r("weyl-c", "symplectic Vandermonde det(X_i^j - X_i^-j)", weyl_c, weyl_c_rhs), vec![nz("X")])
            .tags(&["standard"]),
        with(r("weyl-b", "odd orthogonal Vandermonde det(X_i^(j-1/2) - X_i^-(j-1/2))", weyl_b, weyl_b_rhs), vec![nz("X")])
            .tags(&["standard"]),
        with(r("weyl-d", "even orthogonal Vandermonde det(X_i^(j-1) + X_i^-(j-1))", weyl_d, weyl_d_rhs), vec![nz("X")])
            .tags(&["standard"]),
        with(r("weyl-b2", "det(X_i^(j-1/2) + X_i^-(j-1/2)) with factor prod (X_i + 1)", weyl_b2, weyl_b2_rhs), vec![nz("X")])
            .tags(&["standard"]),
        with(r("cauchy", "Cauchy double alternant det(1/(X_i + Y_j))", cauchy, cauchy_rhs), vec![X, list("Y")])
            .tags(&["standard"]),
        r("cauchy-special", "det(1/(i + j))", cauchy_special, cauchy_special_rhs).sizes(1, 6).tags(&["standard"]),
        with(
            r("borchardt", "det(1/(X_i - Y_j)^2) = Cauchy factor times Per(1/(X_i - Y_j))", borchardt, borchardt_rhs),
            vec![X, list("Y")],
        )
        .tags(&["standard"]),
        with(r("krat1", "general product lemma with A and B runs", krat1, krat1_rhs), vec![X, list("A"), list("B")])
            .tags(&["lemma"]),
        with(r("krat2", "product lemma with (C/X_i + A_s)(X_i + A_s) runs", krat2, krat2_rhs), vec![X, list("A"), c])
            .tags(&["lemma"]),
        with(r("krat2a", "product lemma with (X_i - A_s - C)(X_i + A_s) runs", krat2a, krat2a_rhs), vec![X, list("A"), c])
            .tags(&["lemma"]),
        with(
            r("krat3", "product lemma with Laurent polynomials p_j(C/X) = p_j(X)", krat3, krat3_rhs),
            vec![X, list("A"), c, ("B", Domain::Table(Elem::Rat, 0))],
        )
        .tags(&["lemma"]),
        with(
            r("krat3a", "product lemma with polynomials deg p_j <= j", krat3a, krat3a_rhs),
            vec![X, list("A"), ("P", Domain::Table(Elem::Rat, 0))],
        )
        .tags(&["lemma"]),
        with(
            r("krat5", "product lemma with p_j(C - X) = p_j(X), deg p_j <= 2j", krat5, krat5_rhs),
            vec![X, list("A"), c, ("P", Domain::Table(Elem::Rat, 0))],
        )
        .tags(&["lemma"]),
        with(
            r("krat6", "two-block product lemma, symplectic form", krat6, krat6_rhs),
            vec![X, list("A"), list("B"), list("a"), list("b"), c, ("m", Domain::IntUpToN(1, 1))],
        )
        .tags(&["lemma"]),
        with(
            r("krat7", "two-block product lemma, orthogonal form", krat7, krat7_rhs),
            vec![X, list("A"), list("B"), list("a"), list("b"), c, ("m", Domain::IntUpToN(1, 1))],
        )
        .tags(&["lemma"]),
        with(
            r("macmahon", "det(binom(a+b, a-i+j)) = prod (i+j+k-1)/(i+j+k-2)", macmahon, macmahon_rhs),
            vec![("a", Domain::Scalar(Elem::Int(0, 4))), ("b", Domain::Scalar(Elem::Int(0, 4)))],
        )
        .tags(&["lemma", "condensation"]),
    ]
}
