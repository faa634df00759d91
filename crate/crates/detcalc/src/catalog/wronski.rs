//! Confluent alternants, discrete Wronskians and their q-analogues.

use num_traits::{One, Zero};

use super::util::{at, domain, mat1, prod};
use super::{Domain, Elem, IdentityRecord, Params};
use crate::exactnum::{binomial_i, div, factorial, int, powi, q_factorial, q_int};
use crate::exactnum::divided_differences;
use crate::linalg::{det, Strategy};
use crate::{MatrixQ, PolyQ, Rational, Result};

/// For column `j` (0-based) the block index and the offset inside the block.
fn block_of(parts: &[usize], j: usize) -> (usize, usize) {
    let mut start = 0;
    for (k, &m) in parts.iter().enumerate() {
        if j < start + m {
            return (k, j - start);
        }
        start += m;
    }
    unreachable!("column outside the composition")
}

/// `n x n` matrix whose column `j` in block `k` is `entry(row, offset, X_k)`.
fn blocks(p: &Params, entry: impl Fn(i64, i64, &Rational) -> Result<Rational>) -> Result<MatrixQ> {
    let parts = p.composition("m")?;
    let x = p.list("X", parts.len())?;
    MatrixQ::try_from_fn(p.n, p.n, |i, j| {
        let (k, c) = block_of(&parts, j);
        entry(i as i64, c as i64, &x[k])
    })
}

fn falling(i: i64, c: i64) -> Rational {
    prod(0, c - 1, |t| Ok(int(i - t))).expect("integer product")
}

fn flha1(p: &Params) -> Result<MatrixQ> {
    blocks(p, |i, c, x| if c > i { Ok(Rational::zero()) } else { Ok(falling(i, c) * powi(x, i - c)?) })
}

fn flha2(p: &Params) -> Result<MatrixQ> {
    blocks(p, |i, c, x| Ok(powi(&int(i), c)? * powi(x, i)?))
}

/// `prod_{k<l} (X_l - X_k)^{m_k m_l}`.
fn confluent_pairs(x: &[Rational], parts: &[usize]) -> Result<Rational> {
    let l = parts.len() as i64;
    prod(1, l, |a| {
        prod(a + 1, l, |b| powi(&(at(x, b) - at(x, a)), (parts[a as usize - 1] * parts[b as usize - 1]) as i64))
    })
}

fn flha1_rhs(p: &Params) -> Result<Rational> {
    let parts = p.composition("m")?;
    let x = p.list("X", parts.len())?;
    let facs = prod(1, parts.len() as i64, |k| prod(1, parts[k as usize - 1] as i64 - 1, factorial))?;
    Ok(facs * confluent_pairs(x, &parts)?)
}

fn flha2_rhs(p: &Params) -> Result<Rational> {
    let parts = p.composition("m")?;
    let x = p.list("X", parts.len())?;
    let pows = prod(1, parts.len() as i64, |k| {
        let m = parts[k as usize - 1] as i64;
        powi(&at(x, k), m * (m - 1) / 2)
    })?;
    Ok(pows * flha1_rhs(p)?)
}

/// `f_i(x) = sum_k F[i][k] x^k`.
fn wronski_fs(p: &Params) -> Result<Vec<PolyQ>> {
    Ok(p.table("F")?.iter().take(p.n).map(|row| PolyQ::new(row.clone())).collect())
}

fn wronski(p: &Params) -> Result<MatrixQ> {
    let parts = p.composition("m")?;
    let a = p.list("a", p.n)?;
    let fs = wronski_fs(p)?;
    let mut m = MatrixQ::zeros(p.n, p.n);
    let mut start = 0;
    for &len in &parts {
        let pts = &a[start..start + len];
        for (i, f) in fs.iter().enumerate() {
            for (c, v) in divided_differences(f, pts)?.into_iter().enumerate() {
                m.set(i, start + c, v);
            }
        }
        start += len;
    }
    Ok(m)
}

fn wronski_rhs(p: &Params) -> Result<Rational> {
    let parts = p.composition("m")?;
    let a = p.list("a", p.n)?;
    let fs = wronski_fs(p)?;
    let full = mat1(p.n, |i, j| Ok(fs[i as usize - 1].eval(&at(a, j))))?;
    let mut den = Rational::one();
    let mut start = 0i64;
    for &len in &parts {
        let (lo, hi) = (start + 1, start + len as i64);
        den *= prod(lo, hi, |i| prod(i + 1, hi, |j| Ok(at(a, j) - at(a, i))))?;
        start = hi;
    }
    div(&det(&full, Strategy::Bareiss)?, &den)
}

fn q_of(p: &Params) -> Result<(Rational, i64)> {
    let c = p.i("C")?;
    domain(c >= 0, "C must be a nonnegative integer")?;
    Ok((p.r("q")?.clone(), c))
}

fn qflha1(p: &Params) -> Result<MatrixQ> {
    let (q, c0) = q_of(p)?;
    blocks(p, |i, c, x| {
        let coef = prod(0, c - 1, |t| q_int(c0 + i - t, &q))?;
        Ok(coef * powi(x, i - c)?)
    })
}

fn qflha2(p: &Params) -> Result<MatrixQ> {
    let (q, c0) = q_of(p)?;
    blocks(p, |i, c, x| Ok(powi(&q_int(c0 + i, &q)?, c)? * powi(x, i)?))
}

/// `sum_{i<j} (m_i binom(m_j,2) - m_j binom(m_i,2))`.
fn cross_term(parts: &[usize]) -> i64 {
    let mut s = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (a, b) = (parts[i] as i64, parts[j] as i64);
            s += a * b * (b - 1) / 2 - b * a * (a - 1) / 2;
        }
    }
    s
}

/// `sum_i sum_{j=1}^{m_i} (C + j + m_1 + ... + m_{i-1} - 1)(m_i - j)`.
fn linear_term(parts: &[usize], c: i64) -> i64 {
    let mut s = 0;
    let mut before = 0;
    for &m in parts {
        let m = m as i64;
        for j in 1..=m {
            s += (c + j + before - 1) * (m - j);
        }
        before += m;
    }
    s
}

/// `q^N prod [j]_q! prod_{k<l} prod_{s,t} (q^{t-s} X_l - X_k)` for a given `N`.
fn q_confluent(p: &Params, exponent: i64, with_x: bool) -> Result<Rational> {
    let parts = p.composition("m")?;
    let x = p.list("X", parts.len())?;
    let q = p.r("q")?;
    let l = parts.len() as i64;
    let m = |k: i64| parts[k as usize - 1] as i64;
    let facs = prod(1, l, |k| prod(1, m(k) - 1, |j| q_factorial(j, q)))?;
    let xs = if with_x { prod(1, l, |k| powi(&at(x, k), m(k) * (m(k) - 1) / 2))? } else { Rational::one() };
    let pairs = prod(1, l, |a| {
        prod(a + 1, l, |b| {
            prod(0, m(a) - 1, |s| prod(0, m(b) - 1, |t| Ok(powi(q, t - s)? * at(x, b) - at(x, a))))
        })
    })?;
    Ok(powi(q, exponent)? * facs * xs * pairs)
}

fn qflha1_rhs(p: &Params) -> Result<Rational> {
    let parts = p.composition("m")?;
    let (_, c) = q_of(p)?;
    let cubic: i64 = parts.iter().map(|&m| binomial_cube(m as i64)).sum();
    q_confluent(p, linear_term(&parts, c) - cubic - cross_term(&parts), false)
}

/// `binom(m, 3)`, subtracted once per block.
fn binomial_cube(m: i64) -> i64 {
    let b = binomial_i(m, 3);
    i64::try_from(b.to_integer()).expect("small binomial")
}

fn qflha2_rhs(p: &Params) -> Result<Rational> {
    let parts = p.composition("m")?;
    let (_, c) = q_of(p)?;
    q_confluent(p, linear_term(&parts, c) - cross_term(&parts), true)
}

pub(super) fn records() -> Vec<IdentityRecord> {
    let r = IdentityRecord::det_rec;
    let comp = ("m", Domain::Composition);
    let x = ("X", Domain::List(Elem::Rat, 0));
    let q = ("q", Domain::Scalar(Elem::Q));
    let c = ("C", Domain::Scalar(Elem::Int(0, 4)));
    vec![
        r("flha1", "confluent alternant: each next column differentiates the previous one", flha1, flha1_rhs)
            .param(comp.0, comp.1)
            .param(x.0, x.1)
            .tags(&["wronskian"]),
        r("flha2", "Abel-type confluent alternant built with X d/dX", flha2, flha2_rhs)
            .param(comp.0, comp.1)
            .param(x.0, x.1)
            .tags(&["wronskian"]),
        r("wronski", "generalized discrete Wronskian of divided differences", wronski, wronski_rhs)
            .param(comp.0, comp.1)
            .param("a", Domain::List(Elem::Rat, 0))
            .param("F", Domain::Table(Elem::Rat, 0))
            .tags(&["wronskian"]),
        r("qflha1", "q-confluent alternant built with X^-C D_q X^C", qflha1, qflha1_rhs)
            .param(comp.0, comp.1)
            .param(x.0, x.1)
            .param(q.0, q.1)
            .param(c.0, c.1)
            .tags(&["wronskian", "q"]),
        r("qflha2", "q-Abel-type alternant built with X^(1-C) D_q X^C", qflha2, qflha2_rhs)
            .param(comp.0, comp.1)
            .param(x.0, x.1)
            .param(q.0, q.1)
            .param(c.0, c.1)
            .tags(&["wronskian", "q"]),
    ]
}

#[cfg(test)]
mod tests {
    use super::super::{verify_identity, VerifyOptions};
    use super::*;

    #[test]
    fn all_records_here_verify() {
        for rec in records() {
            for n in rec.min_n..=rec.max_n {
                let opts = VerifyOptions { trials: 4, seed: 11, max_n: Some(n), timing: false };
                let rep = verify_identity(rec.id, &opts).unwrap();
                assert!(rep.overall(), "{} at n={n}: {:?}", rec.id, rep.trials);
            }
        }
    }
}
