//! Plane partition determinants: q-binomial families and the Andrews
//! determinant with its relatives.

use num_traits::Zero;

use super::util::{domain, mat0, mat1, prod};
use super::{Domain, Elem, IdentityRecord, Params};
use crate::exactnum::{
    binomial, double_factorial, factorial, int, pochhammer, powi, q_binomial, q_factorial, q_int, q_pochhammer, rat,
    rational_sqrt, recip_factorial, recip_q_factorial, sign,
};
use crate::{Error, MatrixQ, Rational, Result};

fn ls(p: &Params) -> Result<Vec<i64>> {
    p.list("L", p.n)?
        .iter()
        .map(|r| i64::try_from(r.to_integer()).map_err(|_| Error::Domain("L too large".into())))
        .collect()
}

fn q(p: &Params) -> Result<&Rational> {
    p.r("q")
}

/// 1-based access into the integer list.
fn li(l: &[i64], i: i64) -> i64 {
    l[(i - 1) as usize]
}

fn pp1(p: &Params) -> Result<MatrixQ> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    mat1(p.n, |i, j| q_binomial(li(&l, i) + a + j, li(&l, i) + j, q))
}

fn pp1_rhs(p: &Params) -> Result<Rational> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    let n = p.n as i64;
    let e: i64 = (1..=n).map(|i| (i - 1) * (li(&l, i) + i)).sum();
    Ok(powi(q, e)?
        * prod(1, n, |i| prod(i + 1, n, |j| q_int(li(&l, i) - li(&l, j), q)))?
        * prod(1, n, |i| recip_q_factorial(li(&l, i) + n, q))?
        * prod(1, n, |i| q_factorial(li(&l, i) + a + 1, q))?
        * prod(1, n, |i| recip_q_factorial(a + 1 - i, q))?)
}

fn pp2(p: &Params) -> Result<MatrixQ> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    mat1(p.n, |i, j| Ok(powi(q, j * li(&l, i))? * q_binomial(a, li(&l, i) + j, q)?))
}

fn pp2_rhs(p: &Params) -> Result<Rational> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    let n = p.n as i64;
    let e: i64 = (1..=n).map(|i| i * li(&l, i)).sum();
    Ok(powi(q, e)?
        * prod(1, n, |i| prod(i + 1, n, |j| q_int(li(&l, i) - li(&l, j), q)))?
        * prod(1, n, |i| recip_q_factorial(li(&l, i) + n, q))?
        * prod(1, n, |i| q_factorial(a + i - 1, q))?
        * prod(1, n, |i| recip_q_factorial(a - li(&l, i) - 1, q))?)
}

fn pp3(p: &Params) -> Result<MatrixQ> {
    let (l, a, b) = (ls(p)?, p.r("A")?, p.r("B")?);
    mat1(p.n, |i, j| Ok(binomial(&(b * int(li(&l, i)) + a), li(&l, i) + j)))
}

fn pp3_rhs(p: &Params) -> Result<Rational> {
    let (l, a, b) = (ls(p)?, p.r("A")?, p.r("B")?);
    let n = p.n as i64;
    Ok(prod(1, n, |i| prod(i + 1, n, |j| Ok(int(li(&l, i) - li(&l, j)))))?
        * prod(1, n, |i| Ok(recip_factorial(li(&l, i) + n)))?
        // (BL+A)!/((B-1)L+A-1)! is the rising product of L+1 factors
        * prod(1, n, |i| {
            let li = li(&l, i);
            pochhammer(&((b - int(1)) * int(li) + a), li + 1)
        })?
        * prod(1, n, |i| pochhammer(&(a - b * int(i) + int(1)), i - 1))?)
}

fn abel(p: &Params) -> Result<MatrixQ> {
    let (l, a, b) = (ls(p)?, p.r("A")?, p.r("B")?);
    mat1(p.n, |i, j| {
        let li = li(&l, i);
        Ok(powi(&(a + b * int(li)), j - 1)? * recip_factorial(j - li))
    })
}

fn abel_rhs(p: &Params) -> Result<Rational> {
    let (l, a, b) = (ls(p)?, p.r("A")?, p.r("B")?);
    let n = p.n as i64;
    Ok(prod(1, n, |i| Ok(powi(&(a + b * int(i)), i - 1)? * recip_factorial(n - li(&l, i))))?
        * prod(1, n, |i| prod(i + 1, n, |j| Ok(int(li(&l, j) - li(&l, i)))))?)
}

fn shifted(p: &Params) -> Result<MatrixQ> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    mat1(p.n, |i, j| Ok(powi(q, j * li(&l, i))? * q_binomial(li(&l, i) + a - j, li(&l, i) + j, q)?))
}

fn shifted_rhs(p: &Params) -> Result<Rational> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    let n = p.n as i64;
    let e: i64 = (1..=n).map(|i| i * li(&l, i)).sum();
    Ok(powi(q, e)?
        * prod(1, n, |i| {
            Ok(q_factorial(li(&l, i) + a - n, q)?
                * recip_q_factorial(li(&l, i) + n, q)?
                * recip_q_factorial(a - 2 * i, q)?)
        })?
        * prod(1, n, |i| {
            prod(i + 1, n, |j| Ok(q_int(li(&l, i) - li(&l, j), q)? * q_int(li(&l, i) + li(&l, j) + a + 1, q)?))
        })?)
}

fn pp5(p: &Params) -> Result<MatrixQ> {
    let (l, a, b, q) = (ls(p)?, p.i("A")?, p.i("B")?, q(p)?);
    mat1(p.n, |i, j| Ok(q_binomial(li(&l, i) + j, b, q)? * q_binomial(li(&l, i) + a - j, b, q)?))
}

fn pp5_rhs(p: &Params) -> Result<Rational> {
    let (l, a, b, q) = (ls(p)?, p.i("A")?, p.i("B")?, q(p)?);
    let n = p.n as i64;
    let e: i64 = (1..=n).map(|i| (i - 1) * li(&l, i)).sum::<i64>() - b * n * (n - 1) / 2 + (n + 1) * n * (n - 1) / 3;
    Ok(powi(q, e)?
        * prod(1, n, |i| {
            prod(i + 1, n, |j| {
                Ok(q_int(li(&l, i) - li(&l, j), q)? * q_int(li(&l, i) + li(&l, j) + a - b + 1, q)?)
            })
        })?
        * prod(1, n, |i| {
            let li = li(&l, i);
            Ok(q_factorial(li + 1, q)?
                * q_factorial(li + a - n, q)?
                * recip_q_factorial(li - b + n, q)?
                * recip_q_factorial(li + a - b - 1, q)?
                * q_factorial(a - 2 * i - 1, q)?
                * recip_q_factorial(a - i - n - 1, q)?
                * recip_q_factorial(b + i - n, q)?
                * recip_q_factorial(b, q)?)
        })?)
}

fn ints(p: &Params, name: &str) -> Result<Vec<i64>> {
    p.list(name, p.n)?
        .iter()
        .map(|r| {
            if r.is_integer() {
                i64::try_from(r.to_integer()).map_err(|_| Error::Domain(format!("{name} too large")))
            } else {
                Err(Error::Domain(format!("{name} must hold integers")))
            }
        })
        .collect()
}

fn pp5a(p: &Params) -> Result<MatrixQ> {
    let (x, y, a, b, q) = (ints(p, "X")?, ints(p, "Y")?, p.i("A")?, p.i("B")?, q(p)?);
    mat0(p.n, |i, j| {
        let (xi, yj) = (x[i as usize], y[j as usize]);
        let num = q_binomial(xi + yj, j, q)? * q_binomial(yj + a - xi, j, q)?;
        let den = q_binomial(xi + b, j, q)? * q_binomial(a + b - xi, j, q)?;
        crate::exactnum::div(&num, &den)
    })
}

fn qp(e: i64, q: &Rational, k: i64) -> Result<Rational> {
    q_pochhammer(&powi(q, e)?, q, k)
}

fn pp5a_rhs(p: &Params) -> Result<Rational> {
    let (x, y, a, b, q) = (ints(p, "X")?, ints(p, "Y")?, p.i("A")?, p.i("B")?, q(p)?);
    let n = p.n as i64;
    let e = n * (n - 1) * (n - 2) / 3 + (0..n).map(|i| i * (x[i as usize] + y[i as usize] - a - 2 * b)).sum::<i64>();
    let pairs = prod(0, n - 1, |i| {
        prod(i + 1, n - 1, |j| {
            let (xi, xj) = (x[i as usize], x[j as usize]);
            Ok(q_int(xi - xj, q)? * q_int(xi + xj - a, q)?)
        })
    })?;
    let singles = prod(0, n - 1, |i| {
        let (xi, yi) = (x[i as usize], y[i as usize]);
        let num = qp(b - yi - i + 1, q, i)? * qp(yi + a + b + 2 - 2 * i, q, i)?;
        let den = qp(xi - a - b, q, n - 1)? * qp(xi + b - n + 2, q, n - 1)?;
        crate::exactnum::div(&num, &den)
    })?;
    // (q^a;q)_k = (1-q)^k [a]_q [a+1]_q ... ; the brackets balance only with this factor
    Ok(powi(q, e)? * powi(&(int(1) - q), n * (n - 1))? * pairs * singles)
}

/// Entry of the two-term families: `q^{w(L_j-L_i)} ([A, j-L_i] + s q^{w(2L_i+A-c)} [A, -j-L_i+c])`,
/// with all exponents of `q` given doubled and evaluated through `r = sqrt(q)`.
fn two_term(p: &Params, half: bool, c: i64, plus: bool) -> Result<MatrixQ> {
    let (l, a) = (ls(p)?, p.i("A")?);
    let q = q(p)?;
    let r = if half {
        rational_sqrt(q).ok_or_else(|| Error::Domain(format!("q = {q} is not a square")))?
    } else {
        q.clone()
    };
    let s = if plus { int(1) } else { int(-1) };
    mat1(p.n, |i, j| {
        let (lii, ljj) = (li(&l, i), li(&l, j));
        // w = j or j - 1/2; with `half`, r = q^{1/2} and the exponent is 2w
        let w = if half { 2 * j - 1 } else { j };
        let first = q_binomial(a, j - lii, q)?;
        let second = q_binomial(a, -j - lii + c, q)?;
        Ok(powi(&r, w * (ljj - lii))? * (first + &s * powi(&r, w * (2 * lii + a - c))? * second))
    })
}

fn pp4(p: &Params) -> Result<MatrixQ> {
    two_term(p, false, 1, false)
}

fn pp4a(p: &Params) -> Result<MatrixQ> {
    two_term(p, false, 0, false)
}

fn pp6(p: &Params) -> Result<MatrixQ> {
    two_term(p, true, 1, true)
}

fn pp6a(p: &Params) -> Result<MatrixQ> {
    two_term(p, true, 2, true)
}

fn pp4_rhs(p: &Params) -> Result<Rational> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    let n = p.n as i64;
    Ok(prod(1, n, |i| {
        Ok(q_factorial(a + 2 * i - 2, q)? * recip_q_factorial(n - li(&l, i), q)? * recip_q_factorial(a + n - 1 + li(&l, i), q)?)
    })? * prod(1, n, |i| prod(i + 1, n, |j| q_int(li(&l, j) - li(&l, i), q)))?
        * prod(1, n, |i| prod(i, n, |j| q_int(li(&l, i) + li(&l, j) + a - 1, q)))?)
}

fn pp4a_rhs(p: &Params) -> Result<Rational> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    let n = p.n as i64;
    Ok(prod(1, n, |i| {
        Ok(q_factorial(a + 2 * i - 1, q)? * recip_q_factorial(n - li(&l, i), q)? * recip_q_factorial(a + n + li(&l, i), q)?)
    })? * prod(1, n, |i| prod(i + 1, n, |j| q_int(li(&l, j) - li(&l, i), q)))?
        * prod(1, n, |i| prod(i, n, |j| q_int(li(&l, i) + li(&l, j) + a, q)))?)
}

/// `1 + q^{e/2}` through `r = sqrt(q)`.
fn one_plus_half(r: &Rational, e: i64) -> Result<Rational> {
    Ok(int(1) + powi(r, e)?)
}

fn pp6_rhs(p: &Params) -> Result<Rational> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    let r = rational_sqrt(q).ok_or_else(|| Error::Domain("q must be a square".into()))?;
    let n = p.n as i64;
    let ratio = prod(1, n, |i| {
        crate::exactnum::div(&one_plus_half(&r, 2 * li(&l, i) + a - 1)?, &one_plus_half(&r, 2 * i + a - 1)?)
    })?;
    Ok(ratio
        * prod(1, n, |i| {
            Ok(q_factorial(a + 2 * i - 1, q)?
                * recip_q_factorial(n - li(&l, i), q)?
                * recip_q_factorial(a + n + li(&l, i) - 1, q)?)
        })?
        * prod(1, n, |i| {
            prod(i + 1, n, |j| Ok(q_int(li(&l, j) - li(&l, i), q)? * q_int(li(&l, i) + li(&l, j) + a - 1, q)?))
        })?)
}

fn pp6a_rhs(p: &Params) -> Result<Rational> {
    let (l, a, q) = (ls(p)?, p.i("A")?, q(p)?);
    let r = rational_sqrt(q).ok_or_else(|| Error::Domain("q must be a square".into()))?;
    let n = p.n as i64;
    let num = prod(1, n, |i| one_plus_half(&r, 2 * li(&l, i) + a - 2))?;
    let den = prod(2, n, |i| one_plus_half(&r, 2 * i + a - 2))?;
    Ok(crate::exactnum::div(&num, &den)?
        * prod(1, n, |i| {
            Ok(q_factorial(a + 2 * i - 2, q)?
                * recip_q_factorial(n - li(&l, i), q)?
                * recip_q_factorial(a + n + li(&l, i) - 2, q)?)
        })?
        * prod(1, n, |i| {
            prod(i + 1, n, |j| Ok(q_int(li(&l, j) - li(&l, i), q)? * q_int(li(&l, i) + li(&l, j) + a - 2, q)?))
        })?)
}

fn andrews_entry(mu: &Rational, i: i64, j: i64, diag: i64) -> Rational {
    let d = if i == j { int(diag) } else { Rational::zero() };
    d + binomial(&(int(2) * mu + int(i + j)), j)
}

fn andrews(p: &Params) -> Result<MatrixQ> {
    let mu = p.r("mu")?.clone();
    mat0(p.n, |i, j| Ok(andrews_entry(&mu, i, j, 1)))
}

fn ceil2(a: i64) -> i64 {
    a.div_euclid(2) + i64::from(a.rem_euclid(2) != 0)
}

fn andrews_rhs(p: &Params) -> Result<Rational> {
    let mu = p.r("mu")?;
    let n = p.n as i64;
    let half = rat(1, 2);
    let three_n_half = rat(3 * n, 2);
    let lead = powi(&int(2), ceil2(n))?;
    if n % 2 == 0 {
        let a = prod(1, n - 2, |i| pochhammer(&(mu + int(ceil2(i) + 1)), (i + 3) / 4))?;
        let b = prod(1, n / 2, |i| {
            let base = mu + &three_n_half - int(ceil2(3 * i)) + int(3) * &half;
            Ok(pochhammer(&base, ceil2(i) - 1)? * pochhammer(&base, ceil2(i))?)
        })?;
        let c = prod(1, n / 2 - 1, |i| Ok(double_factorial(2 * i - 1)? * double_factorial(2 * i + 1)?))?;
        crate::exactnum::div(&(lead * a * b), &c)
    } else {
        // floor((i+3)/4) here too; the ceiling overshoots from n = 5 on
        let a = prod(1, n - 2, |i| pochhammer(&(mu + int(ceil2(i) + 1)), (i + 3) / 4))?;
        let b = prod(1, (n - 1) / 2, |i| {
            let b1 = mu + &three_n_half - int(ceil2(3 * i - 1)) + int(1);
            let b2 = mu + &three_n_half - int(ceil2(3 * i));
            Ok(pochhammer(&b1, ceil2(i - 1))? * pochhammer(&b2, ceil2(i))?)
        })?;
        let c = prod(1, (n - 1) / 2, |i| {
            let d = double_factorial(2 * i - 1)?;
            Ok(&d * &d)
        })?;
        crate::exactnum::div(&(lead * a * b), &c)
    }
}

fn csp(p: &Params) -> Result<MatrixQ> {
    let q = q(p)?;
    let q3 = powi(q, 3)?;
    mat0(p.n, |i, j| {
        let d = if i == j { int(1) } else { Rational::zero() };
        Ok(d + powi(q, 3 * i + 1)? * q_binomial(i + j, j, &q3)?)
    })
}

fn one_minus(q: &Rational, e: i64) -> Result<Rational> {
    Ok(int(1) - powi(q, e)?)
}

fn csp_rhs(p: &Params) -> Result<Rational> {
    let q = q(p)?;
    let n = p.n as i64;
    let a = prod(1, n, |i| crate::exactnum::div(&one_minus(q, 3 * i - 1)?, &one_minus(q, 3 * i - 2)?))?;
    let b = prod(1, n, |i| {
        prod(i, n, |j| crate::exactnum::div(&one_minus(q, 3 * (n + i + j - 1))?, &one_minus(q, 3 * (2 * i + j - 1))?))
    })?;
    Ok(a * b)
}

fn descpp(p: &Params) -> Result<MatrixQ> {
    let q = q(p)?;
    mat0(p.n, |i, j| {
        let d = if i == j { int(1) } else { Rational::zero() };
        Ok(d + powi(q, i + 2)? * q_binomial(i + j + 2, j, q)?)
    })
}

fn descpp_rhs(p: &Params) -> Result<Rational> {
    let q = q(p)?;
    let n = p.n as i64;
    prod(1, n + 1, |i| {
        prod(i, n + 1, |j| crate::exactnum::div(&one_minus(q, n + i + j)?, &one_minus(q, 2 * i + j - 1)?))
    })
}

fn zare1(p: &Params) -> Result<MatrixQ> {
    let mu = p.r("mu")?.clone();
    mat0(p.n, |i, j| Ok(andrews_entry(&mu, i, j, -1)))
}

fn zare1_rhs(p: &Params) -> Result<Rational> {
    let mu = p.i("mu")?;
    domain(mu >= 0, "mu must be a nonnegative integer")?;
    let n = p.n as i64;
    if n % 2 == 1 {
        return Ok(Rational::zero());
    }
    let f = |k: i64| factorial(k);
    let sq = |k: i64| -> Result<Rational> {
        let v = factorial(k)?;
        Ok(&v * &v)
    };
    let body = prod(0, n / 2 - 1, |i| {
        let num = sq(i)? * sq(mu + i)? * sq(mu + 3 * i + 1)? * sq(2 * mu + 3 * i + 1)?;
        let den = f(2 * i)? * f(2 * i + 1)? * sq(mu + 2 * i)? * sq(mu + 2 * i + 1)? * f(2 * mu + 2 * i)? * f(2 * mu + 2 * i + 1)?;
        Ok(num / den)
    })?;
    Ok(sign(n / 2) * body)
}

pub(super) fn records() -> Vec<IdentityRecord> {
    let r = IdentityRecord::det_rec;
    let l = ("L", Domain::Decreasing);
    let q = ("q", Domain::Scalar(Elem::Q));
    let qs = ("q", Domain::Scalar(Elem::QSquare));
    let a_int = |lo, hi| ("A", Domain::Scalar(Elem::Int(lo, hi)));
    let with = |mut rec: IdentityRecord, ps: Vec<(&'static str, Domain)>| {
        rec.params = ps;
        rec.tags = &["plane-partition"];
        rec
    };
    vec![
        with(r("pp1", "det([L_i+A+j, L_i+j]_q) with [L_i+A+1]_q! in the product", pp1, pp1_rhs), vec![l, a_int(0, 10), q]),
        with(r("pp2", "det(q^{jL_i} [A, L_i+j]_q)", pp2, pp2_rhs), vec![l, a_int(0, 20), q]),
        with(
            r("pp3", "det(binom(BL_i+A, L_i+j)) with (A-Bi+1)_{i-1} in the product", pp3, pp3_rhs),
            vec![l, ("A", Domain::Scalar(Elem::Rat)), ("B", Domain::Scalar(Elem::Rat))],
        ),
        with(
            r("abel", "det((A+BL_i)^{j-1}/(j-L_i)!)", abel, abel_rhs),
            vec![l, ("A", Domain::Scalar(Elem::Rat)), ("B", Domain::Scalar(Elem::Rat))],
        ),
        with(r("shifted", "det(q^{jL_i} [L_i+A-j, L_i+j]_q) with [L_i+L_j+A+1]_q pair factors", shifted, shifted_rhs), vec![
            l,
            a_int(0, 20),
            q,
        ]),
        with(r("pp5", "det of a product of two q-binomials [L_i+j, B]_q [L_i+A-j, B]_q", pp5, pp5_rhs), vec![
            l,
            a_int(0, 24),
            ("B", Domain::Scalar(Elem::Int(0, 6))),
            q,
        ]),
        with(r("pp5a", "ratio of four q-binomials with (q^{B-Y_i-i+1})_i in the product", pp5a, pp5a_rhs), vec![
            ("X", Domain::List(Elem::Int(-8, 8), 0)),
            ("Y", Domain::List(Elem::Int(-8, 8), 0)),
            a_int(-8, 8),
            ("B", Domain::Scalar(Elem::Int(-8, 8))),
            q,
        ]),
        with(r("pp4", "difference of two q-binomial coefficients, shift 1", pp4, pp4_rhs), vec![l, a_int(0, 12), q]),
        with(r("pp4a", "difference of two q-binomial coefficients, shift 0", pp4a, pp4a_rhs), vec![l, a_int(0, 12), q]),
        with(r("pp6", "sum of two q-binomials with (1+q^{L_i+A/2-1/2}) factors", pp6, pp6_rhs), vec![l, a_int(0, 12), qs]),
        with(r("pp6a", "sum of two q-binomials with (1+q^{L_i+A/2-1}) factors", pp6a, pp6a_rhs), vec![l, a_int(0, 12), qs]),
        with(r("andrews", "det(delta_ij + binom(2mu+i+j, j)) with even/odd branches", andrews, andrews_rhs), vec![(
            "mu",
            Domain::Scalar(Elem::Rat),
        )]),
        with(r("csp", "det(delta_ij + q^{3i+1}[i+j, j]_{q^3})", csp, csp_rhs), vec![q]),
        with(r("descpp", "det(delta_ij + q^{i+2}[i+j+2, j]_q)", descpp, descpp_rhs), vec![q]),
        with(r("zare1", "det(-delta_ij + binom(2mu+i+j, j)), zero for odd n", zare1, zare1_rhs), vec![(
            "mu",
            Domain::Scalar(Elem::Int(0, 6)),
        )]),
    ]
}

#[cfg(test)]
mod tests {
    use super::super::{verify_identity, VerifyOptions};
    use super::*;

    #[test]
    fn all_records_here_verify() {
        let mut bad = Vec::new();
        for rec in records() {
            for n in rec.min_n..=rec.max_n {
                let opts = VerifyOptions { trials: 4, seed: 5, max_n: Some(n), timing: false };
                let rep = verify_identity(rec.id, &opts).unwrap();
                if !rep.overall() {
                    bad.push(format!("{} at n={n}: {:?}", rec.id, rep.trials.iter().find(|t| !t.pass)));
                }
            }
        }
        assert!(bad.is_empty(), "{}", bad.join("\n"));
    }

    #[test]
    fn andrews_order_two() {
        let p = Params::new(2).with("mu", rat(1, 3));
        assert_eq!(andrews_rhs(&p).unwrap(), rat(17, 3));
    }

    #[test]
    fn andrews_odd_orders() {
        // det at mu = 0 for n = 5, 7 computed by Bareiss elimination
        for (n, v) in [(5, 1452), (7, 826540)] {
            let p = Params::new(n).with("mu", int(0));
            assert_eq!(andrews_rhs(&p).unwrap(), int(v));
        }
    }
}
