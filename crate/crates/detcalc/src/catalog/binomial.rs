//! Binomial determinants: the Mills-Robbins-Rumsey family, Krattenthaler's
//! (x, y) determinants, TSSCPP, the pentagon, and the Bombieri-Hunt-van der
//! Poorten matrices.

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;

use super::util::{domain, mat0, mat1, prod, sum};
use super::{Domain, Elem, IdentityRecord, Outcome, Params};
use crate::exactnum::{
    binomial, binomial_i, div, double_factorial, factorial, int, pochhammer, powi, q_binomial, q_pochhammer, rat,
    recip_factorial, sign,
};
use crate::linalg::{det, Strategy};
use crate::{MatrixQ, Rational, Result};

fn fl2(a: i64) -> i64 {
    a.div_euclid(2)
}

fn cl2(a: i64) -> i64 {
    -(-a).div_euclid(2)
}

/// `(-1)^{[n = 3 mod 4]}`.
fn chi3(n: i64) -> Rational {
    if n.rem_euclid(4) == 3 {
        int(-1)
    } else {
        int(1)
    }
}

fn pow2(e: i64) -> Result<Rational> {
    powi(&int(2), e)
}

/// `(-1)^chi 2^e prod_{i=1}^{n-1} (a+i)_{fl((i+1)/2)} (b+i)_{fl(i/2)} / (i)_i`.
fn mrr_shape(n: i64, e: i64, a: &Rational, b: &Rational) -> Result<Rational> {
    let body = prod(1, n - 1, |i| {
        let num = pochhammer(&(a + int(i)), fl2(i + 1))? * pochhammer(&(b + int(i)), fl2(i))?;
        div(&num, &pochhammer(&int(i), i)?)
    })?;
    Ok(chi3(n) * pow2(e)? * body)
}

fn z_entry(x: &Rational, mu: &Rational, nu: &Rational, n: i64, i: i64, j: i64) -> Result<Rational> {
    let d = if i == j { Rational::one() } else { Rational::zero() };
    let s = sum(0, n - 1, |t| {
        sum(t, n - 1, |k| {
            Ok(binomial(&(mu + int(i)), t)
                * binomial(&(nu + int(k)), k - t)
                * binomial(&(mu + int(j - k - 1)), j - k)
                * powi(x, k - t)?)
        })
    })?;
    Ok(d + s)
}

fn t_det(x: &Rational, mu: &Rational, nu: &Rational, n: usize) -> Result<Rational> {
    let m = mat0(n, |i, j| {
        sum(i, 2 * j, |t| Ok(binomial(&(mu + int(i)), t - i) * binomial(&(nu + int(j)), 2 * j - t) * powi(x, 2 * j - t)?))
    })?;
    det(&m, Strategy::Bareiss)
}

fn r_det(x: &Rational, mu: &Rational, nu: &Rational, n: usize) -> Result<Rational> {
    let m = mat0(n, |i, j| {
        sum(i, 2 * j + 1, |t| {
            let a = binomial(&(mu + int(i)), t - i - 1) + binomial(&(mu + int(i + 1)), t - i);
            let b = binomial(&(nu + int(j)), 2 * j + 1 - t) + binomial(&(nu + int(j + 1)), 2 * j + 1 - t);
            Ok(a * b * powi(x, 2 * j + 1 - t)?)
        })
    })?;
    det(&m, Strategy::Bareiss)
}

fn mrr_factor(p: &Params, _: &mut ChaCha8Rng) -> Result<Outcome> {
    let (x, mu, nu) = (p.r("x")?, p.r("mu")?, p.r("nu")?);
    let n = p.n as i64;
    let z = det(&mat0(p.n, |i, j| z_entry(x, mu, nu, n, i, j))?, Strategy::Bareiss)?;
    let half = nu / int(2);
    let k = p.n.div_ceil(2);
    let rhs = if p.n % 2 == 0 {
        t_det(x, mu, &half, k)? * r_det(x, mu, &half, k)?
    } else {
        int(2) * t_det(x, mu, &half, k)? * r_det(x, mu, &half, k - 1)?
    };
    Ok(Outcome::compare(&z, &rhs))
}

fn mrr(p: &Params) -> Result<MatrixQ> {
    let mu = p.r("mu")?;
    mat0(p.n, |i, j| Ok(binomial(&(mu + int(i + j)), 2 * i - j)))
}

fn mrr_rhs(p: &Params) -> Result<Rational> {
    let mu = p.r("mu")?;
    let n = p.n as i64;
    mrr_shape(n, (n - 1) * (n - 2) / 2, &(mu + int(1)), &(-mu - int(3 * n) + rat(3, 2)))
}

fn rn(p: &Params) -> Result<MatrixQ> {
    let mu = p.r("mu")?;
    mat0(p.n, |i, j| {
        Ok(binomial(&(mu + int(i + j)), 2 * i - j) + int(2) * binomial(&(mu + int(i + j + 2)), 2 * i - j + 1))
    })
}

fn rn_rhs(p: &Params) -> Result<Rational> {
    let mu = p.r("mu")?;
    let n = p.n as i64;
    let body = prod(1, n, |i| {
        let a = pochhammer(&(mu + int(i)), fl2(i))?;
        let b = pochhammer(&(mu + int(3 * n - fl2(3 * i - 1)) + rat(1, 2)), fl2(i + 1))?;
        div(&(a * b), &double_factorial(2 * i - 1)?)
    })?;
    Ok(pow2(n)? * body)
}

fn ab(p: &Params) -> Result<MatrixQ> {
    let (x, y) = (p.r("x")?, p.r("y")?);
    mat0(p.n, |i, j| Ok(binomial(&(x + int(i + j)), 2 * i - j) + binomial(&(y + int(i + j)), 2 * i - j)))
}

fn ab_rhs(p: &Params) -> Result<Rational> {
    let s = (p.r("x")? + p.r("y")?) / int(2);
    let n = p.n as i64;
    mrr_shape(n, n * (n - 1) / 2 + 1, &(&s + int(1)), &(-&s - int(3 * n) + rat(3, 2)))
}

fn chu1(p: &Params) -> Result<MatrixQ> {
    let (x, c) = (p.list("X", p.n)?, p.r("c")?);
    mat0(p.n, |i, j| {
        let xi = &x[i as usize];
        Ok(binomial(&(c + xi + int(i + j)), 2 * i - j) + binomial(&(c - xi + int(i + j)), 2 * i - j))
    })
}

fn chu1_rhs(p: &Params) -> Result<Rational> {
    let c = p.r("c")?;
    let n = p.n as i64;
    mrr_shape(n, n * (n - 1) / 2 + 1, &(c + int(1)), &(-c - int(3 * n) + rat(3, 2)))
}

fn chu2(p: &Params) -> Result<MatrixQ> {
    let c = p.r("c")?;
    let h = rat(1, 2);
    mat0(p.n, |i, j| {
        let num = int(2 * i - j) + (int(2) * c + int(3 * j + 1)) * (int(2) * c + int(3 * j - 1));
        let den = (c + int(i + j) + &h) * (c + int(i + j) - &h);
        Ok(div(&num, &den)? * binomial(&(c + int(i + j) + &h), 2 * i - j))
    })
}

fn chu2_rhs(p: &Params) -> Result<Rational> {
    let c = p.r("c")?;
    let n = p.n as i64;
    mrr_shape(n, n * (n + 1) / 2 + 1, &(c + rat(1, 2)), &(-c - int(3 * n) + int(2)))
}

fn xy(p: &Params) -> Result<(i64, i64)> {
    let (x, y) = (p.i("x")?, p.i("y")?);
    domain(x >= 0 && y >= 0, "x, y must be nonnegative")?;
    Ok((x, y))
}

fn krat_xy(p: &Params) -> Result<MatrixQ> {
    let (x, y) = xy(p)?;
    mat0(p.n, |i, j| Ok(factorial(x + y + i + j - 1)? * recip_factorial(x + 2 * i - j) * recip_factorial(y + 2 * j - i)))
}

fn krat_xy_rhs(p: &Params) -> Result<Rational> {
    let (x, y) = xy(p)?;
    prod(0, p.n as i64 - 1, |i| {
        Ok(factorial(i)?
            * factorial(x + y + i - 1)?
            * pochhammer(&int(2 * x + y + 2 * i), i)?
            * pochhammer(&int(x + 2 * y + 2 * i), i)?
            * recip_factorial(x + 2 * i)
            * recip_factorial(y + 2 * i))
    })
}

/// `(q;q)_m`, an error for negative `m`.
fn qq(q: &Rational, m: i64) -> Result<Rational> {
    domain(m >= 0, "negative q-shifted factorial in a numerator")?;
    q_pochhammer(q, q, m)
}

/// `1/(q;q)_m`, zero for negative `m`.
fn rqq(q: &Rational, m: i64) -> Result<Rational> {
    if m < 0 {
        return Ok(Rational::zero());
    }
    crate::exactnum::recip(&q_pochhammer(q, q, m)?)
}

fn qp(a: &Rational, q: &Rational, k: i64) -> Result<Rational> {
    q_pochhammer(a, q, k)
}

fn qkrat(p: &Params) -> Result<MatrixQ> {
    let (x, y) = xy(p)?;
    let q = p.r("q")?;
    let base = -powi(q, x + y + 1)?;
    mat0(p.n, |i, j| {
        let v = qq(q, x + y + i + j - 1)? * rqq(q, x + 2 * i - j)? * rqq(q, y + 2 * j - i)?;
        Ok(v * div(&powi(q, -2 * i * j)?, &qp(&base, q, i + j)?)?)
    })
}

fn qkrat_rhs(p: &Params) -> Result<Rational> {
    let (x, y) = xy(p)?;
    let q = p.r("q")?;
    let n = p.n as i64;
    let q2 = q * q;
    let base = -powi(q, x + y + 1)?;
    prod(0, n - 1, |i| {
        let num = powi(q, -2 * i * i)?
            * qp(&q2, &q2, i)?
            * qq(q, x + y + i - 1)?
            * qp(&powi(q, 2 * x + y + 2 * i)?, q, i)?
            * qp(&powi(q, x + 2 * y + 2 * i)?, q, i)?;
        Ok(num * rqq(q, x + 2 * i)? * rqq(q, y + 2 * i)? * crate::exactnum::recip(&qp(&base, q, n - 1 + i)?)?)
    })
}

fn anst(p: &Params) -> Result<MatrixQ> {
    let (x, e, q) = (p.r("x")?, p.r("E")?, p.r("q")?);
    let q2 = q * q;
    mat0(p.n, |i, j| {
        if 2 * i + 1 - j < 0 {
            return Ok(Rational::zero());
        }
        let k = i - j;
        let qi = powi(q, i)?;
        let num = qp(&(e / (x * &qi)), &q2, k)?
            * qp(&(q / (e * x * &qi)), &q2, k)?
            * qp(&(int(1) / (x * x * powi(q, 2 + 4 * i)?)), &q2, k)?;
        let den = qq(q, 2 * i + 1 - j)?
            * qp(&(int(1) / (e * x * powi(q, 2 * i)?)), q, k)?
            * qp(&(e / (x * powi(q, 1 + 2 * i)?)), q, k)?;
        div(&num, &den)
    })
}

fn anst_rhs(p: &Params) -> Result<Rational> {
    let (x, e, q) = (p.r("x")?, p.r("E")?, p.r("q")?);
    let q2 = q * q;
    prod(0, p.n as i64 - 1, |i| {
        let num = qp(&(x * x * powi(q, 2 * i + 1)?), q, i)?
            * qp(&(x * powi(q, 3 + i)? / e), &q2, i)?
            * qp(&(e * x * powi(q, 2 + i)?), &q2, i)?;
        let den = qp(&(x * x * powi(q, 2 * i + 2)?), &q2, i)?
            * qp(q, &q2, i + 1)?
            * qp(&(e * x * powi(q, 1 + i)?), q, i)?
            * qp(&(x * powi(q, 2 + i)? / e), q, i)?;
        div(&num, &den)
    })
}

fn tsscpp1(p: &Params) -> Result<MatrixQ> {
    let (x, y) = xy(p)?;
    mat0(p.n, |i, j| {
        Ok(factorial(x + y + i + j - 1)?
            * int(y - x + 3 * j - 3 * i)
            * recip_factorial(x + 2 * i - j + 1)
            * recip_factorial(y + 2 * j - i + 1))
    })
}

fn tsscpp1_rhs(p: &Params) -> Result<Rational> {
    let (x, y) = xy(p)?;
    let n = p.n as i64;
    let body = prod(0, n - 1, |i| {
        Ok(factorial(i)?
            * factorial(x + y + i - 1)?
            * pochhammer(&int(2 * x + y + 2 * i + 1), i)?
            * pochhammer(&int(x + 2 * y + 2 * i + 1), i)?
            * recip_factorial(x + 2 * i + 1)
            * recip_factorial(y + 2 * i + 1))
    })?;
    let s = sum(0, n, |k| Ok(sign(k) * binomial_i(n, k) * pochhammer(&int(x), k)? * pochhammer(&int(y), n - k)?))?;
    Ok(body * s)
}

fn qtsscpp1(p: &Params) -> Result<MatrixQ> {
    let (x, y) = xy(p)?;
    let q = p.r("q")?;
    let base = -powi(q, x + y + 2)?;
    mat0(p.n, |i, j| {
        let lin = int(1) - powi(q, y + 2 * j - i)? - powi(q, y + 2 * j - i + 1)? + powi(q, x + y + i + j + 1)?;
        let v = qq(q, x + y + i + j - 1)? * lin * rqq(q, x + 2 * i - j + 1)? * rqq(q, y + 2 * j - i + 1)?;
        Ok(v * div(&powi(q, -2 * i * j)?, &qp(&base, q, i + j)?)?)
    })
}

fn qtsscpp1_rhs(p: &Params) -> Result<Rational> {
    let (x, y) = xy(p)?;
    let q = p.r("q")?;
    let n = p.n as i64;
    let q2 = q * q;
    let base = -powi(q, x + y + 2)?;
    let body = prod(0, n - 1, |i| {
        let num = powi(q, -2 * i * i)?
            * qp(&q2, &q2, i)?
            * qq(q, x + y + i - 1)?
            * qp(&powi(q, 2 * x + y + 2 * i + 1)?, q, i)?
            * qp(&powi(q, x + 2 * y + 2 * i + 1)?, q, i)?;
        Ok(num * rqq(q, x + 2 * i + 1)? * rqq(q, y + 2 * i + 1)? * crate::exactnum::recip(&qp(&base, q, n - 1 + i)?)?)
    })?;
    let s = sum(0, n, |k| {
        Ok(sign(k)
            * powi(q, n * k + y * k)?
            * q_binomial(n, k, q)?
            * qp(&powi(q, x)?, q, k)?
            * qp(&powi(q, y)?, q, n - k)?)
    })?;
    Ok(body * s)
}

fn tsscpp2_matrix(p: &Params, m: i64) -> Result<MatrixQ> {
    let x = p.i("x")?;
    domain(x >= 0, "x must be nonnegative")?;
    mat0(p.n, |i, j| {
        let (a, b) = (x + 2 * i - j, x + m + 2 * j - i);
        let top = 2 * x + m + i + j;
        if a <= b {
            sum(a + 1, b, |r| Ok(binomial_i(top, r)))
        } else {
            Ok(-sum(b + 1, a, |r| Ok(binomial_i(top, r)))?)
        }
    })
}

/// `prod_{i<n} i! (2x+i+m)! (3x+2i+s)_i (3x+2i+t)_i / ((x+2i)! (x+2i+m)!)`.
fn tsscpp2_head(x: i64, n: i64, m: i64, s: i64, t: i64) -> Result<Rational> {
    prod(0, n - 1, |i| {
        Ok(factorial(i)?
            * factorial(2 * x + i + m)?
            * pochhammer(&int(3 * x + 2 * i + s), i)?
            * pochhammer(&int(3 * x + 2 * i + t), i)?
            * recip_factorial(x + 2 * i)
            * recip_factorial(x + 2 * i + m))
    })
}

/// `prod_{i < fl(n/2)} (2x+2i+c) / (2 fl(n/2) - 1)!!`.
fn odd_tail(x: i64, n: i64, c: i64) -> Result<Rational> {
    let h = fl2(n);
    div(&prod(0, h - 1, |i| Ok(int(2 * x + 2 * i + c)))?, &double_factorial(2 * h - 1)?)
}

macro_rules! tsscpp2_case {
    ($build:ident, $rhs:ident, $m:expr, $body:expr) => {
        fn $build(p: &Params) -> Result<MatrixQ> {
            tsscpp2_matrix(p, $m)
        }

        fn $rhs(p: &Params) -> Result<Rational> {
            let x = p.i("x")?;
            domain(x >= 0, "x must be nonnegative")?;
            let f: fn(i64, i64) -> Result<Rational> = $body;
            f(x, p.n as i64)
        }
    };
}

tsscpp2_case!(tsscpp2_m0, tsscpp2_m0_rhs, 0, |x, n| {
    if n % 2 == 1 {
        return Ok(Rational::zero());
    }
    let head = prod(0, n - 1, |i| {
        let f = recip_factorial(x + 2 * i);
        let pch = pochhammer(&int(3 * x + 2 * i + 2), i)?;
        Ok(factorial(i)? * factorial(2 * x + i)? * &pch * &pch * &f * &f)
    })?;
    let tail = prod(0, n / 2 - 1, |i| Ok(int(2 * x + 2 * i + 1)))?;
    Ok(head * div(&tail, &double_factorial(n - 1)?)?)
});

tsscpp2_case!(tsscpp2_m1, tsscpp2_m1_rhs, 1, |x, n| Ok(tsscpp2_head(x, n, 1, 3, 4)? * odd_tail(x, n, 3)?));

tsscpp2_case!(tsscpp2_m2, tsscpp2_m2_rhs, 2, |x, n| {
    let last = if n % 2 == 0 { int(x + n + 1) } else { int(2 * x + n + 2) };
    Ok(tsscpp2_head(x, n, 2, 4, 6)? * odd_tail(x, n, 3)? * last / int(x + 1))
});

tsscpp2_case!(tsscpp2_m3, tsscpp2_m3_rhs, 3, |x, n| {
    let last = if n % 2 == 0 { int(x + 2 * n + 1) } else { int(3 * x + 2 * n + 5) };
    Ok(tsscpp2_head(x, n, 3, 5, 8)? * odd_tail(x, n, 5)? * last / int(x + 1))
});

tsscpp2_case!(tsscpp2_m4, tsscpp2_m4_rhs, 4, |x, n| {
    let last = if n % 2 == 0 {
        int(x * x + (4 * n + 3) * x + 2 * (n * n + 4 * n + 1))
    } else {
        int((2 * x + n + 4) * (2 * x + 2 * n + 4))
    };
    Ok(tsscpp2_head(x, n, 4, 6, 10)? * odd_tail(x, n, 5)? * last / int((x + 1) * (x + 2)))
});

fn pentagon(p: &Params) -> Result<MatrixQ> {
    let (x, y) = xy(p)?;
    mat1(p.n, |i, j| Ok(binomial_i(x + y + j, x - i + 2 * j) - binomial_i(x + y + j, x + i + 2 * j)))
}

fn pentagon_rhs(p: &Params) -> Result<Rational> {
    let (x, y) = xy(p)?;
    let n = p.n as i64;
    prod(1, n, |j| {
        Ok(factorial(j - 1)?
            * factorial(x + y + 2 * j)?
            * pochhammer(&int(x - y + 2 * j + 1), j)?
            * pochhammer(&int(x + 2 * y + 3 * j + 1), n - j)?
            * recip_factorial(x + n + 2 * j)
            * recip_factorial(y + n - j))
    })
}

fn fukr2(p: &Params) -> Result<MatrixQ> {
    let (m, l) = (p.i("m")?, p.i("l")?);
    let n = p.n as i64;
    domain(m >= 1 && (1..=n).contains(&l), "need m >= 1 and 1 <= l <= n")?;
    mat1(p.n, |i, j| {
        if i == l {
            return Ok(binomial_i(n + m - i, m + i - j));
        }
        // binom(n+m-i, m+i-j)/(n+j-2i+1) written with factorials, so that the
        // removable singularity at n+j-2i+1 = 0 takes its limiting value
        let v = factorial(n + m - i)? * recip_factorial(m + i - j) * recip_factorial(n + j - 2 * i + 1);
        Ok(v * (int(m) + rat(n - j + 1, 2)))
    })
}

fn fukr2_rhs(p: &Params) -> Result<Rational> {
    let (m, l) = (p.i("m")?, p.i("l")?);
    let n = p.n as i64;
    let h = rat(1, 2);
    let a = prod(1, n, |i| {
        Ok(factorial(n + m - i)? * recip_factorial(m + i - 1) * recip_factorial(2 * n - 2 * i + 1))
    })?;
    let b = prod(1, fl2(n), |i| {
        Ok(pochhammer(&int(m + i), n - 2 * i + 1)? * pochhammer(&(int(m + i) + &h), n - 2 * i)?)
    })?;
    let c = pow2((n - 1) * (n - 2) / 2)? * pochhammer(&int(m), n + 1)? * prod(1, n, |j| factorial(2 * j - 1))?;
    let d = factorial(n)? * prod(1, fl2(n), |i| pochhammer(&int(2 * i), 2 * n - 4 * i + 1))?;
    let s = sum(0, l - 1, |e| {
        let num = sign(e) * binomial_i(n, e) * int(n - 2 * e) * pochhammer(&h, e)?;
        let den = int((m + e) * (m + n - e)) * pochhammer(&(&h - int(n)), e)?;
        div(&num, &den)
    })?;
    Ok(a * b * div(&c, &d)? * s)
}

/// `b = n - c` with `0 <= c <= b`.
fn bc(p: &Params) -> Result<(i64, i64)> {
    let c = p.i("c")?;
    let b = p.n as i64 - c;
    domain(0 <= c && c <= b, "need 0 <= c <= b")?;
    Ok((b, c))
}

fn bombieri_xbc(p: &Params) -> Result<MatrixQ> {
    let (b, c) = bc(p)?;
    let x = p.r("x")?;
    let two_x = x * int(2);
    mat0(p.n, |i, j| {
        let top = x + int(j);
        Ok(if j < c {
            if i < c {
                binomial(&top, i)
            } else if i < b {
                Rational::zero()
            } else {
                int(2) * binomial(&top, i - b)
            }
        } else if j < b {
            if i < b {
                binomial(&top, i)
            } else {
                binomial(&top, i - b)
            }
        } else if i < b {
            binomial(&(&two_x + int(j)), i)
        } else {
            Rational::zero()
        })
    })
}

fn bombieri_xbc_rhs(p: &Params) -> Result<Rational> {
    let (b, c) = bc(p)?;
    let x = p.r("x")?;
    if b % 2 == 0 && c % 2 == 1 {
        return Ok(Rational::zero());
    }
    let h = rat(1, 2);
    let cb = cl2(b);
    let first = prod(1, b - c, |i| div(&pochhammer(&(int(i - cb) + &h), c)?, &pochhammer(&int(i), c)?))?;
    let second = prod(1, c, |i| {
        let (u, k1) = (cl2(c + i), b - c + cl2(i) - cl2(c + i));
        let (v, k2) = (cl2(b - c + i), cl2(b + i) - cl2(b - c + i));
        let num = pochhammer(&(x + int(u)), k1)? * pochhammer(&(x + int(v)), k2)?;
        let den = pochhammer(&(&h - int(cb) + int(u)), k1)? * pochhammer(&(&h - int(cb) + int(v)), k2)?;
        div(&num, &den)
    })?;
    Ok(sign(c) * pow2(c)? * first * second)
}

/// Row labels `(i1, i2)` with `0 <= i1 < 2l(N - i2)`.
fn triangle(big_n: i64, l: i64) -> Vec<(i64, i64)> {
    (0..=big_n).flat_map(|i2| (0..2 * l * (big_n - i2)).map(move |i1| (i1, i2))).collect()
}

fn nl(p: &Params) -> Result<(i64, i64)> {
    let l = p.i("l")?;
    domain(l >= 1, "l must be positive")?;
    Ok((p.n as i64, l))
}

fn bombieri_conj(p: &Params) -> Result<MatrixQ> {
    let (big_n, l) = nl(p)?;
    let rows = triangle(big_n, l);
    let cols: Vec<(i64, i64)> = (0..=big_n)
        .flat_map(|j2| (2 * l * (big_n - j2)..l * (3 * big_n - 2 * j2)).map(move |j1| (j1, j2)))
        .collect();
    MatrixQ::try_from_fn(rows.len(), cols.len(), |r, c| {
        let ((i1, i2), (j1, j2)) = (rows[r], cols[c]);
        Ok(binomial_i(j1, i1) * binomial_i(j2, i2))
    })
}

fn tetra(big_n: i64) -> i64 {
    (big_n + 2) * (big_n + 1) * big_n / 6
}

fn bombieri_conj_rhs(p: &Params) -> Result<Rational> {
    let (big_n, l) = nl(p)?;
    let f = |lo: i64, hi: i64| prod(lo, hi, factorial);
    // the middle block of factorials enters squared
    let mid = f(l, 2 * l - 1)?;
    let base = div(&(f(0, l - 1)? * f(2 * l, 3 * l - 1)?), &(&mid * &mid))?;
    powi(&base, tetra(big_n))
}

fn poorten(p: &Params) -> Result<MatrixQ> {
    let (big_n, l) = nl(p)?;
    let x = p.r("x")?;
    let rows = triangle(big_n, l);
    let cols: Vec<(i64, i64)> = (0..=big_n).flat_map(|j2| (0..l * big_n).map(move |j1| (j1, j2))).collect();
    MatrixQ::try_from_fn(rows.len(), cols.len(), |r, c| {
        let ((i1, i2), (j1, j2)) = (rows[r], cols[c]);
        Ok(sign(i1 - j1) * binomial(&(-x * int(big_n - j2)), i1 - j1) * binomial_i(j2, i2))
    })
}

fn poorten_rhs(p: &Params) -> Result<Rational> {
    let (big_n, l) = nl(p)?;
    let x = p.r("x")?;
    let base = prod(1, l, |i| div(&binomial(&(x + int(i - 1)), 2 * i - 1), &binomial_i(l + i - 1, 2 * i - 1)))?;
    powi(&base, tetra(big_n))
}

pub(super) fn records() -> Vec<IdentityRecord> {
    let r = IdentityRecord::det_rec;
    let rat_p = |name| (name, Domain::Scalar(Elem::Rat));
    let xy_p = [("x", Domain::Scalar(Elem::Int(0, 6))), ("y", Domain::Scalar(Elem::Int(0, 6)))];
    let q = ("q", Domain::Scalar(Elem::Q));
    let with = |mut rec: IdentityRecord, ps: &[(&'static str, Domain)]| {
        rec.params = ps.to_vec();
        rec.tags = &["binomial"];
        rec
    };
    let tsscpp2 = |id, m: usize, build, rhs| {
        with(r(id, "TSSCPP2 sum of binomials with x+2i-j < r <= x+m+2j-i", build, rhs), &[(
            "x",
            Domain::Scalar(Elem::Int(0, 6)),
        )])
        .sizes(m.max(1), 5)
    };
    let mut mrr_factor_rec = IdentityRecord::custom("mrr-factor", "Z_{2n}=T_n R_n and Z_{2n-1}=2 T_n R_{n-1}", mrr_factor)
        .param("x", Domain::Scalar(Elem::Rat))
        .param("mu", Domain::Scalar(Elem::Rat))
        .param("nu", Domain::Scalar(Elem::Rat));
    mrr_factor_rec.tags = &["binomial"];
    vec![
        mrr_factor_rec,
        with(r("mrr", "det(binom(mu+i+j, 2i-j)) with (mu+i+1)_{fl((i+1)/2)}", mrr, mrr_rhs), &[rat_p("mu")]),
        with(r("rn", "det(binom(mu+i+j, 2i-j) + 2 binom(mu+i+j+2, 2i-j+1))", rn, rn_rhs), &[rat_p("mu")]),
        with(r("ab", "det(binom(x+i+j, 2i-j) + binom(y+i+j, 2i-j))", ab, ab_rhs), &[rat_p("x"), rat_p("y")]),
        with(r("chu1", "det(binom(c+x_i+i+j, 2i-j) + binom(c-x_i+i+j, 2i-j))", chu1, chu1_rhs), &[
            ("X", Domain::List(Elem::Rat, 0)),
            rat_p("c"),
        ]),
        with(r("chu2", "rational multiple of binom(c+i+j+1/2, 2i-j)", chu2, chu2_rhs), &[rat_p("c")]),
        with(r("krat-xy", "det((x+y+i+j-1)!/((x+2i-j)!(y+2j-i)!))", krat_xy, krat_xy_rhs), &xy_p),
        with(r("qkrat", "q-analogue with (-q^{x+y+1};q)_{i+j}", qkrat, qkrat_rhs), &[xy_p[0], xy_p[1], q]),
        with(r("anst", "Andrews-Stanton determinant with (E/xq^i;q^2)_{i-j}", anst, anst_rhs), &[
            rat_p("x"),
            rat_p("E"),
            q,
        ]),
        with(r("tsscpp1", "det with (y-x+3j-3i) and an alternating sum on the right", tsscpp1, tsscpp1_rhs), &xy_p),
        with(
            r("qtsscpp1", "q-analogue with (1-q^{y+2j-i}-q^{y+2j-i+1}+q^{x+y+i+j+1})", qtsscpp1, qtsscpp1_rhs),
            &[xy_p[0], xy_p[1], q],
        ),
        tsscpp2("tsscpp2-m0", 0, tsscpp2_m0, tsscpp2_m0_rhs),
        tsscpp2("tsscpp2-m1", 1, tsscpp2_m1, tsscpp2_m1_rhs),
        tsscpp2("tsscpp2-m2", 2, tsscpp2_m2, tsscpp2_m2_rhs),
        tsscpp2("tsscpp2-m3", 3, tsscpp2_m3, tsscpp2_m3_rhs),
        tsscpp2("tsscpp2-m4", 4, tsscpp2_m4, tsscpp2_m4_rhs),
        with(r("pentagon", "det(binom(x+y+j, x-i+2j) - binom(x+y+j, x+i+2j))", pentagon, pentagon_rhs), &xy_p),
        with(r("fukr2", "mixture of two binomial matrices, row l taken from the second", fukr2, fukr2_rhs), &[
            ("m", Domain::Scalar(Elem::Int(1, 6))),
            ("l", Domain::IntUpToN(1, 0)),
        ]),
        with(r("bombieri-xbc", "Delta(x;b,c) block determinant with b = n - c", bombieri_xbc, bombieri_xbc_rhs), &[
            ("c", Domain::IntUpToN(0, 0)),
            rat_p("x"),
        ])
        .sizes(1, 8),
        with(r("bombieri-conj", "binom(j1,i1) binom(j2,i2) over a triangle and a lozenge; n = N", bombieri_conj, bombieri_conj_rhs), &[(
            "l",
            Domain::Scalar(Elem::Int(1, 2)),
        )])
        .sizes(1, 2)
        .abs_only(),
        with(r("poorten", "(-1)^{i1-j1} binom(-x(N-j2), i1-j1) binom(j2, i2); n = N", poorten, poorten_rhs), &[
            ("l", Domain::Scalar(Elem::Int(1, 2))),
            rat_p("x"),
        ])
        .sizes(1, 2)
        .abs_only(),
    ]
}
