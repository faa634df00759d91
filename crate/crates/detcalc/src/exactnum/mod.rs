//! Exact scalars and the special functions the identities are written in.

pub mod poly;
pub mod ratfn;
pub mod series;
pub mod special;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

pub use special::{
    asm_count, bernoulli, bernoulli_numbers, catalan, divided_differences, euler_even, euler_numbers, special_poly,
    special_sequence, stirling1, stirling2, PolyKind, SeqKind,
};

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parse `"p"` or `"p/q"`, allowing surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero(format!("`{s}` has zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(big(t.parse().map_err(|_| bad())?)),
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(parse_rational).collect()
}

/// `x^e` for any integer exponent.
pub fn powi(x: &Rational, e: i64) -> Result<Rational> {
    if e < 0 {
        if x.is_zero() {
            return Err(Error::DivisionByZero("negative power of zero".into()));
        }
        Ok(powu(&x.recip(), e.unsigned_abs()))
    } else {
        Ok(powu(x, e as u64))
    }
}

pub fn powu(x: &Rational, mut e: u64) -> Rational {
    let mut base = x.clone();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn factorial_int(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!` as a rational; negative `n` is an error (the factorial has a pole).
pub fn factorial(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::Domain(format!("factorial of {n}")));
    }
    Ok(big(factorial_int(n as u64)))
}

/// `1/n!`, extended by zero to negative `n`.
pub fn recip_factorial(n: i64) -> Rational {
    if n < 0 {
        Rational::zero()
    } else {
        big(factorial_int(n as u64)).recip()
    }
}

/// Double factorial with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<Rational> {
    if n < -1 {
        return Err(Error::Domain(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(big(acc))
}

/// Generalized binomial `x(x-1)...(x-k+1)/k!`, zero for negative `k`.
pub fn binomial(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (x - int(i)) / int(i + 1);
    }
    acc
}

pub fn binomial_i(n: i64, k: i64) -> Rational {
    binomial(&int(n), k)
}

/// Rising factorial `(a)_k`; for negative `k` it is `1/((a-1)(a-2)...(a+k))`.
pub fn pochhammer(a: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        let mut acc = Rational::one();
        for i in 0..k {
            acc *= a + int(i);
        }
        Ok(acc)
    } else {
        let mut den = Rational::one();
        for i in 1..=(-k) {
            den *= a - int(i);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("({a})_{k}")));
        }
        Ok(den.recip())
    }
}

/// q-shifted factorial `(a;q)_k = (1-a)(1-aq)...(1-aq^{k-1})`.
///
/// Negative `k` uses `(a;q)_{-k} = 1/((1-a/q)(1-a/q^2)...(1-a/q^k))`, the
/// unique extension with `(a;q)_k (aq^k;q)_{-k} = 1`.
pub fn q_pochhammer(a: &Rational, q: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        let mut acc = Rational::one();
        let mut term = a.clone();
        for _ in 0..k {
            acc *= Rational::one() - &term;
            term *= q;
        }
        Ok(acc)
    } else {
        if q.is_zero() {
            return Err(Error::DivisionByZero("negative q-shifted factorial at q = 0".into()));
        }
        let qi = q.recip();
        let mut den = Rational::one();
        let mut term = a * &qi;
        for _ in 0..(-k) {
            den *= Rational::one() - &term;
            term *= &qi;
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("({a};{q})_{k}")));
        }
        Ok(den.recip())
    }
}

/// q-integer `[n]_q = (1-q^n)/(1-q)`, equal to `n` at `q = 1`.
pub fn q_int(n: i64, q: &Rational) -> Result<Rational> {
    if q.is_one() {
        return Ok(int(n));
    }
    Ok((Rational::one() - powi(q, n)?) / (Rational::one() - q))
}

/// q-factorial `[n]_q! = [1]_q[2]_q...[n]_q`; negative `n` is a pole.
pub fn q_factorial(n: i64, q: &Rational) -> Result<Rational> {
    if n < 0 {
        return Err(Error::Domain(format!("q-factorial of {n}")));
    }
    let mut acc = Rational::one();
    for i in 1..=n {
        acc *= q_int(i, q)?;
    }
    Ok(acc)
}

/// `1/[n]_q!`, extended by zero to negative `n`.
pub fn recip_q_factorial(n: i64, q: &Rational) -> Result<Rational> {
    if n < 0 {
        return Ok(Rational::zero());
    }
    let f = q_factorial(n, q)?;
    if f.is_zero() {
        return Err(Error::DivisionByZero(format!("[{n}]_q! vanishes at q = {q}")));
    }
    Ok(f.recip())
}

/// Gaussian binomial `[alpha choose k]_q`, zero for negative `k`.
///
/// Computed as a product of q-integer ratios so that `q = 1` gives the
/// ordinary binomial directly.
pub fn q_binomial(alpha: i64, k: i64, q: &Rational) -> Result<Rational> {
    if k < 0 {
        return Ok(Rational::zero());
    }
    let mut num = Rational::one();
    let mut den = Rational::one();
    for i in 0..k {
        num *= q_int(alpha - i, q)?;
        den *= q_int(i + 1, q)?;
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero(format!("[{alpha} choose {k}] at q = {q}")));
    }
    Ok(num / den)
}

/// Elementary symmetric function `e_m` of the given values.
pub fn elementary_symmetric(m: usize, xs: &[Rational]) -> Rational {
    let mut e = vec![Rational::zero(); m + 1];
    e[0] = Rational::one();
    for x in xs {
        for k in (1..=m).rev() {
            let t = &e[k - 1] * x;
            e[k] += t;
        }
    }
    e[m].clone()
}

/// Square root of a rational that is a perfect square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn product<I: IntoIterator<Item = Rational>>(it: I) -> Rational {
    it.into_iter().fold(Rational::one(), |a, b| a * b)
}

pub fn try_product<I: IntoIterator<Item = Result<Rational>>>(it: I) -> Result<Rational> {
    let mut acc = Rational::one();
    for x in it {
        acc *= x?;
    }
    Ok(acc)
}

/// Checked reciprocal.
pub fn recip(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        Err(Error::DivisionByZero("reciprocal of zero".into()))
    } else {
        Ok(x.recip())
    }
}

/// Checked quotient.
pub fn div(a: &Rational, b: &Rational) -> Result<Rational> {
    Ok(a * recip(b)?)
}
