use num_traits::{One, Zero};

use super::poly::Poly;
use super::series::Series;
use super::{binomial_i, factorial, factorial_int, int, powu, rat};
use crate::{Error, Rational, Result};

/// `B_0, ..., B_{count-1}` from `z/(e^z - 1)`.
pub fn bernoulli_numbers(count: usize) -> Vec<Rational> {
    let order = count as i64 + 1;
    let z = Series::monomial(Rational::one(), 1, order);
    let em1 = Series::new(1, (1..order).map(|k| factorial(k).unwrap().recip()).collect(), order);
    let q = z.div(&em1).expect("e^z - 1 has valuation one");
    (0..count as i64).map(|k| q.coeff(k).unwrap() * factorial(k).unwrap()).collect()
}

pub fn bernoulli(n: usize) -> Rational {
    bernoulli_numbers(n + 1).pop().unwrap()
}

/// `E_n` with `1/cos z = sum E_{2k} z^{2k}/(2k)!`; odd `n` gives zero.
pub fn euler_even(n: usize) -> Rational {
    euler_numbers(n + 1).pop().unwrap()
}

/// `E_0, ..., E_{count-1}` (odd entries are zero).
pub fn euler_numbers(count: usize) -> Vec<Rational> {
    let order = count as i64;
    let cos: Vec<Rational> = (0..order)
        .map(|k| if k % 2 == 0 { super::sign(k / 2) * factorial(k).unwrap().recip() } else { Rational::zero() })
        .collect();
    let sec = Series::new(0, cos, order).inverse().expect("cos has constant term one");
    (0..order).map(|k| sec.coeff(k).unwrap() * factorial(k).unwrap()).collect()
}

/// Stirling numbers of the second kind.
pub fn stirling2(m: usize, k: usize) -> Rational {
    let mut row = vec![Rational::one()];
    for i in 1..=m {
        let mut next = vec![Rational::zero(); i + 1];
        for j in 1..=i {
            let keep = if j < row.len() { int(j as i64) * &row[j] } else { Rational::zero() };
            next[j] = keep + &row[j - 1];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(Rational::zero)
}

/// Signed Stirling numbers of the first kind: `x(x-1)...(x-m+1) = sum s(m,k) x^k`.
pub fn stirling1(m: usize, k: usize) -> Rational {
    let mut p = Poly::one();
    for i in 0..m {
        p = p * Poly::linear(int(-(i as i64)));
    }
    p.coeff(k)
}

/// Number of `n x n` alternating sign matrices, `prod_{i<n} (3i+1)!/(n+i)!`.
pub fn asm_count(n: usize) -> Rational {
    let n = n as u64;
    (0..n).fold(Rational::one(), |acc, i| {
        acc * Rational::new(factorial_int(3 * i + 1), factorial_int(n + i))
    })
}

pub fn catalan(n: usize) -> Rational {
    binomial_i(2 * n as i64, n as i64) / int(n as i64 + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    Bernoulli,
    EulerEven,
    Stirling2,
    Stirling1,
    Asm,
    Catalan,
}

/// Indexed access to the named sequences; Stirling kinds take `(m, k)`.
pub fn special_sequence(kind: SeqKind, args: &[usize]) -> Result<Rational> {
    let arg = |i: usize| args.get(i).copied().ok_or_else(|| Error::Insufficient(format!("{kind:?} needs {} index arguments", i + 1)));
    Ok(match kind {
        SeqKind::Bernoulli => bernoulli(arg(0)?),
        SeqKind::EulerEven => euler_even(arg(0)?),
        SeqKind::Asm => asm_count(arg(0)?),
        SeqKind::Catalan => catalan(arg(0)?),
        SeqKind::Stirling1 | SeqKind::Stirling2 => {
            let (m, k) = (arg(0)?, arg(1)?);
            if k > m {
                return Err(Error::Domain(format!("Stirling index k = {k} > m = {m}")));
            }
            if kind == SeqKind::Stirling1 {
                stirling1(m, k)
            } else {
                stirling2(m, k)
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    /// `sum_k S(m,k) x^k`
    Bell,
    /// `sum_k m!/(k!(m-2k)!) (-1/2)^k x^{m-2k}`
    Hermite,
    /// `sum_j (-1)^j C(m-j, j) (2x)^{m-2j}`
    ChebyshevU,
}

pub fn special_poly(kind: PolyKind, m: usize) -> Poly {
    match kind {
        PolyKind::Bell => Poly::new((0..=m).map(|k| stirling2(m, k)).collect()),
        PolyKind::Hermite => {
            let mut c = vec![Rational::zero(); m + 1];
            for k in 0..=m / 2 {
                let f = factorial(m as i64).unwrap()
                    / (factorial(k as i64).unwrap() * factorial((m - 2 * k) as i64).unwrap());
                c[m - 2 * k] = f * powu(&rat(-1, 2), k as u64);
            }
            Poly::new(c)
        }
        PolyKind::ChebyshevU => {
            let mut c = vec![Rational::zero(); m + 1];
            for j in 0..=m / 2 {
                let b = binomial_i((m - j) as i64, j as i64) * powu(&int(2), (m - 2 * j) as u64);
                c[m - 2 * j] = super::sign(j as i64) * b;
            }
            Poly::new(c)
        }
    }
}

/// Newton divided differences `f[x_0], f[x_0,x_1], ..., f[x_0..x_k]`.
pub fn divided_differences(f: &Poly, points: &[Rational]) -> Result<Vec<Rational>> {
    for i in 0..points.len() {
        for j in 0..i {
            if points[i] == points[j] {
                return Err(Error::DuplicatePoint(i));
            }
        }
    }
    let mut col: Vec<Rational> = points.iter().map(|x| f.eval(x)).collect();
    let mut out = Vec::with_capacity(points.len());
    for level in 0..points.len() {
        out.push(col[0].clone());
        col = (0..col.len() - 1)
            .map(|i| (&col[i + 1] - &col[i]) / (&points[i + level + 1] - &points[i]))
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_examples() {
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert_eq!(asm_count(4), int(42));
        assert_eq!(special_sequence(SeqKind::Asm, &[8]).unwrap(), int(10850216));
        assert_eq!(stirling2(3, 2), int(3));
        assert_eq!(stirling1(3, 1), int(2));
        assert_eq!(stirling1(3, 2), int(-3));
        assert_eq!(euler_even(4), int(5));
        assert_eq!(euler_even(6), int(61));
        assert_eq!(euler_even(3), int(0));
        assert_eq!(catalan(4), int(14));
        assert!(special_sequence(SeqKind::Stirling2, &[2, 3]).is_err());
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(special_poly(PolyKind::Bell, 1), Poly::x());
        assert_eq!(special_poly(PolyKind::Bell, 0), Poly::one());
        assert_eq!(special_poly(PolyKind::Hermite, 2), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(special_poly(PolyKind::ChebyshevU, 1), Poly::from_ints(&[0, 2]));
        assert_eq!(special_poly(PolyKind::ChebyshevU, 2), Poly::from_ints(&[-1, 0, 4]));
    }

    #[test]
    fn divided_difference_examples() {
        let sq = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(divided_differences(&sq, &[int(1), int(2)]).unwrap(), vec![int(1), int(3)]);
        let cube = Poly::from_ints(&[0, 0, 0, 1]);
        let pts: Vec<_> = (0..4).map(int).collect();
        assert_eq!(divided_differences(&cube, &pts).unwrap(), vec![int(0), int(1), int(3), int(1)]);
        let c = Poly::constant(int(7));
        assert_eq!(divided_differences(&c, &pts).unwrap(), vec![int(7), int(0), int(0), int(0)]);
        assert_eq!(divided_differences(&c, &[int(1), int(1)]), Err(Error::DuplicatePoint(1)));
    }
}
