//! Hankel determinants, J-fractions and the moment machinery linking them.

use num_traits::{One, Zero};

use crate::exactnum::series::Series;
use crate::exactnum::{
    bernoulli_numbers, binomial_i, euler_numbers, powu, rat, special_poly, PolyKind,
};
use crate::linalg::{det, Strategy};
use crate::{Error, MatrixQ, Rational, Result};

/// Moment sequence `mu_0, mu_1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSeq {
    pub values: Vec<Rational>,
}

impl From<Vec<Rational>> for MomentSeq {
    fn from(values: Vec<Rational>) -> Self {
        MomentSeq { values }
    }
}

/// Continued fraction `mu0 / (1 + a_0 x - b_1 x^2 / (1 + a_1 x - b_2 x^2 / ...))`.
///
/// `b[k]` stores `b_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFraction {
    pub mu0: Rational,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

/// `(s[i+j+offset])_{0 <= i,j < n}`.
pub fn hankel_matrix(s: &MomentSeq, n: usize, offset: usize) -> Result<MatrixQ> {
    if n > 0 && s.values.len() < offset + 2 * n - 1 {
        return Err(Error::Insufficient(format!(
            "Hankel matrix of order {n} at offset {offset} needs {} terms, got {}",
            offset + 2 * n - 1,
            s.values.len()
        )));
    }
    Ok(MatrixQ::from_fn(n, n, |i, j| s.values[i + j + offset].clone()))
}

pub fn hankel_det(s: &MomentSeq, n: usize, offset: usize) -> Result<Rational> {
    det(&hankel_matrix(s, n, offset)?, Strategy::Bareiss)
}

/// Order-`k` Hankel determinant with the last column shifted one step right.
fn shifted_hankel(s: &MomentSeq, k: usize) -> Result<Rational> {
    if k == 0 {
        return Ok(Rational::zero());
    }
    let need = 2 * k;
    if s.values.len() < need {
        return Err(Error::Insufficient(format!("shifted Hankel determinant of order {k} needs {need} terms")));
    }
    let m = MatrixQ::from_fn(k, k, |i, j| {
        let col = if j + 1 == k { k } else { j };
        s.values[i + col].clone()
    });
    det(&m, Strategy::Bareiss)
}

/// Recover `mu0`, `a_0..a_depth`, `b_1..b_depth` from the moments.
///
/// `b_k = H_{k+1} H_{k-1} / H_k^2`; the partial sums of the `a_k` are the
/// ratios of shifted to plain Hankel determinants, with signs matching
/// `1 + a_k x` in the fraction.
pub fn jfraction_from_moments(s: &MomentSeq, depth: usize) -> Result<JFraction> {
    if s.values.len() < 2 * depth + 2 {
        return Err(Error::Insufficient(format!("depth {depth} needs {} moments", 2 * depth + 2)));
    }
    let mut h = vec![Rational::one()];
    for k in 1..=depth + 1 {
        let hk = hankel_det(s, k, 0)?;
        if hk.is_zero() {
            return Err(Error::Degenerate { index: k, what: format!("Hankel determinant H_{k} vanishes") });
        }
        h.push(hk);
    }
    let mut a = Vec::with_capacity(depth + 1);
    let mut prev_ratio = Rational::zero();
    for k in 1..=depth + 1 {
        let ratio = shifted_hankel(s, k)? / &h[k];
        a.push(-(&ratio - &prev_ratio));
        prev_ratio = ratio;
    }
    let b = (1..=depth).map(|k| &h[k + 1] * &h[k - 1] / (&h[k] * &h[k])).collect();
    Ok(JFraction { mu0: s.values[0].clone(), a, b })
}

/// Expand the fraction into its first `count` moments.
pub fn moments_from_jfraction(j: &JFraction, count: usize) -> Result<MomentSeq> {
    if j.a.len() < count / 2 || j.b.len() < count.saturating_sub(1) / 2 {
        return Err(Error::Insufficient(format!(
            "{count} moments need {} a-coefficients and {} b-coefficients",
            count / 2,
            count.saturating_sub(1) / 2
        )));
    }
    let order = count as i64;
    let depth = j.a.len().max(j.b.len() + 1);
    let mut tail: Option<Series> = None;
    for k in (0..depth).rev() {
        let a = j.a.get(k).cloned().unwrap_or_else(Rational::zero);
        let mut level = Series::new(0, vec![Rational::one(), a], order);
        if let (Some(t), Some(b)) = (&tail, j.b.get(k)) {
            let frac = Series::monomial(b.clone(), 2, order).div(t)?;
            level = level.sub(&frac.truncate(order));
        }
        tail = Some(level);
    }
    let top = tail.expect("depth at least one");
    let gf = Series::monomial(j.mu0.clone(), 0, order).div(&top)?;
    Ok(MomentSeq { values: (0..order).map(|k| gf.coeff(k)).collect::<Result<_>>()? })
}

/// `mu0^n b_1^{n-1} b_2^{n-2} ... b_{n-1}`.
pub fn heilermann_product(j: &JFraction, n: usize) -> Result<Rational> {
    if n >= 1 && j.b.len() < n - 1 {
        return Err(Error::Insufficient(format!("order {n} needs {} b-coefficients", n - 1)));
    }
    let mut acc = powu(&j.mu0, n as u64);
    for k in 1..n {
        acc *= powu(&j.b[k - 1], (n - k) as u64);
    }
    Ok(acc)
}

/// `det(sum_k C(i+j,k) s_k x^{i+j-k})`, which equals `det(s_{i+j})`.
pub fn hankel_x_transform(s: &MomentSeq, x: &Rational, n: usize) -> Result<Rational> {
    if n > 0 && s.values.len() < 2 * n - 1 {
        return Err(Error::Insufficient(format!("order {n} needs {} terms", 2 * n - 1)));
    }
    let m = MatrixQ::from_fn(n, n, |i, j| {
        let d = i + j;
        (0..=d).fold(Rational::zero(), |acc, k| {
            acc + binomial_i(d as i64, k as i64) * &s.values[k] * powu(x, (d - k) as u64)
        })
    });
    det(&m, Strategy::Bareiss)
}

/// Fraction whose moments are `B_{k+2}`: `mu0 = 1/6`, `a = 0`,
/// `b_i = -i(i+1)^2(i+2) / (4(2i+1)(2i+3))`.
pub fn bernoulli_jfraction(depth: usize) -> JFraction {
    let b = (1..=depth as i64)
        .map(|i| rat(-i * (i + 1) * (i + 1) * (i + 2), 4 * (2 * i + 1) * (2 * i + 3)))
        .collect();
    JFraction { mu0: rat(1, 6), a: vec![Rational::zero(); depth + 1], b }
}

/// Named sequences for the command line; `x` is the polynomial argument of
/// the Bell and Hermite families.
pub fn named_sequence(name: &str, len: usize, x: &Rational) -> Result<MomentSeq> {
    let values = match name {
        "bernoulli" => bernoulli_numbers(len),
        "euler" => euler_numbers(2 * len).into_iter().step_by(2).collect(),
        "bell" => (0..len).map(|m| special_poly(PolyKind::Bell, m).eval(x)).collect(),
        "hermite" => (0..len).map(|m| special_poly(PolyKind::Hermite, m).eval(x)).collect(),
        "catalan" => (0..len).map(crate::exactnum::catalan).collect(),
        _ => return Err(Error::Parse(format!("unknown sequence `{name}`"))),
    };
    Ok(MomentSeq { values })
}

/// Sequence needed to fill `n` Hankel orders at `offset`, plus J-fraction data.
pub fn terms_needed(n: usize, offset: usize) -> usize {
    (offset + 2 * n).max(2 * n + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn seq(v: &[i64]) -> MomentSeq {
        v.iter().map(|&x| int(x)).collect::<Vec<_>>().into()
    }

    #[test]
    fn matrix_examples() {
        let b = named_sequence("bernoulli", 8, &int(0)).unwrap();
        assert_eq!(hankel_matrix(&b, 1, 2).unwrap().get(0, 0), &rat(1, 6));
        let e = named_sequence("euler", 4, &int(0)).unwrap();
        assert_eq!(hankel_det(&e, 2, 0).unwrap(), int(4));
        assert_eq!(hankel_det(&e, 0, 0).unwrap(), int(1));
    }

    #[test]
    fn bernoulli_fraction() {
        let b = named_sequence("bernoulli", 16, &int(0)).unwrap();
        let shifted: MomentSeq = b.values[2..].to_vec().into();
        let j = jfraction_from_moments(&shifted, 5).unwrap();
        assert_eq!(j.b[0], rat(-1, 5));
        assert_eq!(j, bernoulli_jfraction(5));
        assert_eq!(heilermann_product(&j, 2).unwrap(), rat(-1, 180));
    }

    #[test]
    fn catalan_fraction() {
        let c = seq(&[1, 1, 2, 5, 14, 42, 132, 429]);
        let j = jfraction_from_moments(&c, 3).unwrap();
        assert!(j.b.iter().all(|b| b == &int(1)));
        assert_eq!(j.a, vec![int(-1), int(-2), int(-2), int(-2)]);
        assert_eq!(moments_from_jfraction(&j, 8).unwrap(), c);
    }

    #[test]
    fn simple_expansions() {
        let geo = JFraction { mu0: int(1), a: vec![int(-1), int(0), int(0)], b: vec![int(0), int(0)] };
        assert_eq!(moments_from_jfraction(&geo, 5).unwrap(), seq(&[1, 1, 1, 1, 1]));
        let flat = JFraction { mu0: int(1), a: vec![int(0); 3], b: vec![int(0); 2] };
        assert_eq!(moments_from_jfraction(&flat, 5).unwrap(), seq(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn degenerate_reports_index() {
        let s = seq(&[1, 0, 0, 0]);
        assert!(matches!(jfraction_from_moments(&s, 1), Err(Error::Degenerate { index: 2, .. })));
    }

    #[test]
    fn x_transform_invariance() {
        let b = named_sequence("bernoulli", 8, &int(0)).unwrap();
        let shifted: MomentSeq = b.values[2..].to_vec().into();
        let direct = hankel_det(&shifted, 3, 0).unwrap();
        assert_eq!(hankel_x_transform(&shifted, &int(1), 3).unwrap(), direct);
        assert_eq!(hankel_x_transform(&shifted, &rat(-2, 3), 1).unwrap(), rat(1, 6));
    }
}
