use std::fmt;

use num_traits::{One, Zero};

use super::{int, poly::Poly};
use crate::{Error, Rational, Result};

/// Truncated Laurent series `sum_{e=valuation}^{order-1} c_e t^e + O(t^order)`.
///
/// Coefficient index `i` holds the exponent `valuation + i`. The truncation
/// order is chosen by the caller and never silently extended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    valuation: i64,
    coeffs: Vec<Rational>,
    order: i64,
}

impl Series {
    pub fn new(valuation: i64, mut coeffs: Vec<Rational>, order: i64) -> Self {
        let valuation = valuation.min(order);
        coeffs.resize((order - valuation) as usize, Rational::zero());
        Series { valuation, coeffs, order }
    }

    pub fn from_poly(p: &Poly, order: i64) -> Self {
        Self::new(0, p.coeffs().to_vec(), order.max(0))
    }

    pub fn monomial(c: Rational, exp: i64, order: i64) -> Self {
        let mut s = Self::new(exp.min(order), Vec::new(), order);
        if exp < order {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^e`; errors if `e` lies beyond the truncation order.
    pub fn coeff(&self, e: i64) -> Result<Rational> {
        if e >= self.order {
            return Err(Error::Truncation(format!("coefficient of t^{e} requested, series known to O(t^{})", self.order)));
        }
        if e < self.valuation {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(e - self.valuation) as usize].clone())
    }

    pub fn constant_term(&self) -> Result<Rational> {
        self.coeff(0)
    }

    /// Drop leading zero coefficients, raising the valuation.
    fn normalized(&self) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        Series { valuation: self.valuation + skip as i64, coeffs: self.coeffs[skip..].to_vec(), order: self.order }
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        let keep = (order - self.valuation).max(0) as usize;
        Self::new(self.valuation, self.coeffs[..keep.min(self.coeffs.len())].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series { valuation: self.valuation, coeffs: self.coeffs.iter().map(|a| a * c).collect(), order: self.order }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, rhs: &Series) -> Self {
        let order = self.order.min(rhs.order);
        let val = self.valuation.min(rhs.valuation).min(order);
        let mut c = vec![Rational::zero(); (order - val) as usize];
        for s in [self, rhs] {
            for (i, a) in s.coeffs.iter().enumerate() {
                let e = s.valuation + i as i64;
                if e < order {
                    c[(e - val) as usize] += a;
                }
            }
        }
        Series::new(val, c, order)
    }

    pub fn sub(&self, rhs: &Series) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Series) -> Self {
        let a = self.normalized();
        let b = rhs.normalized();
        let order = (a.order + b.valuation).min(b.order + a.valuation);
        let val = a.valuation + b.valuation;
        let len = (order - val).max(0) as usize;
        let mut c = vec![Rational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
                c[i + j] += x * y;
            }
        }
        Series::new(val, c, order)
    }

    /// Multiplicative inverse; the lowest known coefficient must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let a = self.normalized();
        if a.coeffs.is_empty() {
            return Err(Error::DivisionByZero("inverse of a series with no nonzero known coefficient".into()));
        }
        let len = a.coeffs.len();
        let inv0 = a.coeffs[0].recip();
        let mut b = vec![Rational::zero(); len];
        b[0] = inv0.clone();
        for k in 1..len {
            let mut s = Rational::zero();
            for j in 1..=k {
                s += &a.coeffs[j] * &b[k - j];
            }
            b[k] = -s * &inv0;
        }
        Ok(Series::new(-a.valuation, b, -a.valuation + len as i64))
    }

    pub fn div(&self, rhs: &Series) -> Result<Self> {
        Ok(self.mul(&rhs.inverse()?))
    }

    /// `self(inner)`; needs `self` without negative powers and `inner` of valuation at least one.
    pub fn compose(&self, inner: &Series) -> Result<Self> {
        let g = inner.normalized();
        if g.valuation < 1 {
            return Err(Error::Domain("composition needs an inner series of positive valuation".into()));
        }
        let f = self.normalized();
        if f.valuation < 0 {
            return Err(Error::Domain("composition of a series with negative powers".into()));
        }
        let order = if f.order > 1 { (g.valuation * f.order).min(g.order) } else { g.valuation * f.order };
        let mut acc = Series::new(0, Vec::new(), order);
        let mut pw = Series::one(order);
        for e in 0..f.order {
            if e >= f.valuation {
                let c = &f.coeffs[(e - f.valuation) as usize];
                if !c.is_zero() {
                    acc = acc.add(&pw.scale(c));
                }
            }
            pw = pw.mul(&g).truncate(order);
            if pw.valuation >= order {
                break;
            }
        }
        Ok(acc.truncate(order))
    }

    pub fn derive(&self) -> Self {
        let c = self.coeffs.iter().enumerate().map(|(i, a)| a * int(self.valuation + i as i64)).collect();
        Series::new(self.valuation - 1, c, self.order - 1)
    }

    pub fn pow_int(&self, k: i64) -> Result<Self> {
        let (mut base, mut e) = if k < 0 { (self.inverse()?, k.unsigned_abs()) } else { (self.clone(), k as u64) };
        let rel = base.normalized();
        let mut acc = Series::one(rel.order - rel.valuation);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*t^{}", self.valuation + i as i64)?;
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(t^{})", self.order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Mul,
    Div,
    Compose,
    Derive,
    PowInt,
    ConstantTerm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesValue {
    Series(Series),
    Scalar(Rational),
}

/// Dispatch a series operation; binary ops read `operands[1]`, `PowInt` reads `aux`.
pub fn series_arith(op: SeriesOp, operands: &[Series], aux: i64) -> Result<SeriesValue> {
    let first = operands.first().ok_or_else(|| Error::Insufficient("no operand".into()))?;
    let second = || operands.get(1).ok_or_else(|| Error::Insufficient("missing second operand".into()));
    Ok(match op {
        SeriesOp::Mul => SeriesValue::Series(first.mul(second()?)),
        SeriesOp::Div => SeriesValue::Series(first.div(second()?)?),
        SeriesOp::Compose => SeriesValue::Series(first.compose(second()?)?),
        SeriesOp::Derive => SeriesValue::Series(first.derive()),
        SeriesOp::PowInt => SeriesValue::Series(first.pow_int(aux)?),
        SeriesOp::ConstantTerm => SeriesValue::Scalar(first.constant_term()?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{factorial, rat};

    fn exp_minus_one(order: i64) -> Series {
        let c = (1..order).map(|k| factorial(k).unwrap().recip()).collect();
        Series::new(1, c, order)
    }

    #[test]
    fn constant_term_of_laurent() {
        let s = Series::new(-1, vec![int(1), int(2), int(3)], 2);
        assert_eq!(s.constant_term().unwrap(), int(2));
    }

    #[test]
    fn compose_example() {
        let f = Series::monomial(int(1), 2, 4);
        let g = Series::new(1, vec![int(1), int(1)], 4);
        let h = f.compose(&g).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.coeff(2).unwrap(), int(1));
        assert_eq!(h.coeff(3).unwrap(), int(2));
        assert_eq!(h.coeff(1).unwrap(), int(0));
    }

    #[test]
    fn bernoulli_generating_function() {
        let z = Series::monomial(int(1), 1, 5);
        let q = z.div(&exp_minus_one(5)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.coeff(0).unwrap(), int(1));
        assert_eq!(q.coeff(1).unwrap(), rat(-1, 2));
        assert_eq!(q.coeff(2).unwrap(), rat(1, 12));
        assert_eq!(q.coeff(3).unwrap(), int(0));
        assert!(q.coeff(4).is_err());
    }

    #[test]
    fn pow_and_derive() {
        let f = Series::new(0, vec![int(1), int(1)], 6);
        let inv2 = f.pow_int(-2).unwrap();
        // (1+t)^{-2} = 1 - 2t + 3t^2 - 4t^3 + ...
        assert_eq!(inv2.coeff(3).unwrap(), int(-4));
        let d = f.pow_int(3).unwrap().derive();
        assert_eq!(d.coeff(1).unwrap(), int(6));
        let laurent = Series::new(-2, vec![int(1)], 3).derive();
        assert_eq!(laurent.coeff(-3).unwrap(), int(-2));
    }
}
