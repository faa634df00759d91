use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use crate::{Error, Rational, Result, Scalar};

/// Reduced quotient `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = Poly::gcd(&num, &den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lead = den.leading().recip();
        Ok(RationalFunction { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero(format!("pole at {x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative() * self.den.clone() - self.num.clone() * self.den.derivative();
        Self::new(n, self.den.clone() * self.den.clone()).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.to_string_in(var);
        }
        format!("({})/({})", self.num.to_string_in(var), self.den.to_string_in(var))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num + rhs.num, self.den).expect("nonzero denominator");
        }
        let n = self.num * rhs.den.clone() + rhs.num * self.den.clone();
        Self::new(n, self.den * rhs.den).expect("nonzero denominator")
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.num, self.den * rhs.den).expect("nonzero denominator")
    }
}

impl Div for RationalFunction {
    type Output = Self;
    /// Panics on division by zero; use [`Scalar::exact_div`] for a checked form.
    fn div(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.den, self.den * rhs.num).expect("division by zero rational function")
    }
}

impl Scalar for RationalFunction {
    const IS_FIELD: bool = true;
    const PREFER_GAUSS: bool = true;

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.clone() / rhs.clone())
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_poly(Poly::from_i64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn normalization() {
        let f = RationalFunction::new(Poly::from_ints(&[-2, 0, 2]), Poly::from_ints(&[2, 2])).unwrap();
        assert_eq!(f.num(), &Poly::from_ints(&[-1, 1]));
        assert_eq!(f.den(), &Poly::one());
        let g = RationalFunction::new(Poly::from_ints(&[1]), Poly::from_ints(&[4, 2])).unwrap();
        assert_eq!(g.den(), &Poly::from_ints(&[2, 1]));
        assert_eq!(g.num(), &Poly::constant(rat(1, 2)));
    }

    #[test]
    fn arithmetic() {
        let a = RationalFunction::new(Poly::one(), Poly::x()).unwrap();
        let b = RationalFunction::new(Poly::one(), Poly::linear(int(1))).unwrap();
        let s = a.clone() - b;
        // 1/x - 1/(x+1) = 1/(x(x+1))
        assert_eq!(s, RationalFunction::new(Poly::one(), Poly::from_ints(&[0, 1, 1])).unwrap());
        assert_eq!(a.derivative(), RationalFunction::new(Poly::from_ints(&[-1]), Poly::from_ints(&[0, 0, 1])).unwrap());
        assert_eq!(s.eval(&int(2)).unwrap(), rat(1, 6));
        assert!(s.eval(&int(0)).is_err());
    }
}
