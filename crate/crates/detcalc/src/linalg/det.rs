use std::str::FromStr;

use super::Matrix;
use crate::{Error, Result, Scalar};

pub const LAPLACE_CAP: usize = 7;
pub const PERMANENT_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Laplace,
    Gauss,
    Bareiss,
    Condensation,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Laplace, Strategy::Gauss, Strategy::Bareiss, Strategy::Condensation];

    /// Fraction-free elimination for rings, plain elimination for fields of fractions.
    pub fn default_for<T: Scalar>() -> Strategy {
        if T::PREFER_GAUSS {
            Strategy::Gauss
        } else {
            Strategy::Bareiss
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Laplace => "laplace",
            Strategy::Gauss => "gauss",
            Strategy::Bareiss => "bareiss",
            Strategy::Condensation => "condensation",
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown strategy `{s}`")))
    }
}

pub fn det<T: Scalar>(m: &Matrix<T>, strategy: Strategy) -> Result<T> {
    let n = m.require_square()?;
    match strategy {
        Strategy::Laplace => {
            if n > LAPLACE_CAP {
                return Err(Error::SizeCap { what: "laplace expansion", size: n, cap: LAPLACE_CAP });
            }
            let cols: Vec<usize> = (0..n).collect();
            Ok(laplace(m, 0, &cols))
        }
        Strategy::Gauss => gauss(m),
        Strategy::Bareiss => bareiss(m),
        Strategy::Condensation => condensation(m),
    }
}

fn laplace<T: Scalar>(m: &Matrix<T>, row: usize, cols: &[usize]) -> T {
    if cols.is_empty() {
        return T::one();
    }
    let mut acc = T::zero();
    for (k, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a.clone() * laplace(m, row + 1, &rest);
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn gauss<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    if !T::IS_FIELD {
        return Err(Error::NotAField("gaussian elimination"));
    }
    let n = m.rows();
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].exact_div(&pivot).expect("field division by nonzero pivot");
            for j in k + 1..n {
                let t = f.clone() * a[k][j].clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
    }
    Ok(det)
}

fn bareiss<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(T::zero());
            };
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num
                    .exact_div(&prev)
                    .ok_or_else(|| Error::Domain("inexact division in fraction-free elimination".into()))?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

fn fallback_det<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    if T::IS_FIELD {
        gauss(m)
    } else {
        bareiss(m)
    }
}

/// Dodgson condensation over all contiguous minors, recomputing any block
/// whose central minor vanishes by elimination on that block.
fn condensation<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    // prev2 holds order k-2 minors, prev1 order k-1 minors, indexed by top-left corner.
    let mut prev2: Vec<Vec<T>> = vec![vec![T::one(); n + 1]; n + 1];
    let mut prev1: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for k in 2..=n {
        let size = n - k + 1;
        let mut cur = vec![vec![T::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                let centre = &prev2[i + 1][j + 1];
                let num = prev1[i][j].clone() * prev1[i + 1][j + 1].clone()
                    - prev1[i][j + 1].clone() * prev1[i + 1][j].clone();
                cur[i][j] = if centre.is_zero() {
                    fallback_det(&m.block(i, j, k))?
                } else {
                    num.exact_div(centre)
                        .ok_or_else(|| Error::Domain("inexact division in condensation".into()))?
                };
            }
        }
        prev2 = prev1;
        prev1 = cur;
    }
    Ok(prev1[0][0].clone())
}

/// Both sides of the Desnanot identity for a square matrix of order at least 2:
/// `det A * det A(1,n|1,n)` and `det A(1|1) det A(n|n) - det A(n|1) det A(1|n)`.
pub fn desnanot_sides<T: Scalar>(m: &Matrix<T>) -> Result<(T, T)> {
    let n = m.require_square()?;
    if n < 2 {
        return Err(Error::Dimension("Desnanot identity needs order at least 2".into()));
    }
    let d = |a: &Matrix<T>| bareiss(a);
    let last = n - 1;
    let lhs = d(m)? * d(&m.minor(&[0, last], &[0, last]))?;
    let rhs = d(&m.minor(&[0], &[0]))? * d(&m.minor(&[last], &[last]))?
        - d(&m.minor(&[last], &[0]))? * d(&m.minor(&[0], &[last]))?;
    Ok((lhs, rhs))
}

/// Permanent by Ryser's inclusion-exclusion over column subsets.
pub fn permanent<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    let n = m.require_square()?;
    if n > PERMANENT_CAP {
        return Err(Error::SizeCap { what: "permanent", size: n, cap: PERMANENT_CAP });
    }
    if n == 0 {
        return Ok(T::one());
    }
    let mut total = T::zero();
    for mask in 1u32..(1 << n) {
        let mut prod = T::one();
        for i in 0..n {
            let s = (0..n).filter(|j| mask >> j & 1 == 1).fold(T::zero(), |acc, j| acc + m.get(i, j).clone());
            prod = prod * s;
        }
        if (n as u32 - mask.count_ones()) % 2 == 0 {
            total = total + prod;
        } else {
            total = total - prod;
        }
    }
    Ok(total)
}
