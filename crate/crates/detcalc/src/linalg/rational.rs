use num_traits::{One, Zero};

use super::{det, Matrix, Strategy};
use crate::exactnum::int;
use crate::{Error, PolyQ, Rational, Result, Scalar};

/// Factor `M * U = L` with `U` unit upper triangular and `L` lower triangular.
///
/// Column operations only ever add multiples of earlier columns to later
/// ones, so the invariant `L = M U` holds at every step.
pub fn lu_decompose<T: Scalar>(m: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    if !T::IS_FIELD {
        return Err(Error::NotAField("LU decomposition"));
    }
    let n = m.require_square()?;
    let mut l = m.clone();
    let mut u = Matrix::<T>::identity(n);
    for k in 0..n {
        let pivot = l.get(k, k).clone();
        if pivot.is_zero() {
            return Err(Error::SingularMinor(k + 1));
        }
        for j in k + 1..n {
            if l.get(k, j).is_zero() {
                continue;
            }
            let f = l.get(k, j).exact_div(&pivot).expect("nonzero pivot");
            for i in 0..n {
                let lv = l.get(i, j).clone() - f.clone() * l.get(i, k).clone();
                l.set(i, j, lv);
                let uv = u.get(i, j).clone() - f.clone() * u.get(i, k).clone();
                u.set(i, j, uv);
            }
        }
    }
    Ok((l, u))
}

/// Right null space basis from the reduced row echelon form.
pub fn kernel_basis<T: Scalar>(m: &Matrix<T>) -> Result<Vec<Vec<T>>> {
    if !T::IS_FIELD {
        return Err(Error::NotAField("kernel computation"));
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<T>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = T::one().exact_div(&a[r][c]).expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = f.clone() * a[r][j].clone();
                    a[i][j] = a[i][j].clone() - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&fc| {
            let mut v = vec![T::zero(); cols];
            v[fc] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc].clone();
            }
            v
        })
        .collect())
}

/// `det(lambda I - M)` by the Faddeev-LeVerrier trace recursion.
pub fn char_poly(m: &Matrix<Rational>) -> Result<PolyQ> {
    let n = m.require_square()?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = Matrix::<Rational>::zeros(n, n);
    for k in 1..=n {
        let shift = Matrix::from_fn(n, n, |i, j| if i == j { coeffs[n - k + 1].clone() } else { Rational::zero() });
        mk = (m * &mk).add(&shift)?;
        coeffs[n - k] = -(m * &mk).trace() / int(k as i64);
    }
    Ok(PolyQ::new(coeffs))
}

/// Sylvester matrix of `p` and `q`, coefficients highest degree first.
pub fn sylvester(p: &PolyQ, q: &PolyQ) -> Result<Matrix<Rational>> {
    let dp = p.degree().ok_or_else(|| Error::Domain("resultant with zero first argument".into()))?;
    let Some(dq) = q.degree() else {
        return Ok(Matrix::zeros(dp.max(1), dp.max(1)));
    };
    let size = dp + dq;
    Ok(Matrix::from_fn(size, size, |i, j| {
        let (poly, deg, shift) = if i < dq { (p, dp, i) } else { (q, dq, i - dq) };
        if j >= shift && j - shift <= deg {
            poly.coeff(deg - (j - shift))
        } else {
            Rational::zero()
        }
    }))
}

/// Resultant as the Sylvester determinant, so `Res(x - c, f) = f(c)`.
pub fn resultant(p: &PolyQ, q: &PolyQ) -> Result<Rational> {
    det(&sylvester(p, q)?, Strategy::Bareiss)
}
