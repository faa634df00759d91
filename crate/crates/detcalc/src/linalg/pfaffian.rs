use super::Matrix;
use crate::{Error, Result, Scalar};

pub const PFAFFIAN_CAP: usize = 12;

fn check<T: Scalar>(m: &Matrix<T>) -> Result<usize> {
    let n = m.require_square()?;
    if !m.is_skew() {
        return Err(Error::NotSkew);
    }
    if n % 2 == 1 {
        return Err(Error::Dimension(format!("Pfaffian of odd order {n}")));
    }
    if n > PFAFFIAN_CAP {
        return Err(Error::SizeCap { what: "pfaffian", size: n, cap: PFAFFIAN_CAP });
    }
    Ok(n)
}

/// Pfaffian by expansion along the first remaining row, normalised so that
/// `Pf [[0, 1], [-1, 0]] = 1`.
pub fn pfaffian<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    let n = check(m)?;
    let idx: Vec<usize> = (0..n).collect();
    let pf = expand(m, &idx);
    debug_assert!(n > 8 || pf == pfaffian_by_matchings(m).unwrap());
    Ok(pf)
}

fn expand<T: Scalar>(m: &Matrix<T>, idx: &[usize]) -> T {
    if idx.is_empty() {
        return T::one();
    }
    let first = idx[0];
    let mut acc = T::zero();
    for k in 1..idx.len() {
        let a = m.get(first, idx[k]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let term = a.clone() * expand(m, &rest);
        acc = if k % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

/// Signed sum over perfect matchings, each weighted by `(-1)^crossings`.
pub fn pfaffian_by_matchings<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    let n = check(m)?;
    let mut total = T::zero();
    let mut arcs = Vec::with_capacity(n / 2);
    let mut used = vec![false; n];
    matchings(n, &mut used, &mut arcs, &mut |arcs| {
        let crossings = arcs
            .iter()
            .enumerate()
            .flat_map(|(x, &(i, j))| arcs[x + 1..].iter().map(move |&(k, l)| (i, j, k, l)))
            .filter(|&(i, j, k, l)| (i < k && k < j && j < l) || (k < i && i < l && l < j))
            .count();
        let w = arcs.iter().fold(T::one(), |acc, &(i, j)| acc * m.get(i, j).clone());
        total = if crossings % 2 == 0 { total.clone() + w } else { total.clone() - w };
    });
    Ok(total)
}

/// Visit every perfect matching of `0..n` as a list of arcs `(i, j)`, `i < j`.
pub(crate) fn matchings(n: usize, used: &mut [bool], arcs: &mut Vec<(usize, usize)>, f: &mut dyn FnMut(&[(usize, usize)])) {
    let Some(i) = (0..n).find(|&i| !used[i]) else {
        f(arcs);
        return;
    };
    used[i] = true;
    for j in i + 1..n {
        if !used[j] {
            used[j] = true;
            arcs.push((i, j));
            matchings(n, used, arcs, f);
            arcs.pop();
            used[j] = false;
        }
    }
    used[i] = false;
}
