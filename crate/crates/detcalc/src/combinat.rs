//! Set partitions and their lattices, noncrossing matchings, permutations
//! and alternating sign matrices.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::int;
use crate::{Error, PolyQ, Rational, Result};

pub const PARTITION_CAP: usize = 8;
pub const NONCROSSING_CAP: usize = 10;
pub const MATCHING_CAP: usize = 12;
pub const ASM_CAP: usize = 5;

/// Set partition of `{1..n}`: sorted blocks ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let mut seen: Vec<usize> = blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        if seen != (1..=n).collect::<Vec<_>>() {
            return Err(Error::Domain(format!("blocks do not partition 1..{n}")));
        }
        Ok(SetPartition { n, blocks })
    }

    /// From block labels `labels[i]` of element `i+1`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut map: Vec<Option<usize>> = vec![None; labels.iter().max().map_or(0, |m| m + 1)];
        for (i, &l) in labels.iter().enumerate() {
            let idx = *map[l].get_or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(i + 1);
        }
        SetPartition { n: labels.len(), blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each element `1..=n`, at position `element - 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut l = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &e in b {
                l[e - 1] = k;
            }
        }
        l
    }

    pub fn is_noncrossing(&self) -> bool {
        let l = self.labels();
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if l[a] != l[c] || l[a] == l[b] {
                        continue;
                    }
                    for d in c + 1..n {
                        if l[b] == l[d] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        let lo = other.labels();
        self.blocks.iter().all(|b| b.iter().all(|&e| lo[e - 1] == lo[b[0] - 1]))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let items: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// All set partitions of `{1..n}` (or only the noncrossing ones), in
/// restricted-growth order.
pub fn enumerate_partitions(n: usize, noncrossing_only: bool) -> Result<Vec<SetPartition>> {
    let cap = if noncrossing_only { NONCROSSING_CAP } else { PARTITION_CAP };
    if n > cap {
        return Err(Error::SizeCap { what: "partition enumeration", size: n, cap });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, nc: bool, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            let p = SetPartition::from_labels(rgs);
            if !nc || p.is_noncrossing() {
                out.push(p);
            }
            return;
        }
        for v in 0..=max + 1 {
            rgs[i] = v;
            rec(i + 1, max.max(v), rgs, nc, out);
        }
    }
    if n == 0 {
        return Ok(vec![SetPartition { n: 0, blocks: Vec::new() }]);
    }
    rec(1, 0, &mut rgs, noncrossing_only, &mut out);
    Ok(out)
}

/// Common refinement.
pub fn partition_meet(p: &SetPartition, g: &SetPartition) -> SetPartition {
    let (lp, lg) = (p.labels(), g.labels());
    let pairs: Vec<usize> = lp.iter().zip(&lg).map(|(a, b)| a * (g.n + 1) + b).collect();
    SetPartition::from_labels(&pairs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    Full,
    Noncrossing,
}

/// Join in the full partition lattice or in the noncrossing lattice.
pub fn partition_join(p: &SetPartition, g: &SetPartition, lattice: Lattice) -> Result<SetPartition> {
    if p.n != g.n {
        return Err(Error::Dimension("partitions of different ground sets".into()));
    }
    let full = full_join(p, g);
    match lattice {
        Lattice::Full => Ok(full),
        Lattice::Noncrossing => {
            if !p.is_noncrossing() || !g.is_noncrossing() {
                return Err(Error::Domain("noncrossing join of a crossing partition".into()));
            }
            let cands = enumerate_partitions(p.n, true)?;
            Ok(cands
                .into_iter()
                .filter(|c| full.refines(c))
                .max_by_key(SetPartition::block_count)
                .expect("the one-block partition is always above"))
        }
    }
}

fn full_join(p: &SetPartition, g: &SetPartition) -> SetPartition {
    let n = p.n;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for part in [p, g] {
        for b in &part.blocks {
            for w in b.windows(2) {
                let (a, c) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                parent[a.max(c)] = a.min(c);
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    SetPartition::from_labels(&labels)
}

/// Finite poset with a rank function.
#[derive(Clone, Debug)]
pub struct PosetData {
    leq: Vec<Vec<bool>>,
    rank: Vec<usize>,
}

impl PosetData {
    pub fn new(leq: Vec<Vec<bool>>, rank: Vec<usize>) -> Result<Self> {
        let n = leq.len();
        if rank.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("poset table shape".into()));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::Domain("order is not reflexive".into()));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::Domain("order is not antisymmetric".into()));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::Domain("order is not transitive".into()));
                    }
                }
            }
        }
        Ok(PosetData { leq, rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn rank(&self, a: usize) -> usize {
        self.rank[a]
    }

    pub fn height(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&m| (0..self.len()).all(|x| self.leq[m][x]))
    }

    /// Reversed order with ranks `height - rank`.
    pub fn dual(&self) -> PosetData {
        let n = self.len();
        let h = self.height();
        PosetData {
            leq: (0..n).map(|a| (0..n).map(|b| self.leq[b][a]).collect()).collect(),
            rank: self.rank.iter().map(|r| h - r).collect(),
        }
    }

    /// Möbius values `mu(m, x)` from the minimum `m`.
    pub fn mobius_from_min(&self) -> Result<Vec<i64>> {
        let m = self.minimum().ok_or_else(|| Error::Domain("poset has no minimum".into()))?;
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (0..n).filter(|&y| self.leq[y][x]).count());
        let mut mu = vec![0i64; n];
        for &x in &order {
            mu[x] = if x == m { 1 } else { -(0..n).filter(|&y| y != x && self.leq[y][x]).map(|y| mu[y]).sum::<i64>() };
        }
        Ok(mu)
    }
}

/// `chi_P(q) = sum_p mu(0, p) q^{h - rank p}`.
pub fn poset_char_poly(p: &PosetData) -> Result<PolyQ> {
    let mu = p.mobius_from_min()?;
    let h = p.height();
    let mut c = vec![Rational::zero(); h + 1];
    for x in 0..p.len() {
        c[h - p.rank(x)] += int(mu[x]);
    }
    Ok(PolyQ::new(c))
}

/// `q^h chi(1/q)`: coefficients reversed.
pub fn reciprocal_char_poly(p: &PosetData) -> Result<PolyQ> {
    let chi = poset_char_poly(p)?;
    let h = p.height();
    Ok(PolyQ::new((0..=h).map(|k| chi.coeff(h - k)).collect()))
}

/// The partition lattice (or its noncrossing sublattice) ordered by refinement.
pub fn partition_poset(n: usize, noncrossing_only: bool) -> Result<(Vec<SetPartition>, PosetData)> {
    let parts = enumerate_partitions(n, noncrossing_only)?;
    let leq = parts.iter().map(|a| parts.iter().map(|b| a.refines(b)).collect()).collect();
    let rank = parts.iter().map(|p| n - p.block_count()).collect();
    let poset = PosetData::new(leq, rank)?;
    Ok((parts, poset))
}

/// Noncrossing perfect matchings of `{1..n2}`.
pub fn nc_matchings(n2: usize) -> Result<Vec<SetPartition>> {
    if n2 % 2 == 1 {
        return Err(Error::Domain(format!("no perfect matching of {n2} points")));
    }
    if n2 > MATCHING_CAP {
        return Err(Error::SizeCap { what: "matchings", size: n2, cap: MATCHING_CAP });
    }
    fn rec(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
        if lo > hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for partner in (lo + 1..=hi).step_by(2) {
            for inner in rec(lo + 1, partner - 1) {
                for outer in rec(partner + 1, hi) {
                    let mut blocks = vec![vec![lo, partner]];
                    blocks.extend(inner.iter().cloned());
                    blocks.extend(outer.iter().cloned());
                    out.push(blocks);
                }
            }
        }
        out
    }
    let mut all: Vec<SetPartition> =
        rec(1, n2).into_iter().map(|b| SetPartition::new(n2, b).expect("valid matching")).collect();
    all.sort();
    Ok(all)
}

/// Number of blocks of the full join of two matchings.
pub fn components(a: &SetPartition, b: &SetPartition) -> Result<usize> {
    Ok(partition_join(a, b, Lattice::Full)?.block_count())
}

/// Permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermStat {
    Inv,
    Maj,
    Des,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut s = images.clone();
        s.sort_unstable();
        if s != (1..=images.len()).collect::<Vec<_>>() {
            return Err(Error::Domain("not a permutation".into()));
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm(cur.clone()));
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn stat(&self, kind: PermStat) -> usize {
        let w = &self.0;
        match kind {
            PermStat::Inv => (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum(),
            PermStat::Maj => (1..w.len()).filter(|&i| w[i - 1] > w[i]).sum(),
            PermStat::Des => (1..w.len()).filter(|&i| w[i - 1] > w[i]).count(),
        }
    }

    /// `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn invert(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] - 1;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

pub fn perm_stat(s: &Perm, kind: PermStat) -> usize {
    s.stat(kind)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&items.join(" "))
    }
}

/// Alternating sign matrix with entries in {-1, 0, 1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Total number of `-1` entries.
    pub fn neg_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e == -1).count()
    }

    /// `-1` entries in row `i`.
    pub fn row_neg(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| self.get(i, j) == -1).count()
    }

    /// `-1` entries in column `j`.
    pub fn col_neg(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| self.get(i, j) == -1).count()
    }

    /// `q` if the partial row sum up to column `j` equals the partial column
    /// sum down to row `i`, otherwise `1`.
    pub fn alpha(&self, i: usize, j: usize, q: &Rational) -> Rational {
        let row: i32 = (0..=j).map(|k| self.get(i, k) as i32).sum();
        let col: i32 = (0..=i).map(|k| self.get(k, j) as i32).sum();
        if row == col {
            q.clone()
        } else {
            Rational::one()
        }
    }
}

/// All `n x n` alternating sign matrices.
pub fn asm_enumerate(n: usize) -> Result<Vec<Asm>> {
    if n > ASM_CAP {
        return Err(Error::SizeCap { what: "ASM enumeration", size: n, cap: ASM_CAP });
    }
    // Column partial sums are 0/1; a row is valid iff its entries alternate
    // starting with +1 and total 1, and keep every column partial sum in {0,1}.
    let mut rows: Vec<Vec<i8>> = Vec::new();
    fn gen_rows(n: usize, j: usize, cur: &mut Vec<i8>, sum: i32, out: &mut Vec<Vec<i8>>) {
        if j == n {
            if sum == 1 {
                out.push(cur.clone());
            }
            return;
        }
        for v in [-1i8, 0, 1] {
            let s = sum + v as i32;
            if s == 0 || s == 1 {
                cur.push(v);
                gen_rows(n, j + 1, cur, s, out);
                cur.pop();
            }
        }
    }
    gen_rows(n, 0, &mut Vec::new(), 0, &mut rows);
    let mut out = Vec::new();
    fn place(n: usize, i: usize, rows: &[Vec<i8>], colsum: &mut Vec<i32>, acc: &mut Vec<i8>, out: &mut Vec<Asm>) {
        if i == n {
            if colsum.iter().all(|&c| c == 1) {
                out.push(Asm { n, entries: acc.clone() });
            }
            return;
        }
        for r in rows {
            if r.iter().zip(colsum.iter()).all(|(&v, &c)| {
                let s = c + v as i32;
                s == 0 || s == 1
            }) {
                for (c, &v) in colsum.iter_mut().zip(r) {
                    *c += v as i32;
                }
                acc.extend_from_slice(r);
                place(n, i + 1, rows, colsum, acc, out);
                acc.truncate(acc.len() - n);
                for (c, &v) in colsum.iter_mut().zip(r) {
                    *c -= v as i32;
                }
            }
        }
    }
    place(n, 0, &rows, &mut vec![0; n], &mut Vec::new(), &mut out);
    Ok(out)
}

/// Integer partitions of `n` in decreasing parts, reverse lexicographic.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `z_mu = prod_i i^{m_i} m_i!`.
pub fn centralizer_size(mu: &[usize]) -> u64 {
    let distinct: BTreeSet<usize> = mu.iter().copied().collect();
    distinct
        .into_iter()
        .map(|i| {
            let m = mu.iter().filter(|&&p| p == i).count() as u32;
            (i as u64).pow(m) * (1..=m as u64).product::<u64>()
        })
        .product()
}
