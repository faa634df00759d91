mod common;

use common::*;
use detcalc::combinat::{
    asm_enumerate, centralizer_size, enumerate_partitions, integer_partitions, nc_matchings, partition_join,
    partition_meet, Lattice, Perm, PermStat, SetPartition,
};
use detcalc::exactnum::{int, q_factorial, rat};
use detcalc::Rational;
use num_traits::{One, Zero};

fn bell_numbers(count: usize) -> Vec<u64> {
    // Bell triangle
    let mut out = vec![1u64];
    let mut row = vec![1u64];
    while out.len() < count {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        out.push(next[0]);
        row = next;
    }
    out
}

/// Meet as the common refinement: elements share a block iff they do in both.
fn meet_oracle(p: &SetPartition, g: &SetPartition) -> SetPartition {
    let (lp, lg) = (p.labels(), g.labels());
    let n = p.n();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for e in 1..=n {
        match blocks.iter_mut().find(|b| lp[b[0] - 1] == lp[e - 1] && lg[b[0] - 1] == lg[e - 1]) {
            Some(b) => b.push(e),
            None => blocks.push(vec![e]),
        }
    }
    SetPartition::new(n, blocks).unwrap()
}

#[test]
fn partition_counts() {
    let bell = bell_numbers(8);
    for n in 1..=7 {
        assert_eq!(enumerate_partitions(n, false).unwrap().len() as u64, bell[n], "Bell({n})");
        let catalan = binom(2 * n as i64, n as i64) / int(n as i64 + 1);
        assert_eq!(int(enumerate_partitions(n, true).unwrap().len() as i64), catalan, "Catalan({n})");
    }
    assert!(enumerate_partitions(9, false).is_err());
}

#[test]
fn lattice_axioms() {
    for n in 1..=4 {
        for (lat, nc) in [(Lattice::Full, false), (Lattice::Noncrossing, true)] {
            let all = enumerate_partitions(n, nc).unwrap();
            let join = |a: &SetPartition, b: &SetPartition| partition_join(a, b, lat).unwrap();
            for p in &all {
                assert_eq!(&join(p, p), p);
                assert_eq!(&partition_meet(p, p), p);
                for g in &all {
                    let (j, m) = (join(p, g), partition_meet(p, g));
                    assert_eq!(j, join(g, p));
                    assert_eq!(m, partition_meet(g, p));
                    assert_eq!(&join(p, &m), p);
                    assert_eq!(&partition_meet(p, &j), p);
                    assert!(p.refines(&j) && g.refines(&j));
                    assert!(m.refines(p) && m.refines(g));
                    if nc {
                        assert!(j.is_noncrossing());
                    }
                }
            }
        }
    }
}

#[test]
fn noncrossing_meet_is_full_meet() {
    for n in 1..=5 {
        let nc = enumerate_partitions(n, true).unwrap();
        for p in &nc {
            for g in &nc {
                let m = partition_meet(p, g);
                assert_eq!(m, meet_oracle(p, g));
                assert!(m.is_noncrossing());
            }
        }
    }
}

#[test]
fn noncrossing_join_can_exceed_full_join() {
    let p = SetPartition::new(4, vec![vec![1, 3], vec![2], vec![4]]).unwrap();
    let g = SetPartition::new(4, vec![vec![1], vec![2, 4], vec![3]]).unwrap();
    assert_eq!(partition_join(&p, &g, Lattice::Full).unwrap().block_count(), 2);
    assert_eq!(partition_join(&p, &g, Lattice::Noncrossing).unwrap().block_count(), 1);
}

#[test]
fn matchings_are_catalan() {
    for n in 1..=5i64 {
        let m = nc_matchings(2 * n as usize).unwrap();
        assert_eq!(int(m.len() as i64), binom(2 * n, n) / int(n + 1));
        assert!(m.iter().all(|p| p.is_noncrossing() && p.blocks().iter().all(|b| b.len() == 2)));
    }
}

#[test]
fn asm_counts() {
    for n in 1..=5i64 {
        let want = (0..n).fold(Rational::one(), |p, k| p * fact(3 * k + 1) / fact(n + k));
        let asms = asm_enumerate(n as usize).unwrap();
        assert_eq!(int(asms.len() as i64), want, "n = {n}");
        // permutation matrices are exactly the ASMs without -1
        assert_eq!(asms.iter().filter(|a| a.neg_count() == 0).count() as i64, (1..=n).product::<i64>());
    }
}

fn inv(w: &[usize]) -> u32 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            c += u32::from(w[i] > w[j]);
        }
    }
    c
}

fn maj(w: &[usize]) -> u32 {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).map(|i| i as u32).sum()
}

#[test]
fn maj_and_inv_equidistributed() {
    for q in [rat(1, 2), rat(-3, 5), int(2)] {
        for n in 1..=6 {
            let perms = Perm::all(n);
            assert_eq!(perms.len() as i64, (1..=n as i64).product::<i64>());
            let mut sm = Rational::zero();
            let mut si = Rational::zero();
            for p in &perms {
                let w = p.images();
                assert_eq!(p.stat(PermStat::Inv) as u32, inv(w));
                assert_eq!(p.stat(PermStat::Maj) as u32, maj(w));
                sm += pow(&q, maj(w));
                si += pow(&q, inv(w));
            }
            assert_eq!(sm, si, "n = {n}");
            assert_eq!(sm, q_factorial(n as i64, &q).unwrap());
        }
    }
}

#[test]
fn centralizers_sum_to_one() {
    // sum over partitions of 1/z_mu is 1
    for n in 1..=8 {
        let s = integer_partitions(n).iter().fold(Rational::zero(), |a, mu| a + rat(1, centralizer_size(mu) as i64));
        assert_eq!(s, Rational::one(), "n = {n}");
    }
}

#[test]
fn permutation_group_laws() {
    let all = Perm::all(4);
    for a in &all {
        assert_eq!(a.compose(&a.invert()), Perm::identity(4));
        for b in &all {
            let ab = a.compose(b);
            for (i, &x) in b.images().iter().enumerate() {
                assert_eq!(ab.images()[i], a.images()[x - 1]);
            }
        }
    }
}
