//! Shared fixtures and brute-force oracles for the integration tests. The
//! oracles deliberately avoid the library's enumeration code.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use itertools::Itertools;
use twistlab::io::{load_file, LoadedAlgebra};
use twistlab::{FiniteLattice, Pair};

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

pub fn corpus(name: &str) -> LoadedAlgebra {
    load_file(&corpus_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn elem(l: &FiniteLattice, label: &str) -> usize {
    l.index(label).unwrap()
}

pub fn pair(l: &FiniteLattice, x: &str, y: &str) -> Pair {
    (elem(l, x), elem(l, y))
}

/// Parses `"(x,y)"` against the base lattice.
pub fn pair_label(l: &FiniteLattice, s: &str) -> Pair {
    let inner = s.trim_start_matches('(').trim_end_matches(')');
    let (x, y) = inner.split_once(',').unwrap();
    pair(l, x, y)
}

/// Number of `n`-element lattices up to isomorphism. Every orientation of
/// every pair of non-extremal points is tried, non-orders and
/// non-lattices are dropped, and isomorphic copies are merged by the least
/// full order matrix over all permutations.
pub fn oracle_lattice_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (1..=m).tuple_combinations().collect();
    let mut classes = BTreeSet::new();
    for choice in 0..3usize.pow(pairs.len() as u32) {
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
            row[n - 1] = true;
        }
        leq[0] = vec![true; n];
        let mut c = choice;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => leq[i][j] = true,
                2 => leq[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq[x][y] && leq[y][z]) || leq[x][z])));
        if !transitive {
            continue;
        }
        let has_joins = (0..n).all(|x| {
            (0..n).all(|y| {
                let ub: Vec<usize> = (0..n).filter(|&u| leq[x][u] && leq[y][u]).collect();
                ub.iter().any(|&u| ub.iter().all(|&v| leq[u][v]))
            })
        });
        if !has_joins {
            continue;
        }
        let canon = (1..=m)
            .permutations(m)
            .map(|perm| {
                let p = |x: usize| if x == 0 || x == n - 1 { x } else { perm[x - 1] };
                let mut bits = vec![false; n * n];
                for x in 0..n {
                    for y in 0..n {
                        bits[p(x) * n + p(y)] = leq[x][y];
                    }
                }
                bits
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

/// Number of integral commutative residuated multiplications on `l`.
/// Tries every commutative table on the non-extremal elements (with `1` as
/// unit and `0` absorbing, both forced by monotonicity) and keeps those that
/// are associative, monotone, and distribute over binary joins, which on a
/// finite lattice is equivalent to having a residuum.
pub fn oracle_residuation_count(l: &FiniteLattice) -> usize {
    let n = l.size();
    let (bot, top) = (l.bottom(), l.top());
    let mid: Vec<usize> = l.elements().filter(|&e| e != bot && e != top).collect();
    let slots: Vec<(usize, usize)> = mid.iter().copied().tuple_combinations().chain(mid.iter().map(|&e| (e, e))).collect();
    let mut count = 0;
    for choice in 0..n.pow(slots.len() as u32) {
        let mut t = vec![vec![0; n]; n];
        t[top] = (0..n).collect();
        for (x, row) in t.iter_mut().enumerate() {
            row[top] = x;
        }
        t[bot] = vec![bot; n];
        for (x, row) in t.iter_mut().enumerate() {
            row[bot] = if n == 1 { x } else { bot };
        }
        let mut c = choice;
        for &(i, j) in &slots {
            t[i][j] = c % n;
            t[j][i] = c % n;
            c /= n;
        }
        let e = l.elements();
        let assoc = e.clone().all(|x| e.clone().all(|y| e.clone().all(|z| t[t[x][y]][z] == t[x][t[y][z]])));
        let monotone = e.clone().all(|x| e.clone().all(|y| !l.leq(x, y) || e.clone().all(|z| l.leq(t[x][z], t[y][z]))));
        let joins = e.clone().all(|x| e.clone().all(|y| e.clone().all(|z| t[x][l.join(y, z)] == l.join(t[x][y], t[x][z]))));
        if assoc && monotone && joins {
            count += 1;
        }
    }
    count
}
