//! Independent oracles: textbook elimination with division and cofactor
//! expansion, sharing no code with the library's linear algebra.
#![allow(dead_code)]

use flagcalc::{Field, GaussianRational as Q, Ring};
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

/// Reduced row echelon form by division; returns (rank, pivot columns, rref rows).
pub fn rref(mut rows: Vec<Vec<Q>>, ncols: usize) -> (usize, Vec<usize>, Vec<Vec<Q>>) {
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        let Some(r) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, r);
        let inv = rows[rank][c].inv().unwrap();
        for x in rows[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = rows[r][c].clone();
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (rank, pivots, rows)
}

pub fn rank(rows: Vec<Vec<Q>>, ncols: usize) -> usize {
    rref(rows, ncols).0
}

/// Kernel basis of the matrix with the given rows.
pub fn kernel(rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let (rank, pivots, rows) = rref(rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for i in 0..rank {
                v[pivots[i]] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    let mut acc = Q::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Q>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][c].clone() * det_cofactor(&minor);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Sylvester matrix built from scratch: `deg g` shifted rows of `f`, then
/// `deg f` shifted rows of `g`.
pub fn sylvester(f: &[Q], g: &[Q]) -> Vec<Vec<Q>> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut out = Vec::new();
    for r in 0..n {
        let mut row = vec![Q::zero(); size];
        row[r..r + m + 1].clone_from_slice(f);
        out.push(row);
    }
    for r in 0..m {
        let mut row = vec![Q::zero(); size];
        row[r..r + n + 1].clone_from_slice(g);
        out.push(row);
    }
    out
}

pub const ORACLE_PRIME: u64 = 2_147_483_647;

/// Rank over `F_p` of an integer matrix (entries already reduced).
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let inv = |x: u64| {
        let (mut r, mut b, mut e) = (1u64, x, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..ncols {
        let Some(r) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, r);
        let k = inv(rows[rank][c]);
        let pivot: Vec<u64> = rows[rank].iter().map(|x| x * k % p).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f != 0 {
                for j in c..ncols {
                    row[j] = (row[j] + p - f * pivot[j] % p) % p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}
