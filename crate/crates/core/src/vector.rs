//! Small helpers for integer vectors (lattice elements and exponent vectors).

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

pub fn one_norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

/// Positive part `v⁺` (componentwise `max(v, 0)`).
pub fn pos_part(v: &[i64]) -> Vec<i64> {
    v.iter().map(|&x| x.max(0)).collect()
}

/// Negative part `v⁻` (componentwise `max(−v, 0)`), so `v = v⁺ − v⁻`.
pub fn neg_part(v: &[i64]) -> Vec<i64> {
    v.iter().map(|&x| (-x).max(0)).collect()
}

pub fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

pub fn checked_add(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::Overflow("vector sum")))
        .collect()
}

pub fn checked_sub(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y).ok_or(Error::Overflow("vector difference")))
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// `a ≤ b` componentwise.
pub fn le(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The conformal order `g ⊑ s`: same sign wherever `g` is nonzero and
/// `|g_i| ≤ |s_i|`.
pub fn conformal_le(g: &[i64], s: &[i64]) -> bool {
    g.iter().zip(s).all(|(&x, &y)| {
        if x > 0 {
            y >= x
        } else if x < 0 {
            y <= x
        } else {
            true
        }
    })
}

/// Whether `a` and `b` lie in a common closed orthant.
pub fn sign_compatible(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| (x as i128) * (y as i128) >= 0)
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| gcd(g, x.abs()))
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

/// Canonical vector order: by 1-norm, then lexicographic.
pub fn norm_lex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    one_norm(a).cmp(&one_norm(b)).then_with(|| a.cmp(b))
}

/// All subsets of `0..n` of size `k`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Rank of a list of integer vectors (fraction-free elimination in `i128`,
/// falling back to arbitrary precision when needed).
pub fn rank_of(vectors: &[Vec<i64>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let cols = first.len();
    let mut a: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = a.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let (f, g) = (a[rank][c], a[i][c]);
            let d = gcd128(f, g);
            let (f, g) = (f / d, g / d);
            for j in c..cols {
                let v = a[i][j]
                    .checked_mul(f)
                    .and_then(|x| a[rank][j].checked_mul(g).and_then(|y| x.checked_sub(y)));
                match v {
                    Some(v) => a[i][j] = v,
                    None => return crate::matrix::IntMatrix::from_rows(vectors)
                        .map(|m| m.rank())
                        .unwrap_or(0),
                }
            }
            let row_gcd = a[i].iter().fold(0i128, |g, &x| gcd128(g, x));
            if row_gcd > 1 {
                for x in a[i].iter_mut() {
                    *x /= row_gcd;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}
