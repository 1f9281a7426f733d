//! Exact LLL reduction of a lattice basis.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

fn dot(a: &[i64], b: &[i64]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (&x, &y)| acc + BigInt::from(x) * BigInt::from(y))
}

/// Gram–Schmidt coefficients `μ` and squared norms `|b*_i|²`.
fn gram_schmidt(b: &[Vec<i64>]) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let m = b.len();
    let mut mu = vec![vec![BigRational::zero(); m]; m];
    let mut norms: Vec<BigRational> = Vec::with_capacity(m);
    // ⟨b_i, b*_j⟩ = ⟨b_i, b_j⟩ − Σ_{k<j} μ_{jk} ⟨b_i, b*_k⟩
    let mut r = vec![vec![BigRational::zero(); m]; m];
    for i in 0..m {
        for j in 0..=i {
            let mut v = BigRational::from_integer(dot(&b[i], &b[j]));
            for k in 0..j {
                v -= &mu[j][k] * &r[i][k];
            }
            r[i][j] = v;
            if j < i {
                mu[i][j] = &r[i][j] / &norms[j];
            }
        }
        norms.push(r[i][i].clone());
    }
    (mu, norms)
}

fn round(x: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    (x.numer() * &two + x.denom()).div_floor(&(x.denom() * &two))
}

fn axpy(dst: &mut [i64], q: i64, src: &[i64]) -> Result<()> {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = s
            .checked_mul(q)
            .and_then(|t| d.checked_sub(t))
            .ok_or(Error::Overflow("basis reduction"))?;
    }
    Ok(())
}

/// LLL-reduces linearly independent vectors (`δ = 3/4`). Returns the reduced
/// vectors and the unimodular transform: `reduced[j] = Σ_i basis[i] · u[j][i]`.
pub fn lll(basis: &[Vec<i64>]) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let m = basis.len();
    let mut b = basis.to_vec();
    let mut u: Vec<Vec<i64>> = (0..m)
        .map(|i| {
            let mut e = vec![0i64; m];
            e[i] = 1;
            e
        })
        .collect();
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    let mut k = 1;
    while k < m {
        for j in (0..k).rev() {
            let (mu, _) = gram_schmidt(&b);
            let q = round(&mu[k][j]);
            if q.is_zero() {
                continue;
            }
            let q = q.to_i64().ok_or(Error::Overflow("basis reduction"))?;
            let (bj, uj) = (b[j].clone(), u[j].clone());
            axpy(&mut b[k], q, &bj)?;
            axpy(&mut u[k], q, &uj)?;
        }
        let (mu, norms) = gram_schmidt(&b);
        let lhs = &norms[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            u.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    Ok((b, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_a_skewed_basis() {
        let basis = vec![vec![1, 0, 0], vec![100, 1, 0], vec![57, 203, 1]];
        let (red, u) = lll(&basis).unwrap();
        for (r, c) in red.iter().zip(&u) {
            let back: Vec<i64> = (0..3).map(|i| (0..3).map(|j| basis[j][i] * c[j]).sum()).collect();
            assert_eq!(&back, r);
        }
        assert!(red.iter().all(|v| v.iter().all(|x| x.abs() <= 1)));
    }

    #[test]
    fn rank_one_and_empty() {
        assert_eq!(lll(&[vec![3, -4]]).unwrap().0, vec![vec![3, -4]]);
        assert!(lll(&[]).unwrap().0.is_empty());
    }
}
