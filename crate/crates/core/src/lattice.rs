//! Sublattices of `Z^n`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lp::{solve_nonneg, IntRow, Relation};
use crate::matrix::{det_i128, kernel_basis, IntMatrix};
use crate::reduce::lll;
use crate::vector::rank_of;

/// A lattice `L ⊆ Z^n` of dimension `m`.
///
/// Keeps the basis it was given (when the generators are independent; the
/// Hermite basis otherwise) so that coordinates `z` in `Q_u = {z : Bz ≤ u}`
/// refer to it. Equality and hashing go through the Hermite normal form, so
/// equal lattices compare equal whatever basis they carry.
#[derive(Clone, Debug)]
pub struct Lattice {
    n: usize,
    basis: IntMatrix,
    columns: Vec<Vec<i64>>,
    canonical: Vec<Vec<i64>>,
    reduced: Vec<Vec<i64>>,
    /// `reduced[j] = Σ_i columns[i] · to_basis[j][i]`.
    to_basis: Vec<Vec<i64>>,
    /// `m` rows on which the basis is nonsingular.
    pivot_rows: Vec<usize>,
    defining: Option<IntMatrix>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical == other.canonical
    }
}

impl Eq for Lattice {}

impl core::hash::Hash for Lattice {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.canonical.hash(state);
    }
}

impl Lattice {
    /// `L = ker(A) ∩ Z^n`.
    pub fn from_defining_matrix(a: IntMatrix) -> Result<Self> {
        if a.cols() == 0 {
            return Err(Error::InvalidInput("matrix has no columns".into()));
        }
        let k = kernel_basis(&a);
        let mut l = Self::from_generators(k)?;
        l.defining = Some(a);
        Ok(l)
    }

    /// The lattice generated by the columns of `b` (an `n × k` matrix; the
    /// columns need not be independent).
    pub fn from_generators(b: IntMatrix) -> Result<Self> {
        let n = b.rows();
        let hnf = b.transpose().row_hnf().transpose();
        let canonical = hnf.columns_i64()?;
        let basis = if b.cols() == canonical.len() { b } else { hnf };
        let columns = basis.columns_i64()?;
        let (reduced, to_basis) = lll(&columns)?;
        let mut pivot_rows = Vec::new();
        let mut picked: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            picked.push(columns.iter().map(|c| c[i]).collect());
            if rank_of(&picked) == picked.len() {
                pivot_rows.push(i);
            } else {
                picked.pop();
            }
        }
        Ok(Lattice {
            n,
            basis,
            columns,
            canonical,
            reduced,
            to_basis,
            pivot_rows,
            defining: None,
        })
    }

    pub fn from_columns(n: usize, columns: &[Vec<i64>]) -> Result<Self> {
        Self::from_generators(IntMatrix::from_columns(n, columns)?)
    }

    /// Ambient dimension `n`.
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Lattice dimension `m`.
    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    /// `n × m` basis matrix `B`.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// The rows `b_1, …, b_n ∈ Z^m` of `B`.
    pub fn basis_rows(&self) -> Vec<Vec<i64>> {
        rows_of(&self.columns, self.n)
    }

    /// Columns of the Hermite normal form basis.
    pub fn canonical_columns(&self) -> &[Vec<i64>] {
        &self.canonical
    }

    /// An LLL-reduced basis of the same lattice.
    pub fn reduced_columns(&self) -> &[Vec<i64>] {
        &self.reduced
    }

    pub fn reduced_rows(&self) -> Vec<Vec<i64>> {
        rows_of(&self.reduced, self.n)
    }

    /// Converts coordinates in the reduced basis to coordinates in `B`.
    pub fn reduced_to_basis(&self, z: &[i64]) -> Vec<i64> {
        let m = self.rank();
        (0..m)
            .map(|i| (0..m).map(|j| self.to_basis[j][i] * z[j]).sum())
            .collect()
    }

    pub fn defining_matrix(&self) -> Option<&IntMatrix> {
        self.defining.as_ref()
    }

    /// `B z`.
    pub fn point(&self, z: &[i64]) -> Vec<i64> {
        let mut v = alloc::vec![0i64; self.n];
        for (c, &zk) in self.columns.iter().zip(z) {
            for i in 0..self.n {
                v[i] += c[i] * zk;
            }
        }
        v
    }

    /// Coordinates `z` with `B z = v`, if `v ∈ L`.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        if v.len() != self.n || !self.contains(v) {
            return None;
        }
        // Cramer's rule on the pivot rows.
        let m = self.rank();
        let a: Vec<Vec<i64>> = self
            .pivot_rows
            .iter()
            .map(|&i| self.columns.iter().map(|c| c[i]).collect())
            .collect();
        let det = det_i128(&a)?;
        let mut z = Vec::with_capacity(m);
        for k in 0..m {
            let mut ak = a.clone();
            for (row, &i) in ak.iter_mut().zip(&self.pivot_rows) {
                row[k] = v[i];
            }
            let num = det_i128(&ak)?;
            if num % det != 0 {
                return None;
            }
            z.push(i64::try_from(num / det).ok()?);
        }
        (self.point(&z) == v).then_some(z)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.n {
            return false;
        }
        // The Hermite columns are in echelon form; peel them off in order.
        let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for c in &self.canonical {
            let Some(p) = c.iter().position(|&x| x != 0) else { continue };
            let piv = c[p] as i128;
            if rest[p] % piv != 0 {
                return false;
            }
            let q = rest[p] / piv;
            for i in 0..self.n {
                rest[i] -= q * c[i] as i128;
            }
        }
        rest.iter().all(|&x| x == 0)
    }

    /// `L ∩ N^n = {0}`, decided by one exact LP: no `λ` with `Bλ ≥ 0` and
    /// `Σ (Bλ)_i ≥ 1`.
    pub fn is_pointed(&self) -> bool {
        let m = self.rank();
        if m == 0 {
            return true;
        }
        let rows = self.basis_rows();
        let mut system: Vec<IntRow> = rows
            .iter()
            .map(|b| IntRow::from_i64(b.iter().copied().chain(b.iter().map(|x| -x)), Relation::Ge, 0))
            .collect();
        let mut sum = alloc::vec![0i64; m];
        for b in &rows {
            for k in 0..m {
                sum[k] += b[k];
            }
        }
        system.push(IntRow::from_i64(
            sum.iter().copied().chain(sum.iter().map(|x| -x)),
            Relation::Ge,
            1,
        ));
        solve_nonneg(&system, 2 * m).is_none()
    }

    /// Image `L_σ` of the lattice under the projection that deletes the
    /// coordinates in `sigma`. Errors if the dimension drops.
    pub fn project(&self, sigma: &[usize]) -> Result<Lattice> {
        if let Some(&bad) = sigma.iter().find(|&&i| i >= self.n) {
            return Err(Error::InvalidInput(alloc::format!(
                "coordinate {} out of range for n = {}",
                bad + 1,
                self.n
            )));
        }
        let keep: Vec<usize> = (0..self.n).filter(|i| !sigma.contains(i)).collect();
        let projected = self.basis.select_rows(&keep);
        let to = projected.rank();
        if to != self.rank() {
            return Err(Error::DimensionDrop {
                from: self.rank(),
                to,
            });
        }
        Lattice::from_generators(projected)
    }

    /// Rows of `A·B`, for checking `A B = 0`.
    pub fn defining_residual_is_zero(&self) -> bool {
        match &self.defining {
            Some(a) => a
                .mul(&self.basis)
                .map(|p| p.is_zero())
                .unwrap_or(false),
            None => true,
        }
    }
}

fn rows_of(columns: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| columns.iter().map(|c| c[i]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ker(row: &[i64]) -> Lattice {
        Lattice::from_defining_matrix(IntMatrix::from_rows(&[row]).unwrap()).unwrap()
    }

    #[test]
    fn pointedness() {
        assert!(Lattice::from_columns(2, &[vec![1, -1]]).unwrap().is_pointed());
        assert!(!Lattice::from_columns(2, &[vec![1, 0]]).unwrap().is_pointed());
        assert!(ker(&[1, 2, 3]).is_pointed());
        assert!(!ker(&[1, 0, 3]).is_pointed());
        let full = Lattice::from_columns(3, &[vec![1, -2, -1], vec![4, 0, 1], vec![3, 5, -9]]).unwrap();
        assert!(!full.is_pointed());
    }

    #[test]
    fn basis_is_canonical() {
        let a = Lattice::from_columns(3, &[vec![1, -1, 0], vec![0, 1, -1]]).unwrap();
        let b = Lattice::from_columns(3, &[vec![1, 0, -1], vec![0, 1, -1], vec![1, -1, 0]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn membership() {
        let l = ker(&[3, 4, 5]);
        assert!(l.contains(&[-1, 2, -1]));
        assert!(l.contains(&[3, -1, -1]));
        assert!(!l.contains(&[1, 0, 0]));
        let z = l.coordinates(&[2, 1, -2]).unwrap();
        assert_eq!(l.point(&z), vec![2, 1, -2]);
    }

    #[test]
    fn projections() {
        let l = ker(&[3, 4, 5]);
        assert_eq!(l.project(&[]).unwrap().basis(), l.basis());
        let p = l.project(&[2]).unwrap();
        assert_eq!((p.ambient_dim(), p.rank()), (2, 2));
        // Image lattice, not its saturation: {(a,b) : 3a + 4b ≡ 0 mod 5}.
        assert!(!p.contains(&[1, 0]));
        assert!(p.contains(&[5, 0]));
        assert!(p.contains(&[-3, 1]));
        assert!(!p.contains(&[1, 1]));

        let q = ker(&[1, 2, 3]).project(&[0]).unwrap();
        assert_eq!(q.rank(), 2);

        let line = Lattice::from_columns(2, &[vec![1, -1]]).unwrap();
        assert_eq!(line.project(&[0, 1]).unwrap_err(), Error::DimensionDrop { from: 1, to: 0 });
    }

    #[test]
    fn defining_matrix_annihilates_basis() {
        let l = ker(&[15, 247, 248, 345]);
        assert!(l.defining_residual_is_zero());
        assert_eq!(l.rank(), 3);
    }

    #[test]
    fn zero_lattice() {
        let l = Lattice::from_generators(IntMatrix::zeros(3, 2)).unwrap();
        assert_eq!(l.rank(), 0);
        assert!(l.is_pointed());
        assert!(l.contains(&[0, 0, 0]));
    }
}
