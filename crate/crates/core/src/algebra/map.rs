//! Monomial substitution maps `x_i ↦ ∏_j z_j^{E[i][j]}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::ExponentVector;
use crate::error::{Error, Result};

/// A monomial coordinate change recorded as its exponent matrix.
///
/// Row `i` holds the exponents of the image of `x_i`, so an exponent vector
/// `a` pulls back to `Eᵀ·a` and a monomial curve `m` pushes forward to `E·m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMap {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl MonomialMap {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "variable count must be >= 1");
        let rows = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        MonomialMap { n, rows }
    }

    /// Builds from explicit rows; the matrix must be square and nonnegative
    /// (nonnegativity is inherent in `u64`).
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMove("monomial map matrix must be square".into()));
        }
        Ok(MonomialMap { n, rows })
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    /// Total degree of the image monomial `σ*x_i`.
    pub fn image_degree(&self, i: usize) -> u64 {
        self.rows[i].iter().sum()
    }

    /// Largest image degree over all variables; bounds how fast pullback
    /// inflates total degree.
    pub fn max_image_degree(&self) -> u64 {
        (0..self.n).map(|i| self.image_degree(i)).max().unwrap_or(0)
    }

    /// `Eᵀ·a`: the exponent of the pulled-back monomial `σ*(x^a)`.
    pub fn pullback_exponent(&self, a: &ExponentVector) -> ExponentVector {
        assert_eq!(a.len(), self.n, "exponent length mismatch");
        let entries = (0..self.n)
            .map(|j| (0..self.n).map(|k| self.rows[k][j] * a.get(k)).sum())
            .collect();
        ExponentVector::new(entries)
    }

    /// `E·m`: the curve downstairs whose composition with `σ` matches the
    /// curve `t ↦ (t^{m_1}, …)` upstairs.
    pub fn push_curve(&self, m: &[u64]) -> Vec<u64> {
        assert_eq!(m.len(), self.n, "curve length mismatch");
        self.rows
            .iter()
            .map(|row| row.iter().zip(m).map(|(e, mi)| e * mi).sum())
            .collect()
    }

    /// Composite of `self` followed by `then`: if `self` writes `x` in terms
    /// of `w` and `then` writes `w` in terms of `z`, the product matrix
    /// writes `x` in terms of `z`.
    pub fn compose(&self, then: &MonomialMap) -> Result<MonomialMap> {
        if self.n != then.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: then.n });
        }
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| (0..self.n).map(|k| self.rows[i][k] * then.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(MonomialMap { n: self.n, rows })
    }

    /// Exact determinant by fraction-free Gaussian elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        let mut a: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_pullback_is_identity() {
        let id = MonomialMap::identity(3);
        let a = ExponentVector::new(vec![1, 0, 2]);
        assert_eq!(id.pullback_exponent(&a), a);
        assert!(id.is_unimodular());
    }

    #[test]
    fn chart_matrix_pullback() {
        // x = z1 z2, y = z2: xy pulls back to z1 z2^2
        let e = MonomialMap::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let a = ExponentVector::new(vec![1, 1]);
        assert_eq!(e.pullback_exponent(&a), ExponentVector::new(vec![1, 2]));
    }

    #[test]
    fn compose_orders_left_to_right() {
        // Two identical charts: x = z1 z2^2, y = z2
        let e = MonomialMap::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let c = e.compose(&e).unwrap();
        assert_eq!(c.rows(), &[vec![1, 2], vec![0, 1]]);
        assert!(c.is_unimodular());
    }

    #[test]
    fn determinant_detects_singular_matrix() {
        let m = MonomialMap::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.determinant(), BigInt::from(0));
    }

    #[test]
    fn push_curve_matches_transport() {
        let e = MonomialMap::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(e.push_curve(&[2, 3]), vec![5, 3]);
    }
}
