//! Exponent vectors in ℕⁿ.

use std::fmt;

/// An exponent tuple `(a_1, …, a_n)` of a monomial `x_1^{a_1} ⋯ x_n^{a_n}`.
///
/// The derived `Ord` is lexicographic on the entries, which is the canonical
/// ordering used for term storage and serialization throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    /// Wraps raw entries. The length is the ambient variable count.
    pub fn new(entries: Vec<u64>) -> Self {
        assert!(!entries.is_empty(), "exponent vector must have n >= 1");
        ExponentVector(entries)
    }

    /// The zero vector (the constant monomial) in `n` variables.
    pub fn zeros(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The exponent of the single variable `x_{index+1}`.
    pub fn unit(n: usize, index: usize) -> Self {
        assert!(index < n, "variable index out of range");
        let mut entries = vec![0; n];
        entries[index] = 1;
        Self::new(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    /// Sum of the entries.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum; both vectors must have the same length.
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u64>>>()
            .map(ExponentVector)
    }

    /// Componentwise minimum.
    pub fn min_with(&self, other: &ExponentVector) -> ExponentVector {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// True iff `self <= other` componentwise, i.e. the monomial `x^self`
    /// divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Dot product with a weight vector, e.g. a monomial curve `m`.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        assert_eq!(self.len(), weights.len(), "weight length mismatch");
        self.0.iter().zip(weights).map(|(a, m)| a * m).sum()
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order_is_canonical() {
        let a = ExponentVector::new(vec![0, 2]);
        let b = ExponentVector::new(vec![1, 1]);
        let c = ExponentVector::new(vec![2, 0]);
        assert!(a < b && b < c);
    }

    #[test]
    fn divisibility_is_componentwise() {
        let m = ExponentVector::new(vec![1, 1]);
        let t = ExponentVector::new(vec![2, 1]);
        assert!(m.divides(&t));
        assert!(!t.divides(&m));
        assert_eq!(
            t.checked_sub(&m),
            Some(ExponentVector::new(vec![1, 0]))
        );
        assert_eq!(m.checked_sub(&t), None);
    }

    #[test]
    fn weighted_degree_matches_curve_substitution() {
        let a = ExponentVector::new(vec![1, 1]);
        assert_eq!(a.weighted_degree(&[2, 3]), 5);
    }
}
