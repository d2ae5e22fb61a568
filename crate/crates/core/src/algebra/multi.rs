//! Truncated multivariate formal power series over exact rationals.
//!
//! A `MultiSeries` stores the coefficients of total degree `<= truncation`;
//! nothing is claimed about higher terms. All binary operations propagate
//! the tightest reliable truncation instead of silently degrading.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{ExponentVector, MonomialMap, UniSeries};
use crate::error::{Error, Result};

/// Truncation sentinel for series that are exactly known at every degree
/// (polynomials). Large enough that desk-scale degree arithmetic cannot
/// reach it, small enough that sums of a few truncations cannot overflow.
pub const EXACT_TRUNCATION: i64 = i64::MAX / 8;

/// A formal power series in `n` variables, truncated by total degree.
///
/// Invariants: no stored coefficient is zero, and every stored exponent has
/// total degree `<= truncation`. Term storage is a `BTreeMap` keyed by the
/// lexicographic order on exponent vectors, so iteration and serialization
/// are deterministic.
#[derive(Clone)]
pub struct MultiSeries {
    n: usize,
    truncation: u64,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl MultiSeries {
    /// The zero series in `n` variables, known up to total degree `truncation`.
    pub fn zero(n: usize, truncation: u64) -> Self {
        assert!(n >= 1, "variable count must be >= 1");
        MultiSeries { n, truncation, terms: BTreeMap::new() }
    }

    /// A constant series.
    pub fn constant(n: usize, truncation: u64, value: BigRational) -> Self {
        let mut s = Self::zero(n, truncation);
        if !value.is_zero() {
            s.terms.insert(ExponentVector::zeros(n), value);
        }
        s
    }

    /// The single variable `x_{index+1}`.
    pub fn variable(n: usize, truncation: u64, index: usize) -> Self {
        assert!(truncation >= 1, "truncation too small to hold a variable");
        let mut s = Self::zero(n, truncation);
        s.terms.insert(ExponentVector::unit(n, index), BigRational::one());
        s
    }

    /// A single term `coefficient * x^exponent`.
    pub fn monomial(n: usize, truncation: u64, exponent: ExponentVector, coefficient: BigRational) -> Self {
        assert_eq!(exponent.len(), n, "exponent length mismatch");
        assert!(exponent.total_degree() <= truncation, "term exceeds truncation");
        let mut s = Self::zero(n, truncation);
        if !coefficient.is_zero() {
            s.terms.insert(exponent, coefficient);
        }
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs, summing repeats
    /// and purging zeros. Terms above the truncation are rejected.
    pub fn from_terms<I>(n: usize, truncation: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut s = Self::zero(n, truncation);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent length mismatch");
            assert!(e.total_degree() <= truncation, "term exceeds truncation");
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, exponent: ExponentVector, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coefficient;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn truncation(&self) -> u64 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Maximum total degree among stored terms, `None` for the zero series.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Coefficient of `x^exponent` (zero if absent).
    pub fn coeff(&self, exponent: &ExponentVector) -> BigRational {
        self.terms.get(exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(&ExponentVector::zeros(self.n))
    }

    /// Iterates stored terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    /// Iterates the support in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// Restricts to a lower truncation, dropping higher terms.
    pub fn truncate_to(&self, truncation: u64) -> MultiSeries {
        if truncation >= self.truncation {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.total_degree() <= truncation)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        MultiSeries { n: self.n, truncation, terms }
    }

    /// Raises the claimed truncation without adding terms.
    ///
    /// Only valid when the caller knows the series is exact (a polynomial:
    /// every absent coefficient really is zero). Used to re-truncate
    /// polynomial inputs upward when a computation needs more degrees.
    pub fn assume_exact_to(&self, truncation: u64) -> MultiSeries {
        if truncation <= self.truncation {
            return self.truncate_to(truncation);
        }
        MultiSeries { n: self.n, truncation, terms: self.terms.clone() }
    }

    fn check_same_n(&self, other: &MultiSeries) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Coefficientwise sum at truncation `min(D_a, D_b)`.
    pub fn add(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_same_n(other)?;
        let truncation = self.truncation.min(other.truncation);
        let mut out = MultiSeries::zero(self.n, truncation);
        for (e, c) in &self.terms {
            if e.total_degree() <= truncation {
                out.add_term(e.clone(), c.clone());
            }
        }
        for (e, c) in &other.terms {
            if e.total_degree() <= truncation {
                out.add_term(e.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Coefficientwise negation.
    pub fn neg(&self) -> MultiSeries {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        MultiSeries { n: self.n, truncation: self.truncation, terms }
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.add(&other.neg())
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, factor: &BigRational) -> MultiSeries {
        if factor.is_zero() {
            return MultiSeries::zero(self.n, self.truncation);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect();
        MultiSeries { n: self.n, truncation: self.truncation, terms }
    }

    /// Cauchy product truncated to `min(D_a, D_b)`.
    pub fn mul(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_same_n(other)?;
        let truncation = self.truncation.min(other.truncation);
        let mut out = MultiSeries::zero(self.n, truncation);
        for (ea, ca) in &self.terms {
            let da = ea.total_degree();
            if da > truncation {
                continue;
            }
            for (eb, cb) in &other.terms {
                if da + eb.total_degree() > truncation {
                    continue;
                }
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self^k` at the series' own truncation.
    pub fn pow(&self, k: u32) -> MultiSeries {
        let mut acc = MultiSeries::constant(self.n, self.truncation, BigRational::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same variable count");
        }
        acc
    }

    /// Multiplicative inverse up to the series' truncation.
    ///
    /// Requires a nonzero constant term. Writes `u = c(1 - w)` with `ord w >= 1`
    /// and sums the geometric series in `w`; the loop stops as soon as the
    /// running power of `w` vanishes modulo the truncation.
    pub fn inverse(&self) -> Result<MultiSeries> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotAUnit);
        }
        let one = MultiSeries::constant(self.n, self.truncation, BigRational::one());
        let c_inv = BigRational::one() / c;
        // w = 1 - u/c has no constant term
        let w = one.sub(&self.scale(&c_inv))?;
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.truncation {
            power = power.mul(&w)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scale(&c_inv))
    }

    /// Divides every term by the monomial `x^divisor`; truncation drops by
    /// the divisor's total degree.
    pub fn divide_by_monomial(&self, divisor: &ExponentVector) -> Result<MultiSeries> {
        if divisor.len() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: divisor.len() });
        }
        let truncation = self.truncation.saturating_sub(divisor.total_degree());
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            match e.checked_sub(divisor) {
                Some(q) => {
                    terms.insert(q, c.clone());
                }
                None => {
                    return Err(Error::NotDivisible {
                        divisor: divisor.entries().to_vec(),
                        term: e.entries().to_vec(),
                    })
                }
            }
        }
        Ok(MultiSeries { n: self.n, truncation, terms })
    }

    /// Substitutes the monomial curve `x_i = t^{m_i}`.
    ///
    /// Each term `c·x^a` contributes `c·t^{Σ a_i m_i}`; like powers merge. The
    /// result is trustworthy up to `(D+1)·min(m) - 1` because unknown terms of
    /// the input have total degree `>= D+1`; the returned truncation is the
    /// minimum of that bound and the caller's cap `t_cap`.
    pub fn substitute_curve(&self, m: &[u64], t_cap: i64) -> Result<UniSeries> {
        self.substitution(m, t_cap, false)
    }

    /// Substitutes a monomial curve into an exact polynomial.
    ///
    /// The caller asserts that every absent coefficient of `self` is zero, so
    /// the substitution carries no truncation loss at all.
    pub fn substitute_curve_exact(&self, m: &[u64]) -> Result<UniSeries> {
        self.substitution(m, EXACT_TRUNCATION, true)
    }

    fn substitution(&self, m: &[u64], t_cap: i64, exact: bool) -> Result<UniSeries> {
        if m.len() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: m.len() });
        }
        if m.iter().any(|&mi| mi == 0) {
            return Err(Error::NonpositiveCurveExponent);
        }
        let truncation = if exact {
            EXACT_TRUNCATION
        } else {
            let min_m = *m.iter().min().expect("nonempty") as i64;
            let reliable = (self.truncation as i64 + 1) * min_m - 1;
            reliable.min(t_cap)
        };
        let mut terms: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let t_deg = e.weighted_degree(m) as i64;
            if t_deg > truncation {
                continue;
            }
            let entry = terms.entry(t_deg).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(UniSeries::from_map(truncation, terms))
    }

    /// Pulls the series back along a monomial substitution `x_i ↦ ∏ z_j^{E[i][j]}`:
    /// the term `c·x^a` becomes `c·z^{Eᵀa}`. The result keeps every image of a
    /// stored term, so its truncation is `D · max_i deg(σ*x_i)`.
    pub fn pullback(&self, map: &MonomialMap) -> Result<MultiSeries> {
        if map.var_count() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: map.var_count() });
        }
        let truncation = self.truncation * map.max_image_degree().max(1);
        let mut out = MultiSeries::zero(self.n, truncation);
        for (e, c) in &self.terms {
            out.add_term(map.pullback_exponent(e), c.clone());
        }
        Ok(out)
    }

    /// Exact multivariate polynomial division by a single divisor.
    ///
    /// Treats both operands as exact polynomials and reduces the
    /// lexicographic leading term; a single polynomial is a Groebner basis of
    /// the ideal it generates, so the remainder vanishes iff `divisor`
    /// divides `self`. Returns the quotient on success.
    pub fn poly_divide_exact(&self, divisor: &MultiSeries) -> Result<Option<MultiSeries>> {
        self.check_same_n(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (lead_e, lead_c) = divisor.terms.iter().next_back().expect("nonzero divisor");
        let trunc = self.truncation.max(divisor.truncation);
        let mut quotient = MultiSeries::zero(self.n, trunc);
        let mut rem = self.assume_exact_to(trunc);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let Some(q_exp) = e.checked_sub(lead_e) else {
                return Ok(None);
            };
            let q_coeff = c / lead_c;
            let factor = MultiSeries::monomial(self.n, trunc, q_exp, q_coeff);
            rem = rem.sub(&factor.mul(divisor)?)?;
            quotient = quotient.add(&factor)?;
        }
        Ok(Some(quotient))
    }
}

/// Semantic equality: two series are equal iff they have the same variable
/// count and the same terms on the common truncation `min(D_a, D_b)`.
impl PartialEq for MultiSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let t = self.truncation.min(other.truncation);
        let mut a = self.terms.iter().filter(|(e, _)| e.total_degree() <= t);
        let mut b = other.terms.iter().filter(|(e, _)| e.total_degree() <= t);
        loop {
            match (a.next(), b.next()) {
                (None, None) => return true,
                (Some(x), Some(y)) if x == y => continue,
                _ => return false,
            }
        }
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiSeries(n={}, D={}, {})", self.n, self.truncation, self)
    }
}

/// Canonical human-readable form: terms ordered by total degree, then by
/// reverse lexicographic exponent (so `x1` prints before `x2`).
impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&ExponentVector, &BigRational)> = self.terms.iter().collect();
        ordered.sort_by(|(ea, _), (eb, _)| {
            ea.total_degree().cmp(&eb.total_degree()).then_with(|| eb.cmp(ea))
        });
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let negative = c < &BigRational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(e);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn format_monomial(e: &ExponentVector) -> String {
    let mut parts = Vec::new();
    for (i, &p) in e.entries().iter().enumerate() {
        if p == 1 {
            parts.push(format!("x{}", i + 1));
        } else if p > 1 {
            parts.push(format!("x{}^{}", i + 1, p));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn var(n: usize, d: u64, i: usize) -> MultiSeries {
        MultiSeries::variable(n, d, i)
    }

    #[test]
    fn add_cancels_terms() {
        // (x + y) + (-x) = y
        let x = var(2, 4, 0);
        let y = var(2, 4, 1);
        let sum = x.add(&y).unwrap().add(&x.neg()).unwrap();
        assert_eq!(sum, y);
    }

    #[test]
    fn add_zero_is_identity() {
        let f = var(2, 3, 0).mul(&var(2, 3, 1)).unwrap();
        assert_eq!(MultiSeries::zero(2, 3).add(&f).unwrap(), f);
    }

    #[test]
    fn add_merges_terms() {
        // (1 + x, D=2) + (x^2, D=2) = 1 + x + x^2
        let one = MultiSeries::constant(1, 2, rat(1));
        let x = var(1, 2, 0);
        let x2 = x.mul(&x).unwrap();
        let got = one.add(&x).unwrap().add(&x2).unwrap();
        let want = MultiSeries::from_terms(
            1,
            2,
            vec![
                (ExponentVector::new(vec![0]), rat(1)),
                (ExponentVector::new(vec![1]), rat(1)),
                (ExponentVector::new(vec![2]), rat(1)),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn add_rejects_mismatched_variable_count() {
        let f = var(2, 3, 0);
        let g = var(3, 3, 0);
        assert!(matches!(f.add(&g), Err(Error::VariableCountMismatch { .. })));
    }

    #[test]
    fn mul_difference_of_squares() {
        // (1+x)(1-x) = 1 - x^2 at D=2
        let one = MultiSeries::constant(1, 2, rat(1));
        let x = var(1, 2, 0);
        let got = one.add(&x).unwrap().mul(&one.sub(&x).unwrap()).unwrap();
        let want = one.sub(&x.mul(&x).unwrap()).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn mul_by_zero() {
        let f = var(2, 3, 0);
        assert!(f.mul(&MultiSeries::zero(2, 3)).unwrap().is_zero());
    }

    #[test]
    fn mul_binomial_square() {
        // (x+y)^2 = x^2 + 2xy + y^2 at D=2
        let x = var(2, 2, 0);
        let y = var(2, 2, 1);
        let got = x.add(&y).unwrap().pow(2);
        let want = MultiSeries::from_terms(
            2,
            2,
            vec![
                (ExponentVector::new(vec![2, 0]), rat(1)),
                (ExponentVector::new(vec![1, 1]), rat(2)),
                (ExponentVector::new(vec![0, 2]), rat(1)),
            ],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn inverse_geometric_series() {
        // The independent oracle for 1/(1+x) is the alternating geometric
        // series sum_k (-x)^k; freeze it at D=3.
        let one = MultiSeries::constant(1, 3, rat(1));
        let x = var(1, 3, 0);
        let u = one.add(&x).unwrap();
        let mut oracle = MultiSeries::zero(1, 3);
        for k in 0..=3u32 {
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            oracle = oracle.add(&x.pow(k).scale(&sign)).unwrap();
        }
        assert_eq!(u.inverse().unwrap(), oracle);
        assert_eq!(u.mul(&u.inverse().unwrap()).unwrap(), one);
    }

    #[test]
    fn inverse_of_constant() {
        let two = MultiSeries::constant(2, 5, rat(2));
        let half = MultiSeries::constant(2, 5, BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(two.inverse().unwrap(), half);
    }

    #[test]
    fn inverse_of_unit_in_first_chart_variable() {
        // 1/(1 + z1^2) = 1 - z1^2 + z1^4 at D=4
        let one = MultiSeries::constant(2, 4, rat(1));
        let z1sq = var(2, 4, 0).pow(2);
        let got = one.add(&z1sq).unwrap().inverse().unwrap();
        let want = one.sub(&z1sq).unwrap().add(&z1sq.mul(&z1sq).unwrap()).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn inverse_requires_unit() {
        assert_eq!(var(1, 3, 0).inverse(), Err(Error::NotAUnit));
    }

    #[test]
    fn divide_by_monomial_subtracts_exponents() {
        // (z1 z2^2 + z2^3) / z2^2 = z1 + z2
        let f = MultiSeries::from_terms(
            2,
            3,
            vec![
                (ExponentVector::new(vec![1, 2]), rat(1)),
                (ExponentVector::new(vec![0, 3]), rat(1)),
            ],
        );
        let got = f.divide_by_monomial(&ExponentVector::new(vec![0, 2])).unwrap();
        let want = var(2, 1, 0).add(&var(2, 1, 1)).unwrap();
        assert_eq!(got, want);
        assert_eq!(got.truncation(), 1);
    }

    #[test]
    fn divide_by_unit_monomial_is_identity() {
        let f = var(2, 3, 0).mul(&var(2, 3, 1)).unwrap();
        assert_eq!(f.divide_by_monomial(&ExponentVector::zeros(2)).unwrap(), f);
    }

    #[test]
    fn divide_reports_nondivisible_term() {
        // x^2 / x^3 must fail
        let f = var(1, 4, 0).pow(2);
        let err = f.divide_by_monomial(&ExponentVector::new(vec![3]));
        assert!(matches!(err, Err(Error::NotDivisible { .. })));
    }

    #[test]
    fn substitute_single_monomial() {
        // xy on (2,3) -> t^5
        let f = var(2, 2, 0).mul(&var(2, 2, 1)).unwrap();
        let u = f.substitute_curve_exact(&[2, 3]).unwrap();
        assert_eq!(u.ord(), Some(5));
        assert_eq!(u.coeff(5), rat(1));
        assert_eq!(u.term_count(), 1);
    }

    #[test]
    fn substitute_sum_of_squares() {
        // x^2 + y^2 on (2,3) -> t^4 + t^6
        let f = var(2, 2, 0).pow(2).add(&var(2, 2, 1).pow(2)).unwrap();
        let u = f.substitute_curve_exact(&[2, 3]).unwrap();
        assert_eq!(u.coeff(4), rat(1));
        assert_eq!(u.coeff(6), rat(1));
        assert_eq!(u.term_count(), 2);
    }

    #[test]
    fn substitution_can_annihilate() {
        // (x - y) on (1,1) -> 0
        let f = var(2, 1, 0).sub(&var(2, 1, 1)).unwrap();
        let u = f.substitute_curve(&[1, 1], 100).unwrap();
        assert!(u.is_zero());
    }

    #[test]
    fn substitute_rejects_nonpositive_curve() {
        let f = var(2, 1, 0);
        assert_eq!(f.substitute_curve(&[1, 0], 10), Err(Error::NonpositiveCurveExponent));
    }

    #[test]
    fn substitute_reports_reliable_truncation() {
        // D=2, min(m)=2: trustworthy through t^5
        let f = var(2, 2, 0);
        let u = f.substitute_curve(&[2, 3], 100).unwrap();
        assert_eq!(u.truncation(), 5);
    }

    #[test]
    fn poly_divide_exact_finds_quotient() {
        // (x^3 + x y^2) / (x^2 + y^2) = x
        let x = var(2, 3, 0);
        let y = var(2, 3, 1);
        let h = x.pow(2).add(&y.pow(2)).unwrap();
        let g = x.mul(&h).unwrap();
        let q = g.poly_divide_exact(&h).unwrap().unwrap();
        assert_eq!(q, x);
    }

    #[test]
    fn poly_divide_exact_rejects_nondivisor() {
        let x = var(2, 2, 0);
        let y = var(2, 2, 1);
        let g = x.mul(&y).unwrap();
        let h = x.pow(2).add(&y.pow(2)).unwrap();
        assert_eq!(g.poly_divide_exact(&h).unwrap(), None);
    }

    #[test]
    fn display_is_parse_friendly() {
        let x = var(2, 3, 0);
        let y = var(2, 3, 1);
        let f = x.pow(2).sub(&y).unwrap().add(&MultiSeries::constant(2, 3, rat(1))).unwrap();
        assert_eq!(f.to_string(), "1 - x2 + x1^2");
    }

    #[test]
    fn equality_compares_on_common_truncation() {
        let a = MultiSeries::constant(1, 1, rat(1)).add(&var(1, 1, 0)).unwrap();
        let b = MultiSeries::constant(1, 3, rat(1))
            .add(&var(1, 3, 0))
            .unwrap()
            .add(&var(1, 3, 0).pow(3))
            .unwrap();
        // agree below degree 2, so equal on the common truncation 1
        assert_eq!(a, b);
        assert_ne!(b, var(1, 3, 0));
    }
}
