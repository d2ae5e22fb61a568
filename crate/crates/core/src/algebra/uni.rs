//! Truncated one-variable series in `t`, with Laurent range for quotients.
//!
//! A `UniSeries` stores coefficients of `t^e` for `e <= truncation`; the
//! exponent may be negative, which is how a pole of `g∘ρ / h∘ρ` shows up.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A finitely supported map `exponent -> coefficient` together with the
/// truncation up to which the coefficients are trustworthy. The order `ord`
/// of the zero series is represented as `None` rather than a sentinel.
#[derive(Clone)]
pub struct UniSeries {
    truncation: i64,
    terms: BTreeMap<i64, BigRational>,
}

impl UniSeries {
    pub fn zero(truncation: i64) -> Self {
        UniSeries { truncation, terms: BTreeMap::new() }
    }

    /// Builds from a map, purging zero coefficients and terms above the
    /// truncation.
    pub fn from_map(truncation: i64, mut terms: BTreeMap<i64, BigRational>) -> Self {
        terms.retain(|e, c| *e <= truncation && !c.is_zero());
        UniSeries { truncation, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(truncation: i64, terms: I) -> Self {
        let mut map: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        Self::from_map(truncation, map)
    }

    pub fn monomial(truncation: i64, exponent: i64, coefficient: BigRational) -> Self {
        Self::from_terms(truncation, [(exponent, coefficient)])
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest stored exponent; `None` for the zero series.
    pub fn ord(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, exponent: i64) -> BigRational {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn truncate_to(&self, truncation: i64) -> UniSeries {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| **e <= truncation)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        UniSeries { truncation: truncation.min(self.truncation), terms }
    }

    pub fn add(&self, other: &UniSeries) -> UniSeries {
        let truncation = self.truncation.min(other.truncation);
        let mut map = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            let entry = map.entry(*e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        Self::from_map(truncation, map)
    }

    pub fn neg(&self) -> UniSeries {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect();
        UniSeries { truncation: self.truncation, terms }
    }

    pub fn sub(&self, other: &UniSeries) -> UniSeries {
        self.add(&other.neg())
    }

    /// Product with the tightest reliable truncation: the unknown tails
    /// contribute from `ord(a) + T_b + 1` and `ord(b) + T_a + 1` upward.
    pub fn mul(&self, other: &UniSeries) -> UniSeries {
        let eff_ord_a = self.ord().unwrap_or(self.truncation.saturating_add(1));
        let eff_ord_b = other.ord().unwrap_or(other.truncation.saturating_add(1));
        let truncation = (self.truncation.saturating_add(eff_ord_b))
            .min(other.truncation.saturating_add(eff_ord_a));
        let mut map: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e > truncation {
                    break; // other is sorted ascending
                }
                let entry = map.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        Self::from_map(truncation, map)
    }

    /// Laurent quotient `self / other`, computed up to `min(reliable, cap)`.
    ///
    /// Writing `self = t^α·A` and `other = t^β·B` with `A(0), B(0) ≠ 0`, the
    /// quotient is `t^{α-β}·A·B^{-1}`; the unknown tails limit reliability to
    /// `min(T_a - β, T_b + α - 2β)`. `B^{-1}` is computed by the standard
    /// recurrence `c_0 = 1/b_0`, `c_k = -(1/b_0)·Σ_{j=1..k} b_j c_{k-j}`.
    pub fn div(&self, other: &UniSeries, cap: i64) -> Result<UniSeries> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let beta = other.ord().expect("nonzero");
        if self.is_zero() {
            // 0/other is zero as far as self is known: O(t^{T_a+1-β})
            return Ok(UniSeries::zero(self.truncation.saturating_sub(beta).min(cap)));
        }
        let alpha = self.ord().expect("nonzero");
        let reliable = (self.truncation.saturating_sub(beta))
            .min(other.truncation.saturating_add(alpha).saturating_sub(2 * beta));
        let truncation = reliable.min(cap);
        let shift = alpha - beta;
        // precision needed for the unit-part product
        let precision = truncation - shift;
        if precision < 0 {
            return Ok(UniSeries::zero(truncation));
        }
        let b0 = other.coeff(beta);
        let b0_inv = BigRational::one() / &b0;
        // inverse of the unit part of `other`
        let mut inv: Vec<BigRational> = Vec::with_capacity(precision as usize + 1);
        inv.push(b0_inv.clone());
        for k in 1..=precision {
            let mut sum = BigRational::zero();
            for j in 1..=k {
                let bj = other.coeff(beta + j);
                if bj.is_zero() {
                    continue;
                }
                sum += bj * &inv[(k - j) as usize];
            }
            inv.push(-&b0_inv * sum);
        }
        let mut map: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let base = ea - alpha;
            for (k, c_inv) in inv.iter().enumerate() {
                let e = shift + base + k as i64;
                if e > truncation {
                    break;
                }
                if c_inv.is_zero() {
                    continue;
                }
                let entry = map.entry(e).or_insert_with(BigRational::zero);
                *entry += ca * c_inv;
            }
        }
        Ok(Self::from_map(truncation, map))
    }
}

/// Semantic equality on the common truncation.
impl PartialEq for UniSeries {
    fn eq(&self, other: &Self) -> bool {
        let t = self.truncation.min(other.truncation);
        let a = self.terms.iter().filter(|(e, _)| **e <= t);
        let b = other.terms.iter().filter(|(e, _)| **e <= t);
        a.eq(b)
    }
}

impl fmt::Debug for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniSeries(T={}, {})", self.truncation, self)
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
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
            match *e {
                0 => write!(f, "{abs}")?,
                1 if abs.is_one() => write!(f, "t")?,
                1 => write!(f, "{abs}*t")?,
                _ if abs.is_one() => write!(f, "t^{e}")?,
                _ => write!(f, "{abs}*t^{e}")?,
            }
        }
        Ok(())
    }
}
