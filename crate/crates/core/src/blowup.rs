//! Elementary monomial coordinate changes: pullback, composition,
//! liftability, and monomial-curve transport.
//!
//! A move permutes the coordinates and then applies the standard chart map
//! of a coordinate-subspace blow-up: the variable in chart slot `r` divides,
//! the variables in the slots before it get multiplied by it.

use std::fmt;

use crate::algebra::{ExponentVector, MonomialMap, MultiSeries};
use crate::error::{Error, Result};

/// One elementary monomial coordinate change.
///
/// `perm[s]` is the (0-based) index of the original variable occupying chart
/// slot `s`; `r` is the paper-facing 1-based chart index with `1 < r <= n`.
/// The induced substitution is `x_{perm[s]} = z_s·z_{r-1}` for `s < r-1` and
/// `x_{perm[s]} = z_s` otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryMove {
    perm: Vec<usize>,
    r: usize,
}

impl ElementaryMove {
    pub fn new(perm: Vec<usize>, r: usize) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidMove(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if r < 2 || r > n {
            return Err(Error::InvalidMove(format!("chart index r={r} out of range 1 < r <= {n}")));
        }
        Ok(ElementaryMove { perm, r })
    }

    /// The identity-permutation move with chart index `r`.
    pub fn standard(n: usize, r: usize) -> Result<Self> {
        Self::new((0..n).collect(), r)
    }

    /// The r=2 move in which `x_multiplied` becomes `z·(divider chart var)`
    /// and `x_divider` becomes the divider chart variable; the remaining
    /// variables keep their relative order in the later slots.
    pub fn codim2_chart(n: usize, multiplied: usize, divider: usize) -> Result<Self> {
        if multiplied >= n || divider >= n || multiplied == divider {
            return Err(Error::InvalidMove("center indices out of range or equal".into()));
        }
        let mut perm = vec![multiplied, divider];
        perm.extend((0..n).filter(|&k| k != multiplied && k != divider));
        Self::new(perm, 2)
    }

    pub fn var_count(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Paper-facing 1-based chart index.
    pub fn r(&self) -> usize {
        self.r
    }

    /// 0-based divider slot.
    fn slot(&self) -> usize {
        self.r - 1
    }

    /// The move as an explicit monomial substitution matrix.
    pub fn matrix(&self) -> MonomialMap {
        let n = self.perm.len();
        let divider = self.slot();
        let mut rows = vec![vec![0u64; n]; n];
        for (s, &k) in self.perm.iter().enumerate() {
            rows[k][s] += 1;
            if s < divider {
                rows[k][divider] += 1;
            }
        }
        MonomialMap::from_rows(rows).expect("square by construction")
    }

    /// Pullback on a single exponent: `a'_s = a_{perm[s]}` off the divider
    /// slot, and the divider slot collects `Σ_{s <= r-1} a_{perm[s]}`.
    pub fn pullback_exponent(&self, a: &ExponentVector) -> ExponentVector {
        assert_eq!(a.len(), self.perm.len(), "exponent length mismatch");
        let divider = self.slot();
        let entries = (0..self.perm.len())
            .map(|s| {
                if s == divider {
                    (0..=divider).map(|t| a.get(self.perm[t])).sum()
                } else {
                    a.get(self.perm[s])
                }
            })
            .collect();
        ExponentVector::new(entries)
    }

    /// Pullback on a whole series, via the matrix.
    pub fn pullback_series(&self, f: &MultiSeries) -> Result<MultiSeries> {
        f.pullback(&self.matrix())
    }

    /// Decides whether a chart exponent descends through this move.
    ///
    /// `A_r = a'_r - (a'_1 + … + a'_{r-1})`; the exponent lifts iff
    /// `A_r >= 0`, and then the lift is the unique `b` with
    /// `pullback_exponent(b) = a'`.
    pub fn liftability(&self, a_chart: &ExponentVector) -> Lift {
        assert_eq!(a_chart.len(), self.perm.len(), "exponent length mismatch");
        let divider = self.slot();
        let below: u64 = (0..divider).map(|s| a_chart.get(s)).sum();
        let a_r = a_chart.get(divider) as i64 - below as i64;
        let lifted = if a_r >= 0 {
            let mut entries = vec![0u64; self.perm.len()];
            for (s, &k) in self.perm.iter().enumerate() {
                entries[k] = if s == divider { a_r as u64 } else { a_chart.get(s) };
            }
            Some(ExponentVector::new(entries))
        } else {
            None
        };
        Lift { a_r, lifted }
    }

    /// Pushes a chart curve down: `m_{perm[s]} = m'_s + m'_{r-1}` for slots
    /// before the divider, `m'_s` otherwise. Satisfies
    /// `F∘ρ_down = (F∘σ)∘ρ_up` for every series `F`.
    pub fn transport_curve(&self, up: &MonomialCurve) -> MonomialCurve {
        assert_eq!(up.len(), self.perm.len(), "curve length mismatch");
        let divider = self.slot();
        let mut entries = vec![0u64; self.perm.len()];
        for (s, &k) in self.perm.iter().enumerate() {
            entries[k] = if s < divider {
                up.exponents()[s] + up.exponents()[divider]
            } else {
                up.exponents()[s]
            };
        }
        MonomialCurve::new(entries).expect("transport preserves positivity")
    }
}

impl fmt::Display for ElementaryMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "(perm [{}], r={})", perm.join(" "), self.r)
    }
}

/// Outcome of a liftability test: the defect `A_r` and, when `A_r >= 0`,
/// the unique preimage exponent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lift {
    pub a_r: i64,
    pub lifted: Option<ExponentVector>,
}

impl Lift {
    pub fn is_liftable(&self) -> bool {
        self.lifted.is_some()
    }
}

/// The parametrized curve `t ↦ (t^{m_1}, …, t^{m_n})` with positive `m_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialCurve(Vec<u64>);

impl MonomialCurve {
    pub fn new(exponents: Vec<u64>) -> Result<Self> {
        if exponents.is_empty() || exponents.contains(&0) {
            return Err(Error::NonpositiveCurveExponent);
        }
        Ok(MonomialCurve(exponents))
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for MonomialCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An ordered list of elementary moves with its cached composite map.
///
/// `moves[0]` acts first: it maps chart level 1 down to the original
/// coordinates, `moves[k]` maps level `k+1` down to level `k`. The composite
/// matrix is the ordered product of the per-move matrices and is always
/// unimodular with nonnegative entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveSequence {
    n: usize,
    moves: Vec<ElementaryMove>,
    composite: MonomialMap,
}

impl MoveSequence {
    pub fn new(n: usize, moves: Vec<ElementaryMove>) -> Result<Self> {
        let mut composite = MonomialMap::identity(n);
        for mv in &moves {
            if mv.var_count() != n {
                return Err(Error::VariableCountMismatch { left: n, right: mv.var_count() });
            }
            composite = composite.compose(&mv.matrix())?;
        }
        Ok(MoveSequence { n, moves, composite })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, Vec::new()).expect("empty sequence is valid")
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn moves(&self) -> &[ElementaryMove] {
        &self.moves
    }

    /// The composite monomial map `σ̄` of the whole sequence.
    pub fn composite(&self) -> &MonomialMap {
        &self.composite
    }

    /// Pullback of an exponent along the whole sequence.
    pub fn pullback_exponent(&self, a: &ExponentVector) -> ExponentVector {
        self.composite.pullback_exponent(a)
    }

    /// Transports a curve from the deepest chart all the way down.
    pub fn transport_curve(&self, up: &MonomialCurve) -> MonomialCurve {
        MonomialCurve::new(self.composite.push_curve(up.exponents()))
            .expect("unimodular nonnegative matrices preserve positivity")
    }
}
