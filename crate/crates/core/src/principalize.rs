//! Monomial-ideal principalization through elementary-move chart search,
//! and the regularization of series tuples built on top of it.
//!
//! The search blows up codimension-2 coordinate centers only; every chart is
//! then a single r=2 elementary move, and a depth-first walk with a
//! deterministic center rule finds the first chart in which the pulled-back
//! ideal becomes principal.

use num_traits::Zero;

use crate::algebra::{ExponentVector, MultiSeries};
use crate::blowup::{ElementaryMove, MoveSequence};
use crate::error::{Error, Result};

/// A monomial ideal stored by its minimal generators: an antichain under
/// componentwise divisibility, kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Minimalizes a generator list: deduplicate, drop every generator that
    /// is divisible by another, sort lexicographically.
    pub fn from_generators(n: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.len() != n {
                return Err(Error::VariableCountMismatch { left: n, right: g.len() });
            }
        }
        let mut minimal: Vec<ExponentVector> = Vec::new();
        for g in &gens {
            if gens.iter().any(|h| h != g && h.divides(g) && !g.divides(h)) {
                continue;
            }
            if !minimal.contains(g) {
                minimal.push(g.clone());
            }
        }
        minimal.sort();
        Ok(MonomialIdeal { n, gens: minimal })
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    /// The single generator dividing all others, if the ideal is principal.
    pub fn principal_generator(&self) -> Option<&ExponentVector> {
        if self.gens.len() == 1 {
            Some(&self.gens[0])
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Deterministic blow-up center for a non-principal ideal, `None` when
    /// principal.
    ///
    /// Takes the lexicographically first incomparable generator pair `(a, b)`,
    /// forms the componentwise min `g`, and returns the smallest variable
    /// index where `a` exceeds `g` paired with the smallest where `b` does,
    /// normalized so `i < j`. Both indices are 0-based.
    pub fn select_center(&self) -> Option<(usize, usize)> {
        let (a, b) = (0..self.gens.len())
            .flat_map(|i| (i + 1..self.gens.len()).map(move |j| (i, j)))
            .map(|(i, j)| (&self.gens[i], &self.gens[j]))
            .find(|(a, b)| !a.divides(b) && !b.divides(a))?;
        let g = a.min_with(b);
        let i = (0..self.n).find(|&k| a.get(k) > g.get(k)).expect("a exceeds g somewhere");
        let j = (0..self.n).find(|&k| b.get(k) > g.get(k)).expect("b exceeds g somewhere");
        Some((i.min(j), i.max(j)))
    }

    /// Pulls the ideal back along one move and minimalizes.
    pub fn pullback(&self, mv: &ElementaryMove) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| mv.pullback_exponent(g)).collect();
        MonomialIdeal::from_generators(self.n, gens).expect("pullback of nonempty is nonempty")
    }

    /// The two charts of the blow-up with center `(x_i = x_j = 0)`: first the
    /// chart where `x_i` picks up the divider (`x_i = z z'`, `x_j` divides),
    /// then the symmetric one.
    pub fn expand_chart(&self, center: (usize, usize)) -> Result<[(ElementaryMove, MonomialIdeal); 2]> {
        let (i, j) = center;
        let chart_a = ElementaryMove::codim2_chart(self.n, i, j)?;
        let child_a = self.pullback(&chart_a);
        let chart_b = ElementaryMove::codim2_chart(self.n, j, i)?;
        let child_b = self.pullback(&chart_b);
        Ok([(chart_a, child_a), (chart_b, child_b)])
    }
}

/// A chart in which the pulled-back ideal became principal.
///
/// Construction re-checks the soundness conditions: the principal monomial
/// divides every pulled-back original generator and equals one of them.
#[derive(Clone, Debug)]
pub struct PrincipalizationResult {
    path: MoveSequence,
    principal: ExponentVector,
    chart_gens: Vec<ExponentVector>,
    source_index: usize,
}

impl PrincipalizationResult {
    fn checked(ideal: &MonomialIdeal, path: MoveSequence, principal: ExponentVector) -> Result<Self> {
        let chart_gens: Vec<ExponentVector> =
            ideal.generators().iter().map(|g| path.pullback_exponent(g)).collect();
        if let Some(bad) = chart_gens.iter().find(|g| !principal.divides(g)) {
            return Err(Error::Internal(format!(
                "principal monomial {principal:?} does not divide pulled-back generator {bad:?}"
            )));
        }
        let Some(source_index) = chart_gens.iter().position(|g| *g == principal) else {
            return Err(Error::Internal(
                "principal monomial is not the pullback of an original generator".into(),
            ));
        };
        if !path.composite().is_unimodular() {
            return Err(Error::Internal("composite chart matrix is not unimodular".into()));
        }
        Ok(PrincipalizationResult { path, principal, chart_gens, source_index })
    }

    pub fn path(&self) -> &MoveSequence {
        &self.path
    }

    /// Exponent of the principal generator in chart coordinates.
    pub fn principal(&self) -> &ExponentVector {
        &self.principal
    }

    /// Pullbacks of the original generators into the final chart.
    pub fn chart_generators(&self) -> &[ExponentVector] {
        &self.chart_gens
    }

    /// Index of the original generator whose pullback is the principal one.
    pub fn source_index(&self) -> usize {
        self.source_index
    }
}

/// Depth-first chart search returning the first chart (in deterministic
/// order) whose pulled-back ideal is principal.
///
/// The i-chart child is explored before the j-chart child. `budget` bounds
/// the number of chart expansions; termination is guaranteed mathematically,
/// the budget guards implementation bugs.
pub fn principalize_search(ideal: &MonomialIdeal, budget: u64) -> Result<PrincipalizationResult> {
    let mut expansions = 0u64;
    let mut stack: Vec<(MonomialIdeal, Vec<ElementaryMove>)> = vec![(ideal.clone(), Vec::new())];
    while let Some((current, path)) = stack.pop() {
        if let Some(m) = current.principal_generator() {
            let seq = MoveSequence::new(ideal.var_count(), path)?;
            return PrincipalizationResult::checked(ideal, seq, m.clone());
        }
        if expansions == budget {
            return Err(Error::BudgetExceeded { budget });
        }
        expansions += 1;
        let center = current.select_center().expect("non-principal ideal has a center");
        let [(mv_a, child_a), (mv_b, child_b)] = current.expand_chart(center)?;
        // push B first so the A-subtree is explored first
        let mut path_b = path.clone();
        path_b.push(mv_b);
        stack.push((child_b, path_b));
        let mut path_a = path;
        path_a.push(mv_a);
        stack.push((child_a, path_a));
    }
    unreachable!("search stack starts nonempty and returns from inside the loop")
}

/// Exhaustive variant visiting every leaf of the chart tree; all leaves are
/// driven to principal pullbacks. The cover witnesses that the blown-up
/// space is covered by charts on which the ideal is principal.
pub fn principalize_all_leaves(ideal: &MonomialIdeal, budget: u64) -> Result<Vec<PrincipalizationResult>> {
    let mut expansions = 0u64;
    let mut leaves = Vec::new();
    let mut stack: Vec<(MonomialIdeal, Vec<ElementaryMove>)> = vec![(ideal.clone(), Vec::new())];
    while let Some((current, path)) = stack.pop() {
        if let Some(m) = current.principal_generator() {
            let seq = MoveSequence::new(ideal.var_count(), path)?;
            leaves.push(PrincipalizationResult::checked(ideal, seq, m.clone())?);
            continue;
        }
        if expansions == budget {
            return Err(Error::BudgetExceeded { budget });
        }
        expansions += 1;
        let center = current.select_center().expect("non-principal ideal has a center");
        let [(mv_a, child_a), (mv_b, child_b)] = current.expand_chart(center)?;
        let mut path_b = path.clone();
        path_b.push(mv_b);
        stack.push((child_b, path_b));
        let mut path_a = path;
        path_a.push(mv_a);
        stack.push((child_a, path_a));
    }
    Ok(leaves)
}

/// The monomial ideal generated by every exponent appearing in any of the
/// series (within their truncations).
pub fn support_ideal(series: &[MultiSeries]) -> Result<MonomialIdeal> {
    let Some(first) = series.first() else {
        return Err(Error::AllSeriesZero);
    };
    let n = first.var_count();
    let mut gens = Vec::new();
    for s in series {
        if s.var_count() != n {
            return Err(Error::VariableCountMismatch { left: n, right: s.var_count() });
        }
        gens.extend(s.support().cloned());
    }
    if gens.is_empty() {
        return Err(Error::AllSeriesZero);
    }
    MonomialIdeal::from_generators(n, gens)
}

/// Output of tuple regularization: after the moves in `path`, dividing each
/// pulled-back series by the monomial `z^principal` yields power series, at
/// least one of which is a unit.
#[derive(Clone, Debug)]
pub struct RegularizedTuple {
    pub path: MoveSequence,
    pub principal: ExponentVector,
    pub regularized: Vec<MultiSeries>,
    pub unit_index: usize,
}

/// Principalizes the support ideal of the tuple, pulls every series back
/// along the resulting chart path, and divides by the principal monomial.
///
/// Both conclusions are checked explicitly: divisibility (a `NotDivisible`
/// here is an internal inconsistency) and the existence of an index with
/// nonzero constant term.
pub fn regularize_tuple(series: &[MultiSeries], budget: u64) -> Result<RegularizedTuple> {
    let result = principalize_search(&support_ideal(series)?, budget)?;
    let mut regularized = Vec::with_capacity(series.len());
    for s in series {
        let mut pulled = s.clone();
        for mv in result.path().moves() {
            pulled = mv.pullback_series(&pulled)?;
        }
        let reduced = pulled.divide_by_monomial(result.principal()).map_err(|e| {
            Error::Internal(format!("principal monomial must divide every pulled-back series: {e}"))
        })?;
        regularized.push(reduced);
    }
    let Some(unit_index) = regularized.iter().position(|s| !s.constant_term().is_zero()) else {
        return Err(Error::Internal("no regularized series is a unit at the origin".into()));
    };
    Ok(RegularizedTuple {
        path: result.path().clone(),
        principal: result.principal().clone(),
        regularized,
        unit_index,
    })
}
