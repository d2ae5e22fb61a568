//! The decision procedure for analyticity of a meromorphic germ `F = g/h`
//! at the origin: the finite curve test, the liftability descent through a
//! regularizing chart path, witness construction and transport, and the
//! top-level three-valued verdict.

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{ExponentVector, MultiSeries, UniSeries, EXACT_TRUNCATION};
use crate::blowup::{ElementaryMove, MonomialCurve, MoveSequence};
use crate::error::{Error, Result};
use crate::principalize::regularize_tuple;
use crate::semigroup::{choose_unique_tuple, enumerate_representations, NumericalSemigroup};

/// A quotient of power series `F = g/h`.
///
/// `exact` records whether the stored terms are the whole truth (polynomial
/// input); only then may the procedure re-truncate upward on demand, and only
/// then can a positive verdict be certified.
#[derive(Clone, Debug)]
pub struct MeromorphicGerm {
    g: MultiSeries,
    h: MultiSeries,
    exact: bool,
}

impl MeromorphicGerm {
    /// Truncated-series input: nothing is assumed beyond the stored terms.
    pub fn new(g: MultiSeries, h: MultiSeries) -> Result<Self> {
        Self::build(g, h, false)
    }

    /// Polynomial input: every absent coefficient is zero.
    pub fn from_polynomials(g: MultiSeries, h: MultiSeries) -> Result<Self> {
        Self::build(g, h, true)
    }

    fn build(g: MultiSeries, h: MultiSeries, exact: bool) -> Result<Self> {
        if g.var_count() != h.var_count() {
            return Err(Error::VariableCountMismatch { left: g.var_count(), right: h.var_count() });
        }
        if h.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(MeromorphicGerm { g, h, exact })
    }

    pub fn numerator(&self) -> &MultiSeries {
        &self.g
    }

    pub fn denominator(&self) -> &MultiSeries {
        &self.h
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn var_count(&self) -> usize {
        self.g.var_count()
    }

    /// The germ in chart coordinates: both sides pulled back along one move.
    pub fn pullback(&self, mv: &ElementaryMove) -> Result<MeromorphicGerm> {
        Self::build(mv.pullback_series(&self.g)?, mv.pullback_series(&self.h)?, self.exact)
    }

    fn substituted_pair(&self, m: &MonomialCurve) -> Result<(UniSeries, UniSeries)> {
        if self.exact {
            Ok((self.g.substitute_curve_exact(m.exponents())?, self.h.substitute_curve_exact(m.exponents())?))
        } else {
            Ok((
                self.g.substitute_curve(m.exponents(), EXACT_TRUNCATION)?,
                self.h.substitute_curve(m.exponents(), EXACT_TRUNCATION)?,
            ))
        }
    }
}

/// Outcome of the finite curve test along one monomial curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveCheckReport {
    pub curve: MonomialCurve,
    pub passed: bool,
    /// Smallest t-exponent with nonzero coefficient outside `⟨m⟩`; for a pole
    /// it is the (negative) order of `F∘ρ`.
    pub offending_exponent: Option<i64>,
    pub offending_coefficient: Option<BigRational>,
    /// t-degree up to which the quotient was examined.
    pub truncation_used: i64,
    pub pole: bool,
}

/// The t-degree below which condition membership must be checked: every
/// larger exponent that can occur (necessarily divisible by `gcd(m)`) lies
/// in `⟨m⟩`. Equals `gcd(m) · (Frobenius(reduced m) + 1)`.
pub fn required_truncation(m: &MonomialCurve) -> u64 {
    let sg = NumericalSemigroup::new(m.exponents()).expect("positive curve exponents");
    sg.gcd() * (sg.frobenius() + 1) as u64
}

/// Tests `F∘ρ ∈ ℝ[[t^{m_1}, …, t^{m_n}]]` for `ρ : t ↦ (t^{m_1}, …)`.
///
/// Substitutes numerator and denominator, compares orders (a negative
/// quotient order is a pole and fails immediately), and scans the quotient
/// below the required truncation for an exponent outside the semigroup.
pub fn curve_check(germ: &MeromorphicGerm, m: &MonomialCurve) -> Result<CurveCheckReport> {
    if m.len() != germ.var_count() {
        return Err(Error::VariableCountMismatch { left: germ.var_count(), right: m.len() });
    }
    let scan_to = required_truncation(m) as i64 - 1;
    let (ug, uh) = germ.substituted_pair(m)?;
    if uh.is_zero() {
        return Err(Error::CurveInPoleLocus);
    }
    let beta = uh.ord().expect("nonzero");
    let min_m = *m.exponents().iter().min().expect("nonempty");
    if ug.is_zero() {
        // F∘ρ = 0 as far as the numerator is known
        if germ.exact || ug.truncation().saturating_sub(beta) >= scan_to {
            return Ok(passed_report(m, scan_to));
        }
        return Err(insufficient(germ, scan_to, beta, beta, min_m));
    }
    let alpha = ug.ord().expect("nonzero");
    if alpha < beta {
        // F is unbounded along the curve
        let lead = ug.coeff(alpha) / uh.coeff(beta);
        return Ok(CurveCheckReport {
            curve: m.clone(),
            passed: false,
            offending_exponent: Some(alpha - beta),
            offending_coefficient: Some(lead),
            truncation_used: scan_to,
            pole: true,
        });
    }
    let q = ug.div(&uh, scan_to)?;
    if q.truncation() < scan_to {
        return Err(insufficient(germ, scan_to, beta, 2 * beta - alpha, min_m));
    }
    let sg = NumericalSemigroup::new(m.exponents())?;
    for (e, c) in q.terms() {
        if !sg.contains_signed(*e) {
            return Ok(CurveCheckReport {
                curve: m.clone(),
                passed: false,
                offending_exponent: Some(*e),
                offending_coefficient: Some(c.clone()),
                truncation_used: scan_to,
                pole: false,
            });
        }
    }
    Ok(passed_report(m, scan_to))
}

fn passed_report(m: &MonomialCurve, scan_to: i64) -> CurveCheckReport {
    CurveCheckReport {
        curve: m.clone(),
        passed: true,
        offending_exponent: None,
        offending_coefficient: None,
        truncation_used: scan_to,
        pole: false,
    }
}

fn insufficient(germ: &MeromorphicGerm, scan_to: i64, shift_num: i64, shift_den: i64, min_m: u64) -> Error {
    // needed x-degree: ceil((ord shift + required truncation) / min(m))
    let worst_shift = shift_num.max(shift_den).max(0) as u64;
    let needed = (scan_to.max(0) as u64 + worst_shift + 1).div_ceil(min_m);
    Error::InsufficientTruncation {
        needed,
        stored: germ.g.truncation().min(germ.h.truncation()),
    }
}

/// Attempts to lift every support exponent of a chart expansion down the
/// whole move path, deepest move first.
///
/// Returns the first failing exponent — lowest total degree, then
/// lexicographic — together with the index of the move at which its lift
/// fails (the exponent is returned in that move's chart coordinates).
/// `None` means every exponent lifts through every move.
pub fn liftability_scan(expansion: &MultiSeries, path: &MoveSequence) -> Option<(usize, ExponentVector)> {
    let mut support: Vec<&ExponentVector> = expansion.support().collect();
    support.sort_by_key(|e| e.total_degree());
    for start in support {
        let mut current = start.clone();
        for (level, mv) in path.moves().iter().enumerate().rev() {
            match mv.liftability(&current).lifted {
                Some(lifted) => current = lifted,
                None => return Some((level, current)),
            }
        }
    }
    None
}

/// A monomial-curve witness built from a non-liftable chart exponent.
#[derive(Clone, Debug)]
pub struct Step3Witness {
    /// Unique-representation tuple `m'` in the chart upstairs.
    pub unique_tuple: Vec<u64>,
    /// `Σ a'_i m'_i`, the t-degree at which the curve test must fail.
    pub predicted_exponent: i64,
    /// The transported curve downstairs, on which the failure shows.
    pub curve: MonomialCurve,
}

/// Builds the witness curve for an exponent with `A_r < 0`: choose `m'` so
/// that `Σ c_i m'_i = Σ a'_i m'_i` has only the trivial solution, transport
/// it through the move, and predict the offending t-exponent.
///
/// The uniqueness of the representation (no cancellation) and the
/// non-membership of the predicted exponent in the transported semigroup are
/// both re-checked here.
pub fn step3_witness(a_chart: &ExponentVector, mv: &ElementaryMove, tuple_budget: usize) -> Result<Step3Witness> {
    if mv.liftability(a_chart).is_liftable() {
        return Err(Error::ExponentLiftable);
    }
    let unique_tuple = choose_unique_tuple(a_chart, tuple_budget)?;
    let target = a_chart.weighted_degree(&unique_tuple);
    if enumerate_representations(&unique_tuple, target).len() != 1 {
        return Err(Error::Internal("unique-representation tuple failed its own check".into()));
    }
    let up = MonomialCurve::new(unique_tuple.clone())?;
    let curve = mv.transport_curve(&up);
    let sg = NumericalSemigroup::new(curve.exponents())?;
    if sg.contains_signed(target as i64) {
        return Err(Error::Internal(
            "predicted exponent is representable by the transported curve".into(),
        ));
    }
    Ok(Step3Witness { unique_tuple, predicted_exponent: target as i64, curve })
}

/// Transports a failing report one level down: the curve is replaced by its
/// transport, the offending exponent is unchanged, and the claim is
/// re-verified by direct substitution into the lower-level germ.
///
/// Soundness rests on `⟨transported m⟩ ⊆ ⟨m'⟩` (each transported generator is
/// `m'_i` or `m'_i + m'_r`), so non-membership persists, and on
/// `F∘ρ = F'∘ρ'`, so the coefficient persists.
pub fn witness_transport(
    report: &CurveCheckReport,
    mv: &ElementaryMove,
    lower: &MeromorphicGerm,
) -> Result<CurveCheckReport> {
    if report.passed {
        return Err(Error::Internal("cannot transport a passing report".into()));
    }
    let curve = mv.transport_curve(&report.curve);
    let (ug, uh) = lower.substituted_pair(&curve)?;
    if uh.is_zero() {
        return Err(Error::Internal("transported curve fell into the pole locus".into()));
    }
    let e = report
        .offending_exponent
        .ok_or_else(|| Error::Internal("failing report lacks an offending exponent".into()))?;
    if report.pole {
        let alpha = ug.ord().ok_or_else(|| Error::Internal("pole report with zero numerator".into()))?;
        let beta = uh.ord().expect("nonzero");
        if alpha - beta != e {
            return Err(Error::Internal("pole order changed under transport".into()));
        }
        let lead = ug.coeff(alpha) / uh.coeff(beta);
        if Some(&lead) != report.offending_coefficient.as_ref() {
            return Err(Error::Internal("pole coefficient changed under transport".into()));
        }
        return Ok(CurveCheckReport { curve, truncation_used: e, ..report.clone() });
    }
    let sg = NumericalSemigroup::new(curve.exponents())?;
    if sg.contains_signed(e) {
        return Err(Error::Internal(
            "offending exponent became representable under transport".into(),
        ));
    }
    let q = ug.div(&uh, e)?;
    if q.truncation() < e {
        return Err(Error::InsufficientTruncation {
            needed: e.max(0) as u64,
            stored: lower.g.truncation().min(lower.h.truncation()),
        });
    }
    let coeff = q.coeff(e);
    if Some(&coeff) != report.offending_coefficient.as_ref() {
        return Err(Error::Internal("offending coefficient changed under transport".into()));
    }
    Ok(CurveCheckReport {
        curve,
        passed: false,
        offending_exponent: Some(e),
        offending_coefficient: Some(coeff),
        truncation_used: e,
        pole: false,
    })
}

/// Recomputes the curve test from scratch and compares against a claimed
/// failure. Returns `false` on any mismatch; used before emitting any
/// negative verdict and as an independent oracle in tests.
pub fn verify_witness(germ: &MeromorphicGerm, report: &CurveCheckReport) -> bool {
    if report.passed {
        return false;
    }
    match curve_check(germ, &report.curve) {
        Ok(fresh) => {
            !fresh.passed
                && fresh.pole == report.pole
                && fresh.offending_exponent == report.offending_exponent
                && fresh.offending_coefficient == report.offending_coefficient
        }
        Err(_) => false,
    }
}

/// How a positive verdict was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// The denominator is a unit; the quotient expansion is `g·h⁻¹`.
    UnitDenominator,
    /// The denominator divides the numerator exactly as polynomials.
    ExactDivision,
    /// The regularized chart expansion lifted fully and re-multiplied.
    RegularizedLift,
}

/// A checkable analyticity certificate: `quotient · h = g` up to the
/// truncation the verdict reports.
#[derive(Clone, Debug)]
pub struct AnalyticCertificate {
    pub kind: CertificateKind,
    pub quotient: MultiSeries,
}

/// Why no verdict could be certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// Input is a truncated series; a positive verdict needs polynomial data.
    TruncatedSeriesInput,
    /// Scanned exponents lift, but the lifted quotient does not re-multiply
    /// to the numerator within the truncation budget.
    LiftCertificateIncomplete,
    /// A search budget was exhausted before reaching a conclusion.
    BudgetExhausted,
}

impl InconclusiveReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            InconclusiveReason::TruncatedSeriesInput => "truncated-series-input",
            InconclusiveReason::LiftCertificateIncomplete => "lift-certificate-incomplete",
            InconclusiveReason::BudgetExhausted => "budget-exhausted",
        }
    }
}

/// One step of the witness derivation: where the lift failed and which
/// unique-representation tuple was chosen there.
#[derive(Clone, Debug)]
pub struct DerivationStep {
    pub level: usize,
    pub chart_exponent: ExponentVector,
    pub unique_tuple: Vec<u64>,
}

/// The three-valued outcome of `decide`.
#[derive(Clone, Debug)]
pub enum Verdict {
    Analytic {
        certificate: AnalyticCertificate,
        path: MoveSequence,
    },
    NotAnalytic {
        witness: CurveCheckReport,
        derivation: Vec<DerivationStep>,
        path: MoveSequence,
    },
    Inconclusive {
        reason: InconclusiveReason,
        truncation: u64,
        budget: u64,
    },
}

/// Decides analyticity of `F = g/h` at the origin.
///
/// The pipeline: unit denominator, exact polynomial division, then
/// regularization of `(g, h)` followed by either a full liftability descent
/// (positive direction, certified by re-multiplication) or witness
/// construction and transport (negative direction, certified by an
/// independent curve check). Budget and truncation exhaustion surface as
/// `Inconclusive`, never as a guess.
pub fn decide(germ: &MeromorphicGerm, truncation: u64, budget: u64) -> Result<Verdict> {
    match decide_inner(germ, truncation, budget) {
        Ok(v) => Ok(v),
        Err(Error::BudgetExceeded { .. }) | Err(Error::SearchBudgetExceeded { .. }) => {
            Ok(Verdict::Inconclusive { reason: InconclusiveReason::BudgetExhausted, truncation, budget })
        }
        Err(Error::InsufficientTruncation { .. }) => {
            Ok(Verdict::Inconclusive { reason: InconclusiveReason::TruncatedSeriesInput, truncation, budget })
        }
        Err(e) => Err(e),
    }
}

fn decide_inner(germ: &MeromorphicGerm, truncation: u64, budget: u64) -> Result<Verdict> {
    let n = germ.var_count();
    let (g, h) = if germ.exact {
        (
            germ.g.assume_exact_to(truncation.max(germ.g.truncation())),
            germ.h.assume_exact_to(truncation.max(germ.h.truncation())),
        )
    } else {
        (germ.g.clone(), germ.h.clone())
    };
    let working = MeromorphicGerm { g: g.clone(), h: h.clone(), exact: germ.exact };

    // (1) unit denominator: expand g/h directly
    if !h.constant_term().is_zero() {
        let quotient = g.mul(&h.inverse()?)?;
        if quotient.mul(&h)? != g {
            return Err(Error::Internal("unit-denominator certificate failed to re-multiply".into()));
        }
        return Ok(Verdict::Analytic {
            certificate: AnalyticCertificate { kind: CertificateKind::UnitDenominator, quotient },
            path: MoveSequence::empty(n),
        });
    }

    // (2) exact polynomial division
    if germ.exact {
        if let Some(quotient) = g.poly_divide_exact(&h)? {
            return Ok(Verdict::Analytic {
                certificate: AnalyticCertificate { kind: CertificateKind::ExactDivision, quotient },
                path: MoveSequence::empty(n),
            });
        }
    }

    // (3) regularize the pair
    let reg = regularize_tuple(&[g.clone(), h.clone()], budget)?;
    let path = reg.path.clone();
    let chart_truncation = truncation * path.composite().max_image_degree().max(1);
    let mut g_chart = reg.regularized[0].clone();
    let mut h_chart = reg.regularized[1].clone();
    if germ.exact {
        g_chart = g_chart.assume_exact_to(chart_truncation);
        h_chart = h_chart.assume_exact_to(chart_truncation);
    }

    if !h_chart.constant_term().is_zero() {
        // (3a) denominator regularized to a unit: F∘σ̄ has a power series
        // expansion in the deepest chart
        let expansion = g_chart.mul(&h_chart.inverse()?)?;
        match liftability_scan(&expansion, &path) {
            None => {
                if !germ.exact {
                    return Ok(Verdict::Inconclusive {
                        reason: InconclusiveReason::TruncatedSeriesInput,
                        truncation,
                        budget,
                    });
                }
                let candidate = full_lift(&expansion, &path, n, truncation);
                if candidate.mul(&h)? == g {
                    return Ok(Verdict::Analytic {
                        certificate: AnalyticCertificate {
                            kind: CertificateKind::RegularizedLift,
                            quotient: candidate,
                        },
                        path,
                    });
                }
                Ok(Verdict::Inconclusive {
                    reason: InconclusiveReason::LiftCertificateIncomplete,
                    truncation,
                    budget,
                })
            }
            Some((level, chart_exponent)) => {
                let tuple_budget = budget.min(usize::MAX as u64) as usize;
                let w3 = step3_witness(&chart_exponent, &path.moves()[level], tuple_budget)?;
                // germs at chart levels 0..=level
                let mut germs = vec![working.clone()];
                for mv in &path.moves()[..level] {
                    let prev = germs.last().expect("nonempty");
                    germs.push(prev.pullback(mv)?);
                }
                let mut report = verify_predicted(&germs[level], &w3.curve, w3.predicted_exponent)?;
                for k in (0..level).rev() {
                    report = witness_transport(&report, &path.moves()[k], &germs[k])?;
                }
                let fresh = curve_check(&working, &report.curve)?;
                if fresh.passed {
                    return Err(Error::Internal("constructed witness passed the final curve check".into()));
                }
                if !verify_witness(&working, &fresh) {
                    return Err(Error::Internal("emitted witness failed independent verification".into()));
                }
                Ok(Verdict::NotAnalytic {
                    witness: fresh,
                    derivation: vec![DerivationStep {
                        level,
                        chart_exponent,
                        unique_tuple: w3.unique_tuple,
                    }],
                    path,
                })
            }
        }
    } else {
        // (3b) the numerator is the unit: F has a pole along a generic
        // transported curve
        let tuple_budget = budget.min(usize::MAX as u64) as usize;
        let up = generic_separating_curve(&h_chart, germ.exact, tuple_budget)?;
        let curve = path.transport_curve(&up);
        let fresh = curve_check(&working, &curve)?;
        if fresh.passed || !fresh.pole {
            return Err(Error::Internal(
                "regularization predicts a pole but the curve check disagrees".into(),
            ));
        }
        if !verify_witness(&working, &fresh) {
            return Err(Error::Internal("emitted pole witness failed independent verification".into()));
        }
        Ok(Verdict::NotAnalytic { witness: fresh, derivation: Vec::new(), path })
    }
}

/// Lifts every term of a fully liftable chart expansion down the whole path
/// and truncates to the requested degree.
fn full_lift(expansion: &MultiSeries, path: &MoveSequence, n: usize, truncation: u64) -> MultiSeries {
    let mut terms = Vec::new();
    for (e, c) in expansion.terms() {
        let mut current = e.clone();
        for mv in path.moves().iter().rev() {
            current = mv
                .liftability(&current)
                .lifted
                .expect("liftability_scan verified every exponent lifts");
        }
        if current.total_degree() <= truncation {
            terms.push((current, c.clone()));
        }
    }
    MultiSeries::from_terms(n, truncation, terms)
}

/// Direct verification that the curve test fails at the predicted exponent:
/// substitutes the germ along the curve and reads off the coefficient.
fn verify_predicted(germ: &MeromorphicGerm, curve: &MonomialCurve, e: i64) -> Result<CurveCheckReport> {
    let (ug, uh) = germ.substituted_pair(curve)?;
    if uh.is_zero() {
        return Err(Error::Internal("witness curve fell into the pole locus".into()));
    }
    let q = ug.div(&uh, e)?;
    if q.truncation() < e {
        return Err(Error::InsufficientTruncation {
            needed: e.max(0) as u64,
            stored: germ.g.truncation().min(germ.h.truncation()),
        });
    }
    let coeff = q.coeff(e);
    if coeff.is_zero() {
        return Err(Error::Internal(
            "predicted offending coefficient vanished at the failing level".into(),
        ));
    }
    Ok(CurveCheckReport {
        curve: curve.clone(),
        passed: false,
        offending_exponent: Some(e),
        offending_coefficient: Some(coeff),
        truncation_used: e,
        pole: false,
    })
}

/// A curve upstairs whose t-degrees separate the support of the regularized
/// denominator, so no cancellation can hide its order. Candidates come from
/// the same deterministic prime-tuple enumeration as the witness tuples.
fn generic_separating_curve(h_chart: &MultiSeries, exact: bool, budget: usize) -> Result<MonomialCurve> {
    let support: Vec<&ExponentVector> = h_chart.support().collect();
    if support.is_empty() {
        return Err(Error::Internal("regularized denominator is zero".into()));
    }
    let n = h_chart.var_count();
    let candidates = crate::semigroup::prime_tuple_candidates(n, budget);
    'cand: for cand in candidates {
        let mut degrees = Vec::with_capacity(support.len());
        for e in &support {
            let d = e.weighted_degree(&cand);
            if degrees.contains(&d) {
                continue 'cand;
            }
            degrees.push(d);
        }
        if !exact {
            // the leading degree must sit inside the reliable substitution range
            let min_m = *cand.iter().min().expect("nonempty");
            let reliable = (h_chart.truncation() + 1) * min_m - 1;
            if degrees.iter().min().copied().unwrap_or(0) > reliable {
                continue;
            }
        }
        return MonomialCurve::new(cand);
    }
    Err(Error::SearchBudgetExceeded { budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn poly(n: usize, trunc: u64, terms: Vec<(Vec<u64>, i64)>) -> MultiSeries {
        MultiSeries::from_terms(
            n,
            trunc,
            terms
                .into_iter()
                .map(|(e, c)| (ExponentVector::new(e), rat(c))),
        )
    }

    fn curve(v: Vec<u64>) -> MonomialCurve {
        MonomialCurve::new(v).unwrap()
    }

    /// xy / (x^2 + y^2)
    fn running_example() -> MeromorphicGerm {
        let g = poly(2, 2, vec![(vec![1, 1], 1)]);
        let h = poly(2, 2, vec![(vec![2, 0], 1), (vec![0, 2], 1)]);
        MeromorphicGerm::from_polynomials(g, h).unwrap()
    }

    /// x^m y^m / (x^2 + y^2)
    fn f_m(m: u64) -> MeromorphicGerm {
        let g = poly(2, 2 * m, vec![(vec![m, m], 1)]);
        let h = poly(2, 2, vec![(vec![2, 0], 1), (vec![0, 2], 1)]);
        MeromorphicGerm::from_polynomials(g, h).unwrap()
    }

    #[test]
    fn required_truncation_examples() {
        assert_eq!(required_truncation(&curve(vec![2, 3])), 2);
        assert_eq!(required_truncation(&curve(vec![4, 6])), 4);
        assert_eq!(required_truncation(&curve(vec![1, 1])), 0);
    }

    #[test]
    fn curve_check_running_example_on_2_3() {
        let report = curve_check(&running_example(), &curve(vec![2, 3])).unwrap();
        assert!(!report.passed && !report.pole);
        assert_eq!(report.offending_exponent, Some(1));
        assert_eq!(report.offending_coefficient, Some(rat(1)));
    }

    #[test]
    fn curve_check_running_example_on_5_3() {
        let report = curve_check(&running_example(), &curve(vec![5, 3])).unwrap();
        assert_eq!(report.offending_exponent, Some(2));
        assert_eq!(report.offending_coefficient, Some(rat(1)));
    }

    #[test]
    fn curve_check_f2_passes_low_multiplicity() {
        let report = curve_check(&f_m(2), &curve(vec![1, 2])).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn curve_check_f2_fails_on_5_6() {
        let report = curve_check(&f_m(2), &curve(vec![5, 6])).unwrap();
        assert!(!report.passed && !report.pole);
        assert_eq!(report.offending_exponent, Some(14));
        assert_eq!(report.offending_coefficient, Some(rat(-1)));
    }

    #[test]
    fn curve_check_detects_pole() {
        // 1/x along (1,1)
        let g = poly(2, 0, vec![(vec![0, 0], 1)]);
        let h = poly(2, 1, vec![(vec![1, 0], 1)]);
        let germ = MeromorphicGerm::from_polynomials(g, h).unwrap();
        let report = curve_check(&germ, &curve(vec![1, 1])).unwrap();
        assert!(!report.passed && report.pole);
        assert_eq!(report.offending_exponent, Some(-1));
    }

    #[test]
    fn curve_check_rejects_pole_locus_curve() {
        // (x - y) vanishes identically along (1,1)
        let g = poly(2, 1, vec![(vec![1, 0], 1)]);
        let h = poly(2, 1, vec![(vec![1, 0], 1), (vec![0, 1], -1)]);
        let germ = MeromorphicGerm::from_polynomials(g, h).unwrap();
        assert_eq!(curve_check(&germ, &curve(vec![1, 1])), Err(Error::CurveInPoleLocus));
    }

    #[test]
    fn scan_finds_non_liftable_exponent() {
        // z1 - z1^3 against the single standard chart
        let expansion = poly(2, 3, vec![(vec![1, 0], 1), (vec![3, 0], -1)]);
        let path = MoveSequence::new(2, vec![ElementaryMove::standard(2, 2).unwrap()]).unwrap();
        let (level, e) = liftability_scan(&expansion, &path).unwrap();
        assert_eq!(level, 0);
        assert_eq!(e, ExponentVector::new(vec![1, 0]));
    }

    #[test]
    fn scan_accepts_liftable_expansion() {
        let expansion = poly(2, 3, vec![(vec![0, 3], 1)]);
        let path = MoveSequence::new(2, vec![ElementaryMove::standard(2, 2).unwrap()]).unwrap();
        assert_eq!(liftability_scan(&expansion, &path), None);
        let constant = poly(2, 3, vec![(vec![0, 0], 5)]);
        assert_eq!(liftability_scan(&constant, &path), None);
    }

    #[test]
    fn step3_running_example() {
        let mv = ElementaryMove::standard(2, 2).unwrap();
        let w = step3_witness(&ExponentVector::new(vec![1, 0]), &mv, 1000).unwrap();
        assert_eq!(w.unique_tuple, vec![2, 3]);
        assert_eq!(w.curve.exponents(), &[5, 3]);
        assert_eq!(w.predicted_exponent, 2);
    }

    #[test]
    fn step3_rejects_liftable_exponent() {
        let mv = ElementaryMove::standard(2, 2).unwrap();
        let err = step3_witness(&ExponentVector::new(vec![0, 1]), &mv, 1000);
        assert_eq!(err.unwrap_err(), Error::ExponentLiftable);
    }

    #[test]
    fn step3_in_three_variables_self_verifies() {
        let mv = ElementaryMove::standard(3, 2).unwrap();
        let a = ExponentVector::new(vec![1, 0, 0]);
        let w = step3_witness(&a, &mv, 5000).unwrap();
        let sg = NumericalSemigroup::new(w.curve.exponents()).unwrap();
        assert!(!sg.contains_signed(w.predicted_exponent));
    }

    #[test]
    fn transport_preserves_offending_exponent() {
        // lower germ x^2/y^3; its chart pullback restricted to (2,3) fails at 1
        let lower = MeromorphicGerm::from_polynomials(
            poly(2, 2, vec![(vec![2, 0], 1)]),
            poly(2, 3, vec![(vec![0, 3], 1)]),
        )
        .unwrap();
        let mv = ElementaryMove::standard(2, 2).unwrap();
        let upper = lower.pullback(&mv).unwrap();
        let report = curve_check(&upper, &curve(vec![2, 3])).unwrap();
        assert_eq!(report.offending_exponent, Some(1));
        let transported = witness_transport(&report, &mv, &lower).unwrap();
        assert_eq!(transported.curve.exponents(), &[5, 3]);
        assert_eq!(transported.offending_exponent, Some(1));
        assert!(verify_witness(&lower, &transported));
    }

    #[test]
    fn transport_preserves_pole() {
        let lower = MeromorphicGerm::from_polynomials(
            poly(2, 0, vec![(vec![0, 0], 1)]),
            poly(2, 1, vec![(vec![1, 0], 1)]),
        )
        .unwrap();
        let mv = ElementaryMove::standard(2, 2).unwrap();
        let upper = lower.pullback(&mv).unwrap();
        let report = curve_check(&upper, &curve(vec![1, 1])).unwrap();
        assert!(report.pole);
        assert_eq!(report.offending_exponent, Some(-2));
        let transported = witness_transport(&report, &mv, &lower).unwrap();
        assert!(transported.pole);
        assert_eq!(transported.offending_exponent, Some(-2));
    }

    #[test]
    fn verify_witness_rejects_tampering() {
        let germ = running_example();
        let mut report = curve_check(&germ, &curve(vec![5, 3])).unwrap();
        assert!(verify_witness(&germ, &report));
        report.offending_exponent = Some(3);
        assert!(!verify_witness(&germ, &report));
    }

    #[test]
    fn decide_running_example_is_not_analytic() {
        let verdict = decide(&running_example(), 12, 1000).unwrap();
        let Verdict::NotAnalytic { witness, derivation, path } = verdict else {
            panic!("expected NotAnalytic");
        };
        assert_eq!(witness.curve.exponents(), &[5, 3]);
        assert_eq!(witness.offending_exponent, Some(2));
        assert_eq!(path.len(), 1);
        assert_eq!(derivation.len(), 1);
        assert_eq!(derivation[0].level, 0);
        assert_eq!(derivation[0].chart_exponent, ExponentVector::new(vec![1, 0]));
        assert_eq!(derivation[0].unique_tuple, vec![2, 3]);
    }

    #[test]
    fn decide_exact_division() {
        // (x^3 + x y^2)/(x^2 + y^2) = x
        let x = poly(2, 3, vec![(vec![1, 0], 1)]);
        let g = poly(2, 3, vec![(vec![3, 0], 1), (vec![1, 2], 1)]);
        let h = poly(2, 2, vec![(vec![2, 0], 1), (vec![0, 2], 1)]);
        let germ = MeromorphicGerm::from_polynomials(g.clone(), h.clone()).unwrap();
        let Verdict::Analytic { certificate, path } = decide(&germ, 8, 1000).unwrap() else {
            panic!("expected Analytic");
        };
        assert_eq!(certificate.kind, CertificateKind::ExactDivision);
        assert_eq!(certificate.quotient, x);
        assert!(path.is_empty());
        assert_eq!(certificate.quotient.mul(&h).unwrap(), g);
    }

    #[test]
    fn decide_f2_is_not_analytic() {
        let verdict = decide(&f_m(2), 12, 2000).unwrap();
        let Verdict::NotAnalytic { witness, .. } = verdict else {
            panic!("expected NotAnalytic");
        };
        assert!(verify_witness(&f_m(2), &witness));
    }

    #[test]
    fn decide_unit_denominator() {
        // x/(1+x) in one variable
        let g = poly(1, 6, vec![(vec![1], 1)]);
        let h = poly(1, 6, vec![(vec![0], 1), (vec![1], 1)]);
        let germ = MeromorphicGerm::from_polynomials(g.clone(), h.clone()).unwrap();
        let Verdict::Analytic { certificate, .. } = decide(&germ, 6, 100).unwrap() else {
            panic!("expected Analytic");
        };
        assert_eq!(certificate.kind, CertificateKind::UnitDenominator);
        assert_eq!(certificate.quotient.mul(&h).unwrap(), g);
    }

    #[test]
    fn decide_regularized_lift() {
        // x/(x + x^2) = 1/(1+x): not polynomial-divisible, becomes a unit
        // after regularization with an empty path
        let g = poly(1, 4, vec![(vec![1], 1)]);
        let h = poly(1, 4, vec![(vec![1], 1), (vec![2], 1)]);
        let germ = MeromorphicGerm::from_polynomials(g, h.clone()).unwrap();
        let Verdict::Analytic { certificate, path } = decide(&germ, 8, 100).unwrap() else {
            panic!("expected Analytic");
        };
        assert_eq!(certificate.kind, CertificateKind::RegularizedLift);
        assert!(path.is_empty());
        // 1 - x + x^2 - ... up to D=8
        assert_eq!(certificate.quotient.coeff(&ExponentVector::new(vec![0])), rat(1));
        assert_eq!(certificate.quotient.coeff(&ExponentVector::new(vec![1])), rat(-1));
    }

    #[test]
    fn decide_pole_case() {
        // (1 + x)/x: numerator regularizes to the unit
        let g = poly(2, 1, vec![(vec![0, 0], 1), (vec![1, 0], 1)]);
        let h = poly(2, 1, vec![(vec![1, 0], 1)]);
        let germ = MeromorphicGerm::from_polynomials(g, h).unwrap();
        let Verdict::NotAnalytic { witness, .. } = decide(&germ, 8, 1000).unwrap() else {
            panic!("expected NotAnalytic");
        };
        assert!(witness.pole);
    }

    #[test]
    fn decide_truncated_input_is_inconclusive_when_positive() {
        // same series as the regularized-lift case but declared inexact
        let g = poly(1, 4, vec![(vec![1], 1)]);
        let h = poly(1, 4, vec![(vec![1], 1), (vec![2], 1)]);
        let germ = MeromorphicGerm::new(g, h).unwrap();
        let Verdict::Inconclusive { reason, .. } = decide(&germ, 8, 100).unwrap() else {
            panic!("expected Inconclusive");
        };
        assert_eq!(reason, InconclusiveReason::TruncatedSeriesInput);
    }

    #[test]
    fn decide_budget_exhaustion_is_inconclusive() {
        let verdict = decide(&running_example(), 12, 0).unwrap();
        let Verdict::Inconclusive { reason, .. } = verdict else {
            panic!("expected Inconclusive");
        };
        assert_eq!(reason, InconclusiveReason::BudgetExhausted);
    }
}
