//! Parameter packs, exponent-selection rules, case classification, and the
//! closed-form sharp constants.
//!
//! All constants here are elementary functions of the regime and one
//! angular-weight norm; the norm itself is computed by [`crate::sphere`].

use crate::error::{Error, Result};
use crate::sphere::surface_measure;

/// Local-inequality parameter pack (N, p, alpha) for the weighted Hardy
/// inequality with weight pair |x|^{-(p+alpha)} / |x|^{-alpha}.
///
/// Construction enforces local admissibility: N >= 1, p > 1, N > p + alpha.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regime {
    n: u32,
    p: f64,
    alpha: f64,
}

impl Regime {
    pub fn new(n: u32, p: f64, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::RegimeViolation("N >= 1 violated".into()));
        }
        if !p.is_finite() || !alpha.is_finite() {
            return Err(Error::InvalidInput(format!(
                "non-finite regime parameters p = {p}, alpha = {alpha}"
            )));
        }
        if p <= 1.0 {
            return Err(Error::RegimeViolation(format!(
                "p > 1 violated (p = {p})"
            )));
        }
        if n as f64 <= p + alpha {
            return Err(Error::RegimeViolation(format!(
                "N > p + alpha violated (N = {n}, p + alpha = {})",
                p + alpha
            )));
        }
        Ok(Regime { n, p, alpha })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// N - p - alpha > 0, the homogeneity gap.
    pub fn gap(&self) -> f64 {
        self.n as f64 - self.p - self.alpha
    }

    /// Exponent of the formal optimizer r^{-(N-p-alpha)/p}.
    pub fn optimizer_exponent(&self) -> f64 {
        self.gap() / self.p
    }

    /// Check the additional requirement p + alpha > 0 (rearrangement route).
    pub fn require_positive_degree(&self) -> Result<()> {
        if self.p + self.alpha <= 0.0 {
            return Err(Error::RegimeViolation(format!(
                "p + alpha > 0 violated (p + alpha = {})",
                self.p + self.alpha
            )));
        }
        Ok(())
    }

    /// Lebesgue exponent N/(p+alpha) for the angular weight norm in the
    /// rearrangement-route constant.
    pub fn weight_norm_exponent(&self) -> Result<f64> {
        self.require_positive_degree()?;
        Ok(self.n as f64 / (self.p + self.alpha))
    }
}

/// Fractional parameter pack (N, s, p): N >= 1, s in (0,1), p >= 1, N > sp.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracRegime {
    n: u32,
    s: f64,
    p: f64,
}

impl FracRegime {
    pub fn new(n: u32, s: f64, p: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::RegimeViolation("N >= 1 violated".into()));
        }
        if !s.is_finite() || !p.is_finite() {
            return Err(Error::InvalidInput(format!(
                "non-finite fractional parameters s = {s}, p = {p}"
            )));
        }
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::RegimeViolation(format!(
                "s in (0,1) violated (s = {s})"
            )));
        }
        if p < 1.0 {
            return Err(Error::RegimeViolation(format!(
                "p >= 1 violated (p = {p})"
            )));
        }
        if n as f64 <= s * p {
            return Err(Error::RegimeViolation(format!(
                "N > s*p violated (N = {n}, s*p = {})",
                s * p
            )));
        }
        Ok(FracRegime { n, s, p })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn s(&self) -> f64 {
        self.s
    }
    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn sp(&self) -> f64 {
        self.s * self.p
    }

    /// Exponent of the formal optimizer r^{-(N-sp)/p}.
    pub fn optimizer_exponent(&self) -> f64 {
        (self.n as f64 - self.sp()) / self.p
    }

    /// Lebesgue exponent N/(sp) for the angular weight norm.
    pub fn weight_norm_exponent(&self) -> f64 {
        self.n as f64 / self.sp()
    }
}

/// Case labels for the three-way sharp p = 2 theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseId {
    Case1,
    Case2,
    Case3,
}

impl std::fmt::Display for CaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseId::Case1 => write!(f, "case1"),
            CaseId::Case2 => write!(f, "case2"),
            CaseId::Case3 => write!(f, "case3"),
        }
    }
}

/// Resolved data for one case of the p = 2 theorem.
///
/// `threshold_lhs` / `threshold_rhs` record the case gate 2Nα vs
/// (N-α-2)^2 actually used (the proof's condition);
/// `statement_threshold_rhs` records the alternative gate (1+α)^2 that the
/// theorem statement prints, so reports can show both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Case13 {
    pub case_id: CaseId,
    /// Sphere Lebesgue exponent for the weight norm.
    pub q: f64,
    /// Only present for Case2.
    pub gamma0: Option<f64>,
    pub threshold_lhs: f64,
    pub threshold_rhs: f64,
    pub statement_threshold_rhs: f64,
}

/// Classification outcome: the primary case plus any others that apply at
/// the same (N, alpha).
#[derive(Debug, Clone)]
pub struct Case13Classification {
    pub primary: Case13,
    pub also_available: Vec<Case13>,
}

fn case13_thresholds(n: u32, alpha: f64) -> (f64, f64, f64) {
    let nf = n as f64;
    let lhs = 2.0 * nf * alpha;
    let rhs = (nf - alpha - 2.0) * (nf - alpha - 2.0);
    let statement_rhs = (1.0 + alpha) * (1.0 + alpha);
    (lhs, rhs, statement_rhs)
}

fn check_case13_regime(n: u32, alpha: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::RegimeViolation("N >= 2 violated".into()));
    }
    if !alpha.is_finite() {
        return Err(Error::InvalidInput(format!("non-finite alpha = {alpha}")));
    }
    if n as f64 <= 2.0 + alpha {
        return Err(Error::RegimeViolation(format!(
            "N > 2 + alpha violated (N = {n}, alpha = {alpha})"
        )));
    }
    Ok(())
}

/// Build one specific case at (N, alpha), verifying its gate.
pub fn case13(n: u32, alpha: f64, which: CaseId) -> Result<Case13> {
    check_case13_regime(n, alpha)?;
    let nf = n as f64;
    let (lhs, rhs, statement_rhs) = case13_thresholds(n, alpha);
    match which {
        CaseId::Case1 => {
            if lhs >= rhs {
                return Err(Error::RegimeViolation(format!(
                    "case1 needs 2N*alpha < (N-alpha-2)^2, got {lhs} >= {rhs}"
                )));
            }
            Ok(Case13 {
                case_id: CaseId::Case1,
                q: rhs / (2.0 * (nf - 1.0)) + 1.0,
                gamma0: None,
                threshold_lhs: lhs,
                threshold_rhs: rhs,
                statement_threshold_rhs: statement_rhs,
            })
        }
        CaseId::Case2 => {
            if n <= 3 {
                return Err(Error::DimensionTooSmall(format!(
                    "case2 needs N > 3, got N = {n}"
                )));
            }
            if lhs >= rhs {
                return Err(Error::RegimeViolation(format!(
                    "case2 needs 2N*alpha < (N-alpha-2)^2, got {lhs} >= {rhs}"
                )));
            }
            Ok(Case13 {
                case_id: CaseId::Case2,
                q: (nf - 1.0) / 2.0,
                gamma0: Some(rhs / ((nf - 1.0) * (nf - 3.0))),
                threshold_lhs: lhs,
                threshold_rhs: rhs,
                statement_threshold_rhs: statement_rhs,
            })
        }
        CaseId::Case3 => {
            if n <= 3 {
                return Err(Error::DimensionTooSmall(format!(
                    "case3 needs N > 3, got N = {n}"
                )));
            }
            if lhs < rhs {
                return Err(Error::RegimeViolation(format!(
                    "case3 needs 2N*alpha >= (N-alpha-2)^2, got {lhs} < {rhs}"
                )));
            }
            Ok(Case13 {
                case_id: CaseId::Case3,
                q: (nf - 1.0) / 2.0,
                gamma0: None,
                threshold_lhs: lhs,
                threshold_rhs: rhs,
                statement_threshold_rhs: statement_rhs,
            })
        }
    }
}

/// Classify (N, alpha) into the applicable cases of the p = 2 theorem.
/// When Case1 and Case2 both apply, Case1 is primary and Case2 is listed
/// as also available.
pub fn classify_case13(n: u32, alpha: f64) -> Result<Case13Classification> {
    check_case13_regime(n, alpha)?;
    let (lhs, rhs, _) = case13_thresholds(n, alpha);
    if lhs < rhs {
        let primary = case13(n, alpha, CaseId::Case1)?;
        let also = if n > 3 {
            vec![case13(n, alpha, CaseId::Case2)?]
        } else {
            vec![]
        };
        Ok(Case13Classification {
            primary,
            also_available: also,
        })
    } else {
        if n <= 3 {
            return Err(Error::DimensionTooSmall(format!(
                "2N*alpha >= (N-alpha-2)^2 requires case3, which needs N > 3 (N = {n})"
            )));
        }
        Ok(Case13Classification {
            primary: case13(n, alpha, CaseId::Case3)?,
            also_available: vec![],
        })
    }
}

/// gamma0 = (N-alpha-2)^2 / ((N-1)(N-3)), the Case2 amplification factor.
///
/// Requires N > 3 and the proof-side gate 2N*alpha < (N-alpha-2)^2. Note
/// the gate does not force gamma0 > 1 for every alpha > 0; callers that
/// rely on gamma0 > 1 must check the returned value.
pub fn gamma0(n: u32, alpha: f64) -> Result<f64> {
    if n <= 3 {
        return Err(Error::DimensionTooSmall(format!(
            "gamma0 needs N > 3, got N = {n}"
        )));
    }
    check_case13_regime(n, alpha)?;
    let (lhs, rhs, _) = case13_thresholds(n, alpha);
    if lhs >= rhs {
        return Err(Error::RegimeViolation(format!(
            "gamma0 needs 2N*alpha < (N-alpha-2)^2, got {lhs} >= {rhs}"
        )));
    }
    let nf = n as f64;
    Ok(rhs / ((nf - 1.0) * (nf - 3.0)))
}

/// Sphere exponent rule for the general-p theorem:
/// q = (N-1)/p when p < N-1, q = 1 when p > N-1, and a caller-supplied
/// q > 1 when p = N-1 exactly (no default is invented).
pub fn admissible_q(n: u32, p: f64, user_q: Option<f64>) -> Result<f64> {
    if n < 2 {
        return Err(Error::RegimeViolation("N >= 2 violated".into()));
    }
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::RegimeViolation(format!(
            "p > 1 violated (p = {p})"
        )));
    }
    if let Some(q) = user_q {
        if !q.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite q = {q}")));
        }
    }
    let boundary = (n - 1) as f64;
    if p < boundary {
        Ok(boundary / p)
    } else if p > boundary {
        Ok(1.0)
    } else {
        match user_q {
            Some(q) if q > 1.0 => Ok(q),
            _ => Err(Error::QRequired),
        }
    }
}

/// Optimal constant (p/(N-p-alpha))^p of the power-weight Hardy inequality.
pub fn ckn_sharp_constant(regime: &Regime) -> f64 {
    (regime.p() / regime.gap()).powf(regime.p())
}

/// Constant 4 ‖g‖_q / ((N-alpha-2)^2 |S^{N-1}|^{1/q}) of the sharp p = 2
/// theorem. `g_norm` is the L^q norm of the angular weight at the case
/// exponent `q`.
pub fn thm13_constant(n: u32, alpha: f64, g_norm: f64, q: f64) -> Result<f64> {
    check_case13_regime(n, alpha)?;
    if !(g_norm.is_finite() && g_norm >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "weight norm must be finite and >= 0, got {g_norm}"
        )));
    }
    if q.is_nan() || q < 1.0 {
        return Err(Error::ExponentOutOfRange(format!("q >= 1 violated: {q}")));
    }
    let nf = n as f64;
    let denom = (nf - alpha - 2.0) * (nf - alpha - 2.0);
    Ok(4.0 * g_norm / (denom * surface_measure(n)?.powf(1.0 / q)))
}

/// Constant (p/(N-p-alpha))^p ‖g‖_{N/(p+alpha)} / |S^{N-1}|^{(p+alpha)/N}
/// of the rearrangement-route theorem. Requires N > p + alpha > 0.
pub fn thm31_constant(regime: &Regime, g_norm: f64) -> Result<f64> {
    regime.require_positive_degree()?;
    if !(g_norm.is_finite() && g_norm >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "weight norm must be finite and >= 0, got {g_norm}"
        )));
    }
    // the same 1/q exponent expression the weight-norm side uses, grouped
    // so the g ≡ 1 reduction cancels exactly
    let q = regime.weight_norm_exponent()?;
    let measure = surface_measure(regime.n())?;
    Ok(ckn_sharp_constant(regime) * (g_norm / measure.powf(1.0 / q)))
}

/// Constant Λ ‖g‖_{N/(sp)} / |S^{N-1}|^{sp/N} of the weighted fractional
/// Hardy inequality. `lambda` is the sharp unweighted constant.
pub fn frac_constant(frac: &FracRegime, g_norm: f64, lambda: f64) -> Result<f64> {
    if !(g_norm.is_finite() && g_norm >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "weight norm must be finite and >= 0, got {g_norm}"
        )));
    }
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidInput(format!(
            "lambda must be finite and positive, got {lambda}"
        )));
    }
    let measure = surface_measure(frac.n())?;
    Ok(lambda * (g_norm / measure.powf(1.0 / frac.weight_norm_exponent())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::{lq_norm, SphereQuadrature, SphericalWeight};
    use approx::assert_relative_eq;

    #[test]
    fn regime_construction_guards() {
        assert!(Regime::new(5, 2.0, 0.0).is_ok());
        assert!(matches!(
            Regime::new(3, 3.0, 1.0),
            Err(Error::RegimeViolation(_))
        ));
        assert!(matches!(
            Regime::new(5, 1.0, 0.0),
            Err(Error::RegimeViolation(_))
        ));
        assert!(Regime::new(5, 2.0, f64::NAN).is_err());
        // p + alpha > 0 only checked for the rearrangement route
        let r = Regime::new(5, 2.0, -3.0).unwrap();
        assert!(r.require_positive_degree().is_err());
    }

    #[test]
    fn frac_regime_guards() {
        assert!(FracRegime::new(3, 0.5, 2.0).is_ok());
        // N = sp is inadmissible
        assert!(matches!(
            FracRegime::new(1, 0.5, 2.0),
            Err(Error::RegimeViolation(_))
        ));
        assert!(FracRegime::new(2, 1.0, 1.0).is_err());
        assert!(FracRegime::new(2, 0.5, 0.5).is_err());
    }

    #[test]
    fn admissible_q_three_branches() {
        assert_relative_eq!(admissible_q(5, 2.0, None).unwrap(), 2.0);
        assert_relative_eq!(admissible_q(3, 4.0, None).unwrap(), 1.0);
        assert!(matches!(admissible_q(4, 3.0, None), Err(Error::QRequired)));
        assert!(matches!(
            admissible_q(4, 3.0, Some(1.0)),
            Err(Error::QRequired)
        ));
        assert_relative_eq!(admissible_q(4, 3.0, Some(1.5)).unwrap(), 1.5);
        assert!(admissible_q(4, 3.0, Some(f64::INFINITY)).is_err());
    }

    #[test]
    fn ckn_constant_values() {
        assert_relative_eq!(
            ckn_sharp_constant(&Regime::new(5, 2.0, 0.0).unwrap()),
            4.0 / 9.0
        );
        assert_relative_eq!(ckn_sharp_constant(&Regime::new(4, 2.0, 0.0).unwrap()), 1.0);
        assert_relative_eq!(ckn_sharp_constant(&Regime::new(3, 2.0, 0.0).unwrap()), 4.0);
    }

    #[test]
    fn ckn_constant_diverges_toward_admissibility_edge() {
        // alpha increasing toward N - p along fixed (N, p)
        let mut last = 0.0;
        for i in 0..60 {
            let alpha = 3.0 * (i as f64) / 60.0 * 0.999; // N - p = 3 at (5, 2)
            let c = ckn_sharp_constant(&Regime::new(5, 2.0, alpha).unwrap());
            assert!(c > last);
            last = c;
        }
        assert!(last > 1e3);
    }

    #[test]
    fn classify_examples() {
        // (5, 0): Case1 primary with q = 17/8, Case2 also available
        let c = classify_case13(5, 0.0).unwrap();
        assert_eq!(c.primary.case_id, CaseId::Case1);
        assert_relative_eq!(c.primary.q, 17.0 / 8.0);
        assert_eq!(c.also_available.len(), 1);
        let c2 = &c.also_available[0];
        assert_eq!(c2.case_id, CaseId::Case2);
        assert_relative_eq!(c2.q, 2.0);
        assert_relative_eq!(c2.gamma0.unwrap(), 9.0 / 8.0);

        // (5, 2): Case3 with q = 2
        let c = classify_case13(5, 2.0).unwrap();
        assert_eq!(c.primary.case_id, CaseId::Case3);
        assert_relative_eq!(c.primary.q, 2.0);
        assert!(c.also_available.is_empty());
        assert_relative_eq!(c.primary.threshold_lhs, 20.0);
        assert_relative_eq!(c.primary.threshold_rhs, 1.0);

        // (3, 0): Case1 only, q = 5/4
        let c = classify_case13(3, 0.0).unwrap();
        assert_eq!(c.primary.case_id, CaseId::Case1);
        assert_relative_eq!(c.primary.q, 1.25);
        assert!(c.also_available.is_empty());
        assert!(matches!(
            case13(3, 0.0, CaseId::Case2),
            Err(Error::DimensionTooSmall(_))
        ));

        // gate boundary errors
        assert!(matches!(
            classify_case13(5, 3.5),
            Err(Error::RegimeViolation(_))
        ));
    }

    #[test]
    fn classify_only_allows_case12_below_proof_threshold() {
        for &(n, alpha) in &[(4u32, 0.0), (5, 0.25), (6, -1.0), (7, 0.4), (5, 1.0)] {
            if let Ok(c) = classify_case13(n, alpha) {
                for case in std::iter::once(&c.primary).chain(&c.also_available) {
                    match case.case_id {
                        CaseId::Case1 | CaseId::Case2 => {
                            assert!(case.threshold_lhs < case.threshold_rhs)
                        }
                        CaseId::Case3 => assert!(case.threshold_lhs >= case.threshold_rhs),
                    }
                }
            }
        }
    }

    #[test]
    fn gamma0_values_and_guards() {
        assert_relative_eq!(gamma0(5, 0.0).unwrap(), 9.0 / 8.0);
        assert_relative_eq!(gamma0(7, 0.0).unwrap(), 25.0 / 24.0);
        // (6, 1): 2N*alpha = 12 >= (N-alpha-2)^2 = 9
        assert!(matches!(gamma0(6, 1.0), Err(Error::RegimeViolation(_))));
        assert!(matches!(gamma0(3, 0.0), Err(Error::DimensionTooSmall(_))));
        // the proof-side gate does not guarantee gamma0 > 1: (5, 0.3)
        let g = gamma0(5, 0.3).unwrap();
        assert_relative_eq!(g, 7.29 / 8.0, max_relative = 1e-12);
        assert!(g < 1.0);
    }

    #[test]
    fn thm13_constant_reductions() {
        let quad = SphereQuadrature::default();
        // g ≡ 1 at (5, 0) reduces to the p = 2 power-weight constant 4/9
        let q = classify_case13(5, 0.0).unwrap().primary.q;
        let one = SphericalWeight::constant(1.0).unwrap();
        let norm = lq_norm(&one, q, 5, &quad).unwrap();
        assert_relative_eq!(
            thm13_constant(5, 0.0, norm, q).unwrap(),
            4.0 / 9.0,
            max_relative = 1e-14
        );
        // homogeneity: g ≡ 2 doubles it
        let norm2 = lq_norm(&SphericalWeight::constant(2.0).unwrap(), q, 5, &quad).unwrap();
        assert_relative_eq!(
            thm13_constant(5, 0.0, norm2, q).unwrap(),
            8.0 / 9.0,
            max_relative = 1e-14
        );
        // (4, 0) with g ≡ 1 gives 1
        let q4 = classify_case13(4, 0.0).unwrap().primary.q;
        let norm4 = lq_norm(&one, q4, 4, &quad).unwrap();
        assert_relative_eq!(
            thm13_constant(4, 0.0, norm4, q4).unwrap(),
            1.0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn thm31_constant_reductions() {
        let quad = SphereQuadrature::default();
        let regime = Regime::new(5, 2.0, 0.0).unwrap();
        let qn = regime.weight_norm_exponent().unwrap();
        let one = SphericalWeight::constant(1.0).unwrap();
        let norm = lq_norm(&one, qn, 5, &quad).unwrap();
        assert_relative_eq!(
            thm31_constant(&regime, norm).unwrap(),
            4.0 / 9.0,
            max_relative = 1e-14
        );
        // g ≡ 3 triples it
        let norm3 = lq_norm(&SphericalWeight::constant(3.0).unwrap(), qn, 5, &quad).unwrap();
        assert_relative_eq!(
            thm31_constant(&regime, norm3).unwrap(),
            3.0 * 4.0 / 9.0,
            max_relative = 1e-14
        );
        // hemisphere indicator: (4/9) * (1/2)^{(p+alpha)/N}
        let hemi = SphericalWeight::cap(std::f64::consts::FRAC_PI_2).unwrap();
        let normh = lq_norm(&hemi, qn, 5, &quad).unwrap();
        assert_relative_eq!(
            thm31_constant(&regime, normh).unwrap(),
            (4.0 / 9.0) * 0.5f64.powf(2.0 / 5.0),
            max_relative = 1e-11
        );
        // p + alpha <= 0 refused
        let r = Regime::new(5, 2.0, -2.0).unwrap();
        assert!(matches!(
            thm31_constant(&r, 1.0),
            Err(Error::RegimeViolation(_))
        ));
    }

    #[test]
    fn frac_constant_is_linear_in_norm() {
        let frac = FracRegime::new(3, 0.5, 2.0).unwrap();
        let quad = SphereQuadrature::default();
        let lambda = 0.731; // placeholder positive value; linearity is what matters
        let qn = frac.weight_norm_exponent();
        let one = SphericalWeight::constant(1.0).unwrap();
        let n1 = lq_norm(&one, qn, 3, &quad).unwrap();
        let c1 = frac_constant(&frac, n1, lambda).unwrap();
        assert_relative_eq!(c1, lambda, max_relative = 1e-14);
        let two = SphericalWeight::constant(2.0).unwrap();
        let n2 = lq_norm(&two, qn, 3, &quad).unwrap();
        assert_relative_eq!(
            frac_constant(&frac, n2, lambda).unwrap(),
            2.0 * lambda,
            max_relative = 1e-14
        );
    }
}
