//! Both sides of the weighted Hardy inequalities on test functions,
//! verification reports, and sharpness sweeps.
//!
//! In polar coordinates x = (r, θ) every quantity separates or reduces to
//! a radial integral against an angular one:
//!
//! ```text
//! ∫ g(x/|x|) |u|^p / |x|^{p+α} dx
//!     = [∫_0^∞ |f|^p r^{N-p-α-1} dr] · [|S^{N-2}| ∫_0^π g |h|^p sin^{N-2}φ dφ],
//! ∫ |∇u|^p / |x|^α dx
//!     = |S^{N-2}| ∫∫ (f'² h² + f² h'²/r²)^{p/2} r^{N-α-1} sin^{N-2}φ dφ dr,
//! ```
//!
//! for u(r, φ) = f(r) h(φ). The gradient energy separates when h ≡ 1 or
//! p = 2; otherwise it is evaluated as a tensor-product quadrature.
//!
//! Sharpness sweeps drive Rayleigh quotients toward the sharp constants
//! with the two-sided family f_k(r) = r^{-κ} (1 - |ln r| / L_k) supported
//! on [4^{-k}, 4^k] (L_k = k ln 4), whose quotient deficiency decays like
//! p(p+1)/(2 κ² L_k²) in the local cases.

use crate::error::{Error, Result};
use crate::fractional::{
    frac_lhs_radial, frac_seminorm_radial, lambda_cross_validated,
};
use crate::profiles::{quadrature_panels, AngularFactor, RadialProfile, TestFunction};
use crate::quad::GaussRule;
use crate::regimes::{
    case13, ckn_sharp_constant, frac_constant, thm13_constant, thm31_constant, CaseId, FracRegime,
    Regime,
};
use crate::sphere::{integrate_zonal_fn, lq_norm, surface_measure, SphereQuadrature, SphericalWeight};

/// Default relative tolerance on inequality slack.
pub const SLACK_TOLERANCE: f64 = 1e-9;

fn merged_kinks(g: &SphericalWeight, h: &AngularFactor) -> Vec<f64> {
    let mut k = g.kinks();
    k.extend(h.kinks());
    k
}

/// Radial integral of `integrand` over the profile's support, on panels
/// aligned with the profile's breakpoints.
fn radial_integral<F: FnMut(f64) -> f64>(f: &RadialProfile, mut integrand: F) -> f64 {
    let rule = GaussRule::new(24);
    let mut total = 0.0;
    for (a, b) in quadrature_panels(f, f.vanish_radius(), f.support_radius(), false, true) {
        total += rule.integrate(a, b, &mut integrand);
    }
    total
}

/// ∫ g(x/|x|) |u|^p / |x|^{p+α} dx for the separated test function u.
/// Signed weights are admitted.
pub fn lhs_weighted(
    u: &TestFunction,
    g: &SphericalWeight,
    regime: &Regime,
    quad: &SphereQuadrature,
) -> Result<f64> {
    let n = regime.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall(
            "polar-coordinate evaluation needs N >= 2".into(),
        ));
    }
    let p = regime.p();
    let m = regime.gap();
    let h = &u.angular;
    let angular = integrate_zonal_fn(
        |phi| g.eval(phi) * h.eval(phi).abs().powf(p),
        n,
        quad,
        &merged_kinks(g, h),
    )?;
    let radial = radial_integral(&u.radial, |r| {
        u.radial.eval(r).abs().powf(p) * r.powf(m - 1.0)
    });
    Ok(angular * radial)
}

/// ∫ |u|^p / |x|^{p+α} dx (the unweighted left side, also the subtracted
/// term of the three-term inequality at p = 2).
fn plain_weighted_p_norm(u: &TestFunction, regime: &Regime, quad: &SphereQuadrature) -> Result<f64> {
    lhs_weighted(u, &SphericalWeight::Constant(1.0), regime, quad)
}

/// ∫ |∇u|^p / |x|^α dx with the polar splitting
/// |∇u|² = |∂_r u|² + |∇_θ u|²/r².
pub fn gradient_energy(
    u: &TestFunction,
    regime: &Regime,
    quad: &SphereQuadrature,
) -> Result<f64> {
    let n = regime.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall(
            "polar-coordinate evaluation needs N >= 2".into(),
        ));
    }
    let p = regime.p();
    let alpha = regime.alpha();
    let f = &u.radial;
    let h = &u.angular;
    let radial_power = n as f64 - alpha - 1.0;
    if h.is_one() {
        let radial = radial_integral(f, |r| f.deriv(r).abs().powf(p) * r.powf(radial_power));
        return Ok(surface_measure(n)? * radial);
    }
    if p == 2.0 {
        // |∇u|² integrates term by term
        let h_sq = integrate_zonal_fn(|phi| h.eval(phi).powi(2), n, quad, &h.kinks())?;
        let dh_sq = integrate_zonal_fn(|phi| h.deriv(phi).powi(2), n, quad, &h.kinks())?;
        let radial_main = radial_integral(f, |r| f.deriv(r).powi(2) * r.powf(radial_power));
        let radial_angular =
            radial_integral(f, |r| f.eval(r).powi(2) * r.powf(radial_power - 2.0));
        return Ok(radial_main * h_sq + radial_angular * dh_sq);
    }
    // general p: tensor-product quadrature, angular integral per radial node
    let rule = GaussRule::new(24);
    let mut total = 0.0;
    for (a, b) in quadrature_panels(f, f.vanish_radius(), f.support_radius(), false, true) {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        for (&x, &wq) in rule.nodes.iter().zip(&rule.weights) {
            let r = mid + half * x;
            let fr = f.eval(r);
            let dfr = f.deriv(r);
            let angular = integrate_zonal_fn(
                |phi| {
                    let hr = h.eval(phi);
                    let dh = h.deriv(phi);
                    let grad_sq = dfr * dfr * hr * hr + fr * fr * dh * dh / (r * r);
                    grad_sq.powf(0.5 * p)
                },
                n,
                quad,
                &h.kinks(),
            )?;
            total += wq * half * angular * r.powf(radial_power);
        }
    }
    Ok(total)
}

/// One-dimensional weighted Hardy pair: lhs = ∫ |f|^p r^{β-p} dr and
/// rhs = (p/(β-p+1))^p ∫ |f'|^p r^β dr, with lhs ≤ rhs for β > p-1.
pub fn radial_hardy_1d(f: &RadialProfile, p: f64, beta: f64) -> Result<(f64, f64)> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::RegimeViolation(format!("p > 1 violated (p = {p})")));
    }
    if beta.is_nan() || beta <= p - 1.0 {
        return Err(Error::RegimeViolation(format!(
            "beta > p - 1 violated (beta = {beta}, p = {p})"
        )));
    }
    let lhs = radial_integral(f, |r| f.eval(r).abs().powf(p) * r.powf(beta - p));
    let rhs = (p / (beta - p + 1.0)).powf(p)
        * radial_integral(f, |r| f.deriv(r).abs().powf(p) * r.powf(beta));
    Ok((lhs, rhs))
}

/// Theorem selector for [`verify_case`].
#[derive(Debug, Clone)]
pub enum CaseSpec {
    /// General-p inequality with non-explicit constant: verified against a
    /// caller-supplied empirical bound when present, otherwise reported
    /// with `holds = true` and flagged empirical.
    Thm12 {
        regime: Regime,
        user_q: Option<f64>,
        empirical_bound: Option<f64>,
    },
    /// Sharp p = 2 inequality, one of the three cases.
    Thm13 { n: u32, alpha: f64, which: CaseId },
    /// Rearrangement-route inequality for general p (nonnegative weights).
    Thm31 { regime: Regime },
    /// Weighted fractional inequality on radial test functions. `lambda`
    /// short-circuits the cross-validated constant when already known.
    Thm14 {
        frac: FracRegime,
        lambda: Option<f64>,
    },
}

impl CaseSpec {
    fn theorem_name(&self) -> &'static str {
        match self {
            CaseSpec::Thm12 { .. } => "thm12",
            CaseSpec::Thm13 { .. } => "thm13",
            CaseSpec::Thm31 { .. } => "thm31",
            CaseSpec::Thm14 { .. } => "thm14",
        }
    }
}

/// Outcome of checking one inequality on one test function.
#[derive(Debug, Clone)]
pub struct QuotientReport {
    pub theorem: String,
    pub case_label: String,
    pub weight: String,
    pub test: String,
    pub n: u32,
    pub p: f64,
    pub alpha: Option<f64>,
    pub s: Option<f64>,
    pub q: Option<f64>,
    /// Left side of the inequality.
    pub lhs: f64,
    /// Right-side integral (gradient energy or Gagliardo seminorm),
    /// without the constant.
    pub rhs: f64,
    /// The subtracted ∫ |u|²/|x|^{2+α} term of the three-term case.
    pub extra: Option<f64>,
    /// The asserted constant (NaN when no constant is asserted).
    pub bound: f64,
    /// lhs / rhs.
    pub quotient: f64,
    pub holds: bool,
    /// bound - quotient, or the combined absolute slack for the
    /// three-term case.
    pub margin: f64,
    /// The bound is empirical rather than a theorem constant.
    pub empirical: bool,
    pub gamma0: Option<f64>,
    /// Case gate actually used: (2Nα, (N-α-2)²).
    pub threshold_proof: Option<(f64, f64)>,
    /// The alternative gate (1+α)² printed in the theorem statement.
    pub threshold_statement: Option<f64>,
}

#[allow(clippy::too_many_arguments)]
fn two_sided_report(
    spec: &CaseSpec,
    weight_desc: String,
    test_desc: String,
    n: u32,
    p: f64,
    alpha: Option<f64>,
    s: Option<f64>,
    q: Option<f64>,
    lhs: f64,
    rhs: f64,
    bound: f64,
    rel_tol: f64,
) -> QuotientReport {
    let quotient = if rhs != 0.0 {
        lhs / rhs
    } else if lhs == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let slack = bound * rhs - lhs;
    let scale = lhs.abs().max((bound * rhs).abs()).max(f64::MIN_POSITIVE);
    QuotientReport {
        theorem: spec.theorem_name().into(),
        case_label: match spec {
            CaseSpec::Thm13 { which, .. } => which.to_string(),
            _ => "-".into(),
        },
        weight: weight_desc,
        test: test_desc,
        n,
        p,
        alpha,
        s,
        q,
        lhs,
        rhs,
        extra: None,
        bound,
        quotient,
        holds: slack >= -rel_tol * scale,
        margin: bound - quotient,
        empirical: false,
        gamma0: None,
        threshold_proof: None,
        threshold_statement: None,
    }
}

/// L^q norm of the weight on S^{N-1}, covering the N = 1 two-point sphere
/// for constant weights.
fn weight_norm(g: &SphericalWeight, q: f64, n: u32, quad: &SphereQuadrature) -> Result<f64> {
    if n == 1 {
        return match g {
            SphericalWeight::Constant(c) => Ok(c * 2.0f64.powf(1.0 / q)),
            _ => Err(Error::InvalidInput(
                "N = 1 admits only constant angular weights".into(),
            )),
        };
    }
    lq_norm(g, q, n, quad)
}

/// Evaluate one theorem case on one test function and fill a report.
pub fn verify_case(
    spec: &CaseSpec,
    u: &TestFunction,
    g: &SphericalWeight,
    quad: &SphereQuadrature,
    rel_tol: f64,
) -> Result<QuotientReport> {
    match spec {
        CaseSpec::Thm12 {
            regime,
            user_q,
            empirical_bound,
        } => {
            let q = crate::regimes::admissible_q(regime.n(), regime.p(), *user_q)?;
            let norm = weight_norm(g, q, regime.n(), quad)?;
            let lhs = lhs_weighted(u, g, regime, quad)?;
            let grad = gradient_energy(u, regime, quad)?;
            let rhs = norm * grad;
            let quotient = if rhs != 0.0 { lhs / rhs } else { 0.0 };
            let (bound, holds, margin) = match empirical_bound {
                Some(b) => {
                    let slack = b * rhs - lhs;
                    let scale = lhs.abs().max((b * rhs).abs()).max(f64::MIN_POSITIVE);
                    (*b, slack >= -rel_tol * scale, b - quotient)
                }
                None => (f64::NAN, true, f64::NAN),
            };
            Ok(QuotientReport {
                theorem: "thm12".into(),
                case_label: "-".into(),
                weight: g.describe(),
                test: u.describe(),
                n: regime.n(),
                p: regime.p(),
                alpha: Some(regime.alpha()),
                s: None,
                q: Some(q),
                lhs,
                rhs,
                extra: None,
                bound,
                quotient,
                holds,
                margin,
                empirical: true,
                gamma0: None,
                threshold_proof: None,
                threshold_statement: None,
            })
        }
        CaseSpec::Thm13 { n, alpha, which } => {
            let case = case13(*n, *alpha, *which)?;
            let regime = Regime::new(*n, 2.0, *alpha)?;
            let norm = weight_norm(g, case.q, *n, quad)?;
            let constant = thm13_constant(*n, *alpha, norm, case.q)?;
            let lhs = lhs_weighted(u, g, &regime, quad)?;
            let rhs = gradient_energy(u, &regime, quad)?;
            let mut report = match which {
                CaseId::Case1 | CaseId::Case3 => two_sided_report(
                    spec,
                    g.describe(),
                    u.describe(),
                    *n,
                    2.0,
                    Some(*alpha),
                    None,
                    Some(case.q),
                    lhs,
                    rhs,
                    constant,
                    rel_tol,
                ),
                CaseId::Case2 => {
                    let gamma0 = case.gamma0.expect("case2 carries gamma0");
                    let k_g = norm / surface_measure(*n)?.powf(1.0 / case.q);
                    let extra = plain_weighted_p_norm(u, &regime, quad)?;
                    // lhs <= gamma0 C rhs - (gamma0 - 1) k_g extra
                    let slack = gamma0 * constant * rhs - (gamma0 - 1.0) * k_g * extra - lhs;
                    let scale = lhs
                        .abs()
                        .max((gamma0 * constant * rhs).abs())
                        .max(((gamma0 - 1.0) * k_g * extra).abs())
                        .max(f64::MIN_POSITIVE);
                    let quotient = if rhs != 0.0 { lhs / rhs } else { 0.0 };
                    QuotientReport {
                        theorem: "thm13".into(),
                        case_label: which.to_string(),
                        weight: g.describe(),
                        test: u.describe(),
                        n: *n,
                        p: 2.0,
                        alpha: Some(*alpha),
                        s: None,
                        q: Some(case.q),
                        lhs,
                        rhs,
                        extra: Some(extra),
                        bound: gamma0 * constant,
                        quotient,
                        holds: slack >= -rel_tol * scale,
                        margin: slack,
                        empirical: false,
                        gamma0: Some(gamma0),
                        threshold_proof: None,
                        threshold_statement: None,
                    }
                }
            };
            report.gamma0 = case.gamma0;
            report.threshold_proof = Some((case.threshold_lhs, case.threshold_rhs));
            report.threshold_statement = Some(case.statement_threshold_rhs);
            Ok(report)
        }
        CaseSpec::Thm31 { regime } => {
            if !g.is_nonneg() {
                return Err(Error::NonnegRequired(
                    "the rearrangement-route inequality requires a nonnegative weight".into(),
                ));
            }
            let qn = regime.weight_norm_exponent()?;
            let norm = weight_norm(g, qn, regime.n(), quad)?;
            let constant = thm31_constant(regime, norm)?;
            let lhs = lhs_weighted(u, g, regime, quad)?;
            let rhs = gradient_energy(u, regime, quad)?;
            Ok(two_sided_report(
                spec,
                g.describe(),
                u.describe(),
                regime.n(),
                regime.p(),
                Some(regime.alpha()),
                None,
                Some(qn),
                lhs,
                rhs,
                constant,
                rel_tol,
            ))
        }
        CaseSpec::Thm14 { frac, lambda } => {
            if !g.is_nonneg() {
                return Err(Error::NonnegRequired(
                    "the fractional inequality requires a nonnegative weight".into(),
                ));
            }
            if !u.angular.is_one() {
                return Err(Error::InvalidInput(
                    "fractional verification supports radial test functions only".into(),
                ));
            }
            let lambda = match lambda {
                Some(l) => *l,
                None => lambda_cross_validated(frac)?.value(),
            };
            let qn = frac.weight_norm_exponent();
            let norm = weight_norm(g, qn, frac.n(), quad)?;
            let constant = frac_constant(frac, norm, lambda)?;
            let lhs = frac_lhs_radial(&u.radial, g, frac, quad)?;
            let rhs = frac_seminorm_radial(&u.radial, frac)?;
            let mut report = two_sided_report(
                spec,
                g.describe(),
                u.describe(),
                frac.n(),
                frac.p(),
                None,
                Some(frac.s()),
                Some(qn),
                lhs,
                rhs,
                constant,
                rel_tol,
            );
            report.alpha = None;
            Ok(report)
        }
    }
}

/// Two-sided near-optimizer profile f(r) = r^{-kappa} (1 - |ln r|/L) on
/// [e^{-L}, e^{L}], discretized on a log-uniform grid.
pub fn log_tent_profile(
    kappa: f64,
    half_log_width: f64,
    points_per_decade: usize,
) -> Result<RadialProfile> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(Error::FamilyInvalid(format!(
            "optimizer exponent must be positive, got {kappa}"
        )));
    }
    if !(half_log_width > 0.0 && half_log_width.is_finite()) {
        return Err(Error::FamilyInvalid(format!(
            "log half-width must be positive, got {half_log_width}"
        )));
    }
    let decades = 2.0 * half_log_width / std::f64::consts::LN_10;
    let count = ((decades * points_per_decade as f64).ceil() as usize).max(8);
    let mut radii = Vec::with_capacity(count + 1);
    let mut values = Vec::with_capacity(count + 1);
    for i in 0..=count {
        let t = -half_log_width + 2.0 * half_log_width * i as f64 / count as f64;
        radii.push(t.exp());
        let shape = 1.0 - t.abs() / half_log_width;
        let v = if i == 0 || i == count {
            0.0
        } else {
            (-kappa * t).exp() * shape.max(0.0)
        };
        values.push(v);
    }
    RadialProfile::sampled(radii, values)
}

/// Sweep target: which constant the quotients approach.
#[derive(Debug, Clone)]
pub enum SweepCase {
    /// Power-weight inequality (constant weights only).
    Ckn { regime: Regime },
    /// Sharp p = 2 case.
    Thm13 { n: u32, alpha: f64, which: CaseId },
    /// Rearrangement-route constant at general p.
    Thm31 { regime: Regime },
    /// Fractional constant.
    Frac {
        frac: FracRegime,
        lambda: Option<f64>,
    },
    /// One-dimensional weighted Hardy lemma (quotients approach 1).
    Hardy1d { p: f64, beta: f64 },
}

/// Result of a sharpness sweep.
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub reports: Vec<QuotientReport>,
    pub bound: f64,
    pub final_quotient: f64,
    /// bound - final quotient.
    pub final_gap: f64,
}

/// Drive the Rayleigh quotient toward the asserted constant along the
/// log-tent family, one report per step. Quotients approach the constant
/// from below when the weight is constant; for general weights they stay
/// below the bound and the final gap is reported.
pub fn sharpness_sweep(
    case: &SweepCase,
    g: &SphericalWeight,
    steps: u32,
    quad: &SphereQuadrature,
) -> Result<SweepOutcome> {
    if steps == 0 {
        return Err(Error::FamilyInvalid("sweep needs at least one step".into()));
    }
    let points_per_decade = 48;
    // the fractional constant is step-independent; resolve it once
    let frac_lambda = match case {
        SweepCase::Frac { frac, lambda } => Some(match lambda {
            Some(l) => *l,
            None => lambda_cross_validated(frac)?.value(),
        }),
        _ => None,
    };
    let mut reports = Vec::new();
    let mut bound = f64::NAN;
    for k in 1..=steps {
        let half_width = k as f64 * 4.0f64.ln();
        let report = match case {
            SweepCase::Ckn { regime } => {
                let c = match g {
                    SphericalWeight::Constant(cw) => cw * ckn_sharp_constant(regime),
                    _ => {
                        return Err(Error::FamilyInvalid(
                            "the power-weight sweep takes a constant angular weight".into(),
                        ))
                    }
                };
                let kappa = regime.optimizer_exponent();
                let f = log_tent_profile(kappa, half_width, points_per_decade)?;
                let u = TestFunction::radial_only(f);
                let lhs = lhs_weighted(&u, g, regime, quad)?;
                let rhs = gradient_energy(&u, regime, quad)?;
                let mut rep = two_sided_report(
                    &CaseSpec::Thm31 { regime: *regime },
                    g.describe(),
                    format!("logtent(k={k})"),
                    regime.n(),
                    regime.p(),
                    Some(regime.alpha()),
                    None,
                    None,
                    lhs,
                    rhs,
                    c,
                    SLACK_TOLERANCE,
                );
                rep.theorem = "ckn".into();
                rep.case_label = format!("step{k}");
                rep
            }
            SweepCase::Thm13 { n, alpha, which } => {
                let spec = CaseSpec::Thm13 {
                    n: *n,
                    alpha: *alpha,
                    which: *which,
                };
                let kappa = (*n as f64 - alpha - 2.0) / 2.0;
                let f = log_tent_profile(kappa, half_width, points_per_decade)?;
                let u = TestFunction::radial_only(f);
                let mut rep = verify_case(&spec, &u, g, quad, SLACK_TOLERANCE)?;
                rep.test = format!("logtent(k={k})");
                rep.case_label = format!("{}-step{k}", which);
                rep
            }
            SweepCase::Thm31 { regime } => {
                let spec = CaseSpec::Thm31 { regime: *regime };
                let kappa = regime.optimizer_exponent();
                let f = log_tent_profile(kappa, half_width, points_per_decade)?;
                let u = TestFunction::radial_only(f);
                let mut rep = verify_case(&spec, &u, g, quad, SLACK_TOLERANCE)?;
                rep.test = format!("logtent(k={k})");
                rep.case_label = format!("step{k}");
                rep
            }
            SweepCase::Frac { frac, .. } => {
                let spec = CaseSpec::Thm14 {
                    frac: *frac,
                    lambda: frac_lambda,
                };
                let kappa = frac.optimizer_exponent();
                let f = log_tent_profile(kappa, half_width, points_per_decade)?;
                let u = TestFunction::radial_only(f);
                let mut rep = verify_case(&spec, &u, g, quad, SLACK_TOLERANCE)?;
                rep.test = format!("logtent(k={k})");
                rep.case_label = format!("step{k}");
                rep
            }
            SweepCase::Hardy1d { p, beta } => {
                let kappa = (beta - p + 1.0) / p;
                let f = log_tent_profile(kappa, half_width, points_per_decade)?;
                let (lhs, rhs) = radial_hardy_1d(&f, *p, *beta)?;
                let quotient = if rhs != 0.0 { lhs / rhs } else { 0.0 };
                let rep = QuotientReport {
                    theorem: "hardy1d".into(),
                    case_label: format!("step{k}"),
                    weight: "-".into(),
                    test: format!("logtent(k={k})"),
                    n: 1,
                    p: *p,
                    alpha: Some(*beta),
                    s: None,
                    q: None,
                    lhs,
                    rhs,
                    extra: None,
                    bound: 1.0,
                    quotient,
                    holds: lhs <= rhs * (1.0 + SLACK_TOLERANCE),
                    margin: 1.0 - quotient,
                    empirical: false,
                    gamma0: None,
                    threshold_proof: None,
                    threshold_statement: None,
                };
                rep
            }
        };
        bound = report.bound;
        reports.push(report);
    }
    let final_quotient = reports.last().map(|r| r.quotient).unwrap_or(f64::NAN);
    Ok(SweepOutcome {
        reports,
        bound,
        final_quotient,
        final_gap: bound - final_quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn quad() -> SphereQuadrature {
        SphereQuadrature::default()
    }

    fn tent_u() -> TestFunction {
        TestFunction::radial_only(RadialProfile::tent(1.0).unwrap())
    }

    #[test]
    fn lhs_tent_hand_value() {
        // g ≡ 1, h ≡ 1, tent, N=3, p=2, α=0: 4π ∫ (1-r)^2 dr = 4π/3
        let regime = Regime::new(3, 2.0, 0.0).unwrap();
        let one = SphericalWeight::constant(1.0).unwrap();
        let v = lhs_weighted(&tent_u(), &one, &regime, &quad()).unwrap();
        assert_relative_eq!(v, 4.0 * PI / 3.0, max_relative = 1e-12);
        // hemisphere halves it
        let hemi = SphericalWeight::cap(PI / 2.0).unwrap();
        let vh = lhs_weighted(&tent_u(), &hemi, &regime, &quad()).unwrap();
        assert_relative_eq!(vh, 2.0 * PI / 3.0, max_relative = 1e-11);
    }

    #[test]
    fn lhs_p_homogeneous_in_f() {
        let regime = Regime::new(4, 2.5, 0.0).unwrap();
        let one = SphericalWeight::constant(1.0).unwrap();
        let base = lhs_weighted(&tent_u(), &one, &regime, &quad()).unwrap();
        // 2 * tent as a sampled table (anchored near 0 so the constant
        // extension below the first node is immaterial)
        let mut radii: Vec<f64> = vec![1e-9];
        radii.extend((1..=200).map(|i| i as f64 * 0.005));
        let values: Vec<f64> = radii.iter().map(|&r| 2.0 * (1.0 - r).max(0.0)).collect();
        let doubled = TestFunction::radial_only(RadialProfile::sampled(radii, values).unwrap());
        let v = lhs_weighted(&doubled, &one, &regime, &quad()).unwrap();
        assert_relative_eq!(v, base * 2.0f64.powf(2.5), max_relative = 1e-6);
    }

    #[test]
    fn gradient_tent_hand_value() {
        // h ≡ 1, tent, N=3, p=2, α=0: 4π ∫ r^2 dr = 4π/3
        let regime = Regime::new(3, 2.0, 0.0).unwrap();
        let v = gradient_energy(&tent_u(), &regime, &quad()).unwrap();
        assert_relative_eq!(v, 4.0 * PI / 3.0, max_relative = 1e-12);
        // u ≡ 0
        let zero = TestFunction::radial_only(
            RadialProfile::sampled(vec![0.5, 1.0], vec![0.0, 0.0]).unwrap(),
        );
        assert_relative_eq!(gradient_energy(&zero, &regime, &quad()).unwrap(), 0.0);
    }

    #[test]
    fn gradient_p2_separable_matches_radial_formula() {
        // for h ≡ 1 and p = 2 the energy is |S^{N-1}| ∫ f'^2 r^{N-α-1}
        let regime = Regime::new(5, 2.0, 0.5).unwrap();
        let f = RadialProfile::exp_bump(1.0, 14.0).unwrap();
        let u = TestFunction::radial_only(f.clone());
        let direct = gradient_energy(&u, &regime, &quad()).unwrap();
        let radial = radial_integral(&f, |r| f.deriv(r).powi(2) * r.powf(5.0 - 0.5 - 1.0));
        assert_relative_eq!(
            direct,
            surface_measure(5).unwrap() * radial,
            max_relative = 1e-12
        );
    }

    #[test]
    fn gradient_tensor_path_consistent_with_separable() {
        // p = 2 with an angular factor: separable path vs the generic
        // tensor quadrature must agree; force the tensor path through a
        // nearby non-2 exponent sanity pair instead: compare p = 2
        // separable against the tensor evaluation done manually.
        let n = 4u32;
        let alpha = 0.25;
        let h = AngularFactor::cap_smooth(2.0, 0.5).unwrap();
        let f = RadialProfile::tent(1.0).unwrap();
        let u = TestFunction::new(f.clone(), h.clone());
        let regime = Regime::new(n, 2.0, alpha).unwrap();
        let separable = gradient_energy(&u, &regime, &quad()).unwrap();
        // manual tensor evaluation at p = 2
        let rule = GaussRule::new(24);
        let mut manual = 0.0;
        for (a, b) in quadrature_panels(&f, 0.0, 1.0, false, true) {
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            for (&x, &wq) in rule.nodes.iter().zip(&rule.weights) {
                let r = mid + half * x;
                let fr = f.eval(r);
                let dfr = f.deriv(r);
                let ang = integrate_zonal_fn(
                    |phi| {
                        let hv = h.eval(phi);
                        let dh = h.deriv(phi);
                        dfr * dfr * hv * hv + fr * fr * dh * dh / (r * r)
                    },
                    n,
                    &quad(),
                    &h.kinks(),
                )
                .unwrap();
                manual += wq * half * ang * r.powf(n as f64 - alpha - 1.0);
            }
        }
        assert_relative_eq!(separable, manual, max_relative = 1e-10);
    }

    #[test]
    fn dilation_leaves_quotients_invariant() {
        // p = 2, α = 0, N = 3: both sides scale by λ^{p+α-N}
        let regime = Regime::new(3, 2.0, 0.0).unwrap();
        let one = SphericalWeight::constant(1.0).unwrap();
        let u = tent_u();
        let lhs0 = lhs_weighted(&u, &one, &regime, &quad()).unwrap();
        let rhs0 = gradient_energy(&u, &regime, &quad()).unwrap();
        for lambda in [2.0, 5.0] {
            let ud = TestFunction::radial_only(u.radial.dilate(lambda).unwrap());
            let lhs = lhs_weighted(&ud, &one, &regime, &quad()).unwrap();
            let rhs = gradient_energy(&ud, &regime, &quad()).unwrap();
            let scale = lambda.powf(2.0 + 0.0 - 3.0);
            assert_relative_eq!(lhs, lhs0 * scale, max_relative = 1e-12);
            assert_relative_eq!(rhs, rhs0 * scale, max_relative = 1e-12);
            assert_relative_eq!(lhs / rhs, lhs0 / rhs0, max_relative = 1e-12);
        }
    }

    #[test]
    fn angular_rescaling_moves_only_lhs() {
        let regime = Regime::new(5, 2.0, 0.3).unwrap();
        let u = TestFunction::new(
            RadialProfile::tent(1.0).unwrap(),
            AngularFactor::cap_smooth(2.0, 0.5).unwrap(),
        );
        let g1 = SphericalWeight::constant(1.0).unwrap();
        let g2 = SphericalWeight::constant(2.0).unwrap();
        let l1 = lhs_weighted(&u, &g1, &regime, &quad()).unwrap();
        let l2 = lhs_weighted(&u, &g2, &regime, &quad()).unwrap();
        assert_relative_eq!(l2, 2.0 * l1, max_relative = 1e-13);
        let e1 = gradient_energy(&u, &regime, &quad()).unwrap();
        let e2 = gradient_energy(&u, &regime, &quad()).unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn hardy_1d_exp_profile() {
        // truncated e^{-r}, p = 2, β = 2: lhs ≈ 1/2, rhs ≈ 4 · 1/4 = 1
        let f = RadialProfile::exp_bump(1.0, 20.0).unwrap();
        let (lhs, rhs) = radial_hardy_1d(&f, 2.0, 2.0).unwrap();
        assert_relative_eq!(lhs, 0.5, max_relative = 1e-6);
        assert_relative_eq!(rhs, 1.0, max_relative = 1e-6);
        assert!(lhs <= rhs);
        // zero profile
        let zero = RadialProfile::sampled(vec![0.5, 1.0], vec![0.0, 0.0]).unwrap();
        let (l0, r0) = radial_hardy_1d(&zero, 2.0, 2.0).unwrap();
        assert_eq!((l0, r0), (0.0, 0.0));
        // regime guard
        assert!(matches!(
            radial_hardy_1d(&f, 2.0, 1.0),
            Err(Error::RegimeViolation(_))
        ));
    }

    #[test]
    fn verify_thm13_case1_tent() {
        let spec = CaseSpec::Thm13 {
            n: 5,
            alpha: 0.0,
            which: CaseId::Case1,
        };
        let one = SphericalWeight::constant(1.0).unwrap();
        let rep = verify_case(&spec, &tent_u(), &one, &quad(), SLACK_TOLERANCE).unwrap();
        assert!(rep.holds);
        assert_relative_eq!(rep.bound, 4.0 / 9.0, max_relative = 1e-12);
        assert!(rep.quotient < rep.bound);
        assert_eq!(rep.q, Some(17.0 / 8.0));
        assert_eq!(rep.threshold_statement, Some(1.0));
    }

    #[test]
    fn verify_thm13_case2_three_term() {
        let spec = CaseSpec::Thm13 {
            n: 5,
            alpha: 0.0,
            which: CaseId::Case2,
        };
        let u = TestFunction::new(
            RadialProfile::tent(1.0).unwrap(),
            AngularFactor::cap_smooth(2.0, 0.5).unwrap(),
        );
        let one = SphericalWeight::constant(1.0).unwrap();
        let rep = verify_case(&spec, &u, &one, &quad(), SLACK_TOLERANCE).unwrap();
        assert!(rep.holds, "slack = {}", rep.margin);
        assert!(rep.margin >= 0.0);
        assert_relative_eq!(rep.gamma0.unwrap(), 9.0 / 8.0, max_relative = 1e-14);
        assert!(rep.extra.unwrap() > 0.0);
    }

    #[test]
    fn verify_thm31_reduces_to_ckn_for_unit_weight() {
        let regime = Regime::new(5, 2.0, 0.0).unwrap();
        let spec = CaseSpec::Thm31 { regime };
        let one = SphericalWeight::constant(1.0).unwrap();
        let rep = verify_case(&spec, &tent_u(), &one, &quad(), SLACK_TOLERANCE).unwrap();
        assert!(rep.holds);
        assert_relative_eq!(rep.bound, ckn_sharp_constant(&regime), max_relative = 1e-13);
        // signed weight refused
        let signed =
            SphericalWeight::sampled(vec![0.0, PI / 2.0, PI], vec![1.0, -1.0, 0.0]).unwrap();
        assert!(matches!(
            verify_case(&spec, &tent_u(), &signed, &quad(), SLACK_TOLERANCE),
            Err(Error::NonnegRequired(_))
        ));
    }

    #[test]
    fn verify_thm12_empirical_flag() {
        let regime = Regime::new(5, 2.0, 0.0).unwrap();
        let spec = CaseSpec::Thm12 {
            regime,
            user_q: None,
            empirical_bound: None,
        };
        let one = SphericalWeight::constant(1.0).unwrap();
        let rep = verify_case(&spec, &tent_u(), &one, &quad(), SLACK_TOLERANCE).unwrap();
        assert!(rep.empirical);
        assert!(rep.holds);
        assert!(rep.bound.is_nan());
        assert_eq!(rep.q, Some(2.0));
        // with an explicit bound above the quotient it holds, below it fails
        let spec_ok = CaseSpec::Thm12 {
            regime,
            user_q: None,
            empirical_bound: Some(rep.quotient * 2.0),
        };
        assert!(verify_case(&spec_ok, &tent_u(), &one, &quad(), SLACK_TOLERANCE)
            .unwrap()
            .holds);
        let spec_bad = CaseSpec::Thm12 {
            regime,
            user_q: None,
            empirical_bound: Some(rep.quotient * 0.5),
        };
        assert!(!verify_case(&spec_bad, &tent_u(), &one, &quad(), SLACK_TOLERANCE)
            .unwrap()
            .holds);
    }

    #[test]
    fn thm13_admits_signed_weights() {
        // no sign condition on g for the p = 2 cases: the norm bound uses
        // |g|, and the left side may even go negative
        let signed = SphericalWeight::sampled(
            vec![0.0, PI / 2.0, PI],
            vec![-1.0, -0.25, -1.0],
        )
        .unwrap();
        for which in [CaseId::Case1, CaseId::Case2] {
            let spec = CaseSpec::Thm13 {
                n: 5,
                alpha: 0.0,
                which,
            };
            let rep = verify_case(&spec, &tent_u(), &signed, &quad(), SLACK_TOLERANCE).unwrap();
            assert!(rep.holds, "{which:?} fails on a signed weight");
        }
        // and the left side is genuinely negative here
        let regime = Regime::new(5, 2.0, 0.0).unwrap();
        assert!(lhs_weighted(&tent_u(), &signed, &regime, &quad()).unwrap() < 0.0);
    }

    #[test]
    fn thm12_boundary_exponent_needs_explicit_q() {
        // p = N - 1 exactly: no default exponent is invented
        let regime = Regime::new(4, 3.0, 0.0).unwrap();
        let one = SphericalWeight::constant(1.0).unwrap();
        let spec = CaseSpec::Thm12 {
            regime,
            user_q: None,
            empirical_bound: None,
        };
        assert!(matches!(
            verify_case(&spec, &tent_u(), &one, &quad(), SLACK_TOLERANCE),
            Err(Error::QRequired)
        ));
        let spec = CaseSpec::Thm12 {
            regime,
            user_q: Some(1.5),
            empirical_bound: None,
        };
        let rep = verify_case(&spec, &tent_u(), &one, &quad(), SLACK_TOLERANCE).unwrap();
        assert_eq!(rep.q, Some(1.5));
    }

    #[test]
    fn log_tent_family_shape() {
        let f = log_tent_profile(1.5, 4.0f64.ln(), 48).unwrap();
        assert_eq!(f.eval(0.25 * (1.0 - 1e-9)), 0.0);
        assert_eq!(f.eval(4.0), 0.0);
        // peak near r = e^{-L} ... interior positivity
        assert!(f.eval(1.0) > 0.0);
        assert!(f.eval(0.5) > f.eval(1.0)); // r^{-κ} growth toward small r
    }

    #[test]
    fn log_tent_quotient_matches_closed_form() {
        // exact: num = 2L/(p+1), den = L[(κ+1/L)^{p+1} + (κ-1/L)^{p+1}]/(κ(p+1))
        let regime = Regime::new(5, 2.0, 0.0).unwrap();
        let kappa = regime.optimizer_exponent();
        let p = 2.0;
        for k in [2u32, 5] {
            let ll = k as f64 * 4.0f64.ln();
            let f = log_tent_profile(kappa, ll, 64).unwrap();
            let u = TestFunction::radial_only(f);
            let one = SphericalWeight::constant(1.0).unwrap();
            let lhs = lhs_weighted(&u, &one, &regime, &quad()).unwrap();
            let rhs = gradient_energy(&u, &regime, &quad()).unwrap();
            let num = 2.0 * ll / (p + 1.0);
            let den = ll * ((kappa + 1.0 / ll).powf(p + 1.0) + (kappa - 1.0 / ll).powf(p + 1.0))
                / (kappa * (p + 1.0));
            // the sampled family is an interpolant, so allow its small bias
            assert_relative_eq!(lhs / rhs, num / den, max_relative = 2e-3);
        }
    }

    #[test]
    fn ckn_sweep_monotone_and_close() {
        let regime = Regime::new(5, 2.0, 0.0).unwrap();
        let one = SphericalWeight::constant(1.0).unwrap();
        let out = sharpness_sweep(&SweepCase::Ckn { regime }, &one, 8, &quad()).unwrap();
        assert_eq!(out.reports.len(), 8);
        for w in out.reports.windows(2) {
            assert!(
                w[1].quotient >= w[0].quotient * (1.0 - 1e-3),
                "sweep not monotone: {} -> {}",
                w[0].quotient,
                w[1].quotient
            );
        }
        for r in &out.reports {
            assert!(r.holds);
            assert!(r.quotient <= out.bound);
        }
        assert!(
            out.final_quotient >= 0.95 * (4.0 / 9.0),
            "final quotient {} too far from 4/9",
            out.final_quotient
        );
    }

    #[test]
    fn hardy_1d_sweep_reaches_098() {
        for (p, beta) in [(2.0, 2.0), (3.0, 4.0)] {
            let out = sharpness_sweep(
                &SweepCase::Hardy1d { p, beta },
                &SphericalWeight::constant(1.0).unwrap(),
                24,
                &quad(),
            )
            .unwrap();
            assert!(
                out.final_quotient >= 0.98,
                "(p, beta) = ({p}, {beta}): ratio {}",
                out.final_quotient
            );
            for r in &out.reports {
                assert!(r.quotient <= 1.0 + 1e-9);
            }
        }
    }
}
