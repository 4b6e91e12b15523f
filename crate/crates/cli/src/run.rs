//! Command execution: dispatch a validated configuration to the library
//! and collect report rows.

use crate::config::{RegimeParams, RunCommand, RunConfig, TheoremId};
use crate::report::ReportRow;

use hardylab_core::fractional::{lambda_constant, LambdaScheme};
use hardylab_core::montecarlo::{ball_region_volume, seed_from_env};
use hardylab_core::quotients::{sharpness_sweep, verify_case, QuotientReport, SLACK_TOLERANCE};
use hardylab_core::rearrangement::{rearranged_coefficient, superlevel_measure, HomogeneousWeight};
use hardylab_core::regimes::{
    case13, ckn_sharp_constant, classify_case13, frac_constant, thm13_constant, thm31_constant,
    CaseId, FracRegime, Regime,
};
use hardylab_core::sphere::{lq_norm, surface_measure, SphereQuadrature, SphericalWeight};

/// A failure while executing a valid configuration (exit code 1), named
/// after the offending operation.
#[derive(Debug)]
pub struct RunError(pub String);

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "run error: {}", self.0)
    }
}

impl std::error::Error for RunError {}

type RResult<T> = Result<T, RunError>;

fn lib<T>(op: &str, r: hardylab_core::Result<T>) -> RResult<T> {
    r.map_err(|e| RunError(format!("{op}: {e}")))
}

/// Outcome of a run: rows plus whether any inequality was violated.
pub struct RunOutcome {
    pub rows: Vec<ReportRow>,
    pub violated: bool,
}

fn report_to_row(rep: &QuotientReport, test: &str, bound_scale: f64) -> ReportRow {
    let bound = rep.bound * bound_scale;
    let (holds, margin) = if rep.bound.is_nan() {
        (Some(rep.holds), None)
    } else if bound_scale == 1.0 {
        (Some(rep.holds), Some(rep.margin))
    } else {
        // recheck against the (test-only) corrupted bound
        let margin = bound - rep.quotient;
        (Some(margin >= -SLACK_TOLERANCE * bound.abs().max(1e-300)), Some(margin))
    };
    ReportRow {
        theorem: rep.theorem.clone(),
        case: format!("{}/{}", rep.case_label, test),
        weight: rep.weight.clone(),
        n: Some(rep.n),
        p: Some(rep.p),
        alpha: rep.alpha,
        s: rep.s,
        q: rep.q,
        value: Some(rep.quotient),
        bound: Some(bound),
        margin,
        holds,
        scheme: if rep.empirical { "empirical".into() } else { String::new() },
        est_error: None,
    }
}

pub fn execute(config: &RunConfig) -> RResult<RunOutcome> {
    let quad = &config.quad;
    match &config.command {
        RunCommand::Constant {
            theorem,
            regime,
            weight,
        } => constant_rows(*theorem, regime, weight, quad),
        RunCommand::Verify {
            theorem,
            regime,
            weights,
            tests,
            empirical_bound,
            user_q,
            bound_scale,
        } => {
            let mut spec = crate::config::case_spec_for(*theorem, regime, *user_q, *empirical_bound)
                .map_err(|e| RunError(e.0))?
                .expect("verify always yields a spec");
            // the fractional constant is row-independent; resolve it once
            if let hardylab_core::quotients::CaseSpec::Thm14 {
                frac,
                lambda: lambda @ None,
            } = &mut spec
            {
                *lambda = Some(
                    lib(
                        "lambda_cross_validated",
                        hardylab_core::fractional::lambda_cross_validated(frac),
                    )?
                    .value(),
                );
            }
            let mut rows = Vec::new();
            let mut violated = false;
            let mut empirical_sup = f64::NEG_INFINITY;
            let fractional = matches!(theorem, TheoremId::Thm14);
            for (wname, w) in weights {
                for (tname, t) in tests {
                    if fractional && !t.angular.is_one() {
                        continue; // radial reduction only
                    }
                    let rep = lib(
                        "verify_case",
                        verify_case(&spec, t, w, quad, SLACK_TOLERANCE),
                    )?;
                    let mut row = report_to_row(&rep, tname, *bound_scale);
                    row.weight = wname.clone();
                    if row.holds == Some(false) {
                        violated = true;
                    }
                    empirical_sup = empirical_sup.max(rep.quotient);
                    rows.push(row);
                }
            }
            if matches!(theorem, TheoremId::Thm12) && empirical_sup.is_finite() {
                rows.push(ReportRow {
                    theorem: "thm12".into(),
                    case: "empirical-sup".into(),
                    weight: "-".into(),
                    n: Some(regime.n),
                    p: regime.p,
                    alpha: regime.alpha,
                    value: Some(empirical_sup),
                    scheme: "empirical".into(),
                    ..Default::default()
                });
            }
            Ok(RunOutcome { rows, violated })
        }
        RunCommand::Sweep {
            case,
            weight,
            steps,
        } => {
            let outcome = lib(
                "sharpness_sweep",
                sharpness_sweep(case, &weight.1, *steps, quad),
            )?;
            let mut rows = Vec::new();
            let mut violated = false;
            for rep in &outcome.reports {
                let mut row = report_to_row(rep, &rep.test, 1.0);
                row.case = rep.case_label.clone();
                row.weight = weight.0.clone();
                if row.holds == Some(false) {
                    violated = true;
                }
                rows.push(row);
            }
            rows.push(ReportRow {
                theorem: outcome
                    .reports
                    .last()
                    .map(|r| r.theorem.clone())
                    .unwrap_or_default(),
                case: "summary".into(),
                weight: weight.0.clone(),
                value: Some(outcome.final_quotient),
                bound: Some(outcome.bound),
                margin: Some(outcome.final_gap),
                holds: Some(!violated),
                ..Default::default()
            });
            Ok(RunOutcome { rows, violated })
        }
        RunCommand::Lambda { frac } => {
            let graded = lib(
                "lambda_constant(graded-gauss)",
                lambda_constant(frac, LambdaScheme::GradedGauss),
            )?;
            let ts = lib(
                "lambda_constant(tanh-sinh)",
                lambda_constant(frac, LambdaScheme::TanhSinh),
            )?;
            let rel = (graded.lambda - ts.lambda).abs() / ts.lambda.abs();
            if rel > 1e-6 {
                return Err(RunError(format!(
                    "lambda_constant: quadrature-inconsistent: schemes disagree by {rel:.3e}"
                )));
            }
            let row = |r: &hardylab_core::fractional::LambdaResult| ReportRow {
                theorem: "thm14".into(),
                case: "lambda".into(),
                weight: "-".into(),
                n: Some(frac.n()),
                p: Some(frac.p()),
                s: Some(frac.s()),
                value: Some(r.lambda),
                scheme: r.scheme_id.to_string(),
                est_error: Some(r.est_error.max(rel * ts.lambda)),
                ..Default::default()
            };
            Ok(RunOutcome {
                rows: vec![row(&graded), row(&ts)],
                violated: false,
            })
        }
        RunCommand::Rearrange {
            n,
            degree,
            weight,
            levels,
            mc_samples,
        } => {
            let hw = lib(
                "homogeneous_weight",
                HomogeneousWeight::new(weight.1.clone(), *degree),
            )?;
            let coeff = lib("rearranged_coefficient", rearranged_coefficient(&hw, *n, quad))?;
            let measure = lib("surface_measure", surface_measure(*n))?;
            let mut rows = vec![ReportRow {
                theorem: "thm31".into(),
                case: "coefficient".into(),
                weight: weight.0.clone(),
                n: Some(*n),
                alpha: Some(*degree),
                value: Some(coeff),
                ..Default::default()
            }];
            let mut violated = false;
            for &t in levels {
                let direct = lib("superlevel_measure", superlevel_measure(&hw, t, *n, quad))?;
                // equimeasurability: the rearranged weight A/|x|^d has
                // superlevel measure |S^{N-1}|/N (A/t)^{N/d}
                let rearranged = measure / *n as f64 * (coeff / t).powf(*n as f64 / degree);
                let margin = (direct - rearranged).abs();
                let holds = margin <= 1e-12 * direct.abs().max(rearranged.abs());
                violated |= !holds;
                rows.push(ReportRow {
                    theorem: "thm31".into(),
                    case: format!("superlevel t={t}"),
                    weight: weight.0.clone(),
                    n: Some(*n),
                    alpha: Some(*degree),
                    value: Some(direct),
                    bound: Some(rearranged),
                    margin: Some(margin),
                    holds: Some(holds),
                    ..Default::default()
                });
            }
            if let Some(samples) = mc_samples {
                // Monte-Carlo volume of the superlevel set at t = 1:
                // {y : g(y/|y|) > |y|^d} inside the bounding ball of
                // radius max(g)^{1/d}
                let g = weight.1.clone();
                let d = *degree;
                let gmax = (0..=1024)
                    .map(|i| g.eval(std::f64::consts::PI * i as f64 / 1024.0))
                    .fold(0.0f64, f64::max);
                if gmax > 0.0 {
                    let radius = gmax.powf(1.0 / d);
                    let nn = *n;
                    let est = lib(
                        "ball_region_volume",
                        ball_region_volume(
                            move |y: &[f64]| {
                                let r2: f64 = y.iter().map(|a| a * a).sum();
                                let r = r2.sqrt();
                                if r == 0.0 {
                                    return true;
                                }
                                let phi = (y[nn as usize - 1] / r).clamp(-1.0, 1.0).acos();
                                g.eval(phi) > r.powf(d)
                            },
                            *n,
                            radius,
                            *samples,
                            seed_from_env(),
                        ),
                    )?;
                    let reference = lib(
                        "superlevel_measure",
                        superlevel_measure(&hw, 1.0, *n, quad),
                    )?;
                    let sigmas = est.sigmas_from(reference);
                    let holds = sigmas < 3.0;
                    violated |= !holds;
                    rows.push(ReportRow {
                        theorem: "thm31".into(),
                        case: "mc-volume t=1".into(),
                        weight: weight.0.clone(),
                        n: Some(*n),
                        alpha: Some(*degree),
                        value: Some(est.mean),
                        bound: Some(reference),
                        margin: Some(sigmas),
                        holds: Some(holds),
                        scheme: "monte-carlo".into(),
                        est_error: Some(est.std_err),
                        ..Default::default()
                    });
                }
            }
            Ok(RunOutcome { rows, violated })
        }
    }
}

fn constant_rows(
    theorem: TheoremId,
    regime: &RegimeParams,
    weight: &(String, SphericalWeight),
    quad: &SphereQuadrature,
) -> RResult<RunOutcome> {
    let (wname, w) = weight;
    let mut rows = Vec::new();
    match theorem {
        TheoremId::Ckn => {
            let r = lib(
                "regime",
                Regime::new(regime.n, regime.p.unwrap(), regime.alpha.unwrap()),
            )?;
            rows.push(ReportRow {
                theorem: "ckn".into(),
                case: "constant".into(),
                weight: "-".into(),
                n: Some(r.n()),
                p: Some(r.p()),
                alpha: Some(r.alpha()),
                value: Some(ckn_sharp_constant(&r)),
                ..Default::default()
            });
        }
        TheoremId::Thm13Case1 | TheoremId::Thm13Case2 | TheoremId::Thm13Case3 => {
            let which = match theorem {
                TheoremId::Thm13Case1 => CaseId::Case1,
                TheoremId::Thm13Case2 => CaseId::Case2,
                _ => CaseId::Case3,
            };
            let alpha = regime.alpha.unwrap();
            let case = lib("case13", case13(regime.n, alpha, which))?;
            let norm = lib("lq_norm", lq_norm(w, case.q, regime.n, quad))?;
            let c = lib(
                "thm13_constant",
                thm13_constant(regime.n, alpha, norm, case.q),
            )?;
            rows.push(ReportRow {
                theorem: "thm13".into(),
                case: format!("{which}"),
                weight: wname.clone(),
                n: Some(regime.n),
                p: Some(2.0),
                alpha: Some(alpha),
                q: Some(case.q),
                value: Some(c),
                ..Default::default()
            });
            if let Some(g0) = case.gamma0 {
                rows.push(ReportRow {
                    theorem: "thm13".into(),
                    case: "gamma0".into(),
                    weight: "-".into(),
                    n: Some(regime.n),
                    p: Some(2.0),
                    alpha: Some(alpha),
                    value: Some(g0),
                    ..Default::default()
                });
            }
        }
        TheoremId::Thm31 => {
            let r = lib(
                "regime",
                Regime::new(regime.n, regime.p.unwrap(), regime.alpha.unwrap()),
            )?;
            let qn = lib("weight_norm_exponent", r.weight_norm_exponent())?;
            let norm = lib("lq_norm", lq_norm(w, qn, regime.n, quad))?;
            let c = lib("thm31_constant", thm31_constant(&r, norm))?;
            rows.push(ReportRow {
                theorem: "thm31".into(),
                case: "constant".into(),
                weight: wname.clone(),
                n: Some(r.n()),
                p: Some(r.p()),
                alpha: Some(r.alpha()),
                q: Some(qn),
                value: Some(c),
                ..Default::default()
            });
        }
        TheoremId::Thm14 => {
            let frac = lib(
                "frac_regime",
                FracRegime::new(regime.n, regime.s.unwrap(), regime.p.unwrap()),
            )?;
            let cross = lib(
                "lambda_cross_validated",
                hardylab_core::fractional::lambda_cross_validated(&frac),
            )?;
            let qn = frac.weight_norm_exponent();
            let norm = if frac.n() == 1 {
                match w {
                    SphericalWeight::Constant(c) => c * 2.0f64.powf(1.0 / qn),
                    _ => {
                        return Err(RunError(
                            "lq_norm: N = 1 admits only constant angular weights".into(),
                        ))
                    }
                }
            } else {
                lib("lq_norm", lq_norm(w, qn, frac.n(), quad))?
            };
            let c = lib("frac_constant", frac_constant(&frac, norm, cross.value()))?;
            rows.push(ReportRow {
                theorem: "thm14".into(),
                case: "constant".into(),
                weight: wname.clone(),
                n: Some(frac.n()),
                p: Some(frac.p()),
                s: Some(frac.s()),
                q: Some(qn),
                value: Some(c),
                scheme: "cross-validated".into(),
                est_error: Some(cross.rel_disagreement * cross.value()),
                ..Default::default()
            });
        }
        TheoremId::Thm12 => unreachable!("rejected at parse time"),
    }
    // classification side note for thm13 constants: list the other cases
    // that also apply at this (N, alpha)
    if let Some(requested) = match theorem {
        TheoremId::Thm13Case1 => Some(CaseId::Case1),
        TheoremId::Thm13Case2 => Some(CaseId::Case2),
        TheoremId::Thm13Case3 => Some(CaseId::Case3),
        _ => None,
    } {
        if let Ok(classified) = classify_case13(regime.n, regime.alpha.unwrap()) {
            for other in std::iter::once(&classified.primary)
                .chain(&classified.also_available)
                .filter(|c| c.case_id != requested)
            {
                rows.push(ReportRow {
                    theorem: "thm13".into(),
                    case: format!("also-available:{}", other.case_id),
                    weight: "-".into(),
                    n: Some(regime.n),
                    p: Some(2.0),
                    alpha: regime.alpha,
                    q: Some(other.q),
                    ..Default::default()
                });
            }
        }
    }
    Ok(RunOutcome {
        rows,
        violated: false,
    })
}
