//! Run-configuration parsing and validation.
//!
//! Configurations are JSON documents; every regime condition is re-checked
//! here so that a malformed run fails at parse time with the violated
//! condition named, before any computation starts.

use serde::{Deserialize, Serialize};

use hardylab_core::catalog;
use hardylab_core::profiles::{AngularFactor, RadialProfile, TestFunction};
use hardylab_core::quotients::{CaseSpec, SweepCase};
use hardylab_core::regimes::{CaseId, FracRegime, Regime};
use hardylab_core::sphere::{SphereQuadrature, SphericalWeight};

/// Raw configuration document (the on-disk schema).
#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConfigDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<WeightDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub test: Option<TestDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tests: Option<Vec<TestDoc>>,
    /// Use the built-in weight/test catalogs for `verify`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u32>,
    /// Homogeneity degree for `rearrange`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<f64>,
    /// Superlevel thresholds for the equimeasurability rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empirical_bound: Option<f64>,
    /// Test-only: multiply every asserted bound before the holds check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_scale: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mc_check: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mc_samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadrature: Option<QuadDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum WeightDoc {
    Constant {
        value: f64,
    },
    Cap {
        phi0: f64,
    },
    ZonalPower {
        power: f64,
    },
    Sampled {
        #[serde(skip_serializing_if = "Option::is_none")]
        path: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        table: Option<Vec<[f64; 2]>>,
    },
    Named {
        name: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TestDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radial: Option<RadialDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angular: Option<AngularDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RadialDoc {
    Tent {
        radius: f64,
    },
    Power {
        exponent: f64,
        inner: f64,
        outer: f64,
        ramp: f64,
    },
    ExpBump {
        scale: f64,
        cutoff: f64,
    },
    Sampled {
        path: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AngularDoc {
    One,
    Cos,
    Cap { phi0: f64, ramp: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct QuadDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub angular_nodes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct OutputDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
}

/// Configuration or usage problem: maps to exit code 1.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

impl From<hardylab_core::Error> for ConfigError {
    fn from(e: hardylab_core::Error) -> Self {
        ConfigError(e.to_string())
    }
}

type CResult<T> = Result<T, ConfigError>;

/// Theorem selector for `constant` and `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    Ckn,
    Thm12,
    Thm13Case1,
    Thm13Case2,
    Thm13Case3,
    Thm31,
    Thm14,
}

impl TheoremId {
    fn parse(s: &str) -> CResult<Self> {
        Ok(match s {
            "ckn" => TheoremId::Ckn,
            "thm12" => TheoremId::Thm12,
            "thm13-case1" | "thm13case1" => TheoremId::Thm13Case1,
            "thm13-case2" | "thm13case2" => TheoremId::Thm13Case2,
            "thm13-case3" | "thm13case3" => TheoremId::Thm13Case3,
            "thm31" => TheoremId::Thm31,
            "thm14" | "frac" => TheoremId::Thm14,
            other => {
                return Err(ConfigError(format!(
                    "unknown theorem '{other}' (expected ckn, thm12, thm13-case1..3, thm31, thm14)"
                )))
            }
        })
    }
}

/// Fully validated run plan.
#[derive(Debug, Clone)]
pub enum RunCommand {
    Constant {
        theorem: TheoremId,
        regime: RegimeParams,
        weight: (String, SphericalWeight),
    },
    Verify {
        theorem: TheoremId,
        regime: RegimeParams,
        weights: Vec<(String, SphericalWeight)>,
        tests: Vec<(String, TestFunction)>,
        empirical_bound: Option<f64>,
        user_q: Option<f64>,
        bound_scale: f64,
    },
    Sweep {
        case: SweepCase,
        weight: (String, SphericalWeight),
        steps: u32,
    },
    Lambda {
        frac: FracRegime,
    },
    Rearrange {
        n: u32,
        degree: f64,
        weight: (String, SphericalWeight),
        levels: Vec<f64>,
        mc_samples: Option<usize>,
    },
}

/// The regime numbers a theorem selector needs.
#[derive(Debug, Clone, Copy)]
pub struct RegimeParams {
    pub n: u32,
    pub p: Option<f64>,
    pub alpha: Option<f64>,
    pub s: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: RunCommand,
    pub quad: SphereQuadrature,
    pub out_path: Option<String>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

fn require<T: Copy>(v: Option<T>, what: &str) -> CResult<T> {
    v.ok_or_else(|| ConfigError(format!("missing required field '{what}'")))
}

fn build_weight(doc: &WeightDoc) -> CResult<(String, SphericalWeight)> {
    Ok(match doc {
        WeightDoc::Constant { value } => {
            (format!("const({value})"), SphericalWeight::constant(*value)?)
        }
        WeightDoc::Cap { phi0 } => (format!("cap({phi0})"), SphericalWeight::cap(*phi0)?),
        WeightDoc::ZonalPower { power } => {
            (format!("|cos|^{power}"), SphericalWeight::zonal_power(*power)?)
        }
        WeightDoc::Sampled { path, table } => match (path, table) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| ConfigError(format!("cannot read weight csv '{path}': {e}")))?;
                (
                    format!("csv({path})"),
                    SphericalWeight::sampled_from_csv(&text)?,
                )
            }
            (None, Some(table)) => {
                let angles = table.iter().map(|r| r[0]).collect();
                let values = table.iter().map(|r| r[1]).collect();
                (
                    format!("table({} pts)", table.len()),
                    SphericalWeight::sampled(angles, values)?,
                )
            }
            _ => {
                return Err(ConfigError(
                    "sampled weight needs exactly one of 'path' or 'table'".into(),
                ))
            }
        },
        WeightDoc::Named { name } => (
            name.clone(),
            catalog::weight_by_name(name)
                .ok_or_else(|| ConfigError(format!("unknown catalog weight '{name}'")))?,
        ),
    })
}

fn build_test(doc: &TestDoc) -> CResult<(String, TestFunction)> {
    if let Some(name) = &doc.name {
        if doc.radial.is_some() || doc.angular.is_some() {
            return Err(ConfigError(
                "a test takes either 'name' or explicit radial/angular parts, not both".into(),
            ));
        }
        return Ok((
            name.clone(),
            catalog::test_by_name(name)
                .ok_or_else(|| ConfigError(format!("unknown catalog test '{name}'")))?,
        ));
    }
    let radial = doc
        .radial
        .as_ref()
        .ok_or_else(|| ConfigError("test needs a 'radial' part (or a 'name')".into()))?;
    let radial = match radial {
        RadialDoc::Tent { radius } => RadialProfile::tent(*radius)?,
        RadialDoc::Power {
            exponent,
            inner,
            outer,
            ramp,
        } => RadialProfile::truncated_power(*exponent, *inner, *outer, *ramp)?,
        RadialDoc::ExpBump { scale, cutoff } => RadialProfile::exp_bump(*scale, *cutoff)?,
        RadialDoc::Sampled { path } => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ConfigError(format!("cannot read profile csv '{path}': {e}")))?;
            RadialProfile::sampled_from_csv(&text)?
        }
    };
    let angular = match doc.angular.as_ref().unwrap_or(&AngularDoc::One) {
        AngularDoc::One => AngularFactor::One,
        AngularDoc::Cos => AngularFactor::Cos,
        AngularDoc::Cap { phi0, ramp } => AngularFactor::cap_smooth(*phi0, *ramp)?,
    };
    let u = TestFunction::new(radial, angular);
    Ok((u.describe(), u))
}

/// Re-validate the numbers behind a theorem selector; every violated
/// condition surfaces here, named.
pub fn validate_regime(theorem: TheoremId, r: &RegimeParams) -> CResult<()> {
    match theorem {
        TheoremId::Ckn | TheoremId::Thm12 => {
            Regime::new(r.n, require(r.p, "p")?, require(r.alpha, "alpha")?)?;
        }
        TheoremId::Thm31 => {
            let regime = Regime::new(r.n, require(r.p, "p")?, require(r.alpha, "alpha")?)?;
            regime.weight_norm_exponent()?;
        }
        TheoremId::Thm13Case1 => {
            hardylab_core::regimes::case13(r.n, require(r.alpha, "alpha")?, CaseId::Case1)?;
        }
        TheoremId::Thm13Case2 => {
            hardylab_core::regimes::case13(r.n, require(r.alpha, "alpha")?, CaseId::Case2)?;
        }
        TheoremId::Thm13Case3 => {
            hardylab_core::regimes::case13(r.n, require(r.alpha, "alpha")?, CaseId::Case3)?;
        }
        TheoremId::Thm14 => {
            FracRegime::new(r.n, require(r.s, "s")?, require(r.p, "p")?)?;
        }
    }
    Ok(())
}

/// Parse and validate a configuration document for the given CLI command.
pub fn parse_config(text: &str, cli_command: &str) -> CResult<RunConfig> {
    let doc: ConfigDoc = serde_json::from_str(text)
        .map_err(|e| ConfigError(format!("malformed configuration: {e}")))?;
    if let Some(cmd) = &doc.command {
        if cmd != cli_command {
            return Err(ConfigError(format!(
                "configuration says command '{cmd}' but the CLI invoked '{cli_command}'"
            )));
        }
    }
    let quad = match &doc.quadrature {
        Some(qd) => SphereQuadrature::new(
            qd.angular_nodes.unwrap_or(64),
            qd.tolerance.unwrap_or(1e-12),
        )?,
        None => SphereQuadrature::default(),
    };
    let default_weight = || -> CResult<(String, SphericalWeight)> {
        Ok(("const(1)".into(), SphericalWeight::constant(1.0)?))
    };
    let single_weight = |doc: &ConfigDoc| -> CResult<(String, SphericalWeight)> {
        match &doc.weight {
            Some(w) => build_weight(w),
            None => default_weight(),
        }
    };

    let regime = RegimeParams {
        n: doc.n.unwrap_or(0),
        p: doc.p,
        alpha: doc.alpha,
        s: doc.s,
    };

    let command = match cli_command {
        "constant" => {
            let theorem = TheoremId::parse(
                doc.theorem
                    .as_deref()
                    .ok_or_else(|| ConfigError("missing required field 'theorem'".into()))?,
            )?;
            if theorem == TheoremId::Thm12 {
                return Err(ConfigError(
                    "the general-p theorem has no explicit constant; use 'verify'".into(),
                ));
            }
            require(doc.n, "N")?;
            validate_regime(theorem, &regime)?;
            RunCommand::Constant {
                theorem,
                regime,
                weight: single_weight(&doc)?,
            }
        }
        "verify" => {
            let theorem = TheoremId::parse(
                doc.theorem
                    .as_deref()
                    .ok_or_else(|| ConfigError("missing required field 'theorem'".into()))?,
            )?;
            require(doc.n, "N")?;
            validate_regime(theorem, &regime)?;
            let use_catalog = doc.catalog.unwrap_or(false);
            let weights = if use_catalog && doc.weights.is_none() && doc.weight.is_none() {
                catalog::weights()
            } else if let Some(list) = &doc.weights {
                list.iter().map(build_weight).collect::<CResult<Vec<_>>>()?
            } else {
                vec![single_weight(&doc)?]
            };
            let tests = if use_catalog && doc.tests.is_none() && doc.test.is_none() {
                catalog::tests()
            } else if let Some(list) = &doc.tests {
                list.iter().map(build_test).collect::<CResult<Vec<_>>>()?
            } else if let Some(t) = &doc.test {
                vec![build_test(t)?]
            } else {
                return Err(ConfigError(
                    "verify needs 'test', 'tests', or 'catalog': true".into(),
                ))?;
            };
            let bound_scale = doc.bound_scale.unwrap_or(1.0);
            if !(bound_scale.is_finite() && bound_scale > 0.0) {
                return Err(ConfigError(format!(
                    "bound_scale must be positive, got {bound_scale}"
                )));
            }
            RunCommand::Verify {
                theorem,
                regime,
                weights,
                tests,
                empirical_bound: doc.empirical_bound,
                user_q: doc.q,
                bound_scale,
            }
        }
        "sweep" => {
            let theorem_str = doc
                .theorem
                .as_deref()
                .ok_or_else(|| ConfigError("missing required field 'theorem'".into()))?;
            let steps = doc.steps.unwrap_or(8);
            if steps == 0 || steps > 40 {
                return Err(ConfigError(format!(
                    "steps must lie in 1..=40, got {steps}"
                )));
            }
            if theorem_str == "hardy1d" {
                let p = require(doc.p, "p")?;
                let beta = require(doc.beta, "beta")?;
                if p.is_nan() || p <= 1.0 {
                    return Err(ConfigError(format!("p > 1 violated (p = {p})")));
                }
                if beta.is_nan() || beta <= p - 1.0 {
                    return Err(ConfigError(format!(
                        "beta > p - 1 violated (beta = {beta}, p = {p})"
                    )));
                }
                return Ok(RunConfig {
                    command: RunCommand::Sweep {
                        case: SweepCase::Hardy1d { p, beta },
                        weight: default_weight()?,
                        steps,
                    },
                    quad,
                    out_path: doc.output.as_ref().and_then(|o| o.path.clone()),
                    format: parse_format(&doc)?,
                });
            }
            let theorem = TheoremId::parse(theorem_str)?;
            let case = match theorem {
                TheoremId::Ckn => SweepCase::Ckn {
                    regime: Regime::new(
                        require(doc.n, "N")?,
                        require(doc.p, "p")?,
                        require(doc.alpha, "alpha")?,
                    )?,
                },
                TheoremId::Thm13Case1 => SweepCase::Thm13 {
                    n: require(doc.n, "N")?,
                    alpha: require(doc.alpha, "alpha")?,
                    which: CaseId::Case1,
                },
                TheoremId::Thm13Case2 => SweepCase::Thm13 {
                    n: require(doc.n, "N")?,
                    alpha: require(doc.alpha, "alpha")?,
                    which: CaseId::Case2,
                },
                TheoremId::Thm13Case3 => SweepCase::Thm13 {
                    n: require(doc.n, "N")?,
                    alpha: require(doc.alpha, "alpha")?,
                    which: CaseId::Case3,
                },
                TheoremId::Thm31 => SweepCase::Thm31 {
                    regime: Regime::new(
                        require(doc.n, "N")?,
                        require(doc.p, "p")?,
                        require(doc.alpha, "alpha")?,
                    )?,
                },
                TheoremId::Thm14 => SweepCase::Frac {
                    frac: FracRegime::new(
                        require(doc.n, "N")?,
                        require(doc.s, "s")?,
                        require(doc.p, "p")?,
                    )?,
                    lambda: None,
                },
                TheoremId::Thm12 => {
                    // 1-D Hardy sweep rides under thm12's machinery hook
                    return Err(ConfigError(
                        "sweep supports ckn, thm13-case*, thm31, thm14, or hardy1d (set \
                         theorem = 'hardy1d' with p and beta)"
                            .into(),
                    ));
                }
            };
            RunCommand::Sweep {
                case,
                weight: single_weight(&doc)?,
                steps,
            }
        }
        "lambda" => RunCommand::Lambda {
            frac: FracRegime::new(
                require(doc.n, "N")?,
                require(doc.s, "s")?,
                require(doc.p, "p")?,
            )?,
        },
        "rearrange" => {
            let n = require(doc.n, "N")?;
            let degree = require(doc.degree, "degree")?;
            let weight = single_weight(&doc)?;
            let levels = doc.levels.clone().unwrap_or_else(|| vec![0.5, 1.0, 2.0]);
            if levels.is_empty() || levels.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
                return Err(ConfigError("levels must be positive".into()));
            }
            let mc_samples = if doc.mc_check.unwrap_or(false) {
                Some(doc.mc_samples.unwrap_or(200_000))
            } else {
                None
            };
            RunCommand::Rearrange {
                n,
                degree,
                weight,
                levels,
                mc_samples,
            }
        }
        other => return Err(ConfigError(format!("unknown command '{other}'"))),
    };

    let format = parse_format(&doc)?;
    Ok(RunConfig {
        command,
        quad,
        out_path: doc.output.as_ref().and_then(|o| o.path.clone()),
        format,
    })
}

fn parse_format(doc: &ConfigDoc) -> CResult<OutputFormat> {
    match doc
        .output
        .as_ref()
        .and_then(|o| o.format.as_deref())
        .unwrap_or("csv")
    {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(ConfigError(format!(
            "unknown output format '{other}' (expected csv or json)"
        ))),
    }
}


/// Build the verification `CaseSpec` for a theorem selector.
pub fn case_spec_for(
    theorem: TheoremId,
    regime: &RegimeParams,
    user_q: Option<f64>,
    empirical_bound: Option<f64>,
) -> CResult<Option<CaseSpec>> {
    Ok(match theorem {
        TheoremId::Thm12 => Some(CaseSpec::Thm12 {
            regime: Regime::new(
                regime.n,
                require(regime.p, "p")?,
                require(regime.alpha, "alpha")?,
            )?,
            user_q,
            empirical_bound,
        }),
        TheoremId::Thm13Case1 => Some(CaseSpec::Thm13 {
            n: regime.n,
            alpha: require(regime.alpha, "alpha")?,
            which: CaseId::Case1,
        }),
        TheoremId::Thm13Case2 => Some(CaseSpec::Thm13 {
            n: regime.n,
            alpha: require(regime.alpha, "alpha")?,
            which: CaseId::Case2,
        }),
        TheoremId::Thm13Case3 => Some(CaseSpec::Thm13 {
            n: regime.n,
            alpha: require(regime.alpha, "alpha")?,
            which: CaseId::Case3,
        }),
        TheoremId::Thm31 | TheoremId::Ckn => Some(CaseSpec::Thm31 {
            regime: Regime::new(
                regime.n,
                require(regime.p, "p")?,
                require(regime.alpha, "alpha")?,
            )?,
        }),
        TheoremId::Thm14 => Some(CaseSpec::Thm14 {
            frac: FracRegime::new(
                regime.n,
                require(regime.s, "s")?,
                require(regime.p, "p")?,
            )?,
            lambda: None,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_constant_example() {
        let cfg = parse_config(
            r#"{"command":"constant","theorem":"ckn","N":5,"p":2,"alpha":0}"#,
            "constant",
        )
        .unwrap();
        match cfg.command {
            RunCommand::Constant { theorem, regime, .. } => {
                assert_eq!(theorem, TheoremId::Ckn);
                assert_eq!(regime.n, 5);
                assert_eq!(regime.p, Some(2.0));
            }
            _ => panic!("wrong command"),
        }
        assert_eq!(cfg.format, OutputFormat::Csv);
    }

    #[test]
    fn parses_lambda_example() {
        let cfg = parse_config(r#"{"command":"lambda","N":3,"s":0.5,"p":2}"#, "lambda").unwrap();
        match cfg.command {
            RunCommand::Lambda { frac } => {
                assert_eq!(frac.n(), 3);
                assert_eq!(frac.s(), 0.5);
            }
            _ => panic!("wrong command"),
        }
    }

    #[test]
    fn rejects_inadmissible_regime_with_named_condition() {
        let err = parse_config(
            r#"{"command":"constant","theorem":"ckn","N":3,"p":3,"alpha":1}"#,
            "constant",
        )
        .unwrap_err();
        assert!(err.0.contains("N > p + alpha violated"), "{}", err.0);
    }

    #[test]
    fn rejects_unknown_weight_kind_and_missing_fields() {
        let err = parse_config(
            r#"{"command":"verify","theorem":"thm31","N":5,"p":2,"alpha":0,
                "weight":{"kind":"mystery"},"catalog":true}"#,
            "verify",
        )
        .unwrap_err();
        assert!(err.0.contains("malformed configuration"), "{}", err.0);
        let err = parse_config(r#"{"command":"lambda","s":0.5,"p":2}"#, "lambda").unwrap_err();
        assert!(err.0.contains("missing required field 'N'"), "{}", err.0);
        let err = parse_config(
            r#"{"command":"verify","theorem":"thm31","N":5,"p":2,"alpha":0}"#,
            "verify",
        )
        .unwrap_err();
        assert!(err.0.contains("verify needs"), "{}", err.0);
    }

    #[test]
    fn rejects_command_mismatch_and_unknown_theorem() {
        let err = parse_config(
            r#"{"command":"constant","theorem":"ckn","N":5,"p":2,"alpha":0}"#,
            "sweep",
        )
        .unwrap_err();
        assert!(err.0.contains("invoked"), "{}", err.0);
        let err = parse_config(
            r#"{"command":"constant","theorem":"thmX","N":5,"p":2,"alpha":0}"#,
            "constant",
        )
        .unwrap_err();
        assert!(err.0.contains("unknown theorem"), "{}", err.0);
    }

    #[test]
    fn thm13_case_gates_checked_at_parse_time() {
        // case3 needs 2N*alpha >= (N-alpha-2)^2
        let err = parse_config(
            r#"{"command":"verify","theorem":"thm13-case3","N":5,"alpha":0,"catalog":true}"#,
            "verify",
        )
        .unwrap_err();
        assert!(err.0.contains("case3"), "{}", err.0);
        // case2 needs N > 3
        let err = parse_config(
            r#"{"command":"verify","theorem":"thm13-case2","N":3,"alpha":0,"catalog":true}"#,
            "verify",
        )
        .unwrap_err();
        assert!(err.0.contains("dimension-too-small"), "{}", err.0);
    }

    #[test]
    fn hardy1d_sweep_parses() {
        let cfg = parse_config(
            r#"{"command":"sweep","theorem":"hardy1d","p":2,"beta":2,"steps":10}"#,
            "sweep",
        )
        .unwrap();
        match cfg.command {
            RunCommand::Sweep { case: SweepCase::Hardy1d { p, beta }, steps, .. } => {
                assert_eq!((p, beta, steps), (2.0, 2.0, 10));
            }
            _ => panic!("wrong command"),
        }
        let err = parse_config(
            r#"{"command":"sweep","theorem":"hardy1d","p":2,"beta":0.5}"#,
            "sweep",
        )
        .unwrap_err();
        assert!(err.0.contains("beta > p - 1 violated"), "{}", err.0);
    }
}
