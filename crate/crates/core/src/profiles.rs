//! Separated test functions u(r, θ) = f(r) h(φ): compactly supported
//! radial profiles and bounded zonal angular factors.
//!
//! Profiles are continuous and piecewise differentiable; each kind knows
//! its support radius, its kink locations (quadrature panels split there),
//! a derivative bound on any interval (used by the seminorm's diagonal
//! remainder estimate), and how to dilate itself exactly.

use crate::error::{Error, Result};

/// Cubic smoothstep on [0, 1]: S(0) = 0, S(1) = 1, S' bounded by 3/2.
fn smoothstep(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if x >= 1.0 {
        1.0
    } else {
        x * x * (3.0 - 2.0 * x)
    }
}

fn smoothstep_deriv(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        0.0
    } else {
        6.0 * x * (1.0 - x)
    }
}

/// Compactly supported radial profile f(r).
#[derive(Debug, Clone, PartialEq)]
pub enum RadialProfile {
    /// f(r) = max(0, 1 - r/R).
    Tent { radius: f64 },
    /// Plateau 1 on [0, inner], power (r/inner)^exponent on [inner, outer],
    /// then a smoothstep ramp to zero over [outer, outer + ramp].
    TruncatedPower {
        exponent: f64,
        inner: f64,
        outer: f64,
        ramp: f64,
    },
    /// f(r) = max(0, e^{-r/scale} - e^{-cutoff/scale}).
    ExpBump { scale: f64, cutoff: f64 },
    /// Log-spaced table with linear interpolation; constant value below the
    /// first node, zero beyond the last. The final value must vanish so the
    /// profile is continuous with compact support.
    Sampled { radii: Vec<f64>, values: Vec<f64> },
}

impl RadialProfile {
    pub fn tent(radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidInput(format!(
                "tent radius must be positive, got {radius}"
            )));
        }
        Ok(RadialProfile::Tent { radius })
    }

    pub fn truncated_power(exponent: f64, inner: f64, outer: f64, ramp: f64) -> Result<Self> {
        if !(exponent.is_finite() && inner.is_finite() && outer.is_finite() && ramp.is_finite()) {
            return Err(Error::InvalidInput("non-finite profile parameter".into()));
        }
        if !(inner > 0.0 && outer > inner && ramp > 0.0) {
            return Err(Error::InvalidInput(format!(
                "need 0 < inner < outer and ramp > 0, got inner = {inner}, outer = {outer}, \
                 ramp = {ramp}"
            )));
        }
        Ok(RadialProfile::TruncatedPower {
            exponent,
            inner,
            outer,
            ramp,
        })
    }

    pub fn exp_bump(scale: f64, cutoff: f64) -> Result<Self> {
        if !(scale > 0.0 && cutoff > 0.0 && scale.is_finite() && cutoff.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "exp bump needs positive scale and cutoff, got {scale}, {cutoff}"
            )));
        }
        Ok(RadialProfile::ExpBump { scale, cutoff })
    }

    pub fn sampled(radii: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if radii.len() != values.len() || radii.len() < 2 {
            return Err(Error::InvalidInput(
                "sampled profile needs matching tables with >= 2 entries".into(),
            ));
        }
        if !(radii[0] > 0.0 && radii.windows(2).all(|w| w[1] > w[0])) {
            return Err(Error::InvalidInput(
                "sampled profile radii must be positive and strictly increasing".into(),
            ));
        }
        if !values.iter().all(|v| v.is_finite()) || !radii.iter().all(|r| r.is_finite()) {
            return Err(Error::InvalidInput("sampled profile entries must be finite".into()));
        }
        if values[values.len() - 1] != 0.0 {
            return Err(Error::SupportRequired(
                "sampled profile must end at value 0 to be compactly supported".into(),
            ));
        }
        Ok(RadialProfile::Sampled { radii, values })
    }

    /// Parse a single-column CSV of values on a log-spaced grid over
    /// [r_min, r_max], or a two-column (radius, value) CSV.
    pub fn sampled_from_csv(text: &str) -> Result<Self> {
        let mut radii = Vec::new();
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            let parse = |s: &str| -> Result<f64> {
                s.parse::<f64>()
                    .map_err(|e| Error::InvalidInput(format!("csv line {}: {e}", lineno + 1)))
            };
            match cols.len() {
                2 => {
                    radii.push(parse(cols[0])?);
                    values.push(parse(cols[1])?);
                }
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "csv line {}: expected 'radius,value'",
                        lineno + 1
                    )))
                }
            }
        }
        RadialProfile::sampled(radii, values)
    }

    /// f(r).
    pub fn eval(&self, r: f64) -> f64 {
        if r < 0.0 {
            return self.eval(0.0);
        }
        match self {
            RadialProfile::Tent { radius } => (1.0 - r / radius).max(0.0),
            RadialProfile::TruncatedPower {
                exponent,
                inner,
                outer,
                ramp,
            } => {
                if r <= *inner {
                    1.0
                } else if r <= *outer {
                    (r / inner).powf(*exponent)
                } else if r < outer + ramp {
                    (outer / inner).powf(*exponent) * smoothstep((outer + ramp - r) / ramp)
                } else {
                    0.0
                }
            }
            RadialProfile::ExpBump { scale, cutoff } => {
                if r >= *cutoff {
                    0.0
                } else {
                    (-r / scale).exp() - (-cutoff / scale).exp()
                }
            }
            RadialProfile::Sampled { radii, values } => {
                if r <= radii[0] {
                    return values[0];
                }
                let last = radii.len() - 1;
                if r >= radii[last] {
                    return 0.0;
                }
                let idx = radii.partition_point(|&x| x <= r) - 1;
                let (r0, r1) = (radii[idx], radii[idx + 1]);
                let t = (r - r0) / (r1 - r0);
                values[idx] * (1.0 - t) + values[idx + 1] * t
            }
        }
    }

    /// f'(r) wherever it is defined (the value at a kink is immaterial to
    /// the quadratures, whose nodes avoid panel edges).
    pub fn deriv(&self, r: f64) -> f64 {
        if r < 0.0 {
            return 0.0;
        }
        match self {
            RadialProfile::Tent { radius } => {
                if r < *radius {
                    -1.0 / radius
                } else {
                    0.0
                }
            }
            RadialProfile::TruncatedPower {
                exponent,
                inner,
                outer,
                ramp,
            } => {
                if r <= *inner {
                    0.0
                } else if r <= *outer {
                    exponent / inner * (r / inner).powf(exponent - 1.0)
                } else if r < outer + ramp {
                    -(outer / inner).powf(*exponent) * smoothstep_deriv((outer + ramp - r) / ramp)
                        / ramp
                } else {
                    0.0
                }
            }
            RadialProfile::ExpBump { scale, cutoff } => {
                if r < *cutoff {
                    -(-r / scale).exp() / scale
                } else {
                    0.0
                }
            }
            RadialProfile::Sampled { radii, values } => {
                if r <= radii[0] || r >= radii[radii.len() - 1] {
                    return 0.0;
                }
                let idx = radii.partition_point(|&x| x <= r) - 1;
                (values[idx + 1] - values[idx]) / (radii[idx + 1] - radii[idx])
            }
        }
    }

    /// Radius beyond which the profile vanishes identically.
    pub fn support_radius(&self) -> f64 {
        match self {
            RadialProfile::Tent { radius } => *radius,
            RadialProfile::TruncatedPower { outer, ramp, .. } => outer + ramp,
            RadialProfile::ExpBump { cutoff, .. } => *cutoff,
            RadialProfile::Sampled { radii, .. } => radii[radii.len() - 1],
        }
    }

    /// Radii where f or f' is non-smooth; radial quadrature panels split here.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            RadialProfile::Tent { radius } => vec![*radius],
            RadialProfile::TruncatedPower {
                inner,
                outer,
                ramp,
                ..
            } => vec![*inner, *outer, outer + ramp],
            RadialProfile::ExpBump { cutoff, .. } => vec![*cutoff],
            RadialProfile::Sampled { radii, .. } => radii.clone(),
        }
    }

    /// sup |f'| over [a, b] (intersected with the support).
    pub fn deriv_bound(&self, a: f64, b: f64) -> f64 {
        let a = a.max(0.0);
        if b <= a {
            return 0.0;
        }
        match self {
            RadialProfile::Tent { radius } => {
                if a < *radius {
                    1.0 / radius
                } else {
                    0.0
                }
            }
            RadialProfile::TruncatedPower {
                exponent,
                inner,
                outer,
                ramp,
            } => {
                let mut bound: f64 = 0.0;
                // power piece: |a|/inner (r/inner)^{a-1} is monotone in r
                let lo = a.max(*inner);
                let hi = b.min(*outer);
                if lo < hi {
                    let at = |r: f64| (exponent / inner * (r / inner).powf(exponent - 1.0)).abs();
                    bound = bound.max(at(lo)).max(at(hi));
                }
                // ramp piece: peak slope 1.5 f(outer) / ramp at the midpoint
                let rlo = a.max(*outer);
                let rhi = b.min(outer + ramp);
                if rlo < rhi {
                    let peak = (outer / inner).powf(*exponent) * 1.5 / ramp;
                    let sd = |r: f64| smoothstep_deriv((outer + ramp - r) / ramp);
                    let mid = outer + 0.5 * ramp;
                    let local = if rlo <= mid && mid <= rhi {
                        1.5
                    } else {
                        sd(rlo).max(sd(rhi))
                    };
                    bound = bound.max(peak * local / 1.5);
                }
                bound
            }
            RadialProfile::ExpBump { scale, cutoff } => {
                if a < *cutoff {
                    (-a / scale).exp() / scale
                } else {
                    0.0
                }
            }
            RadialProfile::Sampled { radii, values } => {
                let mut bound: f64 = 0.0;
                for i in 0..radii.len() - 1 {
                    if radii[i + 1] > a && radii[i] < b {
                        bound = bound
                            .max(((values[i + 1] - values[i]) / (radii[i + 1] - radii[i])).abs());
                    }
                }
                bound
            }
        }
    }

    /// Exact dilation: returns the profile of r ↦ f(λ r).
    pub fn dilate(&self, lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidInput(format!(
                "dilation factor must be positive, got {lambda}"
            )));
        }
        Ok(match self {
            RadialProfile::Tent { radius } => RadialProfile::Tent {
                radius: radius / lambda,
            },
            RadialProfile::TruncatedPower {
                exponent,
                inner,
                outer,
                ramp,
            } => RadialProfile::TruncatedPower {
                exponent: *exponent,
                inner: inner / lambda,
                outer: outer / lambda,
                ramp: ramp / lambda,
            },
            RadialProfile::ExpBump { scale, cutoff } => RadialProfile::ExpBump {
                scale: scale / lambda,
                cutoff: cutoff / lambda,
            },
            RadialProfile::Sampled { radii, values } => RadialProfile::Sampled {
                radii: radii.iter().map(|r| r / lambda).collect(),
                values: values.clone(),
            },
        })
    }

    /// Radius below which the profile vanishes identically (nonzero only
    /// for tables with leading zeros).
    pub fn vanish_radius(&self) -> f64 {
        if let RadialProfile::Sampled { radii, values } = self {
            let mut lo = 0.0;
            for (r, v) in radii.iter().zip(values) {
                if *v != 0.0 {
                    break;
                }
                lo = *r;
            }
            if values.first() == Some(&0.0) {
                return lo;
            }
        }
        0.0
    }

    pub fn describe(&self) -> String {
        match self {
            RadialProfile::Tent { radius } => format!("tent({radius})"),
            RadialProfile::TruncatedPower {
                exponent,
                inner,
                outer,
                ramp,
            } => format!("power({exponent:.4};{inner:.3e},{outer:.3e},{ramp:.3e})"),
            RadialProfile::ExpBump { scale, cutoff } => format!("expbump({scale},{cutoff})"),
            RadialProfile::Sampled { radii, .. } => format!("sampled({} pts)", radii.len()),
        }
    }
}

/// Quadrature panels covering [lo, hi] for integrands built from the
/// profile: split at its breakpoints, log-uniform when the profile is a
/// dense table and `align_all` is off; a leading segment at 0 is graded
/// dyadically, and `toward_hi` grades the final approach to `hi` the same
/// way (for integrands with a corner there). The construction is
/// scale-covariant: dilating the profile dilates the panels exactly.
///
/// `align_all` forces an edge at every breakpoint regardless of count;
/// integrands carrying f or f' directly need this (piecewise data makes
/// them non-smooth at every table node), whereas integrals of smoothed
/// quantities of f can use the cheaper capped mesh.
pub(crate) fn quadrature_panels(
    f: &RadialProfile,
    lo: f64,
    hi: f64,
    toward_hi: bool,
    align_all: bool,
) -> Vec<(f64, f64)> {
    use crate::quad::dyadic_panels;
    let mut edges: Vec<f64> = Vec::new();
    let breakpoints = f.breakpoints();
    if align_all || breakpoints.len() <= 32 {
        edges.push(lo);
        for b in breakpoints {
            if b > lo && b < hi {
                edges.push(b);
            }
        }
        edges.push(hi);
    } else {
        // dense table: log-uniform edges, 16 per decade
        let lo_eff = if lo > 0.0 { lo } else { hi * 1e-14 };
        let decades = (hi / lo_eff).log10();
        let count = ((decades * 16.0).ceil() as usize).max(4);
        edges.push(lo);
        for i in 0..=count {
            let r = lo_eff * (hi / lo_eff).powf(i as f64 / count as f64);
            if r > lo && r < hi {
                edges.push(r);
            }
        }
        edges.push(hi);
    }
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    edges.dedup();
    let mut panels = Vec::new();
    for w in edges.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            continue;
        }
        if a == 0.0 {
            panels.extend(dyadic_panels(b, b * 2.0f64.powi(-48)));
        } else if b / a > 4.0 {
            let count = (b / a).log2().ceil() as usize;
            for i in 0..count {
                let lo_i = a * (b / a).powf(i as f64 / count as f64);
                let hi_i = a * (b / a).powf((i + 1) as f64 / count as f64);
                panels.push((lo_i, hi_i));
            }
        } else {
            panels.push((a, b));
        }
    }
    if toward_hi {
        if let Some(&(a, b)) = panels.last() {
            if b == hi {
                panels.pop();
                let width = hi - a;
                if width > 0.0 {
                    let mut sub: Vec<(f64, f64)> = dyadic_panels(width, width * 2.0f64.powi(-42))
                        .into_iter()
                        .map(|(x, y)| (hi - y, hi - x))
                        .collect();
                    sub.reverse();
                    panels.extend(sub);
                }
            }
        }
    }
    panels
}

/// Bounded zonal angular factor h(φ) with bounded derivative.
#[derive(Debug, Clone, PartialEq)]
pub enum AngularFactor {
    /// h ≡ 1 (radial test function).
    One,
    /// h(φ) = cos φ.
    Cos,
    /// 1 inside the cap, smoothstep down to 0 at φ0 over a ramp of the
    /// given angular width.
    CapSmooth { phi0: f64, ramp: f64 },
}

impl AngularFactor {
    pub fn cap_smooth(phi0: f64, ramp: f64) -> Result<Self> {
        if !(ramp > 0.0 && ramp <= phi0 && phi0 <= std::f64::consts::PI) {
            return Err(Error::InvalidInput(format!(
                "cap factor needs 0 < ramp <= phi0 <= pi, got phi0 = {phi0}, ramp = {ramp}"
            )));
        }
        Ok(AngularFactor::CapSmooth { phi0, ramp })
    }

    pub fn eval(&self, phi: f64) -> f64 {
        match self {
            AngularFactor::One => 1.0,
            AngularFactor::Cos => phi.cos(),
            AngularFactor::CapSmooth { phi0, ramp } => smoothstep((phi0 - phi) / ramp),
        }
    }

    pub fn deriv(&self, phi: f64) -> f64 {
        match self {
            AngularFactor::One => 0.0,
            AngularFactor::Cos => -phi.sin(),
            AngularFactor::CapSmooth { phi0, ramp } => {
                -smoothstep_deriv((phi0 - phi) / ramp) / ramp
            }
        }
    }

    /// Split points for |h|^p integrands (the |cos| crease sits at π/2).
    pub fn kinks(&self) -> Vec<f64> {
        match self {
            AngularFactor::One => vec![],
            AngularFactor::Cos => vec![std::f64::consts::FRAC_PI_2],
            AngularFactor::CapSmooth { phi0, ramp } => vec![phi0 - ramp, *phi0],
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, AngularFactor::One)
    }

    pub fn describe(&self) -> String {
        match self {
            AngularFactor::One => "one".into(),
            AngularFactor::Cos => "cos".into(),
            AngularFactor::CapSmooth { phi0, ramp } => format!("capsmooth({phi0:.4},{ramp:.4})"),
        }
    }
}

/// Separated test function u(r, θ) = f(r) h(φ).
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    pub radial: RadialProfile,
    pub angular: AngularFactor,
}

impl TestFunction {
    pub fn new(radial: RadialProfile, angular: AngularFactor) -> Self {
        TestFunction { radial, angular }
    }

    pub fn radial_only(radial: RadialProfile) -> Self {
        TestFunction {
            radial,
            angular: AngularFactor::One,
        }
    }

    pub fn describe(&self) -> String {
        format!("{}*{}", self.radial.describe(), self.angular.describe())
    }
}
