//! Zonal angular weights on the unit sphere S^{N-1}.
//!
//! A zonal function depends only on the polar angle `phi` measured from a
//! fixed pole, so every sphere integral reduces to one dimension:
//!
//! ```text
//! ∫_{S^{N-1}} g dθ = |S^{N-2}| ∫_0^π g(φ) sin^{N-2}(φ) dφ,   N ≥ 2,
//! ```
//!
//! with |S^0| = 2 making the same formula valid at N = 2 (the weight is
//! understood as even in the angle there). Integration runs in the angle
//! variable — the integrand `g(φ) sin^{N-2}φ` is analytic in φ whenever
//! `g` is, for every N — with adaptive panels pre-split at the weight's
//! kink locations (cap boundaries, the |cos|^k crease at π/2, table nodes).

use crate::error::{Error, Result};
use crate::quad::adaptive_gk;

use std::f64::consts::PI;

/// Catalog of zonal weights `g` on S^{N-1}.
#[derive(Debug, Clone, PartialEq)]
pub enum SphericalWeight {
    /// g ≡ c with c ≥ 0.
    Constant(f64),
    /// Indicator of the polar cap {φ < φ0}, φ0 ∈ (0, π].
    CapIndicator { phi0: f64 },
    /// g(φ) = |cos φ|^k with k ≥ 0.
    ZonalPower { k: f64 },
    /// Table of (φ_i, g_i) on a strictly increasing grid covering [0, π],
    /// linearly interpolated. Values may be signed.
    SampledZonal { angles: Vec<f64>, values: Vec<f64> },
}

impl SphericalWeight {
    pub fn constant(c: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "constant weight must be finite and >= 0, got {c}"
            )));
        }
        Ok(SphericalWeight::Constant(c))
    }

    pub fn cap(phi0: f64) -> Result<Self> {
        if !(phi0 > 0.0 && phi0 <= PI) {
            return Err(Error::InvalidInput(format!(
                "cap boundary must lie in (0, pi], got {phi0}"
            )));
        }
        Ok(SphericalWeight::CapIndicator { phi0 })
    }

    pub fn zonal_power(k: f64) -> Result<Self> {
        if !(k.is_finite() && k >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "zonal power exponent must be finite and >= 0, got {k}"
            )));
        }
        Ok(SphericalWeight::ZonalPower { k })
    }

    /// Build a sampled zonal weight, validating the grid.
    pub fn sampled(angles: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if angles.len() != values.len() || angles.len() < 2 {
            return Err(Error::InvalidInput(
                "sampled weight needs matching angle/value tables with >= 2 entries".into(),
            ));
        }
        if !angles.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::InvalidInput(
                "sampled weight angles must be strictly increasing".into(),
            ));
        }
        let eps = 1e-9;
        if angles[0] > eps || (angles[angles.len() - 1] - PI).abs() > eps {
            return Err(Error::InvalidInput(
                "sampled weight grid must cover [0, pi]".into(),
            ));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput(
                "sampled weight values must be finite".into(),
            ));
        }
        Ok(SphericalWeight::SampledZonal { angles, values })
    }

    /// Parse a two-column CSV (angle radians, value). Lines starting with
    /// '#' and blank lines are skipped.
    pub fn sampled_from_csv(text: &str) -> Result<Self> {
        let mut angles = Vec::new();
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split(',');
            let parse = |s: Option<&str>| -> Result<f64> {
                s.ok_or_else(|| {
                    Error::InvalidInput(format!("csv line {}: missing column", lineno + 1))
                })?
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidInput(format!("csv line {}: {e}", lineno + 1)))
            };
            angles.push(parse(parts.next())?);
            values.push(parse(parts.next())?);
        }
        SphericalWeight::sampled(angles, values)
    }

    /// Evaluate the weight at polar angle `phi` in [0, π].
    pub fn eval(&self, phi: f64) -> f64 {
        match self {
            SphericalWeight::Constant(c) => *c,
            SphericalWeight::CapIndicator { phi0 } => {
                if phi < *phi0 {
                    1.0
                } else {
                    0.0
                }
            }
            SphericalWeight::ZonalPower { k } => {
                if *k == 0.0 {
                    1.0
                } else {
                    phi.cos().abs().powf(*k)
                }
            }
            SphericalWeight::SampledZonal { angles, values } => {
                if phi <= angles[0] {
                    return values[0];
                }
                if phi >= angles[angles.len() - 1] {
                    return values[values.len() - 1];
                }
                let idx = angles.partition_point(|&a| a <= phi) - 1;
                let (a0, a1) = (angles[idx], angles[idx + 1]);
                let t = (phi - a0) / (a1 - a0);
                values[idx] * (1.0 - t) + values[idx + 1] * t
            }
        }
    }

    /// Angles where the weight is not smooth; quadrature panels split here.
    pub fn kinks(&self) -> Vec<f64> {
        match self {
            SphericalWeight::Constant(_) => vec![],
            SphericalWeight::CapIndicator { phi0 } => vec![*phi0],
            SphericalWeight::ZonalPower { k } => {
                if *k == 0.0 {
                    vec![]
                } else {
                    vec![PI / 2.0]
                }
            }
            SphericalWeight::SampledZonal { angles, .. } => {
                angles[1..angles.len() - 1].to_vec()
            }
        }
    }

    /// Whether the weight is nonnegative everywhere.
    pub fn is_nonneg(&self) -> bool {
        match self {
            SphericalWeight::Constant(c) => *c >= 0.0,
            SphericalWeight::CapIndicator { .. } | SphericalWeight::ZonalPower { .. } => true,
            SphericalWeight::SampledZonal { values, .. } => values.iter().all(|&v| v >= 0.0),
        }
    }

    /// Short human-readable tag used in report rows.
    pub fn describe(&self) -> String {
        match self {
            SphericalWeight::Constant(c) => format!("const({c})"),
            SphericalWeight::CapIndicator { phi0 } => format!("cap({phi0:.6})"),
            SphericalWeight::ZonalPower { k } => format!("|cos|^{k}"),
            SphericalWeight::SampledZonal { angles, .. } => {
                format!("sampled({} pts)", angles.len())
            }
        }
    }
}

/// Parameters for the adaptive angular quadrature.
#[derive(Debug, Clone, Copy)]
pub struct SphereQuadrature {
    /// Initial Gauss-type node budget in the polar angle (>= 8).
    pub angular_nodes: usize,
    /// Relative tolerance target for adaptive refinement.
    pub tolerance: f64,
}

impl SphereQuadrature {
    pub fn new(angular_nodes: usize, tolerance: f64) -> Result<Self> {
        if angular_nodes < 8 {
            return Err(Error::InvalidInput(format!(
                "angular_nodes must be >= 8, got {angular_nodes}"
            )));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }
        Ok(SphereQuadrature {
            angular_nodes,
            tolerance,
        })
    }

    fn max_panels(&self) -> usize {
        (self.angular_nodes * 64).max(2048)
    }
}

impl Default for SphereQuadrature {
    fn default() -> Self {
        SphereQuadrature {
            angular_nodes: 64,
            tolerance: 1e-12,
        }
    }
}

/// Surface measure |S^{N-1}| = 2 π^{N/2} / Γ(N/2), computed by the exact
/// recurrence |S^{N-1}| = 2π/(N-2) |S^{N-3}| from |S^0| = 2, |S^1| = 2π.
pub fn surface_measure(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension N must be >= 1".into()));
    }
    let mut s = if n % 2 == 1 { 2.0 } else { 2.0 * PI };
    let mut k = if n % 2 == 1 { 1u32 } else { 2u32 };
    while k < n {
        k += 2;
        s *= 2.0 * PI / (k as f64 - 2.0);
    }
    Ok(s)
}

/// Integrate an arbitrary zonal function over S^{N-1} (N >= 2):
/// |S^{N-2}| ∫_0^π f(φ) sin^{N-2}φ dφ, with panel splits at `kinks`.
pub fn integrate_zonal_fn<F: FnMut(f64) -> f64>(
    mut f: F,
    n: u32,
    quad: &SphereQuadrature,
    kinks: &[f64],
) -> Result<f64> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(
            "zonal integration needs N >= 2".into(),
        ));
    }
    let equator = surface_measure(n - 1)?;
    let sin_pow = (n as i32 - 2) as f64;
    let out = adaptive_gk(
        |phi: f64| {
            let s = if sin_pow == 0.0 {
                1.0
            } else {
                phi.sin().powf(sin_pow)
            };
            f(phi) * s
        },
        0.0,
        PI,
        kinks,
        quad.tolerance,
        1e-300,
        quad.max_panels(),
    )?;
    Ok(equator * out.value)
}

/// ∫_{S^{N-1}} g dθ for a catalog weight. Constants take the exact path.
pub fn integrate_zonal(g: &SphericalWeight, n: u32, quad: &SphereQuadrature) -> Result<f64> {
    if let SphericalWeight::Constant(c) = g {
        return Ok(c * surface_measure(n)?);
    }
    integrate_zonal_fn(|phi| g.eval(phi), n, quad, &g.kinks())
}

/// L^q norm of a zonal weight: (∫ |g|^q dθ)^{1/q}, q >= 1.
pub fn lq_norm(g: &SphericalWeight, q: f64, n: u32, quad: &SphereQuadrature) -> Result<f64> {
    if !(q >= 1.0 && q.is_finite()) {
        return Err(Error::ExponentOutOfRange(format!(
            "Lebesgue exponent q must satisfy q >= 1, got {q}"
        )));
    }
    if let SphericalWeight::Constant(c) = g {
        return Ok(c * surface_measure(n)?.powf(1.0 / q));
    }
    let integral = integrate_zonal_fn(|phi| g.eval(phi).abs().powf(q), n, quad, &g.kinks())?;
    Ok(integral.powf(1.0 / q))
}

/// The Gagliardo-Nirenberg function μ(β) for the sphere inequality
///
/// ```text
/// ‖∇_θ u‖² + β ‖u‖² ≥ μ(β) |S^{N-1}|^{(t-2)/t} ‖u‖²_{L^t},
/// ```
///
/// equal to β on [0, (N-1)/(t-2)] for subcritical t, and to
/// min{β, (N-1)(N-3)/4} for every β at the critical exponent
/// t = 2(N-1)/(N-3) when N > 3. Outside the interval where the function
/// is pinned down for subcritical t the call refuses rather than guessing.
pub fn mu_gn(beta: f64, n: u32, t: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::DimensionTooSmall("mu needs N >= 2".into()));
    }
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::MuUndefined(format!(
            "beta must be finite and >= 0, got {beta}"
        )));
    }
    if !t.is_finite() || t <= 2.0 {
        return Err(Error::ExponentOutOfRange(format!(
            "t must satisfy t > 2, got {t}"
        )));
    }
    if n > 3 {
        let critical = 2.0 * (n as f64 - 1.0) / (n as f64 - 3.0);
        let rel = (t - critical) / critical;
        if rel > 1e-9 {
            return Err(Error::ExponentOutOfRange(format!(
                "t = {t} exceeds the critical exponent {critical} for N = {n}"
            )));
        }
        if rel.abs() <= 1e-9 {
            return Ok(beta.min((n as f64 - 1.0) * (n as f64 - 3.0) / 4.0));
        }
    }
    let cap = (n as f64 - 1.0) / (t - 2.0);
    if beta <= cap * (1.0 + 1e-12) {
        Ok(beta.min(cap))
    } else {
        Err(Error::MuUndefined(format!(
            "mu is only pinned down on [0, {cap}] for subcritical t = {t}, got beta = {beta}"
        )))
    }
}
