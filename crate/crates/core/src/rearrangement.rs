//! Symmetric decreasing rearrangement: closed forms for homogeneous
//! weights g(x/|x|)/|x|^d and a grid rearrangement for sampled fields.
//!
//! For a nonnegative zonal g and 0 < d < N the superlevel sets of the
//! homogeneous weight have the exact measure
//!
//! ```text
//! |{ y : g(y/|y|) / |y|^d > t }| = t^{-N/d} / N · ∫_{S^{N-1}} g^{N/d} dθ,
//! ```
//!
//! so its symmetric decreasing rearrangement is again of the form
//! A / |x|^d with A = (∫ g^{N/d} dθ)^{d/N} / |S^{N-1}|^{d/N}.

use crate::error::{Error, Result};
use crate::sphere::{integrate_zonal_fn, surface_measure, SphereQuadrature, SphericalWeight};

/// Homogeneous weight g(x/|x|)/|x|^degree with nonnegative angular part.
#[derive(Debug, Clone)]
pub struct HomogeneousWeight {
    pub g: SphericalWeight,
    pub degree: f64,
}

impl HomogeneousWeight {
    pub fn new(g: SphericalWeight, degree: f64) -> Result<Self> {
        if !(degree.is_finite() && degree > 0.0) {
            return Err(Error::InvalidInput(format!(
                "homogeneity degree must be positive, got {degree}"
            )));
        }
        if !g.is_nonneg() {
            return Err(Error::NonnegRequired(
                "rearrangement requires a nonnegative angular weight".into(),
            ));
        }
        Ok(HomogeneousWeight { g, degree })
    }
}

/// ∫_{S^{N-1}} g^{N/d} dθ, shared by both closed forms below.
fn angular_power_integral(w: &HomogeneousWeight, n: u32, quad: &SphereQuadrature) -> Result<f64> {
    let exponent = n as f64 / w.degree;
    if let SphericalWeight::Constant(c) = w.g {
        return Ok(c.powf(exponent) * surface_measure(n)?);
    }
    integrate_zonal_fn(
        |phi| w.g.eval(phi).max(0.0).powf(exponent),
        n,
        quad,
        &w.g.kinks(),
    )
}

/// Lebesgue measure of the superlevel set {g(y/|y|)/|y|^d > t}.
pub fn superlevel_measure(
    w: &HomogeneousWeight,
    t: f64,
    n: u32,
    quad: &SphereQuadrature,
) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidLevel(format!(
            "superlevel threshold must be positive, got {t}"
        )));
    }
    // The superlevel set {|y| < (g/t)^{1/d}} is bounded for every d > 0,
    // so no N > d restriction applies here (unlike the rearranged weight,
    // which needs d < N to be locally integrable).
    let integral = angular_power_integral(w, n, quad)?;
    Ok(t.powf(-(n as f64) / w.degree) / n as f64 * integral)
}

/// Coefficient A of the rearranged weight (g(x/|x|)/|x|^d)^* = A/|x|^d.
pub fn rearranged_coefficient(
    w: &HomogeneousWeight,
    n: u32,
    quad: &SphereQuadrature,
) -> Result<f64> {
    if n as f64 <= w.degree {
        return Err(Error::RegimeViolation(format!(
            "N > degree violated (N = {n}, degree = {})",
            w.degree
        )));
    }
    let integral = angular_power_integral(w, n, quad)?;
    let dn = w.degree / n as f64;
    Ok(integral.powf(dn) / surface_measure(n)?.powf(dn))
}

/// Nonnegative sampled field: a list of cell values with cell measures.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    values: Vec<f64>,
    measures: Vec<f64>,
}

impl SampledField {
    /// Uniform unit cells.
    pub fn uniform(values: Vec<f64>) -> Result<Self> {
        let measures = vec![1.0; values.len()];
        SampledField::with_measures(values, measures)
    }

    pub fn with_measures(values: Vec<f64>, measures: Vec<f64>) -> Result<Self> {
        if values.is_empty() || values.len() != measures.len() {
            return Err(Error::ShapeMismatch(
                "field needs matching nonempty value/measure lists".into(),
            ));
        }
        if !values.iter().all(|v| v.is_finite() && *v >= 0.0) {
            return Err(Error::InvalidInput(
                "field values must be finite and >= 0".into(),
            ));
        }
        if !measures.iter().all(|m| m.is_finite() && *m > 0.0) {
            return Err(Error::InvalidInput("cell measures must be positive".into()));
        }
        Ok(SampledField { values, measures })
    }

    /// Single-column CSV of values (uniform cells).
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            values.push(line.parse::<f64>().map_err(|e| {
                Error::InvalidInput(format!("csv line {}: {e}", lineno + 1))
            })?);
        }
        SampledField::uniform(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn measures(&self) -> &[f64] {
        &self.measures
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Σ v^q · cell over the cells.
    pub fn power_sum(&self, q: f64) -> f64 {
        self.values
            .iter()
            .zip(&self.measures)
            .map(|(v, m)| v.powf(q) * m)
            .sum()
    }

    /// Total measure of cells with value strictly above `t`.
    pub fn superlevel_count(&self, t: f64) -> f64 {
        self.values
            .iter()
            .zip(&self.measures)
            .filter(|(v, _)| **v > t)
            .map(|(_, m)| m)
            .sum()
    }
}

/// Decreasing rearrangement: values sorted non-increasing, cell measures
/// carried along. Equimeasurable with the input by construction.
pub fn decreasing_rearrangement(f: &SampledField) -> SampledField {
    let mut pairs: Vec<(f64, f64)> = f
        .values
        .iter()
        .copied()
        .zip(f.measures.iter().copied())
        .collect();
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    SampledField {
        values: pairs.iter().map(|p| p.0).collect(),
        measures: pairs.iter().map(|p| p.1).collect(),
    }
}

/// Σ u* v* cell − Σ u v cell over a shared cell structure; nonnegative by
/// the Hardy-Littlewood inequality.
///
/// The rearranged product is evaluated on the common measure line: both
/// rearranged step functions are laid out on [0, M) and integrated against
/// each other, which reduces to index pairing when cells are uniform.
pub fn hardy_littlewood_gap(u: &SampledField, v: &SampledField) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::ShapeMismatch(format!(
            "field lengths differ: {} vs {}",
            u.len(),
            v.len()
        )));
    }
    if u.measures
        .iter()
        .zip(&v.measures)
        .any(|(a, b)| (a - b).abs() > 1e-12 * a.abs().max(b.abs()))
    {
        return Err(Error::ShapeMismatch(
            "fields must share the same cell measures".into(),
        ));
    }
    let plain: f64 = u
        .values
        .iter()
        .zip(&v.values)
        .zip(&u.measures)
        .map(|((a, b), m)| a * b * m)
        .sum();

    let us = decreasing_rearrangement(u);
    let vs = decreasing_rearrangement(v);
    // Sweep the merged breakpoints of the two step functions on [0, M).
    let mut rearranged = 0.0;
    let (mut iu, mut iv) = (0usize, 0usize);
    let (mut ru, mut rv) = (us.measures[0], vs.measures[0]);
    while iu < us.len() && iv < vs.len() {
        let step = ru.min(rv);
        rearranged += us.values[iu] * vs.values[iv] * step;
        ru -= step;
        rv -= step;
        if ru <= 0.0 {
            iu += 1;
            if iu < us.len() {
                ru = us.measures[iu];
            }
        }
        if rv <= 0.0 {
            iv += 1;
            if iv < vs.len() {
                rv = vs.measures[iv];
            }
        }
    }
    Ok(rearranged - plain)
}
