//! The zonal kernel Ψ_{N,s,p}, the sharp fractional constant Λ_{N,s,p},
//! and Gagliardo seminorms of radial functions.
//!
//! Definitions:
//!
//! ```text
//! Ψ_{N,s,p}(r) = |S^{N-2}| ∫_{-1}^{1} (1-t²)^{(N-3)/2} (1-2rt+r²)^{-(N+sp)/2} dt   (N ≥ 2)
//! Ψ_{1,s,p}(r) = (1-r)^{-(1+sp)} + (1+r)^{-(1+sp)}
//! Λ_{N,s,p}^{-1} = 2 ∫_0^1 r^{sp-1} |1 - r^{(N-sp)/p}|^p Ψ_{N,s,p}(r) dr
//! ```
//!
//! With t = cos θ the kernel integral becomes
//! |S^{N-2}| ∫_0^π sin^{N-2}θ (u² + 4r sin²(θ/2))^{-(N+sp)/2} dθ, u = 1-r,
//! which is smooth in θ for every N ≥ 2; the r → 1 peak of width u is
//! resolved by panels graded geometrically away from θ = 0. All nearly
//! singular quantities are computed from the exact complement u.
//!
//! For radial u(x) = f(|x|) the double integral collapses to ratio
//! coordinates w = ρ/r:
//!
//! ```text
//! [u]^p = 2|S^{N-1}| [ ∫_0^R r^{N-1-sp} J(r) dr + ∫_0^R |f(y)|^p y^{N-1-sp} T(y/R) dy ],
//! J(r) = ∫_0^1 |f(r)-f(rw)|^p w^{N-1} Ψ(w) dw,
//! T(a) = ∫_0^a w^{sp-1} Ψ(w) dw,
//! ```
//!
//! where R is the support radius: the first term covers pairs with the
//! larger radius inside the support, the second the tail where only the
//! smaller one is. The diagonal band {w > 1-δ} is excluded from the
//! quadrature and bounded through |f(r)-f(ρ)| ≤ Lip·|r-ρ|, with δ halved
//! until the bound drops below a tenth of the target tolerance.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::profiles::RadialProfile;
use crate::quad::{dyadic_panels, tanh_sinh_unit, GaussRule};
use crate::regimes::FracRegime;
use crate::sphere::{integrate_zonal, surface_measure, SphereQuadrature, SphericalWeight};

use std::f64::consts::PI;

/// One evaluation of the kernel Ψ.
#[derive(Debug, Clone, Copy)]
pub struct PsiEval {
    pub frac: FracRegime,
    pub r: f64,
    pub value: f64,
}

/// Ψ_{N,s,p}(r) for 0 ≤ r < 1.
pub fn psi(frac: &FracRegime, r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        if r >= 1.0 {
            return Err(Error::KernelSingularity(format!(
                "psi diverges as r -> 1 (got r = {r})"
            )));
        }
        return Err(Error::InvalidInput(format!("psi needs r in [0,1), got {r}")));
    }
    Ok(psi_with_complement(
        frac.n(),
        frac.sp(),
        r,
        1.0 - r,
        DEFAULT_PSI_ORDER,
    ))
}

/// Ψ packaged with its regime and argument.
pub fn psi_eval(frac: &FracRegime, r: f64) -> Result<PsiEval> {
    Ok(PsiEval {
        frac: *frac,
        r,
        value: psi(frac, r)?,
    })
}

const DEFAULT_PSI_ORDER: usize = 24;

/// Kernel evaluation taking the complement u = 1 - r explicitly so deep
/// near-singular arguments keep full precision.
pub(crate) fn psi_with_complement(n: u32, sp: f64, r: f64, u: f64, order: usize) -> f64 {
    debug_assert!(u > 0.0);
    if n == 1 {
        return u.powf(-(1.0 + sp)) + (1.0 + r).powf(-(1.0 + sp));
    }
    let equator = surface_measure(n - 1).expect("N >= 2");
    let sin_pow = (n as i32 - 2) as f64;
    let expo = -0.5 * (n as f64 + sp);
    let integrand = |theta: f64| {
        let s_half = (0.5 * theta).sin();
        let denom = u * u + 4.0 * r * s_half * s_half;
        let sin_factor = if sin_pow == 0.0 {
            1.0
        } else {
            theta.sin().powf(sin_pow)
        };
        sin_factor * denom.powf(expo)
    };
    let rule = GaussRule::new(order);
    let mut total = 0.0;
    if r <= 0.5 {
        // no peak: the denominator is bounded below by u^2 >= 1/4
        for k in 0..4 {
            total += rule.integrate(PI * k as f64 / 4.0, PI * (k as f64 + 1.0) / 4.0, integrand);
        }
    } else {
        // peak of width ~ u at theta = 0: geometric panels (ratio 4) away
        // from it; the integrand is analytic on each panel with the
        // nearest singularity a panel-width away, so the fixed rule holds
        // machine accuracy
        let first = u.min(PI / 4.0);
        total += rule.integrate(0.0, first, integrand);
        let mut a = first;
        while a < PI {
            let b = (4.0 * a).min(PI);
            total += rule.integrate(a, b, integrand);
            a = b;
        }
    }
    equator * total
}

/// Numerical bound on sup_w Ψ(w) (1-w)^{1+sp}, with a 1.5x safety factor.
/// Used by diagonal-band and endpoint remainder estimates.
pub(crate) fn psi_edge_bound(n: u32, sp: f64) -> f64 {
    let mut sup: f64 = 0.0;
    for i in 0..10 {
        let w = i as f64 * 0.1;
        let u = 1.0 - w;
        sup = sup.max(psi_with_complement(n, sp, w, u, 16) * u.powf(1.0 + sp));
    }
    for j in 4..44 {
        let u = 2.0f64.powi(-j);
        let w = 1.0 - u;
        sup = sup.max(psi_with_complement(n, sp, w, u, 16) * u.powf(1.0 + sp));
    }
    1.5 * sup
}

/// Quadrature scheme for the Λ outer integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaScheme {
    /// Composite Gauss on graded meshes, with the endpoint exponents
    /// absorbed by the exact substitutions r = x^{1/sp} and 1-r = y^{p-sp}.
    GradedGauss,
    /// Variable split at r = 1/2 with a tanh-sinh map on each half.
    TanhSinh,
}

impl std::fmt::Display for LambdaScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LambdaScheme::GradedGauss => write!(f, "graded-gauss"),
            LambdaScheme::TanhSinh => write!(f, "tanh-sinh"),
        }
    }
}

/// Node-count knobs for [`lambda_constant_with`]; `refined` doubles them
/// for convergence checks.
#[derive(Debug, Clone, Copy)]
pub struct LambdaParams {
    pub gauss_order: usize,
    pub psi_order: usize,
    pub ts_tol: f64,
    pub ts_max_level: u32,
}

impl Default for LambdaParams {
    fn default() -> Self {
        LambdaParams {
            gauss_order: 32,
            psi_order: DEFAULT_PSI_ORDER,
            ts_tol: 1e-12,
            ts_max_level: 9,
        }
    }
}

impl LambdaParams {
    pub fn refined(&self) -> Self {
        LambdaParams {
            gauss_order: self.gauss_order * 2,
            psi_order: self.psi_order * 2,
            ts_tol: self.ts_tol * 0.1,
            ts_max_level: self.ts_max_level + 1,
        }
    }
}

/// Λ with provenance: the defining integral, the scheme, and an error
/// estimate (refinement deltas plus truncation bounds, propagated to Λ).
#[derive(Debug, Clone, Copy)]
pub struct LambdaResult {
    pub frac: FracRegime,
    pub lambda: f64,
    /// The integral I = ∫_0^1 r^{sp-1} |1-r^{(N-sp)/p}|^p Ψ dr, so that
    /// Λ = 1 / (2 I).
    pub inverse_integral: f64,
    pub scheme_id: LambdaScheme,
    pub est_error: f64,
}

fn check_exponent_strength(frac: &FracRegime) -> Result<f64> {
    let gap = frac.p() - frac.sp();
    if gap < 0.02 {
        return Err(Error::QuadratureFailure(format!(
            "endpoint exponent p - sp = {gap} too close to the divergence threshold"
        )));
    }
    Ok(gap)
}

/// |1 - r^c|^p evaluated from the complement u = 1 - r without cancellation.
fn one_minus_r_pow_c(u: f64, c: f64) -> f64 {
    // 1 - (1-u)^c = -expm1(c ln(1-u))
    -(c * (-u).ln_1p()).exp_m1()
}

fn lambda_integral_graded(frac: &FracRegime, params: &LambdaParams) -> Result<(f64, f64)> {
    let n = frac.n();
    let sp = frac.sp();
    let p = frac.p();
    let gap = check_exponent_strength(frac)?;
    let beta_exp = (n as f64 - sp) / p;
    let rule = GaussRule::new(params.gauss_order);

    // Lower half (0, 1/2]: substitute x = r^{sp}, absorbing r^{sp-1} exactly.
    let x_hi = 0.5f64.powf(sp);
    let low_of = |order: usize| {
        let rule = GaussRule::new(order);
        let mut acc = 0.0;
        for (a, b) in dyadic_panels(x_hi, x_hi * 2.0f64.powi(-52)) {
            acc += rule.integrate(a, b, |x| {
                let r = x.powf(1.0 / sp);
                let c = (1.0 - r.powf(beta_exp)).powf(p);
                c * psi_with_complement(n, sp, r, 1.0 - r, params.psi_order)
            });
        }
        acc / sp
    };
    let i_low = low_of(params.gauss_order);
    // truncated mass below x_min: integrand <= Ψ(r(x)) <= Ψ(0.01) there
    let trunc_low = x_hi * 2.0f64.powi(-52) / sp
        * psi_with_complement(n, sp, 0.01, 0.99, 16)
        * 1.1;

    // Upper half [1/2, 1): u = 1-r, substitute u = y^{1/(p-sp)} so the
    // integrand m V(y^m) is bounded; V carries the regular part.
    let m_exp = 1.0 / gap;
    let y_hi = 0.5f64.powf(gap);
    let v_of = |u: f64| {
        let r = 1.0 - u;
        let c_over_u = one_minus_r_pow_c(u, beta_exp) / u;
        let psi_scaled =
            psi_with_complement(n, sp, r, u, params.psi_order) * u.powf(1.0 + sp);
        r.powf(sp - 1.0) * c_over_u.powf(p) * psi_scaled
    };
    let y_min = y_hi * 2.0f64.powi(-44);
    let high_of = |order: usize| {
        let rule = GaussRule::new(order);
        let mut acc = 0.0;
        for (a, b) in dyadic_panels(y_hi, y_min) {
            acc += rule.integrate(a, b, |y| v_of(y.powf(m_exp)));
        }
        acc * m_exp
    };
    let i_high = high_of(params.gauss_order);
    let trunc_high = m_exp * v_of(y_min.powf(m_exp)).abs() * y_min * 1.1;

    // refinement delta at a higher order on the same meshes
    let refined = low_of(params.gauss_order + 12) + high_of(params.gauss_order + 12);
    let value = i_low + i_high;
    let est = (value - refined).abs() + trunc_low + trunc_high;
    let _ = rule;
    Ok((value, est))
}

fn lambda_integral_tanh_sinh(frac: &FracRegime, params: &LambdaParams) -> Result<(f64, f64)> {
    let n = frac.n();
    let sp = frac.sp();
    let p = frac.p();
    let gap = check_exponent_strength(frac)?;
    let beta_exp = (n as f64 - sp) / p;
    let cutoff = 1e-60;

    // (0, 1/2]: r = x/2, integrable r^{sp-1} singularity at x = 0.
    let low = tanh_sinh_unit(
        |x, _| {
            let r = 0.5 * x;
            let c = (1.0 - r.powf(beta_exp)).powf(p);
            r.powf(sp - 1.0) * c * psi_with_complement(n, sp, r, 1.0 - r, params.psi_order)
        },
        params.ts_tol,
        params.ts_max_level,
        cutoff,
    )?;
    if !low.abs_error.is_finite() {
        return Err(Error::QuadratureFailure(
            "tanh-sinh did not converge on the lower half".into(),
        ));
    }
    let r_min = 0.5 * cutoff;
    let trunc_low = psi_with_complement(n, sp, 0.01, 0.99, 16) * r_min.powf(sp) / sp * 1.1;

    // [1/2, 1): u = v/2, integrand ~ u^{p-1-sp} near u = 0.
    let w_of = |u: f64| {
        let r = 1.0 - u;
        let c = one_minus_r_pow_c(u, beta_exp).powf(p);
        r.powf(sp - 1.0) * c * psi_with_complement(n, sp, r, u, params.psi_order)
    };
    let high = tanh_sinh_unit(
        |v, _| w_of(0.5 * v),
        params.ts_tol,
        params.ts_max_level,
        cutoff,
    )?;
    if !high.abs_error.is_finite() {
        return Err(Error::QuadratureFailure(
            "tanh-sinh did not converge on the upper half".into(),
        ));
    }
    let u_min = 0.5 * cutoff;
    let trunc_high = w_of(u_min).abs() * u_min / gap * 1.1;

    let value = 0.5 * low.value + 0.5 * high.value;
    let est = 0.5 * low.abs_error + 0.5 * high.abs_error + trunc_low + trunc_high;
    Ok((value, est))
}

/// Λ_{N,s,p} through one quadrature scheme with explicit node counts.
pub fn lambda_constant_with(
    frac: &FracRegime,
    scheme: LambdaScheme,
    params: &LambdaParams,
) -> Result<LambdaResult> {
    let (integral, est) = match scheme {
        LambdaScheme::GradedGauss => lambda_integral_graded(frac, params)?,
        LambdaScheme::TanhSinh => lambda_integral_tanh_sinh(frac, params)?,
    };
    if !(integral.is_finite() && integral > 0.0) {
        return Err(Error::QuadratureFailure(format!(
            "lambda integral came out nonpositive or non-finite: {integral}"
        )));
    }
    let lambda = 1.0 / (2.0 * integral);
    Ok(LambdaResult {
        frac: *frac,
        lambda,
        inverse_integral: integral,
        scheme_id: scheme,
        // dΛ = Λ² · 2 dI
        est_error: lambda * lambda * 2.0 * est,
    })
}

/// Λ_{N,s,p} at default node counts.
pub fn lambda_constant(frac: &FracRegime, scheme: LambdaScheme) -> Result<LambdaResult> {
    lambda_constant_with(frac, scheme, &LambdaParams::default())
}

/// Both schemes side by side; errors out when they disagree beyond 1e-6
/// relative.
#[derive(Debug, Clone, Copy)]
pub struct LambdaCrossCheck {
    pub graded: LambdaResult,
    pub tanh_sinh: LambdaResult,
    pub rel_disagreement: f64,
}

impl LambdaCrossCheck {
    /// The adopted value (tanh-sinh side).
    pub fn value(&self) -> f64 {
        self.tanh_sinh.lambda
    }
}

pub fn lambda_cross_validated(frac: &FracRegime) -> Result<LambdaCrossCheck> {
    let graded = lambda_constant(frac, LambdaScheme::GradedGauss)?;
    let ts = lambda_constant(frac, LambdaScheme::TanhSinh)?;
    let rel = (graded.lambda - ts.lambda).abs() / ts.lambda.abs();
    if rel > 1e-6 {
        return Err(Error::QuadratureInconsistent(format!(
            "lambda schemes disagree by {rel:.3e} relative (graded {} vs tanh-sinh {})",
            graded.lambda, ts.lambda
        )));
    }
    Ok(LambdaCrossCheck {
        graded,
        tanh_sinh: ts,
        rel_disagreement: rel,
    })
}

// ---------------------------------------------------------------------------
// Radial Gagliardo seminorm
// ---------------------------------------------------------------------------

/// Ψ evaluations keyed by argument bits; the cache only short-circuits
/// bit-identical arguments, so results are unchanged by its presence.
struct PsiCache {
    n: u32,
    sp: f64,
    order: usize,
    map: HashMap<u64, f64>,
}

impl PsiCache {
    fn new(n: u32, sp: f64, order: usize) -> Self {
        PsiCache {
            n,
            sp,
            order,
            map: HashMap::new(),
        }
    }

    /// Ψ(1-d) addressed by the complement d.
    fn at_complement(&mut self, d: f64) -> f64 {
        if self.n == 1 {
            return d.powf(-(1.0 + self.sp)) + (2.0 - d).powf(-(1.0 + self.sp));
        }
        let key = d.to_bits();
        if let Some(&v) = self.map.get(&key) {
            return v;
        }
        let v = psi_with_complement(self.n, self.sp, 1.0 - d, d, self.order);
        self.map.insert(key, v);
        v
    }

    /// Ψ(w) for w bounded away from 1.
    fn at(&mut self, w: f64) -> f64 {
        self.at_complement(1.0 - w)
    }
}

/// Cumulative kernel integral T(a) = ∫_0^a w^{sp-1} Ψ(w) dw on a fixed
/// graded grid: the w → 0 exponent is absorbed by x = w^{sp}, the w → 1
/// blow-up by dyadic grading of the complement.
struct KernelCumulative {
    sp: f64,
    /// edges in x = w^{sp} covering the lower region (0, 0.5^{sp}]
    x_edges: Vec<f64>,
    x_cum: Vec<f64>,
    /// edges in d = 1 - w from 0.5 down to the band cutoff
    d_edges: Vec<f64>,
    d_cum: Vec<f64>,
    partial_rule: GaussRule,
}

impl KernelCumulative {
    fn build(cache: &mut PsiCache, sp: f64, d_min: f64) -> Self {
        let rule = GaussRule::new(16);
        // lower region in x = w^{sp}
        let x_hi = 0.5f64.powf(sp);
        let mut x_edges: Vec<f64> = vec![x_hi * 2.0f64.powi(-48)];
        while *x_edges.last().unwrap() < x_hi {
            let next = (x_edges.last().unwrap() * 2.0).min(x_hi);
            x_edges.push(next);
        }
        let mut x_cum = vec![0.0];
        for i in 0..x_edges.len() - 1 {
            let seg = rule.integrate(x_edges[i], x_edges[i + 1], |x| {
                cache.at(x.powf(1.0 / sp))
            }) / sp;
            x_cum.push(x_cum[i] + seg);
        }
        // upper region in d = 1 - w, from 0.5 down to d_min
        let mut d_edges = vec![0.5];
        while *d_edges.last().unwrap() > d_min {
            let next = (d_edges.last().unwrap() * 0.5).max(d_min);
            d_edges.push(next);
        }
        let mut d_cum = vec![0.0];
        for i in 0..d_edges.len() - 1 {
            // ∫ over w in [1-d_edges[i+1] ... ] wait: d decreasing means w increasing
            let seg = rule.integrate(d_edges[i + 1], d_edges[i], |d| {
                let w = 1.0 - d;
                w.powf(sp - 1.0) * cache.at_complement(d)
            });
            d_cum.push(d_cum[i] + seg);
        }
        KernelCumulative {
            sp,
            x_edges,
            x_cum,
            d_edges,
            d_cum,
            partial_rule: GaussRule::new(8),
        }
    }

    /// T(a) for a in (0, 1 - d_min].
    fn eval(&self, cache: &mut PsiCache, a: f64) -> f64 {
        let sp = self.sp;
        if a <= 0.0 {
            return 0.0;
        }
        if a <= 0.5 {
            let xa = a.powf(sp);
            if xa <= self.x_edges[0] {
                // below the grid: single substituted panel from 0
                return self
                    .partial_rule
                    .integrate(0.0, xa, |x| cache.at(x.powf(1.0 / sp)))
                    / sp;
            }
            let idx = self.x_edges.partition_point(|&e| e <= xa) - 1;
            let partial = self
                .partial_rule
                .integrate(self.x_edges[idx], xa, |x| cache.at(x.powf(1.0 / sp)))
                / sp;
            return self.x_cum[idx] + partial;
        }
        let t_half = *self.x_cum.last().unwrap();
        let d = 1.0 - a;
        let d_last = *self.d_edges.last().unwrap();
        let d = d.max(d_last);
        let idx = self
            .d_edges
            .partition_point(|&e| e >= d)
            .saturating_sub(1)
            .min(self.d_edges.len() - 1);
        // cumulative to d_edges[idx], then partial from d_edges[idx] down to d
        let partial = self.partial_rule.integrate(d, self.d_edges[idx], |dd| {
            let w = 1.0 - dd;
            w.powf(sp - 1.0) * cache.at_complement(dd)
        });
        t_half + self.d_cum[idx] + partial
    }
}

use crate::profiles::quadrature_panels as outer_panels;

/// Gagliardo seminorm of the radial function u(x) = f(|x|) at the default
/// relative tolerance 1e-9.
pub fn frac_seminorm_radial(f: &RadialProfile, frac: &FracRegime) -> Result<f64> {
    frac_seminorm_radial_with_tol(f, frac, 1e-9)
}

/// As [`frac_seminorm_radial`] with an explicit relative tolerance for the
/// diagonal-band refinement loop.
pub fn frac_seminorm_radial_with_tol(
    f: &RadialProfile,
    frac: &FracRegime,
    rel_tol: f64,
) -> Result<f64> {
    let n = frac.n();
    let nf = n as f64;
    let p = frac.p();
    let sp = frac.sp();
    let gap = p - sp;
    let support = f.support_radius();
    if !(support.is_finite() && support > 0.0) {
        return Err(Error::SupportRequired(
            "seminorm needs a compactly supported profile".into(),
        ));
    }
    let sphere = surface_measure(n)?;
    let k_psi = psi_edge_bound(n, sp);
    let rule = GaussRule::new(24);
    let w_rule = GaussRule::new(16);

    // radius below which f vanishes identically (integrand is zero there)
    let r_lo = f.vanish_radius();

    let mut band_levels: i32 = 24;
    loop {
        let d_min = 2.0f64.powi(-band_levels);
        let mut cache = PsiCache::new(n, sp, DEFAULT_PSI_ORDER);

        // w-panel edges for J(r): smooth region [0, 1/2] plus dyadic d-panels
        let mut w_panels: Vec<(f64, f64)> = (0..4)
            .map(|i| (0.125 * i as f64, 0.125 * (i as f64 + 1.0)))
            .collect();
        {
            let mut d = 0.5;
            while d > d_min {
                let next = (0.5 * d).max(d_min);
                w_panels.push((1.0 - d, 1.0 - next));
                d = next;
            }
        }

        // main part: ∫ r^{N-1-sp} J(r) dr over [r_lo, support]
        let main_panels = outer_panels(f, r_lo, support, false, false);
        let mut i_main = 0.0;
        let mut sliver_total = 0.0;
        for &(a, b) in &main_panels {
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            for (&x, &wq) in rule.nodes.iter().zip(&rule.weights) {
                let r = mid + half * x;
                let fr = f.eval(r);
                let mut j_val = 0.0;
                for &(wa, wb) in &w_panels {
                    j_val += w_rule.integrate(wa, wb, |w| {
                        let diff = (fr - f.eval(r * w)).abs();
                        if diff == 0.0 {
                            return 0.0;
                        }
                        let wn = if n == 1 { 1.0 } else { w.powf(nf - 1.0) };
                        diff.powf(p) * wn * cache.at(w)
                    });
                }
                let lip = f.deriv_bound(r * (1.0 - 2.0 * d_min), r);
                let sliver = lip.powf(p) * r.powf(p) * k_psi * d_min.powf(gap) / gap;
                let weight = wq * half * r.powf(nf - 1.0 - sp);
                i_main += weight * j_val;
                sliver_total += weight * sliver;
            }
        }

        // tail part: ∫ |f(y)|^p y^{N-1-sp} T(y/support) dy
        let t_cum = KernelCumulative::build(&mut cache, sp, d_min);
        let tail_panels = outer_panels(f, r_lo, support * (1.0 - 2.0 * d_min), true, false);
        let mut i_tail = 0.0;
        for &(a, b) in &tail_panels {
            i_tail += rule.integrate(a, b, |y| {
                let fy = f.eval(y).abs();
                if fy == 0.0 {
                    return 0.0;
                }
                fy.powf(p) * y.powf(nf - 1.0 - sp) * t_cum.eval(&mut cache, y / support)
            });
        }
        // skipped closing sliver of the tail: y in [support(1-2 d_min), support]
        let lip_end = f.deriv_bound(support * (1.0 - 4.0 * d_min), support);
        let tail_sliver = lip_end.powf(p) * k_psi / sp * support.powf(nf + p - sp)
            * (2.0 * d_min).powf(gap)
            / gap;

        let total = 2.0 * sphere * (i_main + i_tail);
        let budget = 2.0 * sphere * (sliver_total + tail_sliver);
        if budget <= 0.1 * rel_tol * total.abs() + f64::MIN_POSITIVE || total == 0.0 {
            return Ok(total);
        }
        band_levels += 8;
        if band_levels > 48 {
            return Err(Error::QuadratureFailure(format!(
                "diagonal band bound {budget:.3e} still above tolerance at band width 2^-48 \
                 (total {total:.3e})"
            )));
        }
    }
}

/// Left side of the weighted fractional inequality for radial test
/// functions: (∫ g dθ) · ∫_0^R |f|^p r^{N-sp-1} dr.
pub fn frac_lhs_radial(
    f: &RadialProfile,
    g: &SphericalWeight,
    frac: &FracRegime,
    quad: &SphereQuadrature,
) -> Result<f64> {
    if !g.is_nonneg() {
        return Err(Error::NonnegRequired(
            "the fractional inequality requires a nonnegative weight".into(),
        ));
    }
    let n = frac.n();
    let angular = if n == 1 {
        match g {
            SphericalWeight::Constant(c) => 2.0 * c,
            _ => {
                return Err(Error::InvalidInput(
                    "N = 1 admits only constant angular weights".into(),
                ))
            }
        }
    } else {
        integrate_zonal(g, n, quad)?
    };
    let power = n as f64 - frac.sp() - 1.0;
    let rule = GaussRule::new(24);
    let support = f.support_radius();
    let mut radial = 0.0;
    for (a, b) in outer_panels(f, f.vanish_radius(), support, false, true) {
        radial += rule.integrate(a, b, |r| f.eval(r).abs().powf(frac.p()) * r.powf(power));
    }
    Ok(angular * radial)
}
