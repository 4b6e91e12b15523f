//! Sharp constants and numerical verification for weighted and fractional
//! Hardy inequalities with homogeneous angular weights g(x/|x|)/|x|^d.
//!
//! The library computes every explicit constant of the family — the
//! power-weight constant (p/(N-p-α))^p, the sharp p = 2 constants with
//! angular L^q norms, the rearrangement-route constant, and the fractional
//! constant Λ_{N,s,p} — and verifies the corresponding inequalities on
//! discretized test functions, including Rayleigh-quotient sweeps that
//! probe sharpness from below.
//!
//! Modules:
//!
//! * [`regimes`] — parameter packs, admissibility, case classification,
//!   closed-form constants;
//! * [`sphere`] — zonal weights on S^{N-1}, surface measure, L^q norms,
//!   the sphere Gagliardo-Nirenberg function μ(β);
//! * [`rearrangement`] — symmetric decreasing rearrangement closed forms
//!   and grid rearrangements;
//! * [`fractional`] — the kernel Ψ_{N,s,p}, the constant Λ_{N,s,p}, and
//!   Gagliardo seminorms of radial functions;
//! * [`quotients`] — both sides of each inequality on test functions,
//!   verification reports, and sharpness sweeps;
//! * [`profiles`] — compactly supported radial profiles and zonal angular
//!   factors;
//! * [`catalog`] — the named weight/test fixtures used by verification
//!   matrices and run configurations;
//! * [`quad`] — the 1-D quadrature toolbox everything reduces to;
//! * [`montecarlo`] — seeded Monte-Carlo oracles used for cross-checks.

pub mod catalog;
pub mod error;
pub mod fractional;
pub mod montecarlo;
pub mod profiles;
pub mod quad;
pub mod quotients;
pub mod rearrangement;
pub mod regimes;
pub mod sphere;

pub use error::{Error, Result};
pub use profiles::{AngularFactor, RadialProfile, TestFunction};
pub use quotients::{CaseSpec, QuotientReport, SweepCase, SweepOutcome};
pub use regimes::{CaseId, FracRegime, Regime};
pub use sphere::{SphereQuadrature, SphericalWeight};
