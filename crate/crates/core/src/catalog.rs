//! Named catalogs of angular weights and test functions.
//!
//! These are the fixtures exercised by the verification matrix and
//! addressable by name from run configurations. All weights are
//! nonnegative (signed tables remain constructible through
//! [`crate::sphere::SphericalWeight::sampled`] where a theorem admits
//! them).

use crate::profiles::{AngularFactor, RadialProfile, TestFunction};
use crate::sphere::SphericalWeight;

use std::f64::consts::{FRAC_PI_2, PI};

/// The six catalog weights.
pub fn weights() -> Vec<(String, SphericalWeight)> {
    vec![
        ("one".into(), SphericalWeight::Constant(1.0)),
        ("two-point-five".into(), SphericalWeight::Constant(2.5)),
        (
            "hemisphere".into(),
            SphericalWeight::CapIndicator { phi0: FRAC_PI_2 },
        ),
        (
            "cap60".into(),
            SphericalWeight::CapIndicator { phi0: PI / 3.0 },
        ),
        ("cos2".into(), SphericalWeight::ZonalPower { k: 2.0 }),
        ("abscos".into(), SphericalWeight::ZonalPower { k: 1.0 }),
    ]
}

/// The eight catalog test functions: six radial, two with angular factors.
pub fn tests() -> Vec<(String, TestFunction)> {
    let radial = |f: RadialProfile| TestFunction::radial_only(f);
    vec![
        ("tent1".into(), radial(RadialProfile::Tent { radius: 1.0 })),
        ("tent2".into(), radial(RadialProfile::Tent { radius: 2.0 })),
        (
            "power-mild".into(),
            radial(RadialProfile::TruncatedPower {
                exponent: -0.8,
                inner: 0.05,
                outer: 1.0,
                ramp: 0.5,
            }),
        ),
        (
            "power-steep".into(),
            radial(RadialProfile::TruncatedPower {
                exponent: -1.2,
                inner: 0.1,
                outer: 2.0,
                ramp: 1.0,
            }),
        ),
        (
            "expbump".into(),
            radial(RadialProfile::ExpBump {
                scale: 1.0,
                cutoff: 12.0,
            }),
        ),
        (
            "expnarrow".into(),
            radial(RadialProfile::ExpBump {
                scale: 0.5,
                cutoff: 8.0,
            }),
        ),
        (
            "tent-cos".into(),
            TestFunction::new(RadialProfile::Tent { radius: 1.0 }, AngularFactor::Cos),
        ),
        (
            "tent-cap".into(),
            TestFunction::new(
                RadialProfile::Tent { radius: 1.5 },
                AngularFactor::CapSmooth {
                    phi0: 2.0,
                    ramp: 0.6,
                },
            ),
        ),
    ]
}

/// Names of the radial catalog entries (the fractional theorem verifies
/// radial test functions only).
pub fn radial_test_names() -> Vec<String> {
    tests()
        .into_iter()
        .filter(|(_, t)| t.angular.is_one())
        .map(|(name, _)| name)
        .collect()
}

pub fn weight_by_name(name: &str) -> Option<SphericalWeight> {
    weights().into_iter().find(|(n, _)| n == name).map(|(_, w)| w)
}

pub fn test_by_name(name: &str) -> Option<TestFunction> {
    tests().into_iter().find(|(n, _)| n == name).map(|(_, t)| t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes_and_lookup() {
        assert_eq!(weights().len(), 6);
        assert_eq!(tests().len(), 8);
        assert_eq!(radial_test_names().len(), 6);
        assert!(weight_by_name("hemisphere").is_some());
        assert!(test_by_name("tent1").is_some());
        assert!(weight_by_name("nope").is_none());
        for (_, w) in weights() {
            assert!(w.is_nonneg());
        }
    }
}
