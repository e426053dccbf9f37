//! The prior -> posterior curve of a binary classifier.
//!
//! For a classifier with sensitivity `a` and fall-out `c = 1 - b`, a positive
//! result moves a prior `phi` to
//!
//! ```text
//! rho(phi) = a*phi / (a*phi + c*(1 - phi))
//! ```
//!
//! This module evaluates the curve, its first two derivatives and its
//! curvature in closed form, and locates the point of maximum curvature
//! (the information threshold) at `phi_e = sqrt(c) / (sqrt(a) + sqrt(c))`.
//! At that point `phi_e + rho(phi_e) = 1` for every classifier.

use crate::error::{Error, Result};
use crate::rates::{ClassifierRates, Probability};

/// Which edge of the rate square produced a limiting threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitCase {
    /// `b = 1`: the curve jumps from 0 to 1 at `phi = 0`.
    NoFalsePositives,
    /// `a = 0`: the curve stays at 0 until `phi = 1`.
    NoTruePositives,
}

/// The point of maximum curvature of the prior/posterior curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdPoint {
    pub phi_e: Probability,
    pub rho_e: Probability,
    /// Curvature at `phi_e`. Infinite for the limiting step curves.
    pub kappa_max: f64,
    /// Set when `phi_e` is the limit of the closed form rather than a point
    /// on a smooth curve.
    pub limit: Option<LimitCase>,
}

impl ThresholdPoint {
    /// `phi_e + rho_e`, which is 1 up to rounding.
    pub fn sum(&self) -> f64 {
        self.phi_e.value() + self.rho_e.value()
    }

    /// Radius of curvature at the threshold, `1 / kappa_max`.
    pub fn radius(&self) -> f64 {
        1.0 / self.kappa_max
    }
}

/// Numerator and denominator terms of the positive update.
#[inline]
fn split(rates: ClassifierRates, prior: Probability) -> (f64, f64) {
    let phi = prior.value();
    (rates.tpr() * phi, rates.fall_out() * (1.0 - phi))
}

#[inline]
fn denominator(rates: ClassifierRates, prior: Probability) -> Result<f64> {
    let (hit, false_alarm) = split(rates, prior);
    let den = hit + false_alarm;
    if den == 0.0 {
        return Err(Error::DegenerateDenominator {
            tpr: rates.tpr(),
            tnr: rates.tnr(),
            prior: prior.value(),
        });
    }
    Ok(den)
}

/// Belief after a positive classification.
pub fn posterior(rates: ClassifierRates, prior: Probability) -> Result<Probability> {
    let den = denominator(rates, prior)?;
    if rates.is_uninformative() {
        return Ok(prior);
    }
    let (hit, _) = split(rates, prior);
    Ok(Probability::saturating(hit / den))
}

/// Belief after a negative classification:
/// `(1 - a)*phi / ((1 - a)*phi + b*(1 - phi))`.
pub fn negative_posterior(rates: ClassifierRates, prior: Probability) -> Result<Probability> {
    let phi = prior.value();
    let miss = (1.0 - rates.tpr()) * phi;
    let correct_reject = rates.tnr() * (1.0 - phi);
    let den = miss + correct_reject;
    if den == 0.0 {
        return Err(Error::DegenerateDenominator {
            tpr: rates.tpr(),
            tnr: rates.tnr(),
            prior: phi,
        });
    }
    if 1.0 - rates.tpr() == rates.tnr() {
        return Ok(prior);
    }
    Ok(Probability::saturating(miss / den))
}

/// `d rho / d phi = a*c / (a*phi + c*(1 - phi))^2`.
pub fn posterior_derivative(rates: ClassifierRates, prior: Probability) -> Result<f64> {
    let den = denominator(rates, prior)?;
    Ok(rates.tpr() * rates.fall_out() / (den * den))
}

/// `d^2 rho / d phi^2 = -2*a*c*(a - c) / (a*phi + c*(1 - phi))^3`.
pub fn posterior_second_derivative(rates: ClassifierRates, prior: Probability) -> Result<f64> {
    let den = denominator(rates, prior)?;
    let a = rates.tpr();
    let c = rates.fall_out();
    Ok(-2.0 * a * c * (a - c) / (den * den * den))
}

/// Unsigned curvature `|rho''| / (1 + rho'^2)^(3/2)`.
pub fn curvature(rates: ClassifierRates, prior: Probability) -> Result<f64> {
    let d1 = posterior_derivative(rates, prior)?;
    let d2 = posterior_second_derivative(rates, prior)?;
    Ok(d2.abs() / (1.0 + d1 * d1).powf(1.5))
}

/// Prior at which the curvature of the posterior curve peaks.
///
/// `a = 0` with `b = 1` has no curve and is an error. The other two edges of
/// the rate square give step-shaped curves; for those the limit of the closed
/// form is returned with [`ThresholdPoint::limit`] set.
pub fn information_threshold(rates: ClassifierRates) -> Result<ThresholdPoint> {
    let a = rates.tpr();
    let c = rates.fall_out();
    match (a == 0.0, c == 0.0) {
        (true, true) => Err(Error::UndefinedThreshold),
        (false, true) => Ok(ThresholdPoint {
            phi_e: Probability::ZERO,
            rho_e: Probability::ONE,
            kappa_max: f64::INFINITY,
            limit: Some(LimitCase::NoFalsePositives),
        }),
        (true, false) => Ok(ThresholdPoint {
            phi_e: Probability::ONE,
            rho_e: Probability::ZERO,
            kappa_max: f64::INFINITY,
            limit: Some(LimitCase::NoTruePositives),
        }),
        (false, false) => {
            let root_c = c.sqrt();
            let phi_e = Probability::saturating(root_c / (a.sqrt() + root_c));
            Ok(ThresholdPoint {
                phi_e,
                rho_e: posterior(rates, phi_e)?,
                kappa_max: curvature(rates, phi_e)?,
                limit: None,
            })
        }
    }
}

pub fn youden_j(rates: ClassifierRates) -> f64 {
    rates.youden_j()
}

pub fn lr_positive(rates: ClassifierRates) -> Result<f64> {
    rates.lr_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn rates(a: f64, b: f64) -> ClassifierRates {
        ClassifierRates::new(a, b).unwrap()
    }

    fn p(x: f64) -> Probability {
        Probability::new(x).unwrap()
    }

    #[test]
    fn posterior_endpoints_and_midpoint() {
        let r = rates(0.95, 0.99);
        assert_eq!(posterior(r, p(0.0)).unwrap().value(), 0.0);
        assert_eq!(posterior(r, p(1.0)).unwrap().value(), 1.0);
        // 0.475 / 0.480
        assert_relative_eq!(
            posterior(r, p(0.5)).unwrap().value(),
            0.989_583_333_333_333_3,
            max_relative = 1e-14
        );
    }

    #[test]
    fn identity_line_when_a_is_one_minus_b() {
        let r = rates(0.6, 0.4);
        for i in 0..=100 {
            let phi = i as f64 / 100.0;
            assert!((posterior(r, p(phi)).unwrap().value() - phi).abs() <= 1e-15);
            assert_eq!(curvature(r, p(phi)).unwrap(), 0.0);
        }
    }

    #[test]
    fn degenerate_denominator() {
        // a*phi = 0 and c*(1 - phi) = 0
        assert!(matches!(
            posterior(rates(0.0, 0.7), p(1.0)),
            Err(Error::DegenerateDenominator { .. })
        ));
        assert!(matches!(
            posterior(rates(0.4, 1.0), p(0.0)),
            Err(Error::DegenerateDenominator { .. })
        ));
        assert!(matches!(
            posterior_derivative(rates(0.0, 1.0), p(0.3)),
            Err(Error::DegenerateDenominator { .. })
        ));
        assert!(matches!(
            negative_posterior(rates(1.0, 0.5), p(1.0)),
            Err(Error::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn negative_update() {
        assert_eq!(
            negative_posterior(rates(1.0, 0.3), p(0.5)).unwrap().value(),
            0.0
        );
        assert_eq!(
            negative_posterior(rates(0.5, 0.5), p(0.3)).unwrap().value(),
            0.3
        );
        // 0.025 / 0.52
        assert_relative_eq!(
            negative_posterior(rates(0.95, 0.99), p(0.5))
                .unwrap()
                .value(),
            0.048_076_923_076_923_08,
            max_relative = 1e-14
        );
    }

    #[test]
    fn first_derivative_values() {
        assert_relative_eq!(
            posterior_derivative(rates(0.5, 0.5), p(0.37)).unwrap(),
            1.0,
            max_relative = 1e-15
        );
        // a/c and c/a
        assert_relative_eq!(
            posterior_derivative(rates(0.95, 0.99), p(0.0)).unwrap(),
            95.0,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            posterior_derivative(rates(0.95, 0.99), p(1.0)).unwrap(),
            0.010_526_315_789_473_684,
            max_relative = 1e-12
        );
    }

    #[test]
    fn second_derivative_values() {
        assert_eq!(
            posterior_second_derivative(rates(0.5, 0.5), p(0.2)).unwrap(),
            0.0
        );
        // -2ac(a - c)/c^3
        assert_relative_eq!(
            posterior_second_derivative(rates(0.95, 0.99), p(0.0)).unwrap(),
            -17_860.0,
            max_relative = 1e-10
        );
        assert!(posterior_second_derivative(rates(0.2, 0.4), p(0.5)).unwrap() > 0.0);
    }

    #[test]
    fn curvature_peaks_at_threshold() {
        let r = rates(0.95, 0.99);
        let t = information_threshold(r).unwrap();
        let phi_e = t.phi_e.value();
        assert!(t.kappa_max > curvature(r, p(phi_e - 0.05)).unwrap());
        assert!(t.kappa_max > curvature(r, p(phi_e + 0.05)).unwrap());
        assert_relative_eq!(t.radius(), 1.0 / t.kappa_max);
    }

    #[test]
    fn threshold_matches_printed_table() {
        for (a, b, phi_e) in [
            (0.95, 0.99, 0.093),
            (0.85, 0.95, 0.195),
            (0.75, 0.85, 0.309),
            (0.50, 0.50, 0.500),
            (0.20, 0.40, 0.633),
            (0.10, 0.10, 0.750),
            (0.02, 0.02, 0.875),
        ] {
            let t = information_threshold(rates(a, b)).unwrap();
            // Printed to three decimals; the 0.20/0.40 row (exactly (3 - sqrt 3)/2)
            // is truncated rather than rounded, hence 1e-3.
            assert!((t.phi_e.value() - phi_e).abs() < 1e-3, "{a} {b}");
            assert!((t.sum() - 1.0).abs() < 1e-12);
            assert_eq!(t.limit, None);
        }
    }

    #[test]
    fn threshold_edges() {
        assert_eq!(
            information_threshold(rates(0.0, 1.0)),
            Err(Error::UndefinedThreshold)
        );
        let t = information_threshold(rates(0.7, 1.0)).unwrap();
        assert_eq!((t.phi_e.value(), t.rho_e.value()), (0.0, 1.0));
        assert_eq!(t.limit, Some(LimitCase::NoFalsePositives));
        let t = information_threshold(rates(0.0, 0.3)).unwrap();
        assert_eq!((t.phi_e.value(), t.rho_e.value()), (1.0, 0.0));
        assert_eq!(t.limit, Some(LimitCase::NoTruePositives));
    }

    #[test]
    fn likelihood_ratio_identity() {
        // rho(phi_e) = phi_e * sqrt(LR+)
        let r = rates(0.85, 0.95);
        let t = information_threshold(r).unwrap();
        let rhs = t.phi_e.value() * lr_positive(r).unwrap().sqrt();
        assert!((t.rho_e.value() - rhs).abs() < 1e-12);
    }
}
