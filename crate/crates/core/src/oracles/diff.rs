use crate::bayes::posterior;
use crate::error::{Error, Result};
use crate::rates::{ClassifierRates, Probability};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeOrder {
    First,
    Second,
}

/// Three-point central difference of `f` at `x`.
pub fn finite_diff<F>(f: F, x: f64, h: f64, order: DerivativeOrder) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "finite-difference step must be positive, got {h}"
        )));
    }
    Ok(match order {
        DerivativeOrder::First => (f(x + h) - f(x - h)) / (2.0 * h),
        DerivativeOrder::Second => (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h),
    })
}

/// Central difference of the posterior curve. The stencil must stay inside
/// `[0, 1]` and every evaluation must be defined.
pub fn posterior_finite_diff(
    rates: ClassifierRates,
    phi: f64,
    h: f64,
    order: DerivativeOrder,
) -> Result<f64> {
    let (lo, hi) = (phi - h, phi + h);
    if lo < 0.0 || hi > 1.0 {
        return Err(Error::StencilOutOfDomain { lo, hi });
    }
    let eval = |x: f64| posterior(rates, Probability::new(x)?).map(Probability::value);
    // Surface a degenerate point as an error instead of a NaN estimate.
    for x in [lo, phi, hi] {
        eval(x)?;
    }
    finite_diff(|x| eval(x).unwrap_or(f64::NAN), phi, h, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bayes::posterior_derivative;

    #[test]
    fn polynomials() {
        let d = finite_diff(|x| x * x, 3.0, 1e-3, DerivativeOrder::First).unwrap();
        assert!((d - 6.0).abs() < 1e-9);
        let d = finite_diff(|_| 4.2, 0.7, 1e-3, DerivativeOrder::Second).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn posterior_slope_at_half() {
        let r = ClassifierRates::new(0.95, 0.99).unwrap();
        let fd = posterior_finite_diff(r, 0.5, 1e-6, DerivativeOrder::First).unwrap();
        let exact = posterior_derivative(r, Probability::new(0.5).unwrap()).unwrap();
        assert!(((fd - exact) / exact).abs() < 1e-5);
    }

    #[test]
    fn stencil_must_stay_in_unit_interval() {
        let r = ClassifierRates::new(0.95, 0.99).unwrap();
        assert!(matches!(
            posterior_finite_diff(r, 0.0, 1e-6, DerivativeOrder::First),
            Err(Error::StencilOutOfDomain { .. })
        ));
        assert!(matches!(
            posterior_finite_diff(r, 1.0 - 1e-7, 1e-6, DerivativeOrder::Second),
            Err(Error::StencilOutOfDomain { .. })
        ));
    }

    #[test]
    fn rejects_nonpositive_step() {
        assert!(finite_diff(|x| x, 0.0, 0.0, DerivativeOrder::First).is_err());
        assert!(finite_diff(|x| x, 0.0, -1.0, DerivativeOrder::First).is_err());
    }
}
