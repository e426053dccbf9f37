use crate::bayes::posterior;
use crate::error::{Error, Result};
use crate::rates::{ClassifierRates, Probability};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub intervals: usize,
    /// Richardson estimate of the error of `value`, from the same rule on
    /// half as many intervals.
    pub estimated_error: f64,
}

/// Composite trapezoid rule for `f` on `[lo, hi]` with `n` intervals.
pub fn trapezoid<F>(f: F, lo: f64, hi: f64, n: usize) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let h = (hi - lo) / n as f64;
    let mut sum = 0.5 * (f(lo)? + f(hi)?);
    for i in 1..n {
        sum += f(lo + i as f64 * h)?;
    }
    Ok(sum * h)
}

/// Area under the posterior curve on `[0, 1]`.
pub fn integrate_curve(rates: ClassifierRates, n_intervals: usize) -> Result<QuadratureResult> {
    if n_intervals < 2 {
        return Err(Error::InvalidArgument(format!(
            "quadrature needs at least 2 intervals, got {n_intervals}"
        )));
    }
    let rho = |x: f64| posterior(rates, Probability::saturating(x)).map(Probability::value);
    let fine = trapezoid(rho, 0.0, 1.0, n_intervals)?;
    let m = n_intervals / 2;
    let coarse = trapezoid(rho, 0.0, 1.0, m)?;
    // Second-order rule: err(n) ~ C/n^2, so err(n) = (T(m) - T(n)) * m^2/(n^2 - m^2).
    let (n2, m2) = ((n_intervals * n_intervals) as f64, (m * m) as f64);
    let estimated_error = (coarse - fine).abs() * m2 / (n2 - m2);
    Ok(QuadratureResult {
        value: fine,
        intervals: n_intervals,
        estimated_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_line_area() {
        let r = ClassifierRates::new(0.5, 0.5).unwrap();
        for n in [2, 3, 10, 1000] {
            let q = integrate_curve(r, n).unwrap();
            assert!((q.value - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn error_estimate_tracks_true_error() {
        // x^2 on [0,1] has a known error of 1/(6 n^2) under the trapezoid rule.
        let t = trapezoid(|x| Ok(x * x), 0.0, 1.0, 100).unwrap();
        assert!((t - 1.0 / 3.0 - 1.0 / 60_000.0).abs() < 1e-14);

        let r = ClassifierRates::new(0.9, 0.8).unwrap();
        let q = integrate_curve(r, 64).unwrap();
        let reference = integrate_curve(r, 1 << 16).unwrap().value;
        let actual = (q.value - reference).abs();
        assert!(q.estimated_error > 0.5 * actual && q.estimated_error < 2.0 * actual);
    }

    #[test]
    fn rejects_single_interval() {
        let r = ClassifierRates::new(0.9, 0.8).unwrap();
        assert!(integrate_curve(r, 1).is_err());
    }
}
