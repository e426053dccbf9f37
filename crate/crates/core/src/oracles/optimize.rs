use crate::bayes::curvature;
use crate::error::{Error, Result};
use crate::rates::{ClassifierRates, Probability};

/// Golden-section search stops once the bracket is this narrow.
pub const GOLDEN_SECTION_WIDTH: f64 = 1e-10;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSearchResult {
    pub arg_max: f64,
    pub max_value: f64,
    pub grid_step: f64,
    /// Whether golden-section refinement ran after the grid scan.
    pub refined: bool,
}

/// Maximizes a unimodal `f` on `[lo, hi]` by golden-section search.
/// Returns `(arg_max, f(arg_max))`.
pub fn golden_section_max<F>(f: F, mut lo: f64, mut hi: f64, width: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > width {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Locates the maximum of the curvature of the posterior curve on `[0, 1]`
/// numerically: a uniform grid scan followed by golden-section refinement
/// around the best grid point.
pub fn maximize_curvature(rates: ClassifierRates, grid_step: f64) -> Result<GridSearchResult> {
    if !(grid_step > 0.0 && grid_step <= 1e-3) {
        return Err(Error::InvalidArgument(format!(
            "grid step must lie in (0, 1e-3], got {grid_step}"
        )));
    }
    if rates.is_uninformative() {
        return Err(Error::FlatCurvature);
    }
    let kappa = |x: f64| curvature(rates, Probability::saturating(x));

    let n = (1.0 / grid_step).ceil() as usize;
    let mut best = (0.0, kappa(0.0)?);
    for i in 1..=n {
        let x = i as f64 / n as f64;
        let k = kappa(x)?;
        if k > best.1 {
            best = (x, k);
        }
    }

    let h = 1.0 / n as f64;
    let lo = (best.0 - h).max(0.0);
    let hi = (best.0 + h).min(1.0);
    // Every point of [lo, hi] was shown defined by the scan's endpoints and
    // the curve's denominator is linear in phi, so it cannot vanish inside.
    let (x, k) = golden_section_max(
        |x| kappa(x).unwrap_or(f64::NEG_INFINITY),
        lo,
        hi,
        GOLDEN_SECTION_WIDTH,
    );
    let (arg_max, max_value) = if k >= best.1 { (x, k) } else { best };
    Ok(GridSearchResult {
        arg_max,
        max_value,
        grid_step: h,
        refined: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bayes::information_threshold;

    #[test]
    fn golden_section_on_parabola() {
        let (x, fx) = golden_section_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-8);
        assert!(fx.abs() < 1e-15);
    }

    #[test]
    fn agrees_with_closed_form() {
        let r = ClassifierRates::new(0.95, 0.99).unwrap();
        let found = maximize_curvature(r, 1e-3).unwrap();
        let closed = information_threshold(r).unwrap();
        assert!((found.arg_max - closed.phi_e.value()).abs() < 1e-6);
        assert!(found.refined);
        assert!(found.max_value >= closed.kappa_max * (1.0 - 1e-12));
    }

    #[test]
    fn worse_than_chance_classifier() {
        let r = ClassifierRates::new(0.2, 0.4).unwrap();
        let found = maximize_curvature(r, 1e-3).unwrap();
        assert!((found.arg_max - 0.633).abs() < 1e-3);
    }

    #[test]
    fn identity_curve_is_flat() {
        let r = ClassifierRates::new(0.5, 0.5).unwrap();
        assert_eq!(maximize_curvature(r, 1e-3), Err(Error::FlatCurvature));
    }

    #[test]
    fn coarse_grid_rejected() {
        let r = ClassifierRates::new(0.9, 0.9).unwrap();
        assert!(matches!(
            maximize_curvature(r, 0.01),
            Err(Error::InvalidArgument(_))
        ));
    }
}
