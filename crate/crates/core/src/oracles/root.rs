use crate::error::{Error, Result};

pub const DEFAULT_BISECTION_TOL: f64 = 1e-9;

/// Shrinks a sign-changing bracket of `f` until it is at most `tol` wide.
/// Returns the final `(lo, hi)`, with `f(lo)` and `f(hi)` still on their
/// original sides of zero.
pub fn bisect_bracket<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "bisection tolerance must be positive, got {tol}"
        )));
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok((lo, lo));
    }
    if f_hi == 0.0 {
        return Ok((hi, hi));
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::NoBracket { lo, hi });
    }
    let lo_negative = f_lo < 0.0;
    while (hi - lo).abs() > tol {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok((mid, mid));
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Root of `f` in `[lo, hi]`, located to within `tol`.
pub fn bisect_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (lo, hi) = bisect_bracket(f, lo, hi, tol)?;
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_root() {
        let x = bisect_root(|x| x - 0.5, 0.0, 1.0, 1e-10).unwrap();
        assert!((x - 0.5).abs() <= 1e-10);
    }

    #[test]
    fn decreasing_function() {
        let x = bisect_root(|x| 2.0 - x * x, 0.0, 3.0, 1e-12).unwrap();
        assert!((x - 2f64.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn same_sign_is_an_error() {
        assert_eq!(
            bisect_root(|x| x + 1.0, 0.0, 1.0, 1e-9),
            Err(Error::NoBracket { lo: 0.0, hi: 1.0 })
        );
    }

    #[test]
    fn bracket_keeps_sides() {
        let (lo, hi) = bisect_bracket(|x| x - 0.3, 0.0, 1.0, 1e-9).unwrap();
        assert!(lo - 0.3 < 0.0 && hi - 0.3 > 0.0);
        assert!(hi - lo <= 1e-9);
    }
}
