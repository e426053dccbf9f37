use std::fmt::Write as _;

use crate::bayes::posterior;
use crate::error::{Error, Result};
use crate::rates::{ClassifierRates, Probability};

/// `(phi, rho(phi))` pairs covering `[0, 1]`, strictly increasing in `phi`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub rates: ClassifierRates,
    pub points: Vec<(Probability, Probability)>,
    pub step: f64,
}

/// Samples the posterior curve every `step`, always including both ends.
/// When `1/step` is a whole number the abscissae are exactly `i/n`.
pub fn sample_curve(rates: ClassifierRates, step: f64) -> Result<CurveSample> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "step must lie in (0, 1], got {step}"
        )));
    }
    let per_unit = 1.0 / step;
    let whole = per_unit.round();
    let abscissae: Vec<f64> = if (per_unit - whole).abs() < 1e-9 * whole {
        let n = whole as usize;
        (0..=n).map(|i| i as f64 / n as f64).collect()
    } else {
        let n = per_unit.ceil() as usize;
        (0..n)
            .map(|i| i as f64 * step)
            .chain(std::iter::once(1.0))
            .collect()
    };
    let points = abscissae
        .into_iter()
        .map(|x| {
            let phi = Probability::saturating(x);
            posterior(rates, phi).map(|rho| (phi, rho))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveSample {
        rates,
        points,
        step,
    })
}

/// `phi,rho` CSV. Values use the shortest representation that parses back
/// to the same `f64`.
pub fn write_curve_csv(sample: &CurveSample) -> String {
    let mut out = String::with_capacity(32 * sample.points.len() + 8);
    out.push_str("phi,rho\n");
    for (phi, rho) in &sample.points {
        let _ = writeln!(out, "{},{}", phi.value(), rho.value());
    }
    out
}

pub fn parse_curve_csv(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("phi,rho") => {}
        other => {
            return Err(Error::InvalidArgument(format!(
                "expected header \"phi,rho\", found {other:?}"
            )))
        }
    }
    lines
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, line)| {
            let bad = || Error::InvalidArgument(format!("line {}: malformed row {line:?}", i + 2));
            let (phi, rho) = line.split_once(',').ok_or_else(bad)?;
            Ok((
                phi.trim().parse().map_err(|_| bad())?,
                rho.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hundredth_step_gives_101_points() {
        let r = ClassifierRates::new(0.95, 0.99).unwrap();
        let s = sample_curve(r, 0.01).unwrap();
        assert_eq!(s.points.len(), 101);
        assert_eq!(s.points[0], (Probability::ZERO, Probability::ZERO));
        assert_eq!(s.points[100].0, Probability::ONE);
        assert_eq!(s.points[7].0.value(), 0.07);
    }

    #[test]
    fn uneven_step_still_ends_at_one() {
        let r = ClassifierRates::new(0.8, 0.7).unwrap();
        let s = sample_curve(r, 0.03).unwrap();
        assert_eq!(s.points.len(), 35);
        assert_eq!(s.points.last().unwrap().0, Probability::ONE);
        assert!(s.points.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn csv_header_and_parse() {
        let r = ClassifierRates::new(0.5, 0.5).unwrap();
        let csv = write_curve_csv(&sample_curve(r, 0.25).unwrap());
        assert_eq!(csv, "phi,rho\n0,0\n0.25,0.25\n0.5,0.5\n0.75,0.75\n1,1\n");
        let rows = parse_curve_csv(&csv).unwrap();
        assert_eq!(rows.len(), 5);
        assert!(parse_curve_csv("x,y\n").is_err());
        assert!(parse_curve_csv("phi,rho\n0.1;0.2\n").is_err());
    }

    #[test]
    fn invalid_steps() {
        let r = ClassifierRates::new(0.5, 0.5).unwrap();
        for step in [0.0, -0.1, 1.5, f64::NAN] {
            assert!(sample_curve(r, step).is_err());
        }
    }
}
