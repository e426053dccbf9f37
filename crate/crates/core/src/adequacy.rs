//! Area under the prior/posterior curve and the lambda-adequacy test.
//!
//! Integrating the posterior curve over all priors gives
//!
//! ```text
//! AUC = [a^2 + a(b - 1)(ln(a / (1 - b)) + 1)] / (a + b - 1)^2
//! ```
//!
//! A classifier is called adequate at level `lambda` when `AUC > lambda`.
//! The solvers invert this for the smallest sensitivity (or specificity)
//! that still reaches a given `lambda`.

use crate::bayes::{information_threshold, ThresholdPoint};
use crate::error::{Error, Result};
use crate::oracles::{bisect_bracket, DEFAULT_BISECTION_TOL};
use crate::rates::{ClassifierRates, Probability};

/// Below this distance from the identity line the closed form is replaced
/// by its power series, which has no `0/0` cancellation.
const SERIES_RADIUS: f64 = 0.05;
const SERIES_TERMS: i32 = 16;

/// Closest a solver may push a rate toward its undefined endpoint.
const EDGE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct AdequacyReport {
    pub rates: ClassifierRates,
    pub auc: f64,
    pub lambda_threshold: f64,
    pub adequate: bool,
    pub epsilon: f64,
    pub threshold: ThresholdPoint,
    /// `rho_e / phi_e`.
    pub ratio_posterior_to_prior: f64,
}

impl AdequacyReport {
    /// Posterior:prior split at the threshold scaled to 10 and rounded to
    /// the nearest half, e.g. `"9:1"` or `"8.5:1.5"`.
    pub fn ratio_label(&self) -> String {
        ratio_over_ten(self.threshold.phi_e.value())
    }
}

pub fn ratio_over_ten(phi_e: f64) -> String {
    let prior = (phi_e * 20.0).round() / 2.0;
    let posterior = 10.0 - prior;
    format!("{posterior}:{prior}")
}

/// Area under `rho(phi)` on `[0, 1]`.
///
/// The area depends on the rates only through `r = (1 - b) / a`:
/// `AUC = (1 - r + r ln r) / (1 - r)^2`, which is the printed closed form
/// divided through by `a^2`. Near `r = 1` the series
/// `sum_{k>=2} (1 - r)^(k-2) / (k(k-1))` is used instead; it equals 1/2 on
/// the identity line.
pub fn auc_closed_form(rates: ClassifierRates) -> Result<f64> {
    let a = rates.tpr();
    let c = rates.fall_out();
    if a == 0.0 || c == 0.0 {
        return Err(Error::DegenerateCurve {
            tpr: a,
            tnr: rates.tnr(),
        });
    }
    let r = c / a;
    let u = 1.0 - r;
    let auc = if u.abs() < SERIES_RADIUS {
        (2..2 + SERIES_TERMS)
            .rev()
            .fold(0.0, |acc, k| acc * u + 1.0 / f64::from(k * (k - 1)))
    } else {
        (u + r * r.ln()) / (u * u)
    };
    Ok(auc)
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "lambda must lie in (0, 1), got {lambda}"
        )))
    }
}

/// Full adequacy report; `adequate` is the strict comparison `AUC > lambda`.
pub fn is_adequate(rates: ClassifierRates, lambda: f64) -> Result<AdequacyReport> {
    check_lambda(lambda)?;
    let auc = auc_closed_form(rates)?;
    let threshold = information_threshold(rates)?;
    let phi_e = threshold.phi_e.value();
    Ok(AdequacyReport {
        rates,
        auc,
        lambda_threshold: lambda,
        adequate: auc > lambda,
        epsilon: rates.epsilon(),
        threshold,
        ratio_posterior_to_prior: if phi_e > 0.0 {
            threshold.rho_e.value() / phi_e
        } else {
            f64::INFINITY
        },
    })
}

/// Smallest sensitivity `a` for which `AUC(a, tnr) >= lambda`.
pub fn solve_min_tpr(tnr: Probability, lambda: f64) -> Result<Probability> {
    check_lambda(lambda)?;
    if tnr.value() >= 1.0 {
        return Err(Error::InvalidArgument(
            "tnr must be below 1 for the area to be defined".into(),
        ));
    }
    let gap = |a: f64| {
        auc_closed_form(ClassifierRates::from_probabilities(
            Probability::saturating(a),
            tnr,
        ))
        .map(|auc| auc - lambda)
    };
    let top = gap(1.0)?;
    if top < 0.0 {
        return Err(Error::NoSolution(format!(
            "AUC reaches only {:.6} at a = 1 with b = {}, below lambda = {lambda}",
            top + lambda,
            tnr
        )));
    }
    if gap(EDGE)? >= 0.0 {
        return Ok(Probability::saturating(EDGE));
    }
    let (_, hi) = bisect_bracket(
        |a| gap(a).unwrap_or(f64::NAN),
        EDGE,
        1.0,
        DEFAULT_BISECTION_TOL,
    )?;
    Ok(Probability::saturating(hi))
}

/// Smallest specificity `b` for which `AUC(tpr, b) >= lambda`.
pub fn solve_min_tnr(tpr: Probability, lambda: f64) -> Result<Probability> {
    check_lambda(lambda)?;
    if tpr.value() <= 0.0 {
        return Err(Error::InvalidArgument(
            "tpr must be above 0 for the area to be defined".into(),
        ));
    }
    let gap = |b: f64| {
        auc_closed_form(ClassifierRates::from_probabilities(
            tpr,
            Probability::saturating(b),
        ))
        .map(|auc| auc - lambda)
    };
    let top = 1.0 - EDGE;
    let at_top = gap(top)?;
    if at_top < 0.0 {
        return Err(Error::NoSolution(format!(
            "AUC reaches only {:.6} as b -> 1 with a = {}, below lambda = {lambda}",
            at_top + lambda,
            tpr
        )));
    }
    if gap(0.0)? >= 0.0 {
        return Ok(Probability::ZERO);
    }
    let (_, hi) = bisect_bracket(
        |b| gap(b).unwrap_or(f64::NAN),
        0.0,
        top,
        DEFAULT_BISECTION_TOL,
    )?;
    Ok(Probability::saturating(hi))
}

/// One row of the minimal-rate table.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioRow {
    pub lambda: f64,
    /// `a` held at the fixed rate, minimal `b` solved.
    pub fixed_tpr: Result<AdequacyReport>,
    /// `b` held at the fixed rate, minimal `a` solved.
    pub fixed_tnr: Result<AdequacyReport>,
}

/// Solves both scenarios for every lambda. Rows keep the input order.
pub fn scenario_table(lambdas: &[f64], fixed_rate: Probability) -> Vec<ScenarioRow> {
    lambdas
        .iter()
        .map(|&lambda| ScenarioRow {
            lambda,
            fixed_tpr: solve_min_tnr(fixed_rate, lambda).and_then(|b| {
                is_adequate(ClassifierRates::from_probabilities(fixed_rate, b), lambda)
            }),
            fixed_tnr: solve_min_tpr(fixed_rate, lambda).and_then(|a| {
                is_adequate(ClassifierRates::from_probabilities(a, fixed_rate), lambda)
            }),
        })
        .collect()
}
