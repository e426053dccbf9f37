//! Sequential updating over an ordered list of clues, each clue treated as
//! a binary classifier of the hypothesis.
//!
//! Every posterior becomes the next prior. The chain is marked as stopped
//! at the first step where the prior has reached that clue's information
//! threshold and prior plus posterior has reached 1.

use std::fmt;

use thiserror::Error;

use crate::bayes::{information_threshold, negative_posterior, posterior};
use crate::error::Error;
use crate::rates::{ClassifierRates, Probability};

/// Slack on both halves of the stopping predicate, so a prior sitting exactly
/// on the threshold still stops despite rounding.
pub const STOP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Positive,
    Negative,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Positive => "positive",
            Outcome::Negative => "negative",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceItem {
    pub label: String,
    pub rates: ClassifierRates,
    pub outcome: Outcome,
}

impl EvidenceItem {
    pub fn new(label: impl Into<String>, rates: ClassifierRates, outcome: Outcome) -> Self {
        EvidenceItem {
            label: label.into(),
            rates,
            outcome,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainStep {
    pub label: String,
    pub outcome: Outcome,
    pub prior_before: Probability,
    pub posterior_after: Probability,
    /// Threshold of this item's own rates; `None` for `a = 0, b = 1`.
    pub phi_e: Option<Probability>,
    pub stopped_here: bool,
}

impl ChainStep {
    pub fn gain(&self) -> f64 {
        self.posterior_after.value() - self.prior_before.value()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainTrace {
    pub initial_prior: Probability,
    pub steps: Vec<ChainStep>,
    pub final_belief: Probability,
    pub stopped_at: Option<usize>,
}

/// A chain that hit an undefined update. `partial` holds every step that
/// completed before `failed_step`.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("chain aborted at step {failed_step} ({label}): {source}")]
pub struct ChainAbort {
    pub failed_step: usize,
    pub label: String,
    pub source: Error,
    pub partial: ChainTrace,
}

/// An uninformative clue (`a + b = 1`) has a flat curve and no curvature
/// maximum, so it can never trigger the stop.
fn stop_predicate(
    rates: ClassifierRates,
    prior: Probability,
    post: Probability,
    phi_e: Option<Probability>,
) -> bool {
    let Some(phi_e) = phi_e else { return false };
    !rates.is_uninformative()
        && prior.value() + post.value() >= 1.0 - STOP_TOLERANCE
        && prior.value() >= phi_e.value() - STOP_TOLERANCE
}

/// Applies the items in order. Steps after the stop are still computed;
/// only the first qualifying step is marked.
pub fn run_chain(
    initial_prior: Probability,
    items: &[EvidenceItem],
    stop_on_threshold: bool,
) -> std::result::Result<ChainTrace, ChainAbort> {
    let mut trace = ChainTrace {
        initial_prior,
        steps: Vec::with_capacity(items.len()),
        final_belief: initial_prior,
        stopped_at: None,
    };
    let invalid = |source: Error, trace: ChainTrace| ChainAbort {
        failed_step: 0,
        label: String::new(),
        source,
        partial: trace,
    };
    if items.is_empty() {
        return Err(invalid(
            Error::InvalidArgument("an evidence chain needs at least one item".into()),
            trace,
        ));
    }
    let p0 = initial_prior.value();
    if !(p0 > 0.0 && p0 < 1.0) {
        return Err(invalid(
            Error::InvalidArgument(format!("initial prior must lie in (0, 1), got {p0}")),
            trace,
        ));
    }

    let mut belief = initial_prior;
    for (index, item) in items.iter().enumerate() {
        let update = match item.outcome {
            Outcome::Positive => posterior(item.rates, belief),
            Outcome::Negative => negative_posterior(item.rates, belief),
        };
        let after = match update {
            Ok(p) => p,
            Err(source) => {
                return Err(ChainAbort {
                    failed_step: index,
                    label: item.label.clone(),
                    source,
                    partial: trace,
                })
            }
        };
        let phi_e = information_threshold(item.rates).ok().map(|t| t.phi_e);
        let stopped_here = stop_on_threshold
            && trace.stopped_at.is_none()
            && stop_predicate(item.rates, belief, after, phi_e);
        if stopped_here {
            trace.stopped_at = Some(index);
        }
        trace.steps.push(ChainStep {
            label: item.label.clone(),
            outcome: item.outcome,
            prior_before: belief,
            posterior_after: after,
            phi_e,
            stopped_here,
        });
        belief = after;
        trace.final_belief = after;
    }
    Ok(trace)
}

/// How much belief each step added, split around the stop.
#[derive(Debug, Clone, PartialEq)]
pub struct StoppingReport {
    pub stopped_at: Option<usize>,
    pub belief_at_stop: Option<Probability>,
    pub gain_at_stop: Option<f64>,
    /// Gains of the steps after the stop; empty when there was no stop.
    pub post_stop_gains: Vec<f64>,
    /// Gains of every step.
    pub gains: Vec<f64>,
}

impl StoppingReport {
    /// Whether every step after the stop added less than the stopping step.
    pub fn diminishing(&self) -> bool {
        match self.gain_at_stop {
            Some(g) => self.post_stop_gains.iter().all(|&x| x.abs() < g.abs()),
            None => false,
        }
    }
}

pub fn stopping_report(trace: &ChainTrace) -> StoppingReport {
    let gains: Vec<f64> = trace.steps.iter().map(ChainStep::gain).collect();
    match trace.stopped_at {
        Some(k) => StoppingReport {
            stopped_at: Some(k),
            belief_at_stop: Some(trace.steps[k].posterior_after),
            gain_at_stop: Some(gains[k]),
            post_stop_gains: gains[k + 1..].to_vec(),
            gains,
        },
        None => StoppingReport {
            stopped_at: None,
            belief_at_stop: None,
            gain_at_stop: None,
            post_stop_gains: Vec::new(),
            gains,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64) -> Probability {
        Probability::new(x).unwrap()
    }

    fn item(a: f64, b: f64, outcome: Outcome) -> EvidenceItem {
        EvidenceItem::new("clue", ClassifierRates::new(a, b).unwrap(), outcome)
    }

    #[test]
    fn uninformative_item_never_stops() {
        let trace = run_chain(p(0.5), &[item(0.5, 0.5, Outcome::Positive)], true).unwrap();
        assert_eq!(trace.final_belief, p(0.5));
        assert_eq!(trace.stopped_at, None);
        let report = stopping_report(&trace);
        assert_eq!(report.gains, vec![0.0]);
        assert!(report.post_stop_gains.is_empty());
        assert!(!report.diminishing());
    }

    #[test]
    fn starting_on_the_threshold_stops_immediately() {
        let rates = ClassifierRates::new(0.95, 0.99).unwrap();
        let phi_e = information_threshold(rates).unwrap().phi_e;
        let trace = run_chain(phi_e, &[item(0.95, 0.99, Outcome::Positive)], true).unwrap();
        assert!((trace.final_belief.value() - 0.907).abs() < 5e-4);
        assert_eq!(trace.stopped_at, Some(0));
        assert!(stopping_report(&trace).post_stop_gains.is_empty());
    }

    #[test]
    fn rounded_threshold_prior_falls_just_short() {
        // 0.093 < phi_e = 0.09305..., and 0.093 + rho(0.093) < 1.
        let trace = run_chain(p(0.093), &[item(0.95, 0.99, Outcome::Positive)], true).unwrap();
        assert_eq!(trace.stopped_at, None);
    }

    #[test]
    fn stop_flag_requires_opt_in() {
        let items = vec![item(0.85, 0.95, Outcome::Positive); 5];
        let trace = run_chain(p(0.01), &items, false).unwrap();
        assert_eq!(trace.stopped_at, None);
        assert!(trace.steps.iter().all(|s| !s.stopped_here));
    }

    #[test]
    fn negative_evidence_lowers_belief() {
        let trace = run_chain(p(0.6), &[item(0.8, 0.7, Outcome::Negative)], true).unwrap();
        assert!(trace.final_belief.value() < 0.6);
    }

    #[test]
    fn degenerate_update_returns_partial_trace() {
        let items = vec![
            item(0.8, 0.7, Outcome::Positive),
            item(0.0, 1.0, Outcome::Positive),
            item(0.8, 0.7, Outcome::Positive),
        ];
        let abort = run_chain(p(0.4), &items, true).unwrap_err();
        assert_eq!(abort.failed_step, 1);
        assert_eq!(abort.partial.steps.len(), 1);
        assert!(matches!(abort.source, Error::DegenerateDenominator { .. }));
    }

    #[test]
    fn rejects_empty_chain_and_extreme_prior() {
        assert!(run_chain(p(0.5), &[], true).is_err());
        assert!(run_chain(p(0.0), &[item(0.8, 0.7, Outcome::Positive)], true).is_err());
        assert!(run_chain(p(1.0), &[item(0.8, 0.7, Outcome::Positive)], true).is_err());
    }
}
