//! Prior/posterior curves of binary classifiers.
//!
//! * [`bayes`]: the curve, its derivatives and curvature, and the
//!   information threshold where prior and posterior sum to one.
//! * [`oracles`]: brute-force numerical checks of the closed forms.
//! * [`adequacy`]: area under the curve and minimal-rate solvers.
//! * [`chain`]: sequential updating with a threshold stopping rule.
//! * [`report`] and [`cli`]: CSV/SVG export, table reproduction and the
//!   command-line front end.

pub mod adequacy;
pub mod bayes;
pub mod chain;
pub mod cli;
pub mod config;
pub mod error;
pub mod multiclass;
pub mod oracles;
pub mod rates;
pub mod report;

pub use bayes::{
    curvature, information_threshold, lr_positive, negative_posterior, posterior,
    posterior_derivative, posterior_second_derivative, youden_j, LimitCase, ThresholdPoint,
};
pub use error::{Error, Result};
pub use rates::{rates_from_counts, ClassifierRates, ConfusionCounts, Probability};
