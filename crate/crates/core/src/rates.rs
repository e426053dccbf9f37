//! Value types shared by every module: probabilities, classifier rates and
//! 2x2 confusion counts.

use std::fmt;

use crate::error::{Error, Result};

/// A real number in `[0, 1]`. Used for priors, posteriors and rates.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub const ZERO: Probability = Probability(0.0);
    pub const ONE: Probability = Probability(1.0);

    pub fn new(value: f64) -> Result<Self> {
        Self::named("probability", value)
    }

    /// Like [`Probability::new`], but the error names the offending input.
    pub fn named(name: &'static str, value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Probability(value))
        } else {
            Err(Error::InvalidProbability { name, value })
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - p`.
    #[inline]
    pub fn complement(self) -> Probability {
        Probability(1.0 - self.0)
    }

    /// Clamps a computed value that may have drifted a few ulps outside
    /// the unit interval.
    pub(crate) fn saturating(value: f64) -> Probability {
        Probability(value.clamp(0.0, 1.0))
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Probability::new(value)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

/// True positive rate `a` and true negative rate `b` of a binary classifier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifierRates {
    tpr: Probability,
    tnr: Probability,
}

impl ClassifierRates {
    pub fn new(tpr: f64, tnr: f64) -> Result<Self> {
        Ok(ClassifierRates {
            tpr: Probability::named("tpr", tpr)?,
            tnr: Probability::named("tnr", tnr)?,
        })
    }

    pub fn from_probabilities(tpr: Probability, tnr: Probability) -> Self {
        ClassifierRates { tpr, tnr }
    }

    /// Sensitivity, `a`.
    #[inline]
    pub fn tpr(&self) -> f64 {
        self.tpr.value()
    }

    /// Specificity, `b`.
    #[inline]
    pub fn tnr(&self) -> f64 {
        self.tnr.value()
    }

    /// False positive rate `c = 1 - b`.
    #[inline]
    pub fn fall_out(&self) -> f64 {
        1.0 - self.tnr()
    }

    /// Youden's J, `a + b - 1`.
    #[inline]
    pub fn youden_j(&self) -> f64 {
        self.tpr() + self.tnr() - 1.0
    }

    /// `a + b`.
    #[inline]
    pub fn epsilon(&self) -> f64 {
        self.tpr() + self.tnr()
    }

    /// Positive likelihood ratio `a / (1 - b)`.
    pub fn lr_positive(&self) -> Result<f64> {
        let c = self.fall_out();
        if c == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.tpr() / c)
    }

    /// True when the prior/posterior curve is the identity line (`a = 1 - b`).
    #[inline]
    pub fn is_uninformative(&self) -> bool {
        self.tpr() == self.fall_out()
    }

    /// The same classifier with sensitivity and specificity exchanged.
    pub fn swapped(&self) -> ClassifierRates {
        ClassifierRates {
            tpr: self.tnr,
            tnr: self.tpr,
        }
    }
}

impl fmt::Display for ClassifierRates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={})", self.tpr(), self.tnr())
    }
}

/// Cells of a 2x2 confusion matrix.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
    pub tn: u64,
}

impl ConfusionCounts {
    pub fn new(tp: u64, fp: u64, fn_: u64, tn: u64) -> Self {
        ConfusionCounts { tp, fp, fn_, tn }
    }

    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.fn_ + self.tn
    }

    /// Ground-truth positives, `tp + fn`.
    pub fn positives(&self) -> u64 {
        self.tp + self.fn_
    }

    /// Ground-truth negatives, `tn + fp`.
    pub fn negatives(&self) -> u64 {
        self.tn + self.fp
    }
}

/// `a = tp / (tp + fn)`, `b = tn / (tn + fp)`.
pub fn rates_from_counts(counts: &ConfusionCounts) -> Result<ClassifierRates> {
    if counts.positives() == 0 {
        return Err(Error::EmptyClass { class: "positive" });
    }
    if counts.negatives() == 0 {
        return Err(Error::EmptyClass { class: "negative" });
    }
    let a = counts.tp as f64 / counts.positives() as f64;
    let b = counts.tn as f64 / counts.negatives() as f64;
    ClassifierRates::new(a, b)
}
