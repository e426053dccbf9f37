use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rates::{ClassifierRates, ConfusionCounts, Probability};

/// Name of the generator behind [`simulate_confusion`].
pub const GENERATOR: &str = "ChaCha8Rng";

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationReport {
    pub n_samples: u64,
    pub prevalence: Probability,
    pub counts: ConfusionCounts,
    /// `tp / (tp + fp)`; `None` when nothing was classified positive.
    pub empirical_ppv: Option<Probability>,
    /// `None` when the sample held no positives.
    pub empirical_tpr: Option<Probability>,
    /// `None` when the sample held no negatives.
    pub empirical_tnr: Option<Probability>,
    pub seed: u64,
    pub generator: &'static str,
}

fn ratio(num: u64, den: u64) -> Option<Probability> {
    (den > 0).then(|| Probability::saturating(num as f64 / den as f64))
}

/// Draws `n` ground-truth labels at `prevalence`, classifies each with
/// sensitivity `a` and specificity `b`, and tallies the 2x2 table.
pub fn simulate_confusion(
    rates: ClassifierRates,
    prevalence: Probability,
    n: u64,
    seed: u64,
) -> Result<SimulationReport> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "simulation needs at least one sample".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (phi, a, b) = (prevalence.value(), rates.tpr(), rates.tnr());
    let mut counts = ConfusionCounts::default();
    for _ in 0..n {
        let actual = rng.random::<f64>() < phi;
        let draw = rng.random::<f64>();
        match (actual, if actual { draw < a } else { draw < b }) {
            (true, true) => counts.tp += 1,
            (true, false) => counts.fn_ += 1,
            (false, true) => counts.tn += 1,
            (false, false) => counts.fp += 1,
        }
    }
    Ok(SimulationReport {
        n_samples: n,
        prevalence,
        counts,
        empirical_ppv: ratio(counts.tp, counts.tp + counts.fp),
        empirical_tpr: ratio(counts.tp, counts.positives()),
        empirical_tnr: ratio(counts.tn, counts.negatives()),
        seed,
        generator: GENERATOR,
    })
}
