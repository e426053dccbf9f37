//! One-vs-rest reduction of a multiclass confusion matrix.

use crate::error::{Error, Result};
use crate::rates::ConfusionCounts;

/// Square confusion matrix; `cells[actual][predicted]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    cells: Vec<Vec<u64>>,
}

impl ConfusionMatrix {
    pub fn new(cells: Vec<Vec<u64>>) -> Result<Self> {
        let n = cells.len();
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "one-vs-rest needs at least 2 classes, got {n}"
            )));
        }
        if let Some((row, len)) = cells
            .iter()
            .map(Vec::len)
            .enumerate()
            .find(|&(_, len)| len != n)
        {
            return Err(Error::InvalidArgument(format!(
                "confusion matrix must be square: row {row} has {len} cells, expected {n}"
            )));
        }
        Ok(ConfusionMatrix { cells })
    }

    pub fn classes(&self) -> usize {
        self.cells.len()
    }

    pub fn total(&self) -> u64 {
        self.cells.iter().flatten().sum()
    }

    pub fn get(&self, actual: usize, predicted: usize) -> u64 {
        self.cells[actual][predicted]
    }
}

/// Collapses every class other than `target` into a single negative class.
pub fn one_vs_rest(matrix: &ConfusionMatrix, target: usize) -> Result<ConfusionCounts> {
    let n = matrix.classes();
    if target >= n {
        return Err(Error::IndexOutOfRange {
            index: target,
            classes: n,
        });
    }
    let mut counts = ConfusionCounts::default();
    for (actual, row) in matrix.cells.iter().enumerate() {
        for (predicted, &count) in row.iter().enumerate() {
            match (actual == target, predicted == target) {
                (true, true) => counts.tp += count,
                (true, false) => counts.fn_ += count,
                (false, true) => counts.fp += count,
                (false, false) => counts.tn += count,
            }
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_classifier_stays_perfect() {
        let m = ConfusionMatrix::new(vec![vec![5, 0, 0], vec![0, 7, 0], vec![0, 0, 9]]).unwrap();
        let c = one_vs_rest(&m, 0).unwrap();
        assert_eq!(c, ConfusionCounts::new(5, 0, 0, 16));
    }

    #[test]
    fn rejects_bad_shapes_and_indices() {
        assert!(ConfusionMatrix::new(vec![vec![1]]).is_err());
        assert!(ConfusionMatrix::new(vec![vec![1, 2], vec![3]]).is_err());
        let m = ConfusionMatrix::new(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(
            one_vs_rest(&m, 2),
            Err(Error::IndexOutOfRange {
                index: 2,
                classes: 2
            })
        );
    }
}
