//! TOML definition of an evidence chain.
//!
//! ```toml
//! version = 1
//! initial_prior = 0.25
//! stop_on_threshold = true    # optional, defaults to true
//!
//! [[items]]
//! label = "holding hands"
//! tpr = 0.80
//! tnr = 0.70
//! outcome = "positive"        # or "negative"
//! ```

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;
use toml::Spanned;

use crate::chain::{EvidenceItem, Outcome};
use crate::rates::{ClassifierRates, Probability};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChain {
    version: Spanned<u32>,
    initial_prior: Spanned<f64>,
    #[serde(default = "default_stop")]
    stop_on_threshold: bool,
    items: Spanned<Vec<Spanned<RawItem>>>,
}

fn default_stop() -> bool {
    true
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawItem {
    label: String,
    tpr: Spanned<f64>,
    tnr: Spanned<f64>,
    outcome: Spanned<String>,
}

/// A validated chain definition.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainConfig {
    pub initial_prior: Probability,
    pub stop_on_threshold: bool,
    pub items: Vec<EvidenceItem>,
}

impl ChainConfig {
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let raw: RawChain = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        let line_of = |offset: usize| text[..offset.min(text.len())].matches('\n').count() + 1;
        let invalid = |offset: usize, message: String| ConfigError::Invalid {
            line: line_of(offset),
            message,
        };

        if *raw.version.get_ref() != SCHEMA_VERSION {
            return Err(invalid(
                raw.version.span().start,
                format!(
                    "unsupported version {}, expected {SCHEMA_VERSION}",
                    raw.version.get_ref()
                ),
            ));
        }
        let p0 = *raw.initial_prior.get_ref();
        if !(p0 > 0.0 && p0 < 1.0) {
            return Err(invalid(
                raw.initial_prior.span().start,
                format!("initial_prior must lie in (0, 1), got {p0}"),
            ));
        }
        if raw.items.get_ref().is_empty() {
            return Err(invalid(
                raw.items.span().start,
                "items must list at least one clue".into(),
            ));
        }

        let mut items = Vec::with_capacity(raw.items.get_ref().len());
        for (index, spanned) in raw.items.into_inner().into_iter().enumerate() {
            let item = spanned.into_inner();
            let tpr = Probability::named("tpr", *item.tpr.get_ref())
                .map_err(|e| invalid(item.tpr.span().start, format!("item {index}: {e}")))?;
            let tnr = Probability::named("tnr", *item.tnr.get_ref())
                .map_err(|e| invalid(item.tnr.span().start, format!("item {index}: {e}")))?;
            let outcome = match item.outcome.get_ref().as_str() {
                "positive" => Outcome::Positive,
                "negative" => Outcome::Negative,
                other => return Err(invalid(
                    item.outcome.span().start,
                    format!(
                        "item {index}: outcome must be \"positive\" or \"negative\", got {other:?}"
                    ),
                )),
            };
            items.push(EvidenceItem::new(
                item.label,
                ClassifierRates::from_probabilities(tpr, tnr),
                outcome,
            ));
        }

        Ok(ChainConfig {
            initial_prior: Probability::saturating(p0),
            stop_on_threshold: raw.stop_on_threshold,
            items,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = r#"
version = 1
initial_prior = 0.3

[[items]]
label = "a"
tpr = 0.8
tnr = 0.7
outcome = "positive"

[[items]]
label = "b"
tpr = 0.6
tnr = 0.9
outcome = "negative"
"#;

    #[test]
    fn parses_items_in_order() {
        let cfg = ChainConfig::parse(GOOD).unwrap();
        assert_eq!(cfg.initial_prior.value(), 0.3);
        assert!(cfg.stop_on_threshold);
        assert_eq!(cfg.items.len(), 2);
        assert_eq!(cfg.items[1].label, "b");
        assert_eq!(cfg.items[1].outcome, Outcome::Negative);
        assert_eq!(cfg.items[1].rates.tnr(), 0.9);
    }

    #[test]
    fn out_of_range_rate_reports_its_line() {
        let bad = GOOD.replace("tnr = 0.9", "tnr = 1.9");
        match ChainConfig::parse(&bad) {
            Err(ConfigError::Invalid { line, message }) => {
                assert_eq!(line, 14);
                assert!(message.contains("item 1"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_outcome() {
        let bad = GOOD.replace("\"negative\"", "\"maybe\"");
        assert!(matches!(
            ChainConfig::parse(&bad),
            Err(ConfigError::Invalid { line: 15, .. })
        ));
    }

    #[test]
    fn syntax_errors_and_missing_keys() {
        assert!(matches!(
            ChainConfig::parse("version = 1\ninitial_prior = [\n"),
            Err(ConfigError::Parse(_))
        ));
        assert!(matches!(
            ChainConfig::parse("version = 1\ninitial_prior = 0.3\n"),
            Err(ConfigError::Parse(_))
        ));
        assert!(matches!(
            ChainConfig::parse(&GOOD.replace("version = 1", "version = 2")),
            Err(ConfigError::Invalid { line: 2, .. })
        ));
        assert!(matches!(
            ChainConfig::parse(&GOOD.replace("initial_prior = 0.3", "initial_prior = 1.0")),
            Err(ConfigError::Invalid { line: 3, .. })
        ));
    }
}
