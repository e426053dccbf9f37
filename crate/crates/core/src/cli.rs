//! Command-line front end. Exit codes: 0 success, 1 validation error,
//! 2 no solution, 3 I/O error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adequacy::{is_adequate, solve_min_tnr, solve_min_tpr};
use crate::bayes::{information_threshold, posterior, LimitCase};
use crate::chain::{run_chain, stopping_report, ChainTrace};
use crate::config::{ChainConfig, ConfigError};
use crate::error::Error;
use crate::oracles::simulate_confusion;
use crate::rates::{ClassifierRates, Probability};
use crate::report::{render_curve_svg, render_tables, sample_curve, write_curve_csv, SvgOptions};

#[derive(Debug, Parser)]
#[command(
    name = "info-threshold",
    version,
    about = "Information thresholds, curve adequacy and evidence chains for binary classifiers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RatesArgs {
    /// True positive rate (sensitivity), a
    #[arg(long, allow_negative_numbers = true)]
    pub tpr: f64,
    /// True negative rate (specificity), b
    #[arg(long, allow_negative_numbers = true)]
    pub tnr: f64,
}

impl RatesArgs {
    fn rates(&self) -> Result<ClassifierRates, CliError> {
        Ok(ClassifierRates::new(self.tpr, self.tnr)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the information threshold and related statistics
    Threshold(RatesArgs),
    /// Export the sampled prior/posterior curve as CSV or SVG
    Curve {
        #[command(flatten)]
        rates: RatesArgs,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out the threshold marker in SVG output
        #[arg(long)]
        no_annotate: bool,
    },
    /// Recompute the reference tables and flag disagreements
    Tables,
    /// Area under the curve against an adequacy level lambda
    Adequacy {
        #[command(flatten)]
        rates: RatesArgs,
        #[arg(long)]
        lambda: f64,
    },
    /// Minimal rate reaching lambda with the other rate fixed, e.g. --fix tnr=0.99
    Solve {
        /// The held rate, as tpr=<value> or tnr=<value>
        #[arg(long, value_parser = parse_fix)]
        fix: FixedRate,
        #[arg(long)]
        lambda: f64,
    },
    /// Run an evidence chain defined in a TOML file
    Chain {
        /// Path to the chain definition
        #[arg(long)]
        config: PathBuf,
    },
    /// Monte Carlo estimate of the posterior from a simulated confusion table
    Simulate {
        #[command(flatten)]
        rates: RatesArgs,
        /// Share of true positives in the simulated population
        #[arg(long)]
        prevalence: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FixedRate {
    Tpr(f64),
    Tnr(f64),
}

fn parse_fix(s: &str) -> Result<FixedRate, String> {
    let (side, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected tpr=<value> or tnr=<value>, got {s:?}"))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {value:?}"))?;
    match side.trim() {
        "tpr" | "a" => Ok(FixedRate::Tpr(value)),
        "tnr" | "b" => Ok(FixedRate::Tnr(value)),
        other => Err(format!("unknown rate {other:?}, expected tpr or tnr")),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    NoSolution(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::NoSolution(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_no_solution() {
            CliError::NoSolution(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::Io { .. } => CliError::Io(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Threshold(rates) => cmd_threshold(rates.rates()?, out),
        Command::Curve {
            rates,
            step,
            format,
            out: path,
            no_annotate,
        } => cmd_curve(rates.rates()?, step, format, path, !no_annotate, out),
        Command::Tables => {
            out.write_all(render_tables()?.as_bytes())?;
            Ok(())
        }
        Command::Adequacy { rates, lambda } => cmd_adequacy(rates.rates()?, lambda, out),
        Command::Solve { fix, lambda } => cmd_solve(fix, lambda, out),
        Command::Chain { config } => cmd_chain(&ChainConfig::from_path(config)?, out),
        Command::Simulate {
            rates,
            prevalence,
            samples,
            seed,
        } => cmd_simulate(
            rates.rates()?,
            Probability::named("prevalence", prevalence)?,
            samples,
            seed,
            out,
        ),
    }
}

fn fmt_ratio(x: Result<f64, Error>) -> String {
    match x {
        Ok(v) => format!("{v:.3}"),
        Err(_) => "inf".into(),
    }
}

fn cmd_threshold(rates: ClassifierRates, out: &mut dyn Write) -> Result<(), CliError> {
    let t = information_threshold(rates)?;
    writeln!(out, "tpr        {:.3}", rates.tpr())?;
    writeln!(out, "tnr        {:.3}", rates.tnr())?;
    writeln!(out, "phi_e      {:.3}", t.phi_e.value())?;
    writeln!(out, "rho_e      {:.3}", t.rho_e.value())?;
    writeln!(out, "kappa_max  {:.6}", t.kappa_max)?;
    writeln!(out, "youden_j   {:.3}", rates.youden_j())?;
    writeln!(out, "epsilon    {:.3}", rates.epsilon())?;
    writeln!(out, "lr_plus    {}", fmt_ratio(rates.lr_positive()))?;
    writeln!(out, "sum        {:.3}", t.sum())?;
    match t.limit {
        Some(LimitCase::NoFalsePositives) => writeln!(
            out,
            "note       limit case: b = 1, the curve is a step at phi = 0"
        )?,
        Some(LimitCase::NoTruePositives) => writeln!(
            out,
            "note       limit case: a = 0, the curve is a step at phi = 1"
        )?,
        None => {}
    }
    Ok(())
}

fn cmd_curve(
    rates: ClassifierRates,
    step: f64,
    format: Format,
    path: Option<PathBuf>,
    annotate: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    if !(step > 0.0 && step <= 0.1) {
        return Err(CliError::Validation(format!(
            "--step must lie in (0, 0.1], got {step}"
        )));
    }
    let sample = sample_curve(rates, step)?;
    let body = match format {
        Format::Csv => write_curve_csv(&sample),
        Format::Svg => render_curve_svg(
            &sample,
            &SvgOptions {
                annotate_threshold: annotate,
                ..SvgOptions::default()
            },
        )?,
    };
    match path {
        Some(p) => std::fs::write(&p, body)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display())))?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn cmd_adequacy(rates: ClassifierRates, lambda: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let rep = is_adequate(rates, lambda)?;
    writeln!(out, "tpr        {:.3}", rates.tpr())?;
    writeln!(out, "tnr        {:.3}", rates.tnr())?;
    writeln!(out, "auc        {:.6}", rep.auc)?;
    writeln!(out, "lambda     {}", rep.lambda_threshold)?;
    writeln!(out, "adequate   {}", rep.adequate)?;
    writeln!(out, "epsilon    {:.3}", rep.epsilon)?;
    writeln!(out, "phi_e      {:.3}", rep.threshold.phi_e.value())?;
    writeln!(out, "rho_e      {:.3}", rep.threshold.rho_e.value())?;
    writeln!(
        out,
        "ratio      {:.3} ({})",
        rep.ratio_posterior_to_prior,
        rep.ratio_label()
    )?;
    Ok(())
}

fn cmd_solve(fix: FixedRate, lambda: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let rates = match fix {
        FixedRate::Tnr(b) => {
            let b = Probability::named("tnr", b)?;
            let a = solve_min_tpr(b, lambda)?;
            writeln!(out, "min tpr    {:.6}", a.value())?;
            ClassifierRates::from_probabilities(a, b)
        }
        FixedRate::Tpr(a) => {
            let a = Probability::named("tpr", a)?;
            let b = solve_min_tnr(a, lambda)?;
            writeln!(out, "min tnr    {:.6}", b.value())?;
            ClassifierRates::from_probabilities(a, b)
        }
    };
    let rep = is_adequate(rates, lambda)?;
    writeln!(out, "auc        {:.6}", rep.auc)?;
    writeln!(out, "epsilon    {:.3}", rep.epsilon)?;
    writeln!(out, "phi_e      {:.3}", rep.threshold.phi_e.value())?;
    writeln!(out, "ratio      {}", rep.ratio_label())?;
    Ok(())
}

fn print_trace(trace: &ChainTrace, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "initial prior {:.3}", trace.initial_prior.value())?;
    writeln!(
        out,
        "{:>4}  {:<28} {:>8} {:>7} {:>9} {:>7} {:>7}  stop",
        "step", "clue", "outcome", "prior", "posterior", "phi_e", "gain"
    )?;
    for (i, s) in trace.steps.iter().enumerate() {
        let phi_e = s
            .phi_e
            .map(|p| format!("{:.3}", p.value()))
            .unwrap_or_else(|| "n/a".into());
        writeln!(
            out,
            "{:>4}  {:<28} {:>8} {:>7.3} {:>9.3} {:>7} {:>+7.3}  {}",
            i,
            s.label,
            s.outcome.to_string(),
            s.prior_before.value(),
            s.posterior_after.value(),
            phi_e,
            s.gain(),
            if s.stopped_here { "*" } else { "" }
        )?;
    }
    Ok(())
}

fn cmd_chain(config: &ChainConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let trace = match run_chain(
        config.initial_prior,
        &config.items,
        config.stop_on_threshold,
    ) {
        Ok(trace) => trace,
        Err(abort) => {
            print_trace(&abort.partial, out)?;
            return Err(CliError::Validation(abort.to_string()));
        }
    };
    print_trace(&trace, out)?;
    writeln!(out, "final belief  {:.3}", trace.final_belief.value())?;
    let report = stopping_report(&trace);
    match (
        report.stopped_at,
        report.belief_at_stop,
        report.gain_at_stop,
    ) {
        (Some(k), Some(belief), Some(gain)) => {
            writeln!(
                out,
                "stopped at step {k} ({}): belief {:.3}, gain {:+.3}",
                trace.steps[k].label,
                belief.value(),
                gain
            )?;
            let later: Vec<String> = report
                .post_stop_gains
                .iter()
                .map(|g| format!("{g:+.4}"))
                .collect();
            writeln!(
                out,
                "gains after stop: [{}]{}",
                later.join(", "),
                if report.diminishing() {
                    " (all smaller than at the stop)"
                } else {
                    ""
                }
            )?;
        }
        _ => {
            writeln!(out, "no stop: the information threshold was not reached")?;
        }
    }
    Ok(())
}

fn cmd_simulate(
    rates: ClassifierRates,
    prevalence: Probability,
    samples: u64,
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let rep = simulate_confusion(rates, prevalence, samples, seed)?;
    let opt = |p: Option<Probability>| {
        p.map(|p| format!("{:.6}", p.value()))
            .unwrap_or_else(|| "n/a".into())
    };
    let c = rep.counts;
    writeln!(out, "generator  {} (seed {})", rep.generator, rep.seed)?;
    writeln!(out, "samples    {}", rep.n_samples)?;
    writeln!(out, "prevalence {}", rep.prevalence.value())?;
    writeln!(out, "tp fp fn tn {} {} {} {}", c.tp, c.fp, c.fn_, c.tn)?;
    writeln!(out, "ppv        {}", opt(rep.empirical_ppv))?;
    writeln!(out, "tpr        {}", opt(rep.empirical_tpr))?;
    writeln!(out, "tnr        {}", opt(rep.empirical_tnr))?;
    match posterior(rates, prevalence) {
        Ok(rho) => writeln!(out, "analytic   {:.6}", rho.value())?,
        Err(_) => writeln!(out, "analytic   n/a")?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fix_flag_parsing() {
        assert_eq!(parse_fix("tnr=0.99"), Ok(FixedRate::Tnr(0.99)));
        assert_eq!(parse_fix("tpr = 0.5"), Ok(FixedRate::Tpr(0.5)));
        assert!(parse_fix("0.99").is_err());
        assert!(parse_fix("sens=0.9").is_err());
        assert!(parse_fix("tpr=x").is_err());
    }

    #[test]
    fn error_to_exit_code() {
        assert_eq!(CliError::from(Error::UndefinedThreshold).exit_code(), 1);
        assert_eq!(CliError::from(Error::NoSolution("x".into())).exit_code(), 2);
        let io = std::io::Error::new(std::io::ErrorKind::NotFound, "gone");
        assert_eq!(CliError::from(io).exit_code(), 3);
    }
}
