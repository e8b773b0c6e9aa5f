mod cache;
mod config;
mod exit;
mod report;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use bigraph::census::{check_budget, enumerate_census, VerifyReport};
use bigraph::document::census_to_json;
use bigraph::{BinaryMatrix, Census, IsoClassRecord};
use clap::Parser;

use crate::cache::Cache;
use crate::config::{Cli, Command, RunConfig};
use crate::exit::{verdict, CliError, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Status::InvalidArguments.into()
            } else {
                Status::Ok.into()
            };
        }
    };
    let config = match RunConfig::try_from(cli) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    match run(&config) {
        Ok(status) => status.into(),
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> ExitCode {
    eprintln!("error: {e}");
    e.status().into()
}

fn run(config: &RunConfig) -> Result<Status, CliError> {
    match &config.command {
        Command::Census { m, n, k } => cmd_census(config, *m, *n, *k),
        Command::Verify { m, n, ks } => cmd_verify(config, *m, *n, ks),
        Command::Sweep { m_max, n_max } => cmd_sweep(config, *m_max, *n_max),
        Command::Class { matrix } => cmd_class(config, matrix),
    }
}

fn emit(config: &RunConfig, body: &str) -> Result<(), CliError> {
    match &config.output {
        Some(path) => write_file(path, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    std::fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn cmd_census(config: &RunConfig, m: usize, n: usize, k: usize) -> Result<Status, CliError> {
    let cache = Cache::from_config(config);
    let census = match cache.as_ref().and_then(|c| c.load(m, n, k)) {
        Some(hit) => hit,
        None => {
            let fresh = enumerate_census(m, n, k, &config.census_options())?;
            if let Some(c) = &cache {
                c.store(&fresh)?;
            }
            fresh
        }
    };
    emit(config, &report::census(&census, config.format))?;
    Ok(Status::Ok)
}

/// Fresh verification of every `(m, n, k)`, each cross-checked against a
/// cached census when one exists. A cache entry that cannot be trusted
/// counts as a conflict.
fn verify_all(
    config: &RunConfig,
    params: impl IntoIterator<Item = (usize, usize, usize)>,
) -> Result<(Vec<VerifyReport>, Vec<String>), CliError> {
    let cache = Cache::from_config(config);
    let opts = config.census_options();
    let mut reports = Vec::new();
    let mut conflicts = Vec::new();
    for (m, n, k) in params {
        let fresh: Census = enumerate_census(m, n, k, &opts)?;
        match cache.as_ref().map(|c| c.lookup(m, n, k)) {
            Some(Ok(Some(cached))) if census_to_json(&cached) != census_to_json(&fresh) => {
                conflicts.push(format!(
                    "({m}, {n}, {k}): cached census differs from a fresh run"
                ));
            }
            Some(Err(e)) => conflicts.push(format!("({m}, {n}, {k}): {e}")),
            _ => {}
        }
        reports.push(VerifyReport::from(&fresh));
    }
    Ok((reports, conflicts))
}

fn cmd_verify(config: &RunConfig, m: usize, n: usize, ks: &[usize]) -> Result<Status, CliError> {
    let params: Vec<_> = ks.iter().map(|&k| (m, n, k)).collect();
    verify_params(config, &params)
}

fn cmd_sweep(config: &RunConfig, m_max: usize, n_max: usize) -> Result<Status, CliError> {
    let params: Vec<_> = (1..=m_max)
        .flat_map(|m| (1..=n_max).flat_map(move |n| (0..=m * n).map(move |k| (m, n, k))))
        .collect();
    verify_params(config, &params)
}

/// Checks the budget for every parameter set before enumerating any of them.
fn verify_params(config: &RunConfig, params: &[(usize, usize, usize)]) -> Result<Status, CliError> {
    for &(m, n, k) in params {
        check_budget(m, n, k, config.budget)?;
    }
    let (reports, conflicts) = verify_all(config, params.iter().copied())?;
    finish_verify(config, &reports, &conflicts)
}

fn finish_verify(
    config: &RunConfig,
    reports: &[VerifyReport],
    conflicts: &[String],
) -> Result<Status, CliError> {
    emit(config, &report::verify(reports, config.mode, config.format))?;
    for c in conflicts {
        eprintln!("inconsistency: {c}");
    }
    let status = verdict(reports, config.mode, !conflicts.is_empty());
    match status {
        Status::ResidualNonzero => eprintln!(
            "finding: {} of {} parameter sets have a nonzero class-sum residual",
            reports.iter().filter(|r| !r.residual_is_zero()).count(),
            reports.len()
        ),
        Status::ExactCheckFailed => eprintln!("internal inconsistency: an exact check failed"),
        _ => {}
    }
    Ok(status)
}

fn cmd_class(config: &RunConfig, matrix: &BinaryMatrix) -> Result<Status, CliError> {
    let record = IsoClassRecord::from_representative(matrix);
    emit(config, &report::class(matrix, &record, config.format))?;
    Ok(Status::Ok)
}
