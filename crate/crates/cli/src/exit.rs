use std::process::ExitCode;

use bigraph::census::VerifyReport;
use bigraph::Error;
use thiserror::Error;

use crate::config::Mode;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    InvalidArguments = 1,
    /// A class-sum residual is nonzero. A result, not a failure.
    ResidualNonzero = 2,
    /// An identity that must always hold did not, or a cache disagrees.
    ExactCheckFailed = 3,
    BudgetExceeded = 4,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Census(#[from] Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Usage(_) | CliError::Io(_) => Status::InvalidArguments,
            CliError::Census(Error::BudgetExceeded { .. }) => Status::BudgetExceeded,
            CliError::Census(Error::Inconsistent(_)) => Status::ExactCheckFailed,
            CliError::Census(_) => Status::InvalidArguments,
        }
    }
}

/// Exit status of a verification run. Exact-check failures and cache
/// conflicts outrank a nonzero residual; residuals only count when the mode
/// includes the class-sum identity.
pub fn verdict(reports: &[VerifyReport], mode: Mode, cache_conflict: bool) -> Status {
    if cache_conflict || reports.iter().any(|r| !r.unconditional_ok()) {
        Status::ExactCheckFailed
    } else if mode.includes_paper() && reports.iter().any(|r| !r.residual_is_zero()) {
        Status::ResidualNonzero
    } else {
        Status::Ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bigraph::census::{verify_identity, CensusOptions};

    fn report(m: usize, n: usize, k: usize) -> VerifyReport {
        verify_identity(m, n, k, &CensusOptions::default()).unwrap()
    }

    #[test]
    fn clean_and_finding() {
        let zero = report(2, 2, 1);
        let finding = report(2, 2, 2);
        assert_eq!(verdict(std::slice::from_ref(&zero), Mode::Both, false), Status::Ok);
        assert_eq!(
            verdict(&[zero.clone(), finding.clone()], Mode::Both, false),
            Status::ResidualNonzero
        );
        assert_eq!(
            verdict(std::slice::from_ref(&finding), Mode::Paper, false),
            Status::ResidualNonzero
        );
        assert_eq!(verdict(&[finding], Mode::Exact, false), Status::Ok);
    }

    #[test]
    fn injected_exact_failures_exit_3() {
        let finding = report(2, 2, 2);
        let mut broken_partition = report(2, 2, 1);
        broken_partition.exact_partition_ok = false;
        let mut broken_eq2 = report(2, 2, 1);
        broken_eq2.eq2_exact_ok = false;
        for mode in [Mode::Paper, Mode::Exact, Mode::Both] {
            assert_eq!(
                verdict(&[finding.clone(), broken_partition.clone()], mode, false),
                Status::ExactCheckFailed
            );
            assert_eq!(
                verdict(&[broken_eq2.clone()], mode, false),
                Status::ExactCheckFailed
            );
            assert_eq!(
                verdict(&[report(1, 1, 0)], mode, true),
                Status::ExactCheckFailed
            );
        }
    }

    #[test]
    fn error_statuses() {
        let budget = CliError::from(Error::BudgetExceeded {
            cells: 4,
            k: 2,
            count: "6".into(),
            budget: 1,
        });
        assert_eq!(budget.status(), Status::BudgetExceeded);
        assert_eq!(
            CliError::from(Error::Inconsistent("x".into())).status(),
            Status::ExactCheckFailed
        );
        assert_eq!(
            CliError::Usage("x".into()).status(),
            Status::InvalidArguments
        );
    }
}
