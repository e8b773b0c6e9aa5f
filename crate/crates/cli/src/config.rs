use std::path::PathBuf;

use bigraph::canonical::MAX_SEARCH_ROWS;
use bigraph::census::{CensusOptions, DEFAULT_BUDGET, MAX_CELLS};
use bigraph::BinaryMatrix;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::exit::CliError;

/// Exact census of bipartite graphs up to isomorphism.
#[derive(Debug, Parser)]
#[command(name = "bigraph", version)]
pub struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Enumerate all classes for one (m, n, k).
    Census {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        ones: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the class-sum identities for one (m, n, k) or all k.
    Verify {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, required_unless_present = "all_k", conflicts_with = "all_k")]
        ones: Option<usize>,
        #[arg(long)]
        all_k: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Verify every 1 <= m <= rows, 1 <= n <= cols, 0 <= k <= mn.
    Sweep {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        common: Common,
    },
    /// Characteristics of a single matrix such as "01|10".
    Class {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
struct Shape {
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    /// Defaults to json for census, text otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, env = "BIGRAPH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads, 0 = one per core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Only the `Σ 1/∏δ!` identity.
    Paper,
    /// Only the orbit partition and stabilizer identities.
    Exact,
    Both,
}

impl Mode {
    pub fn includes_paper(self) -> bool {
        matches!(self, Mode::Paper | Mode::Both)
    }

    pub fn includes_exact(self) -> bool {
        matches!(self, Mode::Exact | Mode::Both)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Census { m: usize, n: usize, k: usize },
    Verify { m: usize, n: usize, ks: Vec<usize> },
    Sweep { m_max: usize, n_max: usize },
    Class { matrix: BinaryMatrix },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub mode: Mode,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub budget: u64,
    pub threads: usize,
}

impl RunConfig {
    pub fn census_options(&self) -> CensusOptions {
        CensusOptions {
            budget: self.budget,
            threads: self.threads,
        }
    }
}

fn check_shape(rows: usize, cols: usize) -> Result<(), CliError> {
    let ok = (1..=MAX_SEARCH_ROWS).contains(&rows)
        && cols >= 1
        && rows.checked_mul(cols).is_some_and(|c| c <= MAX_CELLS);
    if ok {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--rows {rows} --cols {cols} is outside the supported range \
             (1 <= rows <= {MAX_SEARCH_ROWS}, rows * cols <= {MAX_CELLS})"
        )))
    }
}

fn check_ones(rows: usize, cols: usize, k: usize) -> Result<(), CliError> {
    if k > rows * cols {
        return Err(CliError::Usage(format!(
            "--ones {k} exceeds rows * cols = {}",
            rows * cols
        )));
    }
    Ok(())
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let (command, common, default_format) = match cli.command {
            CliCommand::Census {
                shape: Shape { rows, cols },
                ones,
                common,
            } => {
                check_shape(rows, cols)?;
                check_ones(rows, cols, ones)?;
                let c = Command::Census {
                    m: rows,
                    n: cols,
                    k: ones,
                };
                (c, common, Format::Json)
            }
            CliCommand::Verify {
                shape: Shape { rows, cols },
                ones,
                all_k,
                common,
            } => {
                check_shape(rows, cols)?;
                let ks = match ones {
                    Some(k) if !all_k => {
                        check_ones(rows, cols, k)?;
                        vec![k]
                    }
                    _ => (0..=rows * cols).collect(),
                };
                let c = Command::Verify {
                    m: rows,
                    n: cols,
                    ks,
                };
                (c, common, Format::Text)
            }
            CliCommand::Sweep {
                shape: Shape { rows, cols },
                common,
            } => {
                check_shape(rows, cols)?;
                let c = Command::Sweep {
                    m_max: rows,
                    n_max: cols,
                };
                (c, common, Format::Text)
            }
            CliCommand::Class { matrix, common } => {
                let matrix: BinaryMatrix = matrix
                    .trim()
                    .parse()
                    .map_err(|e| CliError::Usage(format!("--matrix: {e}")))?;
                if matrix.num_rows() > MAX_SEARCH_ROWS {
                    return Err(CliError::Usage(format!(
                        "--matrix has {} rows; at most {MAX_SEARCH_ROWS} are supported",
                        matrix.num_rows()
                    )));
                }
                (Command::Class { matrix }, common, Format::Text)
            }
        };
        let format = common.format.unwrap_or(default_format);
        if format == Format::Csv && !matches!(command, Command::Census { .. }) {
            return Err(CliError::Usage(
                "--format csv is only available for census".into(),
            ));
        }
        Ok(Self {
            command,
            mode: common.mode,
            format,
            output: common.output,
            cache_dir: common.cache_dir,
            budget: common.budget,
            threads: common.threads,
        })
    }
}
