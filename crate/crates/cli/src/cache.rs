//! On-disk census cache: one `m-n-k.json` file per parameter set.

use std::path::PathBuf;

use bigraph::document::{census_from_json, census_to_json};
use bigraph::Census;

use crate::config::RunConfig;
use crate::exit::CliError;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_config(config: &RunConfig) -> Option<Self> {
        config.cache_dir.clone().map(|dir| Self { dir })
    }

    fn path(&self, m: usize, n: usize, k: usize) -> PathBuf {
        self.dir.join(format!("{m}-{n}-{k}.json"))
    }

    /// The cached census for `(m, n, k)`: `Ok(None)` when there is no entry,
    /// `Err` with a reason when the entry exists but cannot be trusted.
    pub fn lookup(&self, m: usize, n: usize, k: usize) -> Result<Option<Census>, String> {
        let path = self.path(m, n, k);
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(format!("{}: {e}", path.display())),
        };
        match census_from_json(&bytes) {
            Ok(c) if (c.m, c.n, c.k) != (m, n, k) => Err(format!(
                "{}: parameters do not match its name",
                path.display()
            )),
            Ok(c) if !(c.exact_partition_ok && c.eq2_exact_ok) => Err(format!(
                "{}: classes do not account for every matrix",
                path.display()
            )),
            Ok(c) => Ok(Some(c)),
            Err(e) => Err(format!("{}: {e}", path.display())),
        }
    }

    /// Like [`Cache::lookup`], but untrusted entries are reported and treated
    /// as misses.
    pub fn load(&self, m: usize, n: usize, k: usize) -> Option<Census> {
        self.lookup(m, n, k).unwrap_or_else(|e| {
            eprintln!("warning: ignoring {e}");
            None
        })
    }

    pub fn store(&self, census: &Census) -> Result<(), CliError> {
        std::fs::create_dir_all(&self.dir)
            .map_err(|e| CliError::Io(format!("{}: {e}", self.dir.display())))?;
        let path = self.path(census.m, census.n, census.k);
        std::fs::write(&path, census_to_json(census))
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}
