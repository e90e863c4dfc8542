//! Run configuration, read from TOML.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// largest group order accepted on ingestion
    pub group_cap: usize,
    /// largest number of subgroups enumerated for a `p`-group
    pub lattice_cap: usize,
    /// worker threads for corpus runs; 0 means one per core
    pub parallelism: usize,
    /// where `verify` writes its JSON report when `--json` is absent
    pub report_path: Option<PathBuf>,
    /// directory of group files replacing the bundled corpus
    pub corpus_dir: Option<PathBuf>,
    /// record wall-clock milliseconds per check (reports are then no
    /// longer byte-identical across runs)
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            group_cap: 500,
            lattice_cap: 20000,
            parallelism: 0,
            report_path: None,
            corpus_dir: None,
            timings: false,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        let c: Config = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.group_cap == 0 || self.lattice_cap == 0 {
            return Err(Error::Parse("caps must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_defaults() {
        assert_eq!(Config::from_toml("").unwrap(), Config::default());
        let c = Config::from_toml("group_cap = 100\ntimings = true\ncorpus_dir = \"groups\"").unwrap();
        assert_eq!((c.group_cap, c.lattice_cap, c.timings), (100, 20000, true));
        assert_eq!(c.corpus_dir.as_deref(), Some(Path::new("groups")));
        assert!(Config::from_toml("group_cap = 0").is_err());
        assert!(Config::from_toml("colour = 1").is_err());
    }
}
