//! Defaults for caps, budgets and seeds, optionally read from a TOML file.
//!
//! ```toml
//! order_cap = 250
//! witness_budget = 1000000
//! probe_budget = 20000
//! probe_seed = 24301
//! ```

use crate::components::{DEFAULT_PROBE_BUDGET, DEFAULT_PROBE_SEED};
use crate::error::{Error, Result};
use crate::props::nd::DEFAULT_WITNESS_BUDGET;
use serde::Deserialize;
use std::path::Path;

pub const DEFAULT_ORDER_CAP: usize = 250;

/// File consulted when no path is given.
pub const DEFAULT_CONFIG_FILE: &str = "groupring.toml";

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub order_cap: usize,
    pub witness_budget: usize,
    pub probe_budget: usize,
    pub probe_seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            order_cap: DEFAULT_ORDER_CAP,
            witness_budget: DEFAULT_WITNESS_BUDGET,
            probe_budget: DEFAULT_PROBE_BUDGET,
            probe_seed: DEFAULT_PROBE_SEED,
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Config> {
        toml::from_str(text).map_err(|e| Error::Io(format!("bad configuration: {e}")))
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// The given file, else `groupring.toml` in the working directory if it
    /// exists, else the built-in defaults.
    pub fn discover(path: Option<&Path>) -> Result<Config> {
        match path {
            Some(p) => Self::load(p),
            None if Path::new(DEFAULT_CONFIG_FILE).is_file() => Self::load(Path::new(DEFAULT_CONFIG_FILE)),
            None => Ok(Config::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_files_keep_defaults() {
        let c = Config::from_toml("order_cap = 100").unwrap();
        assert_eq!(c.order_cap, 100);
        assert_eq!(c.witness_budget, DEFAULT_WITNESS_BUDGET);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(Config::from_toml("cap = 1").is_err());
    }
}
