//! Settings layered as defaults, then a `key=value` file, then `CIDTOOL_*`
//! environment variables, then command-line flags.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use cid_core::recognizers::DEFAULT_STRUCTURAL_CAP;
use cid_core::OracleCaps;
use thiserror::Error;

pub const ENV_PREFIX: &str = "CIDTOOL_";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("config line {line}: expected key=value")]
    Syntax { line: usize },
    #[error("unknown setting '{0}'")]
    UnknownKey(String),
    #[error("setting {key}: '{value}' is not a valid value")]
    Value { key: String, value: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub caps: OracleCaps,
    pub structural_cap: usize,
    pub jobs: Option<usize>,
    pub seed: u64,
    pub stable: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            caps: OracleCaps::default(),
            structural_cap: DEFAULT_STRUCTURAL_CAP,
            jobs: None,
            seed: 0,
            stable: false,
        }
    }
}

pub const KEYS: [&str; 6] = ["labeling_cap", "subset_cap", "structural_cap", "jobs", "seed", "stable"];

impl Settings {
    /// Applies one setting by name.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = || ConfigError::Value {
            key: key.to_string(),
            value: value.to_string(),
        };
        let num = || value.trim().parse::<u64>().map_err(|_| bad());
        match key {
            "labeling_cap" => self.caps.labelings = num()? as usize,
            "subset_cap" => self.caps.subsets = num()? as usize,
            "structural_cap" => self.structural_cap = num()? as usize,
            "jobs" => self.jobs = Some(num()? as usize).filter(|&j| j > 0),
            "seed" => self.seed = num()?,
            "stable" => {
                self.stable = match value.trim() {
                    "1" | "true" | "yes" => true,
                    "0" | "false" | "no" => false,
                    _ => return Err(bad()),
                }
            }
            _ => return Err(ConfigError::UnknownKey(key.to_string())),
        }
        Ok(())
    }

    /// Applies a `key=value` file. Blank lines and lines starting with `#`
    /// are ignored.
    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { line: i + 1 })?;
            self.set(k.trim(), v.trim())?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        self.apply_text(&text)
    }

    /// Applies `CIDTOOL_<KEY>` variables from `vars`, e.g.
    /// `CIDTOOL_LABELING_CAP=12`.
    pub fn apply_env<I>(&mut self, vars: I) -> Result<(), ConfigError>
    where
        I: IntoIterator<Item = (String, String)>,
    {
        let vars: BTreeMap<String, String> = vars.into_iter().collect();
        for key in KEYS {
            let name = format!("{ENV_PREFIX}{}", key.to_ascii_uppercase());
            if let Some(v) = vars.get(&name) {
                self.set(key, v)?;
            }
        }
        Ok(())
    }
}
