//! Plain-text `key = value` configuration for default sweep ranges.
//!
//! Lines are `key = value`; `#` starts a comment. Keys may be prefixed with a
//! check id (`disgl.mu_max = 3`) to override the global value for that
//! check only.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

use super::report::CheckId;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut entries = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", k + 1)))?;
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Config { entries })
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Config::parse(&text)
    }

    /// The value of `check.key`, falling back to `key`.
    pub fn get(&self, check: Option<CheckId>, key: &str) -> Option<&str> {
        check
            .and_then(|c| self.entries.get(&format!("{c}.{key}")))
            .or_else(|| self.entries.get(key))
            .map(String::as_str)
    }

    pub fn get_list(&self, check: Option<CheckId>, key: &str) -> Result<Option<Vec<i64>>> {
        self.get(check, key).map(parse_list).transpose()
    }

    pub fn get_int(&self, check: Option<CheckId>, key: &str) -> Result<Option<i64>> {
        self.get(check, key)
            .map(|v| v.parse::<i64>().map_err(|_| Error::Parse(format!("config key {key}: '{v}' is not an integer"))))
            .transpose()
    }
}

/// Parses `1,2,3`.
pub fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("'{t}' is not an integer"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_keys_override_global_ones() {
        let c = Config::parse("# ranges\nn = 1,2\nmu_max = 2\ndisgl.mu_max = 3 # wider\n").unwrap();
        assert_eq!(c.get_int(Some(CheckId::Disgl), "mu_max").unwrap(), Some(3));
        assert_eq!(c.get_int(Some(CheckId::Extremal), "mu_max").unwrap(), Some(2));
        assert_eq!(c.get_list(None, "n").unwrap(), Some(vec![1, 2]));
        assert!(Config::parse("oops").is_err());
    }
}
