//! Verification tolerance: command line, then `PENTILE_TOL`, then a config
//! file, then the built-in default.

use std::path::Path;

use pentile_core::tiling::VERIFY_TOL;
use serde::Deserialize;
use thiserror::Error;

pub const TOL_ENV: &str = "PENTILE_TOL";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{0}: {1}")]
    Read(String, std::io::Error),
    #[error("{0}: {1}")]
    Parse(String, toml::de::Error),
    #[error("{source_name} tolerance {value:?} is not a positive number")]
    BadTolerance { source_name: &'static str, value: String },
}

/// Contents of an optional `key = value` config file.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub tol: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Read(name.clone(), e))?;
        toml::from_str(&text).map_err(|e| ConfigError::Parse(name, e))
    }
}

fn positive(source_name: &'static str, x: f64) -> Result<f64, ConfigError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(ConfigError::BadTolerance { source_name, value: x.to_string() })
    }
}

/// Resolve the tolerance from its three possible sources.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>, file: Option<&FileConfig>) -> Result<f64, ConfigError> {
    if let Some(x) = flag {
        return positive("flag", x);
    }
    if let Some(s) = env {
        let x = s.trim().parse::<f64>().map_err(|_| ConfigError::BadTolerance { source_name: "environment", value: s.into() })?;
        return positive("environment", x);
    }
    match file.and_then(|c| c.tol) {
        Some(x) => positive("config file", x),
        None => Ok(VERIFY_TOL),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let file = FileConfig { tol: Some(1e-4) };
        assert_eq!(resolve_tol(Some(1e-6), Some("1e-5"), Some(&file)).unwrap(), 1e-6);
        assert_eq!(resolve_tol(None, Some("1e-5"), Some(&file)).unwrap(), 1e-5);
        assert_eq!(resolve_tol(None, None, Some(&file)).unwrap(), 1e-4);
        assert_eq!(resolve_tol(None, None, None).unwrap(), VERIFY_TOL);
        assert!(resolve_tol(None, Some("abc"), None).is_err());
        assert!(resolve_tol(Some(-1.0), None, None).is_err());
    }

    #[test]
    fn file_format() {
        let c: FileConfig = toml::from_str("tol = 1e-7\n").unwrap();
        assert_eq!(c.tol, Some(1e-7));
        assert!(toml::from_str::<FileConfig>("colour = 3\n").is_err());
    }
}
