use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::identities::{CheckOptions, GridOverride};

/// Output format of every subcommand.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "human" => Ok(Format::Human),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Config(format!("unknown format `{other}` (expected human, json or csv)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Human => "human",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Settings shared by the subcommands.
///
/// Built from an optional `key = value` file, then overridden field by field
/// by command-line flags.
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
    pub grid: Vec<GridOverride>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    /// When off, `suite` also prints its wall-clock time. Reports are always
    /// sorted, so they are byte-identical either way.
    pub deterministic: bool,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            tol_abs: None,
            tol_rel: None,
            grid: Vec::new(),
            format: Format::Human,
            out: None,
            threads: None,
            deterministic: true,
        }
    }
}

const KEYS: &[&str] = &["tol_abs", "tol_rel", "grid", "format", "out", "threads", "deterministic"];

fn parse_tol(key: &str, v: &str) -> Result<f64> {
    v.parse::<f64>()
        .ok()
        .filter(|t| t.is_finite() && *t >= 0.0)
        .ok_or_else(|| Error::Config(format!("`{key}` must be a nonnegative number, got `{v}`")))
}

impl CliConfig {
    /// Parses the `key = value` format. Blank lines and lines starting with
    /// `#` are ignored; `grid` may repeat. Unknown keys are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |msg: String| Error::Config(format!("config line {}: {msg}", lineno + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| at(format!("expected key = value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let wrap = |e: Error| at(e.to_string());
            match key {
                "tol_abs" => cfg.tol_abs = Some(parse_tol(key, value).map_err(wrap)?),
                "tol_rel" => cfg.tol_rel = Some(parse_tol(key, value).map_err(wrap)?),
                "grid" => cfg.grid.push(value.parse().map_err(wrap)?),
                "format" => cfg.format = value.parse().map_err(wrap)?,
                "out" => cfg.out = Some(PathBuf::from(value)),
                "threads" => {
                    let n = value
                        .parse::<usize>()
                        .ok()
                        .filter(|&n| n > 0)
                        .ok_or_else(|| at(format!("`threads` must be a positive integer, got `{value}`")))?;
                    cfg.threads = Some(n);
                }
                "deterministic" => {
                    cfg.deterministic = match value {
                        "true" | "on" | "1" => true,
                        "false" | "off" | "0" => false,
                        _ => return Err(at(format!("`deterministic` must be true or false, got `{value}`"))),
                    }
                }
                _ => return Err(at(format!("unknown key `{key}` (known: {})", KEYS.join(", ")))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn check_options(&self) -> CheckOptions {
        CheckOptions {
            tol_abs: self.tol_abs,
            tol_rel: self.tol_rel,
            threads: self.threads,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let cfg = CliConfig::parse(
            "# suite settings\n\
             tol_abs = 1e-9\n\
             tol_rel=0\n\
             grid = s=-3:0:0.5\n\
             grid = k=0,1\n\
             format = csv\n\
             out = r.csv\n\
             threads = 2\n\
             deterministic = off\n",
        )
        .unwrap();
        assert_eq!(cfg.tol_abs, Some(1e-9));
        assert_eq!(cfg.tol_rel, Some(0.0));
        assert_eq!(cfg.grid.len(), 2);
        assert_eq!(cfg.grid[0].values.len(), 7);
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.out.as_deref(), Some(Path::new("r.csv")));
        assert_eq!(cfg.threads, Some(2));
        assert!(!cfg.deterministic);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        for text in ["tolerance = 1", "tol_abs = -1", "threads = 0", "format = xml", "grid = s", "just words"] {
            let err = CliConfig::parse(text).unwrap_err();
            assert!(matches!(err, Error::Config(_)), "{text}: {err}");
        }
    }
}
