//! `key = value` configuration files.
//!
//! Recognized keys: `tolerance` (alias `precision`), `omega_primes`
//! (comma-separated), `cache_dir`, `paper_sign`.  Blank lines and lines
//! starting with `#` are ignored.

use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub tolerance: Option<f64>,
    pub omega_primes: Option<Vec<u32>>,
    pub cache_dir: Option<PathBuf>,
    pub paper_sign: Option<bool>,
}

pub fn parse_config(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| format!("config line {}: {msg}", no + 1);
        let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected `key = value`, found `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "tolerance" | "precision" => {
                let t: f64 = value.parse().map_err(|_| err(format!("bad tolerance `{value}`")))?;
                if !(t > 0.0 && t < 1.0) {
                    return Err(err(format!("tolerance must lie in (0, 1), got {t}")));
                }
                cfg.tolerance = Some(t);
            }
            "omega_primes" => {
                let primes = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<u32>().map_err(|_| err(format!("bad prime `{s}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                cfg.omega_primes = Some(primes);
            }
            "cache_dir" => cfg.cache_dir = Some(PathBuf::from(value)),
            "paper_sign" => {
                cfg.paper_sign = Some(match value {
                    "true" | "yes" | "1" => true,
                    "false" | "no" | "0" => false,
                    _ => return Err(err(format!("bad boolean `{value}`"))),
                })
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<FileConfig, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_config(&text)
}
