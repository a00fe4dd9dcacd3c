//! Run configuration: flags, then `QSHUFFLE_*` environment variables, then
//! an optional TOML file, then built-in defaults.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Human,
    Json,
    Latex,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Count(usize),
}

impl FromStr for Threads {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "auto" => Ok(Threads::Auto),
            n => match n.parse::<usize>() {
                Ok(0) | Err(_) => Err(format!("threads must be a positive integer or `auto`, got `{s}`")),
                Ok(k) => Ok(Threads::Count(k)),
            },
        }
    }
}

impl fmt::Display for Threads {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threads::Auto => f.write_str("auto"),
            Threads::Count(k) => write!(f, "{k}"),
        }
    }
}

impl<'de> Deserialize<'de> for Threads {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(k) => k.to_string().parse(),
            Raw::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub cutoff: usize,
    pub m_min: i64,
    pub m_max: i64,
    pub n_max: usize,
    pub output_format: Format,
    pub output_path: Option<PathBuf>,
    pub cache_enabled: bool,
    pub threads: Threads,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            cutoff: 5,
            m_min: -3,
            m_max: 3,
            n_max: 5,
            output_format: Format::Human,
            output_path: None,
            cache_enabled: true,
            threads: Threads::Auto,
        }
    }
}

/// One configuration layer; unset fields fall through to the next.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Layer {
    pub cutoff: Option<usize>,
    pub m_min: Option<i64>,
    pub m_max: Option<i64>,
    pub n_max: Option<usize>,
    pub output_format: Option<Format>,
    pub output_path: Option<PathBuf>,
    pub cache_enabled: Option<bool>,
    pub threads: Option<Threads>,
}

impl Layer {
    pub fn from_file(path: &Path) -> Result<Layer> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Reads `QSHUFFLE_CUTOFF`, `QSHUFFLE_THREADS` and `QSHUFFLE_CACHE`
    /// through `get`.
    pub fn from_env(get: impl Fn(&str) -> Option<String>) -> Result<Layer> {
        let mut layer = Layer::default();
        if let Some(v) = get("QSHUFFLE_CUTOFF") {
            layer.cutoff = Some(v.trim().parse().with_context(|| format!("QSHUFFLE_CUTOFF=`{v}`"))?);
        }
        if let Some(v) = get("QSHUFFLE_THREADS") {
            layer.threads = Some(v.parse().map_err(anyhow::Error::msg)?);
        }
        if let Some(v) = get("QSHUFFLE_CACHE") {
            layer.cache_enabled = Some(parse_switch(&v).with_context(|| format!("QSHUFFLE_CACHE=`{v}`"))?);
        }
        Ok(layer)
    }

    /// Fills every unset field from `lower`.
    pub fn over(self, lower: Layer) -> Layer {
        Layer {
            cutoff: self.cutoff.or(lower.cutoff),
            m_min: self.m_min.or(lower.m_min),
            m_max: self.m_max.or(lower.m_max),
            n_max: self.n_max.or(lower.n_max),
            output_format: self.output_format.or(lower.output_format),
            output_path: self.output_path.or(lower.output_path),
            cache_enabled: self.cache_enabled.or(lower.cache_enabled),
            threads: self.threads.or(lower.threads),
        }
    }

    pub fn resolve(self) -> Result<CliConfig> {
        let d = CliConfig::default();
        let cfg = CliConfig {
            cutoff: self.cutoff.unwrap_or(d.cutoff),
            m_min: self.m_min.unwrap_or(d.m_min),
            m_max: self.m_max.unwrap_or(d.m_max),
            n_max: self.n_max.unwrap_or(d.n_max),
            output_format: self.output_format.unwrap_or(d.output_format),
            output_path: self.output_path.or(d.output_path),
            cache_enabled: self.cache_enabled.unwrap_or(d.cache_enabled),
            threads: self.threads.unwrap_or(d.threads),
        };
        if cfg.m_min > cfg.m_max {
            bail!("m_min ({}) exceeds m_max ({})", cfg.m_min, cfg.m_max);
        }
        Ok(cfg)
    }
}

pub fn parse_switch(s: &str) -> Result<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "on" | "yes" => Ok(true),
        "0" | "false" | "off" | "no" => Ok(false),
        _ => bail!("expected on/off, got `{s}`"),
    }
}

/// `parse_switch` for clap, which wants a `String` error.
pub fn parse_switch_arg(s: &str) -> std::result::Result<bool, String> {
    parse_switch(s).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let flags = Layer { cutoff: Some(2), ..Layer::default() };
        let env = Layer::from_env(|k| match k {
            "QSHUFFLE_CUTOFF" => Some("3".into()),
            "QSHUFFLE_THREADS" => Some("4".into()),
            _ => None,
        })
        .unwrap();
        let file: Layer = toml::from_str("cutoff = 7\nthreads = 1\nm_min = -1\ncache_enabled = false").unwrap();
        let cfg = flags.over(env.over(file)).resolve().unwrap();
        assert_eq!(cfg.cutoff, 2);
        assert_eq!(cfg.threads, Threads::Count(4));
        assert_eq!(cfg.m_min, -1);
        assert!(!cfg.cache_enabled);
        assert_eq!(cfg.m_max, 3);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(Layer::from_env(|k| (k == "QSHUFFLE_THREADS").then(|| "0".into())).is_err());
        assert!(Layer::from_env(|k| (k == "QSHUFFLE_CACHE").then(|| "maybe".into())).is_err());
        assert!(toml::from_str::<Layer>("bogus = 1").is_err());
        let inverted = Layer { m_min: Some(2), m_max: Some(1), ..Layer::default() };
        assert!(inverted.resolve().is_err());
        assert_eq!("auto".parse::<Threads>().unwrap(), Threads::Auto);
    }
}
