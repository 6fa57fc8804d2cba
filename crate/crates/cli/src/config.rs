//! Run configuration: a flat `key = value` file overlaid by command-line flags.

use std::collections::BTreeMap;
use std::path::PathBuf;

use voawb_core::Scalar;

use crate::suites::SUITES;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ConfigError {
    #[error("config line {0}: expected key = value")]
    Syntax(usize),
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("invalid value for {0}: `{1}`")]
    Value(&'static str, String),
    #[error("unknown suite `{0}` (see `voawb list-suites`)")]
    UnknownSuite(String),
    #[error("cannot read config file: {0}")]
    Io(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(ConfigError::Value("format", s.into())),
        }
    }
}

/// The level is either the formal parameter k or a rational number p/q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Level {
    Formal,
    Rational(i64, i64),
}

impl Level {
    pub fn parse(s: &str) -> Result<Level, ConfigError> {
        let s = s.trim();
        if s == "formal" || s == "k" {
            return Ok(Level::Formal);
        }
        let bad = || ConfigError::Value("level", s.into());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse::<i64>().map_err(|_| bad())?, q.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if q == 0 {
            return Err(bad());
        }
        let g = gcd(p.abs(), q.abs()).max(1) * q.signum();
        Ok(Level::Rational(p / g, q / g))
    }

    pub fn scalar(&self) -> Scalar {
        match self {
            Level::Formal => Scalar::k(),
            Level::Rational(p, q) => Scalar::frac(*p, *q),
        }
    }

    pub fn is_formal(&self) -> bool {
        matches!(self, Level::Formal)
    }
}

impl std::fmt::Display for Level {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Level::Formal => write!(f, "formal"),
            Level::Rational(p, 1) => write!(f, "{p}"),
            Level::Rational(p, q) => write!(f, "{p}/{q}"),
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub algebra: String,
    pub level: Level,
    pub max_degree: usize,
    pub max_weight: u32,
    /// Series order M for the KZ and triple suites.
    pub order: usize,
    pub suites: Vec<String>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub jobs: usize,
    /// Record wall times. Off by default so that reports are byte-stable.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algebra: "sl2".into(),
            level: Level::Formal,
            max_degree: 4,
            max_weight: 4,
            order: 6,
            suites: Vec::new(),
            format: Format::Json,
            out: None,
            seed: 0,
            jobs: 1,
            timings: false,
        }
    }
}

impl RunConfig {
    /// Applies one `key = value` setting. `suite` accumulates.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let v = value.trim();
        let num = |name: &'static str| v.parse::<u64>().map_err(|_| ConfigError::Value(name, v.into()));
        match key.trim().replace('_', "-").as_str() {
            "algebra" => {
                if v != "sl2" {
                    return Err(ConfigError::Value("algebra", v.into()));
                }
                self.algebra = v.into();
            }
            "level" => self.level = Level::parse(v)?,
            "max-degree" => self.max_degree = num("max-degree")? as usize,
            "max-weight" => self.max_weight = num("max-weight")? as u32,
            "order" => self.order = num("order")? as usize,
            "seed" => self.seed = num("seed")?,
            "jobs" => self.jobs = (num("jobs")? as usize).max(1),
            "format" => self.format = v.parse()?,
            "out" => self.out = Some(PathBuf::from(v)),
            "timings" => self.timings = matches!(v, "1" | "true" | "yes"),
            "suite" | "suites" => {
                for s in v.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    self.add_suite(s)?;
                }
            }
            other => return Err(ConfigError::UnknownKey(other.into())),
        }
        Ok(())
    }

    pub fn add_suite(&mut self, s: &str) -> Result<(), ConfigError> {
        if !SUITES.iter().any(|d| d.name == s) {
            return Err(ConfigError::UnknownSuite(s.into()));
        }
        if !self.suites.iter().any(|x| x == s) {
            self.suites.push(s.into());
        }
        Ok(())
    }

    /// Reads `key = value` lines; blank lines and `#` comments are ignored.
    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax(n + 1))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    /// The settings that determine the report contents, as printed in it.
    pub fn echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("algebra".into(), self.algebra.clone());
        m.insert("level".into(), self.level.to_string());
        m.insert("max_degree".into(), self.max_degree.to_string());
        m.insert("max_weight".into(), self.max_weight.to_string());
        m.insert("order".into(), self.order.to_string());
        m.insert("seed".into(), self.seed.to_string());
        m.insert("suites".into(), self.suites.join(","));
        m
    }
}
