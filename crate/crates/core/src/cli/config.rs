use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("unknown key {0:?}")]
    UnknownKey(String),
    #[error("bad value for {key}: {value:?}")]
    BadValue { key: String, value: String },
    #[error("{0}")]
    Io(String),
}

/// Run configuration: a `key=value` file plus command-line overrides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub window: i64,
    pub degree: u32,
    pub preset: String,
    pub suites: Vec<String>,
    pub output: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config { window: 5, degree: 3, preset: "galilei".into(), suites: Vec::new(), output: None }
    }
}

impl Config {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let bad = || ConfigError::BadValue { key: key.into(), value: value.into() };
        match key {
            "window" => self.window = value.parse().ok().filter(|w: &i64| *w >= 0).ok_or_else(bad)?,
            "degree" => self.degree = value.parse().map_err(|_| bad())?,
            "preset" if !value.is_empty() => self.preset = value.into(),
            "suites" => {
                self.suites = value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
            }
            "output" if !value.is_empty() => self.output = Some(PathBuf::from(value)),
            "preset" | "output" => return Err(bad()),
            _ => return Err(ConfigError::UnknownKey(key.into())),
        }
        Ok(())
    }

    /// Blank lines and `#` comments are ignored.
    pub fn parse_str(text: &str) -> Result<Config, ConfigError> {
        let mut c = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::Line { line: n + 1, msg: "expected key=value".into() })?;
            c.set(k.trim(), v.trim()).map_err(|e| ConfigError::Line { line: n + 1, msg: e.to_string() })?;
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(format!("{}: {}", path.display(), e)))?;
        Config::parse_str(&text)
    }
}
