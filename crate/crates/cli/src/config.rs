//! Run configuration: precision, tolerance and the basis symbol table.

use std::path::Path;

use expalg_core::{Basis, BasisError};
use serde::Deserialize;
use thiserror::Error;

use crate::parse::{is_reserved, parse_rational_literal};

/// Embedded defaults, used when no config file is given.
pub const DEFAULT_CONFIG: &str = include_str!("../default.toml");

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("symbol `{name}`: bound `{value}` is not a decimal or fraction")]
    BadBound { name: String, value: String },
    #[error("`{0}` is reserved and cannot name a basis symbol")]
    Reserved(String),
    #[error("precision must be between 16 and 65536 bits, got {0}")]
    BadPrecision(u32),
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolDecl {
    pub name: String,
    /// Decimal or fraction text, parsed exactly.
    pub lo: String,
    pub hi: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub precision: u32,
    pub tol: f64,
    #[serde(default)]
    pub assume_independent: bool,
    #[serde(default, rename = "symbol")]
    pub symbols: Vec<SymbolDecl>,
}

impl Default for Config {
    fn default() -> Self {
        Config::from_toml(DEFAULT_CONFIG).expect("embedded config is valid")
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let cfg: Config = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        match path {
            None => Ok(Config::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|source| ConfigError::Io {
                    path: p.display().to_string(),
                    source,
                })?;
                Config::from_toml(&text)
            }
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(16..=65536).contains(&self.precision) {
            return Err(ConfigError::BadPrecision(self.precision));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(ConfigError::BadTolerance(self.tol));
        }
        self.basis().map(|_| ())
    }

    /// Built-in symbols plus the declared ones.
    pub fn basis(&self) -> Result<Basis, ConfigError> {
        let mut basis = Basis::new().with_assume_independent(self.assume_independent);
        for s in &self.symbols {
            if is_reserved(&s.name) {
                return Err(ConfigError::Reserved(s.name.clone()));
            }
            let bound = |v: &str| {
                parse_rational_literal(v).ok_or_else(|| ConfigError::BadBound {
                    name: s.name.clone(),
                    value: v.to_string(),
                })
            };
            basis.declare(&s.name, bound(&s.lo)?, bound(&s.hi)?)?;
        }
        Ok(basis)
    }
}
