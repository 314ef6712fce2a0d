//! Jobs, reports and their emission for the `verma` command line tool.

pub mod args;
pub mod emit;
mod run;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use emit::emit;
pub use run::run;

/// Environment variable holding the number of `scan` workers.
pub const WORKERS_VAR: &str = "VERMA_WORKERS";

pub const DEFAULT_ORDER: usize = 20;
pub const DEFAULT_WINDOW: i64 = 8;
pub const DEFAULT_MAX_P: u32 = 8;
pub const DEFAULT_MAX_LEVEL: u32 = 9;
pub const MAX_SYMBOLIC: usize = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] verma_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Invalid(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Singular,
    Subsingular,
    Classify,
    Character,
    Tensor,
    HvDecide,
    Scan,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Singular => "singular",
            Command::Subsingular => "subsingular",
            Command::Classify => "classify",
            Command::Character => "character",
            Command::Tensor => "tensor",
            Command::HvDecide => "hv-decide",
            Command::Scan => "scan",
        }
    }

    const WEIGHT: &'static [&'static str] = &["algebra", "symbolic", "c", "h", "hW", "hI", "cLI"];

    /// Accepted parameter keys.
    pub fn keys(self) -> Vec<&'static str> {
        let own: &[&str] = match self {
            Command::Singular => &["p", "level"],
            Command::Subsingular => &["p", "r"],
            Command::Classify => &["maxP"],
            Command::Character => &["p", "r", "order"],
            Command::Tensor => &["alpha", "beta", "F", "factor", "window", "depth", "check", "maxP"],
            Command::HvDecide => &["alpha", "beta", "F"],
            Command::Scan => &["pmax", "rmax", "offsets", "maxLevel"],
        };
        let weight: &[&str] = match self {
            Command::Character => &["symbolic", "h"],
            Command::Scan => &[],
            _ => Self::WEIGHT,
        };
        weight.iter().chain(own).copied().collect()
    }

    /// Keys that must be present.
    pub fn required(self) -> &'static [&'static str] {
        match self {
            Command::Singular | Command::Character | Command::Classify => &[],
            Command::Subsingular => &["p", "r"],
            Command::Tensor => &["alpha", "beta"],
            Command::HvDecide => &["alpha", "beta"],
            Command::Scan => &["pmax", "rmax"],
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Command> {
        [
            Command::Singular,
            Command::Subsingular,
            Command::Classify,
            Command::Character,
            Command::Tensor,
            Command::HvDecide,
            Command::Scan,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| CliError::Invalid(format!("unknown command `{s}`")))
    }
}

/// A command with its parameters, all kept as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Job {
    pub command: Command,
    pub params: BTreeMap<String, String>,
}

impl Job {
    pub fn new(command: Command) -> Job {
        Job { command, params: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Job {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    pub fn validate(&self) -> Result<()> {
        let keys = self.command.keys();
        for k in self.params.keys() {
            if !keys.contains(&k.as_str()) {
                return invalid(format!("`{k}` is not a parameter of {}", self.command));
            }
        }
        for k in self.command.required() {
            if !self.params.contains_key(*k) {
                return invalid(format!("{} needs `{k}`", self.command));
            }
        }
        if self.symbolic().len() > MAX_SYMBOLIC {
            return invalid(format!("at most {MAX_SYMBOLIC} symbolic parameters"));
        }
        Ok(())
    }

    pub fn symbolic(&self) -> Vec<String> {
        self.get("symbolic")
            .map(|s| s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect())
            .unwrap_or_default()
    }

    pub fn parse_u32(&self, key: &str) -> Result<Option<u32>> {
        self.get(key)
            .map(|v| {
                v.trim()
                    .parse::<u32>()
                    .or_else(|_| invalid(format!("`{key}` must be a non-negative integer, got `{v}`")))
            })
            .transpose()
    }

    pub fn parse_i64(&self, key: &str) -> Result<Option<i64>> {
        self.get(key)
            .map(|v| v.trim().parse::<i64>().or_else(|_| invalid(format!("`{key}` must be an integer, got `{v}`"))))
            .transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub job: Job,
    pub results: Value,
    /// Truncation levels, parameter bindings and similar remarks.
    pub notes: Vec<String>,
    #[serde(rename = "elapsedMs", default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    /// 3 when a decision came back `Unknown`, 0 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self.results.pointer("/decision/verdict").and_then(Value::as_str) {
            Some("Unknown") => 3,
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}
