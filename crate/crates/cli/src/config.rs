use std::path::PathBuf;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Transfer,
    Normalize,
    Fan,
    Fukaya,
    Dgla,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Transfer => "transfer",
            Command::Normalize => "normalize",
            Command::Fan => "fan",
            Command::Fukaya => "fukaya",
            Command::Dgla => "dgla",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

pub const DEFAULT_GENUS: u32 = 3;
pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_SAMPLES: usize = 200;
/// Each sample runs exhaustive lift searches, so fewer are drawn.
pub const DEFAULT_DGLA_SAMPLES: usize = 12;

/// Resolved settings for one run. `None` fields take their genus-dependent
/// defaults through the accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub genus: u32,
    pub truncation_order: Option<u32>,
    pub max_arity: Option<usize>,
    pub seed: u64,
    /// Random tuples per arity, or random MC elements for `dgla`.
    pub samples: Option<usize>,
    /// Threads for the sampled checks; never changes the report.
    pub workers: usize,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            genus: DEFAULT_GENUS,
            truncation_order: None,
            max_arity: None,
            seed: DEFAULT_SEED,
            samples: None,
            workers: 1,
            input: None,
            output: None,
            format: Format::Json,
        }
    }

    pub fn genus(mut self, g: u32) -> Self {
        self.genus = g;
        self
    }

    /// `4g` unless given.
    pub fn truncation_order(&self) -> u32 {
        self.truncation_order.unwrap_or(4 * self.genus)
    }

    /// `2g + 2` unless given.
    pub fn max_arity(&self) -> usize {
        self.max_arity.unwrap_or(2 * self.genus as usize + 2)
    }

    pub fn samples(&self) -> usize {
        match (self.samples, self.command) {
            (Some(n), _) => n,
            (None, Command::Dgla) => DEFAULT_DGLA_SAMPLES,
            (None, _) => DEFAULT_SAMPLES,
        }
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            command: self.command,
            genus: self.genus,
            truncation_order: self.truncation_order(),
            max_arity: self.max_arity(),
            seed: self.seed,
            samples: self.samples(),
            input: self.input.as_ref().map(|p| p.display().to_string()),
            format: self.format,
        }
    }
}

/// The settings that determine a report. Worker count and output path are
/// left out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub command: Command,
    pub genus: u32,
    pub truncation_order: u32,
    pub max_arity: usize,
    pub seed: u64,
    pub samples: usize,
    pub input: Option<String>,
    pub format: Format,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_dependent_defaults() {
        let c = RunConfig::new(Command::Transfer);
        assert_eq!((c.truncation_order(), c.max_arity()), (12, 8));
        let c = c.genus(4);
        assert_eq!((c.truncation_order(), c.max_arity()), (16, 10));
    }

    #[test]
    fn echo_ignores_workers_and_output() {
        let a = RunConfig::new(Command::Fan);
        let b = RunConfig { workers: 8, output: Some("x.json".into()), ..a.clone() };
        assert_eq!(a.echo(), b.echo());
    }
}
