use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;
use transfer::Clause;

use crate::config::{ConfigEcho, Format};

pub const TOOL: &str = "lgcheck";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub fn clause(name: &str, passed: bool, detail: impl Into<String>) -> Clause {
    Clause { name: name.into(), passed, detail: detail.into() }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ConfigEcho,
    /// SHA-256 of every file and table the run read.
    pub fixtures: BTreeMap<String, String>,
    pub passed: bool,
    pub clauses: Vec<Clause>,
    pub data: serde_json::Value,
    /// Extra lines for the text format.
    #[serde(skip)]
    pub summary: Vec<String>,
}

impl Report {
    pub fn new(config: ConfigEcho, clauses: Vec<Clause>, data: serde_json::Value) -> Self {
        let passed = clauses.iter().all(|c| c.passed);
        Report {
            tool: TOOL,
            version: VERSION,
            config,
            fixtures: BTreeMap::new(),
            passed,
            clauses,
            data,
            summary: Vec::new(),
        }
    }

    pub fn with_fixture(mut self, name: &str, sha256: String) -> Self {
        self.fixtures.insert(name.into(), sha256);
        self
    }

    pub fn with_summary(mut self, lines: Vec<String>) -> Self {
        self.summary = lines;
        self
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.passed)
    }

    /// 0 when every clause passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let c = &self.config;
        let mut s = format!("{TOOL} {VERSION} {} --genus {}\n", c.command.name(), c.genus);
        s += &format!(
            "truncation order {}, max arity {}, seed {}, samples {}\n",
            c.truncation_order, c.max_arity, c.seed, c.samples
        );
        if let Some(p) = &c.input {
            s += &format!("input {p}\n");
        }
        for (name, sha) in &self.fixtures {
            s += &format!("sha256 {sha}  {name}\n");
        }
        for l in &self.summary {
            s += l;
            s.push('\n');
        }
        for cl in &self.clauses {
            s += &format!("[{}] {}: {}\n", if cl.passed { "pass" } else { "FAIL" }, cl.name, cl.detail);
        }
        s += if self.passed { "result: pass\n" } else { "result: FAIL\n" };
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Command, RunConfig};

    #[test]
    fn exit_codes_and_text() {
        let echo = RunConfig::new(Command::Fan).echo();
        let ok = Report::new(echo.clone(), vec![clause("a", true, "fine")], serde_json::Value::Null);
        assert_eq!(ok.exit_code(), 0);
        let bad = Report::new(echo, vec![clause("a", true, ""), clause("b", false, "broken")], serde_json::Value::Null);
        assert_eq!(bad.exit_code(), 1);
        assert_eq!(bad.first_failure().unwrap().name, "b");
        let text = bad.render(Format::Text);
        assert!(text.contains("[FAIL] b: broken"));
        assert!(text.ends_with("result: FAIL\n"));
        assert_eq!(CliError::Input("x".into()).exit_code(), 2);
    }

    #[test]
    fn json_skips_the_summary() {
        let echo = RunConfig::new(Command::Fan).echo();
        let r = Report::new(echo, vec![], serde_json::json!({"k": 1})).with_summary(vec!["hello".into()]);
        let j = r.render(Format::Json);
        assert!(!j.contains("hello"));
        assert!(j.contains("\"tool\": \"lgcheck\""));
    }
}
