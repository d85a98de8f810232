//! Machine-readable run reports.
//!
//! Every subcommand produces one [`Report`]: the command name, the resolved
//! configuration, a flat list of result rows, and an overall pass flag. JSON
//! serializes the whole structure; CSV flattens the rows; text is a readable
//! rendering of the same data. Field order is fixed so identical runs emit
//! byte-identical reports.

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub results: Vec<Value>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Self {
        Report {
            command: command.to_string(),
            config,
            results: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, row: Value) {
        self.results.push(row);
    }

    /// Keys of the first row, used as the CSV header.
    fn csv_columns(&self) -> Vec<String> {
        match self.results.first() {
            Some(Value::Object(m)) => m.keys().cloned().collect(),
            _ => Vec::new(),
        }
    }

    fn csv_cell(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Null => String::new(),
            other => other.to_string(),
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let cols = self.csv_columns();
                let mut out = cols.join(",");
                out.push('\n');
                for row in &self.results {
                    if let Value::Object(m) = row {
                        let line: Vec<String> = cols
                            .iter()
                            .map(|c| m.get(c).map(Self::csv_cell).unwrap_or_default())
                            .collect();
                        out.push_str(&line.join(","));
                        out.push('\n');
                    }
                }
                out
            }
            Format::Text => {
                let mut out = format!("command: {}\n", self.command);
                if let Value::Object(cfg) = &self.config {
                    let fields: Vec<String> =
                        cfg.iter().map(|(k, v)| format!("{k}={}", Self::csv_cell(v))).collect();
                    out.push_str(&format!("config: {}\n", fields.join(" ")));
                }
                for row in &self.results {
                    if let Value::Object(m) = row {
                        let fields: Vec<String> =
                            m.iter().map(|(k, v)| format!("{k}={}", Self::csv_cell(v))).collect();
                        out.push_str(&fields.join(" "));
                        out.push('\n');
                    }
                }
                out.push_str(&format!("pass: {}\n", self.pass));
                out
            }
        }
    }
}

/// Ordered JSON object builder; insertion order is preserved in the output.
pub fn row(pairs: &[(&str, Value)]) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert((*k).to_string(), v.clone());
    }
    Value::Object(m)
}
