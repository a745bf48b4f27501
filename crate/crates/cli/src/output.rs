//! Rendering of command reports as text, JSON or CSV.

use serde_json::{json, Value};

/// Version of the JSON and CSV layouts; bumped on incompatible changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Whether a command certified its claim or found it violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Certified,
    Violation,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Certified => 0,
            Outcome::Violation => 2,
        }
    }

    pub fn and(self, other: Outcome) -> Outcome {
        if self == Outcome::Certified && other == Outcome::Certified {
            Outcome::Certified
        } else {
            Outcome::Violation
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub json: Value,
    pub text: String,
    pub table: Table,
    pub outcome: Outcome,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "outcome": match self.outcome {
                        Outcome::Certified => "certified",
                        Outcome::Violation => "violation",
                    },
                    "result": self.json,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.table.header).expect("in-memory write");
                for row in &self.table.rows {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report() -> Report {
        let mut table = Table::new(&["a", "b"]);
        table.push(vec!["1".into(), "x, y".into()]);
        Report {
            command: "demo".into(),
            json: json!({"k": 1}),
            text: "hello".into(),
            table,
            outcome: Outcome::Violation,
        }
    }

    #[test]
    fn formats() {
        let r = report();
        assert_eq!(r.render(Format::Text), "hello\n");
        assert_eq!(r.render(Format::Csv), "a,b\n1,\"x, y\"\n");
        let v: Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["outcome"], "violation");
        assert_eq!(v["result"]["k"], 1);
    }

    #[test]
    fn outcomes_combine() {
        assert_eq!(
            Outcome::Certified.and(Outcome::Certified),
            Outcome::Certified
        );
        assert_eq!(Outcome::Certified.and(Outcome::Violation).exit_code(), 2);
    }
}
