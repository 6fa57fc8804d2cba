//! Check records and their serializations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub suite: String,
    pub id: String,
    /// Name of the identity being checked.
    pub anchor: String,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: BTreeMap<String, String>,
    pub checks: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: BTreeMap<String, String>, checks: Vec<Record>) -> Report {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report { config, checks, summary }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                // going through Value sorts every object's keys
                let v = serde_json::to_value(self).expect("report serializes");
                let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for c in &self.checks {
                    w.serialize(c).expect("csv row");
                }
                String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
            }
            Format::Text => {
                let mut s = String::new();
                for c in &self.checks {
                    let st = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skip => "SKIP",
                    };
                    s.push_str(&format!("{st} {:<20} {:<28} {}", c.suite, c.id, c.anchor));
                    if let Some(w) = &c.witness {
                        s.push_str(&format!("  [{w}]"));
                    }
                    if c.ms > 0 {
                        s.push_str(&format!("  {} ms", c.ms));
                    }
                    s.push('\n');
                }
                let m = &self.summary;
                s.push_str(&format!("pass {} fail {} skip {}\n", m.pass, m.fail, m.skip));
                s
            }
        }
    }
}
