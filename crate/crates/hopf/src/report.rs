//! Structured reports: named records with a status and a detail string,
//! rendered as aligned text or JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::{EXIT_INCONCLUSIVE, EXIT_OK, EXIT_VERIFICATION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Info,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Inconclusive => "inconclusive",
            Status::Info => "info",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub section: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub subject: String,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), records: Vec::new() }
    }

    pub fn push(&mut self, section: &str, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.records.push(Record { section: section.into(), name: name.into(), status, detail: detail.into() });
    }

    pub fn pass_or_fail(&mut self, section: &str, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(section, name, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn find(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    /// 2 on any failure, else 3 on any inconclusive record, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.records.iter().any(|r| r.status == Status::Fail) {
            EXIT_VERIFICATION
        } else if self.records.iter().any(|r| r.status == Status::Inconclusive) {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.subject);
        let mut section = "";
        for r in &self.records {
            if r.section != section {
                section = &r.section;
                let _ = writeln!(out, "\n[{section}]");
            }
            if r.detail.is_empty() {
                let _ = writeln!(out, "{:<13} {}", r.status.tag(), r.name);
            } else {
                let _ = writeln!(out, "{:<13} {}: {}", r.status.tag(), r.name, r.detail);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_priorities() {
        let mut r = Report::new("x");
        r.push("a", "one", Status::Pass, "");
        assert_eq!(r.exit_code(), EXIT_OK);
        r.push("a", "two", Status::Inconclusive, "");
        assert_eq!(r.exit_code(), EXIT_INCONCLUSIVE);
        r.push("a", "three", Status::Fail, "");
        assert_eq!(r.exit_code(), EXIT_VERIFICATION);
        assert!(r.to_text().contains("FAIL          three"));
    }
}
