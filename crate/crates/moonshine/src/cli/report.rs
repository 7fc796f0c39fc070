//! Report entries and their Markdown/JSON renderings.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

/// Outcome of one report entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Expected equals computed.
    Pass,
    /// Expected differs from computed.
    Fail,
    /// A known anomaly in the tabulated data, reported rather than forced.
    Flagged,
    /// Needs data that is not shipped.
    DataDependent,
}

impl Status {
    /// Lower-case label.
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
            Status::DataDependent => "data-dependent",
        }
    }
}

/// One claim with its expected and computed values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    /// Stable claim identifier.
    pub id: String,
    /// Where the claim comes from, in words.
    pub context: String,
    /// Expected value.
    pub expected: String,
    /// Computed value.
    pub computed: String,
    /// Outcome.
    pub status: Status,
}

impl ReportEntry {
    /// Pass when `expected` and `computed` render identically, fail otherwise.
    pub fn check(id: &str, context: &str, expected: impl Display, computed: impl Display) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        ReportEntry {
            id: id.into(),
            context: context.into(),
            expected,
            computed,
            status,
        }
    }

    /// A flagged anomaly; passes instead if the values happen to agree.
    pub fn flagged(
        id: &str,
        context: &str,
        expected: impl Display,
        computed: impl Display,
    ) -> Self {
        let mut e = Self::check(id, context, expected, computed);
        if e.status == Status::Fail {
            e.status = Status::Flagged;
        }
        e
    }

    /// A claim that cannot be evaluated from shipped data.
    pub fn data_dependent(id: &str, context: &str, expected: impl Display, reason: &str) -> Self {
        ReportEntry {
            id: id.into(),
            context: context.into(),
            expected: expected.to_string(),
            computed: reason.into(),
            status: Status::DataDependent,
        }
    }

    /// An entry whose failure is an error message.
    pub fn error(id: &str, context: &str, expected: impl Display, err: impl Display) -> Self {
        ReportEntry {
            id: id.into(),
            context: context.into(),
            expected: expected.to_string(),
            computed: format!("error: {err}"),
            status: Status::Fail,
        }
    }
}

/// A named group of entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    /// Suite name.
    pub suite: String,
    /// Entries in a fixed order.
    pub entries: Vec<ReportEntry>,
}

/// The whole reconciliation document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Sections in suite order.
    pub sections: Vec<Section>,
}

impl Report {
    /// All entries, in order.
    pub fn entries(&self) -> impl Iterator<Item = &ReportEntry> {
        self.sections.iter().flat_map(|s| &s.entries)
    }

    /// Whether no entry failed.
    pub fn passed(&self) -> bool {
        self.entries().all(|e| e.status != Status::Fail)
    }

    /// Counts per status: (pass, fail, flagged, data-dependent).
    pub fn tally(&self) -> (usize, usize, usize, usize) {
        let count = |s: Status| self.entries().filter(|e| e.status == s).count();
        (
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Flagged),
            count(Status::DataDependent),
        )
    }

    /// Pretty JSON.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Markdown with one table per section.
    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# Moonshine reconciliation report\n\n");
        let (p, f, fl, dd) = self.tally();
        out.push_str(&format!(
            "{p} pass, {f} fail, {fl} flagged, {dd} data-dependent.\n"
        ));
        for s in &self.sections {
            out.push_str(&format!("\n## {}\n\n", s.suite));
            out.push_str("| id | context | expected | computed | status |\n");
            out.push_str("|---|---|---|---|---|\n");
            for e in &s.entries {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    cell(&e.id),
                    cell(&e.context),
                    cell(&e.expected),
                    cell(&e.computed),
                    e.status.label()
                ));
            }
        }
        out
    }

    /// Plain text, one line per entry.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            for e in &s.entries {
                out.push_str(&format!(
                    "[{}] {}/{}: expected {}, computed {}\n",
                    e.status.label(),
                    s.suite,
                    e.id,
                    e.expected,
                    e.computed
                ));
            }
        }
        let (p, f, fl, dd) = self.tally();
        out.push_str(&format!(
            "{p} pass, {f} fail, {fl} flagged, {dd} data-dependent\n"
        ));
        out
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}
