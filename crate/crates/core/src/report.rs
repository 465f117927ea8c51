//! Line-oriented verification reports.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub key: String,
    pub pass: bool,
    pub fields: Vec<(String, String)>,
}

impl ReportLine {
    pub fn new(key: impl Into<String>, pass: bool) -> Self {
        ReportLine { key: key.into(), pass, fields: Vec::new() }
    }

    pub fn field(mut self, k: impl Into<String>, v: impl ToString) -> Self {
        self.fields.push((k.into(), v.to_string()));
        self
    }
}

/// Outcome of a sweep: one line per checked item that carries information, free-form
/// notes, and a count of all items examined (including trivially empty ones).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub title: String,
    pub lines: Vec<ReportLine>,
    pub notes: Vec<String>,
    pub checked: usize,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), ..Default::default() }
    }

    pub fn push(&mut self, line: ReportLine) {
        self.lines.push(line);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.pass).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn summary(&self) -> String {
        format!("CHECKED {} DEGREES, {} FAILURES", self.checked, self.failures())
    }

    /// `key PASS`, or `key FAIL` followed by the line's fields.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if !self.title.is_empty() {
            let _ = writeln!(out, "# {}", self.title);
        }
        for l in &self.lines {
            if l.pass {
                let _ = writeln!(out, "{} PASS", l.key);
            } else {
                let fields: Vec<String> = l.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "{} FAIL {}", l.key, fields.join(" "));
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "# {n}");
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }

    /// One `key=value` record per line.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let _ = write!(out, "item={} status={}", l.key.replace(' ', "_"), if l.pass { "PASS" } else { "FAIL" });
            for (k, v) in &l.fields {
                let _ = write!(out, " {k}={}", v.replace(' ', "_"));
            }
            out.push('\n');
        }
        for n in &self.notes {
            let _ = writeln!(out, "note={}", n.replace(' ', "_"));
        }
        let _ = writeln!(out, "checked={} failures={}", self.checked, self.failures());
        out
    }
}
