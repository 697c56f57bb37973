//! Deterministic pass/fail verification reports, rendered as aligned text,
//! TSV or JSON.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub object: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub title: String,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), entries: Vec::new() }
    }

    pub fn push(
        &mut self,
        check: impl Into<String>,
        object: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
        note: impl Into<String>,
    ) {
        self.entries.push(ReportEntry {
            check: check.into(),
            object: object.into(),
            expected: expected.into(),
            actual: actual.into(),
            pass,
            note: note.into(),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.pass).count()
    }

    pub fn to_text(&self) -> String {
        let mut widths = [5usize, 6, 8, 6];
        for e in &self.entries {
            widths[0] = widths[0].max(e.check.len());
            widths[1] = widths[1].max(e.object.len());
            widths[2] = widths[2].max(e.expected.len());
            widths[3] = widths[3].max(e.actual.len());
        }
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.title));
        out.push_str(&format!(
            "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {:<4}  note\n",
            "check",
            "object",
            "expected",
            "actual",
            "verdict",
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2],
            w3 = widths[3],
        ));
        for e in &self.entries {
            out.push_str(&format!(
                "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {:<4}  {}\n",
                e.check,
                e.object,
                e.expected,
                e.actual,
                if e.pass { "PASS" } else { "FAIL" },
                e.note,
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2],
                w3 = widths[3],
            ));
        }
        out.push_str(&format!(
            "# {} checks, {} failures\n",
            self.entries.len(),
            self.failures()
        ));
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("check\tobject\texpected\tactual\tverdict\tnote\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                e.check,
                e.object,
                e.expected,
                e.actual,
                if e.pass { "PASS" } else { "FAIL" },
                e.note
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
