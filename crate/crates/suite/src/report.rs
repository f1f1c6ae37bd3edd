//! Verdicts, witnesses, and suite reports in text and structured form.
//!
//! The structured document is the determinism contract: identical config and
//! seed must serialize byte-for-byte identically, so per-record runtimes
//! appear only in the human-readable text rendering.

use crate::theorem::TheoremId;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    PreconditionUnmet,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::PreconditionUnmet => "precondition-unmet",
        }
    }
}

/// A replayable counterexample: the element indices involved plus the data
/// needed to re-evaluate the violated relation (serialized soft-set values
/// in particular).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub note: String,
}

impl Witness {
    pub fn new(elements: Vec<usize>, note: impl Into<String>) -> Self {
        Witness { elements, note: note.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    /// What the checker decides, stated over the artifact's operations.
    pub statement: &'static str,
    /// Canonical instance digest.
    pub instance: String,
    /// Effective quantification mode of this record.
    pub mode: String,
    pub verdict: Verdict,
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall time; excluded from the structured document so serialization is
    /// stable run to run.
    #[serde(skip)]
    pub micros: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub holds: usize,
    pub violated: usize,
    pub precondition_unmet: usize,
    pub informational_violated: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: String,
    pub records: Vec<TheoremReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(config: String, mut records: Vec<TheoremReport>) -> Self {
        records.sort_by(|a, b| (a.id, &a.instance).cmp(&(b.id, &b.instance)));
        let mut summary = Summary {
            checked: records.len(),
            holds: 0,
            violated: 0,
            precondition_unmet: 0,
            informational_violated: 0,
        };
        for r in &records {
            match (r.verdict, r.informational) {
                (Verdict::Holds, _) => summary.holds += 1,
                (Verdict::Violated, false) => summary.violated += 1,
                (Verdict::Violated, true) => summary.informational_violated += 1,
                (Verdict::PreconditionUnmet, _) => summary.precondition_unmet += 1,
            }
        }
        SuiteReport { config, records, summary }
    }

    /// 0 unless a non-informational record is violated.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.violated > 0)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("== theorem suite ==\n");
        out.push_str(&format!("config: {}\n", self.config));
        for r in &self.records {
            let flag = if r.informational { " (informational)" } else { "" };
            out.push_str(&format!(
                "{:<8} {:<52} {:<28} {}{}   [{} us]\n",
                r.id.as_str(),
                r.instance,
                r.mode,
                r.verdict.as_str(),
                flag,
                r.micros
            ));
            if let Some(w) = &r.witness {
                out.push_str(&format!("         witness: elements {:?}; {}\n", w.elements, w.note));
            }
            if let Some(d) = &r.detail {
                out.push_str(&format!("         detail: {d}\n"));
            }
        }
        let probes: Vec<&TheoremReport> = self.records.iter().filter(|r| r.informational).collect();
        if !probes.is_empty() {
            out.push_str("-- informational probes --\n");
            for r in &probes {
                out.push_str(&format!(
                    "{:<8} {:<52} {}",
                    r.id.as_str(),
                    r.instance,
                    r.verdict.as_str()
                ));
                if let Some(d) = &r.detail {
                    out.push_str(&format!("  {d}"));
                }
                out.push('\n');
            }
        }
        out.push_str(&format!(
            "summary: {} checked, {} holds, {} violated, {} precondition-unmet, {} informational-violated\n",
            self.summary.checked,
            self.summary.holds,
            self.summary.violated,
            self.summary.precondition_unmet,
            self.summary.informational_violated
        ));
        out.push_str(&format!("exit: {}\n", self.exit_code()));
        out
    }

    /// The structured document: JSON with a fixed field order and no
    /// timing data.
    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(id: TheoremId, verdict: Verdict, informational: bool) -> TheoremReport {
        TheoremReport {
            id,
            statement: id.statement(),
            instance: "g=cyclic:2;u=1;mode=exhaustive".into(),
            mode: "exhaustive".into(),
            verdict,
            informational,
            witness: None,
            detail: None,
            micros: 5,
        }
    }

    #[test]
    fn exit_codes_ignore_informational_violations() {
        let r = SuiteReport::new("test".into(), vec![record(TheoremId::B20, Verdict::Holds, false)]);
        assert_eq!(r.exit_code(), 0);

        let r = SuiteReport::new(
            "test".into(),
            vec![record(TheoremId::C100, Verdict::Violated, true)],
        );
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.summary.informational_violated, 1);

        let r = SuiteReport::new(
            "test".into(),
            vec![record(TheoremId::B20, Verdict::Violated, false)],
        );
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn structured_form_has_no_timing() {
        let r = SuiteReport::new("test".into(), vec![record(TheoremId::B20, Verdict::Holds, false)]);
        let s = r.to_structured();
        assert!(!s.contains("micros"));
        assert!(s.contains("\"id\": \"B20\""));
        assert!(r.to_text().contains("us]"));
    }

    #[test]
    fn records_sort_canonically() {
        let r = SuiteReport::new(
            "test".into(),
            vec![
                record(TheoremId::C15, Verdict::Holds, false),
                record(TheoremId::B20, Verdict::Holds, false),
            ],
        );
        assert_eq!(r.records[0].id, TheoremId::B20);
    }
}
