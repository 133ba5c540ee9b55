//! Serializable report types and renderers shared by the CLI and the
//! verification harness. JSON output is deterministic: field order is
//! fixed and timing data lives in a separate field that callers may zero.

use serde::Serialize;

use crate::tau::TauReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub schema_version: u32,
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub exponent: u64,
    pub center_order: usize,
    pub derived_order: usize,
    pub num_classes: usize,
    pub character_degrees: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TauReportOut {
    pub schema_version: u32,
    #[serde(flatten)]
    pub report: TauReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
    BoundOnly,
    SkippedWithReason,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub group: String,
    pub expected_tau: u64,
    pub expected_tau_irr: Option<u64>,
    pub computed_tau: Option<u64>,
    pub computed_tau_irr: Option<u64>,
    pub exact: bool,
    pub status: RowStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// timing; excluded from determinism comparisons
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub table: String,
    pub p: u64,
    pub rows: Vec<VerifyRow>,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn all_accounted(&self) -> bool {
        self.matched + self.mismatched + self.skipped == self.rows.len()
    }

    pub fn success(&self) -> bool {
        self.mismatched == 0
    }

    /// JSON with timing fields zeroed, for byte-identical reruns.
    pub fn stable_json(&self) -> String {
        let mut clone = self.clone();
        for r in &mut clone.rows {
            r.millis = 0;
        }
        serde_json::to_string_pretty(&clone).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "table {} at p = {}: {} rows, {} matched, {} mismatched, {} skipped\n",
            self.table,
            self.p,
            self.rows.len(),
            self.matched,
            self.mismatched,
            self.skipped
        ));
        out.push_str(&format!(
            "{:<22} {:>9} {:>9} {:>9} {:>9}  {:<8} note\n",
            "group", "tau", "tau_irr", "got_tau", "got_irr", "status"
        ));
        for r in &self.rows {
            let fmt_opt = |v: &Option<u64>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{:<22} {:>9} {:>9} {:>9} {:>9}  {:<8} {}\n",
                r.group,
                r.expected_tau,
                fmt_opt(&r.expected_tau_irr),
                fmt_opt(&r.computed_tau),
                fmt_opt(&r.computed_tau_irr),
                match r.status {
                    RowStatus::Match => "match",
                    RowStatus::Mismatch => "MISMATCH",
                    RowStatus::BoundOnly => "bound",
                    RowStatus::SkippedWithReason => "skipped",
                },
                r.note.as_deref().unwrap_or(""),
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("group,expected_tau,expected_tau_irr,computed_tau,computed_tau_irr,status,note\n");
        for r in &self.rows {
            let fmt_opt = |v: &Option<u64>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{},{},{},{},{},{:?},{}\n",
                r.group,
                r.expected_tau,
                fmt_opt(&r.expected_tau_irr),
                fmt_opt(&r.computed_tau),
                fmt_opt(&r.computed_tau_irr),
                r.status,
                r.note.as_deref().unwrap_or("").replace(',', ";"),
            ));
        }
        out
    }
}
