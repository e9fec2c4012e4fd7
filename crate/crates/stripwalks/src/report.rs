//! Verification report records shared by the identity, decomposition and
//! structure checkers.

use serde::Serialize;
use serde_json::{json, Value};

/// Outcome of one check at one width.
///
/// `residual_degree` is the t-degree of the nonzero residual polynomial when
/// an identity fails after clearing denominators; it is `null` for passing
/// checks and for checks that compare series rather than polynomials.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub kind: String,
    pub w: u64,
    pub ok: bool,
    pub residual_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn holds(kind: &str, w: usize) -> Self {
        CheckResult {
            kind: kind.to_owned(),
            w: w as u64,
            ok: true,
            residual_degree: None,
            note: None,
        }
    }

    pub fn fails(kind: &str, w: usize, residual_degree: Option<usize>) -> Self {
        CheckResult {
            kind: kind.to_owned(),
            w: w as u64,
            ok: false,
            residual_degree: residual_degree.map(|d| d as u64),
            note: None,
        }
    }

    /// Vacuously true entry for widths the identity does not cover.
    pub fn not_applicable(kind: &str, w: usize, why: &str) -> Self {
        CheckResult {
            kind: kind.to_owned(),
            w: w as u64,
            ok: true,
            residual_degree: None,
            note: Some(format!("not applicable: {why}")),
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_owned());
        self
    }
}

pub fn all_ok(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.ok)
}

/// Aggregate report: `{"ok": ..., "checks": [...]}`.
pub fn to_json_report(checks: &[CheckResult]) -> Value {
    json!({
        "ok": all_ok(checks),
        "checks": checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_shape() {
        let checks = vec![
            CheckResult::holds("theorem1", 4),
            CheckResult::not_applicable("theorem1", 3, "needs four predecessors"),
            CheckResult::fails("theorem1", 5, Some(7)),
        ];
        assert!(!all_ok(&checks));
        let v = to_json_report(&checks);
        assert_eq!(v["ok"], false);
        assert_eq!(v["checks"][0]["kind"], "theorem1");
        assert_eq!(v["checks"][0]["residual_degree"], Value::Null);
        assert!(v["checks"][0].get("note").is_none());
        assert!(v["checks"][1]["note"]
            .as_str()
            .unwrap()
            .starts_with("not applicable"));
        assert_eq!(v["checks"][2]["residual_degree"], 7);
    }
}
