//! Report records: serializable snapshots of verdicts.
//!
//! Rationals are carried as exact `num/den` strings alongside a decimal
//! rendering with enough digits for the configured width, so records can
//! be re-checked independently.

use serde_json::{json, Value};

use qmeixner::rational::exact_str;
use qmeixner::{Rational, Status, Verdict, WitnessValue};

use crate::render::decimal_for_width;

#[derive(Debug, Clone)]
pub struct WitnessRepr {
    pub name: String,
    /// `value` for points, `lo`/`hi` for intervals.
    pub exact: WitnessValue,
    pub decimal: String,
}

#[derive(Debug, Clone)]
pub struct ReportRecord {
    pub check: String,
    pub n: Option<usize>,
    pub beta: Option<String>,
    pub c: Option<String>,
    pub status: Status,
    pub witnesses: Vec<WitnessRepr>,
    pub detail: String,
    pub elapsed_ms: Option<u128>,
}

impl ReportRecord {
    pub fn from_verdict(v: &Verdict, width: &Rational, elapsed_ms: Option<u128>) -> Self {
        let witnesses = v
            .witnesses
            .iter()
            .map(|w| {
                let decimal = match &w.value {
                    WitnessValue::Value(r) => decimal_for_width(r, width),
                    WitnessValue::Interval { lo, hi } => {
                        let mid = (lo + hi) / Rational::from_integer(2.into());
                        decimal_for_width(&mid, width)
                    }
                };
                WitnessRepr {
                    name: w.name.clone(),
                    exact: w.value.clone(),
                    decimal,
                }
            })
            .collect();
        ReportRecord {
            check: v.check_id.clone(),
            n: v.params.as_ref().map(|p| p.n()),
            beta: v.params.as_ref().map(|p| exact_str(p.beta())),
            c: v.params.as_ref().map(|p| exact_str(p.c())),
            status: v.status,
            witnesses,
            detail: v.detail.clone(),
            elapsed_ms,
        }
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| match &w.exact {
                WitnessValue::Value(r) => json!({
                    "name": w.name,
                    "value": exact_str(r),
                    "decimal": w.decimal,
                }),
                WitnessValue::Interval { lo, hi } => json!({
                    "name": w.name,
                    "lo": exact_str(lo),
                    "hi": exact_str(hi),
                    "decimal": w.decimal,
                }),
            })
            .collect();
        let mut obj = json!({
            "check": self.check,
            "status": self.status.as_str(),
            "witnesses": witnesses,
            "detail": self.detail,
        });
        let map = obj.as_object_mut().unwrap();
        if let Some(n) = self.n {
            map.insert("n".into(), json!(n));
        }
        if let Some(beta) = &self.beta {
            map.insert("beta".into(), json!(beta));
        }
        if let Some(c) = &self.c {
            map.insert("c".into(), json!(c));
        }
        if let Some(ms) = self.elapsed_ms {
            map.insert("elapsed_ms".into(), json!(ms));
        }
        obj
    }

    pub fn to_csv_row(&self) -> String {
        let witnesses = self
            .witnesses
            .iter()
            .map(|w| format!("{}={}", w.name, w.decimal))
            .collect::<Vec<_>>()
            .join(";")
            .replace(',', ";");
        let elapsed = self.elapsed_ms.map(|ms| ms.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.check,
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            self.beta.clone().unwrap_or_default(),
            self.c.clone().unwrap_or_default(),
            self.status.as_str(),
            witnesses,
            self.detail.replace(',', ";"),
            elapsed
        )
    }

    pub fn to_pretty(&self) -> String {
        let mut line = format!("{:<26} {:<14}", self.check, self.status.as_str());
        if let (Some(n), Some(beta), Some(c)) = (self.n, &self.beta, &self.c) {
            line.push_str(&format!(" n={n:<3} beta={beta:<8} c={c:<5}"));
        }
        if !self.witnesses.is_empty() {
            let ws = self
                .witnesses
                .iter()
                .map(|w| format!("{}={}", w.name, w.decimal))
                .collect::<Vec<_>>()
                .join(" ");
            line.push_str(&format!(" {ws}"));
        }
        if !self.detail.is_empty() {
            line.push_str(&format!("  ({})", self.detail));
        }
        if let Some(ms) = self.elapsed_ms {
            line.push_str(&format!("  [{ms} ms]"));
        }
        line
    }
}

pub const CSV_HEADER: &str = "check,n,beta,c,status,witnesses,detail,elapsed_ms";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub degenerate: usize,
}

impl Summary {
    pub fn tally(records: &[ReportRecord]) -> Summary {
        let mut s = Summary::default();
        for r in records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::NotApplicable => s.not_applicable += 1,
                Status::Degenerate => s.degenerate += 1,
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.pass,
            "fail": self.fail,
            "not_applicable": self.not_applicable,
            "degenerate": self.degenerate,
        })
    }

    pub fn to_pretty(&self) -> String {
        format!(
            "summary: {} PASS, {} FAIL, {} NOT_APPLICABLE, {} DEGENERATE",
            self.pass, self.fail, self.not_applicable, self.degenerate
        )
    }
}
