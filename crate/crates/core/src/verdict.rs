//! Structured results of the property checks.
//!
//! Every verifier returns a [`Verdict`]: a status plus named witnesses
//! (node values, bounds, offending intervals) that make a failure
//! independently re-checkable by exact evaluation.

use std::fmt;

use crate::meixner::MeixnerParams;
use crate::rational::{exact_str, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A hypothesis of the checked statement does not hold at these
    /// parameters (degree below threshold, parameter out of range, or a
    /// boundary equality case).
    NotApplicable,
    /// The non-vanishing hypothesis fails exactly (common zero, node hit).
    Degenerate,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "NOT_APPLICABLE",
            Status::Degenerate => "DEGENERATE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessValue {
    Value(Rational),
    Interval { lo: Rational, hi: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub name: String,
    pub value: WitnessValue,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            WitnessValue::Value(v) => write!(f, "{}={}", self.name, exact_str(v)),
            WitnessValue::Interval { lo, hi } => {
                write!(f, "{}=[{}, {}]", self.name, exact_str(lo), exact_str(hi))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub check_id: String,
    pub params: Option<MeixnerParams>,
    pub witnesses: Vec<Witness>,
    pub detail: String,
}

impl Verdict {
    pub fn new(status: Status, check_id: &str) -> Self {
        Verdict {
            status,
            check_id: check_id.to_string(),
            params: None,
            witnesses: Vec::new(),
            detail: String::new(),
        }
    }

    pub fn pass(check_id: &str) -> Self {
        Verdict::new(Status::Pass, check_id)
    }

    pub fn fail(check_id: &str) -> Self {
        Verdict::new(Status::Fail, check_id)
    }

    pub fn not_applicable(check_id: &str) -> Self {
        Verdict::new(Status::NotApplicable, check_id)
    }

    pub fn degenerate(check_id: &str) -> Self {
        Verdict::new(Status::Degenerate, check_id)
    }

    pub fn with_params(mut self, params: &MeixnerParams) -> Self {
        self.params = Some(params.clone());
        self
    }

    pub fn with_id(mut self, check_id: &str) -> Self {
        self.check_id = check_id.to_string();
        self
    }

    pub fn with_value(mut self, name: &str, value: Rational) -> Self {
        self.witnesses.push(Witness {
            name: name.to_string(),
            value: WitnessValue::Value(value),
        });
        self
    }

    pub fn with_interval(mut self, name: &str, lo: Rational, hi: Rational) -> Self {
        self.witnesses.push(Witness {
            name: name.to_string(),
            value: WitnessValue::Interval { lo, hi },
        });
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.check_id, self.status)?;
        if let Some(p) = &self.params {
            write!(
                f,
                " [n={}, beta={}, c={}]",
                p.n(),
                exact_str(p.beta()),
                exact_str(p.c())
            )?;
        }
        for w in &self.witnesses {
            write!(f, " {w}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}
