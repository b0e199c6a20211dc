use std::fmt;
use std::time::Duration;

use crate::semantics::{SemanticsId, SemanticsSpec};

use super::case::Case;
use super::expect::Expectation;
use super::property::{check_case, Ctx, Outcome, Property};

/// A case on which a property failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub case: Case,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    NoCounterexample,
    Counterexample(Box<Counterexample>),
    /// No case exercised the property.
    Skipped,
}

impl Verdict {
    pub fn token(&self) -> &'static str {
        match self {
            Verdict::NoCounterexample => "no-counterexample",
            Verdict::Counterexample(_) => "counterexample",
            Verdict::Skipped => "skipped",
        }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Counterexample(c) => Some(c),
            _ => None,
        }
    }
}

/// Outcome of the search for one property of one semantics.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub property: Property,
    pub semantics: SemanticsId,
    pub verdict: Verdict,
    /// Cases on which the property was actually checked.
    pub trials: usize,
    /// Cases that did not exercise the property or hit the evaluation cap.
    pub skipped: usize,
    pub elapsed: Duration,
}

impl PropertyReport {
    /// `PROP <prop> <sem> <verdict> <trials>`.
    pub fn line(&self) -> String {
        format!("PROP {} {} {} {}", self.property, self.semantics.short(), self.verdict.token(), self.trials)
    }

    /// Re-runs the counterexample, if any; true when it still fails.
    pub fn replay(&self) -> Option<bool> {
        let cx = self.verdict.counterexample()?;
        let spec = SemanticsSpec::new(self.semantics);
        let mut ctx = Ctx::new(&cx.case, &spec);
        Some(matches!(check_case(self.property, &mut ctx), Outcome::Violated(_)))
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.line())?;
        if let Some(cx) = self.verdict.counterexample() {
            writeln!(f, "  {}", cx.detail)?;
            for l in cx.case.to_string().lines() {
                writeln!(f, "  | {l}")?;
            }
        }
        Ok(())
    }
}

/// A cell whose verdict contradicts the expectation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub property: Property,
    pub semantics: SemanticsId,
    pub expected: Expectation,
    pub verdict: &'static str,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let want = match self.expected {
            Expectation::Holds => "expected to hold",
            Expectation::Fails => "expected to fail",
            Expectation::Unknown => "unconstrained",
        };
        write!(f, "MISMATCH {} {} {want} but got {}", self.property, self.semantics.short(), self.verdict)
    }
}

/// Expected holds needs a clean search; expected fails needs a counterexample.
pub fn mismatch(report: &PropertyReport, expected: Expectation) -> Option<Mismatch> {
    let bad = match expected {
        Expectation::Holds => report.verdict != Verdict::NoCounterexample,
        Expectation::Fails => report.verdict.counterexample().is_none(),
        Expectation::Unknown => false,
    };
    bad.then(|| Mismatch {
        property: report.property,
        semantics: report.semantics,
        expected,
        verdict: report.verdict.token(),
    })
}

/// Every cell of the property matrix.
#[derive(Debug, Clone)]
pub struct MatrixReport {
    pub seed: u64,
    pub reports: Vec<PropertyReport>,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl MatrixReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Property rows, semantics columns: `+` no counterexample, `-`
    /// counterexample, `.` skipped, with `!` marking a mismatch.
    pub fn table(&self) -> String {
        let mut out = format!("{:<24}", "");
        for s in SemanticsId::ALL {
            out.push_str(&format!("{:>6}", s.short()));
        }
        out.push('\n');
        for p in Property::ALL {
            out.push_str(&format!("{:<24}", p.id()));
            for s in SemanticsId::ALL {
                let Some(r) = self.reports.iter().find(|r| r.property == p && r.semantics == s) else {
                    out.push_str(&format!("{:>6}", ""));
                    continue;
                };
                let c = match r.verdict {
                    Verdict::NoCounterexample => "+",
                    Verdict::Counterexample(_) => "-",
                    Verdict::Skipped => ".",
                };
                let flag = if self.mismatches.iter().any(|m| m.property == p && m.semantics == s) { "!" } else { "" };
                out.push_str(&format!("{:>6}", format!("{c}{flag}")));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MatrixReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# property matrix, seed {}", self.seed)?;
        write!(f, "{}", self.table())?;
        for r in &self.reports {
            writeln!(f, "{}", r.line())?;
        }
        for m in &self.mismatches {
            writeln!(f, "{m}")?;
        }
        writeln!(f, "MATRIX {} {} mismatches", if self.passed() { "PASS" } else { "FAIL" }, self.mismatches.len())
    }
}
