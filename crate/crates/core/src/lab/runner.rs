use std::time::{Duration, Instant};

use crate::semantics::{SemanticsId, SemanticsSpec};

use super::case::Case;
use super::expect::{Expectation, Expectations};
use super::gen::GenParams;
use super::property::{check_case, Ctx, Outcome, Property};
use super::report::{mismatch, Counterexample, MatrixReport, PropertyReport, Verdict};
use super::witness::directed_cases;

/// Search state of one (property, semantics) cell.
struct Cell {
    property: Property,
    trials: usize,
    skipped: usize,
    found: Option<Counterexample>,
    elapsed: Duration,
}

impl Cell {
    fn new(property: Property) -> Self {
        Cell { property, trials: 0, skipped: 0, found: None, elapsed: Duration::ZERO }
    }

    fn open(&self) -> bool {
        self.found.is_none()
    }

    fn record(&mut self, case: &Case, cx: &mut Ctx<'_>) {
        let t = Instant::now();
        match check_case(self.property, cx) {
            Outcome::Holds => self.trials += 1,
            Outcome::Violated(detail) => {
                self.trials += 1;
                self.found = Some(Counterexample { case: case.clone(), detail });
            }
            Outcome::Skipped => self.skipped += 1,
        }
        self.elapsed += t.elapsed();
    }

    fn finish(self, semantics: SemanticsId) -> PropertyReport {
        let verdict = match self.found {
            Some(c) => Verdict::Counterexample(Box::new(c)),
            None if self.trials == 0 => Verdict::Skipped,
            None => Verdict::NoCounterexample,
        };
        PropertyReport {
            property: self.property,
            semantics,
            verdict,
            trials: self.trials,
            skipped: self.skipped,
            elapsed: self.elapsed,
        }
    }
}

/// Runs the directed cases of every property, then `params.trials` random
/// cases, stopping each cell at its first counterexample. One evaluation
/// cache per case is shared by all properties.
fn run_cells(spec: &SemanticsSpec, props: &[Property], params: &GenParams) -> Vec<PropertyReport> {
    let mut cells: Vec<Cell> = props.iter().copied().filter(|p| p.applies_to(spec.id)).map(Cell::new).collect();
    for cell in cells.iter_mut() {
        for case in directed_cases(cell.property) {
            if !cell.open() {
                break;
            }
            let mut cx = Ctx::new(&case, spec);
            cell.record(&case, &mut cx);
        }
    }
    for trial in 0..params.trials as u64 {
        if !cells.iter().any(|c| c.open() && c.property.uses_random_cases()) {
            break;
        }
        let case = Case::random(params, trial);
        let mut cx = Ctx::new(&case, spec);
        for cell in cells.iter_mut().filter(|c| c.open() && c.property.uses_random_cases()) {
            cell.record(&case, &mut cx);
        }
    }
    cells.into_iter().map(|c| c.finish(spec.id)).collect()
}

/// Searches for a counterexample to `prop` under `spec`.
pub fn check_property(prop: Property, spec: &SemanticsSpec, params: &GenParams) -> PropertyReport {
    run_cells(spec, &[prop], params).pop().unwrap_or_else(|| PropertyReport {
        property: prop,
        semantics: spec.id,
        verdict: Verdict::Skipped,
        trials: 0,
        skipped: 0,
        elapsed: Duration::ZERO,
    })
}

/// The cells `props × sems`, compared with `expected`.
pub fn run_matrix_for(
    params: &GenParams,
    props: &[Property],
    sems: &[SemanticsId],
    expected: &Expectations,
    cap: usize,
) -> MatrixReport {
    let start = Instant::now();
    let mut reports = Vec::new();
    for &sem in sems {
        let spec = SemanticsSpec::new(sem).with_cap(cap);
        reports.extend(run_cells(&spec, props, params));
    }
    let mismatches = reports.iter().filter_map(|r| mismatch(r, expected.get(r.property, r.semantics))).collect();
    MatrixReport { seed: params.seed, reports, mismatches, elapsed: start.elapsed() }
}

/// Every property for every semantics, compared with `expected`.
pub fn run_matrix_with(params: &GenParams, expected: &Expectations, cap: usize) -> MatrixReport {
    run_matrix_for(params, &Property::ALL, &SemanticsId::ALL, expected, cap)
}

/// [`run_matrix_with`] against the shipped table.
pub fn run_matrix(params: &GenParams) -> MatrixReport {
    run_matrix_with(params, &Expectations::builtin(), crate::semantics::default_cap())
}

/// Cells of the shipped table that claim `e`.
pub fn expected_cells(e: Expectation) -> Vec<(Property, SemanticsId)> {
    let t = Expectations::builtin();
    Property::ALL
        .into_iter()
        .flat_map(|p| SemanticsId::ALL.into_iter().map(move |s| (p, s)))
        .filter(|&(p, s)| t.get(p, s) == e)
        .collect()
}
