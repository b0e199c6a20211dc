#![allow(dead_code)]

pub mod oracle;

use rpqlab::lab::Instance;
use rpqlab::semantics::CostTable;
use rpqlab::{evaluate, Database, Endpoints, Label, SemanticsId, SemanticsSpec, WalkSet};

use oracle::{test_costs, Reference};

/// Result of comparing one semantics on one instance with the reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Equal over the whole result.
    Full,
    /// Equal within a length or endpoint scope.
    Scoped,
    /// The reference could not decide within budget.
    Skipped,
    Mismatch(String),
}

pub fn cost_table(db: &Database) -> CostTable {
    let costs = test_costs(db);
    let mut t = CostTable::new();
    for (a, c) in db.labels().iter().zip(costs) {
        t.set(a.clone(), c).unwrap();
    }
    t
}

pub fn spec_for(db: &Database, id: SemanticsId) -> SemanticsSpec {
    let spec = SemanticsSpec::new(id).with_cap(200_000);
    if id == SemanticsId::Cheapest {
        spec.with_costs(cost_table(db))
    } else {
        spec
    }
}

pub fn engine(inst: &Instance, id: SemanticsId) -> rpqlab::Result<WalkSet> {
    evaluate(&inst.db, &inst.query, &spec_for(&inst.db, id), &Endpoints::any())
}

/// Compares every semantics on `inst`.
pub fn compare_all(inst: &Instance, budget: usize) -> Vec<(SemanticsId, Outcome)> {
    let mut reference = Reference::new(&inst.db, &inst.query, budget);
    let costs = test_costs(&inst.db);
    SemanticsId::ALL
        .iter()
        .map(|&id| {
            let outcome = match reference.expect(id, &costs) {
                None => Outcome::Skipped,
                Some(exp) => match engine(inst, id) {
                    Err(e) => Outcome::Mismatch(format!("engine error {e}")),
                    Ok(got) => {
                        let got = exp.restrict(&got);
                        if got == exp.set {
                            if exp.is_full() {
                                Outcome::Full
                            } else {
                                Outcome::Scoped
                            }
                        } else {
                            Outcome::Mismatch(format!(
                                "{id} on\n{}query {}\nengine:\n{}reference:\n{}",
                                inst.db.to_text(),
                                inst.query,
                                got,
                                exp.set
                            ))
                        }
                    }
                },
            };
            (id, outcome)
        })
        .collect()
}

pub fn label(s: &str) -> Label {
    s.parse().unwrap()
}
