use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Database, Label};

/// Positive integer cost per label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CostTable {
    costs: BTreeMap<Label, u64>,
}

impl CostTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every label of `db` costs 1.
    pub fn uniform(db: &Database) -> Self {
        CostTable { costs: db.labels().iter().map(|a| (a.clone(), 1)).collect() }
    }

    pub fn set(&mut self, label: Label, cost: u64) -> Result<()> {
        if cost == 0 {
            return Err(Error::Input(format!("cost of {label} must be positive")));
        }
        self.costs.insert(label, cost);
        Ok(())
    }

    pub fn with(mut self, label: Label, cost: u64) -> Result<Self> {
        self.set(label, cost)?;
        Ok(self)
    }

    pub fn get(&self, label: &Label) -> Option<u64> {
        self.costs.get(label).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, u64)> + '_ {
        self.costs.iter().map(|(a, c)| (a, *c))
    }

    /// Parses lines `<label> <positive-int>`; blank lines and `#` comments
    /// are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut t = CostTable::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: &str| Error::GraphFormat { line: i + 1, message: m.to_string() };
            let mut parts = line.split_whitespace();
            let (Some(a), Some(c), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad("expected `<label> <cost>`"));
            };
            let label = Label::new(a)?;
            let cost: u64 = c.parse().map_err(|_| bad("cost is not a positive integer"))?;
            if cost == 0 {
                return Err(bad("cost must be positive"));
            }
            if t.costs.insert(label, cost).is_some() {
                return Err(bad("duplicate label"));
            }
        }
        Ok(t)
    }

    /// Cost of each edge of `db`, by edge index.
    pub(crate) fn edge_weights(&self, db: &Database) -> Result<Vec<u64>> {
        (0..db.num_edges())
            .map(|e| {
                let a = db.label(db.edge_label(e));
                self.get(a).ok_or_else(|| Error::Input(format!("no cost for label {a}")))
            })
            .collect()
    }
}

impl fmt::Display for CostTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, c) in &self.costs {
            writeln!(f, "{a} {c}")?;
        }
        Ok(())
    }
}
