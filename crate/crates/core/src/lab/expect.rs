use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::semantics::SemanticsId;

use super::property::Property;

/// What is known about one property of one semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    Fails,
    Unknown,
}

impl Expectation {
    pub fn code(self) -> char {
        match self {
            Expectation::Holds => '+',
            Expectation::Fails => '-',
            Expectation::Unknown => '?',
        }
    }
}

/// The full property × semantics table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectations {
    cells: BTreeMap<(Property, SemanticsId), Expectation>,
}

const BUILTIN: &str = include_str!("../../data/expectations.tsv");

impl Expectations {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("shipped expectation table is well formed")
    }

    /// Reads a tab-separated table: a header row naming the semantics, then
    /// one row per property with `+`, `-` or `?` cells. `#` starts a comment
    /// line. Every cell must be present.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |n: usize, msg: String| Error::Input(format!("expectations line {n}: {msg}"));
        let mut rows = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let (hn, header) = rows.next().ok_or_else(|| Error::Input("empty expectation table".into()))?;
        let mut cols = header.split('\t');
        if cols.next() != Some("property") {
            return Err(bad(hn + 1, "header must start with `property`".into()));
        }
        let sems = cols.map(str::parse::<SemanticsId>).collect::<Result<Vec<_>>>()?;
        let mut cells = BTreeMap::new();
        for (n, line) in rows {
            let mut it = line.split('\t');
            let prop: Property = it.next().unwrap_or_default().parse()?;
            let codes: Vec<&str> = it.collect();
            if codes.len() != sems.len() {
                return Err(bad(n + 1, format!("{} cells for {} semantics", codes.len(), sems.len())));
            }
            for (&sem, code) in sems.iter().zip(codes) {
                let e = match code {
                    "+" => Expectation::Holds,
                    "-" => Expectation::Fails,
                    "?" => Expectation::Unknown,
                    _ => return Err(bad(n + 1, format!("bad cell {code:?}"))),
                };
                if cells.insert((prop, sem), e).is_some() {
                    return Err(bad(n + 1, format!("duplicate cell {prop} {sem}")));
                }
            }
        }
        for p in Property::ALL {
            for s in SemanticsId::ALL {
                if !cells.contains_key(&(p, s)) {
                    return Err(Error::Input(format!("expectations: no cell for {p} {s}")));
                }
            }
        }
        Ok(Expectations { cells })
    }

    pub fn get(&self, prop: Property, sem: SemanticsId) -> Expectation {
        self.cells[&(prop, sem)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_table_is_complete() {
        let t = Expectations::builtin();
        assert_eq!(t.get(Property::Monotony, SemanticsId::Shortest), Expectation::Fails);
        assert_eq!(t.get(Property::VertexCoverage, SemanticsId::Shvc), Expectation::Holds);
        assert_eq!(t.get(Property::Unboundedness, SemanticsId::Trail), Expectation::Unknown);
    }

    #[test]
    fn order_only_properties_are_unknown_elsewhere() {
        let t = Expectations::builtin();
        for p in Property::ALL.into_iter().filter(|p| p.order_only()) {
            for s in SemanticsId::ALL.into_iter().filter(|s| !s.is_order_based()) {
                assert_eq!(t.get(p, s), Expectation::Unknown, "{p} {s}");
            }
        }
    }

    #[test]
    fn missing_cells_are_rejected() {
        assert!(Expectations::parse("property\tTr\nmonotony\t+\n").is_err());
        let bad = BUILTIN.replacen("\t+", "\tx", 1);
        assert!(Expectations::parse(&bad).is_err());
    }
}
