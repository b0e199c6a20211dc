use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Database, Label, Relabeling, Renaming};
use crate::rpq::Regex;
use crate::semantics::CostTable;

use super::gen::{gen_database, gen_extension, gen_regex, gen_relabeling, gen_renaming, GenParams};

/// Everything one property trial needs: a database with a superdatabase,
/// two queries, a renaming and a relabeling.
///
/// Directed cases leave the parts they do not care about at their neutral
/// value (`ext = db`, `other = query`, identity maps).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub db: Database,
    pub query: Regex,
    pub ext: Database,
    pub other: Regex,
    pub renaming: Renaming,
    pub relabeling: Relabeling,
}

impl Case {
    pub fn new(name: &str, db: Database, query: Regex) -> Self {
        Case {
            name: name.to_string(),
            ext: db.clone(),
            other: query.clone(),
            db,
            query,
            renaming: Renaming::identity(),
            relabeling: Relabeling::identity(),
        }
    }

    pub fn with_ext(mut self, ext: Database) -> Self {
        self.ext = ext;
        self
    }

    pub fn with_other(mut self, other: Regex) -> Self {
        self.other = other;
        self
    }

    pub fn with_renaming(mut self, nu: Renaming) -> Self {
        self.renaming = nu;
        self
    }

    pub fn with_relabeling(mut self, lambda: Relabeling) -> Self {
        self.relabeling = lambda;
        self
    }

    /// Random case for trial `i`. Its database and query are those of
    /// [`super::Instance::random`] for the same trial.
    pub fn random(params: &GenParams, trial: u64) -> Self {
        let mut rng = params.rng(trial);
        let db = gen_database(&mut rng, params);
        let query = gen_regex(&mut rng, params);
        let other = gen_regex(&mut rng, params);
        let ext = gen_extension(&mut rng, &db, params);
        let renaming = gen_renaming(&mut rng, &db);
        let relabeling = gen_relabeling(&mut rng, &db, &query);
        Case { name: format!("trial-{trial}"), db, query, ext, other, renaming, relabeling }
    }

    /// Every label in sight, sorted.
    pub fn labels(&self) -> Vec<Label> {
        let mut set: BTreeSet<Label> = BTreeSet::new();
        set.extend(self.db.labels().iter().cloned());
        set.extend(self.ext.labels().iter().cloned());
        set.extend(self.query.atoms().into_iter().cloned());
        set.extend(self.other.atoms().into_iter().cloned());
        set.into_iter().collect()
    }

    /// Costs `1, 2, 3, ...` in label order, for cheapest-walk semantics.
    pub fn costs(&self) -> CostTable {
        let mut c = CostTable::new();
        for (i, a) in self.labels().into_iter().enumerate() {
            c.set(a, i as u64 + 1).expect("positive cost");
        }
        c
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {}", self.name)?;
        writeln!(f, "query {}", self.query)?;
        if self.other != self.query {
            writeln!(f, "other {}", self.other)?;
        }
        for line in self.db.to_text().lines() {
            writeln!(f, "  {line}")?;
        }
        if self.ext != self.db {
            writeln!(f, "extension")?;
            for line in self.ext.to_text().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        if self.renaming != Renaming::identity() {
            writeln!(f, "renaming {:?}", self.renaming)?;
        }
        if self.relabeling != Relabeling::identity() {
            writeln!(f, "relabeling {:?}", self.relabeling)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::Instance;

    #[test]
    fn random_case_extends_the_instance() {
        let p = GenParams::default();
        for i in 0..50 {
            let c = Case::random(&p, i);
            let inst = Instance::random(&p, i);
            assert_eq!((&c.db, &c.query), (&inst.db, &inst.query));
            assert!(c.db.is_subdatabase_of(&c.ext));
            assert_eq!(c, Case::random(&p, i));
        }
    }

    #[test]
    fn costs_cover_all_labels() {
        let c = Case::random(&GenParams::default(), 3);
        let costs = c.costs();
        for a in c.labels() {
            assert!(costs.get(&a).is_some());
        }
    }
}
