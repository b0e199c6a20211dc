//! The inclusion lattice between semantics, checked on random instances.

use std::fmt;

use crate::graph::{Database, Walk};
use crate::matcher::Endpoints;
use crate::rpq::Regex;
use crate::semantics::{evaluate, SemanticsId, SemanticsSpec};

use super::gen::{GenParams, Instance};

use SemanticsId::*;

/// Claimed inclusions `S_sub(D,R) ⊆ S_sup(D,R)`, the covering edges of the
/// lattice of main semantics.
pub const LATTICE: [(SemanticsId, SemanticsId); 12] = [
    (Acyclic, Swc),
    (Swc, Trail),
    (Trail, BindingTrail),
    (Shms, MinMultiset),
    (MinMultiset, SubwalkMin),
    (SubwalkMin, BindingTrail),
    (Shortest, Shvc),
    (Shvc, Shec),
    (Shms, Shortest),
    (Acyclic, Shms),
    (Shortest, Shac),
    (Shac, BindingTrail),
];

/// Pairs that should be incomparable, checked in both directions.
pub const INCOMPARABLE: [(SemanticsId, SemanticsId); 2] = [(Shortest, Trail), (Shvc, Trail)];

/// A walk in `S_left(D,R)` but not in `S_right(D,R)`, kept as text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub left: SemanticsId,
    pub right: SemanticsId,
    pub db: &'static str,
    pub query: &'static str,
    pub walk: &'static str,
}

impl Witness {
    pub fn parts(&self) -> (Database, Regex, Walk) {
        (
            Database::parse(self.db).expect("frozen database"),
            Regex::parse(self.query).expect("frozen query"),
            self.walk.parse().expect("frozen walk"),
        )
    }

    /// Whether the walk really separates the two semantics.
    pub fn holds(&self) -> bool {
        let (db, r, w) = self.parts();
        let eval = |id| evaluate(&db, &r, &SemanticsSpec::new(id), &Endpoints::any());
        matches!((eval(self.left), eval(self.right)), (Ok(a), Ok(b)) if a.contains(&w) && !b.contains(&w))
    }
}

const fn wit(
    left: SemanticsId,
    right: SemanticsId,
    db: &'static str,
    query: &'static str,
    walk: &'static str,
) -> Witness {
    Witness { left, right, db, query, walk }
}

const LOOP_A: &str = "E e1 v1 v1 a\n";
const LOOP_B: &str = "E e1 v1 v1 b\n";
const LOOP_AA: &str = "E e1 v1 v1 a\nE e2 v1 v1 a\n";
const LOOP_AB: &str = "E e1 v1 v1 a\nE e2 v1 v1 b\n";
const LOOP_BA: &str = "E e1 v1 v1 b\nE e2 v1 v1 a\n";
const TWO_CYCLE: &str = "E e1 v2 v1 a\nE e2 v1 v2 b\n";

/// Separating walks, each found once by random search and frozen here.
pub const WITNESSES: &[Witness] = &[
    wit(Swc, Acyclic, LOOP_B, "b", "v1 -e1-> v1"),
    wit(Trail, Swc, "E e1 v1 v1 b\nE e2 v1 v1 b\n", "b*", "v1 -e1-> v1 -e2-> v1"),
    wit(BindingTrail, Trail, LOOP_A, "a a", "v1 -e1-> v1 -e1-> v1"),
    wit(MinMultiset, Shms, LOOP_AA, "a a", "v1 -e1-> v1 -e2-> v1"),
    wit(SubwalkMin, MinMultiset, LOOP_BA, "(b + a a) (a + b) a b", "v1 -e2-> v1 -e2-> v1 -e1-> v1 -e2-> v1 -e1-> v1"),
    wit(BindingTrail, SubwalkMin, LOOP_A, "a*", "v1 -e1-> v1"),
    wit(Shvc, Shortest, TWO_CYCLE, "(b* + a)*", "v1 -e2-> v2 -e1-> v1"),
    wit(Shec, Shvc, LOOP_A, "a*", "v1 -e1-> v1"),
    wit(Shortest, Shms, LOOP_AA, "a a", "v1 -e1-> v1 -e2-> v1"),
    wit(Shms, Acyclic, LOOP_B, "b", "v1 -e1-> v1"),
    wit(Shac, Shortest, LOOP_A, "a*", "v1 -e1-> v1"),
    wit(BindingTrail, Shac, "V v1\n", "eps", "v1"),
    // the three claimed inclusions that do not hold
    wit(Shms, Shortest, LOOP_AB, "a + (b + a) b", "v1 -e2-> v1 -e2-> v1"),
    wit(Shortest, Shac, "V v1\n", "eps", "v1"),
    wit(Shac, BindingTrail, TWO_CYCLE, "(b* + a)*", "v1 -e2-> v2 -e1-> v1 -e2-> v2"),
    // incomparable pairs
    wit(Shortest, Trail, LOOP_A, "a a", "v1 -e1-> v1 -e1-> v1"),
    wit(Trail, Shortest, LOOP_A, "a*", "v1 -e1-> v1"),
    wit(Shvc, Trail, LOOP_A, "a a", "v1 -e1-> v1 -e1-> v1"),
    wit(Trail, Shvc, LOOP_A, "a*", "v1 -e1-> v1"),
];

/// Frozen witness showing `S_left ⊄ S_right`.
pub fn witness(left: SemanticsId, right: SemanticsId) -> Option<&'static Witness> {
    WITNESSES.iter().find(|w| w.left == left && w.right == right)
}

/// A lattice edge after checking.
#[derive(Debug, Clone)]
pub struct EdgeReport {
    pub sub: SemanticsId,
    pub sup: SemanticsId,
    pub trials: usize,
    /// First instance where the inclusion fails: frozen witnesses are tried
    /// before the random instances.
    pub counterexample: Option<(Instance, Walk)>,
    pub strict: Option<&'static Witness>,
}

impl EdgeReport {
    pub fn verified(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for EdgeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.sub.short(), self.sup.short());
        match &self.counterexample {
            None => write!(f, "INCL {a} {b} VERIFIED {}", self.trials)?,
            Some((inst, w)) => write!(f, "INCL {a} {b} REFUTED {}\n  {w} under {}", self.trials, inst.query)?,
        }
        match self.strict {
            Some(w) => write!(f, "\nSTRICT {a} {b} {}", w.walk),
            None => write!(f, "\nSTRICT {a} {b} none"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct InclusionReport {
    pub seed: u64,
    pub edges: Vec<EdgeReport>,
    /// `(left, right, witness)`; `None` when no frozen witness holds.
    pub separations: Vec<(SemanticsId, SemanticsId, Option<&'static Witness>)>,
}

impl InclusionReport {
    pub fn passed(&self) -> bool {
        self.edges.iter().all(|e| e.verified() && e.strict.is_some())
            && self.separations.iter().all(|(_, _, w)| w.is_some())
    }
}

impl fmt::Display for InclusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# inclusion lattice, seed {}", self.seed)?;
        for e in &self.edges {
            writeln!(f, "{e}")?;
        }
        for (l, r, w) in &self.separations {
            let state = if w.is_some() { "WITNESSED" } else { "UNWITNESSED" };
            writeln!(f, "NOTSUB {} {} {state}", l.short(), r.short())?;
        }
        writeln!(f, "INCLUSIONS {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn first_escape(inst: &Instance, sub: SemanticsId, sup: SemanticsId, cap: usize) -> Option<Walk> {
    let eval = |id| evaluate(&inst.db, &inst.query, &SemanticsSpec::new(id).with_cap(cap), &Endpoints::any());
    match (eval(sub), eval(sup)) {
        (Ok(a), Ok(b)) => a.iter().find(|w| !b.contains(w)).cloned(),
        _ => None,
    }
}

/// Checks one edge on the frozen witness instances, then on `params.trials`
/// random ones.
pub fn check_edge(sub: SemanticsId, sup: SemanticsId, params: &GenParams, cap: usize) -> EdgeReport {
    let frozen = WITNESSES.iter().map(|w| {
        let (db, r, _) = w.parts();
        Instance::new(db, r)
    });
    let random = (0..params.trials as u64).map(|i| Instance::random(params, i));
    let mut trials = 0;
    let mut counterexample = None;
    for inst in frozen.chain(random) {
        trials += 1;
        if let Some(w) = first_escape(&inst, sub, sup, cap) {
            counterexample = Some((inst, w));
            break;
        }
    }
    let strict = witness(sup, sub).filter(|w| w.holds());
    EdgeReport { sub, sup, trials, counterexample, strict }
}

pub fn check_inclusions(params: &GenParams, cap: usize) -> InclusionReport {
    let edges = LATTICE.iter().map(|&(a, b)| check_edge(a, b, params, cap)).collect();
    let separations = INCOMPARABLE
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .map(|(l, r)| (l, r, witness(l, r).filter(|w| w.holds())))
        .collect();
    InclusionReport { seed: params.seed, edges, separations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_witnesses_separate() {
        for w in WITNESSES {
            assert!(w.holds(), "{} ⊄ {}: {}", w.left.short(), w.right.short(), w.walk);
        }
    }

    #[test]
    fn filter_chain_on_a_few_instances() {
        let p = GenParams { trials: 30, ..GenParams::default() };
        let e = check_edge(Acyclic, Swc, &p, 10_000);
        assert!(e.verified());
        assert!(e.to_string().starts_with("INCL Ac SWC VERIFIED"));
    }
}
