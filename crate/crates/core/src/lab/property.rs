use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{characteristic_database, characteristic_expression, consistent_with, subwalk_leq, Database, Walk};
use crate::matcher::{matches_upto, try_matches_upto, Endpoints, WalkSet};
use crate::rpq::{regex_equivalent, Regex};
use crate::semantics::{eval_order_semantics, evaluate, trim, SemanticsId, SemanticsSpec, SuitableOrder};

use super::case::Case;
use super::ops::{concat_sets, factors_into, match_coverage, result_coverage, splits_into, star_upto};

/// The properties the laboratory can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    IdIndependence,
    LabelIndependence,
    ExpressionIndependence,
    Unboundedness,
    Monotony,
    CoMonotony,
    Restrictibility,
    ACompatibility,
    PlusComposability,
    PlusDecomposability,
    ConcatComposability,
    ConcatDecomposability,
    StarComposability,
    StarDecomposability,
    Continuity,
    VertexCoverage,
    EdgeCoverage,
    SubwalkGuarantee,
    AtomCoverage,
    TrimmedEquivalence,
    ElementInclusion,
}

impl Property {
    pub const ALL: [Property; 21] = [
        Property::IdIndependence,
        Property::LabelIndependence,
        Property::ExpressionIndependence,
        Property::Unboundedness,
        Property::Monotony,
        Property::CoMonotony,
        Property::Restrictibility,
        Property::ACompatibility,
        Property::PlusComposability,
        Property::PlusDecomposability,
        Property::ConcatComposability,
        Property::ConcatDecomposability,
        Property::StarComposability,
        Property::StarDecomposability,
        Property::Continuity,
        Property::VertexCoverage,
        Property::EdgeCoverage,
        Property::SubwalkGuarantee,
        Property::AtomCoverage,
        Property::TrimmedEquivalence,
        Property::ElementInclusion,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::IdIndependence => "id-independence",
            Property::LabelIndependence => "label-independence",
            Property::ExpressionIndependence => "expression-independence",
            Property::Unboundedness => "unboundedness",
            Property::Monotony => "monotony",
            Property::CoMonotony => "co-monotony",
            Property::Restrictibility => "restrictibility",
            Property::ACompatibility => "a-compatibility",
            Property::PlusComposability => "plus-composability",
            Property::PlusDecomposability => "plus-decomposability",
            Property::ConcatComposability => "concat-composability",
            Property::ConcatDecomposability => "concat-decomposability",
            Property::StarComposability => "star-composability",
            Property::StarDecomposability => "star-decomposability",
            Property::Continuity => "continuity",
            Property::VertexCoverage => "vertex-coverage",
            Property::EdgeCoverage => "edge-coverage",
            Property::SubwalkGuarantee => "subwalk-guarantee",
            Property::AtomCoverage => "atom-coverage",
            Property::TrimmedEquivalence => "trimmed-equivalence",
            Property::ElementInclusion => "element-inclusion",
        }
    }

    /// Only meaningful for semantics defined by an order.
    pub fn order_only(self) -> bool {
        matches!(self, Property::TrimmedEquivalence | Property::ElementInclusion)
    }

    pub fn applies_to(self, sem: SemanticsId) -> bool {
        !self.order_only() || sem.is_order_based()
    }

    /// Unboundedness is an existential claim, checked on its witness family
    /// only.
    pub fn uses_random_cases(self) -> bool {
        self != Property::Unboundedness
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL.into_iter().find(|p| p.id() == s).ok_or_else(|| Error::Input(format!("unknown property {s:?}")))
    }
}

/// Result of one property check on one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Violated(String),
    /// The case does not exercise the property, or evaluation hit a limit.
    Skipped,
}

/// Evaluations are capped so that one pathological case cannot stall a run.
pub const CASE_CAP: usize = 4_000;
/// Bound on match enumeration inside coverage-style checks.
const MATCH_LEN: usize = 4;
/// Continuity checks stop once the truncated queries get this many atoms.
const MAX_SEQUENCE_ATOMS: usize = 24;

struct Skip;

type Check = std::result::Result<Option<String>, Skip>;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Slot {
    Base,
    Ext,
    Renamed,
    Relabeled,
}

/// One semantics applied to one case, with evaluations memoized across
/// properties.
pub struct Ctx<'c> {
    case: &'c Case,
    spec: SemanticsSpec,
    renamed: Option<Database>,
    relabeled: Option<Option<Database>>,
    cache: HashMap<(Slot, Regex), Option<Rc<WalkSet>>>,
}

impl<'c> Ctx<'c> {
    /// A context for `sem` on `case`; cheapest-walk semantics gets
    /// [`Case::costs`] unless `spec` already carries a table.
    pub fn new(case: &'c Case, spec: &SemanticsSpec) -> Self {
        let mut spec = spec.clone().with_cap(spec.cap.min(CASE_CAP));
        if spec.id == SemanticsId::Cheapest && spec.costs.is_none() {
            spec.costs = Some(case.costs());
        }
        Ctx { case, spec, renamed: None, relabeled: None, cache: HashMap::new() }
    }

    pub fn semantics(&self) -> SemanticsId {
        self.spec.id
    }

    fn db(&mut self, slot: Slot) -> std::result::Result<&Database, Skip> {
        let case = self.case;
        Ok(match slot {
            Slot::Base => &case.db,
            Slot::Ext => &case.ext,
            Slot::Renamed => self.renamed.get_or_insert_with(|| case.renaming.database(&case.db)),
            Slot::Relabeled => {
                self.relabeled.get_or_insert_with(|| case.relabeling.database(&case.db).ok()).as_ref().ok_or(Skip)?
            }
        })
    }

    fn eval(&mut self, slot: Slot, r: &Regex) -> std::result::Result<Rc<WalkSet>, Skip> {
        if let Some(hit) = self.cache.get(&(slot, r.clone())) {
            return hit.clone().ok_or(Skip);
        }
        let spec = self.spec.clone();
        let db = self.db(slot)?;
        let res = evaluate(db, r, &spec, &Endpoints::any()).ok().map(Rc::new);
        self.cache.insert((slot, r.clone()), res.clone());
        res.ok_or(Skip)
    }

    fn base(&mut self, r: &Regex) -> std::result::Result<Rc<WalkSet>, Skip> {
        self.eval(Slot::Base, r)
    }
}

fn first_missing(a: &WalkSet, b: &WalkSet) -> Option<Walk> {
    a.iter().find(|w| !b.contains(w)).cloned()
}

fn subset(a: &WalkSet, b: &WalkSet, la: &str, lb: &str) -> Option<String> {
    first_missing(a, b).map(|w| format!("{w} is in {la} but not in {lb}"))
}

fn same(a: &WalkSet, b: &WalkSet, la: &str, lb: &str) -> Option<String> {
    subset(a, b, la, lb).or_else(|| subset(b, a, lb, la))
}

/// Checks `prop` for the semantics of `cx` on its case.
pub fn check_case(prop: Property, cx: &mut Ctx<'_>) -> Outcome {
    if !prop.applies_to(cx.semantics()) {
        return Outcome::Skipped;
    }
    let res = match prop {
        Property::IdIndependence => id_independence(cx),
        Property::LabelIndependence => label_independence(cx),
        Property::ExpressionIndependence => expression_independence(cx),
        Property::Unboundedness => unboundedness(cx),
        Property::Monotony => monotony(cx),
        Property::CoMonotony => co_monotony(cx),
        Property::Restrictibility => monotony(cx).and_then(|m| Ok(m.or(co_monotony(cx)?))),
        Property::ACompatibility => a_compatibility(cx),
        Property::PlusComposability => plus(cx, true),
        Property::PlusDecomposability => plus(cx, false),
        Property::ConcatComposability => concat_composability(cx),
        Property::ConcatDecomposability => concat_decomposability(cx),
        Property::StarComposability => star_composability(cx),
        Property::StarDecomposability => star_decomposability(cx),
        Property::Continuity => continuity(cx),
        Property::VertexCoverage | Property::EdgeCoverage | Property::AtomCoverage => coverage(cx, prop),
        Property::SubwalkGuarantee => subwalk_guarantee(cx),
        Property::TrimmedEquivalence => trimmed_equivalence(cx),
        Property::ElementInclusion => element_inclusion(cx),
    };
    match res {
        Ok(None) => Outcome::Holds,
        Ok(Some(detail)) => Outcome::Violated(detail),
        Err(Skip) => Outcome::Skipped,
    }
}

fn id_independence(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let s = cx.base(&q)?;
    let moved = cx.eval(Slot::Renamed, &q)?;
    let image: WalkSet = s.iter().map(|w| cx.case.renaming.walk(w)).collect();
    Ok(same(&image, &moved, "ν(S(D,R))", "S(ν(D),R)"))
}

fn label_independence(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let s = cx.base(&q)?;
    let moved = cx.eval(Slot::Relabeled, &q.relabel(&cx.case.relabeling))?;
    Ok(same(&s, &moved, "S(D,R)", "S(λ(D),λ(R))"))
}

/// Pairs of equivalent expressions derived from the case.
fn equivalent_pairs(case: &Case) -> Vec<(Regex, Regex)> {
    let q = &case.query;
    let qs = Regex::star(q.clone());
    let mut pairs = vec![
        (q.clone(), Regex::union(q.clone(), q.clone())),
        (q.clone(), Regex::concat(q.clone(), Regex::Epsilon)),
        (qs.clone(), Regex::star(qs.clone())),
        (qs, Regex::union(Regex::Epsilon, Regex::concat(q.clone(), Regex::star(q.clone())))),
    ];
    if case.other != *q && regex_equivalent(q, &case.other) {
        pairs.push((q.clone(), case.other.clone()));
    }
    pairs
}

fn expression_independence(cx: &mut Ctx<'_>) -> Check {
    for (r1, r2) in equivalent_pairs(cx.case) {
        let (a, b) = (cx.base(&r1)?, cx.base(&r2)?);
        if let Some(d) = same(&a, &b, &format!("S(D,{r1})"), &format!("S(D,{r2})")) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Witness family: the query is `a^n` on a path, and some result must be at
/// least `n` long.
fn unboundedness(cx: &mut Ctx<'_>) -> Check {
    if !cx.case.name.starts_with("path-") {
        return Err(Skip);
    }
    let q = cx.case.query.clone();
    let n = q.atom_count();
    let s = cx.base(&q)?;
    Ok(match s.max_len() {
        Some(m) if m >= n => None,
        _ => Some(format!("no result of length ≥ {n} on the length-{n} path")),
    })
}

fn monotony(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let (s, s2) = (cx.base(&q)?, cx.eval(Slot::Ext, &q)?);
    Ok(subset(&s, &s2, "S(D,R)", "S(D',R)"))
}

fn co_monotony(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let (s, s2) = (cx.base(&q)?, cx.eval(Slot::Ext, &q)?);
    let mut inside = (*s2).clone();
    inside.retain(|w| consistent_with(&cx.case.db, w));
    Ok(subset(&inside, &s, "S(D',R) ∩ Walks(D)", "S(D,R)"))
}

fn a_compatibility(cx: &mut Ctx<'_>) -> Check {
    let mut labels: Vec<_> = cx.case.db.labels().to_vec();
    labels.extend(cx.case.query.atoms().into_iter().cloned());
    labels.sort();
    labels.dedup();
    for a in labels {
        let r = Regex::Atom(a);
        let s = cx.base(&r)?;
        let m = matches_upto(&cx.case.db, &r, 1, &Endpoints::any());
        if let Some(d) = same(&s, &m, &format!("S(D,{r})"), &format!("matches(D,{r})")) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

fn plus(cx: &mut Ctx<'_>, compose: bool) -> Check {
    let (q, o) = (cx.case.query.clone(), cx.case.other.clone());
    let u = cx.base(&q)?.union(&*cx.base(&o)?);
    let s = cx.base(&Regex::union(q, o))?;
    Ok(if compose {
        subset(&u, &s, "S(D,R) ∪ S(D,R')", "S(D,R+R')")
    } else {
        subset(&s, &u, "S(D,R+R')", "S(D,R) ∪ S(D,R')")
    })
}

fn concat_composability(cx: &mut Ctx<'_>) -> Check {
    let (q, o) = (cx.case.query.clone(), cx.case.other.clone());
    let cat = concat_sets(&*cx.base(&q)?, &*cx.base(&o)?);
    let s = cx.base(&Regex::concat(q, o))?;
    Ok(subset(&cat, &s, "S(D,R)·S(D,R')", "S(D,R·R')"))
}

fn concat_decomposability(cx: &mut Ctx<'_>) -> Check {
    let (q, o) = (cx.case.query.clone(), cx.case.other.clone());
    let (a, b) = (cx.base(&q)?, cx.base(&o)?);
    let s = cx.base(&Regex::concat(q, o))?;
    let bad =
        s.iter().find(|w| !splits_into(w, &a, &b)).map(|w| format!("{w} is in S(D,R·R') but not in S(D,R)·S(D,R')"));
    Ok(bad)
}

fn star_composability(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let x = cx.base(&q)?;
    let s = cx.base(&Regex::star(q))?;
    // anything in W* longer than every result is already a violation
    let bound = s.max_len().unwrap_or(0) + x.max_len().unwrap_or(0).max(1);
    let closure = star_upto(&cx.case.db, &x, bound, CASE_CAP).ok_or(Skip)?;
    Ok(subset(&closure, &s, "S(D,R)*", "S(D,R*)"))
}

fn star_decomposability(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let x = cx.base(&q)?;
    let s = cx.base(&Regex::star(q))?;
    let bad = s.iter().find(|w| !factors_into(w, &x)).map(|w| format!("{w} is in S(D,R*) but not in S(D,R)*"));
    Ok(bad)
}

/// `R_i = ε + R + … + R^i` against the limit `R*`, from the index where the
/// longest limit result first matches.
fn continuity(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let limit = cx.base(&Regex::star(q.clone()))?;
    let m = limit.max_len().unwrap_or(0).max(1);
    if q.atom_count() * (m + 1) > MAX_SEQUENCE_ATOMS {
        return Err(Skip);
    }
    let a = cx.base(&Regex::up_to(&q, m))?;
    let b = cx.base(&Regex::up_to(&q, m + 1))?;
    if let Some(d) = same(&a, &b, &format!("S(D,R_{m})"), &format!("S(D,R_{})", m + 1)) {
        return Ok(Some(format!("not stabilized: {d}")));
    }
    Ok(same(&a, &limit, &format!("S(D,R_{m})"), "S(D,R*)"))
}

fn coverage(cx: &mut Ctx<'_>, prop: Property) -> Check {
    let q = cx.case.query.clone();
    let s = cx.base(&q)?;
    let db = &cx.case.db;
    let m = match_coverage(db, &q);
    let c = result_coverage(db, &q, &s);
    Ok(match prop {
        Property::VertexCoverage => {
            m.vertices.difference(&c.vertices).next().map(|v| format!("vertex {v} is on a match but on no result"))
        }
        Property::EdgeCoverage => {
            m.edges.difference(&c.edges).next().map(|e| format!("edge {e} is on a match but on no result"))
        }
        _ => m
            .positions
            .difference(&c.positions)
            .next()
            .map(|i| format!("atom {i} is covered by a match but by no result")),
    })
}

fn subwalk_guarantee(cx: &mut Ctx<'_>) -> Check {
    let q = cx.case.query.clone();
    let s = cx.base(&q)?;
    let ms = try_matches_upto(&cx.case.db, &q, MATCH_LEN, &Endpoints::any(), CASE_CAP).map_err(|_| Skip)?;
    let bad = ms.iter().find(|w| !s.iter().any(|x| subwalk_leq(x, w)));
    Ok(bad.map(|w| format!("no subwalk of the match {w} is a result")))
}

fn order_of(cx: &Ctx<'_>) -> std::result::Result<SuitableOrder, Skip> {
    cx.semantics().order().map(SuitableOrder::new).ok_or(Skip)
}

fn trimmed_equivalence(cx: &mut Ctx<'_>) -> Check {
    let ord = order_of(cx)?;
    let (db, q) = (&cx.case.db, &cx.case.query);
    let a = eval_order_semantics(db, q, &ord, &Endpoints::any(), CASE_CAP).map_err(|_| Skip)?;
    let b = eval_order_semantics(db, q, &trim(ord), &Endpoints::any(), CASE_CAP).map_err(|_| Skip)?;
    Ok(same(&a, &b, "S⪯(D,R)", "S_trim(⪯)(D,R)"))
}

/// `⪯` respects element inclusion iff `S⪯` is monotonous: an order that
/// claims to respect it must pass the monotony check, and every pair
/// `w ≺ w'` with `elemset(w) ⊄ elemset(w')` must yield a monotony violation
/// on the characteristic databases of `w'` and of `{w, w'}`.
fn element_inclusion(cx: &mut Ctx<'_>) -> Check {
    const PAIRS: usize = 3;
    let ord = trim(order_of(cx)?);
    let claims = ord.respects_element_inclusion();
    let ms = try_matches_upto(&cx.case.db, &cx.case.query, 3, &Endpoints::any(), 2_000).map_err(|_| Skip)?;
    let ms: Vec<&Walk> = ms.iter().collect();
    let mut tried = 0;
    for &w in ms.iter().filter(|w| !w.is_trivial()) {
        for &w2 in &ms {
            if tried == PAIRS {
                break;
            }
            if !ord.lt(w, w2) || w.elemset().is_subset(&w2.elemset()) {
                continue;
            }
            if claims {
                return Ok(Some(format!("{w} ≺ {w2} without element inclusion, yet the order claims to respect it")));
            }
            tried += 1;
            let d1 = characteristic_database(std::slice::from_ref(w2)).map_err(|_| Skip)?;
            let d2 = characteristic_database(&[w.clone(), w2.clone()]).map_err(|_| Skip)?;
            let cw = characteristic_expression(w).map_err(|_| Skip)?;
            let r = if w2.is_trivial() {
                Regex::union(cw, Regex::Epsilon)
            } else {
                Regex::union(cw, characteristic_expression(w2).map_err(|_| Skip)?)
            };
            let spec = SemanticsSpec::new(cx.semantics()).with_cap(CASE_CAP);
            let s1 = evaluate(&d1, &r, &spec, &Endpoints::any()).map_err(|_| Skip)?;
            let s2 = evaluate(&d2, &r, &spec, &Endpoints::any()).map_err(|_| Skip)?;
            if s1.is_subset(&s2) {
                return Ok(Some(format!(
                    "{w} ≺ {w2} without element inclusion, but the characteristic databases show no monotony violation"
                )));
            }
        }
    }
    if claims {
        return monotony(cx);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.id().parse::<Property>().unwrap(), p);
        }
        assert!("monotone".parse::<Property>().is_err());
    }

    #[test]
    fn order_only_properties() {
        assert!(Property::ElementInclusion.applies_to(SemanticsId::Shortest));
        assert!(!Property::TrimmedEquivalence.applies_to(SemanticsId::Trail));
        assert!(Property::Monotony.applies_to(SemanticsId::Trail));
    }
}
