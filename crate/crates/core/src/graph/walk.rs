use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::database::Database;
use super::ids::{EdgeId, VertexId};
use crate::error::{Error, Result};

/// A finite alternating sequence `v0 e1 v1 ... ek vk`.
///
/// Walks exist independently of any database; [`consistent_with`] checks
/// whether one is a walk of a given database.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    start: VertexId,
    steps: Vec<(EdgeId, VertexId)>,
}

/// An element occurring in a walk.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl Walk {
    pub fn trivial(v: VertexId) -> Self {
        Walk { start: v, steps: Vec::new() }
    }

    pub fn new(start: VertexId, steps: Vec<(EdgeId, VertexId)>) -> Self {
        Walk { start, steps }
    }

    /// Builds a walk from a flat token list `v0 e1 v1 ... ek vk`.
    pub fn from_tokens(tokens: &[&str]) -> Result<Self> {
        if tokens.len() % 2 == 0 {
            return Err(Error::Input(format!("walk needs an odd number of tokens, got {}", tokens.len())));
        }
        let start = VertexId::new(tokens[0])?;
        let steps =
            tokens[1..].chunks(2).map(|c| Ok((EdgeId::new(c[0])?, VertexId::new(c[1])?))).collect::<Result<_>>()?;
        Ok(Walk { start, steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn src(&self) -> &VertexId {
        &self.start
    }

    pub fn tgt(&self) -> &VertexId {
        self.steps.last().map_or(&self.start, |(_, v)| v)
    }

    pub fn ep(&self) -> (&VertexId, &VertexId) {
        (self.src(), self.tgt())
    }

    pub fn steps(&self) -> &[(EdgeId, VertexId)] {
        &self.steps
    }

    /// `w[i]`, the i-th edge, 1-based.
    pub fn edge_at(&self, i: usize) -> &EdgeId {
        &self.steps[i - 1].0
    }

    /// `w⟨i⟩`, the i-th vertex, 0-based.
    pub fn vertex_at(&self, i: usize) -> &VertexId {
        if i == 0 {
            &self.start
        } else {
            &self.steps[i - 1].1
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, v)| v))
    }

    pub fn edges(&self) -> impl Iterator<Item = &EdgeId> + '_ {
        self.steps.iter().map(|(e, _)| e)
    }

    /// The flattened identifier sequence `v0 e1 v1 ... ek vk`.
    pub fn tokens(&self) -> impl Iterator<Item = &str> + '_ {
        std::iter::once(self.start.as_str()).chain(self.steps.iter().flat_map(|(e, v)| [e.as_str(), v.as_str()]))
    }

    /// Factor between vertex positions `i` and `j` (inclusive, 0-based).
    pub fn factor(&self, i: usize, j: usize) -> Walk {
        assert!(i <= j && j <= self.len());
        Walk { start: self.vertex_at(i).clone(), steps: self.steps[i..j].to_vec() }
    }

    pub fn prefix(&self, n: usize) -> Walk {
        self.factor(0, n)
    }

    pub fn suffix(&self, from: usize) -> Walk {
        self.factor(from, self.len())
    }

    /// `w · w2`; the junction vertex is stored once.
    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.tgt() != other.src() {
            return Err(Error::Concat { left: self.tgt().to_string(), right: other.src().to_string() });
        }
        let mut steps = Vec::with_capacity(self.len() + other.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(&other.steps);
        Ok(Walk { start: self.start.clone(), steps })
    }

    /// Appends one step in place.
    pub fn push(&mut self, e: EdgeId, v: VertexId) {
        self.steps.push((e, v));
    }

    pub fn vertexset(&self) -> BTreeSet<VertexId> {
        self.vertices().cloned().collect()
    }

    pub fn edgeset(&self) -> BTreeSet<EdgeId> {
        self.edges().cloned().collect()
    }

    pub fn elemset(&self) -> BTreeSet<Element> {
        self.elements().collect()
    }

    /// Multiset of elements, as element → multiplicity.
    pub fn elembag(&self) -> BTreeMap<Element, usize> {
        let mut bag = BTreeMap::new();
        for x in self.elements() {
            *bag.entry(x).or_insert(0) += 1;
        }
        bag
    }

    fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.vertices().cloned().map(Element::Vertex).chain(self.edges().cloned().map(Element::Edge))
    }

    /// Each edge occurrence agrees with every other occurrence of that edge
    /// on its source and target.
    pub fn is_self_consistent(&self) -> bool {
        mutually_consistent(std::slice::from_ref(self))
    }
}

/// Every vertex and edge of `w` belongs to `db`, and each step follows the
/// incidence recorded in `db`.
pub fn consistent_with(db: &Database, w: &Walk) -> bool {
    if !db.contains_vertex(w.src()) {
        return false;
    }
    let mut cur = w.src();
    for (e, next) in w.steps() {
        match (db.src(e), db.tgt(e)) {
            (Some(s), Some(t)) if s == cur && t == next => cur = next,
            _ => return false,
        }
    }
    true
}

/// True iff some database contains all the walks: no edge is used with two
/// different source/target pairs.
pub fn mutually_consistent(ws: &[Walk]) -> bool {
    let mut inc: HashMap<&EdgeId, (&VertexId, &VertexId)> = HashMap::new();
    for w in ws {
        let mut prev = w.src();
        for (e, next) in w.steps() {
            match inc.get(e) {
                Some(&(s, t)) if s != prev || t != next => return false,
                Some(_) => {}
                None => {
                    inc.insert(e, (prev, next));
                }
            }
            prev = next;
        }
    }
    // a token cannot be both a vertex and an edge
    let vs: BTreeSet<&str> = ws.iter().flat_map(|w| w.vertices().map(VertexId::as_str)).collect();
    inc.keys().all(|e| !vs.contains(e.as_str()))
}

/// Multiset inclusion `a ⊆ b`.
pub fn bag_leq(a: &BTreeMap<Element, usize>, b: &BTreeMap<Element, usize>) -> bool {
    a.iter().all(|(x, n)| b.get(x).is_some_and(|m| m >= n))
}

impl Ord for Walk {
    /// Shortlex over the flattened identifier sequence, tokens compared
    /// byte-wise.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.tokens().cmp(other.tokens()))
    }
}

impl PartialOrd for Walk {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for (e, v) in &self.steps {
            write!(f, " -{e}-> {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Walk({self})")
    }
}

impl FromStr for Walk {
    type Err = Error;

    /// Parses `v1 -e1-> v2 -e2-> v3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let bad = |m: &str| Error::Input(format!("malformed walk {s:?}: {m}"));
        let start = VertexId::new(parts.next().ok_or_else(|| bad("empty"))?)?;
        let mut steps = Vec::new();
        while let Some(arrow) = parts.next() {
            let e =
                arrow.strip_prefix('-').and_then(|x| x.strip_suffix("->")).ok_or_else(|| bad("expected -edge->"))?;
            let v = parts.next().ok_or_else(|| bad("missing vertex after edge"))?;
            steps.push((EdgeId::new(e)?, VertexId::new(v)?));
        }
        Ok(Walk { start, steps })
    }
}
