//! Decision problems over a semantics and flashlight enumeration.
//!
//! Shortest-walk and shortest vertex-cover semantics get polynomial
//! membership and extensibility tests from BFS distances on the product.
//! Every other semantics decides both through its (exact, capped) result set.

mod extend;

use crate::error::{Error, Result};
use crate::graph::{Database, VertexId, Walk};
use crate::matcher::{has_match, Endpoints, IWalk, ProductGraph};
use crate::rpq::Regex;
use crate::semantics::{evaluate, evaluate_indexed, SemanticsId, SemanticsSpec};

use extend::{CoverDecider, Decider, ResultSet, ShortestDecider};

/// Is there a walk from `s` to `t` in the result?
pub fn existence(db: &Database, r: &Regex, s: &VertexId, t: &VertexId, spec: &SemanticsSpec) -> Result<bool> {
    use SemanticsId::*;
    match spec.id {
        // minima exist whenever matches do, and Sh is contained in both covers
        Shortest | Shortlex | SubwalkMin | MinMultiset | Shms | Cheapest | Shvc | Shec => {
            if spec.id == Cheapest && spec.costs.is_none() {
                return Err(Error::Input("cheapest-walk semantics needs a cost table".into()));
            }
            has_match(db, r, s, t)
        }
        _ => Ok(!evaluate(db, r, spec, &Endpoints::pair(s.clone(), t.clone()))?.is_empty()),
    }
}

fn index_walk(db: &Database, w: &Walk) -> Result<IWalk> {
    IWalk::from_walk(db, w).ok_or_else(|| Error::InconsistentWalk(w.to_string()))
}

/// Does `w` belong to the result?
pub fn membership(db: &Database, r: &Regex, w: &Walk, spec: &SemanticsSpec) -> Result<bool> {
    let iw = index_walk(db, w)?;
    let prod = ProductGraph::new(db, r);
    if let Some(f) = spec.id.filter() {
        return Ok(f.accepts(w) && prod.matches(&iw));
    }
    let t = Some(iw.tgt(db));
    match spec.id {
        SemanticsId::Shortest => Ok(ShortestDecider::new(prod, t).member(&iw)),
        SemanticsId::Shvc => Ok(CoverDecider::new(prod, t).member(&iw)),
        _ => Ok(evaluate(db, r, spec, &Endpoints::pair(w.src().clone(), w.tgt().clone()))?.contains(w)),
    }
}

/// Is there a walk `w'` such that `w·w'` belongs to the result and ends in
/// `t` (anywhere when `t` is `None`)?
pub fn extensibility(db: &Database, r: &Regex, w: &Walk, t: Option<&VertexId>, spec: &SemanticsSpec) -> Result<bool> {
    let iw = index_walk(db, w)?;
    let target =
        t.map(|t| db.vertex_index(t).ok_or_else(|| Error::Input(format!("unknown vertex {t}")))).transpose()?;
    let prod = ProductGraph::new(db, r);
    match spec.id {
        SemanticsId::Shortest => Ok(ShortestDecider::new(prod, target).extensible(&iw)),
        SemanticsId::Shvc => Ok(CoverDecider::new(prod, target).extensible(&iw)),
        _ => {
            let ends = Endpoints { source: Some(w.src().clone()), target: t.cloned() };
            let res = evaluate(db, r, spec, &ends)?;
            let found = res.iter().any(|x| x.len() >= w.len() && x.prefix(w.len()) == *w);
            Ok(found)
        }
    }
}

/// One decision problem, with its data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Existence { s: VertexId, t: VertexId },
    Membership { w: Walk },
    Extensibility { w: Walk, t: Option<VertexId> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    pub db: Database,
    pub query: Regex,
    pub spec: SemanticsSpec,
    pub problem: Problem,
}

impl ProblemInstance {
    pub fn solve(&self) -> Result<bool> {
        let (db, r, spec) = (&self.db, &self.query, &self.spec);
        match &self.problem {
            Problem::Existence { s, t } => existence(db, r, s, t, spec),
            Problem::Membership { w } => membership(db, r, w, spec),
            Problem::Extensibility { w, t } => extensibility(db, r, w, t.as_ref(), spec),
        }
    }
}

/// Depth-first enumeration of result walks: a prefix is explored only if it
/// extends to a result, and emitted when it is one.
///
/// Walks come out in prefix order, edges in index order.
pub struct Flashlight<'a> {
    db: &'a Database,
    decider: Box<dyn Decider + 'a>,
    sources: std::vec::IntoIter<usize>,
    path: IWalk,
    /// Next out-edge position to try, one entry per prefix on the path.
    cursors: Vec<usize>,
    fresh: bool,
    max_depth: usize,
}

impl<'a> Flashlight<'a> {
    /// Deepest prefix explored so far.
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    fn start_next_source(&mut self) -> bool {
        for s in self.sources.by_ref() {
            let p = IWalk::trivial(s);
            if self.decider.extensible(&p) {
                self.path = p;
                self.cursors = vec![0];
                self.fresh = true;
                return true;
            }
        }
        false
    }
}

impl Iterator for Flashlight<'_> {
    type Item = Walk;

    fn next(&mut self) -> Option<Walk> {
        loop {
            if self.fresh {
                self.fresh = false;
                if self.decider.member(&self.path) {
                    return Some(self.path.to_walk(self.db));
                }
            }
            let Some(cursor) = self.cursors.last_mut() else {
                if self.start_next_source() {
                    continue;
                }
                return None;
            };
            let outs = self.db.out_edges(self.path.tgt(self.db));
            if *cursor < outs.len() {
                let e = outs[*cursor];
                *cursor += 1;
                self.path.edges.push(e);
                if self.decider.extensible(&self.path) {
                    self.cursors.push(0);
                    self.max_depth = self.max_depth.max(self.path.len());
                    self.fresh = true;
                } else {
                    self.path.edges.pop();
                }
            } else {
                self.cursors.pop();
                self.path.edges.pop();
            }
        }
    }
}

/// Flashlight enumeration of the result walks from `s` to `t`; either
/// endpoint may be left open.
pub fn enumerate_flashlight<'a>(
    db: &'a Database,
    r: &Regex,
    s: Option<&VertexId>,
    t: Option<&VertexId>,
    spec: &SemanticsSpec,
) -> Result<Flashlight<'a>> {
    let ends = Endpoints { source: s.cloned(), target: t.cloned() };
    let resolved = ends.resolve(db)?;
    let target = resolved.target;
    let decider: Box<dyn Decider + 'a> = match spec.id {
        SemanticsId::Shortest => Box::new(ShortestDecider::new(ProductGraph::new(db, r), target)),
        SemanticsId::Shvc => Box::new(CoverDecider::new(ProductGraph::new(db, r), target)),
        _ => Box::new(ResultSet::new(evaluate_indexed(db, r, spec, &ends)?)),
    };
    Ok(Flashlight {
        db,
        decider,
        sources: resolved.sources.into_iter(),
        path: IWalk::trivial(0),
        cursors: Vec::new(),
        fresh: false,
        max_depth: 0,
    })
}
