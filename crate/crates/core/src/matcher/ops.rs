use std::collections::BTreeMap;

use super::dfs::{walk_dfs, Visit};
use super::product::{IWalk, ProductGraph};
use super::walkset::WalkSet;
use crate::error::{Error, Result};
use crate::graph::{Database, VertexId, Walk};
use crate::rpq::Regex;

/// Optional source and target constraints on result walks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Endpoints {
    pub source: Option<VertexId>,
    pub target: Option<VertexId>,
}

impl Endpoints {
    pub fn any() -> Self {
        Self::default()
    }

    pub fn pair(s: VertexId, t: VertexId) -> Self {
        Endpoints { source: Some(s), target: Some(t) }
    }

    pub fn admits(&self, w: &Walk) -> bool {
        self.source.as_ref().is_none_or(|s| s == w.src()) && self.target.as_ref().is_none_or(|t| t == w.tgt())
    }

    pub(crate) fn resolve(&self, db: &Database) -> Result<Resolved> {
        let find = |v: &VertexId| db.vertex_index(v).ok_or_else(|| Error::Input(format!("unknown vertex {v}")));
        let sources = match &self.source {
            Some(s) => vec![find(s)?],
            None => (0..db.num_vertices()).collect(),
        };
        let target = self.target.as_ref().map(find).transpose()?;
        Ok(Resolved { sources, target })
    }
}

/// Endpoint constraints as vertex indices.
#[derive(Debug, Clone)]
pub(crate) struct Resolved {
    pub sources: Vec<usize>,
    pub target: Option<usize>,
}

impl Resolved {
    pub fn target_ok(&self, v: usize) -> bool {
        self.target.is_none_or(|t| t == v)
    }
}

/// Collects distinct index walks and enforces a result cap.
#[derive(Debug)]
pub(crate) struct Sink {
    pub walks: std::collections::HashSet<IWalk>,
    cap: usize,
}

impl Sink {
    pub fn new(cap: usize) -> Self {
        Sink { walks: Default::default(), cap }
    }

    pub fn push(&mut self, w: IWalk) -> Result<()> {
        self.walks.insert(w);
        if self.walks.len() > self.cap {
            return Err(Error::ResultCap { cap: self.cap });
        }
        Ok(())
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Index order agrees with identifier order, so sorting shortlex on
    /// indices first lets the set be built from an ordered sequence.
    pub fn into_walkset(self, db: &Database) -> WalkSet {
        let mut walks: Vec<IWalk> = self.walks.into_iter().collect();
        walks.sort_unstable_by(|a, b| (a.len(), a.start, &a.edges).cmp(&(b.len(), b.start, &b.edges)));
        walks.iter().map(|w| w.to_walk(db)).collect()
    }
}

/// Enumerates matches of length at most `bound`, running the automaton as a
/// state set so each walk is produced once.
pub(crate) fn enumerate_matches(prod: &ProductGraph<'_>, ends: &Resolved, bound: usize, sink: &mut Sink) -> Result<()> {
    let db = prod.database();
    let dist = prod.dist_to_accept(ends.target);
    for &s in &ends.sources {
        if dist[prod.state(s, 0)] > bound {
            continue;
        }
        walk_dfs(
            db,
            s,
            vec![0usize],
            |path, v, set, e| {
                let left = bound - path.len() - 1;
                let next = prod.step_set(v, set, e, |st| dist[st] <= left);
                (!next.is_empty()).then_some(next)
            },
            |path, v, set| {
                if ends.target_ok(v) && set.iter().any(|&q| prod.nfa().is_accepting(q)) {
                    sink.push(IWalk { start: s, edges: path.to_vec() })?;
                }
                Ok(if path.len() < bound { Visit::Descend } else { Visit::Skip })
            },
        )?;
    }
    Ok(())
}

/// All matches of `r` in `db` of length at most `bound`, restricted to the
/// given endpoints. Unknown endpoint vertices yield the empty set.
pub fn matches_upto(db: &Database, r: &Regex, bound: usize, endpoints: &Endpoints) -> WalkSet {
    try_matches_upto(db, r, bound, endpoints, usize::MAX).unwrap_or_default()
}

/// [`matches_upto`] with a cap on the number of walks produced.
pub fn try_matches_upto(db: &Database, r: &Regex, bound: usize, endpoints: &Endpoints, cap: usize) -> Result<WalkSet> {
    let Ok(ends) = endpoints.resolve(db) else {
        return Ok(WalkSet::new());
    };
    let prod = ProductGraph::new(db, r);
    let mut sink = Sink::new(cap);
    enumerate_matches(&prod, &ends, bound, &mut sink)?;
    Ok(sink.into_walkset(db))
}

fn index_of(db: &Database, v: &VertexId) -> Result<usize> {
    db.vertex_index(v).ok_or_else(|| Error::Input(format!("unknown vertex {v}")))
}

/// Whether some walk from `s` to `t` matches `r`.
pub fn has_match(db: &Database, r: &Regex, s: &VertexId, t: &VertexId) -> Result<bool> {
    let (s, t) = (index_of(db, s)?, index_of(db, t)?);
    let prod = ProductGraph::new(db, r);
    let dist = prod.dist_from(s);
    Ok((0..prod.nfa().num_states()).any(|q| prod.nfa().is_accepting(q) && dist[prod.state(t, q)] != usize::MAX))
}

/// Whether the product has a cycle through a useful state.
pub(crate) fn has_useful_cycle(prod: &ProductGraph<'_>) -> bool {
    // 0 unvisited, 1 on stack, 2 done
    let n = prod.num_states();
    let mut color = vec![0u8; n];
    for root in 0..n {
        if !prod.is_useful(root) || color[root] != 0 {
            continue;
        }
        color[root] = 1;
        let mut stack = vec![(root, 0usize)];
        while let Some((s, i)) = stack.last_mut() {
            let s = *s;
            let row = prod.transitions(s);
            if *i >= row.len() {
                color[s] = 2;
                stack.pop();
                continue;
            }
            let t = row[*i].1;
            *i += 1;
            if !prod.is_useful(t) {
                continue;
            }
            match color[t] {
                1 => return true,
                0 => {
                    color[t] = 1;
                    stack.push((t, 0));
                }
                _ => {}
            }
        }
    }
    false
}

/// Whether `r` has finitely many matches in `db`.
pub fn match_set_finite(db: &Database, r: &Regex) -> bool {
    !has_useful_cycle(&ProductGraph::new(db, r))
}

/// Length of the shortest match for every endpoint pair that has one.
pub fn shortest_match_lengths(db: &Database, r: &Regex) -> BTreeMap<(VertexId, VertexId), usize> {
    let prod = ProductGraph::new(db, r);
    let mut out = BTreeMap::new();
    for s in 0..db.num_vertices() {
        let dist = prod.dist_from(s);
        for t in 0..db.num_vertices() {
            let best = (0..prod.nfa().num_states())
                .filter(|&q| prod.nfa().is_accepting(q))
                .map(|q| dist[prod.state(t, q)])
                .min()
                .unwrap_or(usize::MAX);
            if best != usize::MAX {
                out.insert((db.vertex(s).clone(), db.vertex(t).clone()), best);
            }
        }
    }
    out
}

/// `|V| * (k + 1) - 1`: no run of a minimal match repeats a product state,
/// so minimal matches are at most this long.
pub fn minimal_walk_bound(db: &Database, r: &Regex) -> usize {
    db.num_vertices().saturating_mul(r.atom_count() + 1).saturating_sub(1)
}
