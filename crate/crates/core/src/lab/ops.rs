//! Walk-set algebra and coverage sets used by the property checks.

use std::collections::{BTreeSet, HashSet};

use crate::graph::{Database, EdgeId, Label, VertexId, Walk};
use crate::matcher::{ProductGraph, WalkSet};
use crate::rpq::{GlushkovNfa, Regex};

/// `A · B`: every `u · v` with `tgt(u) = src(v)`.
pub fn concat_sets(a: &WalkSet, b: &WalkSet) -> WalkSet {
    let mut out = WalkSet::new();
    for u in a.iter() {
        for v in b.iter().filter(|v| v.src() == u.tgt()) {
            out.insert(u.concat(v).expect("endpoints agree"));
        }
    }
    out
}

/// The walks of `W*` no longer than `max_len`, where `W⁰` is the set of
/// trivial walks of `db`. `None` once more than `limit` walks are produced.
pub fn star_upto(db: &Database, w: &WalkSet, max_len: usize, limit: usize) -> Option<WalkSet> {
    let pieces: Vec<&Walk> = w.iter().filter(|x| !x.is_trivial()).collect();
    let mut out: WalkSet = db.vertices().iter().map(|v| Walk::trivial(v.clone())).collect();
    let mut frontier: Vec<Walk> = out.iter().cloned().collect();
    while let Some(cur) = frontier.pop() {
        for p in pieces.iter().filter(|p| p.src() == cur.tgt() && cur.len() + p.len() <= max_len) {
            let next = cur.concat(p).expect("endpoints agree");
            if out.insert(next.clone()) {
                if out.len() > limit {
                    return None;
                }
                frontier.push(next);
            }
        }
    }
    Some(out)
}

/// `w = u · v` for some `u ∈ a`, `v ∈ b`.
pub fn splits_into(w: &Walk, a: &WalkSet, b: &WalkSet) -> bool {
    (0..=w.len()).any(|i| a.contains(&w.prefix(i)) && b.contains(&w.suffix(i)))
}

/// `w ∈ W*` (trivial walks always qualify).
pub fn factors_into(w: &Walk, pieces: &WalkSet) -> bool {
    let n = w.len();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 0..n {
        if !reach[i] {
            continue;
        }
        for j in i + 1..=n {
            if !reach[j] && pieces.contains(&w.factor(i, j)) {
                reach[j] = true;
            }
        }
    }
    reach[n]
}

/// Vertices, edges and atom positions used by at least one match.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Coverage {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
    pub positions: BTreeSet<usize>,
}

/// What the (possibly infinite) match set covers, read off the useful part
/// of the product graph.
pub fn match_coverage(db: &Database, r: &Regex) -> Coverage {
    let prod = ProductGraph::new(db, r);
    let mut c = Coverage::default();
    for s in (0..prod.num_states()).filter(|&s| prod.is_useful(s)) {
        c.vertices.insert(db.vertex(prod.vertex_of(s)).clone());
        let q = prod.nfa_state_of(s);
        if q > 0 {
            c.positions.insert(q);
        }
        for &(e, t) in prod.transitions(s) {
            if prod.is_useful(t) {
                c.edges.insert(db.edge(e).clone());
            }
        }
    }
    c
}

/// The edge labels along `w`.
pub fn walk_labels(db: &Database, w: &Walk) -> Vec<Label> {
    w.edges().map(|e| db.lbl(e).expect("walk of db").clone()).collect()
}

/// What the walks of `s` cover.
pub fn result_coverage(db: &Database, r: &Regex, s: &WalkSet) -> Coverage {
    let nfa = GlushkovNfa::new(r);
    let mut c = Coverage::default();
    let mut words: HashSet<Vec<Label>> = HashSet::new();
    for w in s.iter() {
        c.vertices.extend(w.vertices().cloned());
        c.edges.extend(w.edges().cloned());
        words.insert(walk_labels(db, w));
    }
    for i in 1..=nfa.positions() {
        if words.iter().any(|u| nfa.covers_position(u, i)) {
            c.positions.insert(i);
        }
    }
    c
}
