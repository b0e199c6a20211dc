use std::collections::BTreeMap;

use super::filter::{eval_builtin, Filter};
use super::layered;
use crate::error::Result;
use crate::graph::Database;
use crate::matcher::{enumerate_matches, has_useful_cycle, IWalk, ProductGraph, Resolved, Sink};

/// Per endpoint pair, the shortest trails among the matches. A pair whose
/// matches are all non-trails contributes nothing.
pub(crate) fn shortest_trail(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let db = prod.database();
    let mut trails = Sink::new(sink.cap().saturating_mul(4));
    eval_builtin(prod, Filter::Trail, ends, &mut trails)?;
    let mut best: BTreeMap<(usize, usize), Vec<IWalk>> = BTreeMap::new();
    for w in trails.walks {
        let group = best.entry((w.start, w.tgt(db))).or_default();
        match group.first().map(IWalk::len) {
            Some(l) if l < w.len() => {}
            Some(l) if l == w.len() => group.push(w),
            _ => *group = vec![w],
        }
    }
    for w in best.into_values().flatten() {
        sink.push(w)?;
    }
    Ok(())
}

/// Largest `n` with `2^n < |V| + |E|`, if any.
pub fn log_length_bound(db: &Database) -> Option<usize> {
    let size = db.size() as u128;
    if size <= 1 {
        return None;
    }
    let mut n = 0;
    while 1u128 << (n + 1) < size {
        n += 1;
    }
    Some(n)
}

/// Matches strictly shorter than `log2(|V| + |E|)`.
pub(crate) fn log_length(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    match log_length_bound(prod.database()) {
        Some(n) => enumerate_matches(prod, ends, n, sink),
        None => Ok(()),
    }
}

/// All matches when there are finitely many, otherwise none.
pub(crate) fn giving_up(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    if has_useful_cycle(prod) {
        return Ok(());
    }
    enumerate_matches(prod, ends, prod.num_states().saturating_sub(1), sink)
}

/// Shortest walks when the match set is finite, trails otherwise.
pub(crate) fn weird(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    if has_useful_cycle(prod) {
        eval_builtin(prod, Filter::Trail, ends, sink)
    } else {
        layered::shortest(prod, ends, sink)
    }
}
