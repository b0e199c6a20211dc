use crate::error::Result;
use crate::matcher::{IWalk, ProductGraph, Resolved, Sink};

/// Walks with an accepting run in which no edge is matched twice by the same
/// atom position.
///
/// Depth-first search over runs carrying the used `(edge, position)` pairs;
/// every step adds a fresh pair, so runs are at most `|E| * k` long.
pub(crate) fn binding_trail(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let db = prod.database();
    let coreach: Vec<bool> = prod.dist_to_accept(ends.target).iter().map(|&d| d != usize::MAX).collect();
    for &s in &ends.sources {
        let s0 = prod.state(s, 0);
        if !coreach[s0] {
            continue;
        }
        if prod.is_accepting(s0) && ends.target_ok(s) {
            sink.push(IWalk::trivial(s))?;
        }
        let mut used: Vec<(usize, usize)> = Vec::new();
        let mut stack = vec![(s0, 0usize)];
        while let Some((x, i)) = stack.last_mut() {
            let row = prod.transitions(*x);
            if *i >= row.len() {
                stack.pop();
                used.pop();
                continue;
            }
            let (e, y) = row[*i];
            *i += 1;
            let pair = (e, prod.nfa_state_of(y));
            if !coreach[y] || used.contains(&pair) {
                continue;
            }
            used.push(pair);
            if prod.is_accepting(y) && ends.target_ok(db.edge_tgt(e)) {
                sink.push(IWalk { start: s, edges: used.iter().map(|p| p.0).collect() })?;
            }
            stack.push((y, 0));
        }
    }
    Ok(())
}
