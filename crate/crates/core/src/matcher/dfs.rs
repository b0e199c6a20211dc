use crate::error::Result;
use crate::graph::Database;

/// What to do with the node just reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Visit {
    Descend,
    Skip,
}

struct Frame<S> {
    v: usize,
    state: S,
    next: usize,
}

/// Iterative depth-first search over walks from `start`.
///
/// `visit` sees every reached walk (as its edge sequence and target) and
/// decides whether to explore its extensions; `expand` computes the state of
/// a one-edge extension or rejects it. Edges are tried in index order, which
/// is identifier order.
pub(crate) fn walk_dfs<S>(
    db: &Database,
    start: usize,
    init: S,
    mut expand: impl FnMut(&[usize], usize, &S, usize) -> Option<S>,
    mut visit: impl FnMut(&[usize], usize, &S) -> Result<Visit>,
) -> Result<()> {
    let mut path: Vec<usize> = Vec::new();
    if visit(&path, start, &init)? == Visit::Skip {
        return Ok(());
    }
    let mut stack = vec![Frame { v: start, state: init, next: 0 }];
    while let Some(top) = stack.last_mut() {
        let out = db.out_edges(top.v);
        if top.next >= out.len() {
            stack.pop();
            path.pop();
            continue;
        }
        let e = out[top.next];
        top.next += 1;
        let Some(state) = expand(&path, top.v, &top.state, e) else {
            continue;
        };
        let t = db.edge_tgt(e);
        path.push(e);
        if visit(&path, t, &state)? == Visit::Descend {
            stack.push(Frame { v: t, state, next: 0 });
        } else {
            path.pop();
        }
    }
    Ok(())
}
