use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Database, Walk};
use crate::matcher::dfs::{walk_dfs, Visit};
use crate::matcher::{Endpoints, IWalk, ProductGraph, Resolved, Sink, WalkSet};
use crate::rpq::Regex;

/// No edge occurs twice.
pub fn filter_trail(w: &Walk) -> bool {
    let mut seen = BTreeSet::new();
    w.edges().all(|e| seen.insert(e))
}

/// No vertex occurs twice.
pub fn filter_acyclic(w: &Walk) -> bool {
    let mut seen = BTreeSet::new();
    w.vertices().all(|v| seen.insert(v))
}

/// Acyclic, or a simple cycle: only the first and last vertex coincide.
pub fn filter_swc(w: &Walk) -> bool {
    if filter_acyclic(w) {
        return true;
    }
    w.len() >= 1 && w.src() == w.tgt() && filter_acyclic(&w.prefix(w.len() - 1))
}

/// Every vertex occurs at most twice.
pub fn filter_2ac(w: &Walk) -> bool {
    let mut count: HashMap<_, u8> = HashMap::new();
    w.vertices().all(|v| {
        let c = count.entry(v).or_default();
        *c += 1;
        *c <= 2
    })
}

/// The four shipped filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    Trail,
    Acyclic,
    Swc,
    TwoAc,
}

impl Filter {
    pub fn accepts(self, w: &Walk) -> bool {
        match self {
            Filter::Trail => filter_trail(w),
            Filter::Acyclic => filter_acyclic(w),
            Filter::Swc => filter_swc(w),
            Filter::TwoAc => filter_2ac(w),
        }
    }

    /// No accepted walk of `db` is longer than this.
    pub fn max_len(self, db: &Database) -> usize {
        let n = db.num_vertices();
        match self {
            Filter::Trail => db.num_edges(),
            Filter::Acyclic => n.saturating_sub(1),
            Filter::Swc => n,
            Filter::TwoAc => (2 * n).saturating_sub(1),
        }
    }

    /// Whether extending an accepted walk by `e` keeps it accepted.
    fn accepts_extension(self, db: &Database, start: usize, path: &[usize], e: usize) -> bool {
        let t = db.edge_tgt(e);
        let mut vertices = std::iter::once(start).chain(path.iter().map(|&x| db.edge_tgt(x)));
        match self {
            Filter::Trail => !path.contains(&e),
            Filter::Acyclic => !vertices.any(|v| v == t),
            Filter::Swc => {
                let closed = !path.is_empty() && db.edge_tgt(*path.last().unwrap()) == start;
                !closed && (t == start || !vertices.any(|v| v == t))
            }
            Filter::TwoAc => vertices.filter(|&v| v == t).count() < 2,
        }
    }

    pub fn to_fn(self) -> FilterFn {
        FilterFn::new(format!("{self:?}").to_lowercase(), true, move |db| self.max_len(db), move |w| self.accepts(w))
    }
}

/// A user-supplied walk predicate for filter-based evaluation.
///
/// The predicate must be prefix-closed, and `max_len` must bound the length
/// of accepted walks in a given database so that the search terminates.
#[derive(Clone)]
pub struct FilterFn {
    pub name: String,
    pub prefix_closed: bool,
    max_len: Arc<dyn Fn(&Database) -> usize + Send + Sync>,
    pred: Arc<dyn Fn(&Walk) -> bool + Send + Sync>,
}

impl FilterFn {
    pub fn new(
        name: impl Into<String>,
        prefix_closed: bool,
        max_len: impl Fn(&Database) -> usize + Send + Sync + 'static,
        pred: impl Fn(&Walk) -> bool + Send + Sync + 'static,
    ) -> Self {
        FilterFn { name: name.into(), prefix_closed, max_len: Arc::new(max_len), pred: Arc::new(pred) }
    }

    pub fn accepts(&self, w: &Walk) -> bool {
        (self.pred)(w)
    }

    pub fn max_len(&self, db: &Database) -> usize {
        (self.max_len)(db)
    }
}

impl fmt::Debug for FilterFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FilterFn").field("name", &self.name).field("prefix_closed", &self.prefix_closed).finish()
    }
}

/// Depth-first search through the product, pruning walks the filter rejects
/// or that cannot reach an accepting state within the length budget.
fn filtered_search(
    prod: &ProductGraph<'_>,
    ends: &Resolved,
    max_len: usize,
    mut ok_ext: impl FnMut(usize, &[usize], usize) -> bool,
    mut emit: impl FnMut(usize, &[usize]) -> Result<()>,
) -> Result<()> {
    let db = prod.database();
    let dist = prod.dist_to_accept(ends.target);
    for &s in &ends.sources {
        if dist[prod.state(s, 0)] > max_len {
            continue;
        }
        walk_dfs(
            db,
            s,
            vec![0usize],
            |path, v, set, e| {
                let left = max_len - path.len() - 1;
                if !ok_ext(s, path, e) {
                    return None;
                }
                let next = prod.step_set(v, set, e, |st| dist[st] <= left);
                (!next.is_empty()).then_some(next)
            },
            |path, v, set| {
                if ends.target_ok(v) && set.iter().any(|&q| prod.nfa().is_accepting(q)) {
                    emit(s, path)?;
                }
                Ok(if path.len() < max_len { Visit::Descend } else { Visit::Skip })
            },
        )?;
    }
    Ok(())
}

pub(crate) fn eval_builtin(prod: &ProductGraph<'_>, f: Filter, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let db = prod.database();
    filtered_search(
        prod,
        ends,
        f.max_len(db),
        |s, path, e| f.accepts_extension(db, s, path, e),
        |s, path| sink.push(IWalk { start: s, edges: path.to_vec() }),
    )
}

/// Calls `f` on every match accepted by the built-in filter, depth first,
/// without collecting them. Each walk is visited once. Returns the number of
/// walks.
pub fn stream_filter(
    db: &Database,
    r: &Regex,
    filter: Filter,
    endpoints: &Endpoints,
    mut f: impl FnMut(&Walk),
) -> Result<usize> {
    let ends = endpoints.resolve(db)?;
    let prod = ProductGraph::new(db, r);
    let mut n = 0;
    filtered_search(
        &prod,
        &ends,
        filter.max_len(db),
        |s, path, e| filter.accepts_extension(db, s, path, e),
        |s, path| {
            n += 1;
            f(&IWalk { start: s, edges: path.to_vec() }.to_walk(db));
            Ok(())
        },
    )?;
    Ok(n)
}

/// All matches accepted by `f`.
pub fn eval_filter_semantics(
    db: &Database,
    r: &Regex,
    f: &FilterFn,
    endpoints: &Endpoints,
    cap: usize,
) -> Result<WalkSet> {
    if !f.prefix_closed {
        return Err(Error::Contract(format!("filter {} is not prefix-closed", f.name)));
    }
    let ends = endpoints.resolve(db)?;
    let prod = ProductGraph::new(db, r);
    let mut sink = Sink::new(cap);
    let trivial_ok: Vec<bool> = (0..db.num_vertices()).map(|v| f.accepts(&IWalk::trivial(v).to_walk(db))).collect();
    let ends = Resolved { sources: ends.sources.into_iter().filter(|&s| trivial_ok[s]).collect(), ..ends };
    filtered_search(
        &prod,
        &ends,
        f.max_len(db),
        |s, path, e| {
            let mut edges = path.to_vec();
            edges.push(e);
            f.accepts(&IWalk { start: s, edges }.to_walk(db))
        },
        |s, path| sink.push(IWalk { start: s, edges: path.to_vec() }),
    )?;
    Ok(sink.into_walkset(db))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{evaluate, SemanticsId, SemanticsSpec};

    fn w(s: &str) -> Walk {
        s.parse().unwrap()
    }

    #[test]
    fn streaming_visits_each_trail_once() {
        let db = crate::fixtures::vsc();
        let r = Regex::parse("(a + b + c + d + e + f)*").unwrap();
        let mut seen = Vec::new();
        let n = stream_filter(&db, &r, Filter::Trail, &Endpoints::any(), |w| seen.push(w.clone())).unwrap();
        let all = evaluate(&db, &r, &SemanticsSpec::new(SemanticsId::Trail), &Endpoints::any()).unwrap();
        assert_eq!(n, all.len());
        let set: WalkSet = seen.iter().cloned().collect();
        assert_eq!((set.len(), set), (seen.len(), all));
    }

    #[test]
    fn loop_walks() {
        let t = w("v");
        let once = w("v -e-> v");
        let twice = w("v -e-> v -e-> v");
        for f in [Filter::Trail, Filter::Acyclic, Filter::Swc, Filter::TwoAc] {
            assert!(f.accepts(&t));
        }
        assert!(filter_trail(&once));
        assert!(!filter_acyclic(&once));
        assert!(filter_swc(&once));
        assert!(filter_2ac(&once));
        assert!(!filter_trail(&twice));
        assert!(!filter_2ac(&twice));
        assert!(!filter_swc(&twice));
        assert!(filter_swc(&w("u -e-> v -f-> u")));
        assert!(!filter_swc(&w("u -e-> v -f-> u -g-> x")));
    }

    #[test]
    fn incremental_agrees_with_predicate() {
        let db = Database::parse("E e u v a\nE f v u a\nE g v v a\nE h u x a\n").unwrap();
        let r = Regex::parse("a*").unwrap();
        for f in [Filter::Trail, Filter::Acyclic, Filter::Swc, Filter::TwoAc] {
            let fast = evaluate(&db, &r, &SemanticsSpec::new(id_of(f)), &Endpoints::any()).unwrap();
            let slow = eval_filter_semantics(&db, &r, &f.to_fn(), &Endpoints::any(), 1 << 20).unwrap();
            assert_eq!(fast, slow, "{f:?}");
            assert!(fast.iter().all(|x| f.accepts(x)));
        }
    }

    fn id_of(f: Filter) -> SemanticsId {
        SemanticsId::ALL.into_iter().find(|i| i.filter() == Some(f)).unwrap()
    }

    #[test]
    fn loop_fixture() {
        let db = Database::parse("E e v v a\n").unwrap();
        let tr =
            |q: &str| evaluate(&db, &Regex::parse(q).unwrap(), &SemanticsId::Trail.into(), &Endpoints::any()).unwrap();
        assert_eq!(tr("a*").to_string(), "v\nv -e-> v\n");
        assert!(tr("a a a").is_empty());
        let ac = evaluate(&db, &Regex::Epsilon, &SemanticsId::Acyclic.into(), &Endpoints::any()).unwrap();
        assert_eq!(ac.to_string(), "v\n");
    }

    #[test]
    fn non_prefix_closed_is_rejected() {
        let db = Database::parse("E e v v a\n").unwrap();
        let f = FilterFn::new("even", false, |_| 4, |w: &Walk| w.len() % 2 == 0);
        let err = eval_filter_semantics(&db, &Regex::parse("a*").unwrap(), &f, &Endpoints::any(), 10).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }
}
