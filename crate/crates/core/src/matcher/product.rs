use std::collections::VecDeque;

use crate::graph::{consistent_with, Database, Walk};
use crate::rpq::{GlushkovNfa, Regex};

/// A walk given by database indices: a start vertex and a sequence of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct IWalk {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl IWalk {
    pub fn trivial(v: usize) -> Self {
        IWalk { start: v, edges: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn tgt(&self, db: &Database) -> usize {
        self.edges.last().map_or(self.start, |&e| db.edge_tgt(e))
    }

    pub fn to_walk(&self, db: &Database) -> Walk {
        Walk::new(
            db.vertex(self.start).clone(),
            self.edges.iter().map(|&e| (db.edge(e).clone(), db.vertex(db.edge_tgt(e)).clone())).collect(),
        )
    }

    pub fn from_walk(db: &Database, w: &Walk) -> Option<IWalk> {
        if !consistent_with(db, w) {
            return None;
        }
        Some(IWalk {
            start: db.vertex_index(w.src())?,
            edges: w.edges().map(|e| db.edge_index(e)).collect::<Option<_>>()?,
        })
    }
}

/// Synchronous product of a database and the position automaton of a query.
///
/// Product state `(v, q)` is encoded as `v * nfa.num_states() + q`.
#[derive(Debug, Clone)]
pub struct ProductGraph<'a> {
    pub(crate) db: &'a Database,
    pub(crate) nfa: GlushkovNfa,
    pub(crate) width: usize,
    /// Outgoing transitions `(edge, target state)` per product state.
    pub(crate) trans: Vec<Vec<(usize, usize)>>,
    pub(crate) useful: Vec<bool>,
}

impl<'a> ProductGraph<'a> {
    pub fn new(db: &'a Database, r: &Regex) -> Self {
        let nfa = GlushkovNfa::new(r);
        let width = nfa.num_states();
        let mut label_positions = vec![Vec::new(); db.labels().len()];
        for p in 1..=nfa.positions() {
            if let Some(li) = db.label_index(nfa.position_label(p)) {
                label_positions[li].push(p);
            }
        }
        // is_succ[q][p]: p follows q in the automaton
        let mut is_succ = vec![vec![false; width]; width];
        for (q, row) in is_succ.iter_mut().enumerate() {
            for &p in nfa.successors(q) {
                row[p] = true;
            }
        }
        let mut trans = vec![Vec::new(); db.num_vertices() * width];
        for v in 0..db.num_vertices() {
            for &e in db.out_edges(v) {
                let t = db.edge_tgt(e);
                for &p in &label_positions[db.edge_label(e)] {
                    for q in 0..width {
                        if is_succ[q][p] {
                            trans[v * width + q].push((e, t * width + p));
                        }
                    }
                }
            }
        }
        for row in &mut trans {
            row.sort_unstable();
        }
        let mut g = ProductGraph { db, nfa, width, trans, useful: Vec::new() };
        let fwd = g.forward_reachable(0..db.num_vertices());
        let bwd = g.coreachable(None);
        g.useful = fwd.iter().zip(&bwd).map(|(a, b)| *a && *b).collect();
        g
    }

    pub fn database(&self) -> &'a Database {
        self.db
    }

    pub fn nfa(&self) -> &GlushkovNfa {
        &self.nfa
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn state(&self, v: usize, q: usize) -> usize {
        v * self.width + q
    }

    pub fn vertex_of(&self, s: usize) -> usize {
        s / self.width
    }

    pub fn nfa_state_of(&self, s: usize) -> usize {
        s % self.width
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.nfa.is_accepting(s % self.width)
    }

    pub fn transitions(&self, s: usize) -> &[(usize, usize)] {
        &self.trans[s]
    }

    /// Reachable from an initial state and co-reachable to an accepting one.
    pub fn is_useful(&self, s: usize) -> bool {
        self.useful[s]
    }

    pub(crate) fn forward_reachable(&self, sources: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::new();
        for v in sources {
            let s = self.state(v, 0);
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            for &(_, t) in &self.trans[s] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    pub(crate) fn reverse(&self) -> Vec<Vec<(usize, usize)>> {
        let mut rev = vec![Vec::new(); self.num_states()];
        for (s, row) in self.trans.iter().enumerate() {
            for &(e, t) in row {
                rev[t].push((e, s));
            }
        }
        rev
    }

    fn coreachable(&self, target: Option<usize>) -> Vec<bool> {
        self.dist_to_accept(target).iter().map(|d| *d != usize::MAX).collect()
    }

    /// Length of the shortest path from each state to an accepting state
    /// (located at `target` when given); `usize::MAX` if none.
    pub(crate) fn dist_to_accept(&self, target: Option<usize>) -> Vec<usize> {
        let rev = self.reverse();
        let mut dist = vec![usize::MAX; self.num_states()];
        let mut queue = VecDeque::new();
        for s in 0..self.num_states() {
            if self.is_accepting(s) && target.is_none_or(|t| self.vertex_of(s) == t) {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            for &(_, p) in &rev[s] {
                if dist[p] == usize::MAX {
                    dist[p] = dist[s] + 1;
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// BFS distances from the initial state at vertex `source`.
    pub(crate) fn dist_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_states()];
        let s0 = self.state(source, 0);
        dist[s0] = 0;
        let mut queue = VecDeque::from([s0]);
        while let Some(s) = queue.pop_front() {
            for &(_, t) in &self.trans[s] {
                if dist[t] == usize::MAX {
                    dist[t] = dist[s] + 1;
                    queue.push_back(t);
                }
            }
        }
        dist
    }

    /// Automaton states after reading edge `e` from any of `set` (states at
    /// the source of `e`), keeping only those accepted by `keep`.
    pub(crate) fn step_set(
        &self,
        v: usize,
        set: &[usize],
        e: usize,
        mut keep: impl FnMut(usize) -> bool,
    ) -> Vec<usize> {
        let mut out = Vec::new();
        for &q in set {
            let row = &self.trans[self.state(v, q)];
            let lo = row.partition_point(|&(x, _)| x < e);
            for &(x, t) in &row[lo..] {
                if x != e {
                    break;
                }
                if keep(t) {
                    out.push(self.nfa_state_of(t));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All automaton states reachable by reading `w` from the initial state.
    pub(crate) fn run_set(&self, w: &IWalk) -> Vec<usize> {
        let mut set = vec![0];
        let mut v = w.start;
        for &e in &w.edges {
            set = self.step_set(v, &set, e, |_| true);
            v = self.db.edge_tgt(e);
            if set.is_empty() {
                break;
            }
        }
        set
    }

    pub(crate) fn matches(&self, w: &IWalk) -> bool {
        self.run_set(w).iter().any(|&q| self.nfa.is_accepting(q))
    }
}
