//! Shortest and cheapest matches, optionally constrained to cover something,
//! by enumerating the walks of the shortest-path DAG of the product.
//!
//! The product is augmented with one bit recording whether the constraint
//! has been met; augmented state `(x, b)` is encoded as `2 * x + b`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};

use crate::error::Result;
use crate::matcher::dfs::{walk_dfs, Visit};
use crate::matcher::{IWalk, ProductGraph, Resolved, Sink};

const INF: u64 = u64::MAX;

pub(crate) struct Layered<'p, 'a> {
    prod: &'p ProductGraph<'a>,
    rev: Vec<Vec<(usize, usize)>>,
    coreach: Vec<bool>,
    weights: Option<&'p [u64]>,
    dist: Vec<u64>,
    good: Vec<bool>,
    touched: Vec<usize>,
    best: Vec<u64>,
}

impl<'p, 'a> Layered<'p, 'a> {
    pub fn new(prod: &'p ProductGraph<'a>, ends: &Resolved, weights: Option<&'p [u64]>) -> Self {
        let n = prod.num_states();
        Layered {
            prod,
            rev: prod.reverse(),
            coreach: prod.dist_to_accept(ends.target).iter().map(|&d| d != usize::MAX).collect(),
            weights,
            dist: vec![INF; 2 * n],
            good: vec![false; 2 * n],
            touched: Vec::new(),
            best: vec![INF; prod.database().num_vertices()],
        }
    }

    fn weight(&self, e: usize) -> u64 {
        self.weights.map_or(1, |w| w[e])
    }

    fn reset(&mut self) {
        for &a in &self.touched {
            self.dist[a] = INF;
            self.good[a] = false;
        }
        self.touched.clear();
        self.best.iter_mut().for_each(|b| *b = INF);
    }

    fn relax(&mut self, a: usize, d: u64) -> bool {
        if d < self.dist[a] {
            if self.dist[a] == INF {
                self.touched.push(a);
            }
            self.dist[a] = d;
            true
        } else {
            false
        }
    }

    fn distances(&mut self, start: usize, upd: &impl Fn(usize, usize) -> bool) {
        let prod = self.prod;
        self.relax(start, 0);
        if self.weights.is_none() {
            let mut queue = VecDeque::from([start]);
            while let Some(a) = queue.pop_front() {
                let (x, b) = (a / 2, a % 2 == 1);
                let d = self.dist[a];
                for &(e, y) in prod.transitions(x) {
                    if !self.coreach[y] {
                        continue;
                    }
                    let a2 = 2 * y + usize::from(b || upd(e, y));
                    if self.dist[a2] == INF {
                        self.relax(a2, d + 1);
                        queue.push_back(a2);
                    }
                }
            }
        } else {
            let mut heap = BinaryHeap::from([Reverse((0u64, start))]);
            while let Some(Reverse((d, a))) = heap.pop() {
                if d > self.dist[a] {
                    continue;
                }
                let (x, b) = (a / 2, a % 2 == 1);
                for &(e, y) in prod.transitions(x) {
                    if !self.coreach[y] {
                        continue;
                    }
                    let a2 = 2 * y + usize::from(b || upd(e, y));
                    let d2 = d + self.weight(e);
                    if self.relax(a2, d2) {
                        heap.push(Reverse((d2, a2)));
                    }
                }
            }
        }
    }

    /// Marks the augmented states lying on an optimal path to an optimal
    /// accepting state.
    fn mark_good(&mut self, ends: &Resolved, upd: &impl Fn(usize, usize) -> bool) {
        let prod = self.prod;
        let mut queue = VecDeque::new();
        for i in 0..self.touched.len() {
            let a = self.touched[i];
            let x = a / 2;
            let v = prod.vertex_of(x);
            if a % 2 == 1 && prod.is_accepting(x) && ends.target_ok(v) {
                self.best[v] = self.best[v].min(self.dist[a]);
            }
        }
        for i in 0..self.touched.len() {
            let a = self.touched[i];
            let x = a / 2;
            let v = prod.vertex_of(x);
            if a % 2 == 1 && prod.is_accepting(x) && ends.target_ok(v) && self.dist[a] == self.best[v] {
                self.good[a] = true;
                queue.push_back(a);
            }
        }
        while let Some(a) = queue.pop_front() {
            let (y, b2) = (a / 2, a % 2 == 1);
            for &(e, x) in &self.rev[y] {
                let w = self.weight(e);
                for b in [false, true] {
                    let p = 2 * x + usize::from(b);
                    if (b || upd(e, y)) != b2 || self.good[p] || self.dist[p] == INF {
                        continue;
                    }
                    if self.dist[p] + w == self.dist[a] {
                        self.good[p] = true;
                        queue.push_back(p);
                    }
                }
            }
        }
    }

    /// Emits, for every target `t`, the optimal walks from `s` to `t` whose
    /// augmented run ends with the bit set. With `lex_first`, only the
    /// lexicographically least such walk per target.
    pub fn run(
        &mut self,
        s: usize,
        init_bit: bool,
        upd: impl Fn(usize, usize) -> bool,
        ends: &Resolved,
        lex_first: bool,
        sink: &mut Sink,
    ) -> Result<()> {
        self.reset();
        let prod = self.prod;
        let db = prod.database();
        let width = prod.nfa().num_states();
        let start = 2 * prod.state(s, 0) + usize::from(init_bit);
        if !self.coreach[start / 2] {
            return Ok(());
        }
        self.distances(start, &upd);
        self.mark_good(ends, &upd);
        if !self.good[start] {
            return Ok(());
        }
        let this = &*self;
        let mut emitted = vec![false; db.num_vertices()];
        let mut seen: HashSet<(usize, Vec<usize>)> = HashSet::new();
        // DFS state: augmented automaton states 2q+b, and the cost so far
        let init = (vec![usize::from(init_bit)], 0u64);
        walk_dfs(
            db,
            s,
            init,
            |_, v, (set, cost), e| {
                let c2 = cost + this.weight(e);
                let mut next = Vec::new();
                for &qa in set {
                    let (q, b) = (qa / 2, qa % 2 == 1);
                    let row = prod.transitions(prod.state(v, q));
                    let lo = row.partition_point(|&(x, _)| x < e);
                    for &(x, y) in &row[lo..] {
                        if x != e {
                            break;
                        }
                        let a2 = 2 * y + usize::from(b || upd(e, y));
                        if this.good[a2] && this.dist[a2] == c2 {
                            next.push(2 * (y % width) + a2 % 2);
                        }
                    }
                }
                next.sort_unstable();
                next.dedup();
                (!next.is_empty()).then_some((next, c2))
            },
            |path, v, (set, cost)| {
                if lex_first && !seen.insert((v, set.clone())) {
                    return Ok(Visit::Skip);
                }
                let done =
                    *cost == this.best[v] && set.iter().any(|&qa| qa % 2 == 1 && prod.nfa().is_accepting(qa / 2));
                if done && !(lex_first && emitted[v]) {
                    emitted[v] = true;
                    sink.push(IWalk { start: s, edges: path.to_vec() })?;
                }
                Ok(Visit::Descend)
            },
        )
    }
}

fn never(_: usize, _: usize) -> bool {
    false
}

pub(crate) fn shortest(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let mut l = Layered::new(prod, ends, None);
    for &s in &ends.sources {
        l.run(s, true, never, ends, false, sink)?;
    }
    Ok(())
}

pub(crate) fn shortlex(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let mut l = Layered::new(prod, ends, None);
    for &s in &ends.sources {
        l.run(s, true, never, ends, true, sink)?;
    }
    Ok(())
}

pub(crate) fn cheapest(prod: &ProductGraph<'_>, weights: &[u64], ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let mut l = Layered::new(prod, ends, Some(weights));
    for &s in &ends.sources {
        l.run(s, true, never, ends, false, sink)?;
    }
    Ok(())
}
