use std::collections::{HashMap, HashSet, VecDeque};

use crate::matcher::{IWalk, ProductGraph};

/// Membership and extensibility tests for one endpoint constraint.
pub(crate) trait Decider {
    /// Some result walk starts with `w`.
    fn extensible(&mut self, w: &IWalk) -> bool;
    fn member(&mut self, w: &IWalk) -> bool;
}

/// Answers from a precomputed result set.
pub(crate) struct ResultSet {
    results: HashSet<IWalk>,
    prefixes: HashSet<IWalk>,
}

impl ResultSet {
    pub fn new(results: impl IntoIterator<Item = IWalk>) -> Self {
        let results: HashSet<IWalk> = results.into_iter().collect();
        let mut prefixes = HashSet::new();
        for w in &results {
            // longest first: once a prefix is known, so are all shorter ones
            for n in (0..=w.len()).rev() {
                if !prefixes.insert(IWalk { start: w.start, edges: w.edges[..n].to_vec() }) {
                    break;
                }
            }
        }
        ResultSet { results, prefixes }
    }
}

impl Decider for ResultSet {
    fn extensible(&mut self, w: &IWalk) -> bool {
        self.prefixes.contains(w)
    }

    fn member(&mut self, w: &IWalk) -> bool {
        self.results.contains(w)
    }
}

const NONE: usize = usize::MAX;

/// Shortest-walk decisions from BFS distances on the product.
pub(crate) struct ShortestDecider<'a> {
    prod: ProductGraph<'a>,
    targets: Vec<usize>,
    from: HashMap<usize, Vec<usize>>,
    to: HashMap<usize, Vec<usize>>,
}

impl<'a> ShortestDecider<'a> {
    pub fn new(prod: ProductGraph<'a>, target: Option<usize>) -> Self {
        let targets = match target {
            Some(t) => vec![t],
            None => (0..prod.database().num_vertices()).collect(),
        };
        ShortestDecider { prod, targets, from: HashMap::new(), to: HashMap::new() }
    }

    fn shortest(&mut self, s: usize, t: usize) -> usize {
        let prod = &self.prod;
        let d = self.from.entry(s).or_insert_with(|| prod.dist_from(s));
        (0..prod.nfa().num_states())
            .filter(|&q| prod.nfa().is_accepting(q))
            .map(|q| d[prod.state(t, q)])
            .min()
            .unwrap_or(NONE)
    }

    fn to(&mut self, t: usize) -> &[usize] {
        let prod = &self.prod;
        self.to.entry(t).or_insert_with(|| prod.dist_to_accept(Some(t)))
    }
}

impl Decider for ShortestDecider<'_> {
    fn extensible(&mut self, w: &IWalk) -> bool {
        let states = self.prod.run_set(w);
        let v = w.tgt(self.prod.database());
        for t in self.targets.clone() {
            let best = self.shortest(w.start, t);
            if best == NONE || best < w.len() {
                continue;
            }
            let need = best - w.len();
            let ids: Vec<usize> = states.iter().map(|&q| self.prod.state(v, q)).collect();
            let to = self.to(t);
            if ids.iter().any(|&y| to[y] == need) {
                return true;
            }
        }
        false
    }

    fn member(&mut self, w: &IWalk) -> bool {
        let t = w.tgt(self.prod.database());
        self.targets.contains(&t) && self.prod.matches(w) && self.shortest(w.start, t) == w.len()
    }
}

/// Shortest vertex-cover decisions: per covered vertex `x` and target `t`,
/// BFS distances on the product doubled with a "visited `x`" bit.
pub(crate) struct CoverDecider<'a> {
    prod: ProductGraph<'a>,
    rev: Vec<Vec<(usize, usize)>>,
    targets: Vec<usize>,
    to: HashMap<(usize, usize), Vec<usize>>,
}

impl<'a> CoverDecider<'a> {
    pub fn new(prod: ProductGraph<'a>, target: Option<usize>) -> Self {
        let targets = match target {
            Some(t) => vec![t],
            None => (0..prod.database().num_vertices()).collect(),
        };
        CoverDecider { rev: prod.reverse(), prod, targets, to: HashMap::new() }
    }

    /// Distance from `(state, bit)` to an accepting state at `t` with the bit set.
    fn to(&mut self, x: usize, t: usize) -> &[usize] {
        let prod = &self.prod;
        let rev = &self.rev;
        self.to.entry((x, t)).or_insert_with(|| {
            let mut dist = vec![NONE; 2 * prod.num_states()];
            let mut queue = VecDeque::new();
            for q in 0..prod.nfa().num_states() {
                if prod.nfa().is_accepting(q) {
                    let s = 2 * prod.state(t, q) + 1;
                    dist[s] = 0;
                    queue.push_back(s);
                }
            }
            while let Some(s) = queue.pop_front() {
                let (y, b) = (s / 2, s % 2);
                let at_x = prod.vertex_of(y) == x;
                for &(_, p) in &rev[y] {
                    for pb in 0..2 {
                        if (pb == 1 || at_x) as usize != b {
                            continue;
                        }
                        let ps = 2 * p + pb;
                        if dist[ps] == NONE {
                            dist[ps] = dist[s] + 1;
                            queue.push_back(ps);
                        }
                    }
                }
            }
            dist
        })
    }

    fn shortest(&mut self, x: usize, s: usize, t: usize) -> usize {
        let start = 2 * self.prod.state(s, 0) + (s == x) as usize;
        self.to(x, t)[start]
    }
}

impl Decider for CoverDecider<'_> {
    fn extensible(&mut self, w: &IWalk) -> bool {
        let db = self.prod.database();
        let states = self.prod.run_set(w);
        if states.is_empty() {
            return false;
        }
        let v = w.tgt(db);
        let mut visited = vec![false; db.num_vertices()];
        visited[w.start] = true;
        for &e in &w.edges {
            visited[db.edge_tgt(e)] = true;
        }
        for t in self.targets.clone() {
            for x in 0..db.num_vertices() {
                let best = self.shortest(x, w.start, t);
                if best == NONE || best < w.len() {
                    continue;
                }
                let need = best - w.len();
                let b = visited[x] as usize;
                let ids: Vec<usize> = states.iter().map(|&q| 2 * self.prod.state(v, q) + b).collect();
                let to = self.to(x, t);
                if ids.iter().any(|&y| to[y] == need) {
                    return true;
                }
            }
        }
        false
    }

    fn member(&mut self, w: &IWalk) -> bool {
        let db = self.prod.database();
        let t = w.tgt(db);
        if !self.targets.contains(&t) || !self.prod.matches(w) {
            return false;
        }
        let mut xs: Vec<usize> = std::iter::once(w.start).chain(w.edges.iter().map(|&e| db.edge_tgt(e))).collect();
        xs.sort_unstable();
        xs.dedup();
        xs.into_iter().any(|x| self.shortest(x, w.start, t) == w.len())
    }
}
