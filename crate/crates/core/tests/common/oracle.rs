//! Definition-level reference computations, written without the library's
//! automata or search code.
//!
//! Query languages are handled with Brzozowski derivatives (normalized up to
//! associativity, commutativity and idempotence of union, so only finitely
//! many derivatives arise). Runs are modeled as words over atom positions:
//! a run of the position automaton reads exactly the words of the linearized
//! expression.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::rc::Rc;

use rpqlab::{Database, Regex, SemanticsId, VertexId, Walk, WalkSet};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
enum D {
    Empty,
    Eps,
    Sym(usize),
    Star(Rc<D>),
    Cat(Rc<D>, Rc<D>),
    Alt(BTreeSet<Rc<D>>),
}

fn alt(a: D, b: D) -> D {
    let mut set = BTreeSet::new();
    for x in [a, b] {
        match x {
            D::Empty => {}
            D::Alt(items) => set.extend(items),
            other => {
                set.insert(Rc::new(other));
            }
        }
    }
    match set.len() {
        0 => D::Empty,
        1 => (*set.into_iter().next().unwrap()).clone(),
        _ => D::Alt(set),
    }
}

fn cat(a: D, b: D) -> D {
    match (a, b) {
        (D::Empty, _) | (_, D::Empty) => D::Empty,
        (D::Eps, b) => b,
        (a, D::Eps) => a,
        (D::Cat(x, y), b) => cat((*x).clone(), cat((*y).clone(), b)),
        (a, b) => D::Cat(Rc::new(a), Rc::new(b)),
    }
}

fn star(a: D) -> D {
    match a {
        D::Empty | D::Eps => D::Eps,
        s @ D::Star(_) => s,
        a => D::Star(Rc::new(a)),
    }
}

fn nullable(d: &D) -> bool {
    match d {
        D::Empty | D::Sym(_) => false,
        D::Eps | D::Star(_) => true,
        D::Cat(a, b) => nullable(a) && nullable(b),
        D::Alt(s) => s.iter().any(|x| nullable(x)),
    }
}

fn deriv(d: &D, pred: &dyn Fn(usize) -> bool) -> D {
    match d {
        D::Empty | D::Eps => D::Empty,
        D::Sym(p) => {
            if pred(*p) {
                D::Eps
            } else {
                D::Empty
            }
        }
        D::Star(a) => cat(deriv(a, pred), D::Star(a.clone())),
        D::Cat(a, b) => {
            let left = cat(deriv(a, pred), (**b).clone());
            if nullable(a) {
                alt(left, deriv(b, pred))
            } else {
                left
            }
        }
        D::Alt(s) => s.iter().fold(D::Empty, |acc, x| alt(acc, deriv(x, pred))),
    }
}

fn linear(r: &Regex, labels: &mut Vec<String>) -> D {
    match r {
        Regex::Epsilon => D::Eps,
        Regex::Atom(a) => {
            labels.push(a.as_str().to_string());
            D::Sym(labels.len())
        }
        Regex::Star(a) => star(linear(a, labels)),
        Regex::Concat(a, b) => {
            let x = linear(a, labels);
            cat(x, linear(b, labels))
        }
        Regex::Union(a, b) => {
            let x = linear(a, labels);
            alt(x, linear(b, labels))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Step {
    Label(String),
    Pos(usize),
}

/// Lazily built derivative automaton of a query. State 0 is the query
/// itself; `dead` is the empty language.
pub struct Lang {
    states: Vec<D>,
    index: HashMap<D, usize>,
    trans: HashMap<(usize, Step), usize>,
    /// Label of atom position `p` at index `p - 1`.
    pub pos_labels: Vec<String>,
}

impl Lang {
    pub fn new(r: &Regex) -> Self {
        let mut pos_labels = Vec::new();
        let d0 = linear(r, &mut pos_labels);
        let mut l = Lang { states: Vec::new(), index: HashMap::new(), trans: HashMap::new(), pos_labels };
        l.intern(d0);
        l
    }

    fn intern(&mut self, d: D) -> usize {
        if let Some(&i) = self.index.get(&d) {
            return i;
        }
        self.states.push(d.clone());
        self.index.insert(d, self.states.len() - 1);
        self.states.len() - 1
    }

    pub fn atoms(&self) -> usize {
        self.pos_labels.len()
    }

    pub fn dead(&self, s: usize) -> bool {
        self.states[s] == D::Empty
    }

    pub fn accepting(&self, s: usize) -> bool {
        nullable(&self.states[s])
    }

    fn step(&mut self, s: usize, key: Step) -> usize {
        if let Some(&t) = self.trans.get(&(s, key.clone())) {
            return t;
        }
        let d = match &key {
            Step::Label(a) => {
                let labels = &self.pos_labels;
                deriv(&self.states[s], &|p| labels[p - 1] == *a)
            }
            Step::Pos(i) => deriv(&self.states[s], &|p| p == *i),
        };
        let t = self.intern(d);
        self.trans.insert((s, key), t);
        t
    }

    pub fn read_label(&mut self, s: usize, a: &str) -> usize {
        self.step(s, Step::Label(a.to_string()))
    }

    pub fn read_pos(&mut self, s: usize, p: usize) -> usize {
        self.step(s, Step::Pos(p))
    }

    pub fn accepts(&mut self, word: &[&str]) -> bool {
        let mut s = 0;
        for a in word {
            s = self.read_label(s, a);
        }
        self.accepting(s)
    }
}

/// A walk as a start vertex index and edge indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OWalk {
    pub start: usize,
    pub edges: Vec<usize>,
}

impl OWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self, db: &Database) -> Vec<usize> {
        let mut out = vec![self.start];
        out.extend(self.edges.iter().map(|&e| db.edge_tgt(e)));
        out
    }

    pub fn tgt(&self, db: &Database) -> usize {
        self.edges.last().map_or(self.start, |&e| db.edge_tgt(e))
    }

    pub fn labels<'d>(&self, db: &'d Database) -> Vec<&'d str> {
        self.edges.iter().map(|&e| db.label(db.edge_label(e)).as_str()).collect()
    }

    pub fn to_walk(&self, db: &Database) -> Walk {
        let mut tokens = vec![db.vertex(self.start).as_str()];
        for &e in &self.edges {
            tokens.push(db.edge(e).as_str());
            tokens.push(db.vertex(db.edge_tgt(e)).as_str());
        }
        Walk::from_tokens(&tokens).unwrap()
    }

    pub fn tokens(&self, db: &Database) -> Vec<String> {
        self.to_walk(db).tokens().map(str::to_string).collect()
    }
}

pub fn is_trail(w: &OWalk) -> bool {
    let set: HashSet<_> = w.edges.iter().collect();
    set.len() == w.edges.len()
}

pub fn is_acyclic(db: &Database, w: &OWalk) -> bool {
    let vs = w.vertices(db);
    let set: HashSet<_> = vs.iter().collect();
    set.len() == vs.len()
}

pub fn is_swc(db: &Database, w: &OWalk) -> bool {
    let vs = w.vertices(db);
    if is_acyclic(db, w) {
        return true;
    }
    let inner: HashSet<_> = vs[..vs.len() - 1].iter().collect();
    vs.first() == vs.last() && inner.len() == vs.len() - 1
}

pub fn is_2ac(db: &Database, w: &OWalk) -> bool {
    let mut count = HashMap::new();
    for v in w.vertices(db) {
        *count.entry(v).or_insert(0) += 1;
    }
    count.values().all(|&c| c <= 2)
}

/// Elements of a walk: vertices as `(0, v)`, edges as `(1, e)`.
fn elements(db: &Database, w: &OWalk) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = w.vertices(db).into_iter().map(|v| (0, v)).collect();
    out.extend(w.edges.iter().map(|&e| (1, e)));
    out
}

fn bag(db: &Database, w: &OWalk) -> BTreeMap<(u8, usize), usize> {
    let mut m = BTreeMap::new();
    for x in elements(db, w) {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

pub fn bag_lt(db: &Database, a: &OWalk, b: &OWalk) -> bool {
    let (x, y) = (bag(db, a), bag(db, b));
    x != y && x.iter().all(|(k, n)| y.get(k).is_some_and(|m| n <= m))
}

pub fn shms_lt(db: &Database, a: &OWalk, b: &OWalk) -> bool {
    let x: BTreeSet<_> = elements(db, a).into_iter().collect();
    let y: BTreeSet<_> = elements(db, b).into_iter().collect();
    (x != y && x.is_subset(&y)) || (x == y && a.len() < b.len())
}

/// `a` is obtained from `b` by deleting closed factors: the edges of `a`
/// embed into `b` in order, with every gap of `b` a closed walk and the
/// endpoints shared.
pub fn subwalk_leq(db: &Database, a: &OWalk, b: &OWalk) -> bool {
    let bv = b.vertices(db);
    if a.start != b.start || a.tgt(db) != b.tgt(db) {
        return false;
    }
    // reach[j]: `a`'s first i edges embed with the last one at b-edge j - 1
    // (j = 0 means nothing consumed yet, at b's start).
    let n = b.len();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &e in &a.edges {
        let mut next = vec![false; n + 1];
        for (j, _) in reach.iter().enumerate().filter(|(_, r)| **r) {
            // b's vertex after position j is bv[j]
            for k in j..n {
                if b.edges[k] == e && bv[k] == bv[j] {
                    next[k + 1] = true;
                }
            }
        }
        reach = next;
    }
    reach.iter().enumerate().any(|(j, r)| *r && bv[j] == bv[n])
}

/// Every walk obtained from `b` by repeatedly deleting a closed factor.
pub fn deletion_closure(db: &Database, b: &OWalk) -> HashSet<OWalk> {
    let mut seen = HashSet::from([b.clone()]);
    let mut stack = vec![b.clone()];
    while let Some(w) = stack.pop() {
        let vs = w.vertices(db);
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if vs[i] == vs[j] {
                    let mut edges = w.edges[..i].to_vec();
                    edges.extend_from_slice(&w.edges[j..]);
                    let x = OWalk { start: w.start, edges };
                    if seen.insert(x.clone()) {
                        stack.push(x);
                    }
                }
            }
        }
    }
    seen
}

/// Explicit product of the database with the derivative automaton.
pub struct Product {
    pub lang: Lang,
    /// Alive (reachable and co-reachable) `(vertex, state)` pairs.
    pub alive: HashSet<(usize, usize)>,
    /// The match set is infinite.
    pub infinite: bool,
}

impl Product {
    pub fn new(db: &Database, r: &Regex) -> Self {
        let mut lang = Lang::new(r);
        let mut succ: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut queue: VecDeque<(usize, usize)> = (0..db.num_vertices()).map(|v| (v, 0)).collect();
        seen.extend(queue.iter().copied());
        while let Some((v, s)) = queue.pop_front() {
            let mut out = Vec::new();
            for &e in db.out_edges(v) {
                let t = lang.read_label(s, db.label(db.edge_label(e)).as_str());
                if lang.dead(t) {
                    continue;
                }
                let y = (db.edge_tgt(e), t);
                out.push(y);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
            succ.insert((v, s), out);
        }
        let mut pred: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for (x, ys) in &succ {
            for y in ys {
                pred.entry(*y).or_default().push(*x);
            }
        }
        let mut alive: HashSet<(usize, usize)> = seen.iter().copied().filter(|&(_, s)| lang.accepting(s)).collect();
        let mut queue: VecDeque<_> = alive.iter().copied().collect();
        while let Some(y) = queue.pop_front() {
            for x in pred.get(&y).into_iter().flatten() {
                if alive.insert(*x) {
                    queue.push_back(*x);
                }
            }
        }
        // Kahn on the alive part: a leftover node lies on or after a cycle
        let mut indeg: HashMap<(usize, usize), usize> = alive.iter().map(|x| (*x, 0)).collect();
        for x in &alive {
            for y in &succ[x] {
                if alive.contains(y) {
                    *indeg.get_mut(y).unwrap() += 1;
                }
            }
        }
        let mut queue: VecDeque<_> = indeg.iter().filter(|(_, d)| **d == 0).map(|(x, _)| *x).collect();
        let mut removed = 0;
        while let Some(x) = queue.pop_front() {
            removed += 1;
            for y in &succ[&x] {
                if let Some(d) = indeg.get_mut(y) {
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(*y);
                    }
                }
            }
        }
        let infinite = removed < alive.len();
        Product { lang, alive, infinite }
    }
}

/// Matches of length at most `done`, or all matches when `complete`.
pub struct Matches {
    pub walks: Vec<OWalk>,
    pub done: usize,
    pub complete: bool,
}

impl Matches {
    /// All matches up to `limit` are known.
    pub fn covers(&self, limit: usize) -> bool {
        self.complete || self.done >= limit
    }
}

/// Layer-by-layer enumeration of match prefixes up to length `limit`,
/// exploring at most `budget` prefixes.
pub fn enumerate(db: &Database, prod: &mut Product, limit: usize, budget: usize) -> Matches {
    let mut layer: Vec<(OWalk, usize)> = (0..db.num_vertices())
        .filter(|&v| prod.alive.contains(&(v, 0)))
        .map(|v| (OWalk { start: v, edges: vec![] }, 0))
        .collect();
    let mut walks = Vec::new();
    let mut spent = layer.len();
    let mut n = 0;
    loop {
        walks.extend(layer.iter().filter(|(_, s)| prod.lang.accepting(*s)).map(|(w, _)| w.clone()));
        if layer.is_empty() {
            return Matches { walks, done: n, complete: true };
        }
        if n == limit {
            return Matches { walks, done: n, complete: false };
        }
        let mut next = Vec::new();
        for (w, s) in &layer {
            let v = w.tgt(db);
            for &e in db.out_edges(v) {
                let t = prod.lang.read_label(*s, db.label(db.edge_label(e)).as_str());
                if prod.alive.contains(&(db.edge_tgt(e), t)) {
                    let mut x = w.clone();
                    x.edges.push(e);
                    next.push((x, t));
                }
            }
        }
        spent += next.len();
        if spent > budget {
            return Matches { walks, done: n, complete: false };
        }
        layer = next;
        n += 1;
    }
}

/// Positions used by some accepting run on `w`, as a bit mask (bit `p`).
pub fn covered_positions(db: &Database, lang: &mut Lang, w: &OWalk) -> u64 {
    let mut cur: HashSet<(usize, u64)> = HashSet::from([(0, 0)]);
    for &e in &w.edges {
        let a = db.label(db.edge_label(e)).as_str().to_string();
        let mut next = HashSet::new();
        for &(s, m) in &cur {
            for p in 1..=lang.atoms() {
                if lang.pos_labels[p - 1] == a {
                    let t = lang.read_pos(s, p);
                    if !lang.dead(t) {
                        next.insert((t, m | 1 << p));
                    }
                }
            }
        }
        cur = next;
    }
    cur.into_iter().filter(|(s, _)| lang.accepting(*s)).fold(0, |acc, (_, m)| acc | m)
}

/// Walks admitting a run in which no (edge, position) pair repeats, up to
/// length `limit`. `None` when the budget runs out first.
pub fn binding_trails(db: &Database, r: &Regex, limit: usize, budget: usize) -> Option<(HashSet<OWalk>, usize, bool)> {
    let mut lang = Lang::new(r);
    type Config = (OWalk, usize, BTreeSet<(usize, usize)>);
    let mut layer: HashSet<Config> =
        (0..db.num_vertices()).map(|v| (OWalk { start: v, edges: vec![] }, 0, BTreeSet::new())).collect();
    let mut out = HashSet::new();
    let mut spent = layer.len();
    let mut n = 0;
    loop {
        out.extend(layer.iter().filter(|(_, s, _)| lang.accepting(*s)).map(|(w, _, _)| w.clone()));
        if layer.is_empty() {
            return Some((out, n, true));
        }
        if n == limit {
            return Some((out, n, false));
        }
        let mut next = HashSet::new();
        for (w, s, used) in &layer {
            for &e in db.out_edges(w.tgt(db)) {
                let a = db.label(db.edge_label(e)).as_str();
                for p in 1..=lang.atoms() {
                    if lang.pos_labels[p - 1] != a || used.contains(&(e, p)) {
                        continue;
                    }
                    let t = lang.read_pos(*s, p);
                    if lang.dead(t) {
                        continue;
                    }
                    let mut x = w.clone();
                    x.edges.push(e);
                    let mut u = used.clone();
                    u.insert((e, p));
                    next.insert((x, t, u));
                }
            }
        }
        spent += next.len();
        if spent > budget {
            return if n == 0 { None } else { Some((out, n, false)) };
        }
        layer = next;
        n += 1;
    }
}

/// What a semantics must return, possibly only within a scope.
#[derive(Debug, Clone)]
pub struct Expect {
    pub set: WalkSet,
    /// Compare only walks of at most this length.
    pub upto: Option<usize>,
    /// Compare only these endpoint pairs.
    pub pairs: Option<BTreeSet<(VertexId, VertexId)>>,
}

impl Expect {
    pub fn is_full(&self) -> bool {
        self.upto.is_none() && self.pairs.is_none()
    }

    /// `got` restricted to the scope.
    pub fn restrict(&self, got: &WalkSet) -> WalkSet {
        got.iter()
            .filter(|w| self.upto.is_none_or(|l| w.len() <= l))
            .filter(|w| self.pairs.as_ref().is_none_or(|p| p.contains(&(w.src().clone(), w.tgt().clone()))))
            .cloned()
            .collect()
    }
}

fn atom_count(r: &Regex) -> usize {
    match r {
        Regex::Epsilon => 0,
        Regex::Atom(_) => 1,
        Regex::Star(a) => atom_count(a),
        Regex::Concat(a, b) | Regex::Union(a, b) => atom_count(a) + atom_count(b),
    }
}

/// Length bounds: `(minimal, covering)`. Any match longer than `minimal`
/// repeats a (vertex, automaton state) pair and shrinks by deleting the
/// enclosed cycle.
pub fn bounds(db: &Database, r: &Regex, prod: &Product) -> (usize, usize) {
    let n = db.num_vertices();
    let k = atom_count(r);
    let glushkov = n * (k + 1) - 1;
    let minimal = glushkov.min(prod.alive.len().saturating_sub(1));
    (minimal, 2 * n * (k + 1) - 1)
}

/// Length needed to decide `sem` exactly.
pub fn needed(db: &Database, r: &Regex, prod: &Product, sem: SemanticsId) -> usize {
    use SemanticsId::*;
    let (b, cover) = bounds(db, r, prod);
    let (nv, ne) = (db.num_vertices(), db.num_edges());
    match sem {
        Trail | ShortestTrail => ne,
        Acyclic => nv - 1,
        Swc => nv,
        TwoAc => 2 * nv - 1,
        Shortest | Shortlex | SubwalkMin | MinMultiset | Shms => b,
        Shvc | Shec | Shac => cover,
        BindingTrail => ne * atom_count(r),
        Cheapest => b,
        LogLength => log_bound(db).unwrap_or(0),
        GivingUp | Weird => {
            if prod.infinite {
                if sem == Weird {
                    ne
                } else {
                    0
                }
            } else {
                usize::MAX
            }
        }
    }
}

fn log_bound(db: &Database) -> Option<usize> {
    let size = db.num_vertices() + db.num_edges();
    (0..64).take_while(|n| (1usize << n) < size).last()
}

fn to_set(db: &Database, ws: impl IntoIterator<Item = OWalk>) -> WalkSet {
    ws.into_iter().map(|w| w.to_walk(db)).collect()
}

fn pair(db: &Database, w: &OWalk) -> (usize, usize) {
    (w.start, w.tgt(db))
}

/// Per endpoint pair, the walks with no strictly smaller walk.
fn minima(db: &Database, ws: &[OWalk], lt: &dyn Fn(&OWalk, &OWalk) -> bool) -> Vec<OWalk> {
    ws.iter().filter(|w| !ws.iter().any(|x| pair(db, x) == pair(db, w) && lt(x, w))).cloned().collect()
}

/// Per group key, the walks of least cost.
fn least<K: Ord>(ws: impl IntoIterator<Item = (K, u64, OWalk)>) -> Vec<OWalk> {
    let mut best: BTreeMap<K, (u64, Vec<OWalk>)> = BTreeMap::new();
    for (k, c, w) in ws {
        let e = best.entry(k).or_insert((c, vec![]));
        if c < e.0 {
            *e = (c, vec![w]);
        } else if c == e.0 {
            e.1.push(w);
        }
    }
    best.into_values().flat_map(|(_, v)| v).collect()
}

fn shortest(db: &Database, ws: &[OWalk]) -> Vec<OWalk> {
    least(ws.iter().map(|w| (pair(db, w), w.len() as u64, w.clone())))
}

fn shortlex_key(db: &Database, w: &OWalk) -> (usize, Vec<String>) {
    (w.len(), w.tokens(db))
}

/// Reference results for one instance, from a single enumeration.
pub struct Reference<'d> {
    db: &'d Database,
    r: Regex,
    prod: Product,
    m: Matches,
    budget: usize,
}

impl<'d> Reference<'d> {
    pub fn new(db: &'d Database, r: &Regex, budget: usize) -> Self {
        let mut prod = Product::new(db, r);
        let limit = if prod.infinite {
            SemanticsId::ALL
                .iter()
                .filter(|&&s| s != SemanticsId::BindingTrail)
                .map(|&s| needed(db, r, &prod, s))
                .max()
                .unwrap()
        } else {
            usize::MAX
        };
        let m = enumerate(db, &mut prod, limit, budget);
        Reference { db, r: r.clone(), prod, m, budget }
    }

    pub fn infinite(&self) -> bool {
        self.prod.infinite
    }

    pub fn matches(&self) -> &Matches {
        &self.m
    }

    /// Reference result of `sem`; `None` when the budget does not allow a
    /// decision. `costs[i]` is the cost of label index `i`.
    pub fn expect(&mut self, sem: SemanticsId, costs: &[u64]) -> Option<Expect> {
        use SemanticsId::*;
        let (db, r) = (self.db, &self.r);
        let need = needed(db, r, &self.prod, sem);
        if sem == BindingTrail {
            let (ws, done, complete) = binding_trails(db, r, need, self.budget)?;
            let upto = (!complete && done < need).then_some(done);
            return Some(Expect { set: to_set(db, ws), upto, pairs: None });
        }
        if sem == GivingUp && self.prod.infinite {
            return Some(Expect { set: WalkSet::new(), upto: None, pairs: None });
        }
        let limit = match sem {
            Weird if !self.prod.infinite => bounds(db, r, &self.prod).0,
            _ => need,
        };
        let m = &self.m;
        let prod = &mut self.prod;
        let upto = (!m.covers(limit)).then_some(m.done);
        if upto.is_some() && matches!(sem, Shms | GivingUp | Weird) {
            // minimality may depend on longer walks, or finiteness on all of them
            return None;
        }
        let ws = &m.walks;
        let set: Vec<OWalk> = match sem {
            Trail => ws.iter().filter(|w| is_trail(w)).cloned().collect(),
            Acyclic => ws.iter().filter(|w| is_acyclic(db, w)).cloned().collect(),
            Swc => ws.iter().filter(|w| is_swc(db, w)).cloned().collect(),
            TwoAc => ws.iter().filter(|w| is_2ac(db, w)).cloned().collect(),
            Shortest => shortest(db, ws),
            ShortestTrail => {
                let trails: Vec<OWalk> = ws.iter().filter(|w| is_trail(w)).cloned().collect();
                shortest(db, &trails)
            }
            Shortlex => {
                let mut best: BTreeMap<(usize, usize), OWalk> = BTreeMap::new();
                for w in ws {
                    let e = best.entry(pair(db, w)).or_insert_with(|| w.clone());
                    if shortlex_key(db, w) < shortlex_key(db, e) {
                        *e = w.clone();
                    }
                }
                best.into_values().collect()
            }
            SubwalkMin => minima(db, ws, &|a, b| a != b && subwalk_leq(db, a, b)),
            MinMultiset => minima(db, ws, &|a, b| bag_lt(db, a, b)),
            Shms => minima(db, ws, &|a, b| shms_lt(db, a, b)),
            Shvc | Shec => {
                let mut keyed = Vec::new();
                for w in ws {
                    let mut xs: BTreeSet<(u8, usize)> = w.vertices(db).into_iter().map(|v| (0, v)).collect();
                    if sem == Shec {
                        xs.extend(w.edges.iter().map(|&e| (1, e)));
                    }
                    for x in xs {
                        keyed.push(((pair(db, w), x), w.len() as u64, w.clone()));
                    }
                }
                let mut out = least(keyed);
                out.sort();
                out.dedup();
                out
            }
            Shac => {
                let mut keyed = Vec::new();
                for w in ws {
                    let mask = covered_positions(db, &mut prod.lang, w);
                    for p in 1..=atom_count(r) {
                        if mask & (1 << p) != 0 {
                            keyed.push(((pair(db, w), p), w.len() as u64, w.clone()));
                        }
                    }
                }
                let mut out = least(keyed);
                out.sort();
                out.dedup();
                out
            }
            Cheapest => {
                let cost = |w: &OWalk| w.edges.iter().map(|&e| costs[db.edge_label(e)]).sum::<u64>();
                let out = least(ws.iter().map(|w| (pair(db, w), cost(w), w.clone())));
                if upto.is_some() {
                    // a pair is settled once its cheapest cost fits in the explored length
                    let done = m.done as u64;
                    let mut pairs = BTreeSet::new();
                    let mut set = Vec::new();
                    for w in out {
                        if cost(&w) <= done {
                            pairs.insert((db.vertex(w.start).clone(), db.vertex(w.tgt(db)).clone()));
                            set.push(w);
                        }
                    }
                    return Some(Expect { set: to_set(db, set), upto: None, pairs: Some(pairs) });
                }
                out
            }
            LogLength => {
                let size = db.num_vertices() + db.num_edges();
                ws.iter().filter(|w| w.len() < 64 && (1usize << w.len()) < size).cloned().collect()
            }
            GivingUp => ws.clone(),
            BindingTrail => unreachable!(),
            Weird => {
                if prod.infinite {
                    ws.iter().filter(|w| is_trail(w)).cloned().collect()
                } else {
                    shortest(db, ws)
                }
            }
        };
        Some(Expect { set: to_set(db, set), upto, pairs: None })
    }
}

/// Label costs used for the cheapest-walk semantics in tests: label `i`
/// costs `i + 1`.
pub fn test_costs(db: &Database) -> Vec<u64> {
    (0..db.labels().len()).map(|i| i as u64 + 1).collect()
}
