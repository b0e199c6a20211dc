use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Database, EdgeId, Label, Relabeling, Renaming, VertexId};
use crate::rpq::Regex;

/// Size limits and seed for random instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub max_vertices: usize,
    pub max_edges: usize,
    pub alphabet: usize,
    pub depth: usize,
    pub trials: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { seed: 4, max_vertices: 4, max_edges: 6, alphabet: 2, depth: 3, trials: 300 }
    }
}

impl GenParams {
    /// The labels `a`, `b`, ... in use.
    pub fn labels(&self) -> Vec<Label> {
        alphabet(self.alphabet)
    }

    /// Generator for trial `i`, independent of every other trial.
    pub fn rng(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        rng
    }
}

pub(crate) fn alphabet(n: usize) -> Vec<Label> {
    (0..n.max(1))
        .map(|i| {
            let c = (b'a' + (i % 26) as u8) as char;
            let s = if i < 26 { c.to_string() } else { format!("{c}{}", i / 26) };
            Label::new(&s).expect("letters are valid tokens")
        })
        .collect()
}

/// A database instance and query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub db: Database,
    pub query: Regex,
}

impl Instance {
    pub fn new(db: Database, query: Regex) -> Self {
        Instance { db, query }
    }

    /// Random instance for trial `i`.
    pub fn random(params: &GenParams, trial: u64) -> Self {
        let mut rng = params.rng(trial);
        let db = gen_database(&mut rng, params);
        let query = gen_regex(&mut rng, params);
        Instance { db, query }
    }
}

/// Vertices `v1..vn` and edges `e1..em` with uniform endpoints and labels.
pub fn gen_database(rng: &mut impl Rng, params: &GenParams) -> Database {
    let n = rng.gen_range(1..=params.max_vertices.max(1));
    let m = rng.gen_range(0..=params.max_edges);
    let labels = params.labels();
    let mut b = Database::builder();
    for i in 1..=n {
        b.add_vertex(VertexId::new(&format!("v{i}")).unwrap());
    }
    for j in 1..=m {
        let s = rng.gen_range(1..=n);
        let t = rng.gen_range(1..=n);
        let a = labels.choose(rng).unwrap().clone();
        b.add_edge(
            EdgeId::new(&format!("e{j}")).unwrap(),
            VertexId::new(&format!("v{s}")).unwrap(),
            VertexId::new(&format!("v{t}")).unwrap(),
            a,
        )
        .expect("fresh edge ids");
    }
    b.build().expect("generated namespaces are disjoint")
}

/// Random expression of depth at most `params.depth`; at most
/// `2^(depth+1) - 1` nodes.
pub fn gen_regex(rng: &mut impl Rng, params: &GenParams) -> Regex {
    gen_regex_depth(rng, &params.labels(), params.depth)
}

fn gen_regex_depth(rng: &mut impl Rng, labels: &[Label], depth: usize) -> Regex {
    let leaf = |rng: &mut dyn rand::RngCore| {
        if rng.gen_bool(0.1) {
            Regex::Epsilon
        } else {
            Regex::Atom(labels.choose(rng).unwrap().clone())
        }
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..10) {
        0..=1 => leaf(rng),
        2..=3 => Regex::star(gen_regex_depth(rng, labels, depth - 1)),
        4..=6 => Regex::concat(gen_regex_depth(rng, labels, depth - 1), gen_regex_depth(rng, labels, depth - 1)),
        _ => Regex::union(gen_regex_depth(rng, labels, depth - 1), gen_regex_depth(rng, labels, depth - 1)),
    }
}

/// A database containing `db`, with up to two new vertices and one to three
/// new edges.
pub fn gen_extension(rng: &mut impl Rng, db: &Database, params: &GenParams) -> Database {
    let mut b = db.to_builder();
    let mut vertices: Vec<VertexId> = db.vertices().to_vec();
    for i in 1..=rng.gen_range(0..=2) {
        let v = VertexId::new(&format!("w{i}")).unwrap();
        b.add_vertex(v.clone());
        vertices.push(v);
    }
    let labels = params.labels();
    for j in 1..=rng.gen_range(1..=3) {
        let s = vertices.choose(rng).unwrap().clone();
        let t = vertices.choose(rng).unwrap().clone();
        b.add_edge(EdgeId::new(&format!("f{j}")).unwrap(), s, t, labels.choose(rng).unwrap().clone())
            .expect("fresh edge ids");
    }
    b.build().expect("extension keeps namespaces disjoint")
}

/// A random permutation of the vertex identifiers and of the edge
/// identifiers of `db`.
pub fn gen_renaming(rng: &mut impl Rng, db: &Database) -> Renaming {
    let vs = db.vertices().to_vec();
    let mut vs2 = vs.clone();
    vs2.shuffle(rng);
    let es: Vec<EdgeId> = db.edge_ids().cloned().collect();
    let mut es2 = es.clone();
    es2.shuffle(rng);
    Renaming::new(vs.into_iter().zip(vs2).collect(), es.into_iter().zip(es2).collect())
        .expect("a permutation is a renaming")
}

/// A random permutation of the labels used by `db` and `r`.
pub fn gen_relabeling(rng: &mut impl Rng, db: &Database, r: &Regex) -> Relabeling {
    let mut labels: Vec<Label> = db.labels().to_vec();
    labels.extend(r.atoms().into_iter().cloned());
    labels.sort();
    labels.dedup();
    let mut image = labels.clone();
    image.shuffle(rng);
    let map: BTreeMap<Label, Label> = labels.into_iter().zip(image).collect();
    Relabeling::new(map).expect("a permutation is a relabeling")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let p = GenParams::default();
        for i in 0..20 {
            assert_eq!(Instance::random(&p, i), Instance::random(&p, i));
        }
        assert_ne!(Instance::random(&p, 0), Instance::random(&GenParams { seed: 5, ..p }, 0));
    }

    #[test]
    fn sizes() {
        let p = GenParams::default();
        for i in 0..300 {
            let inst = Instance::random(&p, i);
            assert!(inst.db.num_vertices() <= 4 && inst.db.num_edges() <= 6);
            assert!(inst.query.node_count() <= 15);
            assert!(inst.query.depth() <= 3);
            let mut rng = p.rng(i);
            let ext = gen_extension(&mut rng, &inst.db, &p);
            assert!(inst.db.is_subdatabase_of(&ext));
        }
    }
}
