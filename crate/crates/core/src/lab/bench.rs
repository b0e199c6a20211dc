//! Scaling families for timing evaluation.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Database, EdgeId, Label, VertexId};
use crate::matcher::Endpoints;
use crate::rpq::Regex;
use crate::semantics::{evaluate, SemanticsSpec};

/// A query whose Glushkov automaton has ten states.
pub const TEN_STATE_QUERY: &str = "(a b + b a)* (a + b) a* b a";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `p0 → … → pn` labeled `a`, query `a*` from `p0`.
    Path,
    /// `n` vertices, `5n` random `a`/`b` edges, [`TEN_STATE_QUERY`] from `v1`.
    Random,
    /// `n` random edges on `max(n/2, 1)` vertices, `(a + b)*` between all
    /// pairs.
    Dense,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "random" => Ok(Family::Random),
            "dense" => Ok(Family::Dense),
            _ => Err(Error::Input(format!("unknown family {s:?} (path, random, dense)"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Random => "random",
            Family::Dense => "dense",
        })
    }
}

fn vid(s: String) -> VertexId {
    VertexId::new(&s).expect("generated token")
}

fn eid(s: String) -> EdgeId {
    EdgeId::new(&s).expect("generated token")
}

pub fn path_graph(n: usize) -> Database {
    let mut b = Database::builder();
    b.add_vertex(vid("p0".into()));
    for i in 1..=n {
        b.add_edge(eid(format!("e{i}")), vid(format!("p{}", i - 1)), vid(format!("p{i}")), Label::new("a").unwrap())
            .expect("fresh edge");
    }
    b.build().expect("path graph")
}

/// `n` vertices `v1..vn` and `m` edges with uniform endpoints and labels
/// `a`, `b`.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Database {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = [Label::new("a").unwrap(), Label::new("b").unwrap()];
    let n = n.max(1);
    let mut b = Database::builder();
    for i in 1..=n {
        b.add_vertex(vid(format!("v{i}")));
    }
    for j in 1..=m {
        let (s, t) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let a = labels.choose(&mut rng).unwrap().clone();
        b.add_edge(eid(format!("e{j}")), vid(format!("v{s}")), vid(format!("v{t}")), a).expect("fresh edge");
    }
    b.build().expect("random graph")
}

/// Database, query and endpoints of `family` at size `n`.
pub fn instance(family: Family, n: usize, seed: u64) -> (Database, Regex, Endpoints) {
    match family {
        Family::Path => {
            (path_graph(n), Regex::parse("a*").unwrap(), Endpoints { source: Some(vid("p0".into())), target: None })
        }
        Family::Random => (
            random_graph(n, 5 * n, seed),
            Regex::parse(TEN_STATE_QUERY).unwrap(),
            Endpoints { source: Some(vid("v1".into())), target: None },
        ),
        Family::Dense => (random_graph((n / 2).max(1), n, seed), Regex::parse("(a + b)*").unwrap(), Endpoints::any()),
    }
}

/// Times one evaluation; returns the result count and the elapsed time.
pub fn time_eval(family: Family, n: usize, spec: &SemanticsSpec, seed: u64) -> Result<(usize, Duration)> {
    let (db, r, ends) = instance(family, n, seed);
    let start = Instant::now();
    let res = evaluate(&db, &r, spec, &ends)?;
    Ok((res.len(), start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpq::GlushkovNfa;
    use crate::semantics::SemanticsId;

    #[test]
    fn ten_states() {
        let r = Regex::parse(TEN_STATE_QUERY).unwrap();
        assert_eq!(GlushkovNfa::new(&r).positions() + 1, 10);
    }

    #[test]
    fn path_shortest_counts_every_prefix() {
        let (n, _) = time_eval(Family::Path, 50, &SemanticsSpec::new(SemanticsId::Shortest), 0).unwrap();
        assert_eq!(n, 51);
    }

    #[test]
    fn random_graph_shape() {
        let db = random_graph(10, 50, 1);
        assert_eq!((db.num_vertices(), db.num_edges()), (10, 50));
        assert_eq!(db, random_graph(10, 50, 1));
    }
}
