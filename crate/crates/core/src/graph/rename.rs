use std::collections::{BTreeMap, BTreeSet};

use super::database::{Database, DatabaseBuilder};
use super::ids::{EdgeId, Label, VertexId};
use super::walk::Walk;
use crate::error::{Error, Result};

fn check_permutation<K: Ord + Clone + std::fmt::Display>(map: &BTreeMap<K, K>) -> Result<()> {
    let domain: BTreeSet<&K> = map.keys().collect();
    let image: BTreeSet<&K> = map.values().collect();
    if image.len() != map.len() {
        return Err(Error::Renaming("map is not injective".into()));
    }
    if domain != image {
        let stray = image.difference(&domain).next().expect("image differs from domain");
        return Err(Error::Renaming(format!(
            "{stray} is in the image but not the domain, so the identity extension is not a bijection"
        )));
    }
    Ok(())
}

/// A namespace-preserving permutation of vertex and edge identifiers,
/// identity outside its finite support.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Renaming {
    vertices: BTreeMap<VertexId, VertexId>,
    edges: BTreeMap<EdgeId, EdgeId>,
}

impl Renaming {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(vertices: BTreeMap<VertexId, VertexId>, edges: BTreeMap<EdgeId, EdgeId>) -> Result<Self> {
        check_permutation(&vertices)?;
        check_permutation(&edges)?;
        Ok(Renaming { vertices, edges })
    }

    pub fn vertex(&self, x: &VertexId) -> VertexId {
        self.vertices.get(x).unwrap_or(x).clone()
    }

    pub fn edge(&self, x: &EdgeId) -> EdgeId {
        self.edges.get(x).unwrap_or(x).clone()
    }

    pub fn inverse(&self) -> Renaming {
        Renaming {
            vertices: self.vertices.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            edges: self.edges.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    pub fn walk(&self, w: &Walk) -> Walk {
        Walk::new(self.vertex(w.src()), w.steps().iter().map(|(e, v)| (self.edge(e), self.vertex(v))).collect())
    }

    pub fn database(&self, db: &Database) -> Database {
        let mut b = DatabaseBuilder::new();
        if db.has_edge_labels() {
            b = b.allow_edge_labels();
        }
        for a in db.labels() {
            b = b.label(a.clone());
        }
        for x in db.vertices() {
            b.add_vertex(self.vertex(x));
        }
        for (id, s, t, a) in db.edge_tuples() {
            b.add_edge(self.edge(id), self.vertex(s), self.vertex(t), a.clone())
                .expect("a bijective renaming keeps edges distinct");
        }
        b.build().expect("a renaming keeps namespaces disjoint")
    }
}

/// A permutation of labels, identity outside its finite support.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Relabeling {
    labels: BTreeMap<Label, Label>,
}

impl Relabeling {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(labels: BTreeMap<Label, Label>) -> Result<Self> {
        check_permutation(&labels)?;
        Ok(Relabeling { labels })
    }

    /// The transposition of two labels.
    pub fn swap(a: Label, b: Label) -> Self {
        if a == b {
            return Self::identity();
        }
        Relabeling { labels: [(a.clone(), b.clone()), (b, a)].into_iter().collect() }
    }

    pub fn label(&self, a: &Label) -> Label {
        self.labels.get(a).unwrap_or(a).clone()
    }

    pub fn inverse(&self) -> Relabeling {
        Relabeling { labels: self.labels.iter().map(|(a, b)| (b.clone(), a.clone())).collect() }
    }

    pub fn database(&self, db: &Database) -> Result<Database> {
        let mut b = DatabaseBuilder::new();
        if db.has_edge_labels() {
            b = b.allow_edge_labels();
        }
        for a in db.labels() {
            b = b.label(self.label(a));
        }
        for x in db.vertices() {
            b.add_vertex(x.clone());
        }
        for (id, s, t, a) in db.edge_tuples() {
            b.add_edge(id.clone(), s.clone(), t.clone(), self.label(a))?;
        }
        b.build()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ids::{e, l, v};
    use crate::graph::walk::consistent_with;

    fn db() -> Database {
        Database::parse("E e1 v1 v2 a\nE e2 v2 v3 a\nE e3 v1 v3 b\n").unwrap()
    }

    #[test]
    fn identity_is_noop() {
        let d = db();
        assert_eq!(Renaming::identity().database(&d), d);
        assert_eq!(Relabeling::identity().database(&d).unwrap(), d);
    }

    #[test]
    fn non_bijective_rejected() {
        let m: BTreeMap<_, _> = [(v("a"), v("b"))].into_iter().collect();
        assert!(Renaming::new(m, BTreeMap::new()).is_err());
        let m: BTreeMap<_, _> = [(v("a"), v("c")), (v("b"), v("c"))].into_iter().collect();
        assert!(Renaming::new(m, BTreeMap::new()).is_err());
    }

    #[test]
    fn swap_endpoints_reverses_ep() {
        let w: Walk = "v1 -e1-> v2".parse().unwrap();
        let vs = [(v("v1"), v("v2")), (v("v2"), v("v1"))].into_iter().collect();
        let es = [(e("e1"), e("f1")), (e("f1"), e("e1"))].into_iter().collect();
        let nu = Renaming::new(vs, es).unwrap();
        let w2 = nu.walk(&w);
        assert_eq!(w2.ep(), (&v("v2"), &v("v1")));
        assert_eq!(nu.inverse().walk(&w2), w);
    }

    #[test]
    fn renaming_preserves_consistency() {
        let d = db();
        let vs = [(v("v1"), v("v3")), (v("v3"), v("v1"))].into_iter().collect();
        let nu = Renaming::new(vs, BTreeMap::new()).unwrap();
        let w: Walk = "v1 -e1-> v2 -e2-> v3".parse().unwrap();
        assert!(consistent_with(&nu.database(&d), &nu.walk(&w)));
        assert_eq!(nu.inverse().database(&nu.database(&d)), d);
    }

    #[test]
    fn relabel_database() {
        let d = db();
        let lam = Relabeling::swap(l("a"), l("b"));
        let d2 = lam.database(&d).unwrap();
        assert_eq!(d2.lbl(&e("e1")), Some(&l("b")));
        assert_eq!(d2.lbl(&e("e3")), Some(&l("a")));
        assert_eq!(lam.inverse().database(&d2).unwrap(), d);
    }
}
