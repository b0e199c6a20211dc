use super::database::{Database, DatabaseBuilder};
use super::ids::Label;
use super::walk::{mutually_consistent, Walk};
use crate::error::{Error, Result};
use crate::rpq::Regex;

/// The smallest database containing all of `ws`, with every edge labeled by
/// its own identifier.
pub fn characteristic_database(ws: &[Walk]) -> Result<Database> {
    if ws.is_empty() {
        return Err(Error::Characteristic("needs at least one walk".into()));
    }
    if !mutually_consistent(ws) {
        return Err(Error::Characteristic("walks are not mutually consistent".into()));
    }
    let mut b = DatabaseBuilder::new().allow_edge_labels();
    for w in ws {
        b.add_vertex(w.src().clone());
        let mut prev = w.src();
        for (e, next) in w.steps() {
            b.add_edge(e.clone(), prev.clone(), next.clone(), Label::from(e))?;
            prev = next;
        }
    }
    b.build()
}

/// The concatenation of the edge identifiers of `w`, read as atoms.
pub fn characteristic_expression(w: &Walk) -> Result<Regex> {
    if w.is_trivial() {
        return Err(Error::Characteristic("trivial walk has no characteristic expression".into()));
    }
    Ok(Regex::concat_all(w.edges().map(|e| Regex::Atom(Label::from(e))).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ids::{e, l};

    #[test]
    fn single_edge() {
        let w: Walk = "v1 -e1-> v2".parse().unwrap();
        let db = characteristic_database(&[w.clone()]).unwrap();
        assert_eq!(db.num_vertices(), 2);
        assert_eq!(db.num_edges(), 1);
        assert_eq!(db.lbl(&e("e1")), Some(&l("e1")));
        assert!(db.has_edge_labels());
        assert_eq!(characteristic_expression(&w).unwrap().to_string(), "e1");
    }

    #[test]
    fn two_edges() {
        let w: Walk = "v1 -e1-> v2 -e2-> v3".parse().unwrap();
        assert_eq!(characteristic_expression(&w).unwrap().to_string(), "e1 e2");
    }

    #[test]
    fn errors() {
        assert!(characteristic_database(&[]).is_err());
        let a: Walk = "v1 -e-> v2".parse().unwrap();
        let b: Walk = "v1 -e-> v3".parse().unwrap();
        assert!(characteristic_database(&[a, b]).is_err());
        assert!(characteristic_expression(&"v".parse().unwrap()).is_err());
    }
}
