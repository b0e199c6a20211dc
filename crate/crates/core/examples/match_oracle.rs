//! Bounded match enumeration, the length bound that makes it complete for
//! minimal walks, and match existence between two vertices.

use rpqlab::matcher::{has_match, match_set_finite, matches_upto, minimal_walk_bound, shortest_match_lengths};
use rpqlab::{fixtures, Endpoints, VertexId};

fn main() -> rpqlab::Result<()> {
    let db = fixtures::abcd();
    let r = fixtures::abcd_query();
    let bound = minimal_walk_bound(&db, &r);
    println!("query {r}, minimal walk bound {bound}, finite: {}", match_set_finite(&db, &r));
    for b in [2, 4, 6] {
        let ms = matches_upto(&db, &r, b, &Endpoints::any());
        println!("matches of length <= {b}: {}", ms.len());
        for w in ms.iter() {
            println!("  {w}");
        }
    }
    let (v1, v4): (VertexId, VertexId) = ("v1".parse()?, "v4".parse()?);
    println!("match v1 -> v4: {}", has_match(&db, &r, &v1, &v4)?);
    println!("match v4 -> v1: {}", has_match(&db, &r, &v4, &v1)?);
    for ((s, t), n) in shortest_match_lengths(&db, &r) {
        println!("shortest {s} -> {t}: {n}");
    }
    Ok(())
}
