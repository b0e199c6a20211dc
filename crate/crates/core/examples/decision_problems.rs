//! Existence, membership and extensibility for a few semantics.

use rpqlab::problems::{existence, extensibility, membership, Problem, ProblemInstance};
use rpqlab::{fixtures, SemanticsId, SemanticsSpec, VertexId, Walk};

fn main() -> rpqlab::Result<()> {
    let db = fixtures::vsc();
    let [_, _, r3] = fixtures::vsc_queries();
    let (v1, v4): (VertexId, VertexId) = ("v1".parse()?, "v4".parse()?);
    let detour = fixtures::vsc_walks()[2].clone();
    let prefix: Walk = "v1 -ea-> v2 -ee-> v3".parse()?;
    for id in [SemanticsId::Trail, SemanticsId::Shortest, SemanticsId::Shvc, SemanticsId::Shec] {
        let spec = SemanticsSpec::new(id);
        println!(
            "{:>5}: exists v1->v4 {}, {detour} member {}, {prefix} extensible {}",
            id.short(),
            existence(&db, &r3, &v1, &v4, &spec)?,
            membership(&db, &r3, &detour, &spec)?,
            extensibility(&db, &r3, &prefix, Some(&v4), &spec)?,
        );
    }

    let p = ProblemInstance {
        db: fixtures::sh_large(),
        query: fixtures::sh_query(),
        spec: SemanticsSpec::new(SemanticsId::Shortest),
        problem: Problem::Membership { w: "v1 -e1-> v2 -e2-> v3".parse()? },
    };
    println!("long walk is a shortest match after extension: {}", p.solve()?);
    Ok(())
}
