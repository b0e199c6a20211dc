//! Adding an edge can remove a walk from the result: shortest walks on a
//! database and on a superdatabase of it.

use rpqlab::{evaluate, fixtures, Endpoints, SemanticsId, SemanticsSpec};

fn main() -> rpqlab::Result<()> {
    let r = fixtures::sh_query();
    let spec = SemanticsSpec::new(SemanticsId::Shortest);
    for (name, db) in [("D", fixtures::sh_small()), ("D'", fixtures::sh_large())] {
        print!("Sh({name}, {r}):\n{}", evaluate(&db, &r, &spec, &Endpoints::any())?);
    }

    let r = fixtures::mono_query();
    let spec = SemanticsSpec::new(SemanticsId::Shvc);
    let w = fixtures::mono_walk();
    for (name, db) in [("D", fixtures::mono_small()), ("D'", fixtures::mono_large())] {
        let res = evaluate(&db, &r, &spec, &Endpoints::any())?;
        println!("ShVC({name}, {r}) contains {w}: {}", res.contains(&w));
    }
    Ok(())
}
