//! Renaming identifiers and relabeling edges commute with evaluation.

use rpqlab::graph::{Relabeling, Renaming};
use rpqlab::{evaluate, fixtures, Endpoints, SemanticsId, SemanticsSpec, WalkSet};

fn main() -> rpqlab::Result<()> {
    let db = fixtures::sh_large();
    let r = fixtures::sh_query();
    let spec = SemanticsSpec::new(SemanticsId::Shortest);

    let nu = Renaming::new(
        [("v1".parse()?, "v3".parse()?), ("v3".parse()?, "v1".parse()?)].into(),
        [("e1".parse()?, "e3".parse()?), ("e3".parse()?, "e1".parse()?)].into(),
    )?;
    let before: WalkSet = evaluate(&db, &r, &spec, &Endpoints::any())?.iter().map(|w| nu.walk(w)).collect();
    let after = evaluate(&nu.database(&db), &r, &spec, &Endpoints::any())?;
    print!("renamed result:\n{after}");
    println!("commutes: {}", before == after);

    let lambda = Relabeling::swap("a".parse()?, "b".parse()?);
    let swapped = evaluate(&lambda.database(&db)?, &r.relabel(&lambda), &spec, &Endpoints::any())?;
    println!("{r} relabeled: {}", r.relabel(&lambda));
    println!("same walks: {}", swapped == evaluate(&db, &r, &spec, &Endpoints::any())?);
    Ok(())
}
