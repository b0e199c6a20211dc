//! The database made of a set of walks, and the expression matching exactly
//! one walk of it.

use rpqlab::graph::{characteristic_database, characteristic_expression};
use rpqlab::{evaluate, fixtures, Endpoints, SemanticsId};

fn main() -> rpqlab::Result<()> {
    let walks = fixtures::vsc_walks();
    let db = characteristic_database(&walks)?;
    print!("characteristic database:\n{}", db.to_text());
    let r = characteristic_expression(&walks[2])?;
    println!("expression of {}: {r}", walks[2]);
    let res = evaluate(&db, &r, &SemanticsId::Trail.into(), &Endpoints::any())?;
    print!("its trails:\n{res}");
    Ok(())
}
