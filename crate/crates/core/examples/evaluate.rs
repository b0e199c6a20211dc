//! Evaluates one query under every semantics on the diamond database.
//!
//! `cargo run --example evaluate`

use rpqlab::semantics::CostTable;
use rpqlab::{evaluate, fixtures, Endpoints, Regex, SemanticsId, SemanticsSpec};

fn main() -> rpqlab::Result<()> {
    let db = fixtures::vsc();
    let r = Regex::parse("a b + c d + a e f b")?;
    println!("database:\n{}query: {r}\n", db.to_text());
    for id in SemanticsId::ALL {
        let mut spec = SemanticsSpec::new(id);
        if id == SemanticsId::Cheapest {
            spec = spec.with_costs(CostTable::uniform(&db));
        }
        let res = evaluate(&db, &r, &spec, &Endpoints::any())?;
        println!("{:>6}  {} walks", id.short(), res.len());
        for w in res.iter() {
            println!("        {w}");
        }
    }
    Ok(())
}
