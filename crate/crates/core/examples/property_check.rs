//! Searches for a counterexample to one property and prints it.
//!
//! `cargo run --release --example property_check -- monotony Sh`

use rpqlab::lab::{check_property, GenParams, Property};
use rpqlab::{SemanticsId, SemanticsSpec};

fn main() -> rpqlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let prop: Property = args.next().as_deref().unwrap_or("monotony").parse()?;
    let sem: SemanticsId = args.next().as_deref().unwrap_or("Sh").parse()?;
    let params = GenParams { trials: 300, ..GenParams::default() };
    let report = check_property(prop, &SemanticsSpec::new(sem), &params);
    print!("{report}");
    println!("{} checked, {} skipped, {:?}", report.trials, report.skipped, report.elapsed);
    if let Some(still) = report.replay() {
        println!("replays: {still}");
    }
    Ok(())
}
