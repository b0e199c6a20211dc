//! Checks the inclusion lattice and shows the frozen separating walks.

use rpqlab::lab::{check_inclusions, GenParams, WITNESSES};
use rpqlab::semantics::default_cap;

fn main() {
    let report = check_inclusions(&GenParams { trials: 100, ..GenParams::default() }, default_cap());
    print!("{report}");
    for (sub, sup) in report.edges.iter().filter(|e| !e.verified()).map(|e| (e.sub, e.sup)) {
        println!("refuted: {} is not always inside {}", sub.short(), sup.short());
    }
    println!("\nseparating walks:");
    for w in WITNESSES {
        println!("  {} not in {} on `{}`: {}", w.left.short(), w.right.short(), w.query, w.walk);
    }
}
