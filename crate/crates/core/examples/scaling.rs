//! Times evaluation on the scaling families.
//!
//! `cargo run --release --example scaling`

use rpqlab::lab::bench::{time_eval, Family, TEN_STATE_QUERY};
use rpqlab::semantics::{stream_filter, Filter};
use rpqlab::{Endpoints, Regex, SemanticsId, SemanticsSpec};

fn main() -> rpqlab::Result<()> {
    let sh = SemanticsSpec::new(SemanticsId::Shortest);
    println!("random family, query {TEN_STATE_QUERY}");
    for n in [100, 1000, 5000] {
        let (k, t) = time_eval(Family::Random, n, &sh, 7)?;
        println!("  Sh  |V|={n:<5} |E|={:<6} {k:>6} walks  {t:?}", 5 * n);
    }
    for n in [10, 100, 1000] {
        let (k, t) = time_eval(Family::Path, n, &sh, 0)?;
        println!("  Sh  path {n:<5} {k:>6} walks  {t:?}");
    }
    let star = Regex::parse("(a + b)*")?;
    for v in 3..=6 {
        let db = rpqlab::lab::bench::random_graph(v, 12, v as u64);
        let start = std::time::Instant::now();
        let n = stream_filter(&db, &star, Filter::Trail, &Endpoints::any(), |_| {})?;
        println!("  Tr  12 edges on {v} vertices: {n} trails  {:?}", start.elapsed());
    }
    Ok(())
}
