//! A user-defined filter and a trimmed order plugged into the generic
//! evaluators.

use rpqlab::graph::Walk;
use rpqlab::semantics::{eval_filter_semantics, eval_order_semantics, trim, FilterFn, OrderKind, SuitableOrder};
use rpqlab::{fixtures, Endpoints, Regex};

fn main() -> rpqlab::Result<()> {
    let db = fixtures::abcd();
    let r = Regex::parse("a (b c)* d")?;

    // walks that use each edge at most twice; no accepted walk is longer
    // than twice the number of edges
    let at_most_twice = FilterFn::new(
        "edge-twice",
        true,
        |db| 2 * db.num_edges(),
        |w: &Walk| w.edges().all(|e| w.edges().filter(|x| *x == e).count() <= 2),
    );
    print!("edge-twice:\n{}", eval_filter_semantics(&db, &r, &at_most_twice, &Endpoints::any(), 1000)?);

    for ord in [SuitableOrder::new(OrderKind::Subwalk), trim(SuitableOrder::new(OrderKind::Bag))] {
        let res = eval_order_semantics(&db, &r, &ord, &Endpoints::any(), 1000)?;
        print!("{:?} (trimmed: {}):\n{res}", ord.kind, ord.trimmed);
    }
    Ok(())
}
