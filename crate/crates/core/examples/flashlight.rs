//! Streams result walks one at a time. Shortest and vertex-cover semantics
//! decide extensibility directly and never materialize the result.

use rpqlab::lab::bench::path_graph;
use rpqlab::problems::enumerate_flashlight;
use rpqlab::{Regex, SemanticsId, SemanticsSpec, VertexId};

fn main() -> rpqlab::Result<()> {
    let db = path_graph(8);
    let r = Regex::parse("a a* + a a a")?;
    let p0: VertexId = "p0".parse()?;
    for id in [SemanticsId::Shortest, SemanticsId::Shvc, SemanticsId::Trail] {
        let spec = SemanticsSpec::new(id);
        let mut it = enumerate_flashlight(&db, &r, Some(&p0), None, &spec)?;
        println!("{}:", id.short());
        for w in it.by_ref().take(4) {
            println!("  {w}");
        }
        println!("  ... deepest prefix so far {}", it.max_depth());
    }
    Ok(())
}
