use super::layered::Layered;
use crate::error::Result;
use crate::matcher::{ProductGraph, Resolved, Sink};

/// For every source, target and vertex `x`: the shortest matches covering `x`.
pub(crate) fn vertex_cover(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let mut l = Layered::new(prod, ends, None);
    for &s in &ends.sources {
        for x in 0..prod.database().num_vertices() {
            l.run(s, s == x, |_, y| prod.vertex_of(y) == x, ends, false, sink)?;
        }
    }
    Ok(())
}

/// Like [`vertex_cover`], with every vertex and every edge as the element to
/// cover.
pub(crate) fn element_cover(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    vertex_cover(prod, ends, sink)?;
    let mut l = Layered::new(prod, ends, None);
    for &s in &ends.sources {
        for x in 0..prod.database().num_edges() {
            l.run(s, false, |e, _| e == x, ends, false, sink)?;
        }
    }
    Ok(())
}

/// For every source, target and atom position `i`: the shortest matches
/// having an accepting run through position `i`.
pub(crate) fn atom_cover(prod: &ProductGraph<'_>, ends: &Resolved, sink: &mut Sink) -> Result<()> {
    let mut l = Layered::new(prod, ends, None);
    for &s in &ends.sources {
        for i in 1..=prod.nfa().positions() {
            l.run(s, false, |_, y| prod.nfa_state_of(y) == i, ends, false, sink)?;
        }
    }
    Ok(())
}
