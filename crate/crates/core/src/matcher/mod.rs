//! The database/automaton product, bounded match enumeration and the
//! reachability questions answered on the product.

pub(crate) mod dfs;
mod ops;
mod product;
mod walkset;

pub(crate) use ops::{enumerate_matches, has_useful_cycle, Resolved, Sink};
pub use ops::{
    has_match, match_set_finite, matches_upto, minimal_walk_bound, shortest_match_lengths, try_matches_upto, Endpoints,
};
pub(crate) use product::IWalk;
pub use product::ProductGraph;
pub use walkset::WalkSet;
