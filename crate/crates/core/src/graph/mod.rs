//! Identifiers, databases, walks and the operations on them.

pub mod characteristic;
pub mod database;
pub mod ids;
pub mod rename;
pub mod subwalk;
pub mod walk;

pub use characteristic::{characteristic_database, characteristic_expression};
pub use database::{Database, DatabaseBuilder};
pub use ids::{EdgeId, Label, VertexId};
pub use rename::{Relabeling, Renaming};
pub use subwalk::{subwalk_leq, subwalk_lt};
pub use walk::{bag_leq, consistent_with, mutually_consistent, Element, Walk};
