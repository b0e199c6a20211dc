//! Evaluation of regular path queries under a catalog of finite-result
//! semantics, with a brute-force match oracle and a randomized property
//! laboratory.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod lab;
pub mod matcher;
pub mod problems;
pub mod rpq;
pub mod semantics;

pub use error::{Error, Result};
pub use graph::{Database, EdgeId, Label, VertexId, Walk};
pub use matcher::{Endpoints, WalkSet};
pub use rpq::Regex;
pub use semantics::{evaluate, SemanticsId, SemanticsSpec};
