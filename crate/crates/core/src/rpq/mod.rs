//! Query expressions, their position automata and language operations.

mod glushkov;
mod language;
mod linearize;
mod regex;

pub use glushkov::{glushkov, GlushkovNfa};
pub use language::{distinguishing_word, language_contains, regex_equivalent};
pub use linearize::{linearize, Linearization};
pub use regex::Regex;

/// Parses the textual query syntax.
pub fn parse_query(text: &str) -> crate::Result<Regex> {
    Regex::parse(text)
}
