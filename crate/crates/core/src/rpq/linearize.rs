use std::collections::{BTreeMap, BTreeSet};

use super::regex::Regex;
use crate::graph::ids::Label;

/// A copy of a regex in which every atom occurrence carries its own fresh
/// symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linearization {
    /// The linearized expression over the fresh alphabet.
    pub linear: Regex,
    /// `alpha[i - 1]` is the fresh symbol of position `i`.
    pub alpha: Vec<Label>,
    /// Maps each fresh symbol back to the original atom.
    pub beta: BTreeMap<Label, Label>,
}

impl Linearization {
    pub fn positions(&self) -> usize {
        self.alpha.len()
    }

    /// Applies `beta` letter by letter.
    pub fn project(&self, word: &[Label]) -> Vec<Label> {
        word.iter().map(|g| self.beta[g].clone()).collect()
    }

    /// Position of a fresh symbol, 1-based.
    pub fn position_of(&self, g: &Label) -> Option<usize> {
        self.alpha.iter().position(|x| x == g).map(|i| i + 1)
    }
}

/// Linearizes `r` with symbols `g1, g2, …`, extending the prefix with
/// underscores until no fresh symbol clashes with an atom of `r`.
pub fn linearize(r: &Regex) -> Linearization {
    let atoms: BTreeSet<&str> = r.atoms().into_iter().map(Label::as_str).collect();
    let k = r.atom_count();
    let mut prefix = String::from("g");
    while (1..=k).any(|i| atoms.contains(format!("{prefix}{i}").as_str())) {
        prefix.push('_');
    }
    let alpha: Vec<Label> =
        (1..=k).map(|i| Label::new(&format!("{prefix}{i}")).expect("fresh symbol is a valid token")).collect();
    let originals: Vec<Label> = r.atoms().into_iter().cloned().collect();
    let beta = alpha.iter().cloned().zip(originals).collect();
    let mut next = 0;
    let linear = r.map_atoms(&mut |_| {
        next += 1;
        alpha[next - 1].clone()
    });
    Linearization { linear, alpha, beta }
}
