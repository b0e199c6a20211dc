use std::collections::{BTreeSet, HashMap, VecDeque};

use super::glushkov::GlushkovNfa;
use super::regex::Regex;
use crate::graph::ids::Label;

/// `u ∈ L(R)`, by simulating the position automaton.
pub fn language_contains(r: &Regex, u: &[Label]) -> bool {
    GlushkovNfa::new(r).accepts(u)
}

fn step(nfa: &GlushkovNfa, set: &[usize], a: &Label) -> Vec<usize> {
    let mut out: Vec<usize> =
        set.iter().flat_map(|&q| nfa.successors(q).iter().copied()).filter(|&p| nfa.position_label(p) == a).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// A shortest word in exactly one of `L(r1)` and `L(r2)`, if any.
///
/// Breadth-first search over pairs of subset-construction states, built on
/// the fly over the union of both alphabets.
pub fn distinguishing_word(r1: &Regex, r2: &Regex) -> Option<Vec<Label>> {
    let n1 = GlushkovNfa::new(r1);
    let n2 = GlushkovNfa::new(r2);
    let alphabet: BTreeSet<Label> = r1.atoms().into_iter().chain(r2.atoms()).cloned().collect();
    let accepts = |n: &GlushkovNfa, s: &[usize]| s.iter().any(|&q| n.is_accepting(q));

    type Pair = (Vec<usize>, Vec<usize>);
    let start: Pair = (vec![0], vec![0]);
    let mut parent: HashMap<Pair, Option<(Pair, Label)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        if accepts(&n1, &pair.0) != accepts(&n2, &pair.1) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, a))) = parent.get(&cur) {
                word.push(a.clone());
                cur = prev.clone();
            }
            word.reverse();
            return Some(word);
        }
        for a in &alphabet {
            let next = (step(&n1, &pair.0, a), step(&n2, &pair.1, a));
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((pair.clone(), a.clone())));
                queue.push_back(next);
            }
        }
    }
    None
}

/// `L(r1) = L(r2)`.
pub fn regex_equivalent(r1: &Regex, r2: &Regex) -> bool {
    distinguishing_word(r1, r2).is_none()
}
