use std::collections::{BTreeSet, HashMap, VecDeque};

use super::regex::Regex;
use crate::graph::ids::Label;

/// Position automaton of a regular expression.
///
/// State 0 is initial; state `i` in `1..=k` is the i-th atom position and is
/// entered only by reading that atom's label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlushkovNfa {
    labels: Vec<Label>,
    succ: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

struct Info {
    nullable: bool,
    first: Vec<usize>,
    last: Vec<usize>,
}

fn build(r: &Regex, offset: &mut usize, labels: &mut Vec<Label>, follow: &mut Vec<BTreeSet<usize>>) -> Info {
    match r {
        Regex::Epsilon => Info { nullable: true, first: vec![], last: vec![] },
        Regex::Atom(a) => {
            *offset += 1;
            labels.push(a.clone());
            follow.push(BTreeSet::new());
            Info { nullable: false, first: vec![*offset], last: vec![*offset] }
        }
        Regex::Star(inner) => {
            let i = build(inner, offset, labels, follow);
            for &p in &i.last {
                follow[p].extend(i.first.iter().copied());
            }
            Info { nullable: true, ..i }
        }
        Regex::Union(a, b) => {
            let x = build(a, offset, labels, follow);
            let y = build(b, offset, labels, follow);
            Info {
                nullable: x.nullable || y.nullable,
                first: x.first.into_iter().chain(y.first).collect(),
                last: x.last.into_iter().chain(y.last).collect(),
            }
        }
        Regex::Concat(a, b) => {
            let x = build(a, offset, labels, follow);
            let y = build(b, offset, labels, follow);
            for &p in &x.last {
                follow[p].extend(y.first.iter().copied());
            }
            let mut first = x.first;
            if x.nullable {
                first.extend(y.first.iter().copied());
            }
            let mut last = y.last;
            if y.nullable {
                last.extend(x.last);
            }
            Info { nullable: x.nullable && y.nullable, first, last }
        }
    }
}

impl GlushkovNfa {
    pub fn new(r: &Regex) -> Self {
        let mut labels = Vec::new();
        // follow[0] is a placeholder for the initial state
        let mut follow = vec![BTreeSet::new()];
        let mut offset = 0;
        let info = build(r, &mut offset, &mut labels, &mut follow);
        let mut succ: Vec<Vec<usize>> = follow.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut first = info.first;
        first.sort_unstable();
        first.dedup();
        succ[0] = first;
        let mut accepting = vec![false; labels.len() + 1];
        accepting[0] = info.nullable;
        for p in info.last {
            accepting[p] = true;
        }
        GlushkovNfa { labels, succ, accepting }
    }

    /// Number of atom positions `k`; the automaton has `k + 1` states.
    pub fn positions(&self) -> usize {
        self.labels.len()
    }

    pub fn num_states(&self) -> usize {
        self.labels.len() + 1
    }

    /// Label read when entering position `p` (1-based).
    pub fn position_label(&self, p: usize) -> &Label {
        &self.labels[p - 1]
    }

    /// Positions reachable from state `q` in one transition.
    pub fn successors(&self, q: usize) -> &[usize] {
        &self.succ[q]
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepts_epsilon(&self) -> bool {
        self.accepting[0]
    }

    /// Subset simulation on a word.
    pub fn accepts(&self, word: &[Label]) -> bool {
        let mut cur = vec![0usize];
        let mut mark = vec![usize::MAX; self.num_states()];
        for (step, a) in word.iter().enumerate() {
            let mut next = Vec::new();
            for &q in &cur {
                for &p in &self.succ[q] {
                    if mark[p] != step && &self.labels[p - 1] == a {
                        mark[p] = step;
                        next.push(p);
                    }
                }
            }
            if next.is_empty() {
                return false;
            }
            cur = next;
        }
        cur.iter().any(|&q| self.accepting[q])
    }

    /// True if some accepting run on `word` enters position `i`.
    pub fn covers_position(&self, word: &[Label], i: usize) -> bool {
        // states (q, used) encoded as 2q + used
        let n = self.num_states();
        let mut cur = vec![false; 2 * n];
        cur[0] = true;
        for a in word {
            let mut next = vec![false; 2 * n];
            let mut any = false;
            for q in 0..n {
                for used in 0..2 {
                    if !cur[2 * q + used] {
                        continue;
                    }
                    for &p in &self.succ[q] {
                        if &self.labels[p - 1] == a {
                            let u = if p == i { 1 } else { used };
                            next[2 * p + u] = true;
                            any = true;
                        }
                    }
                }
            }
            if !any {
                return false;
            }
            cur = next;
        }
        (0..n).any(|q| cur[2 * q + 1] && self.accepting[q])
    }

    /// States reachable from the initial state and co-reachable to an
    /// accepting state.
    pub fn useful_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut fwd = vec![false; n];
        fwd[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(q) = queue.pop_front() {
            for &p in &self.succ[q] {
                if !fwd[p] {
                    fwd[p] = true;
                    queue.push_back(p);
                }
            }
        }
        let mut pred = vec![Vec::new(); n];
        for q in 0..n {
            for &p in &self.succ[q] {
                pred[p].push(q);
            }
        }
        let mut bwd = self.accepting.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| bwd[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &pred[q] {
                if !bwd[p] {
                    bwd[p] = true;
                    queue.push_back(p);
                }
            }
        }
        (0..n).map(|q| fwd[q] && bwd[q]).collect()
    }

    /// Positions grouped by label.
    pub fn positions_by_label(&self) -> HashMap<&Label, Vec<usize>> {
        let mut m: HashMap<&Label, Vec<usize>> = HashMap::new();
        for (i, a) in self.labels.iter().enumerate() {
            m.entry(a).or_default().push(i + 1);
        }
        m
    }
}

pub fn glushkov(r: &Regex) -> GlushkovNfa {
    GlushkovNfa::new(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ids::l;

    fn word(s: &str) -> Vec<Label> {
        s.split_whitespace().map(l).collect()
    }

    #[test]
    fn single_atom() {
        let n = glushkov(&Regex::atom("a"));
        assert_eq!(n.num_states(), 2);
        assert_eq!(n.successors(0), &[1]);
        assert!(n.is_accepting(1));
        assert!(!n.accepts_epsilon());
        assert_eq!(n.position_label(1), &l("a"));
    }

    #[test]
    fn abcd() {
        let n = glushkov(&Regex::parse("a (b c)* d").unwrap());
        assert_eq!(n.positions(), 4);
        let acc: Vec<usize> = (0..5).filter(|&q| n.is_accepting(q)).collect();
        assert_eq!(acc, [4]);
        assert!(n.accepts(&word("a d")));
        assert!(n.accepts(&word("a b c b c d")));
        assert!(!n.accepts(&word("a b d")));
    }

    #[test]
    fn star_accepts_epsilon() {
        assert!(glushkov(&Regex::parse("a*").unwrap()).accepts(&[]));
    }

    #[test]
    fn position_cover() {
        let n = glushkov(&Regex::parse("a b + a e f b").unwrap());
        assert_eq!(n.positions(), 6);
        let u = word("a e f b");
        let covered: Vec<usize> = (1..=6).filter(|&i| n.covers_position(&u, i)).collect();
        assert_eq!(covered, [3, 4, 5, 6]);
    }
}
