use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{VertexId, Walk};

/// A finite set of walks, iterated in canonical shortlex order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WalkSet {
    walks: BTreeSet<Walk>,
}

impl WalkSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Walk) -> bool {
        self.walks.insert(w)
    }

    pub fn contains(&self, w: &Walk) -> bool {
        self.walks.contains(w)
    }

    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Walk> + '_ {
        self.walks.iter()
    }

    pub fn is_subset(&self, other: &WalkSet) -> bool {
        self.walks.is_subset(&other.walks)
    }

    pub fn union(&self, other: &WalkSet) -> WalkSet {
        self.walks.union(&other.walks).cloned().collect()
    }

    pub fn intersection(&self, other: &WalkSet) -> WalkSet {
        self.walks.intersection(&other.walks).cloned().collect()
    }

    pub fn difference(&self, other: &WalkSet) -> WalkSet {
        self.walks.difference(&other.walks).cloned().collect()
    }

    pub fn retain(&mut self, f: impl FnMut(&Walk) -> bool) {
        self.walks.retain(f)
    }

    /// Members from `s` to `t`.
    pub fn between(&self, s: &VertexId, t: &VertexId) -> WalkSet {
        self.walks.iter().filter(|w| w.src() == s && w.tgt() == t).cloned().collect()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.walks.iter().map(Walk::len).max()
    }

    pub fn into_vec(self) -> Vec<Walk> {
        self.walks.into_iter().collect()
    }
}

impl FromIterator<Walk> for WalkSet {
    fn from_iter<I: IntoIterator<Item = Walk>>(iter: I) -> Self {
        WalkSet { walks: iter.into_iter().collect() }
    }
}

impl Extend<Walk> for WalkSet {
    fn extend<I: IntoIterator<Item = Walk>>(&mut self, iter: I) {
        self.walks.extend(iter)
    }
}

impl IntoIterator for WalkSet {
    type Item = Walk;
    type IntoIter = std::collections::btree_set::IntoIter<Walk>;
    fn into_iter(self) -> Self::IntoIter {
        self.walks.into_iter()
    }
}

impl<'a> IntoIterator for &'a WalkSet {
    type Item = &'a Walk;
    type IntoIter = std::collections::btree_set::Iter<'a, Walk>;
    fn into_iter(self) -> Self::IntoIter {
        self.walks.iter()
    }
}

/// One walk per line.
impl fmt::Display for WalkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.walks {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_dedup() {
        let ws: WalkSet =
            ["v2 -e1-> v3", "v1", "v1 -e0-> v2", "v1"].iter().map(|s| s.parse::<Walk>().unwrap()).collect();
        assert_eq!(ws.len(), 3);
        assert_eq!(ws.to_string(), "v1\nv1 -e0-> v2\nv2 -e1-> v3\n");
    }
}
