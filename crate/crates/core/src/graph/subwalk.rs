//! The subwalk order: `w ⊑ w2` when `w2` is obtained from `w` by inserting
//! closed walks at vertex occurrences.

use super::walk::Walk;

/// Decides `w ⊑ w2`.
///
/// Reachability over index pairs `(i, j)` with `w⟨i⟩ = w2⟨j⟩`, starting at
/// `(0, 0)`. A pair advances to `(i+1, j+1)` when the next edges agree, or
/// skips a closed factor of `w2` to `(i, j')` with `w2⟨j'⟩ = w⟨i⟩`. Accepts at
/// `(len w, len w2)`.
pub fn subwalk_leq(w: &Walk, w2: &Walk) -> bool {
    let (n, m) = (w.len(), w2.len());
    if n > m || w.src() != w2.src() || w.tgt() != w2.tgt() {
        return false;
    }
    let mut seen = vec![false; (n + 1) * (m + 1)];
    let mut stack = vec![(0usize, 0usize)];
    seen[0] = true;
    while let Some((i, j)) = stack.pop() {
        if i == n && j == m {
            return true;
        }
        let mut push = |a: usize, b: usize, stack: &mut Vec<(usize, usize)>| {
            let k = a * (m + 1) + b;
            if !seen[k] {
                seen[k] = true;
                stack.push((a, b));
            }
        };
        if i < n && j < m && w.edge_at(i + 1) == w2.edge_at(j + 1) && w.vertex_at(i + 1) == w2.vertex_at(j + 1) {
            push(i + 1, j + 1, &mut stack);
        }
        // remaining edges of w must still fit in w2
        for j2 in (j + 1)..=(m - (n - i)) {
            if w2.vertex_at(j2) == w.vertex_at(i) {
                push(i, j2, &mut stack);
            }
        }
    }
    false
}

/// Strict version: `w ⊑ w2` and `w ≠ w2`.
pub fn subwalk_lt(w: &Walk, w2: &Walk) -> bool {
    w.len() < w2.len() && subwalk_leq(w, w2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Walk {
        s.parse().unwrap()
    }

    #[test]
    fn reflexive() {
        let x = w("v1 -a-> v2 -b-> v3 -c-> v2 -d-> v4");
        assert!(subwalk_leq(&x, &x));
        assert!(!subwalk_lt(&x, &x));
    }

    #[test]
    fn loop_chain() {
        let t = w("v");
        let one = w("v -e-> v");
        let two = w("v -e-> v -e-> v");
        assert!(subwalk_leq(&t, &one));
        assert!(subwalk_leq(&one, &two));
        assert!(subwalk_leq(&t, &two));
        assert!(!subwalk_leq(&two, &one));
    }

    #[test]
    fn abcd_chain() {
        let w0 = w("v1 -ea-> v2 -ed-> v4");
        let w1 = w("v1 -ea-> v2 -eb-> v3 -ec-> v2 -ed-> v4");
        assert!(subwalk_lt(&w0, &w1));
        assert!(!subwalk_leq(&w1, &w0));
    }

    #[test]
    fn different_endpoints_incomparable() {
        assert!(!subwalk_leq(&w("v"), &w("v -e-> u")));
        assert!(!subwalk_leq(&w("v1 -a-> v2"), &w("v1 -b-> v2")));
    }
}
