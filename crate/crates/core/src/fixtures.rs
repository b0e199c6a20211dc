//! Small hand-built instances used throughout tests, examples and the lab.
//!
//! Where the original figures name edges after their labels, edges here are
//! named `e<label>` because vertex, edge and label tokens live in disjoint
//! namespaces.

use crate::graph::{Database, Walk};
use crate::rpq::Regex;

fn db(text: &str) -> Database {
    Database::parse(text).expect("fixture database is well formed")
}

fn re(text: &str) -> Regex {
    Regex::parse(text).expect("fixture query is well formed")
}

fn walk(text: &str) -> Walk {
    text.parse().expect("fixture walk is well formed")
}

/// Two `a`-edges `v1 → v2 → v3`.
pub fn sh_small() -> Database {
    db("E e1 v1 v2 a\nE e2 v2 v3 a\n")
}

/// [`sh_small`] plus a `b`-edge `v1 → v3`.
pub fn sh_large() -> Database {
    db("E e1 v1 v2 a\nE e2 v2 v3 a\nE e3 v1 v3 b\n")
}

pub fn sh_query() -> Regex {
    re("a a + b")
}

/// Diamond `v1 → {v2, v3} → v4` with edges `e` and `f` between `v2` and `v3`.
pub fn vsc() -> Database {
    db("E ea v1 v2 a\nE eb v2 v4 b\nE ec v1 v3 c\nE ed v3 v4 d\nE ee v2 v3 e\nE ef v3 v2 f\n")
}

/// `ab + aefb`, `cd + aefb` and `ab + cd + aefb`.
pub fn vsc_queries() -> [Regex; 3] {
    [re("a b + a e f b"), re("c d + a e f b"), re("a b + c d + a e f b")]
}

/// The `ab`, `cd` and `aefb` walks from `v1` to `v4`.
pub fn vsc_walks() -> [Walk; 3] {
    [walk("v1 -ea-> v2 -eb-> v4"), walk("v1 -ec-> v3 -ed-> v4"), walk("v1 -ea-> v2 -ee-> v3 -ef-> v2 -eb-> v4")]
}

pub fn mono_small() -> Database {
    db("E ea v1 v2 a\nE ec v1 v3 c\nE ed v3 v4 d\nE ee v2 v3 e\n")
}

/// [`mono_small`] plus `b: v2 → v4`.
pub fn mono_large() -> Database {
    db("E ea v1 v2 a\nE eb v2 v4 b\nE ec v1 v3 c\nE ed v3 v4 d\nE ee v2 v3 e\n")
}

pub fn mono_query() -> Regex {
    re("a b + c d + a e d")
}

/// The `aed` walk from `v1` to `v4`.
pub fn mono_walk() -> Walk {
    walk("v1 -ea-> v2 -ee-> v3 -ed-> v4")
}

/// An `a`-cycle `v1 → v2 → v3 → v1` and `b`-cycles `v1 ⇄ v2`, `v1 ⇄ v3`.
pub fn subw() -> Database {
    db("E x1 v1 v2 a\nE x2 v2 v3 a\nE x3 v3 v1 a\nE y12 v1 v2 b\nE y21 v2 v1 b\nE y13 v1 v3 b\nE y31 v3 v1 b\n")
}

pub fn subw_query() -> Regex {
    re("a a a + b b")
}

/// The `a`-cycle from `v1`.
pub fn subw_cycle() -> Walk {
    walk("v1 -x1-> v2 -x2-> v3 -x3-> v1")
}

/// One vertex `v` with an `a`-loop `e`.
pub fn self_loop() -> Database {
    db("E e v v a\n")
}

/// `(v -e-> v)^n`.
pub fn self_loop_walk(n: usize) -> Walk {
    let mut w = walk("v");
    for _ in 0..n {
        w.push("e".parse().unwrap(), "v".parse().unwrap());
    }
    w
}

/// `v1 -a-> v2 -d-> v4` with a `bc`-cycle through `v3` at `v2`.
pub fn abcd() -> Database {
    db("E ea v1 v2 a\nE ed v2 v4 d\nE eb v2 v3 b\nE ec v3 v2 c\n")
}

pub fn abcd_query() -> Regex {
    re("a (b c)* d")
}

/// The walk labeled `a (bc)^i d`.
pub fn abcd_walk(i: usize) -> Walk {
    let mut w = walk("v1 -ea-> v2");
    for _ in 0..i {
        w.push("eb".parse().unwrap(), "v3".parse().unwrap());
        w.push("ec".parse().unwrap(), "v2".parse().unwrap());
    }
    w.push("ed".parse().unwrap(), "v4".parse().unwrap());
    w
}
