//! Hand-built cases aimed at known failures, run before the random trials.

use std::collections::BTreeMap;

use crate::fixtures;
use crate::graph::ids::{e, l};
use crate::graph::{Database, Relabeling, Renaming};
use crate::rpq::Regex;

use super::case::Case;
use super::property::Property;

fn db(text: &str) -> Database {
    Database::parse(text).expect("witness database is well formed")
}

fn re(text: &str) -> Regex {
    Regex::parse(text).expect("witness query is well formed")
}

fn lp(query: &str) -> Case {
    Case::new(&format!("loop {query}"), fixtures::self_loop(), re(query))
}

fn parallel() -> Case {
    let nu = Renaming::new(BTreeMap::new(), BTreeMap::from([(e("e1"), e("e2")), (e("e2"), e("e1"))]))
        .expect("swap is a permutation");
    Case::new("parallel", db("E e1 v1 v2 a\nE e2 v1 v2 a\n"), re("a")).with_renaming(nu)
}

fn two_cycle() -> Case {
    Case::new("two-cycle", db("E e1 s t a\nE e2 t s a\n"), re("a"))
}

fn sh_pair() -> Case {
    Case::new("sh-extension", fixtures::sh_small(), fixtures::sh_query()).with_ext(fixtures::sh_large())
}

fn mono_pair() -> Case {
    Case::new("mono-extension", fixtures::mono_small(), fixtures::mono_query()).with_ext(fixtures::mono_large())
}

fn ll_pad() -> Case {
    let padded = db("E e v v a\nV w1\nV w2\nV w3\nV w4\nV w5\nV w6\nV w7\n");
    lp("a*").with_ext(padded)
}

/// `a^n` over the path `p0 → … → pn`.
pub fn path_case(n: usize) -> Case {
    let text: String = (1..=n).map(|i| format!("E e{i} p{} p{i} a\n", i - 1)).collect();
    Case::new(&format!("path-{n}"), db(&text), Regex::power(&Regex::atom("a"), n))
}

/// Longest path used for unboundedness.
pub const PATH_FAMILY: usize = 32;

/// Hand-built cases for `prop`, most likely to falsify it first.
pub fn directed_cases(prop: Property) -> Vec<Case> {
    use Property::*;
    match prop {
        IdIndependence => vec![parallel()],
        LabelIndependence => vec![Case::new("sh-swap", fixtures::sh_large(), fixtures::sh_query())
            .with_relabeling(Relabeling::swap(l("a"), l("b")))],
        ExpressionIndependence => vec![lp("a*").with_other(re("a* + a*")), lp("a")],
        Unboundedness => (1..=PATH_FAMILY).map(path_case).collect(),
        Monotony | CoMonotony | Restrictibility => vec![sh_pair(), mono_pair(), ll_pad()],
        ACompatibility => vec![lp("a"), parallel()],
        PlusComposability | PlusDecomposability => vec![
            lp("a").with_other(re("a a")),
            Case::new("mono-plus", fixtures::mono_large(), re("a b + c d")).with_other(re("a e d")),
        ],
        ConcatComposability | ConcatDecomposability => vec![
            Case::new("abcd-concat", fixtures::abcd(), re("a (b + eps)")).with_other(re("(c + eps) d")),
            lp("a*"),
            two_cycle(),
            Case::new(
                "cover-concat",
                db("E e1 s x a\nE e2 x m a\nE e3 m t a\nE e4 s m a\nE e5 x t a\n"),
                re("a + a a"),
            )
            .with_other(re("a")),
        ],
        StarComposability | StarDecomposability => vec![lp("a"), two_cycle()],
        Continuity => vec![lp("a")],
        VertexCoverage => vec![lp("a a a")],
        EdgeCoverage => vec![
            lp("a a a"),
            lp("a*"),
            Case::new("sh-edges", fixtures::sh_large(), fixtures::sh_query()),
            Case::new("atom-edges", db("E h s2 s b\nE e s t a\nE f s x a\nE g x t a\n"), re("b a*")),
        ],
        SubwalkGuarantee => {
            let mut cases = vec![lp("a a a"), Case::new("subw", fixtures::subw(), fixtures::subw_query())];
            cases.extend(frozen_subwalk_cases());
            cases
        }
        AtomCoverage => vec![lp("a + a a a*")],
        TrimmedEquivalence | ElementInclusion => vec![
            Case::new("vsc", fixtures::vsc(), fixtures::vsc_queries()[2].clone()),
            Case::new("abcd", fixtures::abcd(), fixtures::abcd_query()),
        ],
    }
}

/// Found by random search, then shrunk: `ba` is strictly below the match
/// `abb` in bag and element-set order without being a subwalk of it.
fn frozen_subwalk_cases() -> Vec<Case> {
    vec![Case::new("bag-loops", db("E e1 v1 v1 b\nE e2 v1 v1 a\n"), re("b a + a b b"))]
}
