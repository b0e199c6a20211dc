//! One PASS/FAIL line per acceptance criterion.
//!
//! A criterion listed in `KNOWN_FAILING` is expected to fail and is reported
//! as such; the test only breaks when a criterion's status changes.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use common::{compare_all, Outcome};
use rpqlab::lab::bench::{self, Family, TEN_STATE_QUERY};
use rpqlab::lab::{self, star_upto, GenParams, Instance};
use rpqlab::problems::enumerate_flashlight;
use rpqlab::semantics::{default_cap, stream_filter, Filter};
use rpqlab::{evaluate, fixtures, Endpoints, Regex, SemanticsId, SemanticsSpec, Walk, WalkSet};

/// The inclusion lattice has three edges with counterexamples.
const KNOWN_FAILING: &[u32] = &[3];

struct Line {
    id: u32,
    ok: bool,
    detail: String,
}

impl Line {
    fn new(id: u32, ok: bool, detail: impl Into<String>) -> Self {
        Line { id, ok, detail: detail.into() }
    }
}

fn eval(db: &rpqlab::Database, r: &Regex, id: SemanticsId) -> WalkSet {
    evaluate(db, r, &SemanticsSpec::new(id), &Endpoints::any()).unwrap()
}

fn set(ws: impl IntoIterator<Item = Walk>) -> WalkSet {
    ws.into_iter().collect()
}

fn fixtures_reproduce() -> Line {
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failed.push(name.to_string());
        }
    };

    let r = fixtures::sh_query();
    check("sh-small", eval(&fixtures::sh_small(), &r, SemanticsId::Shortest).to_string() == "v1 -e1-> v2 -e2-> v3\n");
    check("sh-large", eval(&fixtures::sh_large(), &r, SemanticsId::Shortest).to_string() == "v1 -e3-> v3\n");

    let db = fixtures::vsc();
    let [r1, r2, r3] = fixtures::vsc_queries();
    let [w1, w2, w3] = fixtures::vsc_walks();
    check("vsc-r1", eval(&db, &r1, SemanticsId::Shvc) == set([w1.clone(), w3.clone()]));
    check("vsc-r2", eval(&db, &r2, SemanticsId::Shvc) == set([w2.clone(), w3]));
    check("vsc-r3", eval(&db, &r3, SemanticsId::Shvc) == set([w1, w2]));

    let r = fixtures::mono_query();
    let w = fixtures::mono_walk();
    check("mono-small", eval(&fixtures::mono_small(), &r, SemanticsId::Shvc).contains(&w));
    check("mono-large", !eval(&fixtures::mono_large(), &r, SemanticsId::Shvc).contains(&w));

    let res = eval(&fixtures::subw(), &fixtures::subw_query(), SemanticsId::Shvc);
    let c = fixtures::subw_cycle();
    check("subw", !res.iter().any(|x| rpqlab::graph::subwalk_leq(x, &c)));

    let lp = fixtures::self_loop();
    check("gu-star", eval(&lp, &Regex::parse("a*").unwrap(), SemanticsId::GivingUp).is_empty());
    check(
        "gu-cube",
        eval(&lp, &Regex::parse("a a a").unwrap(), SemanticsId::GivingUp) == set([fixtures::self_loop_walk(3)]),
    );

    // S(D, a) = {v -e-> v} but S(D, a*) misses its square.
    let a = Regex::atom("a");
    let star = Regex::parse("a*").unwrap();
    for id in SemanticsId::ALL.into_iter().filter(|i| i.is_order_based()) {
        let spec = if id == SemanticsId::Cheapest {
            SemanticsSpec::new(id).with_costs(rpqlab::semantics::CostTable::uniform(&lp))
        } else {
            SemanticsSpec::new(id)
        };
        let ev = |r: &Regex| evaluate(&lp, r, &spec, &Endpoints::any()).unwrap();
        let atom = ev(&a);
        let composed = star_upto(&lp, &atom, 2, 100).unwrap();
        let ok = atom == set([fixtures::self_loop_walk(1)])
            && composed.contains(&fixtures::self_loop_walk(2))
            && !ev(&star).contains(&fixtures::self_loop_walk(2));
        check(&format!("loop-star-{}", id.short()), ok);
    }

    let t = start.elapsed();
    let ok = failed.is_empty() && t < Duration::from_secs(1);
    Line::new(1, ok, format!("{} failed {:?}, {} ms", failed.len(), failed, t.as_millis()))
}

fn oracle_equivalence() -> Line {
    let start = Instant::now();
    let params = GenParams::default();
    let (mut compared, mut skipped) = (0, 0);
    let mut bad = None;
    for i in 0..300 {
        let inst = Instance::random(&params, i);
        for (_, out) in compare_all(&inst, 20_000) {
            match out {
                Outcome::Full | Outcome::Scoped => compared += 1,
                Outcome::Skipped => skipped += 1,
                Outcome::Mismatch(m) => bad = bad.or(Some(format!("trial {i}: {m}"))),
            }
        }
    }
    let t = start.elapsed();
    if let Some(m) = &bad {
        eprintln!("{m}");
    }
    let ok = bad.is_none() && t < Duration::from_secs(60);
    Line::new(2, ok, format!("300 instances, {compared} comparisons, {skipped} skipped, {} ms", t.as_millis()))
}

fn inclusion_lattice() -> Line {
    let report = lab::check_inclusions(&GenParams { trials: 300, ..GenParams::default() }, default_cap());
    print!("{report}");
    let refuted: Vec<String> = report
        .edges
        .iter()
        .filter(|e| !e.verified())
        .map(|e| format!("{}<={}", e.sub.short(), e.sup.short()))
        .collect();
    let unwitnessed = report.edges.iter().filter(|e| e.strict.is_none()).count();
    Line::new(
        3,
        report.passed(),
        format!("{} edges, refuted {:?}, {unwitnessed} without strictness witness", report.edges.len(), refuted),
    )
}

fn property_matrix() -> Line {
    let params = GenParams { trials: 1000, ..GenParams::default() };
    let report = lab::run_matrix(&params);
    for m in &report.mismatches {
        println!("{m}");
    }
    Line::new(
        4,
        report.passed(),
        format!(
            "{} cells, {} mismatches, {} ms",
            report.reports.len(),
            report.mismatches.len(),
            report.elapsed.as_millis()
        ),
    )
}

fn flashlight() -> Line {
    let params = GenParams::default();
    let mut problems = Vec::new();
    let mut runs = 0;
    for i in 0..300 {
        let inst = Instance::random(&params, i);
        for id in [SemanticsId::Shortest, SemanticsId::Trail, SemanticsId::Shvc] {
            let spec = SemanticsSpec::new(id).with_cap(200_000);
            let Ok(want) = evaluate(&inst.db, &inst.query, &spec, &Endpoints::any()) else { continue };
            let mut fl = enumerate_flashlight(&inst.db, &inst.query, None, None, &spec).unwrap();
            let mut got = Vec::new();
            for w in fl.by_ref() {
                got.push(w);
            }
            runs += 1;
            let distinct: BTreeSet<&Walk> = got.iter().collect();
            let longest = got.iter().map(Walk::len).max().unwrap_or(0);
            if distinct.len() != got.len() {
                problems.push(format!("trial {i} {}: duplicates", id.short()));
            } else if set(got.iter().cloned()) != want {
                problems.push(format!("trial {i} {}: differs from evaluate", id.short()));
            } else if fl.max_depth() > longest {
                problems.push(format!("trial {i} {}: depth {} > {longest}", id.short(), fl.max_depth()));
            }
        }
    }
    for p in &problems {
        eprintln!("{p}");
    }
    Line::new(5, problems.is_empty(), format!("{runs} enumerations, {} problems", problems.len()))
}

fn scale() -> Line {
    let sh = SemanticsSpec::new(SemanticsId::Shortest).with_cap(default_cap());
    let (n, t_sh) = bench::time_eval(Family::Random, 1000, &sh, 7).unwrap();
    let star = Regex::parse("(a + b)*").unwrap();
    let (mut t_tr, mut trails) = (Duration::ZERO, 0);
    let mut tr_err = None;
    // 12 edges on 2 to 6 vertices; the 2-vertex graph has millions of trails
    for v in 2..=6 {
        let db = bench::random_graph(v, 12, v as u64);
        let start = Instant::now();
        match stream_filter(&db, &star, Filter::Trail, &Endpoints::any(), |_| {}) {
            Ok(n) => trails = trails.max(n),
            Err(e) => tr_err = Some(e.to_string()),
        }
        t_tr = t_tr.max(start.elapsed());
    }
    let ok = t_sh < Duration::from_secs(1) && t_tr < Duration::from_secs(10) && tr_err.is_none();
    Line::new(
        6,
        ok,
        format!(
            "Sh |V|=1000 |E|=5000 `{TEN_STATE_QUERY}`: {n} walks in {} ms; Tr on 12 edges: up to {trails} trails, worst {} ms{}",
            t_sh.as_millis(),
            t_tr.as_millis(),
            tr_err.map(|e| format!(", error {e}")).unwrap_or_default()
        ),
    )
}

#[test]
fn acceptance() {
    let lines =
        [fixtures_reproduce(), oracle_equivalence(), inclusion_lattice(), property_matrix(), flashlight(), scale()];
    let mut changed = Vec::new();
    for l in &lines {
        let known = KNOWN_FAILING.contains(&l.id);
        let tag = match (l.ok, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        // straight to the process stdout so the report survives output capture
        writeln!(std::io::stdout().lock(), "CRITERION {} {tag} {}", l.id, l.detail).unwrap();
        if l.ok == known {
            changed.push(l.id);
        }
    }
    assert!(changed.is_empty(), "criteria with unexpected status: {changed:?}");
}
