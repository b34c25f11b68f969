//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines come out in order. All
//! tolerances are exact (integer combinatorics) except the grid wall-clock
//! budget, pinned at `GRID_SECONDS`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::{drawing, edges, GRID};
use regfact::cli::{run_with, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};
use regfact::constructions::{transcribe, Construction};
use regfact::graph::{self, Edge};
use regfact::group::{Group, GroupFamily};
use regfact::oracle::{self, SearchBudget};
use regfact::rainbow;
use regfact::schema::Document;
use regfact::starter::{self, validate_starter};

/// Wall-clock budget for building and certifying the whole grid.
const GRID_SECONDS: f64 = 10.0;

struct Outcome {
    passed: bool,
    lines: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            passed: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.passed &= ok;
        self.lines.push(format!(
            "    [{}] {}",
            if ok { "ok" } else { "FAIL" },
            what.into()
        ));
    }
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for &family in GRID {
        let built = Construction::new(family);
        let Ok(c) = built else {
            o.check(false, format!("{family}: {}", built.unwrap_err()));
            continue;
        };
        let g = &c.group;
        let n = g.half_order();
        let starter_ok = validate_starter(&c.starter).passed();
        let factors_ok = c.factorization.len() == 2 * n - 1
            && c.factorization
                .factors
                .iter()
                .all(|f| graph::is_perfect_matching(g, f))
            && starter::check_factorization(g, &c.factorization.factors).is_empty();
        let trees_ok =
            c.trees.len() == n && rainbow::certify(&c.trees.trees, &c.factorization).passed();
        o.check(
            starter_ok && factors_ok && trees_ok,
            format!(
                "{family}: starter {}, {} factors, {} certified trees",
                if starter_ok { "valid" } else { "INVALID" },
                c.factorization.len(),
                c.trees.len()
            ),
        );
    }
    let secs = start.elapsed().as_secs_f64();
    o.check(
        secs < GRID_SECONDS,
        format!("grid wall clock {secs:.2} s (budget {GRID_SECONDS} s)"),
    );
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();

    let q8 = Construction::new(GroupFamily::Dicyclic(2)).unwrap();
    let drawn = drawing(GroupFamily::Dicyclic(2), 0).edge_set();
    o.check(
        q8.trees.t1 == drawn,
        format!("Q8 T1 = drawn 7-edge set: {}", q8.trees.t1),
    );

    let t = transcribe(GroupFamily::Abelian(4)).unwrap();
    let r2 = edges(&[("1", "b*a"), ("b*a", "a^2")]);
    o.check(t.part("R2") == Some(&r2), format!("Z2xZ4 R_2 = {r2}"));

    // The printed R_4 cannot certify with any starter of Z2xZ4 (exhaustive
    // check recorded alongside the project notes); the emitted R_4 is the
    // unique completion that does. This clause is compared literally.
    let printed_r4 = edges(&[("a^3", "b*a^3"), ("b", "b*a^3")]);
    let emitted_r4 = t.part("R4").cloned().unwrap_or_default();
    o.check(
        emitted_r4 == printed_r4,
        format!("Z2xZ4 R_4 = {printed_r4} (emitted {emitted_r4})"),
    );

    // The drawing of R + e1 for Z2xZ4 shows its red bridge at [b,b*a^2];
    // the text value e1 = [a,a^3] is the one used.
    let e1 = Edge::new("a".parse().unwrap(), "a^3".parse().unwrap()).unwrap();
    let red = drawing(GroupFamily::Abelian(4), 0).styled("red");
    o.check(
        t.lemma.e1 == e1,
        format!("Z2xZ4 e1 = {e1} per the text (drawing's red edge: {red})"),
    );
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let mut agree = 0;
    for &family in GRID {
        let c = Construction::new(family).unwrap();
        let good = (
            oracle::recount_partition(&c.trees.trees, &c.group).passed(),
            rainbow::certify(&c.trees.trees, &c.factorization).passed(),
        );
        let mut broken = c.trees.trees.clone();
        broken[1] = broken[0].clone();
        let bad = (
            oracle::recount_partition(&broken, &c.group).passed(),
            rainbow::certify(&broken, &c.factorization)
                .violations
                .iter()
                .all(|v| v.id() != "certify.partition"),
        );
        let ok = good == (true, true) && bad == (false, false);
        agree += usize::from(ok);
        if !ok {
            o.check(false, format!("{family}: recount/certify disagree"));
        }
    }
    o.check(
        agree == GRID.len(),
        format!("recount agrees with certify on {agree}/{} instances (intact and with a duplicated tree)", GRID.len()),
    );
    for family in [GroupFamily::Dicyclic(2), GroupFamily::Abelian(4)] {
        let c = Construction::new(family).unwrap();
        let out = oracle::exhaustive_starter_search(&c.group, SearchBudget::default()).unwrap();
        let all_valid = out.starters.iter().all(|s| validate_starter(s).passed());
        o.check(
            out.complete && !out.starters.is_empty() && all_valid && out.contains(&c.starter),
            format!(
                "{family}: {} starters ({} nodes, complete = {}), all valid, explicit starter found = {}",
                out.starters.len(),
                out.nodes,
                out.complete,
                out.contains(&c.starter)
            ),
        );
    }
    o
}

fn axiom_families() -> Vec<GroupFamily> {
    let mut v: Vec<GroupFamily> = (2..=16).map(GroupFamily::Dicyclic).collect();
    v.extend((4..=32).step_by(4).map(GroupFamily::Abelian));
    for n in [8, 16, 32] {
        v.push(GroupFamily::Semidihedral(n));
        v.push(GroupFamily::Modular(n));
    }
    v
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let mut triples = 0;
    let mut groups = 0;
    for family in axiom_families() {
        let g = Group::new(family).unwrap();
        assert!(g.order() <= 64);
        let r = oracle::exhaustive_group_axiom_check(&g);
        triples += r.triples;
        groups += 1;
        let expected = g.order().pow(3);
        if !r.passed() || r.triples != expected {
            o.check(false, format!("{family}: {:?}", r.violations.first()));
        }
    }
    o.check(
        o.passed,
        format!("{groups} groups of order <= 64, {triples} associativity triples, identity, inverse and defining relations"),
    );
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();

    // delta is invariant under right translation
    let mut bad = 0;
    let mut count = 0;
    for &family in GRID {
        let g = Group::new(family).unwrap();
        for e in graph::complete_graph(&g) {
            let d = graph::delta(&g, e);
            for x in g.elements() {
                count += 1;
                bad += usize::from(graph::delta(&g, graph::act(&g, e, x)) != d);
            }
        }
    }
    o.check(
        bad == 0,
        format!("delta(e*g) = delta(e) on {count} (edge, g) pairs"),
    );

    // equal difference sets lie in one full orbit, |G| <= 32
    let mut pairs = 0;
    let mut bad = 0;
    for &family in GRID
        .iter()
        .filter(|f| Group::new(**f).unwrap().order() <= 32)
    {
        let g = Group::new(family).unwrap();
        let all: Vec<Edge> = graph::complete_graph(&g).collect();
        for &e in &all {
            let orbit = graph::full_orbit(&g, e);
            let d = graph::delta(&g, e);
            for &f in &all {
                if graph::delta(&g, f) == d {
                    pairs += 1;
                    bad += usize::from(!orbit.contains(&f));
                }
            }
        }
    }
    o.check(
        bad == 0,
        format!("equal delta implies same orbit on {pairs} edge pairs"),
    );

    // regularity and rainbow colour multisets
    let mut translates = 0;
    let mut irregular = 0;
    let mut trees = 0;
    let mut off = 0;
    for &family in GRID {
        let c = Construction::new(family).unwrap();
        let g = &c.group;
        let known: BTreeSet<_> = c.factorization.factors.iter().collect();
        for f in &c.factorization.factors {
            for x in g.elements() {
                translates += 1;
                irregular += usize::from(!known.contains(&f.translate(g, x)));
            }
        }
        let colours: Vec<usize> = (0..c.factorization.len()).collect();
        for t in &c.trees.trees {
            trees += 1;
            let mut seen: Vec<usize> = t
                .iter()
                .map(|&e| c.factorization.factor_of(e).unwrap())
                .collect();
            seen.sort_unstable();
            off += usize::from(seen != colours);
        }
    }
    o.check(
        irregular == 0,
        format!("every F_i*g is a factor ({translates} translates)"),
    );
    o.check(
        off == 0,
        format!("every tree has colours {{0..2n-2}} once each ({trees} trees)"),
    );
    o
}

fn run(args: &[&str]) -> i32 {
    run_with(
        std::iter::once("regfact").chain(args.iter().copied()),
        &mut std::io::sink(),
        &mut std::io::sink(),
    )
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    for (family, param) in [("abelian", "6"), ("dicyclic", "1")] {
        let code = run(&["generate", "--family", family, "--param", param]);
        o.check(
            code == EXIT_USAGE,
            format!("{family} {param} rejected with exit {code}"),
        );
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    let path_str = path.to_str().unwrap();
    let code = run(&[
        "generate", "--family", "dicyclic", "--param", "2", "--out", path_str,
    ]);
    let clean = std::fs::read_to_string(&path).unwrap();
    let verify_clean = run(&["verify", path_str]);
    o.check(
        code == EXIT_OK && verify_clean == EXIT_OK,
        "exported Q8 artifact verifies with exit 0",
    );

    let doc = Document::from_json(&clean).unwrap();
    let g = Group::new(doc.group).unwrap();
    let positions = edge_positions(&doc);
    let mut caught = 0;
    for &(section, i, j) in &positions {
        let mut bad = doc.clone();
        let e = edge_at(&mut bad, section, i, j);
        // move the second endpoint to the next vertex that keeps the edge proper
        let next = |x| g.element_at((g.index(x) + 1) % g.order());
        let mut y = next(e[1]);
        if y == e[0] {
            y = next(y);
        }
        e[1] = y;
        std::fs::write(&path, bad.to_json().unwrap()).unwrap();
        caught += usize::from(run(&["verify", "--quiet", path_str]) == EXIT_VERIFY);
    }
    o.check(
        caught == positions.len(),
        format!(
            "{caught}/{} single-edge corruptions make verify exit 1",
            positions.len()
        ),
    );

    for (label, value) in [("loop", None), ("foreign element", Some("a^99"))] {
        let mut bad = doc.clone();
        let e = edge_at(&mut bad, "trees", 0, 0);
        e[1] = match value {
            None => e[0],
            Some(v) => v.parse().unwrap(),
        };
        std::fs::write(&path, bad.to_json().unwrap()).unwrap();
        let code = run(&["verify", "--quiet", path_str]);
        o.check(
            code == EXIT_VERIFY,
            format!("{label} in a tree: exit {code}"),
        );
    }
    o
}

fn edge_positions(doc: &Document) -> Vec<(&'static str, usize, usize)> {
    let mut out = Vec::new();
    for (i, b) in doc.starter.as_ref().unwrap().blocks.iter().enumerate() {
        out.extend((0..b.edges.len()).map(|j| ("starter", i, j)));
    }
    for (i, f) in doc
        .factorization
        .as_ref()
        .unwrap()
        .factors
        .iter()
        .enumerate()
    {
        out.extend((0..f.len()).map(|j| ("factors", i, j)));
    }
    let t = doc.trees.as_ref().unwrap();
    for (i, tree) in t.trees.iter().enumerate() {
        out.extend((0..tree.len()).map(|j| ("trees", i, j)));
    }
    out.extend((0..t.t1.len()).map(|j| ("t1", 0, j)));
    out.extend((0..t.t2.len()).map(|j| ("t2", 0, j)));
    out
}

fn edge_at<'a>(
    doc: &'a mut Document,
    section: &str,
    i: usize,
    j: usize,
) -> &'a mut regfact::schema::RawEdge {
    match section {
        "starter" => &mut doc.starter.as_mut().unwrap().blocks[i].edges[j],
        "factors" => &mut doc.factorization.as_mut().unwrap().factors[i][j],
        "trees" => &mut doc.trees.as_mut().unwrap().trees[i][j],
        "t1" => &mut doc.trees.as_mut().unwrap().t1[j],
        "t2" => &mut doc.trees.as_mut().unwrap().t2[j],
        _ => unreachable!(),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("family grid passes end-to-end", criterion_1),
        ("drawn-graph fixtures", criterion_2),
        ("oracle independence", criterion_3),
        ("group-axiom exhaustion", criterion_4),
        ("property suite", criterion_5),
        ("negative paths", criterion_6),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        println!(
            "criterion {} {}: {name} ({:.2} s)",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for l in &o.lines {
            println!("{l}");
        }
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
