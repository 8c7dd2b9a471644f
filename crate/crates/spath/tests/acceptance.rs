//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p spath --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use spath::cli::run_cli;
use spath::serialize_graph;
use spath_core::oracle::{enumerate_min, for_each_simple_path, min_costs_from, DEFAULT_BOUND};
use spath_core::{
    build_graph, reconstruct_path, run, run_heap, shortest_path_weight, Label, Mode,
    RandomGraphConfig, RunMode, StopReason, VertexId, WeightedDigraph,
};

const CORPUS_SIZE: usize = 540;
const PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.9];
const ORACLE_BUDGET: Duration = Duration::from_secs(60);

/// Seeded corpus: n cycles through 2..=10, then edge probability, then mode.
fn corpus() -> Vec<WeightedDigraph> {
    (0..CORPUS_SIZE)
        .map(|i| {
            let n = 2 + i % 9;
            let p = PROBABILITIES[(i / 9) % 3];
            let mode = if (i / 27) % 2 == 0 {
                Mode::Directed
            } else {
                Mode::Undirected
            };
            RandomGraphConfig::new(n, p, mode, i as u64)
                .generate()
                .unwrap()
        })
        .collect()
}

fn pairs(g: &WeightedDigraph) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    g.vertices()
        .flat_map(move |s| g.vertices().filter(move |&t| t != s).map(move |t| (s, t)))
}

/// Prints the verdict line and fails the test on any violation.
fn report(criterion: &str, violations: &[String], detail: &str) {
    let verdict = if violations.is_empty() {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "[{verdict}] {criterion}: {detail}, {} violations",
        violations.len()
    );
    for v in violations.iter().take(10) {
        println!("    {v}");
    }
    assert!(violations.is_empty(), "{criterion} failed");
}

#[test]
fn corpus_shape() {
    let graphs = corpus();
    assert!(graphs.len() >= 500);
    for mode in [Mode::Directed, Mode::Undirected] {
        for n in 2..=10 {
            assert!(graphs
                .iter()
                .any(|g| g.mode() == mode && g.vertex_count() == n));
        }
    }
    for g in &graphs {
        for (_, _, w) in g.edges() {
            assert_eq!((w.get() * 4.0).fract(), 0.0);
        }
    }
}

#[test]
fn oracle_equivalence() {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut checked = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        for (s, t) in pairs(g) {
            let engine = shortest_path_weight(g, s, t).unwrap();
            let oracle = enumerate_min(g, s, t).unwrap().min_weight;
            checked += 1;
            if engine != oracle {
                violations.push(format!(
                    "graph {i} {s}->{t}: engine {engine:?}, oracle {oracle:?}"
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= ORACLE_BUDGET {
        violations.push(format!("took {elapsed:?}, budget {ORACLE_BUDGET:?}"));
    }
    report(
        "oracle equivalence",
        &violations,
        &format!("{checked} ordered pairs over {CORPUS_SIZE} graphs in {elapsed:.2?}"),
    );
}

#[test]
fn theorem_lower_bound_and_witness() {
    let mut violations = Vec::new();
    let mut paths = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        for s in g.vertices() {
            let (r, _) = run(g, s, None, RunMode::Exhaustive, false).unwrap();
            // Part A: no enumerated path undercuts a settled label.
            for_each_simple_path(g, s, DEFAULT_BOUND, |p, w| {
                paths += 1;
                let u = *p.last().unwrap();
                if r.is_settled(u) && Label::Finite(w) < r.label(u) {
                    violations.push(format!(
                        "graph {i}: path to {u} of weight {w} below {}",
                        r.label(u)
                    ));
                }
            })
            .unwrap();
            // Part B: a concrete path realises each settled label exactly.
            for &u in r.settled.iter().skip(1) {
                match reconstruct_path(&r, u).unwrap() {
                    Some(p) if Label::Finite(g.path_weight(&p).unwrap()) == r.label(u) => {}
                    other => violations.push(format!(
                        "graph {i}: {s}->{u} label {} path {other:?}",
                        r.label(u)
                    )),
                }
            }
        }
    }
    report(
        "theorem 1A/1B",
        &violations,
        &format!("{paths} enumerated paths"),
    );
}

#[test]
fn corollaries() {
    let mut violations = Vec::new();
    let mut runs = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        for s in g.vertices() {
            let truth = min_costs_from(g, s, DEFAULT_BOUND).unwrap();
            let targets = g.vertices().filter(|&t| t != s).map(Some);
            let mut results = vec![run(g, s, None, RunMode::Exhaustive, false).unwrap().0];
            for t in targets {
                results.push(run(g, s, t, RunMode::ToTarget, false).unwrap().0);
            }
            for r in results {
                runs += 1;
                let mut seen = vec![false; g.vertex_count()];
                let distinct = r
                    .settled
                    .iter()
                    .all(|v| !std::mem::replace(&mut seen[v.index()], true));
                if !distinct || r.settled.len() > g.vertex_count() || r.settled[0] != s {
                    violations.push(format!("graph {i} (a): settled {:?}", r.settled));
                }
                if !r.settled.windows(2).all(|w| r.label(w[0]) <= r.label(w[1])) {
                    violations.push(format!("graph {i} (c): order {:?}", r.settled));
                }
                for &u in &r.settled {
                    if r.label(u).cost() != truth[u.index()] {
                        violations.push(format!(
                            "graph {i} (b): {s}->{u} {} vs {:?}",
                            r.label(u),
                            truth[u.index()]
                        ));
                    }
                }
            }
        }
    }
    report("corollaries a/b/c", &violations, &format!("{runs} runs"));
}

#[test]
fn unreachability_and_symmetry() {
    let mut violations = Vec::new();
    let mut unreachable = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        for (s, t) in pairs(g) {
            let oracle = enumerate_min(g, s, t).unwrap().min_weight;
            let (r, _) = run(g, s, Some(t), RunMode::ToTarget, false).unwrap();
            let no_path = shortest_path_weight(g, s, t).unwrap().is_none();
            if oracle.is_none() {
                unreachable += 1;
            }
            if (r.stop_reason == StopReason::Exhausted) != oracle.is_none()
                || no_path != oracle.is_none()
            {
                violations.push(format!(
                    "graph {i} {s}->{t}: {:?} vs oracle {oracle:?}",
                    r.stop_reason
                ));
            }
            if g.mode() == Mode::Undirected {
                let back = shortest_path_weight(g, t, s).unwrap();
                if back != shortest_path_weight(g, s, t).unwrap() {
                    violations.push(format!("graph {i}: {s}<->{t} asymmetric"));
                }
            }
        }
    }
    let g = build_graph([("a", "z", 2.0), ("z", "a", 7.0)], Mode::Directed).unwrap();
    let (a, z) = (g.vertex("a").unwrap(), g.vertex("z").unwrap());
    let there = shortest_path_weight(&g, a, z).unwrap();
    let back = shortest_path_weight(&g, z, a).unwrap();
    if (there, back) != (Some(2.0), Some(7.0)) {
        violations.push(format!("two-cycle fixture gave {there:?} / {back:?}"));
    }
    report(
        "unreachability and symmetry",
        &violations,
        &format!("{unreachable} unreachable pairs, two-cycle {there:?}/{back:?}"),
    );
}

#[test]
fn heap_engine_equivalence() {
    let mut violations = Vec::new();
    let mut runs = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        for s in g.vertices() {
            let mut cases = vec![(None, RunMode::Exhaustive), (None, RunMode::Full)];
            cases.extend(
                g.vertices()
                    .filter(|&t| t != s)
                    .map(|t| (Some(t), RunMode::ToTarget)),
            );
            for (t, mode) in cases {
                runs += 1;
                let (a, _) = run(g, s, t, mode, false).unwrap();
                let b = run_heap(g, s, t, mode).unwrap();
                if !a.same_outcome(&b) {
                    violations.push(format!("graph {i} from {s} {mode:?}"));
                }
            }
        }
    }
    report(
        "linear/heap equivalence",
        &violations,
        &format!("{runs} run pairs"),
    );
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn spath(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_spath"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn desk_graph_route_and_golden_trace() {
    let mut violations = Vec::new();
    let g1 = data("g1.txt");
    let g1 = g1.to_str().unwrap();

    let out = spath(&["route", "--graph", g1, "--source", "a", "--target", "z"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    if out.status.code() != Some(0) || stdout != "6.0  a b c z\n" {
        violations.push(format!("route: {:?} {stdout:?}", out.status.code()));
    }

    for (format, golden) in [
        ("text", "g1_route_trace.golden"),
        ("json", "g1_route_trace.json.golden"),
    ] {
        let out = spath(&[
            "route", "--graph", g1, "--source", "a", "--target", "z", "--trace", "--format", format,
        ]);
        let expected = std::fs::read(data(golden)).unwrap();
        if out.stdout != expected || out.status.code() != Some(0) {
            violations.push(format!("{format} trace differs from {golden}"));
        }
    }
    report(
        "desk graph G1",
        &violations,
        "route 6.0 via a b c z, golden traces",
    );
}

#[test]
fn cli_contract() {
    let mut violations = Vec::new();
    let g1 = data("g1.txt");
    let cases: [(&str, Vec<String>, i32); 6] = [
        (
            "success",
            vec![
                "route".into(),
                "--graph".into(),
                g1.display().to_string(),
                "--source".into(),
                "a".into(),
                "--target".into(),
                "z".into(),
            ],
            0,
        ),
        (
            "no path",
            vec![
                "route".into(),
                "--graph".into(),
                data("edgeless.txt").display().to_string(),
                "--source".into(),
                "a".into(),
                "--target".into(),
                "z".into(),
            ],
            1,
        ),
        (
            "bad weight",
            vec![
                "route".into(),
                "--graph".into(),
                data("negative_weight.txt").display().to_string(),
                "--source".into(),
                "a".into(),
                "--target".into(),
                "z".into(),
            ],
            2,
        ),
        (
            "unknown vertex",
            vec![
                "route".into(),
                "--graph".into(),
                g1.display().to_string(),
                "--source".into(),
                "a".into(),
                "--target".into(),
                "nope".into(),
            ],
            2,
        ),
        (
            "missing file",
            vec![
                "sssp".into(),
                "--graph".into(),
                data("absent.txt").display().to_string(),
                "--source".into(),
                "a".into(),
            ],
            2,
        ),
        (
            "usage",
            vec!["route".into(), "--graph".into(), g1.display().to_string()],
            2,
        ),
    ];
    for (name, args, code) in &cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = spath(&args);
        if out.status.code() != Some(*code) {
            violations.push(format!("{name}: exit {:?}, want {code}", out.status.code()));
        }
    }
    let out = spath(&[
        "route",
        "--graph",
        data("edgeless.txt").to_str().unwrap(),
        "--source",
        "a",
        "--target",
        "z",
    ]);
    if out.stdout != b"no path\n" {
        violations.push("no-path output".into());
    }
    let out = spath(&[
        "route",
        "--graph",
        data("negative_weight.txt").to_str().unwrap(),
        "--source",
        "a",
        "--target",
        "z",
    ]);
    if !String::from_utf8_lossy(&out.stderr).contains("line 3") || !out.stdout.is_empty() {
        violations.push("bad-weight diagnostic does not cite line 3 on stderr".into());
    }

    // `check` over the whole corpus: every pair in-process, one pair per
    // graph through the real binary.
    let dir = tempfile::tempdir().unwrap();
    let mut checks = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        let path = dir.path().join(format!("g{i}.txt"));
        std::fs::write(&path, serialize_graph(g)).unwrap();
        let file = path.to_str().unwrap();
        for (s, t) in pairs(g) {
            let (s, t) = (g.name(s).unwrap(), g.name(t).unwrap());
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = run_cli(
                [
                    "spath", "check", "--graph", file, "--source", s, "--target", t,
                ],
                &mut out,
                &mut err,
            );
            checks += 1;
            if code != 0 {
                violations.push(format!(
                    "check graph {i} {s}->{t}: exit {code}: {}",
                    String::from_utf8_lossy(&err)
                ));
            }
        }
        let last = format!("v{}", g.vertex_count() - 1);
        let out = spath(&[
            "check", "--graph", file, "--source", "v0", "--target", &last,
        ]);
        checks += 1;
        if out.status.code() != Some(0) {
            violations.push(format!(
                "spath check graph {i}: exit {:?}",
                out.status.code()
            ));
        }
    }
    report(
        "CLI contract",
        &violations,
        &format!("{} exit-code cases, {checks} checks", cases.len()),
    );
}
