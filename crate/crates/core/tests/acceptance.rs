//! One line per acceptance criterion. Every criterion is an exact
//! algebraic statement, so the tolerance is zero throughout; the only
//! numeric thresholds are the runtime budgets.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fusion_core::config::Config;
use fusion_core::corpus::bundled;
use fusion_core::verify::mutation::self_test;
use fusion_core::verify::{run_entry, to_json, CheckSet, Report, Status};

const ENTRY_BUDGET: Duration = Duration::from_secs(60);
const CORPUS_BUDGET: Duration = Duration::from_secs(600);

const LEMMAS: &[&str] = &[
    "FfEf",
    "Wellknown",
    "LocalNormalSubsystems",
    "EasyCentralizer",
    "FrattiniCons",
    "XInvariant",
    "WeaklyClosedCentralized",
    "GN",
    "CFCG0",
    "PropHelp",
    "ZCentralize",
    "L:F1F2Centralize",
];

struct Run {
    reports: Vec<Report>,
    /// `(entry, wall time)`
    times: Vec<(String, Duration)>,
    total: Duration,
}

fn full_run(cfg: &Config) -> Run {
    let checks = CheckSet::all();
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut times = Vec::new();
    for entry in bundled() {
        let t = Instant::now();
        reports.extend(run_entry(&entry, &checks, cfg).expect("corpus entry within caps"));
        times.push((entry.key.clone(), t.elapsed()));
    }
    Run {
        reports,
        times,
        total: start.elapsed(),
    }
}

/// `(results seen, skipped by a cap, failures)` for the given ids over
/// the whole run.
fn tally(run: &Run, ids: &[&str]) -> (usize, usize, Vec<String>) {
    let mut seen = 0;
    let mut skipped = 0;
    let mut bad = Vec::new();
    for r in &run.reports {
        for c in r.checks.iter().filter(|c| ids.contains(&c.id.as_str())) {
            seen += 1;
            if c.status == Status::Skipped {
                skipped += 1;
            } else if c.status != Status::Pass {
                bad.push(format!(
                    "{}@{} {} {}: {}",
                    r.entry,
                    r.prime,
                    c.id,
                    c.subject,
                    c.counterexample.as_deref().unwrap_or("")
                ));
            }
        }
    }
    (seen, skipped, bad)
}

fn subjects_with(run: &Run, entry: &str, id: &str) -> usize {
    run.reports
        .iter()
        .filter(|r| r.entry == entry)
        .flat_map(|r| &r.checks)
        .filter(|c| c.id == id && c.status == Status::Pass)
        .count()
}

struct Line {
    ok: bool,
}

impl Line {
    fn emit(n: usize, name: &str, ok: bool, detail: String) -> Self {
        println!("criterion {n} [{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        Line { ok }
    }
}

fn by_ids(n: usize, name: &str, run: &Run, ids: &[&str], extra: Option<(bool, String)>) -> Line {
    let (seen, skipped, bad) = tally(run, ids);
    let (extra_ok, extra_msg) = extra.unwrap_or((true, String::new()));
    let ok = seen > 0 && bad.is_empty() && extra_ok;
    let mut detail = format!(
        "{seen} results, {} failing, {skipped} skipped at the size cap, tolerance 0 (exact){extra_msg}",
        bad.len()
    );
    if let Some(b) = bad.first() {
        detail.push_str(&format!("; first: {b}"));
    }
    Line::emit(n, name, ok, detail)
}

fn main() -> ExitCode {
    let cfg = Config::default();
    let run = full_run(&cfg);
    let mut lines = Vec::new();

    let slowest = run.times.iter().max_by_key(|(_, t)| *t).cloned().unwrap();
    lines.push(by_ids(
        1,
        "realized systems are saturated",
        &run,
        &["Saturation"],
        Some((
            slowest.1 < ENTRY_BUDGET,
            format!(", slowest entry {} took {:.1}s (budget 60s)", slowest.0, slowest.1.as_secs_f64()),
        )),
    ));
    lines.push(by_ids(
        2,
        "C_S(E): membership, maximality, strong closure, R*, closed subgroups of R*",
        &run,
        &["MainCSE.a", "MainCSE.b", "MainCSE.c", "FirstCharacterization"],
        Some((
            run.total < CORPUS_BUDGET,
            format!(", full corpus {:.1}s (budget 600s)", run.total.as_secs_f64()),
        )),
    ));
    lines.push(by_ids(3, "focal and hyperfocal subgroups of C_F(T) lie in C_S(E)", &run, &["FocProp"], None));
    lines.push(by_ids(
        4,
        "C_F(E) is normal; D ⊆ C_F(E) iff D and E centralize each other",
        &run,
        &["MainCFE", "CFENormal", "ShowWeaklyNormal"],
        None,
    ));
    lines.push(by_ids(5, "Aut-product formula on C_F(E)", &run, &["Coincide"], None));

    let product_ids = ["P:F1F2Centralize", "MainCentralProduct", "NormalCentralizeEachOther", "RadicalIntersect"];
    let required = ["q8oc4", "a4xa4", "d8xc2", "s4xc2"];
    let missing: Vec<&str> = required
        .iter()
        .copied()
        .filter(|e| subjects_with(&run, e, "MainCentralProduct") == 0)
        .collect();
    lines.push(by_ids(
        6,
        "central products of normal subsystems",
        &run,
        &product_ids,
        Some((
            missing.is_empty(),
            format!(", product pairs present for {:?}, missing {:?}", required, missing),
        )),
    ));

    let mutations = self_test(LEMMAS, &cfg).expect("mutation bases build");
    let uncaught: Vec<&str> = mutations
        .iter()
        .filter(|m| m.caught_by.is_none())
        .map(|m| m.id.as_str())
        .collect();
    lines.push(by_ids(
        7,
        "lemma suite passes and every lemma check is caught by a mutant",
        &run,
        LEMMAS,
        Some((
            uncaught.is_empty(),
            format!(", {} of {} lemma checks caught by mutants", LEMMAS.len() - uncaught.len(), LEMMAS.len()),
        )),
    ));
    lines.push(by_ids(
        8,
        "focal subgroup = S ∩ [G,G]; brute-force C_S(E) matches",
        &run,
        &["FocalOracle", "CSEBruteForce"],
        None,
    ));

    let first = to_json(&run.reports);
    let second = to_json(&full_run(&cfg).reports);
    lines.push(Line::emit(
        9,
        "two full corpus runs give byte-identical reports",
        first == second,
        format!("{} bytes, identical: {}", first.len(), first == second),
    ));

    if lines.iter().all(|l| l.ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
