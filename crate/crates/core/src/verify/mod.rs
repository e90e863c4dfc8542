//! Runs every named check over corpus systems and collects the results in
//! a deterministic report.

mod checks;
pub mod manifest;
pub mod mutation;

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::corpus::CorpusEntry;
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::subsystems::normal_subsystem_from_group;

pub use checks::{Outcome, PairCtx, SystemCtx};

/// Every check id, in the order results are reported.
pub const CHECK_IDS: &[&str] = &[
    "Saturation",
    "FocalOracle",
    "Model1.a",
    "Model1.b",
    "Model1.c",
    "Finvariant.equiv",
    "FfEf",
    "Wellknown",
    "LocalNormalSubsystems",
    "PropHelp",
    "EasyCentralizer",
    "FrattiniCons",
    "XInvariant",
    "WeaklyClosedCentralized",
    "GN",
    "CFCG0",
    "FirstCharacterization",
    "MainCSE.a",
    "MainCSE.b",
    "MainCSE.c",
    "CSEBruteForce",
    "FocProp",
    "ShowWeaklyNormal",
    "CFENormal",
    "MainCFE",
    "Coincide",
    "L:F1F2Centralize",
    "P:F1F2Centralize",
    "NormalCentralizeEachOther",
    "MainCentralProduct",
    "RadicalIntersect",
    "ZCentralize",
];

/// Checks evaluated once per system.
pub const SYSTEM_CHECKS: &[&str] = &["Saturation", "FocalOracle", "Model1.a", "Model1.b", "Finvariant.equiv"];

/// Checks evaluated once per pair of normal subsystems with commuting supports.
pub const PRODUCT_CHECKS: &[&str] = crate::products::PRODUCT_IDS;

/// Checks evaluated once per normal pair `(F, E)`.
pub fn pair_checks() -> impl Iterator<Item = &'static str> {
    CHECK_IDS
        .iter()
        .copied()
        .filter(|id| *id == "Finvariant.equiv" || !(SYSTEM_CHECKS.contains(id) || PRODUCT_CHECKS.contains(id)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// a configured cap was exceeded; not counted as a failure
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub subject: String,
    pub status: Status,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entry: String,
    pub prime: u64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// A set of check ids, or all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSet(BTreeSet<&'static str>);

impl CheckSet {
    pub fn all() -> Self {
        CheckSet(CHECK_IDS.iter().copied().collect())
    }

    /// `all`, or a comma-separated list of ids.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim() == "all" {
            return Ok(Self::all());
        }
        let mut set = BTreeSet::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let id = CHECK_IDS
                .iter()
                .find(|id| **id == part)
                .ok_or_else(|| Error::Parse(format!("unknown check id {part}")))?;
            set.insert(*id);
        }
        if set.is_empty() {
            return Err(Error::Parse("empty check list".into()));
        }
        Ok(CheckSet(set))
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    fn any_of(&self, ids: &[&str]) -> bool {
        ids.iter().any(|id| self.contains(id))
    }
}

/// The distinct subsystems `F_{S∩N}(N)` for normal subgroups `N` of the
/// realizing group, labelled for reports.
pub fn normal_pairs(f: &FusionSystem) -> Result<Vec<(String, FusionSystem)>> {
    let r = f.realizer().ok_or(Error::NotRealized)?;
    let g = &r.emb.group;
    let (hg, emb) = g.subgroup_group(&r.host);
    let mut out: Vec<(String, FusionSystem)> = Vec::new();
    for n in hg.normal_subgroups() {
        let members: Vec<usize> = n.members().iter().map(|&i| emb[i]).collect();
        let n_in_g = g.generate(members);
        let e = normal_subsystem_from_group(f, &n_in_g)?;
        if out.iter().any(|(_, o)| o.same_morphisms(&e)) {
            continue;
        }
        let label = format!("E{}[|N|={},|T|={}]", out.len(), n.order(), f.amb().order(e.support()));
        out.push((label.clone(), e.with_name(label)));
    }
    Ok(out)
}

fn record(
    out: &mut Vec<CheckResult>,
    checks: &CheckSet,
    config: &Config,
    id: &'static str,
    subject: &str,
    run: impl FnOnce() -> Outcome,
) {
    if !checks.contains(id) {
        return;
    }
    let start = Instant::now();
    let outcome = run();
    let millis = if config.timings { start.elapsed().as_millis() as u64 } else { 0 };
    let (status, counterexample) = match outcome {
        Outcome::NotApplicable => return,
        Outcome::Pass => (Status::Pass, None),
        Outcome::Violation(c) => (Status::Fail, Some(c)),
        Outcome::Failed(Error::CapExceeded { what, limit, actual }) => {
            (Status::Skipped, Some(format!("{what} of size {actual} exceeds cap {limit}")))
        }
        Outcome::Failed(e) => (Status::Fail, Some(format!("error: {e}"))),
    };
    out.push(CheckResult {
        id: id.to_string(),
        subject: subject.to_string(),
        status,
        millis,
        counterexample,
    });
}

/// Runs the selected checks on one realized system.
pub fn run_system(entry: &str, f: &FusionSystem, checks: &CheckSet, config: &Config) -> Report {
    let mut results = Vec::new();
    let sys = SystemCtx::new(f, config.lattice_cap);
    for &id in SYSTEM_CHECKS {
        record(&mut results, checks, config, id, "F", || sys.run(id));
    }
    let needs_pairs = pair_checks().any(|id| checks.contains(id)) || checks.any_of(PRODUCT_CHECKS);
    if needs_pairs {
        match normal_pairs(f) {
            Err(e) => {
                let id = pair_checks().find(|id| checks.contains(id)).unwrap_or(PRODUCT_CHECKS[0]);
                record(&mut results, checks, config, id, "normal pairs", || Outcome::Failed(e));
            }
            Ok(pairs) => {
                let normals: Vec<FusionSystem> = pairs.iter().map(|(_, e)| e.clone()).collect();
                let mut centralizers = Vec::new();
                for (label, e) in &pairs {
                    let ctx = PairCtx::new(&sys, e, &normals);
                    for id in pair_checks() {
                        record(&mut results, checks, config, id, label, || ctx.run(id));
                    }
                    if checks.any_of(PRODUCT_CHECKS) {
                        if let Ok(cfe) = ctx.cfe() {
                            centralizers.push((format!("C_F({label})"), cfe));
                        }
                    }
                }
                if checks.any_of(PRODUCT_CHECKS) {
                    for (subject, f1, f2) in product_pairs(f, &pairs, &centralizers) {
                        let outcomes = checks::product_outcomes(&sys, f1, f2);
                        for (id, o) in outcomes {
                            record(&mut results, checks, config, id, &subject, || o);
                        }
                    }
                }
            }
        }
    }
    results.sort_by_key(|r| CHECK_IDS.iter().position(|id| *id == r.id).unwrap_or(usize::MAX));
    Report {
        entry: entry.to_string(),
        prime: f.prime(),
        checks: results,
    }
}

/// Pairs of distinct normal subsystems whose supports commute, plus each
/// `E` paired with `C_F(E)`.
fn product_pairs<'a>(
    f: &FusionSystem,
    pairs: &'a [(String, FusionSystem)],
    centralizers: &'a [(String, FusionSystem)],
) -> Vec<(String, &'a FusionSystem, &'a FusionSystem)> {
    let amb = f.amb();
    let commute = |a: &FusionSystem, b: &FusionSystem| amb.le(a.support(), amb.centralizer(b.support()));
    let mut out = Vec::new();
    for (i, (l1, e1)) in pairs.iter().enumerate() {
        for (l2, e2) in &pairs[i + 1..] {
            if commute(e1, e2) {
                out.push((format!("{l1} * {l2}"), e1, e2));
            }
        }
    }
    for (l2, c) in centralizers {
        let l1 = l2.trim_start_matches("C_F(").trim_end_matches(')');
        if let Some((_, e)) = pairs.iter().find(|(l, _)| l == l1) {
            if !c.same_morphisms(e) && !pairs.iter().any(|(_, o)| o.same_morphisms(c)) {
                out.push((format!("{l1} * {l2}"), e, c));
            }
        }
    }
    out
}

/// Runs the selected checks on every designated prime of a corpus entry.
pub fn run_entry(entry: &CorpusEntry, checks: &CheckSet, config: &Config) -> Result<Vec<Report>> {
    Ok(entry
        .systems(config)?
        .iter()
        .map(|f| run_system(&entry.key, f, checks, config))
        .collect())
}

/// Serializes reports as pretty JSON; identical inputs give identical bytes.
pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn s4_passes_everything() {
        let f = s4_at_2();
        let r = run_system("s4", &f, &CheckSet::all(), &Config::default());
        let bad: Vec<_> = r.checks.iter().filter(|c| c.status != Status::Pass).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        for id in CHECK_IDS {
            assert!(r.checks.iter().any(|c| c.id == *id), "{id} missing");
        }
    }

    #[test]
    fn check_set_parsing() {
        assert_eq!(CheckSet::parse("all").unwrap(), CheckSet::all());
        let s = CheckSet::parse("FfEf, MainCSE.a").unwrap();
        assert!(s.contains("FfEf") && !s.contains("GN"));
        assert!(CheckSet::parse("Nope").is_err());
    }

    #[test]
    fn each_id_once_per_subject() {
        let f = s4_at_2();
        let r = run_system("s4", &f, &CheckSet::all(), &Config::default());
        let mut seen = BTreeSet::new();
        for c in &r.checks {
            assert!(seen.insert((c.id.clone(), c.subject.clone())), "{} twice on {}", c.id, c.subject);
        }
    }
}
