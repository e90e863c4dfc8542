mod parse;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use fusion_core::centralizers::{c_f_of, CentralizerData};
use fusion_core::config::Config;
use fusion_core::corpus::{bundled, bundled_entry, load_dir, CorpusEntry, GroupFile};
use fusion_core::fusion::persist::StoredSystem;
use fusion_core::fusion::{FusionSystem, Morphism, NONE};
use fusion_core::group::Subgroup;
use fusion_core::products::{central_product_subsystem, verify_product_theorems};
use fusion_core::subsystems::normal_subsystem_from_group;
use fusion_core::verify::{self, mutation, CheckSet, Report, Status};

#[derive(Parser)]
#[command(name = "fsys", version, about = "Saturated fusion systems of finite groups and centralizers of normal subsystems")]
struct Cli {
    /// TOML configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// How a fusion system is named on the command line: a persisted system
/// file, a group file, or the key of a bundled group.
#[derive(clap::Args)]
struct SystemArg {
    system: String,
    /// prime for group files listing several primes
    #[arg(short, long)]
    prime: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// List the bundled corpus
    Corpus,
    /// Compute the fusion system of a group at a prime and persist it
    Build {
        #[command(flatten)]
        sys: SystemArg,
        /// output file; defaults to <name>-p<prime>.fsk
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Classify every subgroup of the Sylow subgroup
    Classify {
        #[command(flatten)]
        sys: SystemArg,
    },
    /// Centralizer data for the normal subsystem of a normal subgroup
    Centralizer {
        #[command(flatten)]
        sys: SystemArg,
        /// normal subgroup of the group
        #[arg(long, conflicts_with = "normal_subgroup_of_order")]
        normal: Option<String>,
        /// shorthand for --normal order:K
        #[arg(long)]
        normal_subgroup_of_order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Central product checks for two normal subsystems
    Product {
        #[command(flatten)]
        sys: SystemArg,
        /// first normal subgroup
        #[arg(long)]
        f1: String,
        /// second normal subgroup
        #[arg(long)]
        f2: String,
        #[arg(long)]
        json: bool,
    },
    /// Factor conjugation by a group element through the Alperin family
    Alperin {
        #[command(flatten)]
        sys: SystemArg,
        /// element conjugating the subgroup
        #[arg(long)]
        morphism: String,
        /// subgroup of the Sylow subgroup to conjugate
        #[arg(long)]
        on: String,
    },
    /// Run the checks on one system or on the whole corpus
    Verify {
        /// `corpus`, or a system as for the other commands
        target: String,
        #[arg(short, long)]
        prime: Option<u64>,
        /// `all` or a comma-separated list of check ids
        #[arg(long, default_value = "all")]
        checks: String,
        /// write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// directory of group files replacing the bundled corpus
        #[arg(long)]
        dir: Option<PathBuf>,
        /// also run every selected check against corrupted systems
        #[arg(long)]
        self_test: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` when a check failed.
fn run(cli: Cli) -> Result<bool> {
    let config = match &cli.config {
        Some(path) => Config::load(path).with_context(|| format!("reading {}", path.display()))?,
        None => Config::default(),
    };
    match cli.command {
        Command::Corpus => {
            for e in bundled() {
                let primes: Vec<String> = e.file.primes.iter().map(u64::to_string).collect();
                println!("{:10} {:24} primes {}", e.key, e.file.name, primes.join(","));
            }
            Ok(true)
        }
        Command::Build { sys, out } => build(&sys, out, &config),
        Command::Classify { sys } => classify(&sys, &config),
        Command::Centralizer {
            sys,
            normal,
            normal_subgroup_of_order,
            json,
        } => {
            let spec = match (normal, normal_subgroup_of_order) {
                (Some(s), _) => s,
                (None, Some(k)) => format!("order:{k}"),
                (None, None) => bail!("give --normal or --normal-subgroup-of-order"),
            };
            centralizer(&sys, &spec, json, &config)
        }
        Command::Product { sys, f1, f2, json } => product(&sys, &f1, &f2, json, &config),
        Command::Alperin { sys, morphism, on } => alperin(&sys, &morphism, &on, &config),
        Command::Verify {
            target,
            prime,
            checks,
            json,
            dir,
            self_test,
        } => verify_cmd(&target, prime, &checks, json, dir, self_test, &config),
    }
}

fn pick_prime(file: &GroupFile, prime: Option<u64>) -> Result<u64> {
    match (prime, file.primes.as_slice()) {
        (Some(p), _) => Ok(p),
        (None, [p]) => Ok(*p),
        (None, []) => bail!("{} lists no prime; pass -p", file.name),
        (None, ps) => bail!("{} lists primes {ps:?}; pick one with -p", file.name),
    }
}

fn group_file(arg: &str) -> Result<(String, GroupFile)> {
    let path = Path::new(arg);
    if path.exists() {
        let key = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg).to_string();
        return Ok((key, GroupFile::read(path).with_context(|| format!("reading {arg}"))?));
    }
    let e = bundled_entry(arg).ok_or_else(|| anyhow!("{arg} is neither a file nor a bundled group (see `fsys corpus`)"))?;
    Ok((e.key, e.file))
}

/// The system and a key naming it.
fn load_system(sys: &SystemArg, config: &Config) -> Result<(String, FusionSystem)> {
    let path = Path::new(&sys.system);
    if path.exists() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", sys.system))?;
        if let Ok(stored) = StoredSystem::from_json(&text) {
            if sys.prime.is_some_and(|p| p != stored.prime) {
                bail!("{} is stored at the prime {}", sys.system, stored.prime);
            }
            let f = stored.to_system(config.lattice_cap)?;
            return Ok((stored.name.clone(), f));
        }
    }
    let (key, file) = group_file(&sys.system)?;
    let p = pick_prime(&file, sys.prime)?;
    let g = file.ingest(config.group_cap)?;
    let s = g.sylow_subgroup(p);
    let f = FusionSystem::of_group(&g, &s, p, config.lattice_cap)?;
    Ok((key, f))
}

fn build(sys: &SystemArg, out: Option<PathBuf>, config: &Config) -> Result<bool> {
    let (key, f) = load_system(sys, config)?;
    let out = out.unwrap_or_else(|| PathBuf::from(format!("{key}-p{}.fsk", f.prime())));
    let stored = StoredSystem::from_system(&f)?;
    std::fs::write(&out, stored.to_json()).with_context(|| format!("writing {}", out.display()))?;
    println!("{}", f.summary());
    println!("saturated: {}", f.is_saturated());
    println!("wrote {}", out.display());
    Ok(true)
}

fn classify(sys: &SystemArg, config: &Config) -> Result<bool> {
    let (_, f) = load_system(sys, config)?;
    let amb = f.amb();
    println!("{}", f.summary());
    println!("flags: N fully normalized, C fully centralized, A fully automized, c centric, r radical");
    for (p, fl) in f.classify().subgroups {
        let marks: String = [
            (fl.fully_normalized, 'N'),
            (fl.fully_centralized, 'C'),
            (fl.fully_automized, 'A'),
            (fl.centric, 'c'),
            (fl.radical, 'r'),
        ]
        .iter()
        .map(|&(b, c)| if b { c } else { '.' })
        .collect();
        println!("{marks}  |Aut_F|={:<4} {}", f.auts(p).len(), amb.describe(p));
    }
    let family: Vec<String> = f.alperin_family().iter().map(|&p| amb.describe(p)).collect();
    println!("Alperin family: {}", family.join("; "));
    Ok(true)
}

/// The realizing group and host of `f`.
fn realizer(f: &FusionSystem) -> Result<(&fusion_core::group::FiniteGroup, &Subgroup)> {
    let r = f.realizer().ok_or_else(|| anyhow!("the system has no realizing group attached"))?;
    Ok((&r.emb.group, &r.host))
}

fn normal_subsystem(f: &FusionSystem, spec_text: &str) -> Result<(Subgroup, FusionSystem)> {
    let (g, _) = realizer(f)?;
    let n = parse::parse_subgroup(g, f.prime(), spec_text)?;
    let e = normal_subsystem_from_group(f, &n).with_context(|| format!("subgroup {spec_text:?} of order {}", n.order()))?;
    Ok((n, e))
}

fn centralizer(sys: &SystemArg, spec_text: &str, as_json: bool, config: &Config) -> Result<bool> {
    let (_, f) = load_system(sys, config)?;
    let amb = f.amb();
    let (n, e) = normal_subsystem(&f, spec_text)?;
    let data = CentralizerData::compute(&f, &e)?;
    let cfe = c_f_of(&f, &e)?;
    if as_json {
        let v = json!({
            "normal_subgroup_order": n.order(),
            "subsystem_support": amb.describe(e.support()),
            "centralized": data.centralized.iter().map(|&x| amb.describe(x)).collect::<Vec<_>>(),
            "c_s_e": amb.describe(data.c_s_e),
            "c_s_e_order": amb.order(data.c_s_e),
            "r_star": amb.describe(data.r_star),
            "model_order": data.model_order,
            "normal_model_order": data.normal_model_order,
            "c_f_e": {
                "support_order": amb.order(cfe.support()),
                "morphisms": cfe.morphism_count(),
                "saturated": cfe.is_saturated(),
            },
        });
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(true);
    }
    println!("F: {}", f.summary());
    println!("E: {} (normal subgroup of order {})", e.summary(), n.order());
    println!("T = {}", amb.describe(e.support()));
    println!("subgroups centralizing E ({}):", data.centralized.len());
    for &x in &data.centralized {
        println!("  {}", amb.describe(x));
    }
    println!("C_S(E) = {}", amb.describe(data.c_s_e));
    println!("R* = {}", amb.describe(data.r_star));
    println!("model order {}, normal model order {}", data.model_order, data.normal_model_order);
    println!("C_F(E): {} saturated: {}", cfe.summary(), cfe.is_saturated());
    Ok(true)
}

fn product(sys: &SystemArg, s1: &str, s2: &str, as_json: bool, config: &Config) -> Result<bool> {
    let (_, f) = load_system(sys, config)?;
    let amb = f.amb();
    let (_, f1) = normal_subsystem(&f, s1)?;
    let (_, f2) = normal_subsystem(&f, s2)?;
    let report = verify_product_theorems(&f, &f1, &f2, config.lattice_cap)?;
    let failures = report.failures();
    if as_json {
        let v = json!({ "report": report, "failures": failures });
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(failures.is_empty());
    }
    println!("F1: {}", f1.summary());
    println!("F2: {}", f2.summary());
    println!("centralize each other: {}", report.centralize);
    println!("S1 ∩ S2 central in F1, F2: {:?}", report.intersection_central);
    let show = |o: Option<bool>| o.map_or("not computed (cap)".to_string(), |b| b.to_string());
    println!("central product exists: {}", show(report.has_central_product));
    if report.centralize {
        let d = central_product_subsystem(&f, &f1, &f2)?;
        println!("F1F2: {}", d.summary());
        println!("F1F2 saturated: {}, normal: {}", show(report.product_saturated), show(report.product_normal));
        println!("F1F2 is the central product: {}", show(report.product_is_central));
    }
    if let Some(r) = report.radical_intersect_failure {
        println!("intersection failure at {}", amb.describe(r));
    }
    if let Some(m) = &report.zcentralize_failure {
        println!("automorphism without extension: {}", m.describe(amb));
    }
    for id in &failures {
        println!("FAIL {id}");
    }
    Ok(failures.is_empty())
}

fn alperin(sys: &SystemArg, elem: &str, on: &str, config: &Config) -> Result<bool> {
    let (_, f) = load_system(sys, config)?;
    let amb = f.amb();
    let r = f.realizer().ok_or_else(|| anyhow!("the system has no realizing group attached"))?;
    let g = &r.emb.group;
    let x = parse::parse_element(g, elem)?;
    if !r.host.contains(x) {
        bail!("{elem} is not in the realizing group");
    }
    let p_group = parse::parse_subgroup(g, f.prime(), on)?;
    let to_pos = |y: usize| r.emb.pos[y];
    if p_group.members().iter().any(|&y| to_pos(y) == NONE || !amb.contains_elem(f.support(), to_pos(y))) {
        bail!("{on:?} is not contained in the Sylow subgroup");
    }
    let p = amb.generated(p_group.members().iter().map(|&y| to_pos(y)));
    let image_outside = p_group.members().iter().any(|&y| to_pos(g.conj(y, x)) == NONE);
    if image_outside {
        bail!("conjugating {on:?} by {elem} leaves the Sylow subgroup");
    }
    let phi = Morphism::from_images(amb, p, |y| to_pos(g.conj(r.emb.elems[y as usize], x)))?;
    println!("phi = {} on {}", phi.describe(amb), amb.describe(p));
    let fact = f.alperin_decompose(&phi)?;
    if fact.steps.is_empty() {
        println!("phi is the identity");
    }
    for (i, s) in fact.steps.iter().enumerate() {
        println!(
            "step {}: automorphism {} of {}\n        carries {} to {}",
            i + 1,
            s.automorphism.describe(amb),
            amb.describe(s.member),
            amb.describe(s.from),
            amb.describe(s.to)
        );
    }
    let ok = fact.recompose(amb) == phi;
    println!("composite equals phi: {ok}");
    Ok(ok)
}

fn corpus_entries(dir: Option<PathBuf>, config: &Config) -> Result<Vec<CorpusEntry>> {
    match dir.or_else(|| config.corpus_dir.clone()) {
        Some(d) => Ok(load_dir(&d).with_context(|| format!("reading {}", d.display()))?),
        None => Ok(bundled()),
    }
}

fn print_report(r: &Report) {
    let count = |s: Status| r.checks.iter().filter(|c| c.status == s).count();
    println!(
        "{} p={}: {} pass, {} fail, {} skipped",
        r.entry,
        r.prime,
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped)
    );
    for c in r.checks.iter().filter(|c| c.status != Status::Pass) {
        let word = if c.status == Status::Fail { "FAIL" } else { "SKIP" };
        println!("  {word} {} on {}: {}", c.id, c.subject, c.counterexample.as_deref().unwrap_or(""));
    }
}

fn verify_cmd(
    target: &str,
    prime: Option<u64>,
    checks: &str,
    json_path: Option<PathBuf>,
    dir: Option<PathBuf>,
    self_test: bool,
    config: &Config,
) -> Result<bool> {
    let set = CheckSet::parse(checks)?;
    let reports: Vec<Report> = if target == "corpus" {
        let entries = corpus_entries(dir, config)?;
        let pool = rayon::ThreadPoolBuilder::new().num_threads(config.parallelism).build()?;
        let per_entry: Vec<Result<Vec<Report>>> = pool.install(|| {
            entries
                .par_iter()
                .map(|e| verify::run_entry(e, &set, config).with_context(|| format!("entry {}", e.key)))
                .collect()
        });
        let mut all = Vec::new();
        for r in per_entry {
            all.extend(r?);
        }
        all
    } else {
        let (key, f) = load_system(&SystemArg { system: target.to_string(), prime }, config)?;
        vec![verify::run_system(&key, &f, &set, config)]
    };
    for r in &reports {
        print_report(r);
    }
    let mut ok = reports.iter().all(Report::passed);
    if let Some(path) = json_path.or_else(|| config.report_path.clone()) {
        std::fs::write(&path, verify::to_json(&reports)).with_context(|| format!("writing {}", path.display()))?;
        println!("report written to {}", path.display());
    }
    if self_test {
        let ids: Vec<&str> = verify::CHECK_IDS.iter().copied().filter(|id| set.contains(id)).collect();
        for m in mutation::self_test(&ids, config)? {
            match &m.caught_by {
                Some(by) => println!("self-test {}: caught by {by}", m.id),
                None => println!("self-test {}: no mutant caught", m.id),
            }
        }
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    println!("{} systems, {total} results, {failed} failures", reports.len());
    ok &= failed == 0;
    Ok(ok)
}
