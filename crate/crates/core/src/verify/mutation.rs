//! Self-tests of the harness: deliberately corrupted systems must make
//! each check report a violation, otherwise the check could be passing
//! vacuously.

use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::Serialize;

use super::checks::{product_outcomes, Outcome, PairCtx, SystemCtx};
use super::{normal_pairs, PRODUCT_CHECKS, SYSTEM_CHECKS};
use crate::config::Config;
use crate::corpus::bundled_entry;
use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, Morphism, SubId};

/// The corpus systems mutants are derived from.
pub const BASES: &[(&str, u64)] = &[("s4", 2), ("a4", 2), ("s4xc2", 2), ("q8oc4", 2), ("d8xc2", 2), ("a4", 3)];

#[derive(Clone, Debug, Serialize)]
pub struct MutationResult {
    pub id: String,
    /// description of the first mutant that made the check fail
    pub caught_by: Option<String>,
    pub counterexample: Option<String>,
}

/// A corrupted input: the ambient system, a subsystem, and for product
/// checks a second subsystem.
struct Mutant {
    label: String,
    f: FusionSystem,
    e: FusionSystem,
    e2: Option<FusionSystem>,
}

/// `m` with the automorphisms of `P` cut down to those induced by the support.
fn cut_auts(m: &FusionSystem, p: SubId) -> Option<FusionSystem> {
    let amb = m.amb();
    let n = amb.normalizer_in(m.support(), p);
    let inner: Vec<Morphism> = amb.members(n).iter().map(|&g| Morphism::conjugation(amb, p, g)).collect();
    if m.auts(p).len() == {
        let mut v = inner.clone();
        v.sort();
        v.dedup();
        v.len()
    } {
        return None;
    }
    Some(m.filtered(
        |x| x.dom() != p || x.img() != p || inner.contains(x),
        format!("{} with Aut({}) cut to inner", m.name(), amb.describe(p)),
    ))
}

fn first_non_auto(m: &FusionSystem) -> Option<Morphism> {
    m.all_morphisms().find(|x| x.dom() != x.img()).cloned()
}

fn mutants_of(key: &str, prime: u64, config: &Config) -> Result<Vec<Mutant>> {
    let entry = bundled_entry(key).ok_or(Error::NotFound)?;
    let f = entry
        .systems(config)?
        .into_iter()
        .find(|f| f.prime() == prime)
        .ok_or(Error::NotFound)?;
    let amb = f.amb();
    let pairs = normal_pairs(&f)?;
    let mut out = Vec::new();
    let base = format!("{key}@{prime}");
    let mut push = |label: String, f: &FusionSystem, e: &FusionSystem, e2: Option<&FusionSystem>| {
        out.push(Mutant {
            label,
            f: f.clone(),
            e: e.clone(),
            e2: e2.cloned(),
        })
    };
    for (l, e) in &pairs {
        for p in e.subgroups() {
            if let Some(cut) = cut_auts(e, p) {
                push(format!("{base}: {l} with Aut({}) cut", amb.describe(p)), &f, &cut, None);
            }
        }
        if let Some(m) = first_non_auto(e) {
            push(format!("{base}: {l} minus {}", m.describe(amb)), &f, &e.without(&m), None);
        }
        for p in f.subgroups() {
            if let Some(cut) = cut_auts(&f, p) {
                push(format!("{base}: F with Aut({}) cut, {l}", amb.describe(p)), &cut, e, None);
                let stale = cut.with_unchecked_realizer(&f);
                push(format!("{base}: F with Aut({}) cut, stale realizer, {l}", amb.describe(p)), &stale, e, None);
            }
        }
        if let Some(m) = first_non_auto(&f) {
            push(format!("{base}: F minus {}, {l}", m.describe(amb)), &f.without(&m), e, None);
        }
        let inner_s = FusionSystem::inner(f.ambient(), f.support());
        push(format!("{base}: F replaced by its inner system, {l}"), &inner_s, e, None);
    }
    for t in f.subgroups() {
        let inner = FusionSystem::inner(f.ambient(), t);
        push(format!("{base}: inner system on {}", amb.describe(t)), &f, &inner, None);
    }
    for (i, (l1, e1)) in pairs.iter().enumerate() {
        for (l2, e2) in &pairs[i + 1..] {
            if !amb.le(e1.support(), amb.centralizer(e2.support())) {
                continue;
            }
            for p in e1.subgroups() {
                if let Some(cut) = cut_auts(e1, p) {
                    push(format!("{base}: {l1} with Aut({}) cut * {l2}", amb.describe(p)), &f, &cut, Some(e2));
                }
            }
            for p in f.subgroups() {
                if let Some(cut) = cut_auts(&f, p) {
                    push(format!("{base}: F with Aut({}) cut, {l1} * {l2}", amb.describe(p)), &cut, e1, Some(e2));
                }
            }
            let inner1 = FusionSystem::inner(f.ambient(), e1.support());
            push(format!("{base}: inner({l1}) * {l2}"), &f, &inner1, Some(e2));
        }
    }
    Ok(out)
}

fn run_one(id: &str, m: &Mutant, config: &Config) -> Outcome {
    let run = || {
        let sys = SystemCtx::new(&m.f, config.lattice_cap);
        if PRODUCT_CHECKS.contains(&id) {
            let Some(e2) = &m.e2 else { return Outcome::NotApplicable };
            return product_outcomes(&sys, &m.e, e2)
                .into_iter()
                .find(|(i, _)| *i == id)
                .map(|(_, o)| o)
                .unwrap_or(Outcome::NotApplicable);
        }
        if m.e2.is_some() {
            return Outcome::NotApplicable;
        }
        if SYSTEM_CHECKS.contains(&id) && id != "Finvariant.equiv" {
            return sys.run(id);
        }
        let normals = [m.e.clone()];
        PairCtx::new(&sys, &m.e, &normals).run(id)
    };
    // a corrupted system may break assumptions deep inside a computation;
    // that counts as not caught
    catch_unwind(AssertUnwindSafe(run)).unwrap_or(Outcome::NotApplicable)
}

/// For each id, the first mutant (in a fixed order) on which the check
/// reports a violation.
pub fn self_test(ids: &[&str], config: &Config) -> Result<Vec<MutationResult>> {
    let mut mutants = Vec::new();
    for &(key, p) in BASES {
        mutants.extend(mutants_of(key, p, config)?);
    }
    let out = ids
        .iter()
        .map(|&id| {
            for m in &mutants {
                if let Outcome::Violation(c) = run_one(id, m, config) {
                    return MutationResult {
                        id: id.to_string(),
                        caught_by: Some(m.label.clone()),
                        counterexample: Some(c),
                    };
                }
            }
            MutationResult {
                id: id.to_string(),
                caught_by: None,
                counterexample: None,
            }
        })
        .collect();
    Ok(out)
}
