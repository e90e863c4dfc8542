#![allow(dead_code)]

use fusion_core::config::Config;
use fusion_core::corpus::bundled_entry;
use fusion_core::fusion::{FusionSystem, SubId, NONE};
use fusion_core::group::perm::parse_cycles;
use fusion_core::group::{Elem, FiniteGroup, Subgroup};
use fusion_core::subsystems::normal_subsystem_from_group;

/// `F_S(G)` for a bundled corpus entry at prime `p`.
pub fn corpus_system(key: &str, p: u64) -> FusionSystem {
    bundled_entry(key)
        .unwrap_or_else(|| panic!("no corpus entry {key}"))
        .systems(&Config::default())
        .unwrap()
        .into_iter()
        .find(|f| f.prime() == p)
        .unwrap_or_else(|| panic!("{key} has no prime {p}"))
}

pub fn group_of(f: &FusionSystem) -> &FiniteGroup {
    &f.amb().embedding().unwrap().group
}

pub fn elem(g: &FiniteGroup, cycles: &str) -> Elem {
    let degree = g.perm(0).unwrap().len();
    g.find_perm(&parse_cycles(degree, cycles).unwrap()).unwrap()
}

pub fn span(g: &FiniteGroup, gens: &[&str]) -> Subgroup {
    g.generate(gens.iter().map(|c| elem(g, c)))
}

/// `F_{S∩N}(N)` for `N` given by permutation generators.
pub fn normal(f: &FusionSystem, gens: &[&str]) -> FusionSystem {
    normal_subsystem_from_group(f, &span(group_of(f), gens)).unwrap()
}

/// The subgroup of the support generated by the given permutations.
pub fn sub(f: &FusionSystem, gens: &[&str]) -> SubId {
    let emb = f.amb().embedding().unwrap();
    let ps = gens.iter().map(|c| {
        let p = emb.pos[elem(&emb.group, c)];
        assert_ne!(p, NONE, "{c} is not in S");
        p
    });
    f.amb().generated(ps)
}

/// `S ∩ H` as a subgroup of the support.
pub fn meet_support(f: &FusionSystem, h: &Subgroup) -> SubId {
    let emb = f.amb().embedding().unwrap();
    let mask = h
        .members()
        .iter()
        .map(|&x| emb.pos[x])
        .filter(|&p| p != NONE && f.amb().contains_elem(f.support(), p))
        .fold(0u128, |m, p| m | 1u128 << p);
    f.amb().id_of_mask(mask).unwrap()
}

/// Small corpus systems used by the property tests.
pub const SMALL: &[(&str, u64)] = &[
    ("s4", 2),
    ("s4", 3),
    ("a4", 2),
    ("d8", 2),
    ("q8", 2),
    ("c4xc2", 2),
    ("s3xs3", 3),
    ("s4xc2", 2),
    ("sl23", 2),
    ("gl23", 2),
    ("a5", 2),
    ("a6", 3),
    ("q8oc4", 2),
    ("c3_c4", 2),
];
