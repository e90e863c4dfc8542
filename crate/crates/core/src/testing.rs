//! Small fixtures shared by unit tests.

use crate::fusion::{FusionSystem, Pos, SubId};
use crate::group::perm::parse_cycles;
use crate::group::{Elem, FiniteGroup, Subgroup};

pub fn perm_group(name: &str, degree: usize, gens: &[&str]) -> FiniteGroup {
    let gens: Vec<Vec<usize>> = gens.iter().map(|c| parse_cycles(degree, c).unwrap()).collect();
    FiniteGroup::from_permutations(name, degree, &gens, 1000).unwrap()
}

pub fn elem(g: &FiniteGroup, cycles: &str) -> Elem {
    let degree = g.perm(0).unwrap().len();
    g.find_perm(&parse_cycles(degree, cycles).unwrap()).unwrap()
}

pub fn span(g: &FiniteGroup, gens: &[&str]) -> Subgroup {
    g.generate(gens.iter().map(|c| elem(g, c)))
}

/// `F_S(G)` for a permutation group with `S` given by generators.
pub fn system(g: &FiniteGroup, p: u64, sylow: &[&str]) -> FusionSystem {
    FusionSystem::of_group(g, &span(g, sylow), p, 20000).unwrap()
}

pub fn s4() -> FiniteGroup {
    perm_group("S4", 4, &["(1 2)", "(1 2 3 4)"])
}

/// `F_{D8}(S4)` with `S = ⟨(1 2 3 4), (1 3)⟩`.
pub fn s4_at_2() -> FusionSystem {
    system(&s4(), 2, &["(1 2 3 4)", "(1 3)"])
}

pub fn pos(f: &FusionSystem, cycles: &str) -> Pos {
    let emb = f.amb().embedding().unwrap();
    emb.pos[elem(&emb.group, cycles)]
}

pub fn sub(f: &FusionSystem, gens: &[&str]) -> SubId {
    let ps: Vec<Pos> = gens.iter().map(|c| pos(f, c)).collect();
    f.amb().generated(ps)
}

/// `F_{S∩H}(H)` inside the ambient of `f`, for `H` given by generators.
pub fn realized_sub(f: &FusionSystem, gens: &[&str]) -> FusionSystem {
    let emb = f.amb().embedding().unwrap().clone();
    let h = span(&emb.group, gens);
    let t = h.members().iter().filter_map(|&x| {
        let p = emb.pos[x];
        (p != crate::fusion::NONE).then_some(p)
    });
    let t = f.amb().id_of_mask(t.fold(0u128, |m, x| m | 1u128 << x)).unwrap();
    FusionSystem::realized(f.ambient(), &emb, &h, t).unwrap()
}
