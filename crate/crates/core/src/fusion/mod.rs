//! Fusion systems on subgroups of a fixed finite `p`-group.
//!
//! All subgroups of the `p`-group are enumerated once in an [`Ambient`]
//! and referred to by [`SubId`]. Elements of the `p`-group are
//! "positions" `0..|S|` (position 0 is the identity).

mod autgroup;
mod closure;
mod morphism;
pub mod persist;
mod system;

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{is_power_of, Elem, FiniteGroup, Subgroup};

pub use autgroup::AutGroup;
pub use closure::close;
pub use morphism::Morphism;
pub use system::{FusionSystem, Realizer};

pub type SubId = usize;
pub type Pos = u8;
pub const NONE: Pos = Pos::MAX;
pub const MAX_P_GROUP: usize = 128;
pub const NO_ELEM: Elem = Elem::MAX;

/// A concrete realization of the `p`-group inside a larger group.
#[derive(Debug)]
pub struct Embedding {
    pub group: FiniteGroup,
    /// position → element of `group`, or `NO_ELEM` for positions
    /// outside the embedded subgroup
    pub elems: Vec<Elem>,
    /// element of `group` → position, or `NONE`
    pub pos: Vec<Pos>,
}

impl Embedding {
    pub fn new(group: FiniteGroup, elems: Vec<Elem>) -> Self {
        let mut pos = vec![NONE; group.order()];
        for (i, &x) in elems.iter().enumerate() {
            if x != NO_ELEM {
                pos[x] = i as Pos;
            }
        }
        Embedding { group, elems, pos }
    }

    pub fn image(&self, amb: &Ambient, p: SubId) -> Subgroup {
        Subgroup::from_unsorted(amb.members(p).iter().map(|&x| self.elems[x as usize]).collect())
    }
}

#[derive(Clone, Debug)]
struct SubInfo {
    mask: u128,
    members: Vec<Pos>,
}

#[derive(Debug)]
pub struct Ambient {
    name: String,
    prime: u64,
    group: FiniteGroup,
    subs: Vec<SubInfo>,
    index: HashMap<u128, SubId>,
    normalizers: Vec<SubId>,
    centralizers: Vec<SubId>,
    maximal: Vec<Vec<SubId>>,
    cyclic: Vec<SubId>,
    embedding: Option<Arc<Embedding>>,
}

impl Ambient {
    /// Enumerates the subgroups of a `p`-group. `group` is the
    /// `p`-group itself; its element indices become positions.
    pub fn new(name: impl Into<String>, group: FiniteGroup, prime: u64, lattice_cap: usize) -> Result<Self> {
        if !is_power_of(group.order(), prime) {
            return Err(Error::NotPGroup("support group"));
        }
        if group.order() > MAX_P_GROUP {
            return Err(Error::CapExceeded {
                what: "p-group order",
                limit: MAX_P_GROUP,
                actual: group.order(),
            });
        }
        let lattice = group.subgroup_lattice(lattice_cap)?;
        let subs: Vec<SubInfo> = lattice
            .iter()
            .map(|h| SubInfo {
                mask: h.members().iter().fold(0u128, |m, &x| m | 1u128 << x),
                members: h.members().iter().map(|&x| x as Pos).collect(),
            })
            .collect();
        let index = subs.iter().enumerate().map(|(i, s)| (s.mask, i)).collect();
        let mut amb = Ambient {
            name: name.into(),
            prime,
            group,
            subs,
            index,
            normalizers: Vec::new(),
            centralizers: Vec::new(),
            maximal: Vec::new(),
            cyclic: Vec::new(),
            embedding: None,
        };
        let whole = amb.group.whole();
        for (i, h) in lattice.iter().enumerate() {
            let n = amb.group.normalizer_in(&whole, h);
            let c = amb.group.centralizer_in(&whole, h);
            amb.normalizers.push(amb.id_of_subgroup(&n));
            amb.centralizers.push(amb.id_of_subgroup(&c));
            let order = amb.order(i);
            let maxes = (0..amb.subs.len())
                .filter(|&j| amb.order(j) * prime as usize == order && amb.le(j, i))
                .collect();
            amb.maximal.push(maxes);
        }
        amb.cyclic = (0..amb.group.order())
            .map(|x| amb.id_of_subgroup(&amb.group.generate([x])))
            .collect();
        Ok(amb)
    }

    /// The ambient for a Sylow subgroup `s` of `g`, remembering the
    /// embedding. Positions follow the sorted member list of `s`.
    pub fn from_sylow(g: &FiniteGroup, s: &Subgroup, prime: u64, lattice_cap: usize) -> Result<Self> {
        let (sg, emb) = g.subgroup_group(s);
        let mut amb = Ambient::new(format!("{}@{}", g.name(), prime), sg, prime, lattice_cap)?;
        amb.embedding = Some(Arc::new(Embedding::new(g.clone(), emb)));
        Ok(amb)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn embedding(&self) -> Option<&Arc<Embedding>> {
        self.embedding.as_ref()
    }

    pub fn size(&self) -> usize {
        self.group.order()
    }

    pub fn num_subgroups(&self) -> usize {
        self.subs.len()
    }

    pub fn whole(&self) -> SubId {
        0
    }

    pub fn trivial(&self) -> SubId {
        self.subs.len() - 1
    }

    pub fn order(&self, p: SubId) -> usize {
        self.subs[p].members.len()
    }

    pub fn mask(&self, p: SubId) -> u128 {
        self.subs[p].mask
    }

    pub fn members(&self, p: SubId) -> &[Pos] {
        &self.subs[p].members
    }

    pub fn contains_elem(&self, p: SubId, x: Pos) -> bool {
        self.subs[p].mask >> x & 1 == 1
    }

    /// `a ≤ b`
    pub fn le(&self, a: SubId, b: SubId) -> bool {
        self.subs[a].mask & !self.subs[b].mask == 0
    }

    pub fn id_of_mask(&self, mask: u128) -> Option<SubId> {
        self.index.get(&mask).copied()
    }

    pub fn id_of_subgroup(&self, h: &Subgroup) -> SubId {
        let mask = h.members().iter().fold(0u128, |m, &x| m | 1u128 << x);
        self.index[&mask]
    }

    pub fn subgroup(&self, p: SubId) -> Subgroup {
        Subgroup::from_sorted(self.members(p).iter().map(|&x| x as usize).collect())
    }

    /// Subgroups of `p`, in canonical order.
    pub fn subgroups_of(&self, p: SubId) -> impl Iterator<Item = SubId> + '_ {
        (0..self.subs.len()).filter(move |&q| self.le(q, p))
    }

    pub fn maximal_subgroups(&self, p: SubId) -> &[SubId] {
        &self.maximal[p]
    }

    pub fn cyclic(&self, x: Pos) -> SubId {
        self.cyclic[x as usize]
    }

    pub fn generated<I: IntoIterator<Item = Pos>>(&self, gens: I) -> SubId {
        let h = self.group.generate(gens.into_iter().map(|x| x as usize));
        self.id_of_subgroup(&h)
    }

    pub fn join(&self, a: SubId, b: SubId) -> SubId {
        let mask = self.mask(a) | self.mask(b);
        if let Some(id) = self.id_of_mask(mask) {
            return id;
        }
        // smallest subgroup containing both: the last containing one in
        // canonical order with minimal order
        (0..self.subs.len())
            .rev()
            .find(|&q| self.mask(q) & mask == mask)
            .expect("the whole group contains everything")
    }

    pub fn meet(&self, a: SubId, b: SubId) -> SubId {
        self.index[&(self.mask(a) & self.mask(b))]
    }

    #[inline]
    pub fn mul(&self, a: Pos, b: Pos) -> Pos {
        self.group.mul(a as usize, b as usize) as Pos
    }

    #[inline]
    pub fn inv(&self, a: Pos) -> Pos {
        self.group.inv(a as usize) as Pos
    }

    #[inline]
    pub fn conj(&self, x: Pos, g: Pos) -> Pos {
        self.group.conj(x as usize, g as usize) as Pos
    }

    /// `N_S(P)`
    pub fn normalizer(&self, p: SubId) -> SubId {
        self.normalizers[p]
    }

    /// `C_S(P)`
    pub fn centralizer(&self, p: SubId) -> SubId {
        self.centralizers[p]
    }

    /// `N_T(P)`
    pub fn normalizer_in(&self, t: SubId, p: SubId) -> SubId {
        self.meet(t, self.normalizers[p])
    }

    /// `C_T(P)`
    pub fn centralizer_in(&self, t: SubId, p: SubId) -> SubId {
        self.meet(t, self.centralizers[p])
    }

    pub fn center(&self, p: SubId) -> SubId {
        self.centralizer_in(p, p)
    }

    pub fn is_normal_in(&self, p: SubId, t: SubId) -> bool {
        self.le(t, self.normalizers[p])
    }

    pub fn conj_subgroup(&self, p: SubId, g: Pos) -> SubId {
        self.index[&self.members(p).iter().fold(0u128, |m, &x| m | 1u128 << self.conj(x, g))]
    }

    /// `[A, B]`
    pub fn commutator(&self, a: SubId, b: SubId) -> SubId {
        let mut gens = Vec::new();
        for &x in self.members(a) {
            for &y in self.members(b) {
                gens.push(self.group.commutator(x as usize, y as usize) as Pos);
            }
        }
        self.generated(gens)
    }

    /// Product set `AB`, when it is a subgroup.
    pub fn product(&self, a: SubId, b: SubId) -> Option<SubId> {
        let mut mask = 0u128;
        for &x in self.members(a) {
            for &y in self.members(b) {
                mask |= 1u128 << self.mul(x, y);
            }
        }
        self.id_of_mask(mask)
    }

    pub fn label(&self, x: Pos) -> String {
        match &self.embedding {
            Some(e) => e.group.label(e.elems[x as usize]),
            None => self.group.label(x as usize),
        }
    }

    pub fn describe(&self, p: SubId) -> String {
        let labels: Vec<String> = self.members(p).iter().map(|&x| self.label(x)).collect();
        format!("<{}> order {}", labels.join(", "), self.order(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn s4_fusion_examples() {
        let f = s4_at_2();
        let a = f.amb();
        assert_eq!(a.size(), 8);
        assert_eq!(a.num_subgroups(), 10);
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(f.auts(v4).len(), 6);
        let z = sub(&f, &["(1 3)(2 4)"]);
        assert_eq!(z, a.center(a.whole()));
        assert_eq!(f.hom(z, v4).count(), 3);
        for p in f.subgroups() {
            if a.order(p) < 8 {
                assert_eq!(f.hom(a.whole(), p).count(), 0);
            }
            // Hom_S(P, P) ⊆ Hom_F(P, P)
            for &s in a.members(a.normalizer(p)) {
                assert!(f.contains(&Morphism::conjugation(a, p, s)));
            }
        }
        // every hom has a witness reproducing it
        let emb = a.embedding().unwrap();
        for m in f.all_morphisms() {
            let g = f.witness(m).unwrap();
            for &x in a.members(m.dom()) {
                assert_eq!(emb.pos[emb.group.conj(emb.elems[x as usize], g)], m.apply(x));
            }
        }
    }

    #[test]
    fn abelian_and_a4() {
        let c4 = perm_group("C4", 4, &["(1 2 3 4)"]);
        let f = system(&c4, 2, &["(1 2 3 4)"]);
        assert!(f.all_morphisms().all(|m| m.is_identity()));
        let a4 = perm_group("A4", 4, &["(1 2 3)", "(1 2)(3 4)"]);
        let f = system(&a4, 2, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(f.auts(f.support()).len(), 3);
        let bad = span(&a4, &["(1 2)(3 4)"]);
        assert!(matches!(FusionSystem::of_group(&a4, &bad, 2, 100), Err(Error::NotSylow { .. })));
    }

    #[test]
    fn generated_subsystems() {
        let f = s4_at_2();
        let a = f.ambient().clone();
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let inner = f.generated_subsystem(v4, &[]).unwrap();
        assert_eq!(inner, FusionSystem::inner(&a, v4));
        let e = realized_sub(&f, &["(1 2 3)", "(1 2)(3 4)"]);
        let gen = f.generated_subsystem(v4, &e.auts(v4)).unwrap();
        assert_eq!(gen, e);
        let three = f.auts(v4).into_iter().find(|m| {
            let ag = f.aut_group(v4);
            ag.group().elem_order(ag.index_of(m).unwrap()) == 3
        });
        let whole = f.generated_subsystem(a.whole(), &[three.unwrap()]).unwrap();
        assert_eq!(whole, f);
        // idempotent
        let again = f.generated_subsystem(a.whole(), &whole.all_morphisms().cloned().collect::<Vec<_>>()).unwrap();
        assert_eq!(again, whole);
        let z = sub(&f, &["(1 3)"]);
        let outside = f.auts(v4);
        assert!(matches!(f.generated_subsystem(z, &outside), Err(Error::MorphismOutsideR)));
        // an order-3 automorphism of ⟨(1 3), (2 4)⟩ is not realized in S4
        let w = sub(&f, &["(1 3)", "(2 4)"]);
        let (x, y, xy) = (pos(&f, "(1 3)"), pos(&f, "(2 4)"), pos(&f, "(1 3)(2 4)"));
        let fake = Morphism::from_images(&a, w, |t| match t {
            t if t == x => y,
            t if t == y => xy,
            t if t == xy => x,
            t => t,
        })
        .unwrap();
        assert!(matches!(f.generated_subsystem(w, &[fake]), Err(Error::MorphismNotInSystem)));
    }

    #[test]
    fn containment_and_conjugation() {
        let f = s4_at_2();
        let a = f.ambient().clone();
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let e = realized_sub(&f, &["(1 2 3)", "(1 2)(3 4)"]);
        let inner = FusionSystem::inner(&a, v4);
        assert!(inner.is_subsystem_of(&e));
        assert!(!e.is_subsystem_of(&inner));
        assert!(e.is_subsystem_of(&e));
        for alpha in f.auts(v4) {
            assert_eq!(e.conjugate(&alpha).unwrap(), e);
        }
        assert_eq!(e.conjugate(&Morphism::identity(&a, v4)).unwrap(), e);
        // conjugating an order-3 automorphism by c_(1 3) inverts it
        let ag = f.aut_group(v4);
        let phi = ag.elems().iter().find(|m| ag.group().elem_order(ag.index_of(m).unwrap()) == 3).unwrap();
        let c = Morphism::conjugation(&a, v4, pos(&f, "(1 3)"));
        let conj = phi.conjugate_by(&a, &c).unwrap();
        assert_eq!(conj, phi.inverse(&a));
        let too_small = Morphism::identity(&a, sub(&f, &["(1 3)(2 4)"]));
        assert!(phi.conjugate_by(&a, &too_small).is_err());
    }
}
