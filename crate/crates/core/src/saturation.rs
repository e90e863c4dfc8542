//! Fully normalized/centralized/automized subgroups, centric and radical
//! subgroups, the saturation axioms, conjugation families and Alperin
//! factorizations.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{close, Ambient, FusionSystem, Morphism, SubId};
use crate::group::p_part;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubgroupFlags {
    pub fully_normalized: bool,
    pub fully_centralized: bool,
    pub fully_automized: bool,
    pub centric: bool,
    pub radical: bool,
    pub centric_radical: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    /// `(subgroup, flags)` for every subgroup of the support, canonical order.
    pub subgroups: Vec<(SubId, SubgroupFlags)>,
}

impl Classification {
    pub fn flags(&self, p: SubId) -> Option<SubgroupFlags> {
        self.subgroups.iter().find(|(q, _)| *q == p).map(|(_, f)| *f)
    }

    /// `F^{cr} ∩ F^f`, canonical order.
    pub fn alperin_family(&self) -> Vec<SubId> {
        self.subgroups
            .iter()
            .filter(|(_, f)| f.centric_radical && f.fully_normalized)
            .map(|(p, _)| *p)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SaturationFailure {
    NotFullyAutomized { subgroup: SubId },
    NotFullyCentralized { subgroup: SubId },
    ExtensionMissing { morphism: Morphism, over: SubId },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorStep {
    /// Member `R_i` of the conjugation family.
    pub member: SubId,
    /// `φ_i ∈ Aut_F(R_i)`.
    pub automorphism: Morphism,
    /// `P_{i-1}` and `P_i`.
    pub from: SubId,
    pub to: SubId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub start: SubId,
    pub steps: Vec<FactorStep>,
}

impl Factorization {
    /// `(φ_1|_{P_0}) ∘ … ∘ (φ_k|_{P_{k-1}})`.
    pub fn recompose(&self, amb: &Ambient) -> Morphism {
        let mut acc = Morphism::identity(amb, self.start);
        for s in &self.steps {
            acc = acc.then(amb, &s.automorphism);
        }
        acc
    }
}

impl FusionSystem {
    fn norm_order(&self, p: SubId) -> usize {
        self.amb().order(self.amb().normalizer_in(self.support(), p))
    }

    fn cent_order(&self, p: SubId) -> usize {
        self.amb().order(self.amb().centralizer_in(self.support(), p))
    }

    /// `|N_T(P)|` is maximal among the conjugates of `P`.
    pub fn is_fully_normalized(&self, p: SubId) -> bool {
        let n = self.norm_order(p);
        self.class_of(p).iter().all(|&q| self.norm_order(q) <= n)
    }

    pub fn is_fully_centralized(&self, p: SubId) -> bool {
        let c = self.cent_order(p);
        self.class_of(p).iter().all(|&q| self.cent_order(q) <= c)
    }

    /// `Aut_T(P)` is a Sylow subgroup of `Aut_F(P)`.
    pub fn is_fully_automized(&self, p: SubId) -> bool {
        let aut_t = self.norm_order(p) / self.cent_order(p);
        aut_t == p_part(self.auts(p).len(), self.prime())
    }

    /// `C_T(Q) ≤ Q` for every conjugate `Q`.
    pub fn is_centric(&self, p: SubId) -> bool {
        let amb = self.amb();
        self.class_of(p)
            .iter()
            .all(|&q| amb.le(amb.centralizer_in(self.support(), q), q))
    }

    /// `O_p(Aut_F(P)) = Inn(P)`.
    pub fn is_radical(&self, p: SubId) -> bool {
        let ag = self.aut_group(p);
        let inn = ag.conjugation_by(self.amb(), p, p).expect("inner automorphisms lie in the system");
        ag.group().op_core(self.prime()) == inn
    }

    /// The conjugate of `P` with largest `|N_T|`, ties broken by canonical
    /// order.
    pub fn fully_normalized_rep(&self, p: SubId) -> SubId {
        let class = self.class_of(p);
        let best = class.iter().map(|&q| self.norm_order(q)).max().expect("P is its own conjugate");
        *class.iter().find(|&&q| self.norm_order(q) == best).expect("maximum attained")
    }

    pub fn classify(&self) -> Classification {
        let subgroups = self
            .subgroups()
            .into_iter()
            .map(|p| {
                let centric = self.is_centric(p);
                let radical = self.is_radical(p);
                (
                    p,
                    SubgroupFlags {
                        fully_normalized: self.is_fully_normalized(p),
                        fully_centralized: self.is_fully_centralized(p),
                        fully_automized: self.is_fully_automized(p),
                        centric,
                        radical,
                        centric_radical: centric && radical,
                    },
                )
            })
            .collect();
        Classification { subgroups }
    }

    /// `F^{cr} ∩ F^f`, canonical order.
    pub fn alperin_family(&self) -> Vec<SubId> {
        self.subgroups()
            .into_iter()
            .filter(|&p| self.is_fully_normalized(p) && self.is_centric(p) && self.is_radical(p))
            .collect()
    }

    /// `N_φ = {g ∈ N_T(P) : φ⁻¹ c_g φ ∈ Aut_T(P^φ)}`.
    pub fn extension_group(&self, phi: &Morphism) -> SubId {
        let amb = self.amb();
        let (p, q) = (phi.dom(), phi.img());
        let inner_q: HashSet<Morphism> = amb
            .members(amb.normalizer_in(self.support(), q))
            .iter()
            .map(|&t| Morphism::conjugation(amb, q, t))
            .collect();
        let inv = phi.inverse(amb);
        let gens = amb
            .members(amb.normalizer_in(self.support(), p))
            .iter()
            .copied()
            .filter(|&g| {
                let twisted = inv.then(amb, &Morphism::conjugation(amb, p, g)).then(amb, phi);
                inner_q.contains(&twisted)
            })
            .collect::<Vec<_>>();
        amb.generated(gens)
    }

    /// Some `ψ ∈ Hom_F(U, T)` with `ψ|_P = φ`, the first in canonical order.
    pub fn extend_morphism(&self, phi: &Morphism, u: SubId) -> Option<Morphism> {
        let amb = self.amb();
        if !amb.le(phi.dom(), u) {
            return None;
        }
        self.homs_from(u).iter().find(|psi| psi.extends(amb, phi)).cloned()
    }

    /// Checks the Sylow and extension axioms over every subgroup and every
    /// morphism, returning the first failure in canonical order.
    pub fn saturation_failure(&self) -> Option<SaturationFailure> {
        for p in self.subgroups() {
            if self.is_fully_normalized(p) {
                if !self.is_fully_automized(p) {
                    return Some(SaturationFailure::NotFullyAutomized { subgroup: p });
                }
                if !self.is_fully_centralized(p) {
                    return Some(SaturationFailure::NotFullyCentralized { subgroup: p });
                }
            }
        }
        let mut fc: HashMap<SubId, bool> = HashMap::new();
        for p in self.subgroups() {
            for phi in self.homs_from(p) {
                let q = phi.img();
                if !*fc.entry(q).or_insert_with(|| self.is_fully_centralized(q)) {
                    continue;
                }
                let n = self.extension_group(phi);
                if self.extend_morphism(phi, n).is_none() {
                    return Some(SaturationFailure::ExtensionMissing {
                        morphism: phi.clone(),
                        over: n,
                    });
                }
            }
        }
        None
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation_failure().is_none()
    }

    /// Does every morphism factor through automorphisms of members of
    /// `family`? The factorizable maps are exactly the closure of the
    /// family's automorphism groups under composition and restriction.
    pub fn is_conjugation_family(&self, family: &[SubId]) -> bool {
        let amb = self.amb();
        let seeds = family.iter().flat_map(|&r| self.auts(r));
        let closed = close(amb, self.support(), seeds, false);
        self.subgroups().iter().all(|&p| closed[p] == self.homs_from(p))
    }

    /// Breadth-first search for a factorization of `phi` through
    /// automorphisms of members of `family`.
    pub fn decompose_through(&self, phi: &Morphism, family: &[SubId]) -> Option<Factorization> {
        let amb = self.amb();
        let start = Morphism::identity(amb, phi.dom());
        let autos: Vec<(SubId, Vec<Morphism>)> = family.iter().map(|&r| (r, self.auts(r))).collect();
        let mut parent: HashMap<Morphism, Option<(Morphism, FactorStep)>> = HashMap::new();
        parent.insert(start.clone(), None);
        let mut queue = VecDeque::from([start]);
        let mut found = None;
        'bfs: while let Some(acc) = queue.pop_front() {
            if &acc == phi {
                found = Some(acc);
                break;
            }
            let q = acc.img();
            for (r, auts) in &autos {
                if !amb.le(q, *r) {
                    continue;
                }
                for a in auts {
                    let next = acc.then(amb, a);
                    if parent.contains_key(&next) {
                        continue;
                    }
                    let step = FactorStep {
                        member: *r,
                        automorphism: a.clone(),
                        from: q,
                        to: next.img(),
                    };
                    parent.insert(next.clone(), Some((acc.clone(), step)));
                    if &next == phi {
                        found = Some(next);
                        break 'bfs;
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut cur = found?;
        let mut steps = Vec::new();
        while let Some(Some((prev, step))) = parent.get(&cur) {
            steps.push(step.clone());
            cur = prev.clone();
        }
        steps.reverse();
        Some(Factorization {
            start: phi.dom(),
            steps,
        })
    }

    /// A factorization of `phi` through `F^{cr} ∩ F^f`.
    pub fn alperin_decompose(&self, phi: &Morphism) -> Result<Factorization> {
        if !self.contains(phi) {
            return Err(Error::MorphismNotInSystem);
        }
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        let family = self.alperin_family();
        self.decompose_through(phi, &family)
            .ok_or_else(|| Error::alarm("Alperin", "no factorization through F^cr ∩ F^f"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn s4_classification() {
        let f = s4_at_2();
        let a = f.amb();
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let c = f.classify();
        let s = c.flags(a.whole()).unwrap();
        assert!(s.fully_normalized && s.centric && s.centric_radical);
        let v = c.flags(v4).unwrap();
        assert!(v.fully_normalized && v.centric && v.radical);
        // Z(S) = ⟨(1 3)(2 4)⟩ has the largest centralizer in its class
        let z = a.center(a.whole());
        assert!(c.flags(z).unwrap().fully_centralized);
        // a non-central conjugate of it is not
        let other = sub(&f, &["(1 2)(3 4)"]);
        assert!(f.are_conjugate(z, other));
        assert!(!c.flags(other).unwrap().fully_centralized);
        assert_eq!(f.alperin_family(), vec![a.whole(), v4]);
    }

    #[test]
    fn extension_groups() {
        let f = s4_at_2();
        let a = f.amb();
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        for p in f.subgroups() {
            let id = Morphism::identity(a, p);
            assert_eq!(f.extension_group(&id), a.normalizer(p));
            for phi in f.homs_from(p) {
                let n = f.extension_group(phi);
                let pc = a.product(p, a.centralizer(p)).unwrap();
                assert!(a.le(pc, n) && a.le(n, a.normalizer(p)));
            }
        }
        let ag = f.aut_group(v4);
        let three = ag.elems().iter().find(|m| ag.group().elem_order(ag.index_of(m).unwrap()) == 3).unwrap();
        assert_eq!(f.extension_group(three), v4);
        // ⟨(1 2)(3 4)⟩ → ⟨(1 3)(2 4)⟩ extends over V4 to the order-3 automorphism
        let x = sub(&f, &["(1 2)(3 4)"]);
        let psi = f.homs_from(x).iter().find(|m| m.img() == a.center(a.whole())).unwrap();
        assert_eq!(f.extension_group(psi), v4);
        let ext = f.extend_morphism(psi, v4).unwrap();
        let g = f.witness(&ext).unwrap();
        let emb = a.embedding().unwrap();
        assert_eq!(emb.group.elem_order(g) % 3, 0);
    }

    #[test]
    fn saturation_examples() {
        let f = s4_at_2();
        assert!(f.is_saturated());
        let e = realized_sub(&f, &["(1 2 3)", "(1 2)(3 4)"]);
        assert!(e.is_saturated());
        // one cross map between two order-2 subgroups of C2 × C2
        let v = perm_group("V", 4, &["(1 2)", "(3 4)"]);
        let fv = system(&v, 2, &["(1 2)", "(3 4)"]);
        let a = fv.ambient().clone();
        let (x, y) = (sub(&fv, &["(1 2)"]), sub(&fv, &["(3 4)"]));
        let phi = Morphism::from_images(&a, x, |t| if t == 0 { 0 } else { pos(&fv, "(3 4)") }).unwrap();
        assert_eq!(phi.img(), y);
        let g = FusionSystem::generated(&a, a.whole(), [phi.clone()], "cross");
        match g.saturation_failure() {
            Some(SaturationFailure::ExtensionMissing { over, .. }) => assert_eq!(over, a.whole()),
            other => panic!("unexpected {other:?}"),
        }
        assert!(g.extend_morphism(&phi, a.whole()).is_none());
    }

    #[test]
    fn conjugation_families_and_alperin() {
        let f = s4_at_2();
        let a = f.amb();
        let all = f.subgroups();
        assert!(f.is_conjugation_family(&all));
        assert!(f.is_conjugation_family(&f.alperin_family()));
        assert!(!f.is_conjugation_family(&[a.center(a.whole())]));
        for phi in f.all_morphisms() {
            let fac = f.alperin_decompose(phi).unwrap();
            assert_eq!(&fac.recompose(a), phi);
            for s in &fac.steps {
                assert!(a.le(a.join(s.from, s.to), s.member));
            }
        }
        let x = sub(&f, &["(1 2)(3 4)"]);
        let psi = f.homs_from(x).iter().find(|m| m.img() == a.center(a.whole())).unwrap();
        let fac = f.alperin_decompose(psi).unwrap();
        assert_eq!(fac.steps.len(), 1);
        assert_eq!(fac.steps[0].member, sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]));
        let id = Morphism::identity(a, x);
        assert!(f.alperin_decompose(&id).unwrap().steps.is_empty());
    }
}
