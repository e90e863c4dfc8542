//! Strongly and weakly closed subgroups, centralizer and normalizer
//! subsystems, invariance conditions and normality of subsystems.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, Morphism, Pos, SubId};
use crate::group::Subgroup;

/// The six equivalent forms of invariance under a fusion system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Invariance {
    /// invariance under `Aut_F(T)` plus the Frattini condition
    A,
    /// `Aut_E(P) ⊴ Aut_F(P)` for every `P ≤ T`
    B,
    /// the same for fully normalized `P`
    C,
    /// the same for `R ∩ T` with `R` centric radical and `R ∩ T` fully normalized
    D,
    /// the same for `R ∩ T` over some conjugation family
    E,
    /// `φ^ψ ∈ E` for all `φ ∈ Hom_E(P, Q)`, `ψ ∈ Hom_F(Q, T)`
    F,
}

impl Invariance {
    pub const ALL: [Invariance; 6] = [Self::A, Self::B, Self::C, Self::D, Self::E, Self::F];
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NormalityReport {
    pub contained: bool,
    pub strongly_closed: bool,
    /// conditions (a) to (f), in order
    pub invariant: [bool; 6],
    pub saturated: bool,
    pub frattini: bool,
    /// extension property with `[C_S(T), α̂] ≤ Z(T)`
    pub extension_z: bool,
    /// extension property with `[C_S(T), α̂] ≤ T`
    pub extension_t: bool,
    pub weakly_normal: bool,
    pub normal: bool,
    pub counterexample: Option<String>,
}

impl FusionSystem {
    /// An element of `t` and a morphism sending it outside `t`, if any.
    pub fn strong_closure_failure(&self, t: SubId) -> Option<(Pos, Morphism)> {
        let amb = self.amb();
        for &x in amb.members(t) {
            for m in self.homs_from(amb.cyclic(x)) {
                if !amb.contains_elem(t, m.apply(x)) {
                    return Some((x, m.clone()));
                }
            }
        }
        None
    }

    pub fn is_strongly_closed(&self, t: SubId) -> bool {
        self.strong_closure_failure(t).is_none()
    }

    pub fn is_weakly_closed(&self, t: SubId) -> bool {
        self.homs_from(t).iter().all(|m| m.img() == t)
    }

    /// Every `ψ ∈ Hom(U, support)` that restricts to `phi`.
    pub fn extensions<'a>(&'a self, phi: &'a Morphism, u: SubId) -> impl Iterator<Item = &'a Morphism> + 'a {
        let amb = self.amb();
        self.homs_from(u).iter().filter(move |psi| psi.extends(amb, phi))
    }

    /// `C_F(X)`: over `C_T(X)`, the maps extending to `PX` as the identity on `X`.
    pub fn centralizer_subsystem(&self, x: SubId) -> Result<FusionSystem> {
        let amb = self.amb();
        if !amb.le(x, self.support()) {
            return Err(Error::DomainMismatch("centralized subgroup must lie in the support"));
        }
        let c = amb.centralizer_in(self.support(), x);
        let mut homs = vec![Vec::new(); amb.num_subgroups()];
        for p in amb.subgroups_of(c) {
            let px = amb.product(p, x).expect("P centralizes X");
            let set: BTreeSet<Morphism> = self
                .homs_from(px)
                .iter()
                .filter(|psi| psi.fixes(amb, x))
                .map(|psi| psi.restrict(amb, p))
                .collect();
            homs[p] = set.into_iter().collect();
        }
        let f = FusionSystem::from_parts(self.ambient(), c, homs, format!("C({})", amb.order(x)));
        Ok(self.attach_local_realizer(f, x, false))
    }

    /// `N_F(Q)`: over `N_T(Q)`, the maps extending to `PQ` and mapping `Q` onto itself.
    pub fn normalizer_subsystem(&self, q: SubId) -> Result<FusionSystem> {
        let amb = self.amb();
        if !amb.le(q, self.support()) {
            return Err(Error::DomainMismatch("normalized subgroup must lie in the support"));
        }
        let n = amb.normalizer_in(self.support(), q);
        let mut homs = vec![Vec::new(); amb.num_subgroups()];
        for p in amb.subgroups_of(n) {
            let pq = amb.product(p, q).expect("P normalizes Q");
            let set: BTreeSet<Morphism> = self
                .homs_from(pq)
                .iter()
                .filter(|psi| psi.image_of(amb, q) == q)
                .map(|psi| psi.restrict(amb, p))
                .collect();
            homs[p] = set.into_iter().collect();
        }
        let f = FusionSystem::from_parts(self.ambient(), n, homs, format!("N({})", amb.order(q)));
        Ok(self.attach_local_realizer(f, q, true))
    }

    /// For a realized system, `N_H(Q)` (resp. `C_H(Q)`) realizes the local
    /// subsystem when `Q` is fully normalized (resp. centralized).
    fn attach_local_realizer(&self, local: FusionSystem, q: SubId, normalizer: bool) -> FusionSystem {
        let Some(r) = self.realizer() else {
            return local;
        };
        let applies = if normalizer {
            self.is_fully_normalized(q)
        } else {
            self.is_fully_centralized(q)
        };
        if !applies {
            return local;
        }
        let g = &r.emb.group;
        let qe = r.emb.image(self.amb(), q);
        let host = if normalizer {
            g.normalizer_in(&r.host, &qe)
        } else {
            g.centralizer_in(&r.host, &qe)
        };
        let name = local.name().to_string();
        let emb = r.emb.clone();
        local
            .clone()
            .with_realizer(&emb, &host)
            .map(|f| f.with_name(name))
            .unwrap_or(local)
    }

    /// `Z(F)`: the largest `X ≤ Z(T)` with `F ⊆ C_F(X)`.
    pub fn center_subgroup(&self) -> Result<SubId> {
        let amb = self.amb();
        let z = amb.center(self.support());
        let mut acc = amb.trivial();
        let mut members = Vec::new();
        for x in amb.subgroups_of(z) {
            if self.is_subsystem_of(&self.centralizer_subsystem(x)?) {
                acc = amb.join(acc, x);
                members.push(x);
            }
        }
        if !members.contains(&acc) {
            return Err(Error::alarm("center", "the join of centralized subgroups is not centralized"));
        }
        Ok(acc)
    }

    /// Is `Q` normal in this system, i.e. `N_F(Q) = F`?
    pub fn is_normal_subgroup(&self, q: SubId) -> bool {
        self.amb().le(q, self.support())
            && self.amb().is_normal_in(q, self.support())
            && self.normalizer_subsystem(q).map(|n| n.same_morphisms(self)).unwrap_or(false)
    }

    /// `O_p(F)`: the largest normal subgroup.
    pub fn largest_normal_subgroup(&self) -> Result<SubId> {
        let amb = self.amb();
        let mut acc = amb.trivial();
        for q in self.subgroups() {
            if self.is_normal_subgroup(q) {
                acc = amb.join(acc, q);
            }
        }
        if !self.is_normal_subgroup(acc) {
            return Err(Error::alarm("O_p", "the join of normal subgroups is not normal"));
        }
        Ok(acc)
    }
}

fn aut_normal(f: &FusionSystem, e: &FusionSystem, p: SubId) -> bool {
    let ag = f.aut_group(p);
    match ag.span(e.auts(p).iter()) {
        Some(h) => ag.group().is_normal(&h),
        None => false,
    }
}

/// `E^α = E` for every `α ∈ Aut_F(T)`.
pub fn invariant_under_aut(f: &FusionSystem, e: &FusionSystem) -> Result<Option<Morphism>> {
    for alpha in f.auts(e.support()) {
        if !e.conjugate(&alpha)?.same_morphisms(e) {
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}

/// Frattini condition: every `φ ∈ Hom_F(P, T)` is `φ₀ ∘ α` with
/// `φ₀ ∈ Hom_E(P, T)` and `α ∈ Aut_F(T)`.
pub fn frattini_failure(f: &FusionSystem, e: &FusionSystem) -> Option<Morphism> {
    let amb = f.amb();
    let t = e.support();
    let auts = f.auts(t);
    for p in e.subgroups() {
        for phi in f.hom(p, t) {
            let ok = auts
                .iter()
                .any(|alpha| e.contains(&phi.then(amb, &alpha.inverse(amb))));
            if !ok {
                return Some(phi.clone());
            }
        }
    }
    None
}

fn strong_invariance_failure(f: &FusionSystem, e: &FusionSystem) -> Result<Option<(Morphism, Morphism)>> {
    let amb = f.amb();
    let t = e.support();
    for phi in e.all_morphisms() {
        let q = amb.join(phi.dom(), phi.img());
        for psi in f.hom(q, t) {
            if !e.contains(&phi.conjugate_by(amb, psi)?) {
                return Ok(Some((phi.clone(), psi.clone())));
            }
        }
    }
    Ok(None)
}

/// Evaluates one invariance condition literally. `T` must be strongly
/// closed in `F`.
pub fn invariance_condition(f: &FusionSystem, e: &FusionSystem, which: Invariance) -> Result<bool> {
    let amb = f.amb();
    let t = e.support();
    if !f.same_ambient(e) || !amb.le(t, f.support()) {
        return Err(Error::DomainMismatch("subsystem must share the ambient"));
    }
    if !f.is_strongly_closed(t) {
        return Err(Error::NotStronglyClosed);
    }
    if which == Invariance::F {
        return Ok(strong_invariance_failure(f, e)?.is_none());
    }
    if invariant_under_aut(f, e)?.is_some() {
        return Ok(false);
    }
    Ok(match which {
        Invariance::A => frattini_failure(f, e).is_none(),
        Invariance::B => e.subgroups().into_iter().all(|p| aut_normal(f, e, p)),
        Invariance::C => e
            .subgroups()
            .into_iter()
            .filter(|&p| f.is_fully_normalized(p))
            .all(|p| aut_normal(f, e, p)),
        Invariance::D => f
            .subgroups()
            .into_iter()
            .filter(|&r| f.is_centric(r) && f.is_radical(r))
            .map(|r| amb.meet(r, t))
            .filter(|&rt| f.is_fully_normalized(rt))
            .all(|rt| aut_normal(f, e, rt)),
        Invariance::E => {
            // a superset of a conjugation family is one, so it suffices to
            // test the largest candidate family
            let family: Vec<SubId> = f
                .subgroups()
                .into_iter()
                .filter(|&r| aut_normal(f, e, amb.meet(r, t)))
                .collect();
            f.is_conjugation_family(&family)
        }
        Invariance::F => unreachable!(),
    })
}

/// Does each `α ∈ Aut_E(T)` extend to `α̂ ∈ Aut_F(T C_S(T))` with
/// `[C_S(T), α̂] ≤ bound`? Returns the first automorphism that does not.
pub fn extension_failure(f: &FusionSystem, e: &FusionSystem, bound: SubId) -> Option<Morphism> {
    let amb = f.amb();
    let t = e.support();
    let c = amb.centralizer_in(f.support(), t);
    let tc = amb.product(t, c).expect("C_S(T) normalizes T");
    e.auts(t).into_iter().find(|alpha| {
        !f.extensions(alpha, tc).any(|hat| {
            hat.img() == tc
                && amb
                    .members(c)
                    .iter()
                    .all(|&x| amb.contains_elem(bound, amb.mul(amb.inv(x), hat.apply(x))))
        })
    })
}

/// Full normality report for `E` inside `F`.
pub fn is_normal(f: &FusionSystem, e: &FusionSystem) -> Result<NormalityReport> {
    let amb = f.amb();
    let t = e.support();
    let mut r = NormalityReport {
        contained: e.is_subsystem_of(f),
        ..Default::default()
    };
    if !r.contained {
        r.counterexample = e.first_missing_in(f).map(|m| format!("{} is not in F", m.describe(amb)));
        return Ok(r);
    }
    if let Some((x, m)) = f.strong_closure_failure(t) {
        r.counterexample = Some(format!("{} is sent outside T by {}", amb.label(x), m.describe(amb)));
        return Ok(r);
    }
    r.strongly_closed = true;
    for (i, w) in Invariance::ALL.into_iter().enumerate() {
        r.invariant[i] = invariance_condition(f, e, w)?;
    }
    r.frattini = frattini_failure(f, e).is_none();
    r.saturated = e.is_saturated();
    let z = amb.center(t);
    let ez = extension_failure(f, e, z);
    r.extension_z = ez.is_none();
    r.extension_t = extension_failure(f, e, t).is_none();
    r.weakly_normal = r.invariant[0] && r.saturated;
    r.normal = r.weakly_normal && r.extension_z;
    if !r.normal {
        r.counterexample = Some(if let Some(a) = invariant_under_aut(f, e)? {
            format!("E is not invariant under {}", a.describe(amb))
        } else if let Some(m) = frattini_failure(f, e) {
            format!("{} does not factor through E and Aut_F(T)", m.describe(amb))
        } else if !r.saturated {
            format!("E is not saturated: {:?}", e.saturation_failure())
        } else if let Some(a) = ez {
            format!("{} has no central extension to T C_S(T)", a.describe(amb))
        } else {
            "normality failed".into()
        });
    }
    Ok(r)
}

/// `F_{S∩N}(N)` for a normal subgroup `N` of the group realizing `f`,
/// certified normal.
pub fn normal_subsystem_from_group(f: &FusionSystem, n: &Subgroup) -> Result<FusionSystem> {
    let r = f.realizer().ok_or(Error::NotRealized)?;
    let g = &r.emb.group;
    if !n.is_subgroup_of(&r.host) || !g.is_normal_in(&r.host, n) {
        return Err(Error::NotNormal);
    }
    let amb = f.amb();
    let mask = n
        .members()
        .iter()
        .filter(|&&x| r.emb.pos[x] != crate::fusion::NONE && amb.contains_elem(f.support(), r.emb.pos[x]))
        .fold(0u128, |m, &x| m | 1u128 << r.emb.pos[x]);
    let t = amb.id_of_mask(mask).ok_or_else(|| Error::alarm("normal subsystem", "S ∩ N is not a subgroup"))?;
    let e = FusionSystem::realized(f.ambient(), &r.emb, n, t)?.with_name(format!("F({})", n.order()));
    let report = is_normal(f, &e)?;
    if !report.normal {
        return Err(Error::VerificationFailed(format!(
            "subsystem of a normal subgroup of order {} is not normal: {}",
            n.order(),
            report.counterexample.unwrap_or_default()
        )));
    }
    Ok(e)
}
