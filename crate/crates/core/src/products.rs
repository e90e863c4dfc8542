//! Direct products, morphisms induced by group homomorphisms, and
//! central products of subsystems.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{Ambient, Embedding, FusionSystem, Morphism, Pos, SubId, NONE};
use crate::group::FiniteGroup;
use crate::subsystems::is_normal;

/// Largest `|H₁|·|H₂|` for which the product of realizing groups is built.
pub const REALIZED_PRODUCT_CAP: usize = 4096;

/// `F₁ × F₂` over `S₁ × S₂`. Position `a·|S₂| + b` of the product is the
/// pair of the `a`-th member of `S₁` and the `b`-th member of `S₂`.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub system: FusionSystem,
    pub factors: [FusionSystem; 2],
    members: [Vec<Pos>; 2],
    index: [HashMap<Pos, usize>; 2],
}

impl DirectProduct {
    pub fn new(f1: &FusionSystem, f2: &FusionSystem, lattice_cap: usize) -> Result<Self> {
        if f1.prime() != f2.prime() {
            return Err(Error::DomainMismatch("factors over different primes"));
        }
        let members = [f1, f2].map(|f| f.amb().members(f.support()).to_vec());
        let index = members
            .clone()
            .map(|m| m.iter().enumerate().map(|(i, &x)| (x, i)).collect::<HashMap<_, _>>());
        let g1 = f1.amb().group().subgroup_group(&f1.amb().subgroup(f1.support())).0;
        let g2 = f2.amb().group().subgroup_group(&f2.amb().subgroup(f2.support())).0;
        let group = FiniteGroup::direct_product(&g1, &g2);
        let name = format!("{}x{}", f1.name(), f2.name());
        let amb = Arc::new(Ambient::new(name.clone(), group, f1.prime(), lattice_cap)?);
        let placeholder = FusionSystem::inner(&amb, amb.whole());
        let mut dp = DirectProduct {
            system: placeholder,
            factors: [f1.clone(), f2.clone()],
            members,
            index,
        };
        let mut seeds = Vec::new();
        for phi in f1.all_morphisms() {
            seeds.push(dp.cross(phi, &Morphism::identity(f2.amb(), f2.support()))?);
        }
        for phi in f2.all_morphisms() {
            seeds.push(dp.cross(&Morphism::identity(f1.amb(), f1.support()), phi)?);
        }
        let mut system = FusionSystem::generated(&amb, amb.whole(), seeds, name.clone());
        if let (Some(r1), Some(r2)) = (f1.realizer(), f2.realizer()) {
            if r1.host.order() * r2.host.order() <= REALIZED_PRODUCT_CAP {
                let (h1, e1) = r1.emb.group.subgroup_group(&r1.host);
                let (h2, e2) = r2.emb.group.subgroup_group(&r2.host);
                let big = FiniteGroup::direct_product(&h1, &h2);
                let nb = h2.order();
                let local = |e: &[usize], x: usize| e.binary_search(&x).expect("support lies in the host");
                let elems = (0..amb.size() as Pos)
                    .map(|x| {
                        let (a, b) = dp.pair(x);
                        local(&e1, r1.emb.elems[a as usize]) * nb + local(&e2, r2.emb.elems[b as usize])
                    })
                    .collect::<Vec<_>>();
                let host = big.whole();
                system = system
                    .with_realizer(&Arc::new(Embedding::new(big, elems)), &host)
                    .map_err(|_| Error::alarm("DirectProduct", "F1 x F2 differs from the fusion of G1 x G2"))?;
            }
        }
        dp.system = system;
        if let Some(m) = dp.structure_failure() {
            return Err(Error::alarm(
                "DirectProduct",
                format!("{} is not a product of factor maps", m.describe(dp.system.amb())),
            ));
        }
        Ok(dp)
    }

    pub fn pos(&self, x1: Pos, x2: Pos) -> Pos {
        let n2 = self.members[1].len();
        (self.index[0][&x1] * n2 + self.index[1][&x2]) as Pos
    }

    /// Factor positions of a product position.
    pub fn pair(&self, x: Pos) -> (Pos, Pos) {
        let n2 = self.members[1].len();
        (self.members[0][x as usize / n2], self.members[1][x as usize % n2])
    }

    /// `φ₁ × φ₂` on `P₁ × P₂`.
    pub fn cross(&self, phi1: &Morphism, phi2: &Morphism) -> Result<Morphism> {
        let amb = self.system.amb();
        let [a1, a2] = [self.factors[0].amb(), self.factors[1].amb()];
        let mask = a1
            .members(phi1.dom())
            .iter()
            .flat_map(|&x| a2.members(phi2.dom()).iter().map(move |&y| (x, y)))
            .fold(0u128, |m, (x, y)| m | 1u128 << self.pos(x, y));
        let dom = amb.id_of_mask(mask).expect("products of subgroups are subgroups");
        Morphism::from_images(amb, dom, |z| {
            let (x, y) = self.pair(z);
            self.pos(phi1.apply(x), phi2.apply(y))
        })
    }

    /// `Ŝᵢ`-image of a subgroup of factor `i`.
    pub fn iota(&self, i: usize, p: SubId) -> SubId {
        let amb = self.system.amb();
        let f = &self.factors[i];
        let mask = f.amb().members(p).iter().fold(0u128, |m, &x| {
            let z = if i == 0 {
                self.pos(x, 0)
            } else {
                self.pos(0, x)
            };
            m | 1u128 << z
        });
        amb.id_of_mask(mask).expect("image of a subgroup")
    }

    /// `πᵢ(P)` as a subgroup of factor `i`'s ambient.
    pub fn project(&self, i: usize, p: SubId) -> SubId {
        let f = &self.factors[i];
        let gens = self.system.amb().members(p).iter().map(|&z| {
            let (a, b) = self.pair(z);
            if i == 0 {
                a
            } else {
                b
            }
        });
        f.amb().generated(gens)
    }

    /// The canonical image `F̂ᵢ` over `Ŝᵢ`.
    pub fn canonical_image(&self, i: usize) -> Result<FusionSystem> {
        let f = &self.factors[i];
        let id = |j: usize| {
            let g = &self.factors[j];
            Morphism::identity(g.amb(), g.amb().trivial())
        };
        let mut homs = vec![Vec::new(); self.system.amb().num_subgroups()];
        for phi in f.all_morphisms() {
            let m = if i == 0 {
                self.cross(phi, &id(1))?
            } else {
                self.cross(&id(0), phi)?
            };
            homs[m.dom()].push(m);
        }
        for v in &mut homs {
            v.sort();
        }
        let support = self.iota(i, f.support());
        Ok(FusionSystem::generated(
            self.system.ambient(),
            support,
            homs.into_iter().flatten(),
            format!("{}^", f.name()),
        ))
    }

    /// The first morphism that is not `(φ₁ × φ₂)|_P` with
    /// `φᵢ ∈ Hom_{Fᵢ}(πᵢ(P), Sᵢ)`.
    pub fn structure_failure(&self) -> Option<Morphism> {
        let amb = self.system.amb();
        self.system
            .all_morphisms()
            .find(|m| {
                let mut ok = true;
                for i in 0..2 {
                    let f = &self.factors[i];
                    let fa = f.amb();
                    let mut map = vec![NONE; fa.size()];
                    for &z in amb.members(m.dom()) {
                        let (x, y) = self.pair(z);
                        let (u, v) = self.pair(m.apply(z));
                        let (src, dst) = if i == 0 { (x, u) } else { (y, v) };
                        if map[src as usize] != NONE && map[src as usize] != dst {
                            ok = false;
                        }
                        map[src as usize] = dst;
                    }
                    let dom = self.project(i, m.dom());
                    ok = ok
                        && Morphism::from_images(fa, dom, |x| map[x as usize])
                            .map(|phi| f.contains(&phi))
                            .unwrap_or(false);
                }
                !ok
            })
            .cloned()
    }
}

/// The functor induced by a group homomorphism `α: S → S'` between the
/// supports of two systems: each `φ` paired with its image `ψ`.
#[derive(Clone, Debug)]
pub struct InducedFunctor {
    /// position of the source ambient → position of the target ambient
    pub alpha: Vec<Pos>,
    pub pairs: Vec<(Morphism, Morphism)>,
}

fn image_subgroup(target: &Ambient, alpha: &[Pos], source: &Ambient, p: SubId) -> SubId {
    target.generated(source.members(p).iter().map(|&x| alpha[x as usize]))
}

/// The functor induced by `alpha` from `f` to `g`, or `None` when some
/// `φ ∈ F` has no image in `G`.
pub fn induces_morphism(alpha: &[Pos], f: &FusionSystem, g: &FusionSystem) -> Option<InducedFunctor> {
    let (sa, ta) = (f.amb(), g.amb());
    for &x in sa.members(f.support()) {
        for &y in sa.members(f.support()) {
            if alpha[sa.mul(x, y) as usize] != ta.mul(alpha[x as usize], alpha[y as usize]) {
                return None;
            }
        }
    }
    if !ta.le(image_subgroup(ta, alpha, sa, f.support()), g.support()) {
        return None;
    }
    let mut pairs = Vec::new();
    for phi in f.all_morphisms() {
        let dom = image_subgroup(ta, alpha, sa, phi.dom());
        let mut map = vec![NONE; ta.size()];
        for &x in sa.members(phi.dom()) {
            let (a, b) = (alpha[x as usize], alpha[phi.apply(x) as usize]);
            if map[a as usize] != NONE && map[a as usize] != b {
                return None;
            }
            map[a as usize] = b;
        }
        let psi = Morphism::from_images(ta, dom, |y| map[y as usize]).ok()?;
        if !g.contains(&psi) {
            return None;
        }
        pairs.push((phi.clone(), psi));
    }
    Some(InducedFunctor {
        alpha: alpha.to_vec(),
        pairs,
    })
}

impl InducedFunctor {
    /// `ker(α)` as a subgroup of the source ambient.
    pub fn kernel(&self, f: &FusionSystem) -> SubId {
        let amb = f.amb();
        amb.generated(amb.members(f.support()).iter().copied().filter(|&x| self.alpha[x as usize] == 0))
    }

    /// The image `E^α` of a subsystem `E` of the source.
    pub fn image_of(&self, e: &FusionSystem, g: &FusionSystem) -> FusionSystem {
        let sa = e.amb();
        let support = image_subgroup(g.amb(), &self.alpha, sa, e.support());
        let maps: Vec<Morphism> = self
            .pairs
            .iter()
            .filter(|(phi, _)| e.contains(phi))
            .map(|(_, psi)| psi.clone())
            .collect();
        FusionSystem::generated(g.ambient(), support, maps, format!("{}^a", e.name()))
    }

    /// `α` onto the support of `g` and every `α_{P,Q}` onto
    /// `Hom_G(P^α, Q^α)`, for `P, Q` containing `ker(α)`. (Below the
    /// kernel `α_{P,Q}` cannot be onto: `P^α` may be isomorphic to a
    /// group larger than `Q`.)
    pub fn is_epimorphism(&self, f: &FusionSystem, g: &FusionSystem) -> bool {
        let (sa, ta) = (f.amb(), g.amb());
        if image_subgroup(ta, &self.alpha, sa, f.support()) != g.support() {
            return false;
        }
        let kernel = self.kernel(f);
        for p in f.subgroups().into_iter().filter(|&p| sa.le(kernel, p)) {
            let pa = image_subgroup(ta, &self.alpha, sa, p);
            for psi in g.homs_from(pa) {
                let images: Vec<SubId> = self
                    .pairs
                    .iter()
                    .filter(|(phi, q)| phi.dom() == p && q == psi)
                    .map(|(phi, _)| phi.img())
                    .collect();
                for q in f.subgroups().into_iter().filter(|&q| sa.le(kernel, q)) {
                    let qa = image_subgroup(ta, &self.alpha, sa, q);
                    if ta.le(psi.img(), qa) && !images.iter().any(|&i| sa.le(i, q)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `Fᵢ ⊆ C_F(S_{3-i})` for `i = 1, 2`.
pub fn centralize_each_other(f: &FusionSystem, f1: &FusionSystem, f2: &FusionSystem) -> Result<bool> {
    for (a, b) in [(f1, f2), (f2, f1)] {
        if !a.is_subsystem_of(&f.centralizer_subsystem(b.support())?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F₁ * F₂`: generated over `S₁S₂` by the morphisms on `P₁P₂` whose
/// restrictions to `Pᵢ` lie in `Fᵢ`.
pub fn central_product_subsystem(f: &FusionSystem, f1: &FusionSystem, f2: &FusionSystem) -> Result<FusionSystem> {
    if !centralize_each_other(f, f1, f2)? {
        return Err(Error::NotCentralizing);
    }
    let amb = f.amb();
    let (s1, s2) = (f1.support(), f2.support());
    let t = amb.product(s1, s2).ok_or(Error::NotCentralizing)?;
    let mut seeds = BTreeSet::new();
    for p1 in amb.subgroups_of(s1) {
        for p2 in amb.subgroups_of(s2) {
            let p = amb.product(p1, p2).expect("P1 and P2 commute");
            for psi in f.homs_from(p) {
                if amb.le(psi.img(), t)
                    && f1.contains(&psi.restrict(amb, p1))
                    && f2.contains(&psi.restrict(amb, p2))
                {
                    seeds.insert(psi.clone());
                }
            }
        }
    }
    Ok(FusionSystem::generated(f.ambient(), t, seeds, format!("{}*{}", f1.name(), f2.name())))
}

/// The multiplication map `S₁ × S₂ → S`, `(x₁, x₂) ↦ x₁x₂`.
fn multiplication_map(dp: &DirectProduct, target: &Ambient) -> Vec<Pos> {
    (0..dp.system.amb().size() as Pos)
        .map(|z| {
            let (x, y) = dp.pair(z);
            target.mul(x, y)
        })
        .collect()
}

/// Is `d` the central product of `f1` and `f2`? Checks that
/// `S₁ ∩ S₂ ≤ Z(Fᵢ)`, that multiplication induces an epimorphism
/// `F₁ × F₂ → D`, and that the canonical images map onto the factors.
pub fn is_central_product(d: &FusionSystem, f1: &FusionSystem, f2: &FusionSystem, lattice_cap: usize) -> Result<bool> {
    let amb = d.amb();
    let (s1, s2) = (f1.support(), f2.support());
    let inter = amb.meet(s1, s2);
    if !amb.le(inter, f1.center_subgroup()?) || !amb.le(inter, f2.center_subgroup()?) {
        return Ok(false);
    }
    if !amb.le(s1, amb.centralizer(s2)) || amb.product(s1, s2) != Some(d.support()) {
        return Ok(false);
    }
    let dp = DirectProduct::new(f1, f2, lattice_cap)?;
    let alpha = multiplication_map(&dp, amb);
    let Some(functor) = induces_morphism(&alpha, &dp.system, d) else {
        return Ok(false);
    };
    if !functor.is_epimorphism(&dp.system, d) {
        return Ok(false);
    }
    for (i, fi) in [f1, f2].into_iter().enumerate() {
        if !functor.image_of(&dp.canonical_image(i)?, d).same_morphisms(fi) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is there a subsystem of `f` that is a central product of `f1` and
/// `f2`? Any such subsystem is the image of `F₁ × F₂` under
/// multiplication, so it suffices to test that image.
pub fn has_central_product(f: &FusionSystem, f1: &FusionSystem, f2: &FusionSystem, lattice_cap: usize) -> Result<bool> {
    let amb = f.amb();
    let (s1, s2) = (f1.support(), f2.support());
    if !amb.le(s1, amb.centralizer(s2)) {
        return Ok(false);
    }
    // a central product needs S₁ ∩ S₂ central in both factors; testing it
    // first avoids building F₁ × F₂ when the answer is already no
    let inter = amb.meet(s1, s2);
    if !amb.le(inter, f1.center_subgroup()?) || !amb.le(inter, f2.center_subgroup()?) {
        return Ok(false);
    }
    let dp = DirectProduct::new(f1, f2, lattice_cap)?;
    let alpha = multiplication_map(&dp, amb);
    let Some(functor) = induces_morphism(&alpha, &dp.system, f) else {
        return Ok(false);
    };
    let d = functor.image_of(&dp.system, f);
    is_central_product(&d, f1, f2, lattice_cap)
}

/// Check ids reported by [`ProductReport::failures`].
pub const PRODUCT_IDS: &[&str] = &[
    "L:F1F2Centralize",
    "P:F1F2Centralize",
    "NormalCentralizeEachOther",
    "MainCentralProduct",
    "RadicalIntersect",
    "ZCentralize",
];

/// Evidence for the central product theorems on one pair of normal
/// subsystems with commuting supports.
#[derive(Clone, Debug, Serialize)]
pub struct ProductReport {
    pub centralize: bool,
    /// `S₁ ∩ S₂ ≤ Z(Fᵢ)`
    pub intersection_central: [bool; 2],
    /// `Fᵢ ⊆ C_F(S_{3-i})`
    pub contained_in_centralizer: [bool; 2],
    /// `None` when `F₁ × F₂` is too large to build
    pub has_central_product: Option<bool>,
    pub product_saturated: Option<bool>,
    pub product_normal: Option<bool>,
    pub product_is_central: Option<bool>,
    /// a centric radical subgroup where `R ∩ T ≠ (R ∩ S₁)(R ∩ S₂)`
    pub radical_intersect_failure: Option<SubId>,
    /// an automorphism of `Sᵢ` without the extension promised when
    /// `S₁ ∩ S₂ ≤ Z(Fᵢ)`
    pub zcentralize_failure: Option<Morphism>,
}

impl ProductReport {
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.centralize != (self.intersection_central[0] && self.intersection_central[1]) {
            out.push("NormalCentralizeEachOther");
        }
        for i in 0..2 {
            if self.contained_in_centralizer[i] && !self.intersection_central[i] {
                out.push("L:F1F2Centralize");
            }
        }
        let cp_differs = self.has_central_product.is_some_and(|h| h != self.centralize);
        if cp_differs || self.product_saturated == Some(false) {
            out.push("P:F1F2Centralize");
        }
        if self.product_normal == Some(false) || self.product_is_central == Some(false) {
            out.push("MainCentralProduct");
        }
        if self.radical_intersect_failure.is_some() {
            out.push("RadicalIntersect");
        }
        if self.zcentralize_failure.is_some() {
            out.push("ZCentralize");
        }
        out
    }
}

/// `Ok(None)` in place of a cap error.
fn capped<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn verify_product_theorems(f: &FusionSystem, f1: &FusionSystem, f2: &FusionSystem, lattice_cap: usize) -> Result<ProductReport> {
    let amb = f.amb();
    let (s1, s2) = (f1.support(), f2.support());
    if !amb.le(s1, amb.centralizer(s2)) {
        return Err(Error::DomainMismatch("supports do not commute"));
    }
    let t = amb.product(s1, s2).expect("commuting subgroups");
    let inter = amb.meet(s1, s2);
    let intersection_central = [amb.le(inter, f1.center_subgroup()?), amb.le(inter, f2.center_subgroup()?)];
    let contained_in_centralizer = [
        f1.is_subsystem_of(&f.centralizer_subsystem(s2)?),
        f2.is_subsystem_of(&f.centralizer_subsystem(s1)?),
    ];
    let centralize = contained_in_centralizer[0] && contained_in_centralizer[1];
    let has_cp = capped(has_central_product(f, f1, f2, lattice_cap))?;
    let (mut product_saturated, mut product_normal, mut product_is_central) = (None, None, None);
    if centralize {
        let d = central_product_subsystem(f, f1, f2)?;
        product_saturated = Some(d.is_saturated());
        product_normal = Some(is_normal(f, &d)?.normal);
        product_is_central = capped(is_central_product(&d, f1, f2, lattice_cap))?;
    }
    let class = f.classify();
    let radical_intersect_failure = class
        .subgroups
        .iter()
        .filter(|(_, fl)| fl.centric && fl.radical)
        .map(|&(r, _)| r)
        .find(|&r| Some(amb.meet(r, t)) != amb.product(amb.meet(r, s1), amb.meet(r, s2)));
    let mut zcentralize_failure = None;
    for (i, (fi, sj)) in [(f1, s2), (f2, s1)].into_iter().enumerate() {
        if !intersection_central[i] {
            continue;
        }
        let si = fi.support();
        let c = amb.centralizer_in(f.support(), si);
        let u = amb.product(si, c).expect("C_S(Si) normalizes Si");
        for beta in fi.auts(si) {
            let ok = f.extensions(&beta, u).any(|hat| {
                hat.img() == u
                    && hat.fixes(amb, sj)
                    && amb
                        .members(c)
                        .iter()
                        .all(|&x| amb.contains_elem(si, amb.mul(amb.inv(x), hat.apply(x))))
            });
            if !ok {
                zcentralize_failure = Some(beta);
                break;
            }
        }
    }
    Ok(ProductReport {
        centralize,
        intersection_central,
        contained_in_centralizer,
        has_central_product: has_cp,
        product_saturated,
        product_normal,
        product_is_central,
        radical_intersect_failure,
        zcentralize_failure,
    })
}
