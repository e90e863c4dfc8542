//! The centralizer of a normal subsystem: the subgroup `C_S(E)`, the
//! subgroup `R*` read off a model, and the subsystem `C_F(E)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{AutGroup, FusionSystem, Morphism, SubId, NO_ELEM};
use crate::group::Subgroup;
use crate::models::{self, Model};
use crate::subsystems::is_normal;

/// Everything computed about the centralizer of one normal pair.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerData {
    /// `𝒳`: subgroups `X ≤ C_S(T)` with `E ⊆ C_F(X)`
    pub centralized: Vec<SubId>,
    pub c_s_e: SubId,
    pub r_star: SubId,
    pub model_order: usize,
    pub normal_model_order: usize,
    #[serde(skip)]
    pub model: Model,
    #[serde(skip)]
    pub normal_model: Subgroup,
}

impl CentralizerData {
    pub fn compute(f: &FusionSystem, e: &FusionSystem) -> Result<Self> {
        let centralized = centralized_set(f, e)?;
        let c_s_e = join_checked(f, e, &centralized)?;
        let (r_star, model, normal_model) = r_star(f, e)?;
        if !f.amb().le(c_s_e, r_star) {
            return Err(Error::alarm("MainCSE.b", "C_S(E) is not contained in R*"));
        }
        Ok(CentralizerData {
            centralized,
            c_s_e,
            r_star,
            model_order: model.group.order(),
            normal_model_order: normal_model.order(),
            model,
            normal_model,
        })
    }
}

/// `E ⊆ C_F(X)`, decided on full hom-sets.
pub fn centralizes(f: &FusionSystem, e: &FusionSystem, x: SubId) -> Result<bool> {
    let amb = f.amb();
    if !amb.le(e.support(), amb.centralizer(x)) {
        return Ok(false);
    }
    Ok(e.is_subsystem_of(&f.centralizer_subsystem(x)?))
}

/// `E ⊆ C_F(X)`, decided on the automorphism groups of an Alperin family
/// of `E`, which generate `E` when `E` is saturated.
pub fn centralizes_by_generators(f: &FusionSystem, e: &FusionSystem, x: SubId) -> bool {
    let amb = f.amb();
    if !amb.le(e.support(), amb.centralizer(x)) {
        return false;
    }
    e.alperin_family().into_iter().all(|r| {
        let rx = amb.product(r, x).expect("R centralizes X");
        let exts = f.homs_from(rx);
        e.auts(r)
            .iter()
            .all(|a| exts.iter().any(|psi| psi.fixes(amb, x) && psi.extends(amb, a)))
    })
}

/// The set `𝒳`, in canonical order. Both containment tests must agree.
pub fn centralized_set(f: &FusionSystem, e: &FusionSystem) -> Result<Vec<SubId>> {
    let amb = f.amb();
    let c = amb.centralizer_in(f.support(), e.support());
    let mut out = Vec::new();
    for x in amb.subgroups_of(c) {
        let full = centralizes(f, e, x)?;
        if full != centralizes_by_generators(f, e, x) {
            return Err(Error::alarm(
                "MainCSE",
                format!("containment tests disagree on {}", amb.describe(x)),
            ));
        }
        if full {
            out.push(x);
        }
    }
    Ok(out)
}

fn join_checked(f: &FusionSystem, e: &FusionSystem, set: &[SubId]) -> Result<SubId> {
    let amb = f.amb();
    let r = set.iter().fold(amb.trivial(), |acc, &x| amb.join(acc, x));
    if !set.contains(&r) {
        return Err(Error::alarm("MainCSE.a", "the join of X is not in X"));
    }
    if !f.is_strongly_closed(r) {
        return Err(Error::alarm("MainCSE.a", format!("{} is not strongly closed", amb.describe(r))));
    }
    debug_assert!(set.iter().all(|&x| amb.le(x, r)));
    let _ = e;
    Ok(r)
}

/// `C_S(E)`: the join of `𝒳`, checked to lie in `𝒳` and to be strongly closed.
pub fn c_s_of(f: &FusionSystem, e: &FusionSystem) -> Result<SubId> {
    join_checked(f, e, &centralized_set(f, e)?)
}

/// `C_S(E)` by brute force: the largest `X ≤ C_S(T)` with `E ⊆ C_F(X)`,
/// found by testing every subgroup from the top of the lattice down.
pub fn c_s_brute_force(f: &FusionSystem, e: &FusionSystem) -> Result<SubId> {
    let amb = f.amb();
    let c = amb.centralizer_in(f.support(), e.support());
    let mut best: Option<SubId> = None;
    for x in amb.subgroups_of(c) {
        if centralizes(f, e, x)? {
            match best {
                Some(b) if amb.order(b) >= amb.order(x) => {
                    if !amb.le(x, b) && amb.order(b) == amb.order(x) {
                        return Err(Error::NotUnique);
                    }
                }
                _ => best = Some(x),
            }
        }
    }
    best.ok_or(Error::NotFound)
}

/// `[P, φ] ≤ U`, i.e. `φ` acts trivially on `P/U` (for `U` normalized by `P`).
fn commutes_into(f: &FusionSystem, phi: &Morphism, u: SubId) -> bool {
    let amb = f.amb();
    amb.members(phi.dom())
        .iter()
        .all(|&x| amb.contains_elem(u, amb.mul(amb.inv(x), phi.apply(x))))
}

fn checked_subgroup(ag: &AutGroup, keep: impl Fn(&Morphism) -> bool, what: &'static str) -> Result<Subgroup> {
    let members: Vec<usize> = (0..ag.order()).filter(|&i| keep(ag.elem(i))).collect();
    let h = ag.group().generate(members.iter().copied());
    if h.order() != members.len() {
        return Err(Error::alarm(what, "the automorphism set is not a subgroup"));
    }
    Ok(h)
}

/// `A°(P)`: automorphisms `φ` of `P` with `[P, φ] ≤ P ∩ T` restricting to
/// an `E`-automorphism of `P ∩ T`, as a subgroup of `Aut_F(P)`.
pub fn a_circle(f: &FusionSystem, e: &FusionSystem, ag: &AutGroup, p: SubId) -> Result<Subgroup> {
    let amb = f.amb();
    let pt = amb.meet(p, e.support());
    let h = checked_subgroup(
        ag,
        |phi| commutes_into(f, phi, pt) && e.contains(&phi.restrict(amb, pt)),
        "A°",
    )?;
    if !ag.group().is_normal(&h) {
        return Err(Error::alarm("FrattiniCons", "A°(P) is not normal in Aut_F(P)"));
    }
    Ok(h)
}

/// `H(P)`: automorphisms of `P` that extend to an automorphism of `P N_T(P)`.
pub fn h_group(f: &FusionSystem, e: &FusionSystem, ag: &AutGroup, p: SubId) -> Result<Subgroup> {
    let amb = f.amb();
    let pn = amb
        .product(p, amb.normalizer_in(e.support(), p))
        .expect("N_T(P) normalizes P");
    let exts = f.homs_from(pn);
    checked_subgroup(
        ag,
        |phi| exts.iter().any(|psi| psi.img() == pn && psi.extends(amb, phi)),
        "H",
    )
}

/// Writes `φ ∈ Aut_F(P)` as `γ` followed by `β` with `γ ∈ H(P)` and
/// `β ∈ A°(P)`.
pub fn frattini_factorize(f: &FusionSystem, e: &FusionSystem, p: SubId, phi: &Morphism) -> Result<(Morphism, Morphism)> {
    let amb = f.amb();
    let ag = f.aut_group(p);
    let target = ag.index_of(phi).ok_or(Error::MorphismNotInSystem)?;
    let a = a_circle(f, e, &ag, p)?;
    let h = h_group(f, e, &ag, p)?;
    let g = ag.group();
    for &gamma in h.members() {
        let beta = g.mul(g.inv(gamma), target);
        if a.contains(beta) {
            let (gm, bm) = (ag.elem(gamma).clone(), ag.elem(beta).clone());
            debug_assert_eq!(&gm.then(amb, &bm), phi);
            return Ok((gm, bm));
        }
    }
    Err(Error::alarm("FrattiniCons", format!("no factorization of {}", phi.describe(amb))))
}

/// `R* = C_S(N)` for a model `G` of `𝒢` and the normal model `N` of
/// `N_E(T)`. Returns the model and `N` alongside.
pub fn r_star(f: &FusionSystem, e: &FusionSystem) -> Result<(SubId, Model, Subgroup)> {
    let g = models::script_g(f, e)?;
    let model = models::model_of(&g)?;
    let ne = e.normalizer_subsystem(e.support())?;
    let n = models::normal_model(&g, &model, &ne)?;
    let r = centralizer_of_normal_model(f, &model, &n)?;
    if let Some(x) = first_characterization_failure(f, &ne, r)? {
        return Err(Error::alarm(
            "FirstCharacterization",
            format!("N_E(T) ⊆ C_F(X) disagrees with X ≤ R* at {}", f.amb().describe(x)),
        ));
    }
    Ok((r, model, n))
}

fn centralizer_of_normal_model(f: &FusionSystem, model: &Model, n: &Subgroup) -> Result<SubId> {
    let amb = f.amb();
    let mg = &model.group;
    if amb.members(f.support()).iter().any(|&x| model.sigma[x as usize] == NO_ELEM) {
        return Err(Error::alarm("GN", "the model of 𝒢 does not contain S"));
    }
    let mask = amb
        .members(f.support())
        .iter()
        .filter(|&&x| {
            let s = model.sigma[x as usize];
            n.members().iter().all(|&y| mg.mul(s, y) == mg.mul(y, s))
        })
        .fold(0u128, |acc, &x| acc | 1u128 << x);
    amb.id_of_mask(mask)
        .ok_or_else(|| Error::alarm("MainCSE.b", "C_S(N) is not a subgroup"))
}

/// `R*` recomputed from every model the artifact can build (one per
/// normal centric subgroup of `𝒢`). All values must agree.
pub fn r_star_all_models(f: &FusionSystem, e: &FusionSystem) -> Result<Vec<SubId>> {
    let g = models::script_g(f, e)?;
    let ne = e.normalizer_subsystem(e.support())?;
    models::all_models(&g)?
        .iter()
        .map(|m| centralizer_of_normal_model(f, m, &models::normal_model(&g, m, &ne)?))
        .collect()
}

/// First `X ≤ C_S(T)` where `N_E(T) ⊆ C_F(X)` and `X ≤ R*` disagree.
pub fn first_characterization_failure(f: &FusionSystem, ne: &FusionSystem, r: SubId) -> Result<Option<SubId>> {
    let amb = f.amb();
    let c = amb.centralizer_in(f.support(), ne.support());
    for x in amb.subgroups_of(c) {
        if centralizes(f, ne, x)? != amb.le(x, r) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn commutator_join(f: &FusionSystem, residual: bool) -> SubId {
    let amb = f.amb();
    let mut gens = Vec::new();
    for p in f.subgroups() {
        let ag = f.aut_group(p);
        let auts = if residual {
            ag.morphisms(&ag.group().op_residual(f.prime()))
        } else {
            ag.elems().to_vec()
        };
        for a in &auts {
            for &x in amb.members(p) {
                gens.push(amb.mul(amb.inv(x), a.apply(x)));
            }
        }
    }
    amb.generated(gens)
}

/// The focal subgroup `⟨[P, Aut(P)] : P ≤ support⟩`.
pub fn focal(f: &FusionSystem) -> SubId {
    commutator_join(f, false)
}

/// The hyperfocal subgroup `⟨[P, O^p(Aut(P))] : P ≤ support⟩`.
pub fn hyperfocal(f: &FusionSystem) -> SubId {
    commutator_join(f, true)
}

/// `O^p(Aut_D(P))` as morphisms.
pub fn residual_auts(d: &FusionSystem, p: SubId) -> Vec<Morphism> {
    let ag = d.aut_group(p);
    ag.morphisms(&ag.group().op_residual(d.prime()))
}

/// `C_F(E)`: generated over `R = C_S(E)` by `O^p(Aut_{C_F(T)}(P))` for
/// `P ≤ R`. The focal subgroup of `C_F(T)` is checked to lie in `R`
/// before building, and the result is checked to be normal in `F`.
pub fn c_f_of(f: &FusionSystem, e: &FusionSystem) -> Result<FusionSystem> {
    let amb = f.amb();
    let r = c_s_of(f, e)?;
    let ct = f.centralizer_subsystem(e.support())?;
    if !amb.le(focal(&ct), r) || !amb.le(hyperfocal(&ct), r) {
        return Err(Error::alarm("FocProp", "foc(C_F(T)) is not contained in C_S(E)"));
    }
    let seeds: Vec<Morphism> = amb.subgroups_of(r).flat_map(|p| residual_auts(&ct, p)).collect();
    let cfe = FusionSystem::generated(f.ambient(), r, seeds, "C_F(E)");
    let report = is_normal(f, &cfe)?;
    if !report.normal {
        return Err(Error::alarm("MainCFE", format!("C_F(E) is not normal: {:?}", report.counterexample)));
    }
    Ok(cfe)
}

/// For every `P` fully normalized and centric in `C_F(E)`:
/// `Aut(P) = O^p(Aut_{C_F(T)}(P)) · Aut_{C_S(E)}(P)`. Returns the first
/// failing subgroup.
pub fn coincide_failure(f: &FusionSystem, e: &FusionSystem, cfe: &FusionSystem) -> Result<Option<SubId>> {
    let ct = f.centralizer_subsystem(e.support())?;
    let r = cfe.support();
    for p in cfe.subgroups() {
        if !(cfe.is_fully_normalized(p) && cfe.is_centric(p)) {
            continue;
        }
        let ag = ct.aut_group(p);
        let g = ag.group();
        let res = g.op_residual(f.prime());
        let inner = ag.conjugation_by(f.amb(), p, r).expect("R-conjugation lies in C_F(T)");
        let prod = g.join(&res, &inner);
        let mut lhs: Vec<Morphism> = cfe.auts(p);
        let mut rhs = ag.morphisms(&prod);
        lhs.sort();
        rhs.sort();
        if lhs != rhs {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

pub fn coincide_check(f: &FusionSystem, e: &FusionSystem, cfe: &FusionSystem) -> Result<bool> {
    Ok(coincide_failure(f, e, cfe)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsystems::normal_subsystem_from_group;
    use crate::testing::*;

    fn a4_in_s4() -> (FusionSystem, FusionSystem) {
        let f = s4_at_2();
        let g = f.amb().embedding().unwrap().group.clone();
        let e = normal_subsystem_from_group(&f, &span(&g, &["(1 2 3)", "(1 2)(3 4)"])).unwrap();
        (f, e)
    }

    #[test]
    fn s4_with_a4() {
        let (f, e) = a4_in_s4();
        let amb = f.amb();
        assert_eq!(centralized_set(&f, &e).unwrap(), vec![amb.trivial()]);
        assert_eq!(c_s_of(&f, &e).unwrap(), amb.trivial());
        assert_eq!(c_s_brute_force(&f, &e).unwrap(), amb.trivial());
        let (r, model, n) = r_star(&f, &e).unwrap();
        assert_eq!((r, model.group.order(), n.order()), (amb.trivial(), 24, 12));
        assert_eq!(r_star_all_models(&f, &e).unwrap().iter().filter(|&&x| x != r).count(), 0);
        let cfe = c_f_of(&f, &e).unwrap();
        assert_eq!(cfe.support(), amb.trivial());
        assert!(coincide_check(&f, &e, &cfe).unwrap());
        assert_eq!(c_s_of(&f, &f).unwrap(), amb.trivial());
    }

    #[test]
    fn focal_subgroups() {
        let f = s4_at_2();
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(focal(&f), v4);
        assert_eq!(hyperfocal(&f), v4);
        let c4 = perm_group("C4", 4, &["(1 2 3 4)"]);
        let fc = system(&c4, 2, &["(1 2 3 4)"]);
        assert_eq!(focal(&fc), fc.amb().trivial());
        let d8 = perm_group("D8", 4, &["(1 2 3 4)", "(1 3)"]);
        let fd = system(&d8, 2, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(fd.amb().order(focal(&fd)), 2);
        assert_eq!(hyperfocal(&fd), fd.amb().trivial());
    }

    #[test]
    fn automorphism_factorization() {
        let (f, e) = a4_in_s4();
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let ag = f.aut_group(v4);
        let a = a_circle(&f, &e, &ag, v4).unwrap();
        let h = h_group(&f, &e, &ag, v4).unwrap();
        assert_eq!((ag.order(), a.order(), h.order()), (6, 3, 6));
        for phi in f.auts(v4) {
            let (g, b) = frattini_factorize(&f, &e, v4, &phi).unwrap();
            assert_eq!(g.then(f.amb(), &b), phi);
        }
        let whole = f.support();
        let ag = f.aut_group(whole);
        assert_eq!(h_group(&f, &e, &ag, whole).unwrap().order(), ag.order());
    }

    #[test]
    fn product_with_central_factor() {
        let g = perm_group("S4xC2", 6, &["(1 2 3 4)", "(1 2)", "(5 6)"]);
        let f = system(&g, 2, &["(1 2 3 4)", "(1 3)", "(5 6)"]);
        let e = normal_subsystem_from_group(&f, &span(&g, &["(1 2 3 4)", "(1 2)"])).unwrap();
        let c2 = sub(&f, &["(5 6)"]);
        assert_eq!(c_s_of(&f, &e).unwrap(), c2);
        let cfe = c_f_of(&f, &e).unwrap();
        assert_eq!(cfe.support(), c2);
        assert_eq!(cfe.morphism_count(), 2);
        assert!(coincide_check(&f, &e, &cfe).unwrap());
        // N_E(T) is the inner system of D8, so R* is all of C_S(T)
        let (r, _, _) = r_star(&f, &e).unwrap();
        assert_eq!(r, f.amb().centralizer_in(f.support(), e.support()));
        assert_eq!(f.amb().order(r), 4);
    }
}
