//! Constrained fusion systems and their models.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fusion::{Embedding, FusionSystem, SubId, NO_ELEM};
use crate::group::{find_isomorphism, p_part, Elem, FiniteGroup, QuotientGroup, Subgroup};

/// A finite group `M` with an embedding `σ` of the support of a fusion
/// system onto a Sylow subgroup of `M`.
#[derive(Clone, Debug)]
pub struct Model {
    pub group: FiniteGroup,
    /// position → element of `M` (`NO_ELEM` off the support)
    pub sigma: Vec<Elem>,
    pub provenance: String,
}

impl Model {
    pub fn embedding(&self) -> Arc<Embedding> {
        Arc::new(Embedding::new(self.group.clone(), self.sigma.clone()))
    }

    /// `P^σ`.
    pub fn image(&self, f: &FusionSystem, p: SubId) -> Subgroup {
        self.group.generate(f.amb().members(p).iter().map(|&x| self.sigma[x as usize]))
    }
}

/// Constrainedness with `O_p(F)` as witness: `F` is constrained iff its
/// largest normal subgroup is centric.
pub fn is_constrained(f: &FusionSystem) -> Result<(bool, SubId)> {
    let q = f.largest_normal_subgroup()?;
    let amb = f.amb();
    Ok((amb.le(amb.centralizer_in(f.support(), q), q), q))
}

/// `N_H(Q) / O_{p'}(N_H(Q))` for a normal centric subgroup `Q` of a
/// system realized by `H`, verified to be a model.
pub fn model_from(f: &FusionSystem, q: SubId) -> Result<Model> {
    let r = f.realizer().ok_or(Error::NotRealized)?;
    let g = &r.emb.group;
    let amb = f.amb();
    let qe = r.emb.image(amb, q);
    let n = g.normalizer_in(&r.host, &qe);
    let (ng, emb) = g.subgroup_group(&n);
    let core = ng.op_prime_core(f.prime());
    let quot = QuotientGroup::new(&ng, &core)?;
    let mut sigma = vec![NO_ELEM; amb.size()];
    for &x in amb.members(f.support()) {
        let ge = r.emb.elems[x as usize];
        let i = emb.binary_search(&ge).map_err(|_| Error::alarm("Model1", "S is not inside N_H(Q)"))?;
        sigma[x as usize] = quot.project(i);
    }
    let mut group = quot.quotient().clone();
    group.set_name(format!("N({})/O_p'", amb.order(q)));
    let model = Model {
        group,
        sigma,
        provenance: format!(
            "N_H(Q)/O_p'(N_H(Q)) with |H| = {}, |Q| = {}, |O_p'| = {}",
            r.host.order(),
            amb.order(q),
            core.order()
        ),
    };
    verify_model(f, &model)?;
    Ok(model)
}

/// A model of a constrained system realized by a finite group.
pub fn model_of(f: &FusionSystem) -> Result<Model> {
    let (constrained, q) = is_constrained(f)?;
    if !constrained {
        return Err(Error::NotConstrained);
    }
    model_from(f, q)
}

/// Checks the three defining properties of a model.
pub fn verify_model(f: &FusionSystem, m: &Model) -> Result<()> {
    let amb = f.amb();
    let t = f.support();
    let fail = |what: &str| Err(Error::VerificationFailed(format!("model check: {what}")));
    let members = amb.members(t);
    let mut seen = std::collections::HashSet::new();
    for &x in members {
        if !seen.insert(m.sigma[x as usize]) {
            return fail("sigma is not injective");
        }
        for &y in members {
            if m.sigma[amb.mul(x, y) as usize] != m.group.mul(m.sigma[x as usize], m.sigma[y as usize]) {
                return fail("sigma is not a homomorphism");
            }
        }
    }
    if members.len() != p_part(m.group.order(), f.prime()) {
        return fail("image of sigma is not Sylow");
    }
    let emb = m.embedding();
    let realized = FusionSystem::realized(f.ambient(), &emb, &m.group.whole(), t)?;
    if !realized.same_morphisms(f) {
        return fail("fusion of the model differs from the system");
    }
    let op = m.group.op_core(f.prime());
    if !m.group.centralizer(&op).is_subgroup_of(&op) {
        return fail("C_M(O_p(M)) is not inside O_p(M)");
    }
    Ok(())
}

/// Models from every normal centric subgroup, `O_p(F)` first.
pub fn all_models(f: &FusionSystem) -> Result<Vec<Model>> {
    let (constrained, op) = is_constrained(f)?;
    if !constrained {
        return Err(Error::NotConstrained);
    }
    let amb = f.amb();
    let mut out = vec![model_from(f, op)?];
    for q in f.subgroups() {
        if q != op && amb.le(amb.centralizer_in(f.support(), q), q) && f.is_normal_subgroup(q) {
            out.push(model_from(f, q)?);
        }
    }
    Ok(out)
}

/// Is there an isomorphism `M₁ → M₂` that is the identity on the
/// support (`σ₁(s) ↦ σ₂(s)`)?
pub fn isomorphic_over_support(f: &FusionSystem, m1: &Model, m2: &Model) -> bool {
    let amb = f.amb();
    let gens = amb.group().generating_set(&amb.subgroup(f.support()));
    let fixed: Vec<(Elem, Elem)> = gens.iter().map(|&x| (m1.sigma[x], m2.sigma[x])).collect();
    match find_isomorphism(&m1.group, &m2.group, &fixed) {
        Some(iso) => amb
            .members(f.support())
            .iter()
            .all(|&x| iso[m1.sigma[x as usize]] == m2.sigma[x as usize]),
        None => false,
    }
}

/// Normal subgroups `P ≤ S` of `F` are exactly those with `P^σ ⊴ M`,
/// and `C_M(Q^σ) ≤ Q^σ` for normal centric `Q`. Returns the first
/// violating subgroup.
pub fn normal_subgroup_correspondence(f: &FusionSystem, m: &Model) -> Option<SubId> {
    let amb = f.amb();
    f.subgroups().into_iter().find(|&p| {
        let pm = m.image(f, p);
        let normal_f = f.is_normal_subgroup(p);
        if normal_f != m.group.is_normal(&pm) {
            return true;
        }
        let centric = amb.le(amb.centralizer_in(f.support(), p), p);
        normal_f && centric && !m.group.centralizer(&pm).is_subgroup_of(&pm)
    })
}

/// Every normal subgroup `N ⊴ M` with `S^σ ∩ N` Sylow in `N` and
/// `F_{S∩N}(N) = E`.
pub fn normal_models(f: &FusionSystem, m: &Model, e: &FusionSystem) -> Result<Vec<Subgroup>> {
    let amb = f.amb();
    let emb = m.embedding();
    let mut found = Vec::new();
    for n in m.group.normal_subgroups() {
        let mask = amb
            .members(f.support())
            .iter()
            .filter(|&&x| n.contains(m.sigma[x as usize]))
            .fold(0u128, |acc, &x| acc | 1u128 << x);
        let Some(t) = amb.id_of_mask(mask) else { continue };
        if t != e.support() || amb.order(t) != p_part(n.order(), f.prime()) {
            continue;
        }
        if FusionSystem::realized(f.ambient(), &emb, &n, t)?.same_morphisms(e) {
            found.push(n);
        }
    }
    Ok(found)
}

/// The unique normal subgroup of the model that is a model for `E`.
pub fn normal_model(f: &FusionSystem, m: &Model, e: &FusionSystem) -> Result<Subgroup> {
    let mut found = normal_models(f, m, e)?;
    match found.len() {
        0 => Err(Error::NotFound),
        1 => Ok(found.pop().expect("one element")),
        _ => Err(Error::NotUnique),
    }
}

/// `𝒢 = N_{N_F(T)}(T C_S(T))` for a subsystem `E` over `T`.
pub fn script_g(f: &FusionSystem, e: &FusionSystem) -> Result<FusionSystem> {
    let amb = f.amb();
    let t = e.support();
    let nt = f.normalizer_subsystem(t)?;
    let tc = amb
        .product(t, amb.centralizer_in(f.support(), t))
        .ok_or_else(|| Error::alarm("GN", "T C_S(T) is not a subgroup"))?;
    Ok(nt.normalizer_subsystem(tc)?.with_name("G"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsystems::normal_subsystem_from_group;
    use crate::testing::*;

    #[test]
    fn constrained_examples() {
        let f = s4_at_2();
        let v4 = sub(&f, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(is_constrained(&f).unwrap(), (true, v4));
        let d8 = perm_group("D8", 4, &["(1 2 3 4)", "(1 3)"]);
        let fs = system(&d8, 2, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(is_constrained(&fs).unwrap(), (true, fs.amb().whole()));
        let a6 = perm_group("A6", 6, &["(1 2 3)", "(2 3 4 5 6)"]);
        assert_eq!(a6.order(), 360);
        let s = a6.sylow_subgroup(2);
        let fa = FusionSystem::of_group(&a6, &s, 2, 1000).unwrap();
        assert!(!is_constrained(&fa).unwrap().0);
        assert!(matches!(model_of(&fa), Err(Error::NotConstrained)));
    }

    #[test]
    fn models() {
        let f = s4_at_2();
        let m = model_of(&f).unwrap();
        assert_eq!(m.group.order(), 24);
        assert!(isomorphic_over_support(&f, &m, &m));
        assert_eq!(normal_subgroup_correspondence(&f, &m), None);
        let all = all_models(&f).unwrap();
        for other in &all {
            assert!(isomorphic_over_support(&f, &m, other));
        }
        let g = f.amb().embedding().unwrap().group.clone();
        let e = normal_subsystem_from_group(&f, &span(&g, &["(1 2 3)", "(1 2)(3 4)"])).unwrap();
        let n = normal_model(&f, &m, &e).unwrap();
        assert_eq!(n.order(), 12);
        assert_eq!(normal_model(&f, &m, &f).unwrap(), m.group.whole());
        let d8 = perm_group("D8", 4, &["(1 2 3 4)", "(1 3)"]);
        let fs = system(&d8, 2, &["(1 2 3 4)", "(1 3)"]);
        assert_eq!(model_of(&fs).unwrap().group.order(), 8);
    }

    #[test]
    fn script_g_examples() {
        let f = s4_at_2();
        let g = f.amb().embedding().unwrap().group.clone();
        let e = normal_subsystem_from_group(&f, &span(&g, &["(1 2 3)", "(1 2)(3 4)"])).unwrap();
        let sg = script_g(&f, &e).unwrap();
        assert_eq!(sg, f);
        assert!(sg.realizer().is_some());
        assert_eq!(script_g(&f, &f).unwrap(), f.normalizer_subsystem(f.support()).unwrap());
    }
}
