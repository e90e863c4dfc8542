use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;

use crate::centralizers::{
    a_circle, c_f_of, c_s_brute_force, centralized_set, coincide_failure, first_characterization_failure, focal,
    h_group, hyperfocal, r_star_all_models,
};
use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, Morphism, SubId};
use crate::models::{self, Model};
use crate::products::{centralize_each_other, verify_product_theorems, PRODUCT_IDS};
use crate::subsystems::{invariance_condition, is_normal, Invariance};

/// What a single check concluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// the property is false; carries a counterexample
    Violation(String),
    /// the computation could not finish
    Failed(Error),
    /// the check has nothing to say about this subject
    NotApplicable,
}

impl Outcome {
    fn from(r: Result<Option<String>>) -> Self {
        match r {
            Ok(None) => Outcome::Pass,
            Ok(Some(c)) => Outcome::Violation(c),
            // an internal cross-check firing is a violation, not a crash
            Err(Error::TheoremViolation { check, detail }) => Outcome::Violation(format!("{check}: {detail}")),
            Err(e) => Outcome::Failed(e),
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Outcome::Violation(_))
    }
}

fn cached<T: Clone>(cell: &OnceCell<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(init).clone()
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    cond.then(msg)
}

/// Per-system state shared by the checks.
pub struct SystemCtx<'a> {
    pub f: &'a FusionSystem,
    pub lattice_cap: usize,
    /// `None` when the system is not constrained
    model: OnceCell<Result<Option<Model>>>,
    centralizers: RefCell<HashMap<SubId, Result<FusionSystem>>>,
}

impl<'a> SystemCtx<'a> {
    pub fn new(f: &'a FusionSystem, lattice_cap: usize) -> Self {
        SystemCtx {
            f,
            lattice_cap,
            model: OnceCell::new(),
            centralizers: RefCell::new(HashMap::new()),
        }
    }

    fn model(&self) -> Result<Option<Model>> {
        cached(&self.model, || match models::model_of(self.f) {
            Ok(m) => Ok(Some(m)),
            Err(Error::NotConstrained) => Ok(None),
            Err(e) => Err(e),
        })
    }

    /// `C_F(X)`, memoized.
    fn c_f(&self, x: SubId) -> Result<FusionSystem> {
        if let Some(c) = self.centralizers.borrow().get(&x) {
            return c.clone();
        }
        let c = self.f.centralizer_subsystem(x);
        self.centralizers.borrow_mut().insert(x, c.clone());
        c
    }

    /// Is `m` a morphism of `C_F(X)`?
    fn in_c_f(&self, m: &Morphism, x: SubId) -> Result<bool> {
        Ok(self.c_f(x)?.contains(m))
    }

    fn subsystem_in_c_f(&self, e: &FusionSystem, x: SubId) -> Result<bool> {
        let amb = self.f.amb();
        if !amb.le(e.support(), amb.centralizer(x)) {
            return Ok(false);
        }
        Ok(e.is_subsystem_of(&self.c_f(x)?))
    }

    pub fn run(&self, id: &str) -> Outcome {
        let r = match id {
            "Saturation" => Ok(self.f.saturation_failure().map(|s| format!("{s:?}"))),
            "FocalOracle" => self.focal_oracle(),
            "Model1.a" => self.model_uniqueness(),
            "Model1.b" => self.model_correspondence(),
            "Finvariant.equiv" => self.invariance_on_inner(),
            _ => return Outcome::NotApplicable,
        };
        Outcome::from(r)
    }

    /// The focal subgroup equals `S ∩ [H, H]` for the realizing group `H`.
    fn focal_oracle(&self) -> Result<Option<String>> {
        let f = self.f;
        let amb = f.amb();
        let r = f.realizer().ok_or(Error::NotRealized)?;
        let g = &r.emb.group;
        let derived = g.commutator_subgroup(&r.host, &r.host);
        let oracle = amb.generated(
            amb.members(f.support())
                .iter()
                .copied()
                .filter(|&x| derived.contains(r.emb.elems[x as usize])),
        );
        let foc = focal(f);
        Ok(fail_if(foc != oracle, || {
            format!("focal subgroup {} but S ∩ [G,G] = {}", amb.describe(foc), amb.describe(oracle))
        }))
    }

    fn model_uniqueness(&self) -> Result<Option<String>> {
        let f = self.f;
        let Some(first) = self.model()? else {
            return Ok(None);
        };
        for m in models::all_models(f)? {
            if !models::isomorphic_over_support(f, &first, &m) {
                return Ok(Some(format!("models {} and {} are not isomorphic over S", first.provenance, m.provenance)));
            }
        }
        Ok(None)
    }

    fn model_correspondence(&self) -> Result<Option<String>> {
        let Some(m) = self.model()? else {
            return Ok(None);
        };
        Ok(models::normal_subgroup_correspondence(self.f, &m)
            .map(|p| format!("normality of {} differs between F and the model", self.f.amb().describe(p))))
    }

    /// The six invariance conditions agree for every inner system `F_T(T)`
    /// with `T` strongly closed.
    fn invariance_on_inner(&self) -> Result<Option<String>> {
        let f = self.f;
        let amb = f.amb();
        for t in f.subgroups() {
            if !f.is_strongly_closed(t) {
                continue;
            }
            let e = FusionSystem::inner(f.ambient(), t);
            if let Some(c) = invariance_disagreement(f, &e, false)? {
                return Ok(Some(format!("inner system on {}: {c}", amb.describe(t))));
            }
        }
        Ok(None)
    }
}

fn invariance_disagreement(f: &FusionSystem, e: &FusionSystem, must_hold: bool) -> Result<Option<String>> {
    let vals = Invariance::ALL
        .into_iter()
        .map(|w| invariance_condition(f, e, w))
        .collect::<Result<Vec<bool>>>()?;
    if vals.iter().any(|&v| v != vals[0]) || (must_hold && !vals[0]) {
        return Ok(Some(format!("conditions (a)-(f) evaluate to {vals:?}")));
    }
    Ok(None)
}

/// Per normal pair `(F, E)` state shared by the checks.
pub struct PairCtx<'a> {
    pub sys: &'a SystemCtx<'a>,
    pub e: &'a FusionSystem,
    /// the normal subsystems of `F`, used to quantify over subsystems `D`
    pub normals: &'a [FusionSystem],
    centralized: OnceCell<Result<Vec<SubId>>>,
    cfe: OnceCell<Result<FusionSystem>>,
    ne: OnceCell<Result<FusionSystem>>,
}

impl<'a> PairCtx<'a> {
    pub fn new(sys: &'a SystemCtx<'a>, e: &'a FusionSystem, normals: &'a [FusionSystem]) -> Self {
        PairCtx {
            sys,
            e,
            normals,
            centralized: OnceCell::new(),
            cfe: OnceCell::new(),
            ne: OnceCell::new(),
        }
    }

    fn f(&self) -> &FusionSystem {
        self.sys.f
    }

    fn t(&self) -> SubId {
        self.e.support()
    }

    /// `C_S(T)`.
    fn c_s_t(&self) -> SubId {
        let amb = self.f().amb();
        amb.centralizer_in(self.f().support(), self.t())
    }

    /// `T C_S(T)`.
    fn t_c_s_t(&self) -> SubId {
        self.f().amb().product(self.t(), self.c_s_t()).expect("C_S(T) normalizes T")
    }

    /// `𝒳`.
    fn centralized(&self) -> Result<Vec<SubId>> {
        cached(&self.centralized, || centralized_set(self.f(), self.e))
    }

    fn c_s_e(&self) -> Result<SubId> {
        let amb = self.f().amb();
        Ok(self.centralized()?.iter().fold(amb.trivial(), |acc, &x| amb.join(acc, x)))
    }

    /// `C_F(E)`.
    pub fn cfe(&self) -> Result<FusionSystem> {
        cached(&self.cfe, || c_f_of(self.f(), self.e))
    }

    /// `N_E(T)`.
    fn ne(&self) -> Result<FusionSystem> {
        cached(&self.ne, || self.e.normalizer_subsystem(self.t()))
    }

    pub fn run(&self, id: &str) -> Outcome {
        let r = match id {
            "Model1.c" => match self.sys.model() {
                Ok(None) => return Outcome::NotApplicable,
                _ => self.normal_model_unique(),
            },
            "Finvariant.equiv" => invariance_disagreement(self.f(), self.e, true),
            "FfEf" => Ok(self.ff_ef()),
            "Wellknown" => Ok(self.wellknown()),
            "LocalNormalSubsystems" => self.local_normal(),
            "PropHelp" => self.prop_help(),
            "EasyCentralizer" => self.easy_centralizer(),
            "FrattiniCons" => self.frattini_cons(),
            "XInvariant" => self.x_invariant(),
            "WeaklyClosedCentralized" => self.weakly_closed_centralized(),
            "GN" => self.gn(),
            "CFCG0" => self.cfcg0(),
            "FirstCharacterization" => self.first_characterization(),
            "MainCSE.a" => self.main_cse_a(),
            "MainCSE.b" => self.main_cse_b(),
            "MainCSE.c" => self.main_cse_c(),
            "CSEBruteForce" => self.cse_brute_force(),
            "FocProp" => self.foc_prop(),
            "ShowWeaklyNormal" => self.cfe_normality(true),
            "CFENormal" => self.cfe_normality(false),
            "MainCFE" => self.main_cfe(),
            "Coincide" => self.coincide(),
            _ => return Outcome::NotApplicable,
        };
        Outcome::from(r)
    }

    fn normal_model_unique(&self) -> Result<Option<String>> {
        let m = self.sys.model()?.expect("checked by the caller");
        let found = models::normal_models(self.f(), &m, self.e)?;
        Ok(fail_if(found.len() != 1, || {
            format!("{} normal subgroups of the model realize E", found.len())
        }))
    }

    /// Subgroups of `T` fully normalized in `F` are fully normalized in `E`.
    fn ff_ef(&self) -> Option<String> {
        let (f, e) = (self.f(), self.e);
        e.subgroups()
            .into_iter()
            .find(|&p| f.is_fully_normalized(p) && !e.is_fully_normalized(p))
            .map(|p| format!("{} is fully F-normalized but not fully E-normalized", f.amb().describe(p)))
    }

    /// `E^{cr}` is closed under `F`-conjugation.
    fn wellknown(&self) -> Option<String> {
        let (f, e) = (self.f(), self.e);
        let amb = f.amb();
        let cr = |p: SubId| e.is_centric(p) && e.is_radical(p);
        for p in e.subgroups().into_iter().filter(|&p| cr(p)) {
            for q in f.class_of(p) {
                if !amb.le(q, self.t()) || !cr(q) {
                    return Some(format!(
                        "{} is E-centric radical but its F-conjugate {} is not",
                        amb.describe(p),
                        amb.describe(q)
                    ));
                }
            }
        }
        None
    }

    /// `N_E(Q) ⊴ N_F(Q)` for `Q ≤ T` fully normalized in `F`.
    fn local_normal(&self) -> Result<Option<String>> {
        let (f, e) = (self.f(), self.e);
        for q in e.subgroups() {
            if !f.is_fully_normalized(q) {
                continue;
            }
            let r = is_normal(&f.normalizer_subsystem(q)?, &e.normalizer_subsystem(q)?)?;
            if !r.normal {
                return Ok(Some(format!(
                    "N_E(Q) is not normal in N_F(Q) for Q = {}: {}",
                    f.amb().describe(q),
                    r.counterexample.unwrap_or_default()
                )));
            }
        }
        Ok(None)
    }

    fn prop_help(&self) -> Result<Option<String>> {
        let (f, e) = (self.f(), self.e);
        let amb = f.amb();
        let ct = self.c_s_t();
        for x in f.subgroups() {
            let q = amb.meet(x, self.t());
            let bound = amb.product(q, ct).expect("C_S(T) centralizes Q");
            if !(f.is_fully_normalized(x) && f.is_fully_normalized(q) && e.is_centric(q) && amb.le(x, bound)) {
                continue;
            }
            let xc = amb.product(x, amb.centralizer_in(f.support(), x)).expect("C_S(X) normalizes X");
            let fx = f.normalizer_subsystem(x)?.normalizer_subsystem(xc)?;
            let here = || amb.describe(x);
            if !fx.is_saturated() {
                return Ok(Some(format!("N_N(X)(XC_S(X)) is not saturated for X = {}", here())));
            }
            if !models::is_constrained(&fx)?.0 {
                return Ok(Some(format!("N_N(X)(XC_S(X)) is not constrained for X = {}", here())));
            }
            let r = is_normal(&fx, &e.normalizer_subsystem(q)?)?;
            if !r.normal {
                return Ok(Some(format!(
                    "N_E(X ∩ T) is not normal in N_N(X)(XC_S(X)) for X = {}: {}",
                    here(),
                    r.counterexample.unwrap_or_default()
                )));
            }
        }
        Ok(None)
    }

    /// All three parts, for every `X ≤ C_S(T)` and `φ ∈ Hom_F(XT, S)`.
    fn easy_centralizer(&self) -> Result<Option<String>> {
        let f = self.f();
        let amb = f.amb();
        let ct = self.c_s_t();
        let xs = self.centralized()?;
        let ne = self.ne()?;
        let e_maps: Vec<&Morphism> = self.e.all_morphisms().collect();
        for x in amb.subgroups_of(ct) {
            let xt = amb.product(x, self.t()).expect("X centralizes T");
            let x_in = xs.contains(&x);
            let ne_in = self.sys.subsystem_in_c_f(&ne, x)?;
            for phi in f.homs_from(xt) {
                let y = phi.image_of(amb, x);
                let at = || format!("X = {}, φ = {}", amb.describe(x), phi.describe(amb));
                if !amb.le(y, ct) {
                    return Ok(Some(format!("(a) X^φ leaves C_S(T) at {}", at())));
                }
                for beta in &e_maps {
                    let moved = beta.conjugate_by(amb, phi)?;
                    if self.sys.in_c_f(beta, x)? != self.sys.in_c_f(&moved, y)? {
                        return Ok(Some(format!("(a) fails for β = {} at {}", beta.describe(amb), at())));
                    }
                }
                if x_in && !xs.contains(&y) {
                    return Ok(Some(format!("(b) X^φ is not in 𝒳 at {}", at())));
                }
                if ne_in && !self.sys.subsystem_in_c_f(&ne, y)? {
                    return Ok(Some(format!("(c) fails at {}", at())));
                }
            }
        }
        Ok(None)
    }

    /// `Aut_F(P) = H(P) A°(P)` for fully normalized `P`.
    fn frattini_cons(&self) -> Result<Option<String>> {
        let (f, e) = (self.f(), self.e);
        for p in f.subgroups() {
            if !f.is_fully_normalized(p) {
                continue;
            }
            let ag = f.aut_group(p);
            let a = a_circle(f, e, &ag, p)?;
            let h = h_group(f, e, &ag, p)?;
            if ag.group().join(&h, &a).order() != ag.order() {
                return Ok(Some(format!(
                    "|H(P) A°(P)| < |Aut_F(P)| = {} for P = {}",
                    ag.order(),
                    f.amb().describe(p)
                )));
            }
        }
        Ok(None)
    }

    fn x_invariant(&self) -> Result<Option<String>> {
        let f = self.f();
        let xs = self.centralized()?;
        for &x in &xs {
            for q in f.class_of(x) {
                if !xs.contains(&q) {
                    return Ok(Some(format!(
                        "{} is in 𝒳 but its conjugate {} is not",
                        f.amb().describe(x),
                        f.amb().describe(q)
                    )));
                }
            }
        }
        Ok(None)
    }

    fn weakly_closed_centralized(&self) -> Result<Option<String>> {
        let f = self.f();
        let xs = self.centralized()?;
        let auts = self.e.auts(self.t());
        for r in f.amb().subgroups_of(self.c_s_t()) {
            if !f.is_weakly_closed(r) || xs.contains(&r) {
                continue;
            }
            let mut all = true;
            for a in &auts {
                all &= self.sys.in_c_f(a, r)?;
            }
            if all {
                return Ok(Some(format!(
                    "{} is weakly closed with Aut_E(T) in C_F(R) but not in 𝒳",
                    f.amb().describe(r)
                )));
            }
        }
        Ok(None)
    }

    /// `𝒢` is constrained, `N_E(T) ⊴ 𝒢`, and the model has exactly one
    /// normal subgroup realizing `N_E(T)`.
    fn gn(&self) -> Result<Option<String>> {
        let g = models::script_g(self.f(), self.e)?;
        if !models::is_constrained(&g)?.0 {
            return Ok(Some("𝒢 is not constrained".into()));
        }
        let ne = self.ne()?;
        let r = is_normal(&g, &ne)?;
        if !r.normal {
            return Ok(Some(format!("N_E(T) is not normal in 𝒢: {}", r.counterexample.unwrap_or_default())));
        }
        let m = models::model_of(&g)?;
        let found = models::normal_models(&g, &m, &ne)?;
        Ok(fail_if(found.len() != 1, || {
            format!("{} normal subgroups of the model of 𝒢 realize N_E(T)", found.len())
        }))
    }

    fn cfcg0(&self) -> Result<Option<String>> {
        let f = self.f();
        let amb = f.amb();
        let (t, tc) = (self.t(), self.t_c_s_t());
        let ne = self.ne()?;
        let auts = self.e.auts(t);
        for x in amb.subgroups_of(self.c_s_t()) {
            if !self.sys.subsystem_in_c_f(&ne, x)? {
                continue;
            }
            for a in &auts {
                let ok = f.extensions(a, tc).any(|hat| {
                    hat.img() == tc
                        && hat.fixes(amb, x)
                        && amb
                            .members(tc)
                            .iter()
                            .all(|&y| amb.contains_elem(t, amb.mul(amb.inv(y), hat.apply(y))))
                });
                if !ok {
                    return Ok(Some(format!(
                        "{} has no extension to T C_S(T) fixing X = {}",
                        a.describe(amb),
                        amb.describe(x)
                    )));
                }
            }
        }
        Ok(None)
    }

    fn r_star_values(&self) -> Result<Vec<SubId>> {
        let v = r_star_all_models(self.f(), self.e)?;
        if v.is_empty() {
            return Err(Error::NotConstrained);
        }
        Ok(v)
    }

    fn first_characterization(&self) -> Result<Option<String>> {
        let r = self.r_star_values()?[0];
        Ok(first_characterization_failure(self.f(), &self.ne()?, r)?
            .map(|x| format!("N_E(T) ⊆ C_F(X) disagrees with X ≤ R* at {}", self.f().amb().describe(x))))
    }

    /// `C_S(E) ∈ 𝒳`, it contains every member of `𝒳`, and it is strongly closed.
    fn main_cse_a(&self) -> Result<Option<String>> {
        let f = self.f();
        let amb = f.amb();
        let xs = self.centralized()?;
        let r = self.c_s_e()?;
        if !xs.contains(&r) {
            return Ok(Some(format!("the join {} of 𝒳 is not in 𝒳", amb.describe(r))));
        }
        if let Some((x, m)) = f.strong_closure_failure(r) {
            return Ok(Some(format!(
                "C_S(E) = {} is not strongly closed: {} is sent outside by {}",
                amb.describe(r),
                amb.label(x),
                m.describe(amb)
            )));
        }
        Ok(None)
    }

    /// `R*` from every model equals the largest `X ≤ C_S(T)` with
    /// `N_E(T) ⊆ C_F(X)`, and contains `C_S(E)`.
    fn main_cse_b(&self) -> Result<Option<String>> {
        let f = self.f();
        let amb = f.amb();
        let ne = self.ne()?;
        let mut def = Vec::new();
        for x in amb.subgroups_of(self.c_s_t()) {
            if self.sys.subsystem_in_c_f(&ne, x)? {
                def.push(x);
            }
        }
        let join = def.iter().fold(amb.trivial(), |acc, &x| amb.join(acc, x));
        if !def.contains(&join) {
            return Ok(Some("the subgroups centralizing N_E(T) have no largest member".into()));
        }
        for r in self.r_star_values()? {
            if r != join {
                return Ok(Some(format!(
                    "R* = {} from a model but the largest subgroup centralizing N_E(T) is {}",
                    amb.describe(r),
                    amb.describe(join)
                )));
            }
        }
        Ok(fail_if(!amb.le(self.c_s_e()?, join), || "C_S(E) is not inside R*".into()))
    }

    /// Weakly closed subgroups of `R*` lie in `𝒳`; `C_S(E)` is the largest
    /// weakly closed and the largest strongly closed subgroup of `R*`.
    fn main_cse_c(&self) -> Result<Option<String>> {
        let f = self.f();
        let amb = f.amb();
        let xs = self.centralized()?;
        let cse = self.c_s_e()?;
        let r = self.r_star_values()?[0];
        if !f.is_weakly_closed(cse) || !f.is_strongly_closed(cse) {
            return Ok(Some("C_S(E) is not weakly and strongly closed".into()));
        }
        for y in amb.subgroups_of(r) {
            if f.is_weakly_closed(y) && !xs.contains(&y) {
                return Ok(Some(format!("{} is weakly closed in R* but not in 𝒳", amb.describe(y))));
            }
            if (f.is_weakly_closed(y) || f.is_strongly_closed(y)) && !amb.le(y, cse) {
                return Ok(Some(format!("{} is closed in R* but not inside C_S(E)", amb.describe(y))));
            }
        }
        Ok(None)
    }

    fn cse_brute_force(&self) -> Result<Option<String>> {
        let amb = self.f().amb();
        let brute = c_s_brute_force(self.f(), self.e)?;
        let cse = self.c_s_e()?;
        Ok(fail_if(brute != cse, || {
            format!("brute force gives {}, the join of 𝒳 gives {}", amb.describe(brute), amb.describe(cse))
        }))
    }

    fn foc_prop(&self) -> Result<Option<String>> {
        let f = self.f();
        let amb = f.amb();
        let ct = f.centralizer_subsystem(self.t())?;
        let cse = self.c_s_e()?;
        for (name, sub) in [("focal", focal(&ct)), ("hyperfocal", hyperfocal(&ct))] {
            if !amb.le(sub, cse) {
                return Ok(Some(format!(
                    "{name} subgroup {} of C_F(T) is not inside C_S(E) = {}",
                    amb.describe(sub),
                    amb.describe(cse)
                )));
            }
        }
        Ok(None)
    }

    fn cfe_normality(&self, weak_only: bool) -> Result<Option<String>> {
        let r = is_normal(self.f(), &self.cfe()?)?;
        let ok = if weak_only { r.weakly_normal } else { r.normal };
        Ok(fail_if(!ok, || r.counterexample.unwrap_or_else(|| "C_F(E) is not normal".into())))
    }

    /// `C_F(E)` is normal, and a saturated subsystem `D` (inner systems of
    /// subgroups of `S`, normal subsystems of `F`) lies in `C_F(E)` iff
    /// `D` and `E` centralize each other.
    fn main_cfe(&self) -> Result<Option<String>> {
        let f = self.f();
        let amb = f.amb();
        let cfe = self.cfe()?;
        if !is_normal(f, &cfe)?.normal {
            return Ok(Some("C_F(E) is not normal".into()));
        }
        let inner = f.subgroups().into_iter().map(|p| FusionSystem::inner(f.ambient(), p));
        for d in inner.chain(self.normals.iter().cloned()) {
            if !d.is_saturated() {
                continue;
            }
            if d.is_subsystem_of(&cfe) != centralize_each_other(f, &d, self.e)? {
                return Ok(Some(format!(
                    "D = {} over {}: containment in C_F(E) and centralizing E disagree",
                    d.name(),
                    amb.describe(d.support())
                )));
            }
        }
        Ok(None)
    }

    fn coincide(&self) -> Result<Option<String>> {
        let cfe = self.cfe()?;
        Ok(coincide_failure(self.f(), self.e, &cfe)?
            .map(|p| format!("Aut-product formula fails at {}", self.f().amb().describe(p))))
    }
}

/// One outcome per product check id for the pair `(F₁, F₂)`.
pub(crate) fn product_outcomes(sys: &SystemCtx, f1: &FusionSystem, f2: &FusionSystem) -> Vec<(&'static str, Outcome)> {
    match verify_product_theorems(sys.f, f1, f2, sys.lattice_cap) {
        Ok(report) => {
            let failed = report.failures();
            PRODUCT_IDS
                .iter()
                .map(|&id| {
                    let needs_cp = id == "P:F1F2Centralize" || (id == "MainCentralProduct" && report.centralize);
                    let capped = report.has_central_product.is_none()
                        || (report.centralize && report.product_is_central.is_none());
                    let o = if failed.contains(&id) {
                        Outcome::Violation(format!("{report:?}"))
                    } else if needs_cp && capped {
                        Outcome::Failed(Error::CapExceeded {
                            what: "direct product of the supports",
                            limit: 128,
                            actual: sys.f.amb().order(f1.support()) * sys.f.amb().order(f2.support()),
                        })
                    } else {
                        Outcome::Pass
                    };
                    (id, o)
                })
                .collect()
        }
        Err(Error::DomainMismatch(_)) => Vec::new(),
        Err(e) => PRODUCT_IDS.iter().map(|&id| (id, Outcome::from(Err(e.clone())))).collect(),
    }
}
