use std::collections::HashMap;
use std::sync::Arc;

use super::{close, Ambient, AutGroup, Embedding, Morphism, Pos, SubId, NONE};
use crate::error::{Error, Result};
use crate::group::{p_part, Elem, FiniteGroup, Subgroup};

/// A finite group `host` inside `emb.group` whose conjugation action
/// realizes a fusion system.
#[derive(Clone, Debug)]
pub struct Realizer {
    pub emb: Arc<Embedding>,
    pub host: Subgroup,
}

/// A fusion system over `support ≤ S`, with every hom-set
/// `Hom(P, support)` materialized.
#[derive(Clone, Debug)]
pub struct FusionSystem {
    amb: Arc<Ambient>,
    support: SubId,
    homs: Arc<Vec<Vec<Morphism>>>,
    witnesses: Option<Arc<Vec<Vec<Elem>>>>,
    realizer: Option<Realizer>,
    name: String,
}

impl FusionSystem {
    /// `F_S(G)`.
    pub fn of_group(g: &FiniteGroup, s: &Subgroup, prime: u64, lattice_cap: usize) -> Result<Self> {
        if s.order() != p_part(g.order(), prime) || !g.is_p_group(s, prime) || !g.is_subgroup(s.members()) {
            return Err(Error::NotSylow {
                prime,
                order: s.order(),
            });
        }
        let amb = Arc::new(Ambient::from_sylow(g, s, prime, lattice_cap)?);
        let emb = amb.embedding().expect("built from a group").clone();
        let mut f = Self::realized(&amb, &emb, &g.whole(), amb.whole())?;
        f.name = format!("F_S({})", g.name());
        Ok(f)
    }

    /// `F_T(H)` where `T` (given in positions) is a Sylow subgroup of `host`.
    pub fn realized(amb: &Arc<Ambient>, emb: &Arc<Embedding>, host: &Subgroup, over: SubId) -> Result<Self> {
        let g = &emb.group;
        let t_elems = emb.image(amb, over);
        if t_elems.order() != p_part(host.order(), amb.prime()) || !t_elems.is_subgroup_of(host) {
            return Err(Error::NotSylow {
                prime: amb.prime(),
                order: t_elems.order(),
            });
        }
        let n = amb.num_subgroups();
        let mut homs = vec![Vec::new(); n];
        let mut wits = vec![Vec::new(); n];
        for p in amb.subgroups_of(over) {
            let mut found: HashMap<Box<[Pos]>, Elem> = HashMap::new();
            'h: for &h in host.members() {
                let mut map = vec![NONE; amb.size()].into_boxed_slice();
                for &x in amb.members(p) {
                    let y = emb.pos[g.conj(emb.elems[x as usize], h)];
                    if y == NONE || !amb.contains_elem(over, y) {
                        continue 'h;
                    }
                    map[x as usize] = y;
                }
                found.entry(map).or_insert(h);
            }
            let mut list: Vec<(Morphism, Elem)> = found
                .into_iter()
                .map(|(map, h)| {
                    let m = Morphism::from_images(amb, p, |x| map[x as usize]).expect("conjugation is injective");
                    (m, h)
                })
                .collect();
            list.sort();
            let (ms, ws): (Vec<_>, Vec<_>) = list.into_iter().unzip();
            homs[p] = ms;
            wits[p] = ws;
        }
        Ok(FusionSystem {
            amb: amb.clone(),
            support: over,
            homs: Arc::new(homs),
            witnesses: Some(Arc::new(wits)),
            realizer: Some(Realizer {
                emb: emb.clone(),
                host: host.clone(),
            }),
            name: format!("F_{}({})", amb.order(over), host.order()),
        })
    }

    pub(crate) fn from_parts(amb: &Arc<Ambient>, support: SubId, homs: Vec<Vec<Morphism>>, name: impl Into<String>) -> Self {
        FusionSystem {
            amb: amb.clone(),
            support,
            homs: Arc::new(homs),
            witnesses: None,
            realizer: None,
            name: name.into(),
        }
    }

    /// Closure of `seeds` together with the inner maps of `support`.
    pub fn generated(amb: &Arc<Ambient>, support: SubId, seeds: impl IntoIterator<Item = Morphism>, name: impl Into<String>) -> Self {
        Self::from_parts(amb, support, close(amb, support, seeds, true), name)
    }

    /// `F_T(T)`.
    pub fn inner(amb: &Arc<Ambient>, t: SubId) -> Self {
        Self::generated(amb, t, [], format!("F_{0}({0})", amb.order(t)))
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.amb
    }

    pub fn amb(&self) -> &Ambient {
        &self.amb
    }

    pub fn prime(&self) -> u64 {
        self.amb.prime()
    }

    pub fn support(&self) -> SubId {
        self.support
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn realizer(&self) -> Option<&Realizer> {
        self.realizer.as_ref()
    }

    /// Attaches a realizing group after checking that it reproduces
    /// exactly this system.
    pub fn with_realizer(mut self, emb: &Arc<Embedding>, host: &Subgroup) -> Result<Self> {
        let r = Self::realized(&self.amb, emb, host, self.support)?;
        if r.homs != self.homs {
            return Err(Error::NotRealized);
        }
        self.realizer = r.realizer;
        self.witnesses = r.witnesses;
        Ok(self)
    }

    pub fn same_ambient(&self, other: &FusionSystem) -> bool {
        Arc::ptr_eq(&self.amb, &other.amb)
    }

    /// Subgroups of the support, in canonical order.
    pub fn subgroups(&self) -> Vec<SubId> {
        self.amb.subgroups_of(self.support).collect()
    }

    /// `Hom(P, support)`; empty when `P` is not inside the support.
    pub fn homs_from(&self, p: SubId) -> &[Morphism] {
        &self.homs[p]
    }

    pub fn hom(&self, p: SubId, q: SubId) -> impl Iterator<Item = &Morphism> + '_ {
        let amb = &self.amb;
        self.homs[p].iter().filter(move |m| amb.le(m.img(), q))
    }

    pub fn auts(&self, p: SubId) -> Vec<Morphism> {
        self.homs[p].iter().filter(|m| m.img() == p).cloned().collect()
    }

    pub fn aut_group(&self, p: SubId) -> AutGroup {
        AutGroup::new(&self.amb, p, self.auts(p)).expect("automorphisms in a fusion system form a group")
    }

    pub fn contains(&self, m: &Morphism) -> bool {
        self.homs[m.dom()].binary_search(m).is_ok()
    }

    pub fn witness(&self, m: &Morphism) -> Option<Elem> {
        let w = self.witnesses.as_ref()?;
        let i = self.homs[m.dom()].binary_search(m).ok()?;
        Some(w[m.dom()][i])
    }

    pub fn morphism_count(&self) -> usize {
        self.homs.iter().map(Vec::len).sum()
    }

    pub fn all_morphisms(&self) -> impl Iterator<Item = &Morphism> + '_ {
        self.homs.iter().flatten()
    }

    /// The `F`-conjugates of `P` inside the support, sorted.
    pub fn class_of(&self, p: SubId) -> Vec<SubId> {
        let mut v: Vec<SubId> = self.homs[p].iter().map(|m| m.img()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// One representative per conjugacy class (the first in canonical
    /// order), in canonical order.
    pub fn class_representatives(&self) -> Vec<SubId> {
        let mut seen = vec![false; self.amb.num_subgroups()];
        let mut reps = Vec::new();
        for p in self.subgroups() {
            if seen[p] {
                continue;
            }
            reps.push(p);
            for q in self.class_of(p) {
                seen[q] = true;
            }
        }
        reps
    }

    pub fn are_conjugate(&self, p: SubId, q: SubId) -> bool {
        self.homs[p].iter().any(|m| m.img() == q)
    }

    /// Is every morphism of `self` a morphism of `other`?
    pub fn is_subsystem_of(&self, other: &FusionSystem) -> bool {
        self.same_ambient(other)
            && self.amb.le(self.support, other.support)
            && self
                .homs
                .iter()
                .flatten()
                .all(|m| other.contains(m))
    }

    pub fn same_morphisms(&self, other: &FusionSystem) -> bool {
        self.same_ambient(other) && self.support == other.support && self.homs == other.homs
    }

    /// The first morphism of `self` missing from `other`.
    pub fn first_missing_in(&self, other: &FusionSystem) -> Option<&Morphism> {
        self.homs.iter().flatten().find(|m| !other.contains(m))
    }

    /// Copy of `self` carrying `other`'s realizer without checking that it
    /// fits. Only for corrupting systems in self-tests.
    pub(crate) fn with_unchecked_realizer(mut self, other: &FusionSystem) -> Self {
        self.realizer = other.realizer.clone();
        self
    }

    /// Copy of `self` with one morphism removed from its hom-set; the
    /// result need not be a fusion system. Used to corrupt systems in
    /// self-tests.
    pub fn without(&self, m: &Morphism) -> FusionSystem {
        let mut homs = (*self.homs).clone();
        homs[m.dom()].retain(|x| x != m);
        Self::from_parts(&self.amb, self.support, homs, format!("{} minus one map", self.name))
    }

    /// Copy of `self` whose hom-sets only keep morphisms satisfying `keep`.
    pub fn filtered(&self, keep: impl Fn(&Morphism) -> bool, name: impl Into<String>) -> FusionSystem {
        let homs = self
            .homs
            .iter()
            .map(|v| v.iter().filter(|m| keep(m)).cloned().collect())
            .collect();
        Self::from_parts(&self.amb, self.support, homs, name)
    }

    /// `⟨C⟩_R`: the smallest subsystem over `R` containing `C`.
    pub fn generated_subsystem(&self, r: SubId, c: &[Morphism]) -> Result<FusionSystem> {
        for m in c {
            if !self.amb.le(m.dom(), r) || !self.amb.le(m.img(), r) {
                return Err(Error::MorphismOutsideR);
            }
            if !self.contains(m) {
                return Err(Error::MorphismNotInSystem);
            }
        }
        if !self.amb.le(r, self.support) {
            return Err(Error::MorphismOutsideR);
        }
        Ok(Self::generated(&self.amb, r, c.iter().cloned(), format!("<{} maps>_{}", c.len(), self.amb.order(r))))
    }

    /// `E^α` for `α ∈ Hom(T, S)` with `T` the support of `self`.
    pub fn conjugate(&self, alpha: &Morphism) -> Result<FusionSystem> {
        if alpha.dom() != self.support {
            return Err(Error::DomainMismatch("conjugating map must be defined on the support"));
        }
        let mut homs = vec![Vec::new(); self.amb.num_subgroups()];
        for m in self.homs.iter().flatten() {
            let c = m.conjugate_by(&self.amb, alpha)?;
            homs[c.dom()].push(c);
        }
        for v in &mut homs {
            v.sort();
        }
        Ok(Self::from_parts(&self.amb, alpha.img(), homs, format!("{}^a", self.name)))
    }

    pub fn summary(&self) -> String {
        format!(
            "{} over a subgroup of order {} ({} classes, {} morphisms)",
            self.name,
            self.amb.order(self.support),
            self.class_representatives().len(),
            self.morphism_count()
        )
    }
}

impl PartialEq for FusionSystem {
    fn eq(&self, other: &Self) -> bool {
        self.same_morphisms(other)
    }
}
