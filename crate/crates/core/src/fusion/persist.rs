//! Versioned JSON container for a fusion system on a Sylow subgroup of
//! a finite group.
//!
//! The system is stored through generators: for each class of subgroups
//! a representative, generators of its automorphism group, and one
//! isomorphism from the representative onto every other class member.
//! Loading regenerates the full hom-sets from these.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Ambient, FusionSystem, Morphism, Pos};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

pub const FORMAT: &str = "fusion-system";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredGroup {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// A morphism as the images of the sorted domain members (positions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredMap {
    pub domain: Vec<Pos>,
    pub images: Vec<Pos>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredClass {
    pub representative: Vec<Pos>,
    pub aut_generators: Vec<StoredMap>,
    pub bridges: Vec<StoredMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StoredSystem {
    pub format: String,
    pub version: u32,
    pub name: String,
    pub prime: u64,
    pub group: StoredGroup,
    /// elements of the group forming the Sylow subgroup; position `i`
    /// is the `i`-th smallest
    pub sylow: Vec<usize>,
    /// positions of the support
    pub support: Vec<Pos>,
    pub classes: Vec<StoredClass>,
    /// group elements of a realizing subgroup, when known
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realizer: Option<Vec<usize>>,
}

fn store_map(amb: &Ambient, m: &Morphism) -> StoredMap {
    let domain = amb.members(m.dom()).to_vec();
    let images = domain.iter().map(|&x| m.apply(x)).collect();
    StoredMap { domain, images }
}

fn load_map(amb: &Ambient, s: &StoredMap) -> Result<Morphism> {
    if s.domain.len() != s.images.len() {
        return Err(Error::Parse("map with mismatched lengths".into()));
    }
    let mask = s.domain.iter().try_fold(0u128, |m, &x| {
        if (x as usize) < amb.size() {
            Ok(m | 1u128 << x)
        } else {
            Err(Error::Parse(format!("position {x} outside the Sylow subgroup")))
        }
    })?;
    let dom = amb
        .id_of_mask(mask)
        .ok_or_else(|| Error::Parse("map domain is not a subgroup".into()))?;
    let mut table = vec![super::NONE; amb.size()];
    for (&x, &y) in s.domain.iter().zip(&s.images) {
        table[x as usize] = y;
    }
    Morphism::from_images(amb, dom, |x| table[x as usize])
}

impl StoredSystem {
    /// Requires a system whose ambient remembers its embedding in a group.
    pub fn from_system(f: &FusionSystem) -> Result<Self> {
        let amb = f.amb();
        let emb = amb.embedding().ok_or(Error::NotRealized)?;
        let mut classes = Vec::new();
        for rep in f.class_representatives() {
            let ag = f.aut_group(rep);
            let gens = ag.group().generating_set(&ag.group().whole());
            let aut_generators = gens.iter().map(|&i| store_map(amb, ag.elem(i))).collect();
            let bridges = f
                .class_of(rep)
                .into_iter()
                .filter(|&q| q != rep)
                .map(|q| {
                    let m = f.hom(rep, q).find(|m| m.img() == q).expect("class members are isomorphic");
                    store_map(amb, m)
                })
                .collect();
            classes.push(StoredClass {
                representative: amb.members(rep).to_vec(),
                aut_generators,
                bridges,
            });
        }
        Ok(StoredSystem {
            format: FORMAT.into(),
            version: VERSION,
            name: f.name().to_string(),
            prime: f.prime(),
            group: StoredGroup {
                name: emb.group.name().to_string(),
                order: emb.group.order(),
                table: emb.group.table_rows(),
            },
            sylow: emb.elems.clone(),
            support: amb.members(f.support()).to_vec(),
            classes,
            realizer: f.realizer().map(|r| r.host.members().to_vec()),
        })
    }

    pub fn to_system(&self, lattice_cap: usize) -> Result<FusionSystem> {
        if self.format != FORMAT || self.version != VERSION {
            return Err(Error::Parse(format!(
                "unsupported container {} version {}",
                self.format, self.version
            )));
        }
        let g = FiniteGroup::from_table(self.group.name.clone(), &self.group.table)?;
        if g.order() != self.group.order {
            return Err(Error::Parse("stored order does not match the table".into()));
        }
        if self.sylow.iter().any(|&x| x >= g.order()) {
            return Err(Error::Parse("Sylow element outside the group".into()));
        }
        let s = Subgroup::from_unsorted(self.sylow.clone());
        if !g.is_subgroup(s.members()) {
            return Err(Error::Parse("stored Sylow elements do not form a subgroup".into()));
        }
        let amb = Arc::new(Ambient::from_sylow(&g, &s, self.prime, lattice_cap)?);
        let support = load_map(
            &amb,
            &StoredMap {
                domain: self.support.clone(),
                images: self.support.clone(),
            },
        )?
        .dom();
        let mut seeds = Vec::new();
        for c in &self.classes {
            for m in c.aut_generators.iter().chain(&c.bridges) {
                seeds.push(load_map(&amb, m)?);
            }
        }
        if seeds.iter().any(|m| !amb.le(m.dom(), support) || !amb.le(m.img(), support)) {
            return Err(Error::MorphismOutsideR);
        }
        let f = FusionSystem::generated(&amb, support, seeds, self.name.clone());
        match &self.realizer {
            Some(host) => {
                let emb = amb.embedding().expect("from_sylow keeps the embedding").clone();
                f.with_realizer(&emb, &g.generate(host.iter().copied()))
            }
            None => Ok(f),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn round_trip() {
        let f = s4_at_2();
        let stored = StoredSystem::from_system(&f).unwrap();
        let text = stored.to_json();
        let back = StoredSystem::from_json(&text).unwrap().to_system(1000).unwrap();
        assert_eq!(back.amb().size(), 8);
        assert_eq!(back.morphism_count(), f.morphism_count());
        assert!(back.realizer().is_some());
        // same positions, so the persisted form is stable
        assert_eq!(StoredSystem::from_system(&back).unwrap(), stored);
        let mut broken = stored.clone();
        broken.version = 7;
        assert!(matches!(broken.to_system(1000), Err(Error::Parse(_))));
    }
}
