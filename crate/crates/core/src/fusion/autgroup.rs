use std::collections::HashMap;

use super::{Ambient, Morphism, SubId};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// A group of automorphisms of one subgroup, with a multiplication table
/// so the group-theoretic operators apply to it.
#[derive(Clone, Debug)]
pub struct AutGroup {
    elems: Vec<Morphism>,
    index: HashMap<Morphism, usize>,
    group: FiniteGroup,
}

impl AutGroup {
    /// `auts` must be a set of automorphisms of `p` closed under
    /// composition.
    pub fn new(amb: &Ambient, p: SubId, auts: impl IntoIterator<Item = Morphism>) -> Result<Self> {
        let mut elems = vec![Morphism::identity(amb, p)];
        for a in auts {
            if a.dom() != p || a.img() != p {
                return Err(Error::DomainMismatch("not an automorphism of the subgroup"));
            }
            if !a.is_identity() {
                elems.push(a);
            }
        }
        elems[1..].sort();
        elems.dedup();
        let index: HashMap<Morphism, usize> = elems.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let rows = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        index
                            .get(&a.then(amb, b))
                            .copied()
                            .ok_or_else(|| Error::NotAGroup("automorphisms not closed under composition".into()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let group = FiniteGroup::from_table(format!("Aut({})", amb.order(p)), &rows)?;
        Ok(AutGroup { elems, index, group })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[Morphism] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &Morphism {
        &self.elems[i]
    }

    pub fn index_of(&self, m: &Morphism) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &Morphism) -> bool {
        self.index.contains_key(m)
    }

    /// The subgroup generated by the given morphisms; `None` if one of
    /// them is not in this group.
    pub fn span<'a>(&self, ms: impl IntoIterator<Item = &'a Morphism>) -> Option<Subgroup> {
        let idx = ms.into_iter().map(|m| self.index_of(m)).collect::<Option<Vec<_>>>()?;
        Some(self.group.generate(idx))
    }

    pub fn morphisms(&self, h: &Subgroup) -> Vec<Morphism> {
        h.members().iter().map(|&i| self.elems[i].clone()).collect()
    }

    /// `Aut_T(P)`: conjugation by `N_T(P)`.
    pub fn conjugation_by(&self, amb: &Ambient, p: SubId, t: SubId) -> Option<Subgroup> {
        let n = amb.normalizer_in(t, p);
        let maps: Vec<Morphism> = amb.members(n).iter().map(|&g| Morphism::conjugation(amb, p, g)).collect();
        self.span(maps.iter())
    }
}
