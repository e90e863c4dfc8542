use std::collections::HashSet;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

impl FiniteGroup {
    fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in self.elements() {
            let c = self.generate([x]);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        out
    }

    /// Every subgroup, in canonical order. Each subgroup is a join of
    /// cyclic subgroups, so closing the cyclic ones under joins with a
    /// cyclic subgroup reaches all of them.
    pub fn subgroup_lattice(&self, cap: usize) -> Result<Vec<Subgroup>> {
        let cyclics = self.cyclic_subgroups();
        let mut seen: HashSet<Subgroup> = cyclics.iter().cloned().collect();
        let mut all = cyclics.clone();
        let mut i = 0;
        while i < all.len() {
            if all.len() > cap {
                return Err(Error::CapExceeded {
                    what: "subgroup lattice",
                    limit: cap,
                    actual: all.len(),
                });
            }
            let h = all[i].clone();
            for c in &cyclics {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let j = self.join(&h, c);
                if seen.insert(j.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        if all.len() > cap {
            return Err(Error::CapExceeded {
                what: "subgroup lattice",
                limit: cap,
                actual: all.len(),
            });
        }
        all.sort_by(|a, b| a.canonical_cmp(b));
        Ok(all)
    }

    /// Normal subgroups in canonical order: joins of normal closures of
    /// single elements.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut minimal: Vec<Subgroup> = Vec::new();
        for x in self.class_representatives() {
            let n = self.normal_closure(&self.generate([x]));
            if !minimal.contains(&n) {
                minimal.push(n);
            }
        }
        let mut seen: HashSet<Subgroup> = minimal.iter().cloned().collect();
        let mut all = minimal.clone();
        let mut i = 0;
        while i < all.len() {
            let h = all[i].clone();
            for c in &minimal {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let j = self.join(&h, c);
                if seen.insert(j.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| a.canonical_cmp(b));
        all
    }
}
