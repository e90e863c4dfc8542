use std::collections::HashSet;

use super::{Ambient, Morphism, SubId};

struct Closure<'a> {
    amb: &'a Ambient,
    sets: Vec<HashSet<Morphism>>,
    by_img: Vec<Vec<Morphism>>,
    work: Vec<Morphism>,
}

impl Closure<'_> {
    fn add(&mut self, m: Morphism) {
        if self.sets[m.dom()].insert(m.clone()) {
            self.by_img[m.img()].push(m.clone());
            self.work.push(m);
        }
    }

    fn step(&mut self, m: Morphism) {
        let amb = self.amb;
        for &q in amb.maximal_subgroups(m.dom()) {
            self.add(m.restrict(amb, q));
        }
        self.add(m.inverse(amb));
        let after: Vec<Morphism> = self.sets[m.img()].iter().cloned().collect();
        for next in after {
            self.add(m.then(amb, &next));
        }
        let before = self.by_img[m.dom()].clone();
        for prev in before {
            self.add(prev.then(amb, &m));
        }
    }
}

/// Smallest set of morphisms between subgroups of `support` that
/// contains `seeds`, every identity map, and (optionally) conjugation by
/// elements of `support`, and is closed under composition, restriction
/// and inversion of isomorphisms onto their image.
///
/// Returns `Hom(P, support)` for every `P`, sorted; empty for `P` not
/// inside `support`.
pub fn close<I>(amb: &Ambient, support: SubId, seeds: I, include_inner: bool) -> Vec<Vec<Morphism>>
where
    I: IntoIterator<Item = Morphism>,
{
    let n = amb.num_subgroups();
    let mut c = Closure {
        amb,
        sets: vec![HashSet::new(); n],
        by_img: vec![Vec::new(); n],
        work: Vec::new(),
    };
    for p in amb.subgroups_of(support) {
        c.add(Morphism::identity(amb, p));
    }
    if include_inner {
        for &g in amb.members(support) {
            c.add(Morphism::conjugation(amb, support, g));
        }
    }
    for m in seeds {
        debug_assert!(amb.le(m.img(), support) && amb.le(m.dom(), support));
        c.add(m);
    }
    while let Some(m) = c.work.pop() {
        c.step(m);
    }
    c.sets
        .into_iter()
        .map(|s| {
            let mut v: Vec<Morphism> = s.into_iter().collect();
            v.sort();
            v
        })
        .collect()
}
