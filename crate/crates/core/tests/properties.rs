//! Invariants checked on random subgroups and morphisms of corpus systems.

mod common;

use std::sync::LazyLock;

use common::*;
use fusion_core::centralizers::{c_s_of, frattini_factorize};
use fusion_core::config::Config;
use fusion_core::fusion::persist::StoredSystem;
use fusion_core::fusion::{FusionSystem, Morphism};
use fusion_core::verify::{normal_pairs, run_system, to_json, CheckSet};
use proptest::prelude::*;

static SYSTEMS: LazyLock<Vec<FusionSystem>> =
    LazyLock::new(|| SMALL.iter().map(|&(k, p)| corpus_system(k, p)).collect());

static PAIRS: LazyLock<Vec<(usize, FusionSystem)>> = LazyLock::new(|| {
    SYSTEMS
        .iter()
        .enumerate()
        .flat_map(|(i, f)| normal_pairs(f).unwrap().into_iter().map(move |(_, e)| (i, e)))
        .collect()
});

fn pick<T>(v: &[T], i: usize) -> &T {
    &v[i % v.len()]
}

fn morphisms(f: &FusionSystem) -> Vec<&Morphism> {
    f.all_morphisms().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_and_inverses_cancel(s in any::<usize>(), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let f = pick(&SYSTEMS, s);
        let amb = f.amb();
        let ms = morphisms(f);
        let phi = *pick(&ms, a);
        // follow phi with maps defined on its image
        let next: Vec<&Morphism> = f.homs_from(phi.img()).iter().collect();
        let psi = *pick(&next, b);
        let last: Vec<&Morphism> = f.homs_from(psi.img()).iter().collect();
        let chi = *pick(&last, c);
        prop_assert_eq!(phi.then(amb, psi).then(amb, chi), phi.then(amb, &psi.then(amb, chi)));
        prop_assert!(phi.then(amb, &phi.inverse(amb)).is_identity());
        prop_assert!(f.contains(&phi.then(amb, psi)));
        prop_assert!(f.contains(&phi.inverse(amb)));
    }

    #[test]
    fn restrictions_stay_in_the_system(s in any::<usize>(), a in any::<usize>(), q in any::<usize>()) {
        let f = pick(&SYSTEMS, s);
        let amb = f.amb();
        let phi = *pick(&morphisms(f), a);
        let subs: Vec<_> = amb.subgroups_of(phi.dom()).collect();
        let r = phi.restrict(amb, *pick(&subs, q));
        prop_assert!(f.contains(&r));
        prop_assert!(phi.extends(amb, &r));
    }

    #[test]
    fn alperin_factorization_recomposes(s in any::<usize>(), a in any::<usize>()) {
        let f = pick(&SYSTEMS, s);
        let phi = *pick(&morphisms(f), a);
        let fac = f.alperin_decompose(phi).unwrap();
        prop_assert_eq!(&fac.recompose(f.amb()), phi);
        let family = f.alperin_family();
        for step in &fac.steps {
            prop_assert!(family.contains(&step.member) || step.member == f.support());
        }
    }

    #[test]
    fn fully_normalized_representative(s in any::<usize>(), p in any::<usize>()) {
        let f = pick(&SYSTEMS, s);
        let p = *pick(&f.subgroups(), p);
        let q = f.fully_normalized_rep(p);
        prop_assert!(f.are_conjugate(p, q));
        prop_assert!(f.is_fully_normalized(q));
        // saturated: fully normalized implies fully centralized and automized
        prop_assert!(f.is_fully_centralized(q) && f.is_fully_automized(q));
    }

    #[test]
    fn normal_subsystems_are_invariant(k in any::<usize>(), a in any::<usize>()) {
        let (i, e) = pick(&PAIRS, k);
        let f = &SYSTEMS[*i];
        let auts = f.auts(e.support());
        let alpha = pick(&auts, a);
        prop_assert!(e.conjugate(alpha).unwrap().same_morphisms(e));
        prop_assert!(f.is_strongly_closed(e.support()));
    }

    #[test]
    fn centralizer_lies_between(k in any::<usize>()) {
        let (i, e) = pick(&PAIRS, k);
        let f = &SYSTEMS[*i];
        let amb = f.amb();
        let r = c_s_of(f, e).unwrap();
        prop_assert!(amb.le(r, amb.centralizer_in(f.support(), e.support())));
        prop_assert!(f.is_strongly_closed(r));
        prop_assert!(amb.le(amb.meet(r, e.support()), amb.center(e.support())));
    }

    #[test]
    fn frattini_factorization_recomposes(k in any::<usize>(), p in any::<usize>(), a in any::<usize>()) {
        let (i, e) = pick(&PAIRS, k);
        let f = &SYSTEMS[*i];
        let p = f.fully_normalized_rep(*pick(&f.subgroups(), p));
        let auts = f.auts(p);
        let phi = pick(&auts, a);
        let (gamma, beta) = frattini_factorize(f, e, p, phi).unwrap();
        prop_assert_eq!(&gamma.then(f.amb(), &beta), phi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn persistence_round_trips(s in any::<usize>()) {
        let f = pick(&SYSTEMS, s);
        let text = StoredSystem::from_system(f).unwrap().to_json();
        let back = StoredSystem::from_json(&text).unwrap().to_system(20000).unwrap();
        prop_assert_eq!(back.morphism_count(), f.morphism_count());
        prop_assert_eq!(back.class_representatives(), f.class_representatives());
        prop_assert_eq!(StoredSystem::from_system(&back).unwrap().to_json(), text);
    }

    #[test]
    fn reports_are_deterministic(s in any::<usize>()) {
        let f = pick(&SYSTEMS, s);
        let checks = CheckSet::all();
        let cfg = Config::default();
        let a = to_json(&[run_system("x", f, &checks, &cfg)]);
        let b = to_json(&[run_system("x", f, &checks, &cfg)]);
        prop_assert_eq!(a, b);
    }
}
