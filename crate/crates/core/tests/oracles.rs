//! Known values computed by hand, and comparisons with independent
//! group-theoretic computations.

mod common;

use common::*;
use fusion_core::centralizers::{c_f_of, c_s_brute_force, c_s_of, focal, hyperfocal, r_star, CentralizerData};
use fusion_core::corpus::bundled;
use fusion_core::config::Config;
use fusion_core::models;
use fusion_core::products::{is_central_product, DirectProduct};
use fusion_core::verify::normal_pairs;

#[test]
fn corpus_orders() {
    let expected = [
        ("a4", 12),
        ("a4xa4", 144),
        ("a5", 60),
        ("a6", 360),
        ("c2xc2", 4),
        ("c2xc2xc2", 8),
        ("c3_c4", 12),
        ("c3xc3", 9),
        ("c4", 4),
        ("c4xc2", 8),
        ("d8", 8),
        ("d8xc2", 16),
        ("gl23", 48),
        ("q8", 8),
        ("q8oc4", 16),
        ("s3xs3", 36),
        ("s4", 24),
        ("s4xc2", 48),
        ("sl23", 24),
    ];
    let cfg = Config::default();
    let got: Vec<(String, usize)> = bundled()
        .iter()
        .map(|e| (e.key.clone(), e.file.ingest(cfg.group_cap).unwrap().order()))
        .collect();
    let want: Vec<(String, usize)> = expected.iter().map(|(k, n)| (k.to_string(), *n)).collect();
    assert_eq!(got, want);
}

#[test]
fn focal_subgroup_is_s_meet_derived_subgroup() {
    let cfg = Config::default();
    for entry in bundled() {
        for f in entry.systems(&cfg).unwrap() {
            let g = group_of(&f);
            let oracle = meet_support(&f, &g.derived_subgroup());
            assert_eq!(focal(&f), oracle, "{} at {}", entry.key, f.prime());
            assert!(f.amb().le(hyperfocal(&f), focal(&f)));
        }
    }
}

#[test]
fn s4_focal_and_hyperfocal() {
    let f = corpus_system("s4", 2);
    assert_eq!(f.amb().order(focal(&f)), 4);
    assert_eq!(f.amb().order(hyperfocal(&f)), 4);
    let d8 = corpus_system("d8", 2);
    assert_eq!(d8.amb().order(focal(&d8)), 2);
    assert_eq!(d8.amb().order(hyperfocal(&d8)), 1);
}

#[test]
fn centralizer_of_a4_in_s4_is_trivial() {
    let f = corpus_system("s4", 2);
    let e = normal(&f, &["(1 2 3)", "(1 2)(3 4)"]);
    let d = CentralizerData::compute(&f, &e).unwrap();
    assert_eq!(f.amb().order(d.c_s_e), 1);
    assert_eq!(d.centralized, vec![f.amb().trivial()]);
    assert_eq!(f.amb().order(d.r_star), 1);
    assert_eq!((d.model_order, d.normal_model_order), (24, 12));
}

#[test]
fn centralizer_of_a_factor_of_a4xa4() {
    let f = corpus_system("a4xa4", 2);
    let e = normal(&f, &["(1 2 3)", "(1 2)(3 4)"]);
    let r = c_s_of(&f, &e).unwrap();
    assert_eq!(r, sub(&f, &["(5 6)(7 8)", "(5 7)(6 8)"]));
    let (rs, model, n) = r_star(&f, &e).unwrap();
    assert_eq!(rs, r);
    assert_eq!((model.group.order(), n.order()), (144, 12));
    let cfe = c_f_of(&f, &e).unwrap();
    let other = normal(&f, &["(5 6 7)", "(5 6)(7 8)"]);
    assert!(cfe.same_morphisms(&other));
}

#[test]
fn centralizer_of_q8_in_its_central_product_with_c4() {
    let f = corpus_system("q8oc4", 2);
    let amb = f.amb();
    let z = amb.center(f.support());
    assert_eq!(amb.order(z), 4);
    // Q8 is the unique quaternion subgroup of order 8 normal in S
    let q8 = f
        .subgroups()
        .into_iter()
        .find(|&p| {
            amb.order(p) == 8
                && amb.center(p) != p
                && amb.members(p).iter().filter(|&&x| amb.mul(x, x) == 0).count() == 2
        })
        .unwrap();
    let e = normal_subsystem_from_support(&f, q8);
    assert_eq!(c_s_of(&f, &e).unwrap(), z);
    let cfe = c_f_of(&f, &e).unwrap();
    assert_eq!(cfe.support(), z);
    assert!(is_central_product(&f, &e, &cfe, 20000).unwrap());
}

fn normal_subsystem_from_support(f: &fusion_core::fusion::FusionSystem, t: fusion_core::fusion::SubId) -> fusion_core::fusion::FusionSystem {
    normal_pairs(f)
        .unwrap()
        .into_iter()
        .map(|(_, e)| e)
        .find(|e| e.support() == t)
        .expect("a normal subgroup of the group has this Sylow subgroup")
}

#[test]
fn centralizer_in_s4_at_three() {
    let f = corpus_system("s4", 3);
    let e = normal(&f, &["(1 2 3)", "(1 2)(3 4)"]);
    assert_eq!(c_s_of(&f, &e).unwrap(), f.support());
}

#[test]
fn brute_force_matches_structured_computation() {
    let cfg = Config::default();
    for entry in bundled() {
        for f in entry.systems(&cfg).unwrap() {
            for (label, e) in normal_pairs(&f).unwrap() {
                assert_eq!(
                    c_s_brute_force(&f, &e).unwrap(),
                    c_s_of(&f, &e).unwrap(),
                    "{} at {} for {label}",
                    entry.key,
                    f.prime()
                );
            }
        }
    }
}

#[test]
fn centralizer_sandwich() {
    // C_S(N) ≤ C_S(E) ≤ C_S(T) for E = F_{S∩N}(N)
    for &(key, p) in SMALL {
        let f = corpus_system(key, p);
        let amb = f.amb();
        let g = group_of(&f);
        for n in g.normal_subgroups() {
            let e = fusion_core::subsystems::normal_subsystem_from_group(&f, &n).unwrap();
            let r = c_s_of(&f, &e).unwrap();
            let c_n = meet_support(&f, &g.centralizer(&n));
            assert!(amb.le(c_n, r), "{key}");
            assert!(amb.le(r, amb.centralizer_in(f.support(), e.support())), "{key}");
        }
    }
}

#[test]
fn constrained_systems_and_models() {
    let s4 = corpus_system("s4", 2);
    let m = models::model_of(&s4).unwrap();
    assert_eq!(m.group.order(), 24);
    // S = V4 is abelian, so N_{A5}(V4) = A4 is a model
    assert_eq!(models::model_of(&corpus_system("a5", 2)).unwrap().group.order(), 12);
    assert!(matches!(
        models::model_of(&corpus_system("a6", 2)),
        Err(fusion_core::Error::NotConstrained)
    ));
    // the central involution of C3:C4 is O_3', so the model is S3
    assert_eq!(models::model_of(&corpus_system("c3_c4", 3)).unwrap().group.order(), 6);
}

#[test]
fn direct_products_match_realized_products() {
    let s4 = corpus_system("s4", 2);
    let c2 = corpus_system("c2xc2", 2);
    let dp = DirectProduct::new(&s4, &c2, 20000).unwrap();
    assert!(dp.system.realizer().is_some());
    assert_eq!(dp.system.amb().order(dp.system.support()), 32);
    assert!(dp.structure_failure().is_none());
    let a4 = corpus_system("a4", 2);
    let dp = DirectProduct::new(&a4, &a4, 20000).unwrap();
    assert!(dp.system.realizer().is_some());
    let direct = corpus_system("a4xa4", 2);
    assert_eq!(dp.system.morphism_count(), direct.morphism_count());
    assert_eq!(dp.system.class_representatives().len(), direct.class_representatives().len());
}
