use std::sync::Arc;

use super::random::{random_exact_module, random_module, simple_module};
use super::*;
use crate::category::{builtin_ring, d4_category, d4_refined_category, refined_embedding};
use crate::group::GradedAbelianGroup;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn d4() -> Arc<CategoryRing> {
    Arc::new(d4_category().unwrap())
}

fn g(s: &str) -> GradedAbelianGroup {
    s.parse().unwrap()
}

fn summand(ring: &CategoryRing, name: &str, shift: u8) -> FreeSummand {
    FreeSummand { object: ring.object_index(name).unwrap(), shift }
}

#[test]
fn free_module_slots_are_hom_groups() {
    let r = d4();
    let p4 = free_module(&r, &[summand(&r, "4", 0)]);
    assert!(validate_module(&p4).passed());
    for (z, o) in r.objects().iter().enumerate() {
        let expect = if ["1", "2", "3"].contains(&o.name.as_str()) { g("0") } else { g("Z[0]") };
        assert_eq!(p4.value(z), expect, "P_4({})", o.name);
    }
    let c2 = Arc::new(builtin_ring("chain:2").unwrap());
    let p1 = free_module(&c2, &[summand(&c2, "1", 0)]);
    assert_eq!(p1.value_at("1").unwrap(), g("Z[0]"));
    assert_eq!(p1.value_at("2").unwrap(), g("Z[1]"));
    assert_eq!(p1.value_at("12").unwrap(), g("0"));
}

#[test]
fn counterexample_slots() {
    let r = d4();
    let j = j_map(&r).unwrap();
    assert!(j.check().is_empty());
    assert!(kernel(&j).0.is_zero());
    let m = counterexample(&r).unwrap();
    assert!(validate_module(&m).passed());
    let expect = [
        ("4", "Z[1]"),
        ("14", "0"),
        ("24", "0"),
        ("34", "0"),
        ("124", "Z[0]"),
        ("134", "Z[0]"),
        ("234", "Z[0]"),
        ("1234", "Z^2[0]"),
        ("1", "Z[0]"),
        ("2", "Z[0]"),
        ("3", "Z[0]"),
    ];
    for (y, v) in expect {
        assert_eq!(m.value_at(y).unwrap(), g(v), "M({y})");
    }
    assert!(is_exact(&m).exact());
    assert!(m.is_slotwise_free());
    let rep = is_free(&m);
    assert!(!rep.free);
    assert!(rep.ss_free);
    let res = free_resolution(&m, DEFAULT_MAX_LENGTH);
    assert!(res.complete);
    assert_eq!(res.length(), 1);
    assert_eq!(res.specs[1], vec![summand(&r, "1234", 0)]);
    assert!(check_resolution(&res).is_empty());
}

#[test]
fn simple_module_at_open_point_is_not_exact() {
    let r = d4();
    let s = simple_module(&r, r.object_index("4").unwrap(), 0, 0);
    let rep = is_exact(&s);
    assert!(!rep.exact());
    assert!(rep.failures.iter().any(|f| f.triple == "14/4"));
    assert!(!tor1_ss(&s).is_zero());
}

#[test]
fn reduction_mod_k_has_length_two() {
    let r = d4();
    let mk = counterexample_mod_k(&r, 3).unwrap();
    assert!(validate_module(&mk).passed());
    assert_eq!(mk.value_at("1234").unwrap(), g("(Z/3)^2[0]"));
    let res = free_resolution(&mk, DEFAULT_MAX_LENGTH);
    assert!(res.complete);
    assert_eq!(res.length(), 2);
    assert!(check_resolution(&res).is_empty());
    let p1234 = free_module(&r, &[summand(&r, "1234", 0)]);
    assert_eq!(ext_from_resolution(&res, &p1234, 2).unwrap(), g("Z/3[0]"));
    assert!(ext_from_resolution(&res, &p1234, 1).unwrap().is_zero());
    assert!(hom_modules(&mk, &p1234).unwrap().group.is_zero());
}

#[test]
fn yoneda_on_random_modules() {
    let r = Arc::new(builtin_ring("chain:3").unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        let n = random_module(&mut rng, &r);
        for y in 0..r.num_objects() {
            let p = free_module(&r, &[FreeSummand { object: y, shift: 0 }]);
            assert_eq!(hom_modules(&p, &n).unwrap().group, yoneda(&n, y));
        }
    }
}

#[test]
fn file_round_trip() {
    let r = d4();
    let m = counterexample_mod_k(&r, 2).unwrap();
    let text = write_module(&m);
    let back = parse_module(&text).unwrap();
    assert!(validate_module(&back).passed());
    assert_eq!(graded_values(&back), graded_values(&m));
    assert_eq!(write_module(&back), text);
}

#[test]
fn perturbed_action_is_caught() {
    let r = d4();
    let m = counterexample(&r).unwrap();
    let mut text = write_module(&m);
    let line = text.lines().find(|l| l.starts_with("action r[1234>1]")).unwrap().to_string();
    let flipped = line.replacen("[[1", "[[-1", 1);
    assert_ne!(line, flipped);
    text = text.replace(&line, &flipped);
    let bad = parse_module(&text).unwrap();
    assert!(!validate_module(&bad).passed());
}

#[test]
fn exact_random_chain_modules_have_short_resolutions() {
    let r = Arc::new(builtin_ring("chain:3").unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..6 {
        let m = random_exact_module(&mut rng, &r);
        assert!(is_exact(&m).exact());
        assert!(chain_kernel_formula_check(&m).is_empty());
        let res = free_resolution(&m, DEFAULT_MAX_LENGTH);
        assert!(res.complete && res.length() <= 1);
    }
}

#[test]
fn refined_top_object_restricts_to_the_counterexample() {
    let d = d4();
    let refined = Arc::new(d4_refined_category().unwrap());
    let top = free_module(&refined, &[summand(&refined, "12344", 0)]);
    assert!(is_exact(&top).exact());
    assert!(is_free(&top).free);
    let phi = refined_embedding(&d, &refined).unwrap();
    let restricted = restrict(&top, &d, &phi);
    assert!(validate_module(&restricted).passed());
    let m = counterexample(&d).unwrap();
    assert_eq!(graded_values(&restricted), graded_values(&m));
    let homs = hom_modules(&m, &restricted).unwrap();
    assert!(homs.basis[0].iter().any(ModuleHom::is_iso));
}

#[test]
fn exact_refined_modules_have_short_resolutions() {
    let r = Arc::new(d4_refined_category().unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..3 {
        let m = random_exact_module(&mut rng, &r);
        assert!(is_exact(&m).exact());
        let res = free_resolution(&m, DEFAULT_MAX_LENGTH);
        assert!(res.complete && res.length() <= 1);
    }
}
