mod common;

use std::sync::Arc;

use common::*;
use hopf_core::constructions::{action_from_theta, galindo_three_step, smash_product, AutAction};
use hopf_core::groups::PermGroup;
use hopf_core::hopf::{group_algebra, verify_hopf, FinHopf};

fn assert_verified(name: &str, h: &FinHopf) {
    let report = verify_hopf(h);
    assert!(report.passed(), "{name}: {}", report.summary());
}

#[test]
fn group_and_dual_group_algebras_satisfy_the_axioms() {
    let k = field(12);
    for (name, h) in group_and_dual_algebras(&k) {
        assert_verified(&name, &h);
    }
    let q8 = &small_groups()[4].1;
    assert_eq!(q8.order(), 8);
    assert!(!q8.is_abelian());
    assert_eq!((0..8).filter(|&x| q8.elem_order(x) == 2).count(), 1);
}

#[test]
fn twisted_and_extension_objects_satisfy_the_axioms() {
    let k = field(4);
    assert_verified("(kS4)^J", &s4_twist(&k).twisted().unwrap());
    assert_verified("(kV4)^J", &v4_twist(&k).twisted().unwrap());
    let kp = kac_paljutkin(&k);
    assert_eq!(kp.hopf.dim(), 8);
    assert!(!kp.hopf.is_commutative() && !kp.hopf.is_cocommutative());
    assert_verified("dim-8 abelian extension", &kp.hopf);
    let (ext, twisted) = dim48(&k);
    assert_eq!(ext.hopf.dim(), 48);
    assert_verified("(kS4)^J ⋊ k^{Z/2}", &ext.hopf);
    assert_verified("(kS4 ⋊ k^{Z/2})^J̃", &twisted);
}

#[test]
fn smash_product_and_basic_construction_satisfy_the_axioms() {
    let k = field(4);
    let s3 = PermGroup::symmetric(3).unwrap();
    let t = Arc::new(group_algebra(&s3, &k));
    let f = group(3, &["(12)"]);
    let sp = smash_product(&action_from_theta(&AutAction::inner(t, &s3, &f).unwrap()).unwrap()).unwrap();
    assert_eq!(sp.hopf.dim(), 12);
    assert_verified("kS3 # kZ/2", &sp.hopf);
    let data = s4_twist(&k);
    let gamma = data.n.subgroup(&[perm("(12)", 4)]).unwrap();
    let g = data.n.subgroup(&[perm("(34)", 4)]).unwrap();
    let (a1, a2, _) = galindo_three_step(&data, &gamma, &g).unwrap();
    assert_eq!(a1.hopf.dim(), 96);
    assert_verified("basic construction", &a1.hopf);
    assert_verified("three-step twist", &a2.hopf);
}
