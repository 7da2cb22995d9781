mod common;

use common::*;
use hopf_core::analysis::{isomorphism_search, IsoVerdict};
use hopf_core::constructions::galindo_three_step;
use hopf_core::hopf::LinMap;

#[test]
fn smash_coproduct_equals_the_twisted_semidirect_product() {
    let k = field(4);
    let (ext, twisted) = dim48(&k);
    assert!(ext.hopf.structure_eq(&twisted));
    assert!(!ext.hopf.is_commutative() && !ext.hopf.is_cocommutative());
}

#[test]
fn basic_construction_is_isomorphic_to_the_three_step_twist() {
    let k = field(4);
    let data = s4_twist(&k);
    let gamma = data.n.subgroup(&[perm("(12)", 4)]).unwrap();
    let g = data.n.subgroup(&[perm("(34)", 4)]).unwrap();
    let (a1, a2, cols) = galindo_three_step(&data, &gamma, &g).unwrap();
    let direct = LinMap::new(a1.hopf.clone(), a2.hopf.clone(), cols).unwrap().certify_hopf().unwrap();
    assert!(direct.is_injective());
    match isomorphism_search(&a1.hopf, &a2.hopf) {
        IsoVerdict::Iso(m) => assert!(m.certified.hopf_map && m.is_injective()),
        other => panic!("expected an isomorphism, got {other:?}"),
    }
}
