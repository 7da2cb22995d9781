mod common;

use common::*;
use hopf_core::analysis::{coinvariants, hopf_subalgebra_closure, restrict_sequence, verify_exact, ExactSequenceCert};
use hopf_core::constructions::{galindo_three_step, Extension};
use hopf_core::hopf::LinMap;
use hopf_core::Subspace;

fn certify(ext: &Extension) -> ExactSequenceCert {
    let cert = verify_exact(&ext.iota, &ext.pi).unwrap();
    assert!(cert.checks.all());
    let (k, h, t) = cert.dims;
    assert_eq!(k * t, h);
    assert_eq!(coinvariants(&ext.hopf, &ext.pi), ext.iota.image());
    cert
}

#[test]
fn smash_coproduct_sequence_is_exact() {
    let (ext, _) = dim48(&field(4));
    assert_eq!(certify(&ext).dims, (2, 48, 24));
}

#[test]
fn basic_construction_sequence_is_exact() {
    let k = field(4);
    let data = s4_twist(&k);
    let gamma = data.n.subgroup(&[perm("(12)", 4)]).unwrap();
    let g = data.n.subgroup(&[perm("(34)", 4)]).unwrap();
    let (a1, a2, _) = galindo_three_step(&data, &gamma, &g).unwrap();
    assert_eq!(certify(&a1).dims, (48, 96, 2));
    assert_eq!(certify(&a2).dims.1, 96);
}

#[test]
fn abelian_extension_sequences_are_exact() {
    let k = field(12);
    assert_eq!(certify(&abelian_s3(&k)).dims, (3, 6, 2));
    assert_eq!(certify(&kac_paljutkin(&k)).dims, (4, 8, 2));
}

#[test]
fn mismatched_maps_are_not_certified() {
    let k = field(4);
    let (ext, _) = dim48(&k);
    let identity = LinMap::identity(ext.hopf.clone());
    assert!(verify_exact(&ext.iota, &identity).is_err());
    let kp = kac_paljutkin(&k);
    assert!(verify_exact(&kp.iota, &ext.pi).is_err());
}

#[test]
fn hopf_subalgebras_of_an_extension_are_extensions() {
    let k = field(12);
    let kp = kac_paljutkin(&k);
    let cert = verify_exact(&kp.iota, &kp.pi).unwrap();
    let sub: Subspace = hopf_subalgebra_closure(&kp.hopf, &[kp.iota.columns[1].clone()]);
    let restricted = restrict_sequence(&cert, &sub).unwrap();
    let (a, b, c) = restricted.dims;
    assert_eq!(a * c, b);
    assert_eq!(b, sub.dim());
}
