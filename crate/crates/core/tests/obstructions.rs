mod common;

use std::sync::Arc;

use common::*;
use hopf_core::analysis::{
    abelian_extension_obstruction, isomorphism_search, normal_candidates, r_section_candidates, subalgebra_hopf,
    triangularity_obstructions, IsoVerdict, Verdict,
};
use hopf_core::constructions::{coaction_from_theta, AutAction};
use hopf_core::groups::PermGroup;
use hopf_core::hopf::{dual_group_algebra, group_algebra, KIND_SECTION_IMAGE};

#[test]
fn dim_48_is_not_an_abelian_extension_over_the_searched_candidates() {
    let k = field(12);
    let (ext, _) = dim48(&k);
    let h = ext.hopf.clone();
    let report = abelian_extension_obstruction(&h).unwrap();
    assert!(report.obstructed());
    let cands = normal_candidates(&h).unwrap();
    let kz2 = Arc::new(dual_group_algebra(&PermGroup::cyclic(2), &k));
    let has_kz2 = cands.normal().any(|c| {
        c.space.dim() == 2
            && matches!(isomorphism_search(&subalgebra_hopf(&h, &c.space, &c.name).unwrap().0, &kz2), IsoVerdict::Iso(_))
    });
    assert!(has_kz2);
    assert!(report.tested.iter().any(|t| t.dim == 2 && t.commutative && !t.quotient_cocommutative));
    for c in cands.normal() {
        assert!(c.space.dim() == 1 || c.space.dim() == 2 || c.space.dim() == 48);
    }
}

#[test]
fn dim_48_has_no_r_section_candidates() {
    let k = field(4);
    let data = s4_twist(&k);
    let theta = AutAction::inner(data.twisted().unwrap(), &data.n, &data.n.subgroup(&[perm("(12)", 4)]).unwrap()).unwrap();
    let cd = coaction_from_theta(&theta).unwrap();
    let (ext, _) = dim48(&k);
    assert!(r_section_candidates(&ext.hopf, &cd, &theta).unwrap().is_empty());
    assert!(ext.hopf.provenance().subobjects.iter().all(|s| s.kind != KIND_SECTION_IMAGE));
}

#[test]
fn the_dim_8_abelian_extension_is_detected() {
    let k = field(12);
    let kp = kac_paljutkin(&k);
    assert!(!abelian_extension_obstruction(&kp.hopf).unwrap().obstructed());
}

#[test]
fn triangularity_obstructions_follow_the_group_likes() {
    let k = field(12);
    let (ext, _) = dim48(&k);
    let t = triangularity_obstructions(&ext.hopf).unwrap();
    assert_eq!((t.group_likes, t.dual_group_likes), (8, 4));
    assert_eq!(t.not_quasitriangular, Verdict::Inconclusive);
    assert_eq!(t.not_coquasitriangular, Verdict::Inconclusive);
    let s3 = PermGroup::symmetric(3).unwrap();
    let t = triangularity_obstructions(&dual_group_algebra(&s3, &k)).unwrap();
    assert_eq!(t.not_quasitriangular, Verdict::Established);
    let t = triangularity_obstructions(&group_algebra(&s3, &k)).unwrap();
    assert_eq!(t.not_coquasitriangular, Verdict::Established);
}
