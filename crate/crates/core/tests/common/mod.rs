#![allow(dead_code)]

use std::sync::Arc;

use hopf_core::constructions::{abelian_extension, galindo_pair, Extension, TwistedGroupData};
use hopf_core::groups::{
    matched_pair_from_factorization, nondegenerate_two_cocycle, CocyclePair, Decomposition, Perm, PermGroup,
};
use hopf_core::hopf::{dual_group_algebra, group_algebra, FinHopf};
use hopf_core::{Conductor, SparseVec};

pub fn field(n: u32) -> Conductor {
    Conductor::new(n).unwrap()
}

pub fn perm(s: &str, degree: usize) -> Perm {
    Perm::parse(s, degree).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_cycles(degree, gens).unwrap()
}

/// (N, S, ω) with ω the nondegenerate cocycle of S = ⟨a⟩ × ⟨b⟩.
pub fn twist_data(n: &PermGroup, a: &str, b: &str, k: &Conductor) -> TwistedGroupData {
    let d = n.degree();
    let s = n.subgroup(&[perm(a, d), perm(b, d)]).unwrap();
    let dec = Decomposition { first: vec![perm(a, d)], second: vec![perm(b, d)] };
    let omega = nondegenerate_two_cocycle(&s, &dec, k).unwrap();
    TwistedGroupData { n: n.clone(), s, omega, field: k.clone() }
}

pub fn s4_twist(k: &Conductor) -> TwistedGroupData {
    twist_data(&PermGroup::symmetric(4).unwrap(), "(12)", "(34)", k)
}

pub fn v4_twist(k: &Conductor) -> TwistedGroupData {
    twist_data(&group(4, &["(12)", "(34)"]), "(12)", "(34)", k)
}

/// The dim-8 abelian extension of k^{Z/2×Z/2} by kZ/2 from D₄ = FG with the
/// nontrivial cocycle pair.
pub fn kac_paljutkin(k: &Conductor) -> Extension {
    let l = group(4, &["(12)", "(34)", "(13)(24)"]);
    let f = l.subgroup(&[perm("(13)(24)", 4)]).unwrap();
    let g = l.subgroup(&[perm("(12)", 4), perm("(34)", 4)]).unwrap();
    let mp = matched_pair_from_factorization(&l, &f, &g).unwrap();
    let mut cp = CocyclePair::trivial(&mp, k);
    cp.sigma[15] = k.int(-1);
    for i in [19, 23, 27, 31] {
        cp.tau[i] = k.int(-1);
    }
    abelian_extension(&mp, &cp, k).unwrap()
}

/// The dim-6 abelian extension from S₃ = ⟨(12)⟩⟨(123)⟩ with trivial cocycles.
pub fn abelian_s3(k: &Conductor) -> Extension {
    let l = PermGroup::symmetric(3).unwrap();
    let f = l.subgroup(&[perm("(12)", 3)]).unwrap();
    let g = l.subgroup(&[perm("(123)", 3)]).unwrap();
    let mp = matched_pair_from_factorization(&l, &f, &g).unwrap();
    abelian_extension(&mp, &CocyclePair::trivial(&mp, k), k).unwrap()
}

pub fn gamma_12() -> PermGroup {
    group(4, &["(12)"])
}

/// (kS₄)^J ⋊ k^{Z/2} with Γ = ⟨(12)⟩ acting by conjugation, and its Galindo
/// twist counterpart.
pub fn dim48(k: &Conductor) -> (Extension, Arc<FinHopf>) {
    galindo_pair(&s4_twist(k), &s4_twist(k).n.subgroup(&[perm("(12)", 4)]).unwrap()).unwrap()
}

pub fn small_groups() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("Z/2", PermGroup::cyclic(2)),
        ("Z/6", PermGroup::cyclic(6)),
        ("S3", PermGroup::symmetric(3).unwrap()),
        ("D4", group(4, &["(1234)", "(13)"])),
        ("Q8", group(8, &["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"])),
        ("S4", PermGroup::symmetric(4).unwrap()),
    ]
}

pub fn group_and_dual_algebras(k: &Conductor) -> Vec<(String, FinHopf)> {
    small_groups()
        .into_iter()
        .flat_map(|(name, g)| {
            [(format!("k{name}"), group_algebra(&g, k)), (format!("k^{name}"), dual_group_algebra(&g, k))]
        })
        .collect()
}

pub fn coords(v: &SparseVec) -> Vec<(usize, String)> {
    v.iter().map(|(i, c)| (*i, c.to_compact())).collect()
}
