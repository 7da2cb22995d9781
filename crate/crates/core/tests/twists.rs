mod common;

use std::sync::Arc;

use common::*;
use hopf_core::constructions::TwistedGroupData;
use hopf_core::groups::{abelian_characters, DualCocycle, PermGroup};
use hopf_core::hopf::{apply_twist, FinHopf, TwistElement};
use hopf_core::{Accum, CycNumber, SparseVec};

/// (Δ⊗id)(x) for x ∈ H⊗H, expanded from the comultiplication of basis vectors.
fn delta_left(h: &FinHopf, x: &SparseVec) -> SparseVec {
    let n = h.dim();
    let mut acc = Accum::new();
    for (ij, c) in x.iter() {
        let (i, j) = (ij / n, ij % n);
        for (ab, d) in h.comult(&h.basis(i)).iter() {
            acc.push(ab * n + j, c * d);
        }
    }
    acc.finish()
}

fn delta_right(h: &FinHopf, x: &SparseVec) -> SparseVec {
    let n = h.dim();
    let mut acc = Accum::new();
    for (ij, c) in x.iter() {
        let (i, j) = (ij / n, ij % n);
        for (bc, d) in h.comult(&h.basis(j)).iter() {
            acc.push(i * n * n + bc, c * d);
        }
    }
    acc.finish()
}

fn with_unit_right(x: &SparseVec, unit: &SparseVec, n: usize) -> SparseVec {
    let mut acc = Accum::new();
    for (ij, c) in x.iter() {
        for (u, d) in unit.iter() {
            acc.push(ij * n + u, c * d);
        }
    }
    acc.finish()
}

fn with_unit_left(x: &SparseVec, unit: &SparseVec, n: usize) -> SparseVec {
    let mut acc = Accum::new();
    for (u, d) in unit.iter() {
        for (jk, c) in x.iter() {
            acc.push(u * n * n + jk, c * d);
        }
    }
    acc.finish()
}

fn counit_side(h: &FinHopf, x: &SparseVec, left: bool) -> SparseVec {
    let n = h.dim();
    let mut acc = Accum::new();
    for (ij, c) in x.iter() {
        let (i, j) = (ij / n, ij % n);
        let (kill, keep) = if left { (i, j) } else { (j, i) };
        let e = h.counit(&h.basis(kill));
        if !e.is_zero() {
            acc.push(keep, c * &e);
        }
    }
    acc.finish()
}

/// Both defining conditions of a twist, checked from scratch.
fn assert_twist_laws(j: &TwistElement) {
    let h = &*j.host;
    let n = h.dim();
    assert_eq!(h.mul_power(2, &j.element, &j.inverse), h.one_power(2), "J J⁻¹ = 1");
    let lhs = h.mul_power(3, &delta_left(h, &j.element), &with_unit_right(&j.element, h.unit(), n));
    let rhs = h.mul_power(3, &delta_right(h, &j.element), &with_unit_left(&j.element, h.unit(), n));
    assert_eq!(lhs, rhs, "(Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J)");
    assert_eq!(counit_side(h, &j.element, true), *h.unit(), "(ε⊗id)(J) = 1");
    assert_eq!(counit_side(h, &j.element, false), *h.unit(), "(id⊗ε)(J) = 1");
}

fn catalogue(k: &hopf_core::Conductor) -> Vec<(&'static str, TwistedGroupData)> {
    vec![("S4, S = ⟨(12),(34)⟩", s4_twist(k)), ("V4, S = V4", v4_twist(k))]
}

#[test]
fn twists_of_the_catalogue_satisfy_the_twist_equations() {
    let k = field(4);
    for (name, data) in catalogue(&k) {
        let j = data.twist().unwrap();
        assert!(!j.is_trivial(), "{name}");
        assert_twist_laws(&j);
    }
}

#[test]
fn untwisting_recovers_the_group_algebra_and_keeps_the_product() {
    let k = field(4);
    for (name, data) in catalogue(&k) {
        let kn = data.kn();
        let j = data.twist().unwrap();
        let hj = Arc::new(apply_twist(&j).unwrap());
        assert_eq!(hj.mult_tensor(), kn.mult_tensor(), "{name}: product unchanged");
        let back = apply_twist(&j.inverse_twist(hj.clone()).unwrap()).unwrap();
        assert_eq!(back.mult_tensor(), kn.mult_tensor(), "{name}");
        assert_eq!(back.comult_tensor(), kn.comult_tensor(), "{name}");
        assert_eq!(back.antipode_tensor(), kn.antipode_tensor(), "{name}");
        assert_eq!(back.counit_tensor(), kn.counit_tensor(), "{name}");
    }
}

/// S ⊴ N, S abelian, and the alternating form of ω invariant under the
/// conjugation action of N on Ŝ.
fn group_theoretic_criterion(data: &TwistedGroupData) -> bool {
    let (n, s) = (&data.n, &data.s);
    if !s.is_abelian() || !n.is_normal_subgroup(s).unwrap() {
        return false;
    }
    let dual = &data.omega.dual;
    let m = dual.order();
    let act = |x: usize, chi: usize| -> usize {
        let px = n.elem(x);
        let values: Vec<u32> = (0..s.order())
            .map(|i| {
                let moved = s.elem(i).conj(&px.inv());
                dual.chars[chi].values[s.index_of(&moved).unwrap()]
            })
            .collect();
        dual.index_of_values(&values).unwrap()
    };
    (0..n.order()).all(|x| {
        (0..m).all(|a| (0..m).all(|b| data.omega.alternating(act(x, a), act(x, b)) == data.omega.alternating(a, b)))
    })
}

#[test]
fn cocommutativity_agrees_with_the_group_theoretic_criterion() {
    let k = field(4);
    let s4 = PermGroup::symmetric(4).unwrap();
    let cases = vec![
        ("V4 in V4", v4_twist(&k), true),
        ("V4 normal in D4", twist_data(&group(4, &["(1234)", "(13)"]), "(13)", "(24)", &k), true),
        ("⟨(12),(34)⟩ in S4", s4_twist(&k), false),
        ("V4 normal in S4", twist_data(&s4, "(12)(34)", "(13)(24)", &k), true),
        ("V4 normal in A4", twist_data(&PermGroup::alternating(4).unwrap(), "(12)(34)", "(13)(24)", &k), true),
        ("⟨(12),(45)⟩ in S3×Z/2", twist_data(&group(5, &["(123)", "(12)", "(45)"]), "(12)", "(45)", &k), false),
        ("⟨(13),(24)⟩ in S4", twist_data(&s4, "(13)", "(24)", &k), false),
    ];
    let mut outcomes = Vec::new();
    for (name, data, expected) in cases {
        let direct = data.twisted().unwrap().is_cocommutative();
        let criterion = group_theoretic_criterion(&data);
        assert_eq!(direct, criterion, "{name}: direct {direct}, criterion {criterion}");
        assert_eq!(direct, expected, "{name}");
        outcomes.push(direct);
    }
    assert!(outcomes.contains(&true) && outcomes.contains(&false));
}

#[test]
fn a_non_cocycle_table_is_rejected() {
    let k = field(4);
    let s = group(4, &["(12)", "(34)"]);
    let dual = abelian_characters(&s, &k).unwrap();
    let mut values = vec![k.one(); 16];
    values[9] = k.int(-1);
    assert!(DualCocycle::from_table(&dual, values).is_err());
    let zero: Vec<CycNumber> = vec![k.zero(); 16];
    assert!(DualCocycle::from_table(&dual, zero).is_err());
}
