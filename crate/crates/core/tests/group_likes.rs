mod common;

use common::*;
use hopf_core::analysis::{group_like_group, group_likes};
use hopf_core::hopf::{dual_group_algebra, group_algebra, tensor_vecs, FinHopf};
use hopf_core::groups::PermGroup;
use hopf_core::{CycNumber, SparseVec};

/// Every x with coefficients in `values`, Δx = x⊗x and ε(x) = 1.
fn brute_force(h: &FinHopf, values: &[CycNumber]) -> Vec<SparseVec> {
    let n = h.dim();
    let mut digits = vec![0usize; n];
    let mut found = Vec::new();
    loop {
        let x = SparseVec::from_terms((0..n).map(|i| (i, values[digits[i]].clone())));
        if h.counit(&x).is_one() && h.comult(&x) == tensor_vecs(&x, &x, n) {
            found.push(x);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return found;
            }
            digits[pos] += 1;
            if digits[pos] < values.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn assert_matches_oracle(h: &FinHopf, values: &[CycNumber], expected: usize) {
    let mut oracle: Vec<_> = brute_force(h, values).iter().map(coords).collect();
    let mut computed: Vec<_> = group_likes(h).unwrap().iter().map(coords).collect();
    oracle.sort();
    computed.sort();
    assert_eq!(oracle.len(), expected);
    assert_eq!(computed, oracle);
}

#[test]
fn dim_8_abelian_extension_has_four_group_likes() {
    let k = field(4);
    let i = k.root_of_unity(1);
    let values = [k.zero(), k.one(), k.int(-1), i.clone(), -&i];
    assert_matches_oracle(&kac_paljutkin(&k).hopf, &values, 4);
}

#[test]
fn dual_of_s3_has_the_trivial_and_sign_characters() {
    let k = field(4);
    let values = [k.zero(), k.one(), k.int(-1)];
    assert_matches_oracle(&dual_group_algebra(&PermGroup::symmetric(3).unwrap(), &k), &values, 2);
}

#[test]
fn group_algebras_have_their_group_as_group_likes() {
    let k = field(12);
    for (name, g) in small_groups() {
        let gl = group_like_group(&group_algebra(&g, &k)).unwrap();
        assert_eq!(gl.likes.len(), g.order(), "{name}");
        assert_eq!(gl.group.is_abelian(), g.is_abelian(), "{name}");
        assert!(gl.likes.iter().all(|v| v.len() == 1), "{name}");
    }
}

#[test]
fn dual_group_algebras_have_the_linear_characters() {
    let k = field(12);
    let expected = [("Z/2", 2), ("Z/6", 6), ("S3", 2), ("D4", 4), ("Q8", 4), ("S4", 2)];
    for ((name, g), (_, count)) in small_groups().into_iter().zip(expected) {
        assert_eq!(group_likes(&dual_group_algebra(&g, &k)).unwrap().len(), count, "{name}");
    }
}

#[test]
fn a_field_without_the_character_values_is_reported() {
    let k = field(4);
    let err = group_likes(&dual_group_algebra(&PermGroup::cyclic(3), &k)).unwrap_err();
    assert!(err.to_string().contains("enlarge the conductor"));
}
