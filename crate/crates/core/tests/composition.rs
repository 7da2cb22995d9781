mod common;

use std::sync::Arc;

use common::*;
use hopf_core::analysis::{composition_series, isomorphism_search, jordan_holder_check, CandidateOrder, CompositionSeries, IsoVerdict, JordanHolder};
use hopf_core::groups::PermGroup;
use hopf_core::hopf::{dual_group_algebra, group_algebra, FinHopf};

fn both_orders(h: &Arc<FinHopf>) -> (CompositionSeries, CompositionSeries) {
    (
        composition_series(h, CandidateOrder::SmallestFirst).unwrap(),
        composition_series(h, CandidateOrder::LargestFirst).unwrap(),
    )
}

/// How many factors are certified isomorphic to k^{Z/p}.
fn count_cyclic_duals(s: &CompositionSeries, p: usize) -> usize {
    let k = s.factors[0].field().clone();
    let target = Arc::new(dual_group_algebra(&PermGroup::cyclic(p), &k));
    s.factors.iter().filter(|f| matches!(isomorphism_search(f, &target), IsoVerdict::Iso(_))).count()
}

#[test]
fn dual_of_z6_has_two_distinct_series_with_matching_factors() {
    let k = field(12);
    let h = Arc::new(dual_group_algebra(&PermGroup::cyclic(6), &k));
    let (a, b) = both_orders(&h);
    assert!(a.certified && b.certified);
    assert_eq!(a.length(), 2);
    assert_ne!(a.witnesses, b.witnesses);
    assert!(matches!(jordan_holder_check(&a, &b), JordanHolder::Matched(_)));
    assert_eq!((count_cyclic_duals(&a, 2), count_cyclic_duals(&a, 3)), (1, 1));
}

#[test]
fn dual_of_s4_has_length_four() {
    let k = field(12);
    let h = Arc::new(dual_group_algebra(&PermGroup::symmetric(4).unwrap(), &k));
    let (a, b) = both_orders(&h);
    assert!(a.certified);
    assert_eq!(a.length(), 4);
    assert_eq!((count_cyclic_duals(&a, 2), count_cyclic_duals(&a, 3)), (3, 1));
    assert!(matches!(jordan_holder_check(&a, &b), JordanHolder::Matched(_)));
}

#[test]
fn group_algebra_of_a5_is_certified_simple() {
    let k = field(4);
    let h = Arc::new(group_algebra(&PermGroup::alternating(5).unwrap(), &k));
    let s = composition_series(&h, CandidateOrder::SmallestFirst).unwrap();
    assert!(s.certified);
    assert_eq!(s.length(), 1);
    assert_eq!(s.factors[0].dim(), 60);
}

#[test]
fn dim_48_series_is_consistent_across_orders() {
    let k = field(12);
    let (ext, _) = dim48(&k);
    let (a, b) = both_orders(&ext.hopf);
    assert_eq!(a.factors.iter().map(|f| f.dim()).product::<usize>(), 48);
    assert!(matches!(jordan_holder_check(&a, &b), JordanHolder::Matched(_)));
}
