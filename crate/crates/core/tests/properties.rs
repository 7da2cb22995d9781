use hopf_core::groups::{abelian_characters, nondegenerate_two_cocycle, Decomposition, Perm, PermGroup};
use hopf_core::hopf::{apply_twist, group_algebra, twist_from_pair};
use hopf_core::linalg::invert_columns;
use hopf_core::{Conductor, CycNumber, Rational, SparseVec};
use proptest::prelude::*;
use std::sync::Arc;

fn conductors() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 4, 5, 8, 12, 15])
}

fn element(field: Conductor) -> impl Strategy<Value = CycNumber> {
    let d = field.degree();
    prop::collection::vec((-20i64..=20, 1i64..=6), d).prop_map(move |terms| {
        let coeffs: Vec<Rational> = terms.into_iter().map(|(a, b)| Rational::new(a, b)).collect();
        field.from_coeffs(&coeffs)
    })
}

fn triple() -> impl Strategy<Value = (CycNumber, CycNumber, CycNumber)> {
    conductors().prop_flat_map(|n| {
        let k = Conductor::new(n).unwrap();
        (element(k.clone()), element(k.clone()), element(k))
    })
}

proptest! {
    #[test]
    fn field_axioms_hold((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn literals_round_trip((a, _, _) in triple()) {
        let back = CycNumber::parse_literal(&a.to_literal(), a.conductor()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn roots_of_unity_multiply_by_exponent(n in conductors(), x in -40i64..40, y in -40i64..40) {
        let k = Conductor::new(n).unwrap();
        prop_assert_eq!(&k.root_of_unity(x) * &k.root_of_unity(y), k.root_of_unity(x + y));
        prop_assert!(k.root_of_unity(i64::from(n)).is_one());
    }

    #[test]
    fn triangular_matrices_invert(entries in prop::collection::vec((-5i64..=5, 1i64..=3), 10)) {
        let k = Conductor::new(4).unwrap();
        let mut it = entries.into_iter();
        let cols: Vec<SparseVec> = (0..4)
            .map(|j| {
                SparseVec::from_terms((0..=j).map(|i| {
                    let (a, b) = it.next().unwrap();
                    (i, if i == j { k.int(a.abs() + 1) } else { k.frac(a, b) })
                }))
            })
            .collect();
        let inv = invert_columns(&cols, &k).unwrap();
        for (j, col) in cols.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (i, c) in col.iter() {
                acc = acc.axpy(c, &inv[*i]);
            }
            prop_assert_eq!(acc, SparseVec::unit(j, &k));
        }
    }

    #[test]
    fn twisting_never_changes_the_product(c in prop::sample::select(vec!["()", "(123)", "(1234)", "(13)", "(243)"])) {
        let k = Conductor::new(4).unwrap();
        let n = PermGroup::symmetric(4).unwrap();
        let g = Perm::parse(c, 4).unwrap();
        let a = Perm::parse("(12)", 4).unwrap().conj(&g);
        let b = Perm::parse("(34)", 4).unwrap().conj(&g);
        let s = n.subgroup(&[a.clone(), b.clone()]).unwrap();
        let omega = nondegenerate_two_cocycle(&s, &Decomposition { first: vec![a], second: vec![b] }, &k).unwrap();
        prop_assert!(omega.is_nondegenerate());
        prop_assert_eq!(omega.dual.order(), abelian_characters(&s, &k).unwrap().order());
        let kn = Arc::new(group_algebra(&n, &k));
        let j = twist_from_pair(kn.clone(), &n, &s, &omega).unwrap();
        let hj = apply_twist(&j).unwrap();
        prop_assert_eq!(hj.mult_tensor(), kn.mult_tensor());
        prop_assert!(!hj.is_cocommutative());
    }
}
