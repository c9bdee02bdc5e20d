mod common;

use common::*;
use hookblock_core::combinatorics::{
    dot_reflect, enumerate_standard_tableaux, from_symbol, hook_partition, mullineux,
    mullineux_symbol, partitions_of, standard_tableaux_count, AffineReflection, Partition, Weight,
};
use proptest::prelude::*;

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=12)
        .map(|r| partitions_of(r, usize::MAX).len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    assert_eq!(partitions_of(6, 2).len(), 4);
}

#[test]
fn conjugate_is_an_involution() {
    for lambda in all_partitions(12) {
        assert_eq!(lambda.conjugate().conjugate(), lambda);
        assert_eq!(lambda.conjugate().size(), lambda.size());
    }
}

#[test]
fn conjugate_hooks() {
    for p in primes() {
        for i in 0..p.as_usize() {
            let h = hook_partition(p, i).unwrap();
            assert_eq!(
                h.conjugate(),
                hook_partition(p, p.as_usize() - 1 - i).unwrap()
            );
        }
        assert!(hook_partition(p, p.as_usize()).is_err());
    }
}

#[test]
fn column_regularity_is_regularity_of_the_conjugate() {
    for p in primes() {
        for lambda in all_partitions(12) {
            assert_eq!(
                lambda.is_column_p_regular(p),
                lambda.conjugate().is_p_regular(p)
            );
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for r in 0..=7 {
        let parts = partitions_of(r, usize::MAX);
        for a in &parts {
            assert!(a.dominates(a));
            for b in &parts {
                if a.dominates(b) && b.dominates(a) {
                    assert_eq!(a, b);
                }
                if a.dominates(b) {
                    assert!(b.conjugate().dominates(&a.conjugate()));
                }
                for c in &parts {
                    if a.dominates(b) && b.dominates(c) {
                        assert!(a.dominates(c));
                    }
                }
            }
        }
    }
}

#[test]
fn linear_dot_reflection_is_an_involution() {
    // exhaustive over a box of integral weights in rank 3
    for a in -3..=3i64 {
        for b in -3..=3 {
            for c in -3..=3 {
                let w = Weight::new(vec![a, b, c]);
                for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                    let s = AffineReflection::linear(i, j);
                    assert_eq!(dot_reflect(&s, &dot_reflect(&s, &w).unwrap()).unwrap(), w);
                }
            }
        }
    }
}

#[test]
fn standard_tableaux_count_matches_enumeration() {
    for lambda in all_partitions(8) {
        let tableaux = enumerate_standard_tableaux(&lambda, None).unwrap();
        assert_eq!(
            standard_tableaux_count(&lambda).unwrap(),
            tableaux.len() as u64,
            "{lambda}"
        );
        assert!(tableaux
            .iter()
            .all(|t| t.is_standard() && t.shape() == &lambda));
        assert!(tableaux.windows(2).all(|w| w[0].entries() < w[1].entries()));
    }
    // Σ (f^λ)² = r!
    for r in 0..=8u64 {
        let total: u64 = partitions_of(r, usize::MAX)
            .iter()
            .map(|l| standard_tableaux_count(l).unwrap().pow(2))
            .sum();
        assert_eq!(total, (1..=r).product::<u64>());
    }
}

#[test]
fn mullineux_is_an_involution() {
    for p in primes() {
        for lambda in all_partitions(8).into_iter().filter(|l| l.is_p_regular(p)) {
            let image = mullineux(&lambda, p).unwrap();
            assert!(image.is_p_regular(p), "{lambda} -> {image} at p = {p}");
            assert_eq!(image.size(), lambda.size());
            assert_eq!(mullineux(&image, p).unwrap(), lambda, "p = {p}");
            let symbol = mullineux_symbol(&lambda, p).unwrap();
            assert_eq!(from_symbol(&symbol, p).unwrap(), lambda);
        }
    }
}

#[test]
fn mullineux_of_conjugate_hooks() {
    for p in primes() {
        for i in 1..p.as_usize() {
            let conj = hook_partition(p, i).unwrap().conjugate();
            assert_eq!(
                mullineux(&conj, p).unwrap(),
                hook_partition(p, i - 1).unwrap()
            );
        }
    }
}

#[test]
fn mullineux_known_values() {
    let p = prime(3);
    assert_eq!(mullineux(&pt("2,1"), p).unwrap(), pt("3"));
    assert_eq!(mullineux(&pt("3"), p).unwrap(), pt("2,1"));
    // when p > r the map is conjugation
    for lambda in all_partitions(4) {
        assert_eq!(mullineux(&lambda, prime(5)).unwrap(), lambda.conjugate());
    }
    assert!(mullineux(&pt("1,1,1"), p).is_err());
}

#[test]
fn malformed_partitions_rejected() {
    for bad in ["2,x", "1,2", "-1", "1,,1", "3.5", "3,1,0", ""] {
        assert!(bad.parse::<Partition>().is_err(), "{bad}");
    }
    assert_eq!(pt(" 3, 1 "), Partition::new(vec![3, 1, 0]).unwrap());
}

proptest! {
    #[test]
    fn affine_dot_reflection_is_an_involution(
        coords in proptest::collection::vec(-20i64..20, 2..6),
        level in -3i64..=3,
        pi in 0usize..4,
        ij in (0usize..5, 0usize..5),
    ) {
        let p = prime(PRIMES[pi]);
        let n = coords.len();
        let (a, b) = (ij.0 % n, ij.1 % n);
        prop_assume!(a != b);
        let (i, j) = (a.min(b) + 1, a.max(b) + 1);
        let s = AffineReflection::new(i, j, level * p.as_i64(), p).unwrap();
        let w = Weight::new(coords);
        prop_assert_eq!(dot_reflect(&s, &dot_reflect(&s, &w).unwrap()).unwrap(), w);
    }
}
