mod common;

use common::*;
use hookblock_core::characters::{hook_simple_character, max_hook_index, weyl_character};
use hookblock_core::combinatorics::{hook_partition, Weight};
use hookblock_core::jantzen::{jantzen_sum, radical_multiple, verify_lemma_a};

#[test]
fn straightened_terms_are_strictly_dominated() {
    for lambda in all_partitions(7) {
        for p in primes() {
            for n in lambda.len().max(1)..=lambda.len() + 1 {
                let sum = jantzen_sum(&lambda, n, p).unwrap();
                for (w, _) in sum.terms.terms() {
                    let mu = w.to_partition().expect("polynomial term");
                    assert_eq!(mu.size(), lambda.size());
                    assert!(lambda.dominates(&mu) && mu != lambda, "{mu} under {lambda}");
                }
                for entry in &sum.ledger {
                    assert_eq!(
                        entry.valuation,
                        1 + hookblock_core::arith::valuation(p, entry.m as i64)
                    );
                }
            }
        }
    }
}

#[test]
fn hook_sums_are_positive_multiples_of_the_next_simple() {
    for p in primes() {
        for n in 1..=p.as_usize() {
            for i in 0..max_hook_index(p, n) {
                assert!(
                    verify_lemma_a(p, n, i).unwrap(),
                    "p = {p}, n = {n}, i = {i}"
                );
                let k = radical_multiple(p, n, i).unwrap();
                assert!(
                    matches!(k, Some(k) if k >= 1),
                    "p = {p}, n = {n}, i = {i}: {k:?}"
                );
            }
        }
    }
}

#[test]
fn empty_sum_means_simple_weyl_module() {
    for p in primes() {
        for n in 1..=p.as_usize() + 2 {
            let m = max_hook_index(p, n);
            for i in 0..=m {
                let hook = hook_partition(p, i).unwrap();
                let sum = jantzen_sum(&hook, n, p).unwrap();
                if sum.terms.is_empty() {
                    assert_eq!(
                        hook_simple_character(p, n, i).unwrap(),
                        weyl_character(&hook, n).unwrap()
                    );
                }
            }
            let last = jantzen_sum(&hook_partition(p, m).unwrap(), n, p).unwrap();
            assert!(last.character().unwrap().is_zero(), "p = {p}, n = {n}");
        }
    }
}

#[test]
fn three_three_one() {
    let sum = jantzen_sum(&pt("2,1"), 3, prime(3)).unwrap();
    let terms: Vec<(Weight, i64)> = sum.terms.terms().map(|(w, k)| (w.clone(), k)).collect();
    assert_eq!(terms, vec![(Weight::new(vec![1, 1, 1]), 1)]);
    assert_eq!(radical_multiple(prime(3), 3, 1).unwrap(), Some(1));
}

#[test]
fn hook_index_out_of_range() {
    assert!(verify_lemma_a(prime(3), 3, 2).is_err());
}
