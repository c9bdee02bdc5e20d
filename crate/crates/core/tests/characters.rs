mod common;

use common::*;
use hookblock_core::characters::{
    chi_straighten, hook_simple_character, kostka, max_hook_index, weyl_character, weyl_dimension,
};
use hookblock_core::combinatorics::{
    enumerate_standard_tableaux, hook_partition, partitions_of, Weight,
};

#[test]
fn kostka_matches_tableau_count() {
    for r in 0..=7 {
        let parts = partitions_of(r, usize::MAX);
        for lambda in &parts {
            for mu in &parts {
                let k = kostka(lambda, mu.parts()).unwrap();
                assert_eq!(k, count_ssyt(lambda, mu.parts()), "K({lambda},{mu})");
                if !lambda.dominates(mu) {
                    assert_eq!(k, 0);
                }
                if lambda == mu {
                    assert_eq!(k, 1);
                }
            }
        }
    }
}

#[test]
fn kostka_is_symmetric_in_content() {
    for r in 0..=6 {
        for lambda in partitions_of(r, usize::MAX) {
            for mu in partitions_of(r, usize::MAX) {
                let mut padded = mu.parts().to_vec();
                padded.resize(lambda.len().max(mu.len()) + 1, 0);
                let k = kostka(&lambda, mu.parts()).unwrap();
                for perm in distinct_permutations(&padded) {
                    assert_eq!(kostka(&lambda, &perm).unwrap(), k, "K({lambda},{perm:?})");
                }
            }
        }
    }
}

#[test]
fn semistandard_enumeration_agrees_with_kostka() {
    for lambda in all_partitions(6) {
        for mu in partitions_of(lambda.size(), usize::MAX) {
            let listed = enumerate_standard_tableaux(&lambda, Some(mu.parts())).unwrap();
            assert!(listed.iter().all(|t| t.is_semistandard()));
            assert_eq!(listed.len() as u64, kostka(&lambda, mu.parts()).unwrap());
        }
    }
}

/// `Π_{i<j} (λ_i − λ_j + j − i) / (j − i)` over exact rationals.
fn product_formula(lambda: &[i64]) -> u64 {
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            num *= (lambda[i] - lambda[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as u64
}

#[test]
fn three_dimension_computations_agree() {
    for lambda in all_partitions(8) {
        let n = (lambda.size() as usize).max(1);
        let ch = weyl_character(&lambda, n).unwrap();
        let by_orbits: u64 = partitions_of(lambda.size(), n)
            .iter()
            .map(|mu| {
                let w = Weight::from_partition(mu, n).unwrap();
                kostka(&lambda, mu.parts()).unwrap() * w.orbit_size().unwrap()
            })
            .sum();
        let formula = product_formula(&lambda.padded(n).unwrap());
        assert_eq!(ch.dim().unwrap() as u64, by_orbits, "{lambda}");
        assert_eq!(weyl_dimension(&lambda, n).unwrap(), formula, "{lambda}");
        assert_eq!(by_orbits, formula, "{lambda}");
    }
}

#[test]
fn straightening_fixes_dominant_weights() {
    for lambda in all_partitions(6) {
        for n in lambda.len().max(1)..=lambda.len() + 2 {
            let w = Weight::from_partition(&lambda, n).unwrap();
            let s = chi_straighten(&w);
            assert_eq!(s.sign, 1);
            assert_eq!(s.dominant.as_ref(), Some(&w));
            assert_eq!(chi_straighten(s.dominant.as_ref().unwrap()), s);
        }
    }
    assert_eq!(chi_straighten(&Weight::new(vec![0, 1])).sign, 0);
    let s = chi_straighten(&Weight::new(vec![0, 2]));
    assert_eq!((s.sign, s.dominant), (-1, Some(Weight::new(vec![1, 1]))));
}

#[test]
fn hook_simples_are_genuine_characters() {
    for p in primes() {
        for n in 1..=p.as_usize() + 2 {
            for i in 0..=max_hook_index(p, n) {
                let ch = hook_simple_character(p, n, i).unwrap();
                assert!(ch.is_nonnegative(), "p = {p}, n = {n}, i = {i}");
                assert!(ch.dim().unwrap() > 0);
            }
        }
    }
}

#[test]
fn weyl_characters_split_into_two_hook_simples() {
    for p in primes() {
        for n in 1..=p.as_usize() + 2 {
            let m = max_hook_index(p, n);
            for i in 0..=m {
                let weyl = weyl_character(&hook_partition(p, i).unwrap(), n).unwrap();
                let mut rest = weyl
                    .checked_sub(&hook_simple_character(p, n, i).unwrap())
                    .unwrap();
                if i < m {
                    rest = rest
                        .checked_sub(&hook_simple_character(p, n, i + 1).unwrap())
                        .unwrap();
                }
                assert!(rest.is_zero(), "p = {p}, n = {n}, i = {i}: {rest}");
            }
        }
    }
}

#[test]
fn hook_kostka_identity() {
    // K_{λ^i, μ} = mult_μ L(λ^i) + mult_μ L(λ^{i+1})
    for p in primes() {
        let n = p.as_usize();
        let m = max_hook_index(p, n);
        for i in 0..m {
            let hook = hook_partition(p, i).unwrap();
            let a = hook_simple_character(p, n, i).unwrap();
            let b = hook_simple_character(p, n, i + 1).unwrap();
            for mu in partitions_of(p.get(), n) {
                let w = Weight::from_partition(&mu, n).unwrap();
                assert_eq!(
                    kostka(&hook, mu.parts()).unwrap() as i64,
                    a.mult(&w) + b.mult(&w),
                    "p = {p}, i = {i}, μ = {mu}"
                );
            }
        }
    }
}

#[test]
fn simple_character_outside_the_hook_range() {
    let p = prime(5);
    assert!(hook_simple_character(p, 3, 3).is_err());
    assert!(hook_simple_character(p, 5, 4).is_ok());
}

#[test]
fn one_to_the_p_multiplicities() {
    let p = prime(5);
    let ones = Weight::new(vec![1; 5]);
    let mults: Vec<i64> = (0..5)
        .map(|i| hook_simple_character(p, 5, i).unwrap().mult(&ones))
        .collect();
    assert_eq!(mults, vec![0, 1, 3, 3, 1]);
}
