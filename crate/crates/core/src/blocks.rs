//! Blocks of the Schur algebra `S(n, r)` via Donkin's residue criterion.

use serde::Serialize;

use crate::arith::{checked_pow, Prime};
use crate::combinatorics::{partitions_of, rho, Partition, Weight};
use crate::error::{Error, Result};

/// The depth `d(λ)`: the largest `d` with `λ_i − λ_{i+1} ≡ −1 (mod p^d)` for
/// all `1 ≤ i < n`. `None` when `n = 1`, where the condition is vacuous.
pub fn d_value(lambda: &Partition, p: Prime, n: usize) -> Result<Option<u32>> {
    let padded = lambda.padded(n)?;
    if n < 2 {
        return Ok(None);
    }
    // every λ_i − λ_{i+1} + 1 is divisible by p^d; the minimum over i bounds d
    let shifted: Vec<u64> = padded
        .windows(2)
        .map(|w| (w[0] - w[1]) as u64 + 1)
        .collect();
    let mut d = 0u32;
    loop {
        let modulus = match checked_pow(p.get(), d + 1) {
            Ok(m) => m,
            Err(_) => return Ok(Some(d)),
        };
        if shifted.iter().all(|&x| x % modulus == 0) {
            d += 1;
        } else {
            return Ok(Some(d));
        }
    }
}

fn check_pair(lambda: &Partition, mu: &Partition, n: usize) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    lambda.padded(n)?;
    mu.padded(n)?;
    Ok(())
}

fn sorted_residues(coords: impl Iterator<Item = i64>, modulus: i64) -> Vec<i64> {
    let mut v: Vec<i64> = coords.map(|c| c.rem_euclid(modulus)).collect();
    v.sort_unstable();
    v
}

fn common_modulus(lambda: &Partition, mu: &Partition, p: Prime, n: usize) -> Result<Option<i64>> {
    let (dl, dm) = (d_value(lambda, p, n)?, d_value(mu, p, n)?);
    if dl != dm {
        return Ok(None);
    }
    match dl {
        // n = 1: a single partition of r
        None => Ok(None),
        Some(d) => {
            let m = checked_pow(p.get(), d + 1)?;
            Ok(Some(
                i64::try_from(m).map_err(|_| Error::Overflow("block modulus"))?,
            ))
        }
    }
}

/// Whether `L(λ)` and `L(μ)` lie in the same block of `S(n, r)`: equal depth
/// and equal multisets of residues of `λ + ρ`, `μ + ρ` modulo `p^{d+1}`.
pub fn same_block(lambda: &Partition, mu: &Partition, n: usize, p: Prime) -> Result<bool> {
    check_pair(lambda, mu, n)?;
    if lambda == mu {
        return Ok(true);
    }
    let Some(modulus) = common_modulus(lambda, mu, p, n)? else {
        return Ok(false);
    };
    let rho = rho(n);
    let shifted = |x: &Partition| -> Result<Weight> { Ok(&Weight::from_partition(x, n)? + &rho) };
    let a = sorted_residues(shifted(lambda)?.coords().iter().copied(), modulus);
    let b = sorted_residues(shifted(mu)?.coords().iter().copied(), modulus);
    Ok(a == b)
}

/// The same criterion in its unshifted form: residues of `λ_i − i`.
pub fn same_block_unshifted(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    p: Prime,
) -> Result<bool> {
    check_pair(lambda, mu, n)?;
    if lambda == mu {
        return Ok(true);
    }
    let Some(modulus) = common_modulus(lambda, mu, p, n)? else {
        return Ok(false);
    };
    let contents = |x: &Partition| -> Result<Vec<i64>> {
        Ok(x.padded(n)?
            .into_iter()
            .enumerate()
            .map(|(i, c)| c - (i as i64 + 1))
            .collect())
    };
    let a = sorted_residues(contents(lambda)?.into_iter(), modulus);
    let b = sorted_residues(contents(mu)?.into_iter(), modulus);
    Ok(a == b)
}

/// One block, identified with the highest weights of its simples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDescriptor {
    /// members in decreasing lexicographic order
    pub members: Vec<Partition>,
    pub d: Option<u32>,
}

impl BlockDescriptor {
    /// The lexicographically greatest member.
    pub fn representative(&self) -> &Partition {
        &self.members[0]
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.members.contains(lambda)
    }
}

/// All `λ ⊢ r` with at most `n` parts, grouped into blocks. Blocks are
/// ordered by representative, lexicographically greatest first.
pub fn block_partition(n: usize, r: u64, p: Prime) -> Result<Vec<BlockDescriptor>> {
    let weights = partitions_of(r, n);
    let mut blocks: Vec<BlockDescriptor> = Vec::new();
    for lambda in weights {
        let mut placed = false;
        for block in &mut blocks {
            if same_block(block.representative(), &lambda, n, p)? {
                block.members.push(lambda.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            let d = d_value(&lambda, p, n)?;
            blocks.push(BlockDescriptor {
                members: vec![lambda],
                d,
            });
        }
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::hook_partition;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn d_values() {
        for p in [2, 3, 5, 7] {
            for i in 0..p as usize {
                let hook = hook_partition(prime(p), i).unwrap();
                assert_eq!(d_value(&hook, prime(p), p as usize).unwrap(), Some(0));
            }
            let flat = Partition::new(vec![p - 1; 4]).unwrap();
            assert_eq!(d_value(&flat, prime(p), 4).unwrap(), Some(0));
            assert_eq!(
                d_value(&Partition::row(p - 1), prime(p), 2).unwrap(),
                Some(1)
            );
        }
        // (8) with n = 2 and p = 3: 8 + 1 = 9
        assert_eq!(d_value(&pt("8"), prime(3), 2).unwrap(), Some(2));
        assert_eq!(d_value(&pt("4"), prime(3), 1).unwrap(), None);
    }

    #[test]
    fn hooks_are_linked() {
        let p = prime(5);
        for i in 0..5 {
            for j in 0..5 {
                let a = hook_partition(p, i).unwrap();
                let b = hook_partition(p, j).unwrap();
                assert!(same_block(&a, &b, 5, p).unwrap());
            }
        }
    }

    #[test]
    fn small_example() {
        let p = prime(3);
        assert!(same_block(&pt("3"), &pt("2,1"), 3, p).unwrap());
        let blocks = block_partition(3, 3, p).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].members, vec![pt("3"), pt("2,1"), pt("1,1,1")]);
        assert_eq!(blocks[0].representative(), &pt("3"));
    }

    #[test]
    fn non_hooks_excluded_at_p5() {
        let p = prime(5);
        assert!(!same_block(&pt("5"), &pt("3,2"), 5, p).unwrap());
        assert!(!same_block(&pt("5"), &pt("2,2,1"), 5, p).unwrap());
    }

    #[test]
    fn one_row_dimension() {
        let blocks = block_partition(1, 6, prime(2)).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].members, vec![pt("6")]);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            same_block(&pt("2,1"), &pt("2"), 3, prime(3)),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            same_block(&pt("1,1,1"), &pt("2,1"), 2, prime(3)),
            Err(Error::LengthExceedsDimension { .. })
        ));
    }
}
