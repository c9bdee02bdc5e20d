#![allow(dead_code)]

use hookblock_core::combinatorics::{partitions_of, Partition};
use hookblock_core::Prime;

pub const PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

pub fn primes() -> impl Iterator<Item = Prime> {
    PRIMES.into_iter().map(prime)
}

pub fn pt(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Every partition of every size in `0..=max`.
pub fn all_partitions(max: u64) -> Vec<Partition> {
    (0..=max)
        .flat_map(|r| partitions_of(r, usize::MAX))
        .collect()
}

/// Semistandard tableaux of shape `shape` and content `content`, counted by
/// filling cells in row-reading order.
pub fn count_ssyt(shape: &Partition, content: &[u64]) -> u64 {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    if cells.len() as u64 != content.iter().sum::<u64>() {
        return 0;
    }
    let mut grid: Vec<Vec<u64>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut left = content.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u64>>, left: &mut [u64]) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=left.len() as u64 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v as usize - 1] -= 1;
            total += go(k + 1, cells, grid, left);
            left[v as usize - 1] += 1;
            grid[r][c] = 0;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

/// All distinct permutations of `v`.
pub fn distinct_permutations(v: &[u64]) -> Vec<Vec<u64>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    loop {
        let Some(i) = (0..sorted.len().saturating_sub(1))
            .rev()
            .find(|&i| sorted[i] < sorted[i + 1])
        else {
            return out;
        };
        let j = (i + 1..sorted.len())
            .rev()
            .find(|&j| sorted[j] > sorted[i])
            .unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
}
