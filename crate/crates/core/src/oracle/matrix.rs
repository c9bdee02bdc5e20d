use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::Prime;
use crate::error::{Error, Result};

/// A dense integer matrix, reducible modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrixModP {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl IntMatrixModP {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if let Some(bad) = entries.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        Ok(IntMatrixModP {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `P·A·Pᵀ` for the permutation sending index `k` to `perm[k]`.
    pub fn conjugated_by(&self, perm: &[usize]) -> IntMatrixModP {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[perm[i]][perm[j]] = self.entries[i][j];
            }
        }
        IntMatrixModP {
            rows: self.rows,
            cols: self.cols,
            entries: out,
        }
    }

    /// Rank over `F_p` by Gaussian elimination on residues.
    pub fn rank_mod_p(&self, p: Prime) -> usize {
        let p = p.get() as u128;
        let mut a: Vec<Vec<u128>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| x.rem_euclid(p as i64) as u128)
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = mod_inverse(a[rank][col], p);
            for j in col..self.cols {
                a[rank][j] = a[rank][j] * inv % p;
            }
            for i in 0..self.rows {
                if i != rank && a[i][col] != 0 {
                    let f = a[i][col];
                    for j in col..self.cols {
                        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Rank over `Q` by fraction-free (Bareiss) elimination.
    pub fn rank_rational(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division is exact");
                    a[i][j] = num / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Determinant of a square matrix, exactly.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                left: self.rows,
                right: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut sign = 1;
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if pivot != k {
                a.swap(k, pivot);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { prev * sign })
    }
}

fn mod_inverse(x: u128, p: u128) -> u128 {
    // Fermat: x^(p-2)
    let mut base = x % p;
    let mut exp = p - 2;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
