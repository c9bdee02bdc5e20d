//! Checked integer helpers and the prime newtype.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A prime characteristic, validated by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `p` as a usize, for indexing hook labels.
    #[inline]
    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(p: Prime, mut x: i64) -> u32 {
    assert!(x != 0, "valuation of zero");
    let p = p.as_i64();
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

pub fn factorial(n: u64) -> Result<u64> {
    (1..=n).try_fold(1u64, |acc, k| {
        acc.checked_mul(k).ok_or(Error::Overflow("factorial"))
    })
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    // exact at every step: acc * (n - i) is divisible by (i + 1)
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Sign of a permutation given in one-line notation on `0..len`.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}
