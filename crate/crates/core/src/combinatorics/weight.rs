use std::fmt;
use std::ops::{Add, Sub};

use serde::Serialize;

use crate::arith::Prime;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// An element of the weight lattice `X ≅ Z^n`, in the `ε`-basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "weights live in Z^n with n >= 1");
        Weight(coords)
    }

    /// Embeds a partition into `Z^n`, padding with zeros.
    pub fn from_partition(lambda: &Partition, n: usize) -> Result<Self> {
        lambda.padded(n).map(Weight)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominant with nonnegative coordinates.
    pub fn is_polynomial_dominant(&self) -> bool {
        self.is_dominant() && self.0.iter().all(|&c| c >= 0)
    }

    /// The partition of a polynomial dominant weight.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_polynomial_dominant() {
            return None;
        }
        Partition::new(self.0.iter().map(|&c| c as u64).collect()).ok()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Adds `c` to every coordinate (tensoring with `det^c`).
    pub fn shift(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|&x| x + c).collect())
    }

    /// `s_α` for `α = ε_i − ε_j` swaps coordinates `i` and `j` (0-based).
    pub fn swapped(&self, i: usize, j: usize) -> Weight {
        let mut v = self.0.clone();
        v.swap(i, j);
        Weight(v)
    }

    /// Number of distinct permutations of the coordinates (the size of the
    /// `W`-orbit).
    pub fn orbit_size(&self) -> Result<u64> {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        let mut size = 1u64;
        let mut placed = 0u64;
        for run in sorted.chunk_by(|a, b| a == b) {
            for k in 1..=run.len() as u64 {
                placed += 1;
                // multinomial built up one coordinate at a time stays integral
                size = size
                    .checked_mul(placed)
                    .ok_or(Error::Overflow("orbit size"))?
                    / k;
            }
        }
        Ok(size)
    }

    fn check_dim(&self, other: &Weight) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_dim(other)?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_dim(other)?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("weight dimensions agree")
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs).expect("weight dimensions agree")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `ρ = Σ (n − i) ε_i`.
pub fn rho(n: usize) -> Weight {
    Weight::new((0..n).rev().map(|x| x as i64).collect())
}

/// The affine reflection `s_{α,ap} = s_α + apα` for the positive root
/// `α = ε_i − ε_j`. Root indices are 1-based to match the usual notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineReflection {
    pub i: usize,
    pub j: usize,
    pub level: i64,
}

impl AffineReflection {
    pub fn new(i: usize, j: usize, level: i64, p: Prime) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::OutOfScope(format!(
                "root ε_{i} − ε_{j} is not a positive root (need 1 ≤ i < j)"
            )));
        }
        if level % p.as_i64() != 0 {
            return Err(Error::OutOfScope(format!(
                "level {level} is not a multiple of {p}"
            )));
        }
        Ok(AffineReflection { i, j, level })
    }

    /// The linear reflection `s_α` (level 0).
    pub fn linear(i: usize, j: usize) -> Self {
        assert!(i >= 1 && i < j, "positive root needs 1 <= i < j");
        AffineReflection { i, j, level: 0 }
    }

    /// `s_{α,ap}(v) = s_α(v) + ap·α`.
    pub fn apply(&self, v: &Weight) -> Result<Weight> {
        if self.j > v.n() {
            return Err(Error::DimensionMismatch {
                left: v.n(),
                right: self.j,
            });
        }
        let (a, b) = (self.i - 1, self.j - 1);
        let mut w = v.swapped(a, b);
        w.0[a] += self.level;
        w.0[b] -= self.level;
        Ok(w)
    }
}

/// The dot action `s·λ = s(λ + ρ) − ρ`.
pub fn dot_reflect(s: &AffineReflection, lambda: &Weight) -> Result<Weight> {
    let rho = rho(lambda.n());
    let moved = s.apply(&(lambda + &rho))?;
    Ok(&moved - &rho)
}
