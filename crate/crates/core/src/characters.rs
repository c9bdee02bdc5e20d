//! Formal characters of polynomial (and rational) `GL_n`-modules, stored by
//! their dominant support.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{permutation_sign, Prime};
use crate::combinatorics::{hook_partition, partitions_of, rho, Partition, Weight};
use crate::error::{Error, Result};

/// Number of semistandard tableaux of shape `λ` and content `μ`.
///
/// Strips horizontal strips of the largest letter recursively, memoized on
/// the remaining shape and content prefix.
pub fn kostka(lambda: &Partition, mu: &[u64]) -> Result<u64> {
    let total: u64 = mu.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: total,
        });
    }
    let mut memo = HashMap::new();
    kostka_rec(lambda.parts(), mu, &mut memo)
}

fn kostka_rec(
    shape: &[u64],
    mu: &[u64],
    memo: &mut HashMap<(Vec<u64>, usize), u64>,
) -> Result<u64> {
    let Some((&last, rest)) = mu.split_last() else {
        return Ok(u64::from(shape.is_empty()));
    };
    if shape.len() > mu.len() {
        return Ok(0);
    }
    let key = (shape.to_vec(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    let mut total = 0u64;
    for inner in horizontal_strip_removals(shape, last) {
        let sub = kostka_rec(&inner, rest, memo)?;
        total = total
            .checked_add(sub)
            .ok_or(Error::Overflow("Kostka number"))?;
    }
    memo.insert(key, total);
    Ok(total)
}

/// Shapes `ν` with `λ/ν` a horizontal strip of `size` cells (trailing zeros dropped).
fn horizontal_strip_removals(shape: &[u64], size: u64) -> Vec<Vec<u64>> {
    fn go(shape: &[u64], i: usize, rem: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == shape.len() {
            if rem == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let floor = shape.get(i + 1).copied().unwrap_or(0);
        let max_take = (shape[i] - floor).min(rem);
        for take in 0..=max_take {
            cur.push(shape[i] - take);
            go(shape, i + 1, rem - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, size, &mut Vec::new(), &mut out);
    out
}

/// A `W`-invariant element of `Z[X]`, stored as multiplicities on dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterElement {
    n: usize,
    mults: BTreeMap<Weight, i64>,
}

impl CharacterElement {
    pub fn zero(n: usize) -> Self {
        CharacterElement {
            n,
            mults: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `mult · e(W·weight)`; the weight is moved to its dominant representative.
    pub fn add_term(&mut self, weight: &Weight, mult: i64) -> Result<()> {
        if weight.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: weight.n(),
            });
        }
        if mult == 0 {
            return Ok(());
        }
        let key = dominant_representative(weight);
        let slot = self.mults.entry(key.clone()).or_insert(0);
        *slot = slot
            .checked_add(mult)
            .ok_or(Error::Overflow("character multiplicity"))?;
        if *slot == 0 {
            self.mults.remove(&key);
        }
        Ok(())
    }

    /// Multiplicity of the weight space `M_μ`, for any `μ ∈ Z^n`.
    pub fn mult(&self, weight: &Weight) -> i64 {
        self.mults
            .get(&dominant_representative(weight))
            .copied()
            .unwrap_or(0)
    }

    /// Nonzero `(dominant weight, multiplicity)` pairs, most dominant-looking first.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.mults.iter().rev().map(|(w, &m)| (w, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mults.values().all(|&m| m > 0)
    }

    /// Rejects negative multiplicities.
    pub fn check_nonnegative(&self) -> Result<()> {
        match self.mults.iter().find(|(_, &m)| m < 0) {
            Some((w, &m)) => Err(Error::NegativeMultiplicity {
                weight: w.to_string(),
                mult: m,
            }),
            None => Ok(()),
        }
    }

    pub fn checked_add(&self, other: &CharacterElement) -> Result<CharacterElement> {
        self.combine(other, 1)
    }

    pub fn checked_sub(&self, other: &CharacterElement) -> Result<CharacterElement> {
        self.combine(other, -1)
    }

    pub fn scaled(&self, k: i64) -> Result<CharacterElement> {
        let mut out = CharacterElement::zero(self.n);
        for (w, &m) in &self.mults {
            out.add_term(
                w,
                m.checked_mul(k)
                    .ok_or(Error::Overflow("character scaling"))?,
            )?;
        }
        Ok(out)
    }

    fn combine(&self, other: &CharacterElement, sign: i64) -> Result<CharacterElement> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (w, &m) in &other.mults {
            out.add_term(w, sign * m)?;
        }
        Ok(out)
    }

    /// `Σ mult(μ) · |W·μ|` over the dominant support.
    pub fn dim(&self) -> Result<i64> {
        self.mults.iter().try_fold(0i64, |acc, (w, &m)| {
            let orbit = i64::try_from(w.orbit_size()?).map_err(|_| Error::Overflow("dimension"))?;
            m.checked_mul(orbit)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("dimension"))
        })
    }

    /// If this character equals `k · other` for an integer `k`, returns `k`.
    pub fn multiple_of(&self, other: &CharacterElement) -> Option<i64> {
        if other.is_zero() {
            return self.is_zero().then_some(0);
        }
        let (w, &m) = other.mults.iter().next()?;
        let own = self.mults.get(w).copied().unwrap_or(0);
        if own % m != 0 {
            return None;
        }
        let k = own / m;
        (other.scaled(k).ok()? == *self).then_some(k)
    }
}

impl Serialize for CharacterElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&Weight, i64)> = self.terms().collect();
        let mut s = serializer.serialize_struct("CharacterElement", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl fmt::Display for CharacterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, m)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}·e{w}")?;
        }
        Ok(())
    }
}

fn dominant_representative(weight: &Weight) -> Weight {
    let mut v = weight.coords().to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Weight::new(v)
}

/// `ch Δ(λ)` for a dominant weight `λ ∈ Z^n` (rational weights are handled
/// by a determinant twist).
pub fn weyl_character_of(lambda: &Weight) -> Result<CharacterElement> {
    if !lambda.is_dominant() {
        return Err(Error::OutOfScope(format!("{lambda} is not dominant")));
    }
    let n = lambda.n();
    let twist = -lambda.coords().iter().copied().min().unwrap_or(0).min(0);
    let shifted = lambda
        .shift(twist)
        .to_partition()
        .expect("shifted weight is polynomial");
    let mut ch = CharacterElement::zero(n);
    for mu in partitions_of(shifted.size(), n) {
        let content = mu.padded(n)?;
        let content_u: Vec<u64> = content.iter().map(|&c| c as u64).collect();
        let k = kostka(&shifted, &content_u)?;
        if k > 0 {
            let m = i64::try_from(k).map_err(|_| Error::Overflow("Kostka number"))?;
            ch.add_term(&Weight::new(content).shift(-twist), m)?;
        }
    }
    Ok(ch)
}

/// `ch Δ(λ)` for a partition with at most `n` parts.
pub fn weyl_character(lambda: &Partition, n: usize) -> Result<CharacterElement> {
    weyl_character_of(&Weight::from_partition(lambda, n)?)
}

/// `dim Δ(λ)` by the product formula `Π_{i<j} (λ_i − λ_j + j − i) / (j − i)`.
pub fn weyl_dimension(lambda: &Partition, n: usize) -> Result<u64> {
    let l = lambda.padded(n)?;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            let top = (l[i] - l[j]) as u128 + (j - i) as u128;
            num = num
                .checked_mul(top)
                .ok_or(Error::Overflow("Weyl dimension"))?;
            den = den
                .checked_mul((j - i) as u128)
                .ok_or(Error::Overflow("Weyl dimension"))?;
        }
    }
    u64::try_from(num / den).map_err(|_| Error::Overflow("Weyl dimension"))
}

/// Outcome of moving `χ(μ)` into the dominant chamber under the dot action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Straightened {
    /// `−1`, `0` or `+1`; zero when `μ + ρ` lies on a wall.
    pub sign: i64,
    /// `w(μ + ρ) − ρ` when the sign is nonzero.
    pub dominant: Option<Weight>,
    /// whether the dominant weight has nonnegative coordinates
    pub polynomial: bool,
}

/// Straightens `χ(μ) = sign · χ(dominant)`.
pub fn chi_straighten(mu: &Weight) -> Straightened {
    let n = mu.n();
    let rho = rho(n);
    let shifted = mu + &rho;
    let v = shifted.coords();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| v[b].cmp(&v[a]));
    if order.windows(2).any(|w| v[w[0]] == v[w[1]]) {
        return Straightened {
            sign: 0,
            dominant: None,
            polynomial: true,
        };
    }
    let sorted = Weight::new(order.iter().map(|&k| v[k]).collect());
    let dominant = &sorted - &rho;
    let polynomial = dominant.coords().iter().all(|&c| c >= 0);
    Straightened {
        sign: permutation_sign(&order),
        dominant: Some(dominant),
        polynomial,
    }
}

/// A virtual combination `Σ c_λ χ(λ)` of Weyl characters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylCharacterCombination {
    terms: BTreeMap<Weight, i64>,
}

impl WeylCharacterCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, dominant: Weight, coeff: i64) {
        debug_assert!(dominant.is_dominant());
        let slot = self.terms.entry(dominant.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&dominant);
        }
    }

    pub fn coefficient(&self, dominant: &Weight) -> i64 {
        self.terms.get(dominant).copied().unwrap_or(0)
    }

    /// Terms ordered with the lexicographically largest weight first.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().rev().map(|(w, &c)| (w, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Expands through Weyl characters. Unless `allow_virtual`, a negative
    /// multiplicity in the result is an error.
    pub fn expand(&self, n: usize, allow_virtual: bool) -> Result<CharacterElement> {
        let mut ch = CharacterElement::zero(n);
        for (w, c) in self.terms() {
            let weyl = weyl_character_of(w)?.scaled(c)?;
            ch = ch.checked_add(&weyl)?;
        }
        if !allow_virtual {
            ch.check_nonnegative()?;
        }
        Ok(ch)
    }
}

impl Serialize for WeylCharacterCombination {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms())
    }
}

/// Largest hook index `min(n − 1, p − 1)` available in dimension `n`.
pub fn max_hook_index(p: Prime, n: usize) -> usize {
    (n.max(1) - 1).min(p.as_usize() - 1)
}

/// `ch L(λ^i) = Σ_{j ≥ i} (−1)^{j−i} ch Δ(λ^j)`.
pub fn hook_simple_character(p: Prime, n: usize, i: usize) -> Result<CharacterElement> {
    let m = max_hook_index(p, n);
    if n == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, max: m });
    }
    let mut ch = CharacterElement::zero(n);
    for j in i..=m {
        let weyl = weyl_character(&hook_partition(p, j)?, n)?;
        ch = if (j - i) % 2 == 0 {
            ch.checked_add(&weyl)?
        } else {
            ch.checked_sub(&weyl)?
        };
    }
    ch.check_nonnegative()?;
    Ok(ch)
}
