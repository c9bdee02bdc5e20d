use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::Prime;
use crate::error::{Error, Result};

/// An integer partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// stripped; zeros followed by positive parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition {
                input: join(&parts),
                reason: format!("parts {} < {} are not weakly decreasing", w[0], w[1]),
            });
        }
        if parts.contains(&0) {
            return Err(Error::MalformedPartition {
                input: join(&parts),
                reason: "zero part followed by a positive part".into(),
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(r)`, a single row.
    pub fn row(r: u64) -> Self {
        Partition::new(vec![r]).expect("single row is a partition")
    }

    /// `(1^r)`, a single column.
    pub fn column(r: u64) -> Self {
        Partition {
            parts: vec![1; r as usize],
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&x| x >= j).count() as u64)
            .collect();
        Partition { parts }
    }

    /// No `p` consecutive equal positive parts.
    pub fn is_p_regular(&self, p: Prime) -> bool {
        let p = p.as_usize();
        self.parts.windows(p).all(|w| w[0] != w[p - 1])
    }

    /// All successive differences, including the last part against zero, are `< p`.
    pub fn is_column_p_regular(&self, p: Prime) -> bool {
        let p = p.get();
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < p)
    }

    /// `λ ⊵ μ` in the dominance order (sizes must agree).
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Pads with zeros to length `n` as signed coordinates.
    pub fn padded(&self, n: usize) -> Result<Vec<i64>> {
        if self.len() > n {
            return Err(Error::LengthExceedsDimension {
                partition: self.to_string(),
                length: self.len(),
                n,
            });
        }
        let mut v: Vec<i64> = self.parts.iter().map(|&x| x as i64).collect();
        v.resize(n, 0);
        Ok(v)
    }

    /// Cells `(row, col)` of the Young diagram, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        (col as u64) < self.part(row)
    }

    /// Hook length of the cell at `(row, col)`.
    pub fn hook_length(&self, row: usize, col: usize) -> u64 {
        let arm = self.part(row) - col as u64 - 1;
        let leg = self.parts[row + 1..]
            .iter()
            .take_while(|&&x| x > col as u64)
            .count() as u64;
        arm + leg + 1
    }
}

/// `λ^i = (p - i, 1^i)`, the `i`-th `p`-hook partition.
pub fn hook_partition(p: Prime, i: usize) -> Result<Partition> {
    let p = p.as_usize();
    if i >= p {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: p - 1,
        });
    }
    let mut parts = vec![(p - i) as u64];
    parts.extend(std::iter::repeat(1).take(i));
    Ok(Partition { parts })
}

/// Whether `λ ⊢ p` is one of the `p`-hooks.
pub fn is_hook(lambda: &Partition) -> bool {
    lambda.part(1) <= 1
}

/// All partitions of `r` with at most `max_len` parts, in reverse
/// lexicographic order (`(r)` first).
pub fn partitions_of(r: u64, max_len: usize) -> Vec<Partition> {
    fn go(rem: u64, max_part: u64, slots: usize, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=max_part.min(rem)).rev() {
            cur.push(part);
            go(rem - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, max_len, &mut Vec::new(), &mut out);
    out
}

fn join(parts: &[u64]) -> String {
    parts
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedPartition {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(malformed("empty input".into()));
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u64>() {
                    Ok(0) => Err(malformed("parts must be positive".into())),
                    Ok(x) => Ok(x),
                    Err(_) => Err(malformed(format!("{tok:?} is not a positive integer"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| malformed("parts are not weakly decreasing".into()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
