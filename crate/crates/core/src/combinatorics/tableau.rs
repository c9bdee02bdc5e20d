use serde::Serialize;

use crate::arith::factorial;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A filling of a Young diagram, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    shape: Partition,
    entries: Vec<u64>,
}

impl Tableau {
    pub fn new(shape: Partition, entries: Vec<u64>) -> Result<Self> {
        if entries.len() as u64 != shape.size() {
            return Err(Error::SizeMismatch {
                left: shape.size(),
                right: entries.len() as u64,
            });
        }
        Ok(Tableau { shape, entries })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entries in row-reading order.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<&[u64]> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut start = 0;
        for &len in self.shape.parts() {
            out.push(&self.entries[start..start + len as usize]);
            start += len as usize;
        }
        out
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u64> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let offset: u64 = self.shape.parts()[..row].iter().sum();
        Some(self.entries[offset as usize + col])
    }

    /// Entries of each column, top to bottom.
    pub fn columns(&self) -> Vec<Vec<u64>> {
        let conj = self.shape.conjugate();
        conj.parts()
            .iter()
            .enumerate()
            .map(|(c, &h)| (0..h as usize).map(|r| self.get(r, c).unwrap()).collect())
            .collect()
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows()
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] <= w[1]))
            && self
                .columns()
                .iter()
                .all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        sorted.iter().copied().eq(1..=self.entries.len() as u64) && self.is_semistandard()
    }
}

/// `f^λ` by the hook-length formula.
pub fn standard_tableaux_count(lambda: &Partition) -> Result<u64> {
    let num = factorial(lambda.size())?;
    // the hook product divides r!, so it cannot overflow once r! did not
    let hooks: u64 = lambda
        .cells()
        .map(|(r, c)| lambda.hook_length(r, c))
        .product();
    Ok(num / hooks)
}

/// All semistandard tableaux of shape `λ`; with `content = None` the
/// standard ones, otherwise those containing `content[k]` copies of `k + 1`.
/// Output is ordered lexicographically by row-reading word.
pub fn enumerate_standard_tableaux(
    lambda: &Partition,
    content: Option<&[u64]>,
) -> Result<Vec<Tableau>> {
    let r = lambda.size();
    let content: Vec<u64> = match content {
        Some(mu) => {
            let total: u64 = mu.iter().sum();
            if total != r {
                return Err(Error::SizeMismatch {
                    left: r,
                    right: total,
                });
            }
            mu.to_vec()
        }
        None => vec![1; r as usize],
    };
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut grid: Vec<Vec<u64>> = lambda
        .parts()
        .iter()
        .map(|&l| vec![0; l as usize])
        .collect();
    let mut remaining = content;
    let mut out = Vec::new();
    fill(lambda, &cells, 0, &mut grid, &mut remaining, &mut out);
    Ok(out)
}

fn fill(
    shape: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut Vec<Vec<u64>>,
    remaining: &mut Vec<u64>,
    out: &mut Vec<Tableau>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(Tableau {
            shape: shape.clone(),
            entries: grid.concat(),
        });
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    let lo = left.max(above);
    for v in lo..=remaining.len() as u64 {
        let slot = (v - 1) as usize;
        if remaining[slot] == 0 {
            continue;
        }
        remaining[slot] -= 1;
        grid[r][c] = v;
        fill(shape, cells, k + 1, grid, remaining, out);
        remaining[slot] += 1;
    }
    grid[r][c] = 0;
}
