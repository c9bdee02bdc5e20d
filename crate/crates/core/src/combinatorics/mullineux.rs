//! The Mullineux map on `p`-regular partitions, via the Mullineux symbol.
//!
//! The symbol of `λ` records, for each successive removal of the `p`-rim,
//! the number of cells removed and the number of rows of the partition it
//! was removed from. The map acts column-wise on the symbol and the image
//! partition is rebuilt by re-adding rims from the innermost column out.

use serde::Serialize;

use crate::arith::Prime;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// One column of a Mullineux symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SymbolColumn {
    /// cells in the `p`-rim
    pub rim: u64,
    /// rows of the partition the rim was removed from
    pub rows: u64,
}

/// Rim cells `(row, col)` read from the top-right cell downward and leftward.
fn rim_cells(lambda: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 0..lambda.len() {
        let hi = lambda.part(i) as usize;
        let lo = (lambda.part(i + 1) as usize).max(1);
        for j in (lo - 1..hi).rev() {
            cells.push((i, j));
        }
    }
    cells
}

/// Number of `p`-rim cells removed from each row.
fn p_rim(lambda: &Partition, p: Prime) -> Vec<u64> {
    let p = p.as_usize();
    let rim = rim_cells(lambda);
    let mut removed = vec![0u64; lambda.len()];
    let mut k = 0;
    while k < rim.len() {
        let segment = &rim[k..(k + p).min(rim.len())];
        for &(i, _) in segment {
            removed[i] += 1;
        }
        let last_row = segment.last().unwrap().0;
        // next segment starts at the rightmost rim cell of the following row
        match rim[k..].iter().position(|&(i, _)| i > last_row) {
            Some(off) => k += off,
            None => break,
        }
    }
    removed
}

fn strip(lambda: &Partition, removed: &[u64]) -> Partition {
    let parts = lambda
        .parts()
        .iter()
        .zip(removed)
        .map(|(&x, &d)| x - d)
        .collect();
    Partition::new(parts).expect("removing the p-rim leaves a partition")
}

/// The Mullineux symbol of a `p`-regular partition, outermost rim first.
pub fn mullineux_symbol(lambda: &Partition, p: Prime) -> Result<Vec<SymbolColumn>> {
    require_regular(lambda, p)?;
    let mut cur = lambda.clone();
    let mut symbol = Vec::new();
    while !cur.is_empty() {
        let removed = p_rim(&cur, p);
        symbol.push(SymbolColumn {
            rim: removed.iter().sum(),
            rows: cur.len() as u64,
        });
        cur = strip(&cur, &removed);
    }
    Ok(symbol)
}

/// Rebuilds the unique `p`-regular partition with the given symbol.
pub fn from_symbol(symbol: &[SymbolColumn], p: Prime) -> Result<Partition> {
    let mut inner = Partition::empty();
    for col in symbol.iter().rev() {
        let candidates = extensions(&inner, col.rim, col.rows as usize)
            .into_iter()
            .filter(|nu| nu.is_p_regular(p) && strip(nu, &p_rim(nu, p)) == inner)
            .collect::<Vec<_>>();
        match candidates.as_slice() {
            [nu] => inner = nu.clone(),
            _ => {
                return Err(Error::Consistency(format!(
                    "symbol column ({}, {}) over {} admits {} partitions",
                    col.rim,
                    col.rows,
                    inner,
                    candidates.len()
                )))
            }
        }
    }
    Ok(inner)
}

/// Partitions `ν ⊇ μ` with exactly `rows` parts and `|ν/μ| = added`.
fn extensions(mu: &Partition, added: u64, rows: usize) -> Vec<Partition> {
    fn go(
        mu: &Partition,
        rows: usize,
        i: usize,
        rem: u64,
        cap: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let base = mu.part(i).max(1);
        if base > cap {
            return;
        }
        let lo_extra = base - mu.part(i);
        if lo_extra > rem {
            return;
        }
        let hi = cap.min(mu.part(i) + rem);
        for v in (base..=hi).rev() {
            cur.push(v);
            go(mu, rows, i + 1, rem - (v - mu.part(i)), v, cur, out);
            cur.pop();
        }
    }
    if rows < mu.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(mu, rows, 0, added, u64::MAX, &mut Vec::new(), &mut out);
    out
}

/// `Mull(λ)`: transforms each symbol column `(a, r)` to `(a, a − r + ε)`
/// with `ε = 0` if `p | a` and `ε = 1` otherwise.
pub fn mullineux(lambda: &Partition, p: Prime) -> Result<Partition> {
    let symbol = mullineux_symbol(lambda, p)?;
    let image: Vec<SymbolColumn> = symbol
        .iter()
        .map(|c| {
            let eps = u64::from(c.rim % p.get() != 0);
            SymbolColumn {
                rim: c.rim,
                rows: c.rim + eps - c.rows,
            }
        })
        .collect();
    from_symbol(&image, p)
}

fn require_regular(lambda: &Partition, p: Prime) -> Result<()> {
    if lambda.is_p_regular(p) {
        Ok(())
    } else {
        Err(Error::NotPRegular {
            partition: lambda.to_string(),
            p: p.get(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn rims() {
        assert_eq!(
            rim_cells(&pt("3,1,1")),
            vec![(0, 2), (0, 1), (0, 0), (1, 0), (2, 0)]
        );
        assert_eq!(rim_cells(&pt("3,2")), vec![(0, 2), (0, 1), (1, 1), (1, 0)]);
    }

    #[test]
    fn p_rim_restarts_on_new_row() {
        // rim of (5,3,1) read top-right: (0,4),(0,3),(0,2),(1,2),(1,1),(1,0),(2,0)
        // p = 2: [(0,4),(0,3)], restart in row 1: [(1,2),(1,1)], restart in row 2: [(2,0)]
        assert_eq!(p_rim(&pt("5,3,1"), prime(2)), vec![2, 2, 1]);
        assert_eq!(p_rim(&pt("5,3,1"), prime(3)), vec![3, 3, 1]);
    }

    #[test]
    fn symbols() {
        assert_eq!(
            mullineux_symbol(&pt("2,1"), prime(3)).unwrap(),
            vec![SymbolColumn { rim: 3, rows: 2 }]
        );
        assert_eq!(
            mullineux_symbol(&pt("3,1,1"), prime(5)).unwrap(),
            vec![SymbolColumn { rim: 5, rows: 3 }]
        );
    }

    #[test]
    fn worked_examples() {
        assert_eq!(mullineux(&pt("2,1"), prime(3)).unwrap(), pt("3"));
        assert_eq!(mullineux(&pt("3,1,1"), prime(5)).unwrap(), pt("4,1"));
        for p in [3, 5, 7] {
            for r in 1..p {
                assert_eq!(
                    mullineux(&Partition::row(r), prime(p)).unwrap(),
                    Partition::column(r)
                );
            }
        }
    }

    #[test]
    fn p_two_is_identity() {
        // D^λ ⊗ sgn = D^λ in characteristic 2
        for lambda in ["1", "2", "3", "2,1", "4,1", "3,2", "4,3,1"] {
            assert_eq!(mullineux(&pt(lambda), prime(2)).unwrap(), pt(lambda));
        }
    }

    #[test]
    fn rejects_singular() {
        assert!(matches!(
            mullineux(&pt("1,1,1"), prime(3)),
            Err(Error::NotPRegular { .. })
        ));
    }

    #[test]
    fn symbol_round_trip() {
        for r in 0..=9 {
            for lambda in crate::combinatorics::partitions_of(r, r as usize) {
                for p in [2, 3, 5] {
                    if lambda.is_p_regular(prime(p)) {
                        let s = mullineux_symbol(&lambda, prime(p)).unwrap();
                        assert_eq!(from_symbol(&s, prime(p)).unwrap(), lambda);
                    }
                }
            }
        }
    }
}
