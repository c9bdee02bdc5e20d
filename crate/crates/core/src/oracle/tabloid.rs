use std::collections::BTreeMap;
use std::fmt;

use crate::arith::permutation_sign;
use crate::combinatorics::{Partition, Tableau};
use crate::error::{Error, Result};

/// A row-equivalence class of tableaux, stored as the row of each entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    /// `row_of[x - 1]` is the row containing `x`
    row_of: Vec<u8>,
}

impl Tabloid {
    pub fn from_rows(row_of: Vec<u8>) -> Self {
        Tabloid { row_of }
    }

    /// Sorted entries of each row.
    pub fn row_sets(&self) -> Vec<Vec<u64>> {
        let rows = self
            .row_of
            .iter()
            .map(|&r| r as usize + 1)
            .max()
            .unwrap_or(0);
        let mut out = vec![Vec::new(); rows];
        for (x, &r) in self.row_of.iter().enumerate() {
            out[r as usize].push(x as u64 + 1);
        }
        out
    }

    pub fn shape(&self) -> Result<Partition> {
        let mut sizes: Vec<u64> = self.row_sets().iter().map(|r| r.len() as u64).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(sizes)
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .row_sets()
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{{{}}}", rows.join("|"))
    }
}

/// A vector in the permutation module `M^λ`, over the tabloid basis.
pub type TabloidVector = BTreeMap<Tabloid, i64>;

/// All permutations of `0..h` with their signs.
fn signed_permutations(h: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                go(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; h], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect()
}

/// `e_t = Σ_{σ ∈ C_t} sgn(σ) {σt}`.
pub fn polytabloid(t: &Tableau) -> Result<TabloidVector> {
    if !t.is_standard() {
        return Err(Error::OutOfScope(format!(
            "polytabloids are built for standard tableaux only, got {:?}",
            t.entries()
        )));
    }
    let r = t.entries().len();
    let columns = t.columns();
    let column_perms: Vec<Vec<(Vec<usize>, i64)>> = columns
        .iter()
        .map(|c| signed_permutations(c.len()))
        .collect();

    let mut out = TabloidVector::new();
    let mut row_of = vec![0u8; r];
    expand(&columns, &column_perms, 0, 1, &mut row_of, &mut out);
    Ok(out)
}

fn expand(
    columns: &[Vec<u64>],
    perms: &[Vec<(Vec<usize>, i64)>],
    c: usize,
    sign: i64,
    row_of: &mut Vec<u8>,
    out: &mut TabloidVector,
) {
    if c == columns.len() {
        *out.entry(Tabloid {
            row_of: row_of.clone(),
        })
        .or_insert(0) += sign;
        return;
    }
    let col = &columns[c];
    for (perm, s) in &perms[c] {
        // σ sends col[k] to col[perm[k]], which then sits in row k
        for (k, &target) in perm.iter().enumerate() {
            row_of[col[target] as usize - 1] = k as u8;
        }
        expand(columns, perms, c + 1, sign * s, row_of, out);
    }
}

/// The bilinear form with tabloids orthonormal.
pub fn inner_product(a: &TabloidVector, b: &TabloidVector) -> i64 {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    small
        .iter()
        .filter_map(|(t, x)| large.get(t).map(|y| x * y))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn row_polytabloid_is_one_tabloid() {
        let t = Tableau::new(pt("4"), vec![1, 2, 3, 4]).unwrap();
        let e = polytabloid(&t).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.values().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn column_polytabloid_has_all_signed_tabloids() {
        let t = Tableau::new(Partition::column(4), vec![1, 2, 3, 4]).unwrap();
        let e = polytabloid(&t).unwrap();
        assert_eq!(e.len(), 24);
        assert_eq!(e.values().filter(|&&c| c == 1).count(), 12);
        assert_eq!(inner_product(&e, &e), 24);
    }

    #[test]
    fn two_one_polytabloid() {
        // columns {1,3}, {2}
        let t = Tableau::new(pt("2,1"), vec![1, 2, 3]).unwrap();
        let e = polytabloid(&t).unwrap();
        let rendered: Vec<(String, i64)> = e.iter().map(|(k, &v)| (k.to_string(), v)).collect();
        assert_eq!(
            rendered,
            vec![("{12|3}".to_string(), 1), ("{23|1}".to_string(), -1)]
        );
        for tabloid in e.keys() {
            assert_eq!(tabloid.shape().unwrap(), pt("2,1"));
        }
    }

    #[test]
    fn rejects_non_standard() {
        let t = Tableau::new(pt("2,1"), vec![2, 1, 3]).unwrap();
        assert!(polytabloid(&t).is_err());
    }
}
