//! Brute-force verification over `F_p` on the symmetric-group side.
//!
//! Specht modules are realized inside permutation modules through
//! polytabloids; `dim D^λ` is the `F_p`-rank of the Gram matrix of the
//! standard polytabloid basis. Nothing here reads the `GL_n` side except
//! [`schur_bridge_check`], which compares the two.

mod matrix;
mod tabloid;

use serde::Serialize;

pub use matrix::IntMatrixModP;
pub use tabloid::{inner_product, polytabloid, Tabloid, TabloidVector};

use crate::arith::Prime;
use crate::characters::{hook_simple_character, weyl_character};
use crate::combinatorics::{
    enumerate_standard_tableaux, hook_partition, standard_tableaux_count, Partition, Weight,
};
use crate::error::{Error, Result};

/// Largest `r` the oracle accepts.
pub const MAX_ORACLE_SIZE: u64 = 8;

fn guard(lambda: &Partition) -> Result<()> {
    if lambda.size() > MAX_ORACLE_SIZE {
        return Err(Error::SizeGuard {
            size: lambda.size(),
            bound: MAX_ORACLE_SIZE,
        });
    }
    Ok(())
}

/// Gram matrix `⟨e_s, e_t⟩` over the standard polytabloids, tableaux in
/// row-reading lexicographic order.
pub fn gram_matrix(lambda: &Partition) -> Result<IntMatrixModP> {
    guard(lambda)?;
    let basis = enumerate_standard_tableaux(lambda, None)?
        .iter()
        .map(polytabloid)
        .collect::<Result<Vec<_>>>()?;
    let f = basis.len();
    let mut g = vec![vec![0i64; f]; f];
    for s in 0..f {
        for t in s..f {
            let v = inner_product(&basis[s], &basis[t]);
            g[s][t] = v;
            g[t][s] = v;
        }
    }
    IntMatrixModP::new(g)
}

/// `dim D^λ` for `p`-regular `λ`.
pub fn dim_simple_d_upper(lambda: &Partition, p: Prime) -> Result<u64> {
    if !lambda.is_p_regular(p) {
        return Err(Error::NotPRegular {
            partition: lambda.to_string(),
            p: p.get(),
        });
    }
    Ok(gram_matrix(lambda)?.rank_mod_p(p) as u64)
}

/// `dim D_λ` for column `p`-regular `λ`, through `D^{λ'} ≅ D_λ ⊗ sgn`.
pub fn dim_simple_d_lower(lambda: &Partition, p: Prime) -> Result<u64> {
    dim_simple_d_upper(&lambda.conjugate(), p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelRow {
    pub i: usize,
    pub hook: Partition,
    /// `f^{λ^i} = dim S^{λ^i}`
    pub specht_dim: u64,
    /// `dim D_{λ^i}`, zero when `λ^i` is not column `p`-regular
    pub lower: u64,
    /// `dim D_{λ^{i+1}}`, zero past the last hook
    pub next_lower: u64,
    /// `dim D^{λ^i}` when `λ^i` is `p`-regular
    pub upper: Option<u64>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelReport {
    pub p: Prime,
    pub rows: Vec<PeelRow>,
    pub passed: bool,
}

/// Dimension bookkeeping for hook Specht modules: `f^{λ^i} = dim D_{λ^i} +
/// dim D_{λ^{i+1}}`, and on the `p`-regular side `f^{λ^i} = dim D^{λ^i} +
/// dim D^{λ^{i−1}}`.
pub fn peel_check(p: Prime) -> Result<PeelReport> {
    let size = p.as_usize();
    let hooks = (0..size)
        .map(|i| hook_partition(p, i))
        .collect::<Result<Vec<_>>>()?;
    let lower = hooks
        .iter()
        .map(|h| {
            if h.is_column_p_regular(p) {
                dim_simple_d_lower(h, p)
            } else {
                Ok(0)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let upper = hooks
        .iter()
        .map(|h| {
            if h.is_p_regular(p) {
                dim_simple_d_upper(h, p).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::with_capacity(size);
    for (i, hook) in hooks.iter().enumerate() {
        let specht_dim = standard_tableaux_count(hook)?;
        let next_lower = lower.get(i + 1).copied().unwrap_or(0);
        let lower_ok = specht_dim == lower[i] + next_lower;
        let prev_upper = if i == 0 { Some(0) } else { upper[i - 1] };
        let upper_ok = match (upper[i], prev_upper) {
            (Some(a), Some(b)) => specht_dim == a + b,
            // S^{(1^p)} = sgn ≅ D^{λ^{p−2}}
            (None, Some(b)) => specht_dim == b,
            _ => false,
        };
        rows.push(PeelRow {
            i,
            hook: hook.clone(),
            specht_dim,
            lower: lower[i],
            next_lower,
            upper: upper[i],
            passed: lower_ok && upper_ok,
        });
    }
    let passed = rows.iter().all(|r| r.passed);
    Ok(PeelReport { p, rows, passed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeRow {
    pub i: usize,
    pub hook: Partition,
    /// `(1^p)`-weight multiplicity of `ch Δ(λ^i)`
    pub weyl_mult: i64,
    pub specht_dim: u64,
    /// `(1^p)`-weight multiplicity of `ch L(λ^i)`
    pub simple_mult: i64,
    /// `dim D_{λ^i}` from the Gram oracle, zero when not column `p`-regular
    pub oracle_dim: u64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub p: Prime,
    pub n: usize,
    pub rows: Vec<BridgeRow>,
    pub passed: bool,
}

/// Compares `(1^p)`-weight spaces on the `GL_n` side with the oracle:
/// `e Δ(λ) ≅ S^λ` and `e L(λ) ≅ D_λ` at the level of dimensions.
pub fn schur_bridge_check(p: Prime, n: usize) -> Result<BridgeReport> {
    if n < p.as_usize() {
        return Err(Error::OutOfScope(format!(
            "the Schur functor to Σ_{p} needs n ≥ {p}, got n = {n}"
        )));
    }
    let mut ones = vec![1i64; p.as_usize()];
    ones.resize(n, 0);
    let ones = Weight::new(ones);
    let mut rows = Vec::new();
    for i in 0..p.as_usize() {
        let hook = hook_partition(p, i)?;
        let weyl_mult = weyl_character(&hook, n)?.mult(&ones);
        let specht_dim = standard_tableaux_count(&hook)?;
        let simple_mult = hook_simple_character(p, n, i)?.mult(&ones);
        let oracle_dim = if hook.is_column_p_regular(p) {
            dim_simple_d_lower(&hook, p)?
        } else {
            0
        };
        let passed = weyl_mult == specht_dim as i64 && simple_mult == oracle_dim as i64;
        rows.push(BridgeRow {
            i,
            hook,
            weyl_mult,
            specht_dim,
            simple_mult,
            oracle_dim,
            passed,
        });
    }
    let passed = rows.iter().all(|r| r.passed);
    Ok(BridgeReport { p, n, rows, passed })
}
