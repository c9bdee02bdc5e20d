//! Jantzen's sum formula for Weyl modules of `GL_n`:
//!
//! `Σ_{j>0} ch Δ(λ)^j = Σ_{α>0} Σ_{0 < mp < ⟨λ+ρ, α∨⟩} ν_p(mp) χ(s_{α,mp}·λ)`
//!
//! with `s_{α,mp}(v) = s_α(v) + mp·α`. With this level convention every
//! reflected weight is `λ − (⟨λ+ρ,α∨⟩ − mp)α`, strictly below `λ`.

use serde::Serialize;

use crate::arith::{valuation, Prime};
use crate::characters::{
    chi_straighten, hook_simple_character, max_hook_index, CharacterElement,
    WeylCharacterCombination,
};
use crate::combinatorics::{dot_reflect, hook_partition, AffineReflection, Partition, Weight};
use crate::error::{Error, Result};

/// One `(α, m)` contribution before aggregation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    /// 1-based `(i, j)` for `α = ε_i − ε_j`
    pub root: [usize; 2],
    pub m: u64,
    /// `ν_p(mp)`
    pub valuation: u32,
    pub reflected: Weight,
    /// dominant weight after straightening, `None` on a wall
    pub straightened: Option<Weight>,
    pub sign: i64,
}

impl LedgerEntry {
    pub fn coefficient(&self) -> i64 {
        self.sign * i64::from(self.valuation)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JantzenSum {
    pub lambda: Partition,
    pub n: usize,
    pub p: Prime,
    pub ledger: Vec<LedgerEntry>,
    pub terms: WeylCharacterCombination,
}

impl JantzenSum {
    /// The sum as a character; nonnegative whenever `λ` is polynomial.
    pub fn character(&self) -> Result<CharacterElement> {
        self.terms.expand(self.n, false)
    }
}

pub fn jantzen_sum(lambda: &Partition, n: usize, p: Prime) -> Result<JantzenSum> {
    let weight = Weight::from_partition(lambda, n)?;
    let shifted = &weight + &crate::combinatorics::rho(n);
    let mut ledger = Vec::new();
    let mut terms = WeylCharacterCombination::new();
    for i in 0..n {
        for j in i + 1..n {
            let pairing = shifted.coords()[i] - shifted.coords()[j];
            let mut m = 1i64;
            while m * p.as_i64() < pairing {
                let level = m * p.as_i64();
                let s = AffineReflection::new(i + 1, j + 1, level, p)?;
                let reflected = dot_reflect(&s, &weight)?;
                let st = chi_straighten(&reflected);
                let entry = LedgerEntry {
                    root: [i + 1, j + 1],
                    m: m as u64,
                    valuation: valuation(p, level),
                    reflected,
                    straightened: st.dominant.clone(),
                    sign: st.sign,
                };
                if let Some(dom) = st.dominant {
                    check_below(lambda, &dom)?;
                    terms.add(dom, entry.coefficient());
                }
                ledger.push(entry);
                m += 1;
            }
        }
    }
    Ok(JantzenSum {
        lambda: lambda.clone(),
        n,
        p,
        ledger,
        terms,
    })
}

/// Every straightened term must be strictly dominated by `λ`.
fn check_below(lambda: &Partition, dom: &Weight) -> Result<()> {
    let below = match dom.to_partition() {
        Some(mu) => mu != *lambda && lambda.dominates(&mu),
        None => {
            // a rational weight is below λ when every partial sum is at most λ's
            let mut acc = (0i64, 0i64);
            dom.coords().iter().enumerate().all(|(k, &c)| {
                acc.0 += lambda.part(k) as i64;
                acc.1 += c;
                acc.1 <= acc.0
            })
        }
    };
    if below {
        Ok(())
    } else {
        Err(Error::Consistency(format!(
            "Jantzen term {dom} is not strictly below {lambda}; reflection convention is wrong"
        )))
    }
}

/// `L(λ^{i+1})` occurs in `Δ(λ^i)`: the straightened sum for `λ^i` contains
/// `χ(λ^{i+1})` with a positive coefficient.
pub fn verify_lemma_a(p: Prime, n: usize, i: usize) -> Result<bool> {
    let m = max_hook_index(p, n);
    if m == 0 || i >= m {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: m.saturating_sub(1),
        });
    }
    let sum = jantzen_sum(&hook_partition(p, i)?, n, p)?;
    let next = Weight::from_partition(&hook_partition(p, i + 1)?, n)?;
    Ok(sum.terms.coefficient(&next) >= 1)
}

/// Expands the sum for `λ^i` and returns `k` with
/// `Σ_j ch Δ(λ^i)^j = k · ch L(λ^{i+1})`, if such `k` exists.
pub fn radical_multiple(p: Prime, n: usize, i: usize) -> Result<Option<i64>> {
    let sum = jantzen_sum(&hook_partition(p, i)?, n, p)?;
    let ch = sum.character()?;
    let simple = hook_simple_character(p, n, i + 1)?;
    Ok(ch.multiple_of(&simple))
}
