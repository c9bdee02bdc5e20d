//! Assembly of the hook block: decomposition matrix, Ext-quiver, module
//! diagrams of the projective/injective/tilting modules, reciprocity, and the
//! Brauer tree of `kΣ_p`.
//!
//! The block structure is transcribed from the composition-factor pattern
//! `[Δ(λ^i)] = [L(λ^i)] + [L(λ^{i+1})]`, and every transcription is checked
//! against the independently computed characters. A failed check is an error.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::Prime;
use crate::characters::{hook_simple_character, max_hook_index, weyl_character, CharacterElement};
use crate::combinatorics::{hook_partition, mullineux, Partition};
use crate::error::{Error, Result};

/// `[Δ(rows[i]) : L(cols[j])]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionMatrix {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<u64>>,
}

impl DecompositionMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Cartan matrix `Dᵀ·D`.
    pub fn cartan(&self) -> Vec<Vec<u64>> {
        let k = self.size();
        let mut c = vec![vec![0; k]; k];
        for (a, row) in c.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = (0..k)
                    .map(|i| self.entries[i][a] * self.entries[i][b])
                    .sum();
            }
        }
        c
    }

    /// Unit diagonal, and `[Δ(λ) : L(μ)] ≠ 0` only for `μ ⊴ λ`.
    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.size()).all(|i| {
            self.entries[i][i] == 1
                && (0..self.size())
                    .all(|j| self.entries[i][j] == 0 || self.rows[i].dominates(&self.cols[j]))
        })
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfScope(format!(
            "the hook block needs n ≥ 2, got n = {n}"
        )));
    }
    Ok(())
}

fn hooks_upto(p: Prime, m: usize) -> Result<Vec<Partition>> {
    (0..=m).map(|i| hook_partition(p, i)).collect()
}

/// The hook-block decomposition matrix, rows and columns `λ^0, …, λ^m` with
/// `m = min(n − 1, p − 1)`. Each row is checked as an exact character
/// identity `ch Δ(λ^i) = Σ_j D_ij ch L(λ^j)`.
pub fn hook_decomposition_matrix(n: usize, p: Prime) -> Result<DecompositionMatrix> {
    check_n(n)?;
    let m = max_hook_index(p, n);
    let hooks = hooks_upto(p, m)?;
    let entries: Vec<Vec<u64>> = (0..=m)
        .map(|i| {
            (0..=m)
                .map(|j| u64::from(j == i || (j == i + 1 && i < m)))
                .collect()
        })
        .collect();
    let simples = (0..=m)
        .map(|j| hook_simple_character(p, n, j))
        .collect::<Result<Vec<_>>>()?;
    for (i, hook) in hooks.iter().enumerate() {
        let weyl = weyl_character(hook, n)?;
        let mut sum = CharacterElement::zero(n);
        for (j, simple) in simples.iter().enumerate() {
            sum = sum.checked_add(&simple.scaled(entries[i][j] as i64)?)?;
        }
        if sum != weyl {
            return Err(Error::Consistency(format!(
                "ch Δ({hook}) differs from its composition factors at n = {n}, p = {p}"
            )));
        }
    }
    Ok(DecompositionMatrix {
        rows: hooks.clone(),
        cols: hooks,
        entries,
    })
}

/// Undirected graph on the hook labels with `dim Ext¹` edge multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtQuiver {
    pub vertices: Vec<Partition>,
    /// `(a, b, multiplicity)` with `a < b` indices into `vertices`
    pub edges: Vec<(usize, usize, u64)>,
}

impl ExtQuiver {
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let k = self.vertices.len();
        let mut a = vec![vec![0; k]; k];
        for &(x, y, mult) in &self.edges {
            a[x][y] = mult;
            a[y][x] = mult;
        }
        a
    }
}

pub fn ext_quiver(n: usize, p: Prime) -> Result<ExtQuiver> {
    check_n(n)?;
    let m = max_hook_index(p, n);
    let vertices = hooks_upto(p, m)?;
    let edges = (0..m).map(|i| (i, i + 1, 1)).collect();
    Ok(ExtQuiver { vertices, edges })
}

/// Layers of a module diagram, top first; `edges` join
/// `layers[l][a]` to `layers[l + 1][b]` as `[l, a, b]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleDiagram<L> {
    pub layers: Vec<Vec<L>>,
    pub edges: Vec<[usize; 3]>,
}

impl<L: Clone + Ord> ModuleDiagram<L> {
    /// Each layer joined to the next by every possible edge; this is the
    /// shape of every diagram in the hook block.
    pub fn complete(layers: Vec<Vec<L>>) -> Self {
        let mut edges = Vec::new();
        for l in 0..layers.len().saturating_sub(1) {
            for a in 0..layers[l].len() {
                for b in 0..layers[l + 1].len() {
                    edges.push([l, a, b]);
                }
            }
        }
        ModuleDiagram { layers, edges }
    }

    /// Composition factors with multiplicity.
    pub fn factors(&self) -> BTreeMap<L, u64> {
        let mut out = BTreeMap::new();
        for label in self.layers.iter().flatten() {
            *out.entry(label.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn map_labels<M, F: Fn(&L) -> M>(&self, f: F) -> ModuleDiagram<M> {
        ModuleDiagram {
            layers: self
                .layers
                .iter()
                .map(|l| l.iter().map(&f).collect())
                .collect(),
            edges: self.edges.clone(),
        }
    }

    /// Removes every factor labeled `label`, dropping empty layers and
    /// joining what was above a removed layer to what was below it.
    pub fn delete(&self, label: &L) -> ModuleDiagram<L> {
        let layers: Vec<Vec<L>> = self
            .layers
            .iter()
            .map(|l| {
                l.iter()
                    .filter(|x| *x != label)
                    .cloned()
                    .collect::<Vec<_>>()
            })
            .filter(|l| !l.is_empty())
            .collect();
        ModuleDiagram::complete(layers)
    }
}

/// `P(λ^i) = I(λ^i) = T(λ^{i−1})` with its diagram and filtrations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectiveModule {
    pub i: usize,
    pub label: Partition,
    /// highest weight of the tilting module it coincides with
    pub tilting: Partition,
    pub diagram: ModuleDiagram<Partition>,
    /// `∇`-subquotients of `I(λ^i)`, each with multiplicity one
    pub costandard_filtration: Vec<Partition>,
    /// `Δ`-subquotients of `P(λ^i)`
    pub standard_filtration: Vec<Partition>,
}

pub fn projective_diagram(i: usize, n: usize, p: Prime) -> Result<ProjectiveModule> {
    check_n(n)?;
    let m = max_hook_index(p, n);
    if i == 0 {
        return Err(Error::OutOfScope(
            "P(λ^0) ≅ Δ(λ^0) and I(λ^0) ≅ ∇(λ^0) are not tilting and have no such diagram".into(),
        ));
    }
    if i > m {
        return Err(Error::IndexOutOfRange { index: i, max: m });
    }
    let hook = |k: usize| hook_partition(p, k);
    let layers = if i < m {
        vec![
            vec![hook(i)?],
            vec![hook(i + 1)?, hook(i - 1)?],
            vec![hook(i)?],
        ]
    } else {
        vec![vec![hook(i)?], vec![hook(i - 1)?], vec![hook(i)?]]
    };
    let diagram = ModuleDiagram::complete(layers);

    // reciprocity: (I(λ^i) : ∇(λ^j)) = [∇(λ^j) : L(λ^i)], nonzero for j ∈ {i − 1, i}
    let dec = hook_decomposition_matrix(n, p)?;
    let filtration: Vec<Partition> = (0..=m)
        .filter(|&j| dec.entries[j][i] > 0)
        .map(|j| dec.rows[j].clone())
        .collect();
    let expected = vec![hook(i - 1)?, hook(i)?];
    if filtration != expected {
        return Err(Error::Consistency(format!(
            "∇-filtration of I({}) is {:?}, expected {:?}",
            hook(i)?,
            filtration
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            expected.iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    let tilting = filtration[0].clone();
    Ok(ProjectiveModule {
        i,
        label: hook(i)?,
        tilting,
        diagram,
        costandard_filtration: filtration.clone(),
        standard_filtration: filtration,
    })
}

/// `(I(λ^i) : ∇(λ^j)) = [∇(λ^j) : L(λ^i)]`, the transpose of the
/// decomposition matrix.
pub fn reciprocity_table(n: usize, p: Prime) -> Result<Vec<Vec<u64>>> {
    let dec = hook_decomposition_matrix(n, p)?;
    let k = dec.size();
    let table: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| dec.entries[j][i]).collect())
        .collect();
    // the ∇-content of each I(λ^i), i ≥ 1, must reproduce its diagram's factors
    for i in 1..k {
        let proj = projective_diagram(i, n, p)?;
        let mut from_table: BTreeMap<Partition, u64> = BTreeMap::new();
        for (j, &mult) in table[i].iter().enumerate() {
            for (l, &d) in dec.entries[j].iter().enumerate() {
                *from_table.entry(dec.cols[l].clone()).or_insert(0) += mult * d;
            }
        }
        from_table.retain(|_, v| *v > 0);
        if from_table != proj.diagram.factors() {
            return Err(Error::Consistency(format!(
                "reciprocity row {i} disagrees with the diagram of P({})",
                proj.label
            )));
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TiltingIdentity {
    pub i: usize,
    pub injective: Partition,
    pub conjugate: Partition,
    pub mullineux_image: Partition,
    /// `I(λ^i) = T(Mull((λ^i)'))` agrees with `T(λ^{i−1})`
    pub matches_previous_hook: bool,
}

/// Checked records `I(λ^i) = T(Mull((λ^i)'))` for the column `p`-regular hooks.
pub fn tilting_injective_labels(n: usize, p: Prime) -> Result<Vec<TiltingIdentity>> {
    check_n(n)?;
    let m = max_hook_index(p, n);
    let mut out = Vec::new();
    for i in 1..=m {
        let hook = hook_partition(p, i)?;
        debug_assert!(hook.is_column_p_regular(p));
        let conj = hook.conjugate();
        let image = mullineux(&conj, p)?;
        let matches = image == hook_partition(p, i - 1)?;
        if !matches {
            return Err(Error::Consistency(format!(
                "Mull(({hook})') = {image}, expected {}",
                hook_partition(p, i - 1)?
            )));
        }
        let proj = projective_diagram(i, n, p)?;
        if proj.tilting != image {
            return Err(Error::Consistency(format!(
                "I({hook}) = T({}) but Mull gives T({image})",
                proj.tilting
            )));
        }
        out.push(TiltingIdentity {
            i,
            injective: hook,
            conjugate: conj,
            mullineux_image: image,
            matches_previous_hook: matches,
        });
    }
    Ok(out)
}

/// Label of the `j`-th simple of the principal block of `kΣ_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymmetricSimple(pub usize);

impl Serialize for SymmetricSimple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&format_args!("D_{}", self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    pub label: SymmetricSimple,
    pub ends: [usize; 2],
}

/// Brauer tree of `kΣ_p`: an open line, no exceptional vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrauerTree {
    pub vertices: usize,
    pub edges: Vec<TreeEdge>,
    pub exceptional_vertex: Option<usize>,
}

impl BrauerTree {
    fn edges_at(&self, v: usize) -> Vec<SymmetricSimple> {
        self.edges
            .iter()
            .filter(|e| e.ends.contains(&v))
            .map(|e| e.label)
            .collect()
    }

    /// Projective cover of the simple on `edge`: top and socle `D`, heart the
    /// sum over both ends of the other edges at that vertex. With no
    /// exceptional vertex and valency at most two every heart is semisimple.
    pub fn projective_cover(
        &self,
        edge: SymmetricSimple,
    ) -> Option<ModuleDiagram<SymmetricSimple>> {
        let e = self.edges.iter().find(|e| e.label == edge)?;
        let mut heart = Vec::new();
        for &v in e.ends.iter().rev() {
            let others: Vec<SymmetricSimple> = self
                .edges_at(v)
                .into_iter()
                .filter(|&x| x != edge)
                .collect();
            debug_assert!(others.len() <= 1, "line graphs have valency at most two");
            heart.extend(others);
        }
        let mut layers = vec![vec![edge]];
        if !heart.is_empty() {
            layers.push(heart);
        }
        layers.push(vec![edge]);
        Some(ModuleDiagram::complete(layers))
    }

    /// Adjacency of simples through shared vertices.
    pub fn simple_adjacency(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in &self.edges {
            for b in &self.edges {
                if a.label < b.label && a.ends.iter().any(|v| b.ends.contains(v)) {
                    out.push((a.label.0, b.label.0));
                }
            }
        }
        out
    }
}

pub fn brauer_tree(p: Prime) -> BrauerTree {
    let p = p.as_usize();
    let edges = (1..p)
        .map(|j| TreeEdge {
            label: SymmetricSimple(j),
            ends: [j - 1, j],
        })
        .collect();
    BrauerTree {
        vertices: p,
        edges,
        exceptional_vertex: None,
    }
}

/// Projective covers `P_1, …, P_{p−1}` read off the Brauer tree.
pub fn principal_block_diagrams(p: Prime) -> Vec<ModuleDiagram<SymmetricSimple>> {
    let tree = brauer_tree(p);
    (1..p.as_usize())
        .map(|j| {
            tree.projective_cover(SymmetricSimple(j))
                .expect("edge exists")
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionReport {
    pub n: usize,
    pub p: Prime,
    pub checks: Vec<DeletionCheck>,
    pub passed: bool,
}

/// Deleting `λ^0` (and `P(λ^0)`) from the hook block and relabeling
/// `L(λ^i) ↦ D_i` recovers the block data of `kΣ_p`.
pub fn deletion_comparison(n: usize, p: Prime) -> Result<DeletionReport> {
    if n < p.as_usize() {
        return Err(Error::OutOfScope(format!(
            "deletion comparison needs n ≥ p, got n = {n}"
        )));
    }
    let hooks = hooks_upto(p, p.as_usize() - 1)?;
    let relabel =
        |x: &Partition| SymmetricSimple(hooks.iter().position(|h| h == x).expect("hook label"));
    let mut checks = Vec::new();

    let quiver = ext_quiver(n, p)?;
    let reduced: Vec<(usize, usize)> = quiver
        .edges
        .iter()
        .filter(|e| e.0 != 0 && e.1 != 0)
        .map(|e| (e.0, e.1))
        .collect();
    let tree = brauer_tree(p);
    let tree_adj = tree.simple_adjacency();
    checks.push(DeletionCheck {
        name: "ext-quiver".into(),
        passed: reduced == tree_adj,
        detail: format!("hook quiver minus λ^0: {reduced:?}; Brauer tree adjacency: {tree_adj:?}"),
    });

    let targets = principal_block_diagrams(p);
    for i in 1..p.as_usize() {
        let proj = projective_diagram(i, n, p)?;
        let deleted = proj.diagram.delete(&hooks[0]).map_labels(relabel);
        let target = &targets[i - 1];
        checks.push(DeletionCheck {
            name: format!("P({})", hooks[i]),
            passed: deleted == *target,
            detail: format!(
                "{} layers after deletion, P_{i} has {}",
                deleted.layers.len(),
                target.layers.len()
            ),
        });
    }

    let simples_left = hooks.len() - 1;
    checks.push(DeletionCheck {
        name: "simple count".into(),
        passed: simples_left == tree.edges.len(),
        detail: format!(
            "{simples_left} hook simples after deletion, {} tree edges",
            tree.edges.len()
        ),
    });
    let passed = checks.iter().all(|c| c.passed);
    Ok(DeletionReport {
        n,
        p,
        checks,
        passed,
    })
}
