//! Casimir operators, isotypic blocks and the center of `u^{S_n}(d^n)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{collective, gell_mann_basis, structure_constants, symmetric_sum, SymmetricMultiIndex};
use crate::linalg::{
    cluster_eigenvalues, hermitian_eig, ComplexMatrix, OrthonormalSpan, C64, CLUSTER_TOL, RANK_TOL, ZERO,
};
use crate::rep_theory::{cg_decompose, irrep_dimension, quadratic_casimir_value, IWeight};

/// `C_2` and, for `d = 3`, `C_3` on `(ℂ^d)^{⊗n}`.
#[derive(Debug, Clone)]
pub struct CasimirSet {
    pub d: usize,
    pub n: usize,
    pub c2: ComplexMatrix,
    pub c3: Option<ComplexMatrix>,
}

impl CasimirSet {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        let c2 = build_c2(d, n)?;
        let c3 = if d == 3 { Some(build_c3(d, n)?) } else { None };
        Ok(CasimirSet { d, n, c2, c3 })
    }
}

fn check_dims(d: usize, n: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("d must be ≥ 2, got {d}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("n must be ≥ 1".into()));
    }
    Ok(())
}

fn collective_generators(d: usize, n: usize) -> Result<Vec<ComplexMatrix>> {
    let basis = gell_mann_basis(d)?;
    Ok(basis.traceless().iter().map(|e| collective(e, n)).collect())
}

/// `Σ_k collective(E_k, n)²` over the traceless basis elements.
pub fn build_c2(d: usize, n: usize) -> Result<ComplexMatrix> {
    check_dims(d, n)?;
    let dim = d.pow(n as u32);
    let mut c2 = ComplexMatrix::zeros(dim);
    for f in collective_generators(d, n)? {
        c2 += &(&f * &f);
    }
    Ok(c2)
}

/// `Σ d_{lmq} F̂_l F̂_m F̂_q` for `d = 3`.
pub fn build_c3(d: usize, n: usize) -> Result<ComplexMatrix> {
    if d != 3 {
        return Err(Error::Unsupported(format!("cubic Casimir is only built for d = 3, got {d}")));
    }
    check_dims(d, n)?;
    let basis = gell_mann_basis(d)?;
    let sc = structure_constants(&basis);
    let fs: Vec<ComplexMatrix> = basis.traceless().iter().map(|e| collective(e, n)).collect();
    let r = fs.len();
    let dim = fs[0].dim();
    let mut c3 = ComplexMatrix::zeros(dim);
    for l in 1..=r {
        for m in 1..=r {
            let mut inner = ComplexMatrix::zeros(dim);
            let mut any = false;
            for q in 1..=r {
                let c = sc.dsym(l, m, q);
                if c.abs() > 1e-14 {
                    inner.axpy(c, &fs[q - 1]);
                    any = true;
                }
            }
            if any {
                c3 += &(&(&fs[l - 1] * &fs[m - 1]) * &inner);
            }
        }
    }
    let sym = (&c3 + &c3.adjoint()).scale_real(0.5);
    Ok(sym)
}

/// `c_2(p, q) = p² + q² + 3(p + q) + pq`.
pub fn c2_eigenvalue(p: i64, q: i64) -> Result<i64> {
    if p < 0 || q < 0 {
        return Err(Error::InvalidArgument(format!("c2 needs p, q ≥ 0, got ({p}, {q})")));
    }
    Ok(p * p + q * q + 3 * (p + q) + p * q)
}

fn c2u(p: i64, q: i64) -> i64 {
    p * p + q * q + 3 * (p + q) + p * q
}

/// Lattice points of the two cones around `(p0, q0)` (with `q0 ≤ p0`) that
/// can share its `c_2` value inside the region `q ≤ p`.
fn triangle_candidates(p0: i64, q0: i64) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    // Below: p0 + (q0 − q)/2 < p < p0 + q0 − q.
    for q in 0..q0 {
        let lo = p0 + (q0 - q) / 2;
        for p in lo..p0 + q0 - q {
            out.insert((p, q));
        }
    }
    // Above: p0 + q0 − q ≤ p ≤ p0 − (q − q0)/2 and q ≤ p.
    let mut q = q0 + 1;
    while q <= p0 {
        let lo = (p0 + q0 - q).max(q);
        let hi = p0 - (q - q0 + 1) / 2;
        for p in lo..=hi {
            out.insert((p, q));
        }
        q += 1;
    }
    out
}

/// All `(p, q)` with `c_2(p, q) = c_2(p0, q0)`, ascending.
///
/// Works in the half-plane `q ≤ p` and mirrors at the end. Candidates come
/// from the cones bounded by the directions `(1, −1)` and `(1, −2)` (and
/// their reflections); every hit narrows the candidate set to the
/// intersection with its own cones.
pub fn degeneracy_search(p0: u32, q0: u32) -> Vec<(u32, u32)> {
    let (mut p0, mut q0) = (p0 as i64, q0 as i64);
    if q0 > p0 {
        std::mem::swap(&mut p0, &mut q0);
    }
    let target = c2u(p0, q0);
    let mut hits = vec![(p0, q0)];
    let mut candidates = triangle_candidates(p0, q0);
    while let Some(&(p, q)) = candidates.iter().next() {
        candidates.remove(&(p, q));
        if c2u(p, q) == target {
            hits.push((p, q));
            let own = triangle_candidates(p, q);
            candidates.retain(|c| own.contains(c));
        }
    }
    mirror(hits)
}

/// Same level set by exhaustive scan of the disc
/// `(p − 3/2)² + (q − 3/2)² ≤ c_2 + 9/2`, which contains it.
pub fn degeneracy_disc_scan(p0: u32, q0: u32) -> Vec<(u32, u32)> {
    let target = c2u(p0 as i64, q0 as i64);
    let r2 = 2 * target + 9; // doubled to stay in integers
    let max = 2 + (((target as f64) + 4.5).sqrt()) as i64;
    let mut hits = Vec::new();
    for p in 0..=max {
        for q in 0..=max {
            let (a, b) = (2 * p - 3, 2 * q - 3);
            if a * a + b * b <= 2 * r2 && c2u(p, q) == target {
                hits.push((p, q));
            }
        }
    }
    mirror(hits)
}

fn mirror(hits: Vec<(i64, i64)>) -> Vec<(u32, u32)> {
    let mut all: BTreeSet<(u32, u32)> = BTreeSet::new();
    for (p, q) in hits {
        all.insert((p as u32, q as u32));
        all.insert((q as u32, p as u32));
    }
    all.into_iter().collect()
}

/// True when the quadratic Casimir separates all irreps of `(ℂ^d)^{⊗n}`.
pub fn c2_is_injective(d: usize, n: usize) -> Result<bool> {
    let labels: Vec<IWeight> = cg_decompose(n, d)?.entries().into_iter().map(|(w, _)| w).collect();
    let values: Vec<f64> = labels.iter().map(quadratic_casimir_value).collect();
    Ok(group_by_value(&values).iter().all(|g| g.len() == 1))
}

fn group_by_value(values: &[f64]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if (values[i] - values[g[0]]).abs() <= 1e-9 * values[i].abs().max(1.0) => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    groups
}

/// Direct sum of all copies of one irrep, as a joint Casimir eigenspace.
#[derive(Debug, Clone)]
pub struct IsotypicBlock {
    /// I-weight with `n` boxes.
    pub label: IWeight,
    /// Orthonormal vectors spanning the block.
    pub projector_basis: Vec<Vec<C64>>,
    pub block_dim: usize,
    pub irrep_dim: usize,
    pub multiplicity: usize,
    /// Index of the `C_2` eigenvalue cluster, ascending.
    pub c2_cluster_index: usize,
    /// Mean `C_2` eigenvalue on the block.
    pub c2_value: f64,
}

impl IsotypicBlock {
    /// Orthogonal projector onto the block.
    pub fn projector(&self) -> ComplexMatrix {
        let dim = self.projector_basis[0].len();
        let mut p = ComplexMatrix::zeros(dim);
        for v in &self.projector_basis {
            p += &ComplexMatrix::outer(v, v);
        }
        p
    }

    /// `‖(1 − PP†) v‖ / ‖v‖`.
    pub fn leakage_of_vector(&self, v: &[C64]) -> f64 {
        let norm = crate::linalg::vnorm(v);
        if norm == 0.0 {
            return 0.0;
        }
        let mut r = v.to_vec();
        for b in &self.projector_basis {
            let c = crate::linalg::vdot(b, v);
            for (x, y) in r.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
        crate::linalg::vnorm(&r) / norm
    }
}

/// Row of the spectrum table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub block_label: Vec<u32>,
    pub block_dim: usize,
    pub c2_cluster_index: usize,
}

pub fn spectrum(blocks: &[IsotypicBlock]) -> Vec<SpectrumEntry> {
    blocks
        .iter()
        .map(|b| SpectrumEntry {
            block_label: b.label.entries().to_vec(),
            block_dim: b.block_dim,
            c2_cluster_index: b.c2_cluster_index,
        })
        .collect()
}

/// Splits `(ℂ^d)^{⊗n}` into isotypic blocks from the spectrum of `C_2`
/// (refined by `C_3` for `d = 3`), ordered by ascending `C_2`.
pub fn isotypic_blocks(d: usize, n: usize) -> Result<Vec<IsotypicBlock>> {
    isotypic_blocks_with_tol(d, n, CLUSTER_TOL)
}

pub fn isotypic_blocks_with_tol(d: usize, n: usize, cluster_tol: f64) -> Result<Vec<IsotypicBlock>> {
    check_dims(d, n)?;
    let labels: Vec<(IWeight, u64)> = cg_decompose(n, d)?.entries();
    let predicted: Vec<f64> = labels.iter().map(|(w, _)| quadratic_casimir_value(w)).collect();
    let groups = group_by_value(&predicted);

    let c2 = build_c2(d, n)?;
    let eig = hermitian_eig(&c2)?;
    let clustering = cluster_eigenvalues(&eig.values, cluster_tol);
    if clustering.clusters.len() != groups.len() {
        return Err(Error::UnresolvedDegeneracy(format!(
            "C2 has {} eigenvalue clusters, expected {}",
            clustering.clusters.len(),
            groups.len()
        )));
    }
    let reps = clustering.representatives();

    let mut c3: Option<ComplexMatrix> = None;
    let mut blocks = Vec::new();
    for (ci, (group, cluster)) in groups.iter().zip(&clustering.clusters).enumerate() {
        let vectors: Vec<Vec<C64>> = cluster.iter().map(|&i| eig.vectors[i].clone()).collect();
        let expected: usize = group.iter().map(|&g| block_dim_of(&labels[g])).sum();
        if expected != vectors.len() {
            return Err(Error::UnresolvedDegeneracy(format!(
                "C2 cluster {ci} has size {}, expected {expected}",
                vectors.len()
            )));
        }
        let pieces = if group.len() == 1 {
            vec![(group[0], vectors)]
        } else {
            if d != 3 {
                return Err(Error::UnresolvedDegeneracy(format!(
                    "labels {} share a C2 value and no higher Casimir is available for d = {d}",
                    describe(group, &labels)
                )));
            }
            let c3 = match &c3 {
                Some(m) => m,
                None => c3.insert(build_c3(d, n)?),
            };
            split_by_operator(c3, &vectors, group, &labels, cluster_tol)?
        };
        for (g, vecs) in pieces {
            let (w, k) = &labels[g];
            blocks.push(IsotypicBlock {
                label: w.with_size(n as u32).unwrap_or_else(|| w.clone()),
                block_dim: vecs.len(),
                irrep_dim: irrep_dimension(w) as usize,
                multiplicity: *k as usize,
                projector_basis: vecs,
                c2_cluster_index: ci,
                c2_value: reps[ci],
            });
        }
    }
    Ok(blocks)
}

fn block_dim_of((w, k): &(IWeight, u64)) -> usize {
    (irrep_dimension(w) * k) as usize
}

fn describe(group: &[usize], labels: &[(IWeight, u64)]) -> String {
    group.iter().map(|&g| labels[g].0.to_string()).collect::<Vec<_>>().join(", ")
}

/// Diagonalizes `op` on the span of `vectors` and assigns the resulting
/// eigenspaces to the labels of `group` by block dimension.
fn split_by_operator(
    op: &ComplexMatrix,
    vectors: &[Vec<C64>],
    group: &[usize],
    labels: &[(IWeight, u64)],
    cluster_tol: f64,
) -> Result<Vec<(usize, Vec<Vec<C64>>)>> {
    let restricted = op.compress(vectors);
    let eig = hermitian_eig(&restricted)?;
    let clustering = cluster_eigenvalues(&eig.values, cluster_tol);
    if clustering.clusters.len() != group.len() {
        return Err(Error::UnresolvedDegeneracy(format!(
            "C3 splits labels {} into {} clusters",
            describe(group, labels),
            clustering.clusters.len()
        )));
    }
    let mut unused: Vec<usize> = group.to_vec();
    let mut out = Vec::new();
    for cluster in &clustering.clusters {
        let matches: Vec<usize> = unused
            .iter()
            .copied()
            .filter(|&g| block_dim_of(&labels[g]) == cluster.len())
            .collect();
        if matches.len() != 1 {
            return Err(Error::UnresolvedDegeneracy(format!(
                "cannot assign a C3 eigenspace of size {} among {}",
                cluster.len(),
                describe(group, labels)
            )));
        }
        unused.retain(|&g| g != matches[0]);
        let lifted = cluster
            .iter()
            .map(|&i| {
                let u = &eig.vectors[i];
                let mut v = vec![ZERO; vectors[0].len()];
                for (coef, basis) in u.iter().zip(vectors) {
                    for (x, y) in v.iter_mut().zip(basis) {
                        *x += coef * y;
                    }
                }
                v
            })
            .collect();
        out.push((matches[0], lifted));
    }
    Ok(out)
}

/// Block-scalar operators, one projector per non-isomorphic irrep.
#[derive(Debug, Clone)]
pub struct CenterBasis {
    pub elements: Vec<ComplexMatrix>,
    pub labels: Vec<IWeight>,
}

impl CenterBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn from_blocks(blocks: &[IsotypicBlock]) -> Self {
        CenterBasis {
            elements: blocks.iter().map(IsotypicBlock::projector).collect(),
            labels: blocks.iter().map(|b| b.label.clone()).collect(),
        }
    }
}

pub fn center_basis(d: usize, n: usize) -> Result<CenterBasis> {
    Ok(CenterBasis::from_blocks(&isotypic_blocks(d, n)?))
}

/// `Σ_{a+b+c=k} (2a)!(2b)!(2c)!/(a!b!c!) F_{(n−2k, 2a, 2b, 2c)}` for qubits.
pub fn qubit_center_element(n: usize, k: usize) -> Result<ComplexMatrix> {
    if n == 0 || 2 * k > n {
        return Err(Error::InvalidArgument(format!("need 0 ≤ k ≤ ⌊n/2⌋, got n={n}, k={k}")));
    }
    let basis = gell_mann_basis(2)?;
    let fact = |m: usize| -> f64 { (1..=m).map(|x| x as f64).product() };
    let mut out = ComplexMatrix::zeros(1 << n);
    for a in 0..=k {
        for b in 0..=k - a {
            let c = k - a - b;
            let coef = fact(2 * a) * fact(2 * b) * fact(2 * c) / (fact(a) * fact(b) * fact(c));
            let idx = SymmetricMultiIndex::new(vec![n - 2 * k, 2 * a, 2 * b, 2 * c]);
            out.axpy(coef, &symmetric_sum(&basis, &idx, n)?);
        }
    }
    Ok(out)
}

/// Splits `x = c + s` with `c` in the (complex) span of the center basis
/// and `s` orthogonal to it.
pub fn center_project(x: &ComplexMatrix, cb: &CenterBasis) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let mut c = ComplexMatrix::zeros(x.dim());
    for p in &cb.elements {
        if p.dim() != x.dim() {
            return Err(Error::DimensionMismatch {
                left: x.dim(),
                right: p.dim(),
            });
        }
        let coef = (x * p).trace() / p.trace();
        c.axpy_complex(coef, p);
    }
    let s = x - &c;
    Ok((c, s))
}

/// Real dimension of the span of `mats`.
pub fn span_dimension(mats: &[ComplexMatrix], tol: f64) -> Result<usize> {
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    let mut span = OrthonormalSpan::new(first.dim(), tol);
    for m in mats {
        span.orthonormal_extend(m)?;
    }
    Ok(span.dim())
}

/// Real dimension of the center components of `mats`.
pub fn center_component_dim(mats: &[ComplexMatrix], cb: &CenterBasis) -> Result<usize> {
    let comps = mats
        .iter()
        .map(|m| center_project(m, cb).map(|(c, _)| c))
        .collect::<Result<Vec<_>>>()?;
    span_dimension(&comps, RANK_TOL)
}
