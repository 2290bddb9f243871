//! Dynamical Lie algebras of permutation-symmetric generator sets and
//! per-block subspace-controllability verdicts.

use serde::{Deserialize, Serialize};

use crate::casimir::{center_project, span_dimension, CenterBasis, IsotypicBlock};
use crate::error::{Error, Result};
use crate::generators::{
    adjacent_transpositions, collective, gell_mann_basis, permutation_operator, standard_spin_ops, symmetric_sum,
    two_body_hamiltonian, SymmetricMultiIndex,
};
use crate::linalg::{commutator, ComplexMatrix, OrthonormalSpan, C64, I, RANK_TOL, ZERO};

/// Rank tolerance for per-block span dimensions.
pub const VERDICT_TOL: f64 = 1e-7;
/// Relative tolerance for generator validation and block leakage.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Skew-Hermitian generators in `u^{S_n}(d^n)`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    d: usize,
    n: usize,
    generators: Vec<ComplexMatrix>,
    names: Vec<String>,
}

impl GeneratorSet {
    /// Validates that every generator is skew-Hermitian and commutes with
    /// all tensor-factor permutations.
    pub fn new(d: usize, n: usize, generators: Vec<ComplexMatrix>, names: Vec<String>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("generator set is empty".into()));
        }
        if names.len() != generators.len() {
            return Err(Error::DimensionMismatch {
                left: names.len(),
                right: generators.len(),
            });
        }
        let dim = d.pow(n as u32);
        let transpositions: Vec<ComplexMatrix> = adjacent_transpositions(n)
            .iter()
            .map(|p| permutation_operator(p, d))
            .collect();
        for (g, name) in generators.iter().zip(&names) {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { left: g.dim(), right: dim });
            }
            if !g.is_finite() {
                return Err(Error::NonFinite);
            }
            let scale = g.frobenius_norm().max(1.0);
            let residual = g.skew_hermitian_residual() / scale;
            if residual > MEMBERSHIP_TOL {
                return Err(Error::NotSkewHermitian {
                    name: name.clone(),
                    residual,
                });
            }
            for t in &transpositions {
                let residual = commutator(g, t)?.frobenius_norm() / scale;
                if residual > MEMBERSHIP_TOL {
                    return Err(Error::NotPermutationInvariant {
                        name: name.clone(),
                        residual,
                    });
                }
            }
        }
        Ok(GeneratorSet {
            d,
            n,
            generators,
            names,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators[0].dim()
    }

    /// Appends one more generator, validating it like the others.
    pub fn with(mut self, g: ComplexMatrix, name: &str) -> Result<Self> {
        let checked = GeneratorSet::new(self.d, self.n, vec![g], vec![name.to_string()])?;
        self.generators.extend(checked.generators);
        self.names.extend(checked.names);
        Ok(self)
    }

    /// Parses a generator-spec document. The top level is a list of
    /// generators; each generator is a list of
    /// `{"multi_index", "coeff_re", "coeff_im"}` terms (a bare term is a
    /// one-term generator) and stands for `i Σ (coeff_re + i coeff_im) F`.
    pub fn from_spec_json(text: &str) -> Result<Self> {
        let doc: Vec<SpecGenerator> =
            serde_json::from_str(text).map_err(|e| Error::Malformed(format!("generator spec: {e}")))?;
        if doc.is_empty() {
            return Err(Error::Malformed("generator spec lists no generators".into()));
        }
        let first = doc[0]
            .terms()
            .first()
            .ok_or_else(|| Error::Malformed("generator 0 has no terms".into()))?;
        let slots = first.multi_index.len();
        let d = (slots as f64).sqrt().round() as usize;
        if d < 2 || d * d != slots {
            return Err(Error::Malformed(format!(
                "multi_index length {slots} is not d² for some d ≥ 2"
            )));
        }
        let n: usize = first.multi_index.iter().sum();
        if n == 0 {
            return Err(Error::Malformed("multi_index sums to 0".into()));
        }
        let basis = gell_mann_basis(d)?;
        let dim = d.pow(n as u32);
        let mut gens = Vec::new();
        let mut names = Vec::new();
        for (k, g) in doc.iter().enumerate() {
            let terms = g.terms();
            if terms.is_empty() {
                return Err(Error::Malformed(format!("generator {k} has no terms")));
            }
            let mut h = ComplexMatrix::zeros(dim);
            for t in terms {
                if t.multi_index.len() != slots || t.multi_index.iter().sum::<usize>() != n {
                    return Err(Error::Malformed(format!(
                        "generator {k}: multi_index {:?} does not match d={d}, n={n}",
                        t.multi_index
                    )));
                }
                if !t.coeff_re.is_finite() || !t.coeff_im.is_finite() {
                    return Err(Error::Malformed(format!("generator {k}: non-finite coefficient")));
                }
                let idx = SymmetricMultiIndex::new(t.multi_index.clone());
                h.axpy_complex(C64::new(t.coeff_re, t.coeff_im), &symmetric_sum(&basis, &idx, n)?);
            }
            gens.push(h.scale(I));
            names.push(format!("spec[{k}]"));
        }
        GeneratorSet::new(d, n, gens, names)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum SpecGenerator {
    Sum(Vec<SpecTerm>),
    Single(SpecTerm),
}

impl SpecGenerator {
    fn terms(&self) -> &[SpecTerm] {
        match self {
            SpecGenerator::Sum(t) => t,
            SpecGenerator::Single(t) => std::slice::from_ref(t),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecTerm {
    multi_index: Vec<usize>,
    #[serde(default)]
    coeff_re: f64,
    #[serde(default)]
    coeff_im: f64,
}

/// Orthonormal basis of the generated Lie algebra.
#[derive(Debug, Clone)]
pub struct LieClosureResult {
    pub span: OrthonormalSpan,
    pub dim: usize,
    /// Bracket depth at which the last new element was found.
    pub rounds: usize,
    pub saturated: bool,
}

/// Breadth-first closure: each basis element, in discovery order, is
/// bracketed with every generator and every earlier basis element. Stops
/// when nothing new appears (saturated) or a new element would exceed
/// `max_dim` (unsaturated).
pub fn lie_closure(gens: &GeneratorSet, tol: f64, max_dim: usize) -> Result<LieClosureResult> {
    let mut span = OrthonormalSpan::new(gens.ambient_dim(), tol);
    let mut depth: Vec<usize> = Vec::new();
    let over = |span: &mut OrthonormalSpan, depth: &[usize]| -> Option<LieClosureResult> {
        if span.dim() > max_dim {
            span.truncate(max_dim);
            let rounds = depth.iter().take(max_dim).copied().max().unwrap_or(0);
            return Some(LieClosureResult {
                dim: span.dim(),
                span: span.clone(),
                rounds,
                saturated: false,
            });
        }
        None
    };
    for g in gens.generators() {
        if span.orthonormal_extend(g)? {
            depth.push(0);
            if let Some(r) = over(&mut span, &depth) {
                return Ok(r);
            }
        }
    }
    let mut next = 0;
    while next < span.dim() {
        let x = span.basis()[next].clone();
        let level = depth[next] + 1;
        let partners: Vec<ComplexMatrix> = gens
            .generators()
            .iter()
            .cloned()
            .chain(span.basis()[..next].iter().cloned())
            .collect();
        for y in &partners {
            let b = commutator(&x, y)?;
            if span.orthonormal_extend(&b)? {
                depth.push(level);
                if let Some(r) = over(&mut span, &depth) {
                    return Ok(r);
                }
            }
        }
        next += 1;
    }
    Ok(LieClosureResult {
        dim: span.dim(),
        rounds: depth.iter().copied().max().unwrap_or(0),
        span,
        saturated: true,
    })
}

/// `‖x − Proj x‖_F / max(1, ‖x‖_F)` and whether it is at most `tol`.
pub fn membership(x: &ComplexMatrix, closure: &LieClosureResult, tol: f64) -> Result<(bool, f64)> {
    if x.dim() != closure.span.ambient_dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: closure.span.ambient_dim(),
        });
    }
    let r = closure.span.relative_residual(x);
    Ok((r <= tol, r))
}

/// Generators split against the center.
#[derive(Debug, Clone)]
pub struct LeviSplit {
    pub center_components: Vec<ComplexMatrix>,
    pub traceless_components: Vec<ComplexMatrix>,
    pub center_component_dim: usize,
}

pub fn levi_split(gens: &GeneratorSet, cb: &CenterBasis) -> Result<LeviSplit> {
    let mut center_components = Vec::new();
    let mut traceless_components = Vec::new();
    for g in gens.generators() {
        let (c, s) = center_project(g, cb)?;
        center_components.push(c);
        traceless_components.push(s);
    }
    let center_component_dim = span_dimension(&center_components, RANK_TOL)?;
    Ok(LeviSplit {
        center_components,
        traceless_components,
        center_component_dim,
    })
}

/// `V† X V` in the block's orthonormal basis; fails when `X` maps the
/// block outside itself.
pub fn restrict_to_block(x: &ComplexMatrix, block: &IsotypicBlock) -> Result<ComplexMatrix> {
    let vs = &block.projector_basis;
    if vs.is_empty() {
        return Ok(ComplexMatrix::zeros(0));
    }
    if vs[0].len() != x.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: vs[0].len(),
        });
    }
    let images: Vec<Vec<C64>> = vs.iter().map(|v| x.apply(v)).collect();
    let k = vs.len();
    let r = ComplexMatrix::from_fn(k, |i, j| crate::linalg::vdot(&vs[i], &images[j]));
    let mut leak_sq = 0.0;
    for (j, img) in images.iter().enumerate() {
        let mut res = img.clone();
        for (i, v) in vs.iter().enumerate() {
            let c = r[(i, j)];
            for (a, b) in res.iter_mut().zip(v) {
                *a -= c * b;
            }
        }
        leak_sq += res.iter().map(|z| z.norm_sqr()).sum::<f64>();
    }
    let leakage = leak_sq.sqrt() / x.frobenius_norm().max(1.0);
    if leakage > MEMBERSHIP_TOL {
        return Err(Error::Leakage {
            label: block.label.entries().to_vec(),
            leakage,
        });
    }
    Ok(r)
}

/// Verdict for one isotypic block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockVerdict {
    pub label: Vec<u32>,
    pub irrep_dim: usize,
    pub multiplicity: usize,
    pub restricted_dim: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControllabilityReport {
    pub blocks: Vec<BlockVerdict>,
    pub center_dim: usize,
    pub total_dim: usize,
    pub subspace_controllable: bool,
    pub saturated: bool,
    pub rounds: usize,
}

/// Restricts every closure element to each block and compares the span of
/// the traceless parts with `su(irrep_dim)`.
pub fn subspace_controllability(
    closure: &LieClosureResult,
    blocks: &[IsotypicBlock],
    cb: &CenterBasis,
) -> Result<ControllabilityReport> {
    if !closure.saturated {
        return Err(Error::Unsaturated);
    }
    let mut verdicts = Vec::new();
    for block in blocks {
        let mut span = OrthonormalSpan::new(block.block_dim, VERDICT_TOL);
        for x in closure.span.basis() {
            let r = restrict_to_block(x, block)?;
            span.orthonormal_extend(&r.traceless_part())?;
        }
        let target = block.irrep_dim * block.irrep_dim - 1;
        verdicts.push(BlockVerdict {
            label: block.label.entries().to_vec(),
            irrep_dim: block.irrep_dim,
            multiplicity: block.multiplicity,
            restricted_dim: span.dim(),
            ok: span.dim() == target,
        });
    }
    let centers = closure
        .span
        .basis()
        .iter()
        .map(|x| center_project(x, cb).map(|(c, _)| c))
        .collect::<Result<Vec<_>>>()?;
    let center_dim = span_dimension(&centers, VERDICT_TOL)?;
    Ok(ControllabilityReport {
        subspace_controllable: verdicts.iter().all(|v| v.ok),
        blocks: verdicts,
        center_dim,
        total_dim: closure.dim,
        saturated: closure.saturated,
        rounds: closure.rounds,
    })
}

/// Named generator sets:
/// `qubits:n=K`, `qutrits:n=3:H`, `qutrits:n=3:Sz2`, `lemma2:N1,N2,(J,M)`.
pub fn preset(name: &str) -> Result<GeneratorSet> {
    let unknown = || Error::UnknownPreset(name.to_string());
    if let Some(rest) = name.strip_prefix("qubits:n=") {
        let n: usize = rest.parse().map_err(|_| unknown())?;
        if n == 0 {
            return Err(unknown());
        }
        return qubit_preset(n);
    }
    match name {
        "qutrits:n=3:H" => {
            let h = two_body_hamiltonian(3, 3)?;
            qutrit_locals(3)?.with(h.scale(I), "iH")
        }
        "qutrits:n=3:Sz2" => {
            let sz = collective(&standard_spin_ops(3, 1)?.z, 3);
            qutrit_locals(3)?.with((&sz * &sz).scale(I), "i(Sz1)^2")
        }
        _ => match name.strip_prefix("lemma2:") {
            Some(rest) => {
                let (n1, n2, j, m) = parse_lemma2(rest).ok_or_else(unknown)?;
                lemma2_preset(n1, n2, j, m)
            }
            None => Err(unknown()),
        },
    }
}

fn qubit_preset(n: usize) -> Result<GeneratorSet> {
    let s = standard_spin_ops(2, 1)?;
    let sx = collective(&s.x.scale_real(0.5), n);
    let sy = collective(&s.y.scale_real(0.5), n);
    let sz = collective(&s.z, n);
    let sz2 = &sz * &sz;
    GeneratorSet::new(
        2,
        n,
        vec![sx.scale(I), sy.scale(I), sz.scale(I), sz2.scale(I)],
        ["iSx", "iSy", "iSz", "iSz^2"].map(String::from).to_vec(),
    )
}

fn qutrit_locals(n: usize) -> Result<GeneratorSet> {
    let basis = gell_mann_basis(3)?;
    let gens = basis.traceless().iter().map(|e| collective(e, n).scale(I)).collect();
    let names = (1..=8).map(|k| format!("iE{k}")).collect();
    GeneratorSet::new(3, n, gens, names)
}

fn parse_lemma2(s: &str) -> Option<(usize, usize, usize, usize)> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
    let parts: Vec<usize> = cleaned.split(',').map(|p| p.parse().ok()).collect::<Option<_>>()?;
    match parts[..] {
        [n1, n2, j, m] => Some((n1, n2, j, m)),
        _ => None,
    }
}

/// Block-diagonal `su(n1) ⊕ su(n2)` basis plus `i(E_{jm} + E_{mj})` on a
/// single site of dimension `n1 + n2`.
pub fn lemma2_preset(n1: usize, n2: usize, j: usize, m: usize) -> Result<GeneratorSet> {
    if n1 == 0 || n2 == 0 || n1 + n2 < 3 {
        return Err(Error::InvalidArgument(format!(
            "need n1, n2 ≥ 1 and n1 + n2 ≥ 3, got ({n1}, {n2})"
        )));
    }
    if !(1..=n1).contains(&j) || !(n1 + 1..=n1 + n2).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "position ({j}, {m}) is not off-diagonal between the blocks"
        )));
    }
    let total = n1 + n2;
    let mut gens = Vec::new();
    let mut names = Vec::new();
    for (offset, size) in [(0, n1), (n1, n2)] {
        if size < 2 {
            continue;
        }
        let basis = gell_mann_basis(size)?;
        for (k, e) in basis.traceless().iter().enumerate() {
            let embedded = ComplexMatrix::from_fn(total, |r, c| {
                if (offset..offset + size).contains(&r) && (offset..offset + size).contains(&c) {
                    e[(r - offset, c - offset)] * I
                } else {
                    ZERO
                }
            });
            gens.push(embedded);
            names.push(format!("block{}[{}]", if offset == 0 { 1 } else { 2 }, k + 1));
        }
    }
    let x = ComplexMatrix::from_fn(total, |r, c| {
        if (r, c) == (j - 1, m - 1) || (r, c) == (m - 1, j - 1) {
            I
        } else {
            ZERO
        }
    });
    gens.push(x);
    names.push(format!("X({j},{m})"));
    GeneratorSet::new(total, 1, gens, names)
}
