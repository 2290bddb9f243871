//! Concrete operators on `(ℂ^d)^{⊗n}`.
//!
//! Single-site bases use the unnormalized convention `Tr(F_a F_b) = 2 δ_ab`
//! for the traceless elements, with the identity stored at index 0. For
//! `d = 2` the traceless elements are `σx, σy, σz`; for `d = 3` they are the
//! Gell-Mann matrices `E1..E8` in their usual order. For `d ≥ 4` the
//! ordering is: symmetric off-diagonal pairs (row-major), antisymmetric
//! pairs (row-major), then diagonal matrices of increasing support.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    anticommutator, commutator, frobenius_inner, kron, kron_all, ComplexMatrix, C64, I, ONE, ZERO,
};

/// Identity plus `d² − 1` traceless Hermitian matrices.
#[derive(Debug, Clone)]
pub struct HermitianBasis {
    d: usize,
    elements: Vec<ComplexMatrix>,
}

impl HermitianBasis {
    pub fn d(&self) -> usize {
        self.d
    }

    /// All `d²` elements, identity first.
    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    /// The `d² − 1` traceless elements (`E1, E2, …`).
    pub fn traceless(&self) -> &[ComplexMatrix] {
        &self.elements[1..]
    }

    /// Element by slot index (0 is the identity).
    pub fn get(&self, slot: usize) -> &ComplexMatrix {
        &self.elements[slot]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn sym_pair(d: usize, j: usize, k: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d);
    m[(j, k)] = ONE;
    m[(k, j)] = ONE;
    m
}

fn antisym_pair(d: usize, j: usize, k: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(d);
    m[(j, k)] = -I;
    m[(k, j)] = I;
    m
}

/// Diagonal element with support `0..=k`: `√(2/(k(k+1))) diag(1,…,1,−k,0,…)`.
fn diag_element(d: usize, k: usize) -> ComplexMatrix {
    let norm = (2.0 / (k * (k + 1)) as f64).sqrt();
    let entries: Vec<C64> = (0..d)
        .map(|i| match i.cmp(&k) {
            std::cmp::Ordering::Less => C64::new(norm, 0.0),
            std::cmp::Ordering::Equal => C64::new(-(k as f64) * norm, 0.0),
            std::cmp::Ordering::Greater => ZERO,
        })
        .collect();
    ComplexMatrix::diagonal(&entries)
}

/// Pauli (`d = 2`), Gell-Mann (`d = 3`) or generalized Gell-Mann basis.
pub fn gell_mann_basis(d: usize) -> Result<HermitianBasis> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("level count d must be ≥ 2, got {d}")));
    }
    let mut elements = vec![ComplexMatrix::identity(d)];
    if d <= 3 {
        // Interleaved su(2) triples: (0,1) pair, its diagonal, then (0,2), (1,2).
        elements.push(sym_pair(d, 0, 1));
        elements.push(antisym_pair(d, 0, 1));
        elements.push(diag_element(d, 1));
        if d == 3 {
            elements.push(sym_pair(d, 0, 2));
            elements.push(antisym_pair(d, 0, 2));
            elements.push(sym_pair(d, 1, 2));
            elements.push(antisym_pair(d, 1, 2));
            elements.push(diag_element(d, 2));
        }
    } else {
        for j in 0..d {
            for k in j + 1..d {
                elements.push(sym_pair(d, j, k));
            }
        }
        for j in 0..d {
            for k in j + 1..d {
                elements.push(antisym_pair(d, j, k));
            }
        }
        for k in 1..d {
            elements.push(diag_element(d, k));
        }
    }
    debug_assert_eq!(elements.len(), d * d);
    Ok(HermitianBasis { d, elements })
}

/// `[E_j, E_k] = Σ_l i f_{jk}^l E_l` and `{E_j, E_k} = γ δ_jk 1 + Σ_l d_{jk}^l E_l`.
///
/// Indices are the 1-based slot labels of the traceless basis elements.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    d: usize,
    m: usize,
    f: Vec<f64>,
    dsym: Vec<f64>,
    gamma: f64,
}

impl StructureConstants {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of traceless generators, `d² − 1`.
    pub fn rank(&self) -> usize {
        self.m
    }

    fn at(&self, j: usize, k: usize, l: usize) -> usize {
        assert!(
            (1..=self.m).contains(&j) && (1..=self.m).contains(&k) && (1..=self.m).contains(&l),
            "structure constant index out of range"
        );
        ((j - 1) * self.m + (k - 1)) * self.m + (l - 1)
    }

    /// `f_{jk}^l`.
    pub fn f(&self, j: usize, k: usize, l: usize) -> f64 {
        self.f[self.at(j, k, l)]
    }

    /// `d_{jk}^l`.
    pub fn dsym(&self, j: usize, k: usize, l: usize) -> f64 {
        self.dsym[self.at(j, k, l)]
    }

    /// Identity coefficient of `{E_j, E_j}`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Projects commutators and anticommutators back onto the basis.
pub fn structure_constants(basis: &HermitianBasis) -> StructureConstants {
    let d = basis.d();
    let gens = basis.traceless();
    let m = gens.len();
    let mut f = vec![0.0; m * m * m];
    let mut dsym = vec![0.0; m * m * m];
    let norms: Vec<f64> = gens
        .iter()
        .map(|g| frobenius_inner(g, g).unwrap().re)
        .collect();
    for j in 0..m {
        for k in 0..m {
            let comm = commutator(&gens[j], &gens[k]).unwrap();
            let anti = anticommutator(&gens[j], &gens[k]).unwrap();
            for l in 0..m {
                let idx = (j * m + k) * m + l;
                // ⟨[E_j,E_k], E_l⟩ = i f Tr(E_l²)
                f[idx] = (frobenius_inner(&comm, &gens[l]).unwrap() / (I * norms[l])).re;
                dsym[idx] = frobenius_inner(&anti, &gens[l]).unwrap().re / norms[l];
            }
        }
    }
    let gamma = anticommutator(&gens[0], &gens[0]).unwrap().trace().re / d as f64;
    StructureConstants {
        d,
        m,
        f,
        dsym,
        gamma,
    }
}

/// `(j0, j1, …, j_{d²−1})`: how many copies of each basis element appear in
/// every term of a symmetrized tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetricMultiIndex {
    counts: Vec<usize>,
}

impl SymmetricMultiIndex {
    pub fn new(counts: Vec<usize>) -> Self {
        SymmetricMultiIndex { counts }
    }

    /// `n − Σ_k counts_k` identities plus the given `(slot, count)` pairs.
    pub fn with_slots(d: usize, n: usize, slots: &[(usize, usize)]) -> Result<Self> {
        let mut counts = vec![0; d * d];
        let mut used = 0;
        for &(slot, c) in slots {
            if slot == 0 || slot >= d * d {
                return Err(Error::InvalidArgument(format!("slot {slot} out of range for d={d}")));
            }
            counts[slot] += c;
            used += c;
        }
        if used > n {
            return Err(Error::InvalidArgument(format!(
                "{used} non-identity factors exceed n={n}"
            )));
        }
        counts[0] = n - used;
        Ok(SymmetricMultiIndex { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Number of distinct tensor products in the sum, `n!/(j0!···)`.
    pub fn term_count(&self) -> u128 {
        let mut num: u128 = 1;
        let mut seen = 0u128;
        for &c in &self.counts {
            for i in 1..=c as u128 {
                seen += 1;
                num = num * seen / i;
            }
        }
        num
    }

    /// Every multi-index of length `d²` summing to `n`, in lexicographically
    /// decreasing order of the count tuple.
    pub fn all(d: usize, n: usize) -> Vec<SymmetricMultiIndex> {
        fn rec(slot: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<SymmetricMultiIndex>) {
            if slot + 1 == cur.len() {
                cur[slot] = left;
                out.push(SymmetricMultiIndex::new(cur.clone()));
                return;
            }
            for c in (0..=left).rev() {
                cur[slot] = c;
                rec(slot + 1, left - c, cur, out);
            }
        }
        let mut out = Vec::new();
        let mut cur = vec![0; d * d];
        rec(0, n, &mut cur, &mut out);
        out
    }
}

/// Lexicographic next permutation; returns false after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `F_{(j0,…)}`: sum over all distinct placements of the indicated basis
/// elements on `n` sites.
pub fn symmetric_sum(
    basis: &HermitianBasis,
    idx: &SymmetricMultiIndex,
    n: usize,
) -> Result<ComplexMatrix> {
    if idx.counts().len() != basis.len() {
        return Err(Error::InvalidArgument(format!(
            "multi-index has {} slots, basis has {}",
            idx.counts().len(),
            basis.len()
        )));
    }
    if idx.total() != n {
        return Err(Error::InvalidArgument(format!(
            "multi-index counts sum to {}, expected n={n}",
            idx.total()
        )));
    }
    let mut labels: Vec<usize> = idx
        .counts()
        .iter()
        .enumerate()
        .flat_map(|(slot, &c)| std::iter::repeat_n(slot, c))
        .collect();
    let dim = basis.d().pow(n as u32);
    let mut acc = ComplexMatrix::zeros(dim);
    loop {
        let term = kron_all(labels.iter().map(|&s| basis.get(s)));
        acc += &term;
        if !next_permutation(&mut labels) {
            break;
        }
    }
    Ok(acc)
}

/// `Σ_j 1^{⊗(j−1)} ⊗ L ⊗ 1^{⊗(n−j)}`.
pub fn collective(l: &ComplexMatrix, n: usize) -> ComplexMatrix {
    let d = l.dim();
    let mut acc = ComplexMatrix::zeros(d.pow(n as u32));
    for j in 0..n {
        let left = ComplexMatrix::identity(d.pow(j as u32));
        let right = ComplexMatrix::identity(d.pow((n - j - 1) as u32));
        acc += &kron(&kron(&left, l), &right);
    }
    acc
}

/// Single-site ladder operators for the `(l−1, l)` level pair.
#[derive(Debug, Clone)]
pub struct SpinOps {
    /// `S_z^l`: `+½` on `|l−1⟩`, `−½` on `|l⟩`.
    pub z: ComplexMatrix,
    /// `S_+^l |l⟩ = |l−1⟩`.
    pub plus: ComplexMatrix,
    /// `S_−^l |l−1⟩ = |l⟩`.
    pub minus: ComplexMatrix,
    /// `S_+ + S_−`.
    pub x: ComplexMatrix,
    /// `i (S_+ − S_−)`.
    pub y: ComplexMatrix,
}

impl SpinOps {
    /// `2 S_z^l`, the Pauli-normalized diagonal (`E3` for `d = 3`, `l = 1`).
    pub fn z_pauli(&self) -> ComplexMatrix {
        self.z.scale_real(2.0)
    }
}

pub fn standard_spin_ops(d: usize, l: usize) -> Result<SpinOps> {
    if l == 0 || l >= d {
        return Err(Error::InvalidArgument(format!(
            "ladder index l={l} out of range 1..={}",
            d.saturating_sub(1)
        )));
    }
    let (hi, lo) = (l - 1, l);
    let mut z = ComplexMatrix::zeros(d);
    z[(hi, hi)] = C64::new(0.5, 0.0);
    z[(lo, lo)] = C64::new(-0.5, 0.0);
    let mut plus = ComplexMatrix::zeros(d);
    plus[(hi, lo)] = ONE;
    let minus = plus.adjoint();
    let x = &plus + &minus;
    let y = (&plus - &minus).scale(I);
    Ok(SpinOps {
        z,
        plus,
        minus,
        x,
        y,
    })
}

/// `F_{(n−2, …, 2 at the E3 slot, …)}`: the symmetric two-body `E3 ⊗ E3` coupling.
pub fn two_body_hamiltonian(d: usize, n: usize) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::InvalidArgument("two-body Hamiltonian needs n ≥ 2".into()));
    }
    let basis = gell_mann_basis(d)?;
    let idx = SymmetricMultiIndex::with_slots(d, n, &[(3, 2)])?;
    symmetric_sum(&basis, &idx, n)
}

/// A permutation of tensor-factor positions `1..=n`, in one-line notation:
/// the factor sitting at position `i` moves to position `images[i−1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[im - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// From disjoint cycles, e.g. `(2 1 3)` is `&[&[2, 1, 3]]`: 2→1→3→2.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?} for n={n}")));
                }
                touched[a - 1] = true;
                images[a - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

/// The unitary that moves tensor factor `i` to position `perm(i)`.
pub fn permutation_operator(perm: &Permutation, d: usize) -> ComplexMatrix {
    let n = perm.n();
    let dim = d.pow(n as u32);
    let mut out = ComplexMatrix::zeros(dim);
    let mut digits = vec![0usize; n];
    let mut moved = vec![0usize; n];
    for src in 0..dim {
        let mut rest = src;
        for pos in (0..n).rev() {
            digits[pos] = rest % d;
            rest /= d;
        }
        for pos in 0..n {
            moved[perm.images[pos] - 1] = digits[pos];
        }
        let dst = moved.iter().fold(0, |acc, &x| acc * d + x);
        out[(dst, src)] = ONE;
    }
    out
}

/// Every permutation of `1..=n`, in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut v: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation { images: v.clone() }];
    while next_permutation(&mut v) {
        out.push(Permutation { images: v.clone() });
    }
    out
}

/// Adjacent transpositions `(k k+1)`; together they generate `S_n`.
pub fn adjacent_transpositions(n: usize) -> Vec<Permutation> {
    (1..n)
        .map(|k| Permutation::from_cycles(n, &[&[k, k + 1]]).unwrap())
        .collect()
}

/// `Σ c_σ P_σ` for a formal combination of permutations.
pub fn group_algebra_element(terms: &[(f64, Permutation)], d: usize) -> Result<ComplexMatrix> {
    let n = terms
        .first()
        .map(|(_, p)| p.n())
        .ok_or_else(|| Error::InvalidArgument("empty group-algebra element".into()))?;
    let mut acc = ComplexMatrix::zeros(d.pow(n as u32));
    for (c, p) in terms {
        if p.n() != n {
            return Err(Error::InvalidPermutation("mixed permutation sizes".into()));
        }
        acc.axpy(*c, &permutation_operator(p, d));
    }
    Ok(acc)
}

/// Young symmetrizer `1 + (12) − (13) − (213)` of the tableau with rows
/// `{1,2}` and `{3}`.
pub fn young_symmetrizer_21(d: usize) -> ComplexMatrix {
    let terms = [
        (1.0, Permutation::identity(3)),
        (1.0, Permutation::from_cycles(3, &[&[1, 2]]).unwrap()),
        (-1.0, Permutation::from_cycles(3, &[&[1, 3]]).unwrap()),
        (-1.0, Permutation::from_cycles(3, &[&[2, 1, 3]]).unwrap()),
    ];
    group_algebra_element(&terms, d).unwrap()
}

/// Computational basis index of a digit string (most significant first).
pub fn basis_index(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| {
        assert!(x < d, "digit {x} out of range for d={d}");
        acc * d + x
    })
}

/// Normalized Dicke state with `w[k]` sites in level `k`.
pub fn dicke_state(w: &[usize], d: usize) -> Vec<C64> {
    assert_eq!(w.len(), d, "weight vector must have d entries");
    let n: usize = w.iter().sum();
    let mut labels: Vec<usize> = w
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat_n(k, c))
        .collect();
    let mut v = vec![ZERO; d.pow(n as u32)];
    let mut count = 0usize;
    loop {
        v[basis_index(&labels, d)] = ONE;
        count += 1;
        if !next_permutation(&mut labels) {
            break;
        }
    }
    let s = 1.0 / (count as f64).sqrt();
    v.iter_mut().for_each(|z| *z *= s);
    v
}
