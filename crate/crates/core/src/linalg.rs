//! Dense complex linear algebra on square matrices.
//!
//! Everything here works over the real vector space structure of complex
//! matrices: spans are real-linear and the inner product used for span
//! arithmetic is `Re Tr(A B†)`. Lie algebras of skew-Hermitian matrices are
//! real vector spaces, so this is the natural geometry for closure.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Default relative tolerance for rank decisions.
pub const RANK_TOL: f64 = 1e-9;
/// Default eigenvalue cluster tolerance, relative to the spectral radius.
pub const CLUSTER_TOL: f64 = 1e-8;

pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };
pub const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Square complex matrix, row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

/// Wire form of a [`ComplexMatrix`]: `{"dim": n, "re": [...], "im": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        if j.re.len() != j.im.len() {
            return Err(Error::InvalidLength {
                len: j.im.len(),
                expected: j.re.len(),
            });
        }
        let data = j
            .re
            .iter()
            .zip(&j.im)
            .map(|(&re, &im)| C64::new(re, im))
            .collect();
        ComplexMatrix::from_entries(j.dim, data)
    }
}

impl From<ComplexMatrix> for MatrixJson {
    fn from(m: ComplexMatrix) -> Self {
        MatrixJson {
            dim: m.dim,
            re: m.data.iter().map(|z| z.re + 0.0).collect(),
            im: m.data.iter().map(|z| z.im + 0.0).collect(),
        }
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        m
    }

    pub fn from_entries(dim: usize, data: Vec<C64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("matrix dimension must be positive".into()));
        }
        if data.len() != dim * dim {
            return Err(Error::InvalidLength {
                len: data.len(),
                expected: dim * dim,
            });
        }
        Ok(ComplexMatrix { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        ComplexMatrix { dim, data }
    }

    /// Builds a matrix from real rows. Panics if the rows are not square.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "rows must form a square matrix");
        Self::from_fn(dim, |r, c| C64::new(rows[r][c], 0.0))
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        assert_eq!(u.len(), v.len());
        Self::from_fn(u.len(), |r, c| u[r] * v[c].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |r, c| self.data[c * n + r].conj())
    }

    pub fn scale(&self, z: C64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * z).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    /// `self += s * other`, real scalar.
    pub fn axpy(&mut self, s: f64, other: &ComplexMatrix) {
        assert_eq!(self.dim, other.dim, "axpy dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * s;
        }
    }

    /// `self += z * other`, complex scalar.
    pub fn axpy_complex(&mut self, z: C64, other: &ComplexMatrix) {
        assert_eq!(self.dim, other.dim, "axpy dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * z;
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sqr().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `‖A − A†‖_F`.
    pub fn hermitian_residual(&self) -> f64 {
        let n = self.dim;
        let mut acc = 0.0;
        for r in 0..n {
            for c in 0..n {
                acc += (self.data[r * n + c] - self.data[c * n + r].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `‖A + A†‖_F`.
    pub fn skew_hermitian_residual(&self) -> f64 {
        let n = self.dim;
        let mut acc = 0.0;
        for r in 0..n {
            for c in 0..n {
                acc += (self.data[r * n + c] + self.data[c * n + r].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_residual() <= tol * self.frobenius_norm().max(1.0)
    }

    pub fn is_skew_hermitian(&self, tol: f64) -> bool {
        self.skew_hermitian_residual() <= tol * self.frobenius_norm().max(1.0)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let n = self.dim;
        (0..n)
            .map(|r| {
                self.data[r * n..(r + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    fn matmul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for r in 0..n {
            let row = &mut out[r * n..(r + 1) * n];
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == ZERO {
                    continue;
                }
                let brow = &rhs.data[k * n..(k + 1) * n];
                for (o, b) in row.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        ComplexMatrix { dim: n, data: out }
    }

    /// `V† · self · V` where `vectors` are the columns of `V`.
    pub fn compress(&self, vectors: &[Vec<C64>]) -> ComplexMatrix {
        let images: Vec<Vec<C64>> = vectors.iter().map(|v| self.apply(v)).collect();
        let k = vectors.len();
        ComplexMatrix::from_fn(k, |r, c| vdot(&vectors[r], &images[c]))
    }

    /// Remove the trace part: `A − (Tr A / n) 1`.
    pub fn traceless_part(&self) -> ComplexMatrix {
        let shift = self.trace() / self.dim as f64;
        let mut out = self.clone();
        for i in 0..self.dim {
            out.data[i * self.dim + i] -= shift;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        if self.dim <= 9 {
            for r in 0..self.dim {
                let row: Vec<String> = (0..self.dim)
                    .map(|c| {
                        let z = self.data[r * self.dim + c];
                        format!("{:+.3}{:+.3}i", z.re, z.im)
                    })
                    .collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl<'a> Add<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "add dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "sub dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_real(-1.0)
    }
}

impl AddAssign<&ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: &ComplexMatrix) {
        self.axpy(1.0, rhs);
    }
}

impl SubAssign<&ComplexMatrix> for ComplexMatrix {
    fn sub_assign(&mut self, rhs: &ComplexMatrix) {
        self.axpy(-1.0, rhs);
    }
}

fn check_dims(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    Ok(())
}

/// `AB − BA`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dims(a, b)?;
    Ok(&(a * b) - &(b * a))
}

/// `AB + BA`.
pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dims(a, b)?;
    Ok(&(a * b) + &(b * a))
}

/// `Tr(A B†)`.
pub fn frobenius_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<C64> {
    check_dims(a, b)?;
    Ok(a.data.iter().zip(&b.data).map(|(x, y)| x * y.conj()).sum())
}

/// `Re Tr(A B†)`, the real inner product used for span arithmetic.
pub fn real_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    debug_assert_eq!(a.dim, b.dim);
    a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| x.re * y.re + x.im * y.im)
        .sum()
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (m, n) = (a.dim, b.dim);
    let mut out = ComplexMatrix::zeros(m * n);
    let dim = m * n;
    for ar in 0..m {
        for ac in 0..m {
            let x = a.data[ar * m + ac];
            if x == ZERO {
                continue;
            }
            for br in 0..n {
                let row = (ar * n + br) * dim + ac * n;
                for bc in 0..n {
                    out.data[row + bc] = x * b.data[br * n + bc];
                }
            }
        }
    }
    out
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> ComplexMatrix {
    let mut it = factors.into_iter();
    let first = it.next().expect("kron_all needs at least one factor").clone();
    it.fold(first, |acc, f| kron(&acc, f))
}

/// `⟨u|v⟩ = Σ conj(u_i) v_i`.
pub fn vdot(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn vnorm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Real-linear span of matrices with an orthonormal basis under `Re⟨·,·⟩_F`.
#[derive(Debug, Clone)]
pub struct OrthonormalSpan {
    ambient_dim: usize,
    basis: Vec<ComplexMatrix>,
    tol: f64,
}

impl OrthonormalSpan {
    pub fn new(ambient_dim: usize, tol: f64) -> Self {
        OrthonormalSpan {
            ambient_dim,
            basis: Vec::new(),
            tol,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    /// Keeps the first `len` basis elements.
    pub fn truncate(&mut self, len: usize) {
        self.basis.truncate(len);
    }

    /// Component of `x` orthogonal to the span (two Gram-Schmidt passes).
    fn residual_of(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let mut r = x.clone();
        for _ in 0..2 {
            for b in &self.basis {
                let c = real_inner(&r, b);
                if c != 0.0 {
                    r.axpy(-c, b);
                }
            }
        }
        r
    }

    /// Offers `candidate` to the span. Appends its normalized orthogonal
    /// residual and returns `true` when the residual exceeds
    /// `tol · max(1, ‖candidate‖_F)`; otherwise leaves the span unchanged.
    pub fn orthonormal_extend(&mut self, candidate: &ComplexMatrix) -> Result<bool> {
        if candidate.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: candidate.dim(),
                right: self.ambient_dim,
            });
        }
        if !candidate.is_finite() {
            return Err(Error::NonFinite);
        }
        let norm = candidate.frobenius_norm();
        let r = self.residual_of(candidate);
        let rn = r.frobenius_norm();
        if rn > self.tol * norm.max(1.0) {
            self.basis.push(r.scale_real(1.0 / rn));
            Ok(true)
        } else {
            Ok(false)
        }
    }

    /// Orthogonal projection onto the span.
    pub fn project(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let mut p = ComplexMatrix::zeros(self.ambient_dim);
        for b in &self.basis {
            p.axpy(real_inner(x, b), b);
        }
        p
    }

    /// `‖x − Proj x‖_F / max(1, ‖x‖_F)`.
    pub fn relative_residual(&self, x: &ComplexMatrix) -> f64 {
        self.residual_of(x).frobenius_norm() / x.frobenius_norm().max(1.0)
    }
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<C64>>,
}

pub fn hermitian_eig(h: &ComplexMatrix) -> Result<HermitianEigen> {
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let residual = h.hermitian_residual();
    if residual > 1e-9 * h.frobenius_norm().max(1.0) {
        return Err(Error::NotHermitian { residual });
    }
    let n = h.dim();
    // Symmetrize so round-off in the input does not leak into the solver.
    let m = DMatrix::from_fn(n, n, |r, c| (h[(r, c)] + h[(c, r)].conj()) * 0.5);
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = order
        .iter()
        .map(|&k| eig.eigenvectors.column(k).iter().copied().collect())
        .collect();
    Ok(HermitianEigen { values, vectors })
}

/// Partition of sorted eigenvalues into groups of numerically equal values.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenClustering {
    pub eigenvalues: Vec<f64>,
    /// Index ranges into `eigenvalues`, in ascending order.
    pub clusters: Vec<Vec<usize>>,
    pub cluster_tol: f64,
}

impl EigenClustering {
    pub fn sizes(&self) -> Vec<usize> {
        self.clusters.iter().map(Vec::len).collect()
    }

    /// Mean eigenvalue of each cluster.
    pub fn representatives(&self) -> Vec<f64> {
        self.clusters
            .iter()
            .map(|c| c.iter().map(|&i| self.eigenvalues[i]).sum::<f64>() / c.len() as f64)
            .collect()
    }
}

/// Groups ascending `values` by single linkage: a new cluster starts
/// whenever the gap to the previous value exceeds `cluster_tol · max(1, ρ)`.
pub fn cluster_eigenvalues(values: &[f64], cluster_tol: f64) -> EigenClustering {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let scale = sorted.iter().map(|v| v.abs()).fold(1.0, f64::max);
    let gap = cluster_tol * scale;
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in sorted.iter().enumerate() {
        match clusters.last_mut() {
            Some(c) if v - sorted[*c.last().unwrap()] <= gap => c.push(i),
            _ => clusters.push(vec![i]),
        }
    }
    EigenClustering {
        eigenvalues: sorted,
        clusters,
        cluster_tol,
    }
}

/// Orthonormalizes complex vectors (modified Gram-Schmidt, two passes),
/// dropping those whose residual falls below `tol` times their norm.
pub fn orthonormalize_vectors(vectors: &[Vec<C64>], tol: f64) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<C64>> = Vec::new();
    for v in vectors {
        let norm = vnorm(v);
        let mut r = v.clone();
        for _ in 0..2 {
            for b in &out {
                let c = vdot(b, &r);
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
        }
        let rn = vnorm(&r);
        if rn > tol * norm.max(1.0) {
            out.push(r.into_iter().map(|z| z / rn).collect());
        }
    }
    out
}
