//! Dense complex Hermitian linear algebra for small dimensions (d <= 64).
//!
//! Storage is row-major. Bipartite spaces use the A-major composite index
//! `i = i_a * d_b + i_b`, shared by [`tensor`] and [`partial_trace`].

mod jacobi;

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::states::DensityMatrix;

/// Relative tolerance for the Hermitian symmetry check.
pub const HERM_TOL: f64 = 1e-12;
/// Relative threshold below which an eigenvalue counts as zero.
pub const RANK_TOL: f64 = 1e-10;
/// Jacobi stops when the off-diagonal Frobenius mass drops below this fraction of `||H||_F`.
pub const JACOBI_TOL: f64 = 1e-13;

/// Kernel threshold for a spectrum: `RANK_TOL * max(1, max |lambda|)`.
pub fn rank_tol(values: &[f64]) -> f64 {
    let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    RANK_TOL * scale
}

/// General dense square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_vec(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch(dim * dim, data.len()));
        }
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Matrix { dim: n, data: out }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn hermitian_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }
}

/// Dense Hermitian matrix. Entries are exactly Hermitian after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(Matrix);

impl HermitianMatrix {
    /// Validates `entries[i][j] == conj(entries[j][i])` to a relative `HERM_TOL`,
    /// then symmetrizes exactly.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        Self::from_matrix(Matrix::from_vec(dim, entries)?)
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        if m.dim == 0 {
            return Err(domain("dimension must be at least 1"));
        }
        let defect = m.hermitian_defect();
        if defect > HERM_TOL * m.max_abs().max(1.0) {
            return Err(Error::NotHermitian(defect));
        }
        Ok(Self::symmetrized(m))
    }

    /// Averages `m` with its adjoint. Callers guarantee `m` is Hermitian up to rounding.
    pub(crate) fn symmetrized(m: Matrix) -> Self {
        let n = m.dim;
        let mut data = m.data;
        for i in 0..n {
            data[i * n + i].im = 0.0;
            for j in (i + 1)..n {
                let avg = (data[i * n + j] + data[j * n + i].conj()) * 0.5;
                data[i * n + j] = avg;
                data[j * n + i] = avg.conj();
            }
        }
        Self(Matrix { dim: n, data })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self(Matrix::from_fn(n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }))
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch(n, row.len()));
            }
            data.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        Self::new(n, data)
    }

    pub fn identity(dim: usize) -> Self {
        Self(Matrix::identity(dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(Matrix::zeros(dim))
    }

    /// `|psi><psi| / <psi|psi>`.
    pub fn projector(psi: &[Complex64]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if psi.is_empty() || norm2 < f64::MIN_POSITIVE {
            return Err(domain("projector needs a nonzero vector"));
        }
        let n = psi.len();
        Ok(Self::symmetrized(Matrix::from_fn(n, |i, j| {
            psi[i] * psi[j].conj() / norm2
        })))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn scale(&self, c: f64) -> Self {
        Self(Matrix {
            dim: self.dim(),
            data: self.0.data.iter().map(|z| z * c).collect(),
        })
    }

    /// `X H X*`, Hermitian for any square `X`.
    pub fn congruence(&self, x: &Matrix) -> Self {
        Self::symmetrized(x.matmul(&self.0).matmul(&x.adjoint()))
    }

    pub fn eigensystem(&self) -> EigenSystem {
        hermitian_eigensystem(self)
    }

    /// Ascending eigenvalues, without computing eigenvectors.
    pub fn eigenvalues(&self) -> Spectrum {
        let (mut values, _) = jacobi::jacobi_eigen(&self.0, false);
        values.sort_by(f64::total_cmp);
        Spectrum {
            values,
            order: SpectrumOrder::Ascending,
        }
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues().values[0]
    }

    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues().values.last().unwrap()
    }

    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        self.0.max_abs_diff(&other.0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        Self(Matrix {
            dim: self.dim(),
            data: self.0.data.iter().zip(&other.0.data).map(|(a, b)| f(*a, *b)).collect(),
        })
    }
}

impl TryFrom<Matrix> for HermitianMatrix {
    type Error = Error;

    fn try_from(m: Matrix) -> Result<Self> {
        Self::from_matrix(m)
    }
}

impl Add for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn add(self, rhs: Self) -> HermitianMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn sub(self, rhs: Self) -> HermitianMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<f64> for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn mul(self, c: f64) -> HermitianMatrix {
        self.scale(c)
    }
}

/// Sort order carried alongside eigenvalue vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumOrder {
    Unsorted,
    Ascending,
    Descending,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub order: SpectrumOrder,
}

impl Spectrum {
    pub fn unsorted(values: Vec<f64>) -> Self {
        Self {
            values,
            order: SpectrumOrder::Unsorted,
        }
    }

    pub fn ascending(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        if self.order != SpectrumOrder::Ascending {
            v.sort_by(f64::total_cmp);
        }
        v
    }

    pub fn descending(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        if self.order != SpectrumOrder::Descending {
            v.sort_by(|a, b| b.total_cmp(a));
        }
        v
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Ascending spectrum with orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub spectrum: Spectrum,
    pub vectors: Matrix,
}

impl EigenSystem {
    pub fn values(&self) -> &[f64] {
        &self.spectrum.values
    }

    /// `V diag(f(lambda)) V*`.
    pub fn rebuild(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let weights: Vec<f64> = self.values().iter().map(|&l| f(l)).collect();
        self.rebuild_with(&weights)
    }

    /// `V diag(weights) V*`.
    pub fn rebuild_with(&self, weights: &[f64]) -> HermitianMatrix {
        let n = self.vectors.dim();
        let v = &self.vectors;
        let mut out = Matrix::zeros(n);
        for (k, &w) in weights.iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = v.get(i, k) * w;
                for j in 0..n {
                    out.data[i * n + j] += vik * v.get(j, k).conj();
                }
            }
        }
        HermitianMatrix::symmetrized(out)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.rebuild(|l| l)
    }

    /// `<v_k| A |v_k>` for every eigenvector `v_k`.
    pub fn diagonal_of(&self, a: &HermitianMatrix) -> Vec<f64> {
        let n = self.vectors.dim();
        let av = a.as_matrix().matmul(&self.vectors);
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| self.vectors.get(i, k).conj() * av.get(i, k))
                    .sum::<Complex64>()
                    .re
            })
            .collect()
    }
}

/// Eigendecomposition by cyclic Jacobi, sorted ascending.
pub fn hermitian_eigensystem(h: &HermitianMatrix) -> EigenSystem {
    let (values, vectors) = jacobi::jacobi_eigen(h.as_matrix(), true);
    let vectors = vectors.expect("vectors requested");
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    let sorted = order.iter().map(|&k| values[k]).collect();
    let vectors = Matrix::from_fn(n, |i, j| vectors.get(i, order[j]));
    EigenSystem {
        spectrum: Spectrum {
            values: sorted,
            order: SpectrumOrder::Ascending,
        },
        vectors,
    }
}

/// Schatten p-norm; pass `f64::INFINITY` for the operator norm.
pub fn schatten_norm(h: &HermitianMatrix, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(domain(format!("Schatten index must be >= 1, got {p}")));
    }
    Ok(schatten_of_spectrum(&h.eigenvalues().values, p))
}

pub(crate) fn schatten_of_spectrum(values: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        values.iter().fold(0.0, |m, v| m.max(v.abs()))
    } else if p == 1.0 {
        values.iter().map(|v| v.abs()).sum()
    } else {
        values.iter().map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

/// `1/2 ||rho1 - rho2||_1`.
pub fn trace_distance(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch(rho1.dim(), rho2.dim()));
    }
    let diff = rho1.matrix() - rho2.matrix();
    Ok(0.5 * schatten_of_spectrum(&diff.eigenvalues().values, 1.0))
}

/// Applies `f` to the spectrum of `h`.
///
/// With `on_support_only`, eigenvalues within `rank_tol` of zero map to zero
/// without evaluating `f`. Any non-finite `f(lambda)` is a domain error.
pub fn spectral_function(
    h: &HermitianMatrix,
    f: impl Fn(f64) -> f64,
    on_support_only: bool,
) -> Result<HermitianMatrix> {
    let es = h.eigensystem();
    let tol = rank_tol(es.values());
    let mut mapped = Vec::with_capacity(es.values().len());
    for &l in es.values() {
        if on_support_only && l.abs() < tol {
            mapped.push(0.0);
            continue;
        }
        let y = f(l);
        if !y.is_finite() {
            return Err(domain(format!("spectral function undefined at eigenvalue {l:.6e}")));
        }
        mapped.push(y);
    }
    Ok(es.rebuild_with(&mapped))
}

/// Kronecker product `a (x) b` with A-major indexing.
pub fn tensor(a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    let (da, db) = (a.dim(), b.dim());
    HermitianMatrix::symmetrized(Matrix::from_fn(da * db, |i, j| {
        a.get(i / db, j / db) * b.get(i % db, j % db)
    }))
}

/// Which factor of a bipartite space to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Partial trace over the complementary factor of `keep`.
pub fn partial_trace(
    rho: &HermitianMatrix,
    dims: (usize, usize),
    keep: Subsystem,
) -> Result<HermitianMatrix> {
    let (da, db) = dims;
    if da == 0 || db == 0 || da * db != rho.dim() {
        return Err(Error::Factorization {
            dim: rho.dim(),
            d_a: da,
            d_b: db,
        });
    }
    let m = match keep {
        Subsystem::B => Matrix::from_fn(db, |i, j| {
            (0..da).map(|k| rho.get(k * db + i, k * db + j)).sum()
        }),
        Subsystem::A => Matrix::from_fn(da, |i, j| {
            (0..db).map(|k| rho.get(i * db + k, j * db + k)).sum()
        }),
    };
    Ok(HermitianMatrix::symmetrized(m))
}

const PROJECTOR_TOL: f64 = 1e-10;

/// Pinching `sum_j P_j tau P_j`.
///
/// Each `P_j` must satisfy `P_j^2 = P_j`, and distinct projectors must be
/// mutually orthogonal.
pub fn pinch(tau: &HermitianMatrix, projectors: &[HermitianMatrix]) -> Result<HermitianMatrix> {
    let n = tau.dim();
    for (a, p) in projectors.iter().enumerate() {
        if p.dim() != n {
            return Err(Error::DimensionMismatch(n, p.dim()));
        }
        let pm = p.as_matrix();
        let defect = pm.matmul(pm).max_abs_diff(pm);
        if defect > PROJECTOR_TOL {
            return Err(Error::NotProjector(defect));
        }
        for q in &projectors[..a] {
            let overlap = pm.matmul(q.as_matrix()).max_abs_diff(&Matrix::zeros(n));
            if overlap > PROJECTOR_TOL {
                return Err(Error::NotProjector(overlap));
            }
        }
    }
    let mut acc = HermitianMatrix::zeros(n);
    for p in projectors {
        acc = &acc + &tau.congruence(p.as_matrix());
    }
    Ok(acc)
}

/// Operator norm of `i[A, B]`.
pub fn commutator_norm(a: &HermitianMatrix, b: &HermitianMatrix) -> f64 {
    let ab = a.as_matrix().matmul(b.as_matrix());
    let ba = b.as_matrix().matmul(a.as_matrix());
    let i = Complex64::new(0.0, 1.0);
    let m = Matrix::from_fn(a.dim(), |r, c| i * (ab.get(r, c) - ba.get(r, c)));
    let h = HermitianMatrix::symmetrized(m);
    schatten_of_spectrum(&h.eigenvalues().values, f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eigensystem_of_diagonal() {
        let es = HermitianMatrix::from_real_diagonal(&[0.7, 0.3]).eigensystem();
        assert_eq!(es.spectrum.order, SpectrumOrder::Ascending);
        assert_abs_diff_eq!(es.values()[0], 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(es.values()[1], 0.7, epsilon = 1e-15);
    }

    #[test]
    fn eigensystem_of_identity() {
        let es = HermitianMatrix::identity(3).eigensystem();
        for v in es.values() {
            assert_abs_diff_eq!(*v, 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn eigensystem_two_by_two_by_hand() {
        // lambda^2 - 2 lambda + 0.5 = 0  =>  1 -+ sqrt(0.5)
        let h = HermitianMatrix::from_real_rows(&[&[1.5, 0.5], &[0.5, 0.5]]).unwrap();
        let es = h.eigensystem();
        assert_abs_diff_eq!(es.values()[0], 1.0 - 0.5f64.sqrt(), epsilon = 1e-13);
        assert_abs_diff_eq!(es.values()[1], 1.0 + 0.5f64.sqrt(), epsilon = 1e-13);
        assert!(es.reconstruct().max_abs_diff(&h) < 1e-13);
    }

    #[test]
    fn eigensystem_complex_offdiagonal() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2.
        let h = HermitianMatrix::new(2, vec![c(1., 0.), c(0., 1.), c(0., -1.), c(1., 0.)]).unwrap();
        let es = h.eigensystem();
        assert_abs_diff_eq!(es.values()[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(es.values()[1], 2.0, epsilon = 1e-14);
        assert!(es.reconstruct().max_abs_diff(&h) < 1e-13);
    }

    #[test]
    fn zero_matrix_eigensystem() {
        let es = HermitianMatrix::zeros(4).eigensystem();
        assert!(es.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn non_hermitian_rejected() {
        let err = HermitianMatrix::new(2, vec![c(1., 0.), c(0.5, 0.), c(0.4, 0.), c(1., 0.)]);
        assert!(matches!(err, Err(Error::NotHermitian(_))));
        let err = HermitianMatrix::new(1, vec![c(1., 0.1)]);
        assert!(matches!(err, Err(Error::NotHermitian(_))));
    }

    #[test]
    fn schatten_examples() {
        let h = HermitianMatrix::from_real_diagonal(&[0.3, -0.3]);
        assert_abs_diff_eq!(schatten_norm(&h, 1.0).unwrap(), 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(schatten_norm(&h, f64::INFINITY).unwrap(), 0.3, epsilon = 1e-15);
        let id = HermitianMatrix::identity(4);
        assert_abs_diff_eq!(schatten_norm(&id, 2.0).unwrap(), 2.0, epsilon = 1e-14);
        assert!(matches!(schatten_norm(&id, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn spectral_function_examples() {
        let log_id = spectral_function(&HermitianMatrix::identity(2), f64::ln, true).unwrap();
        assert!(log_id.max_abs_diff(&HermitianMatrix::zeros(2)) < 1e-15);

        let h = HermitianMatrix::from_real_diagonal(&[4.0, 0.0]);
        let r = spectral_function(&h, |x| x.powf(-0.5), true).unwrap();
        assert!(r.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[0.5, 0.0])) < 1e-15);

        let e = std::f64::consts::E;
        let h = HermitianMatrix::from_real_diagonal(&[e, e * e]);
        let r = spectral_function(&h, f64::ln, false).unwrap();
        assert!(r.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[1.0, 2.0])) < 1e-14);
    }

    #[test]
    fn spectral_function_undefined_is_domain_error() {
        let h = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!(matches!(spectral_function(&h, f64::ln, false), Err(Error::Domain(_))));
        let h = HermitianMatrix::from_real_diagonal(&[1.0, -0.5]);
        assert!(matches!(spectral_function(&h, f64::sqrt, true), Err(Error::Domain(_))));
    }

    #[test]
    fn tensor_examples() {
        let t = tensor(&HermitianMatrix::identity(2), &HermitianMatrix::identity(3));
        assert!(t.max_abs_diff(&HermitianMatrix::identity(6)) < 1e-15);

        let t = tensor(
            &HermitianMatrix::from_real_diagonal(&[1.0, 0.0]),
            &HermitianMatrix::from_real_diagonal(&[0.0, 1.0]),
        );
        assert!(t.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[0., 1., 0., 0.])) < 1e-15);

        let t = tensor(
            &HermitianMatrix::from_real_diagonal(&[0.5, 0.5]),
            &HermitianMatrix::from_real_diagonal(&[0.75, 0.25]),
        );
        let want = HermitianMatrix::from_real_diagonal(&[0.375, 0.125, 0.375, 0.125]);
        assert!(t.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn partial_trace_examples() {
        let h = 0.5f64.sqrt();
        let bell = HermitianMatrix::projector(&[c(h, 0.), c(0., 0.), c(0., 0.), c(h, 0.)]).unwrap();
        let b = partial_trace(&bell, (2, 2), Subsystem::B).unwrap();
        assert!(b.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[0.5, 0.5])) < 1e-15);

        let sa = HermitianMatrix::from_real_diagonal(&[0.2, 0.8]);
        let sb = HermitianMatrix::from_real_rows(&[&[0.6, 0.1, 0.0], &[0.1, 0.3, 0.05], &[0.0, 0.05, 0.1]])
            .unwrap();
        let prod = tensor(&sa, &sb);
        assert!(partial_trace(&prod, (2, 3), Subsystem::B).unwrap().max_abs_diff(&sb) < 1e-15);
        assert!(partial_trace(&prod, (2, 3), Subsystem::A).unwrap().max_abs_diff(&sa) < 1e-15);

        let mixed = HermitianMatrix::identity(4).scale(0.25);
        let a = partial_trace(&mixed, (2, 2), Subsystem::A).unwrap();
        assert!(a.max_abs_diff(&HermitianMatrix::identity(2).scale(0.5)) < 1e-15);

        assert!(matches!(
            partial_trace(&mixed, (3, 2), Subsystem::A),
            Err(Error::Factorization { .. })
        ));
    }

    #[test]
    fn pinch_examples() {
        let p0 = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]);
        let p1 = HermitianMatrix::from_real_diagonal(&[0.0, 1.0]);
        let tau = HermitianMatrix::from_real_diagonal(&[0.3, 0.7]);
        assert!(pinch(&tau, &[p0.clone(), p1.clone()]).unwrap().max_abs_diff(&tau) < 1e-15);

        let h = 0.5f64.sqrt();
        let plus = HermitianMatrix::projector(&[c(h, 0.), c(h, 0.)]).unwrap();
        let pinched = pinch(&plus, &[p0.clone(), p1]).unwrap();
        assert!(pinched.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[0.5, 0.5])) < 1e-15);

        let same = pinch(&plus, &[HermitianMatrix::identity(2)]).unwrap();
        assert!(same.max_abs_diff(&plus) < 1e-15);
    }

    #[test]
    fn pinch_rejects_non_projectors() {
        let tau = HermitianMatrix::identity(2);
        let bad = HermitianMatrix::from_real_diagonal(&[0.5, 0.0]);
        assert!(matches!(pinch(&tau, &[bad]), Err(Error::NotProjector(_))));
        let p0 = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!(matches!(pinch(&tau, &[p0.clone(), p0]), Err(Error::NotProjector(_))));
    }

    #[test]
    fn commutator_of_diagonals_vanishes() {
        let a = HermitianMatrix::from_real_diagonal(&[0.1, 0.9]);
        let b = HermitianMatrix::from_real_diagonal(&[0.4, 0.6]);
        assert!(commutator_norm(&a, &b) < 1e-15);
    }
}
