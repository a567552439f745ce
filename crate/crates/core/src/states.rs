//! Density matrices: validation, special families and random ensembles.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{domain, Error, Result};
use crate::linalg::{
    hermitian_eigensystem, partial_trace, rank_tol, schatten_of_spectrum, tensor, EigenSystem,
    HermitianMatrix, Matrix, Spectrum, SpectrumOrder, Subsystem,
};

/// Most negative eigenvalue accepted (and clamped to zero) by [`validate_state`].
pub const PSD_TOL: f64 = 1e-10;
/// Allowed deviation of the trace from one.
pub const TRACE_TOL: f64 = 1e-10;
/// Marginal mismatch (trace norm) tolerated for an equal-marginal pair.
pub const MARGINAL_TOL: f64 = 1e-9;

/// A validated quantum state together with its eigendecomposition.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
    eigen: EigenSystem,
}

impl DensityMatrix {
    /// Builds `V diag(values) V*` from a known orthonormal basis. `values` must be
    /// a probability vector up to rounding.
    pub(crate) fn from_eigen(values: Vec<f64>, vectors: Matrix) -> Self {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
        let sorted: Vec<f64> = order.iter().map(|&k| values[k].max(0.0)).collect();
        let vectors = Matrix::from_fn(n, |i, j| vectors.get(i, order[j]));
        let eigen = EigenSystem {
            spectrum: Spectrum {
                values: sorted,
                order: SpectrumOrder::Ascending,
            },
            vectors,
        };
        Self {
            matrix: eigen.reconstruct(),
            eigen,
        }
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> HermitianMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Ascending, clamped to be nonnegative.
    pub fn spectrum(&self) -> &Spectrum {
        &self.eigen.spectrum
    }

    pub fn eigensystem(&self) -> &EigenSystem {
        &self.eigen
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigen.spectrum.values[0]
    }

    pub fn lambda_max(&self) -> f64 {
        *self.eigen.spectrum.values.last().unwrap()
    }

    pub fn rank(&self) -> usize {
        let tol = rank_tol(self.eigen.values());
        self.eigen.values().iter().filter(|&&l| l >= tol).count()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim()
    }

    pub fn purity(&self) -> f64 {
        self.eigen.values().iter().map(|l| l * l).sum()
    }
}

impl AsRef<HermitianMatrix> for DensityMatrix {
    fn as_ref(&self) -> &HermitianMatrix {
        &self.matrix
    }
}

/// Checks positivity and unit trace.
///
/// Eigenvalues in `[-PSD_TOL, 0)` are clamped to zero and the spectrum is
/// renormalized; anything more negative is rejected.
pub fn validate_state(h: &HermitianMatrix) -> Result<DensityMatrix> {
    let eigen = hermitian_eigensystem(h);
    let min = eigen.values()[0];
    if min < -PSD_TOL {
        return Err(Error::NotAState(min));
    }
    let trace = h.trace();
    if (trace - 1.0).abs() > TRACE_TOL {
        return Err(Error::Normalization(trace));
    }
    if min < 0.0 {
        let clamped: Vec<f64> = eigen.values().iter().map(|l| l.max(0.0)).collect();
        let total: f64 = clamped.iter().sum();
        let values = clamped.into_iter().map(|l| l / total).collect();
        return Ok(DensityMatrix::from_eigen(values, eigen.vectors));
    }
    Ok(DensityMatrix {
        matrix: h.clone(),
        eigen,
    })
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Random state `G G* / Tr(G G*)` with `G` a `d x rank` complex Ginibre matrix.
/// `rank = d` gives the Hilbert-Schmidt ensemble.
pub fn random_mixed<R: Rng + ?Sized>(d: usize, rank: usize, rng: &mut R) -> Result<DensityMatrix> {
    if d == 0 || rank == 0 || rank > d {
        return Err(domain(format!("need 1 <= rank <= d, got rank {rank}, d {d}")));
    }
    let g: Vec<Complex64> = (0..d * rank).map(|_| complex_gaussian(rng)).collect();
    let mut m = Matrix::from_fn(d, |i, j| {
        (0..rank).map(|k| g[i * rank + k] * g[j * rank + k].conj()).sum()
    });
    let tr = m.trace().re;
    m = Matrix::from_fn(d, |i, j| m.get(i, j) / tr);
    validate_state(&HermitianMatrix::symmetrized(m))
}

/// Haar-random pure state from a normalized complex Gaussian vector.
pub fn random_pure<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Result<DensityMatrix> {
    if d == 0 {
        return Err(domain("dimension must be at least 1"));
    }
    let psi: Vec<Complex64> = (0..d).map(|_| complex_gaussian(rng)).collect();
    validate_state(&HermitianMatrix::projector(&psi)?)
}

/// Hermitian matrix with i.i.d. complex Gaussian off-diagonal and real Gaussian diagonal entries.
pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> HermitianMatrix {
    let g: Vec<Complex64> = (0..d * d).map(|_| complex_gaussian(rng)).collect();
    let m = Matrix::from_fn(d, |i, j| (g[i * d + j] + g[j * d + i].conj()) * 0.5);
    HermitianMatrix::symmetrized(m)
}

/// `1/d`, the completely mixed state.
pub fn maximally_mixed(d: usize) -> Result<DensityMatrix> {
    if d == 0 {
        return Err(domain("dimension must be at least 1"));
    }
    Ok(DensityMatrix::from_eigen(vec![1.0 / d as f64; d], Matrix::identity(d)))
}

/// The saturating family
/// `rho1 = (1 - eps)|psi><psi| + eps/(d-1) (1 - |psi><psi|)`, `rho2 = |psi><psi|`.
///
/// `psi` defaults to the first basis vector; a supplied vector is normalized.
pub fn tightness_pair(
    d: usize,
    eps: f64,
    psi: Option<&[Complex64]>,
) -> Result<(DensityMatrix, DensityMatrix)> {
    if d < 2 {
        return Err(domain(format!("tightness pair needs d >= 2, got {d}")));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain(format!("eps must lie in (0, 1), got {eps}")));
    }
    let basis;
    let psi = match psi {
        Some(v) if v.len() != d => return Err(Error::DimensionMismatch(d, v.len())),
        Some(v) => v,
        None => {
            basis = (0..d)
                .map(|i| Complex64::new(if i == 0 { 1.0 } else { 0.0 }, 0.0))
                .collect::<Vec<_>>();
            &basis
        }
    };
    let proj = HermitianMatrix::projector(psi)?;
    let complement = &HermitianMatrix::identity(d) - &proj;
    let rho1 = &proj.scale(1.0 - eps) + &complement.scale(eps / (d - 1) as f64);
    Ok((validate_state(&rho1)?, validate_state(&proj)?))
}

/// Two states on `C^{d_a} (x) C^{d_b}`.
#[derive(Debug, Clone)]
pub struct BipartitePair {
    pub rho1: DensityMatrix,
    pub rho2: DensityMatrix,
    pub dims: (usize, usize),
    /// Set when the B-marginals agree within [`MARGINAL_TOL`] in trace norm.
    pub equal_marginals: bool,
}

impl BipartitePair {
    pub fn new(rho1: DensityMatrix, rho2: DensityMatrix, dims: (usize, usize)) -> Result<Self> {
        if rho1.dim() != rho2.dim() {
            return Err(Error::DimensionMismatch(rho1.dim(), rho2.dim()));
        }
        let gap = marginal_gap(&rho1, &rho2, dims)?;
        Ok(Self {
            rho1,
            rho2,
            dims,
            equal_marginals: gap <= MARGINAL_TOL,
        })
    }

    pub fn marginal_gap(&self) -> f64 {
        marginal_gap(&self.rho1, &self.rho2, self.dims).expect("dims validated at construction")
    }
}

/// `|| Tr_A rho1 - Tr_A rho2 ||_1`.
pub fn marginal_gap(rho1: &DensityMatrix, rho2: &DensityMatrix, dims: (usize, usize)) -> Result<f64> {
    let b1 = partial_trace(rho1.matrix(), dims, Subsystem::B)?;
    let b2 = partial_trace(rho2.matrix(), dims, Subsystem::B)?;
    Ok(schatten_of_spectrum(&(&b1 - &b2).eigenvalues().values, 1.0))
}

const MAX_RESAMPLES: usize = 16;

/// Random pair with identical B-marginals.
///
/// `rho1` is Hilbert-Schmidt random. A traceless Hermitian `K0` is centered to
/// `K = K0 - tau_A (x) Tr_A K0`, so `Tr_A K = 0`, and
/// `rho2 = rho1 + t K` with `t = u * lambda_min(rho1) / ||K||_inf` stays positive.
pub fn random_equal_marginal_pair<R: Rng + ?Sized>(
    d_a: usize,
    d_b: usize,
    u: f64,
    rng: &mut R,
) -> Result<BipartitePair> {
    if d_a < 2 || d_b < 2 {
        return Err(domain(format!("need d_a, d_b >= 2, got ({d_a}, {d_b})")));
    }
    if !(u > 0.0 && u <= 1.0) {
        return Err(domain(format!("strength must lie in (0, 1], got {u}")));
    }
    let d = d_a * d_b;
    let rho1 = random_mixed(d, d, rng)?;
    let tau_a = HermitianMatrix::identity(d_a).scale(1.0 / d_a as f64);

    for _ in 0..MAX_RESAMPLES {
        let h = random_hermitian(d, rng);
        let k0 = &h - &HermitianMatrix::identity(d).scale(h.trace() / d as f64);
        let k = &k0 - &tensor(&tau_a, &partial_trace(&k0, (d_a, d_b), Subsystem::B)?);
        let k_norm = schatten_of_spectrum(&k.eigenvalues().values, f64::INFINITY);
        if k_norm < 1e-12 {
            continue;
        }
        let t = u * rho1.lambda_min() / k_norm;
        let rho2 = validate_state(&(rho1.matrix() + &k.scale(t)))?;
        return BipartitePair::new(rho1, rho2, (d_a, d_b));
    }
    Err(Error::NumericalFault(
        "centered perturbation vanished on every resample".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropies::von_neumann;
    use crate::linalg::{commutator_norm, trace_distance};
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn validate_examples() {
        let s = validate_state(&HermitianMatrix::identity(3).scale(1.0 / 3.0)).unwrap();
        assert_eq!(s.rank(), 3);
        assert!(matches!(
            validate_state(&HermitianMatrix::from_real_diagonal(&[1.2, -0.2])),
            Err(Error::NotAState(_))
        ));
        assert!(matches!(
            validate_state(&HermitianMatrix::from_real_diagonal(&[0.5, 0.5, 0.1])),
            Err(Error::Normalization(_))
        ));
    }

    #[test]
    fn validate_clamps_tiny_negatives() {
        let s = validate_state(&HermitianMatrix::from_real_diagonal(&[1.0 + 1e-12, -1e-12])).unwrap();
        assert_eq!(s.lambda_min(), 0.0);
        assert_abs_diff_eq!(s.matrix().trace(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn random_mixed_examples() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let one = random_mixed(1, 1, &mut rng).unwrap();
        assert_abs_diff_eq!(one.matrix().get(0, 0).re, 1.0, epsilon = 1e-15);

        let pure = random_mixed(4, 1, &mut rng).unwrap();
        let spec = &pure.spectrum().values;
        assert_abs_diff_eq!(spec[3], 1.0, epsilon = 1e-12);
        for v in &spec[..3] {
            assert_abs_diff_eq!(*v, 0.0, epsilon = 1e-12);
        }
        assert!(random_mixed(3, 4, &mut rng).is_err());
    }

    #[test]
    fn random_pure_examples() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let p = random_pure(2, &mut rng).unwrap();
        assert_abs_diff_eq!(von_neumann(&p), 0.0, epsilon = 1e-12);
        let p = random_pure(5, &mut rng).unwrap();
        assert_abs_diff_eq!(p.purity(), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn maximally_mixed_examples() {
        let m = maximally_mixed(2).unwrap();
        assert!(m.matrix().max_abs_diff(&HermitianMatrix::from_real_diagonal(&[0.5, 0.5])) < 1e-15);
        assert_abs_diff_eq!(von_neumann(&maximally_mixed(4).unwrap()), 4f64.ln(), epsilon = 1e-14);
        assert_abs_diff_eq!(maximally_mixed(1).unwrap().matrix().get(0, 0).re, 1.0);
    }

    #[test]
    fn tightness_pair_examples() {
        // spectrum (0.5, 0.25, 0.25): S = 1.5 ln 2
        let (r1, r2) = tightness_pair(3, 0.5, None).unwrap();
        assert_abs_diff_eq!(von_neumann(&r1) - von_neumann(&r2), 1.5 * 2f64.ln(), epsilon = 1e-12);
        assert!(commutator_norm(r1.matrix(), r2.matrix()) <= 1e-12);

        let (r1, r2) = tightness_pair(4, 0.25, None).unwrap();
        assert_abs_diff_eq!(trace_distance(&r1, &r2).unwrap(), 0.25, epsilon = 1e-14);

        let e = 0.3;
        let (r1, _) = tightness_pair(2, e, None).unwrap();
        let h = -e * f64::ln(e) - (1.0 - e) * f64::ln(1.0 - e);
        assert_abs_diff_eq!(von_neumann(&r1), h, epsilon = 1e-13);

        assert!(tightness_pair(3, 0.0, None).is_err());
        assert!(tightness_pair(3, 1.0, None).is_err());
        assert!(tightness_pair(1, 0.5, None).is_err());
    }

    #[test]
    fn equal_marginal_pair_examples() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let pair = random_equal_marginal_pair(2, 2, 1.0, &mut rng).unwrap();
        assert!(pair.equal_marginals);
        assert!(pair.marginal_gap() <= 1e-9);
        assert!(pair.rho2.lambda_min() >= -1e-10);

        let pair = random_equal_marginal_pair(2, 3, 1e-14, &mut rng).unwrap();
        assert!(trace_distance(&pair.rho1, &pair.rho2).unwrap() < 1e-12);
        assert!(random_equal_marginal_pair(1, 3, 0.5, &mut rng).is_err());
        assert!(random_equal_marginal_pair(2, 2, 0.0, &mut rng).is_err());
    }
}
