//! Entropy functionals in nats.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::linalg::{partial_trace, rank_tol, HermitianMatrix, Matrix, Subsystem};
use crate::states::{validate_state, DensityMatrix, PSD_TOL};

/// Weight of `rho` on the kernel of the second argument above which the
/// support condition counts as violated.
pub const KERNEL_TOL: f64 = 1e-10;

/// A relative-entropy value, either finite or `+inf`.
///
/// Only comparisons are defined; extracting the number from an infinite value
/// is an error.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum EntropyValue {
    Finite(f64),
    Infinite,
}

impl EntropyValue {
    pub fn is_finite(self) -> bool {
        matches!(self, Self::Finite(_))
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Self::Finite(v) => Some(v),
            Self::Infinite => None,
        }
    }

    /// The finite value, or a numerical fault naming `what`.
    pub fn finite(self, what: &str) -> Result<f64> {
        self.value()
            .ok_or_else(|| Error::NumericalFault(format!("{what} is infinite")))
    }
}

impl fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(v) => write!(f, "{v}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

/// `eta(u) = -u ln u`, with `eta(0) = 0`.
pub fn eta(u: f64) -> Result<f64> {
    if !(u >= 0.0) {
        return Err(domain(format!("eta needs u >= 0, got {u}")));
    }
    Ok(eta_unchecked(u))
}

#[inline]
pub(crate) fn eta_unchecked(u: f64) -> f64 {
    if u <= 0.0 {
        0.0
    } else {
        -u * u.ln()
    }
}

/// `H(p) = sum_i eta(p_i)`; `p` need not be normalized.
pub fn shannon(p: &[f64]) -> Result<f64> {
    p.iter().try_fold(0.0, |acc, &x| Ok(acc + eta(x)?))
}

/// `h(e) = -e ln e - (1 - e) ln(1 - e)`.
pub fn binary_entropy(e: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&e) {
        return Err(domain(format!("binary entropy needs e in [0, 1], got {e}")));
    }
    Ok(binary_entropy_unchecked(e))
}

#[inline]
pub(crate) fn binary_entropy_unchecked(e: f64) -> f64 {
    eta_unchecked(e) + eta_unchecked(1.0 - e)
}

/// `S(rho) = -Tr rho ln rho`.
pub fn von_neumann(rho: &DensityMatrix) -> f64 {
    rho.spectrum().values.iter().map(|&l| eta_unchecked(l)).sum()
}

/// Spectral entropy of a positive operator with any trace. Eigenvalues in
/// `[-PSD_TOL, 0)` count as zero.
pub fn entropy_of_positive(h: &HermitianMatrix) -> Result<f64> {
    let spec = h.eigenvalues().values;
    if spec[0] < -PSD_TOL {
        return Err(Error::Precondition(format!(
            "operator is not positive (minimum eigenvalue {:.3e})",
            spec[0]
        )));
    }
    Ok(spec.iter().map(|&l| eta_unchecked(l)).sum())
}

/// `S(A|B) = S(rho_AB) - S(rho_B)`.
pub fn conditional_entropy(rho: &DensityMatrix, dims: (usize, usize)) -> Result<f64> {
    let rho_b = validate_state(&partial_trace(rho.matrix(), dims, Subsystem::B)?)?;
    Ok(von_neumann(rho) - von_neumann(&rho_b))
}

/// Umegaki relative entropy `D(rho || sigma)`.
///
/// `sigma` may be any positive operator (not necessarily unit trace). The value
/// is `+inf` when `rho` carries weight above [`KERNEL_TOL`] on the kernel of `sigma`.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &HermitianMatrix) -> Result<EntropyValue> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    let es = sigma.eigensystem();
    let values = es.values();
    let tol = rank_tol(values);
    if values[0] < -tol.max(PSD_TOL) {
        return Err(domain(format!(
            "second argument is not positive (minimum eigenvalue {:.3e})",
            values[0]
        )));
    }
    let weights = es.diagonal_of(rho.matrix());
    let mut kernel_weight = 0.0;
    let mut cross = 0.0;
    for (&s, &w) in values.iter().zip(&weights) {
        if s < tol {
            kernel_weight += w;
        } else {
            cross += w * s.ln();
        }
    }
    if kernel_weight > KERNEL_TOL {
        return Ok(EntropyValue::Infinite);
    }
    Ok(EntropyValue::Finite(-von_neumann(rho) - cross))
}

/// Max-relative entropy `inf { l : rho <= e^l sigma }`.
///
/// Computed as `ln lambda_max(sigma^{-1/2} rho sigma^{-1/2})` on the support of
/// `sigma`; `+inf` when the support of `rho` is not contained in it.
pub fn dmax(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<EntropyValue> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    let es = sigma.eigensystem();
    let values = es.values();
    let tol = rank_tol(values);
    let support: Vec<usize> = (0..values.len()).filter(|&j| values[j] >= tol).collect();

    // rho in the eigenbasis of sigma
    let v = &es.vectors;
    let w = v.adjoint().matmul(&rho.matrix().as_matrix().matmul(v));
    let kernel_weight: f64 = (0..values.len())
        .filter(|j| values[*j] < tol)
        .map(|j| w.get(j, j).re)
        .sum();
    if kernel_weight > KERNEL_TOL {
        return Ok(EntropyValue::Infinite);
    }

    let r = support.len();
    let inv_sqrt: Vec<f64> = support.iter().map(|&j| values[j].powf(-0.5)).collect();
    let m = Matrix::from_fn(r, |a, b| {
        w.get(support[a], support[b]) * (inv_sqrt[a] * inv_sqrt[b])
    });
    let lmax = HermitianMatrix::symmetrized(m).lambda_max();
    Ok(EntropyValue::Finite(lmax.ln().max(0.0)))
}
