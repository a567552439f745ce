//! Jordan-Hahn decomposition of a difference of two states.
//!
//! `rho1 - rho2 = eps * (rho_plus - rho_minus)` with `rho_plus`, `rho_minus`
//! states of mutually orthogonal support and `eps` the trace distance.

use crate::error::{Error, Result};
use crate::linalg::{rank_tol, schatten_of_spectrum, HermitianMatrix};
use crate::states::{validate_state, DensityMatrix, PSD_TOL};

/// Below this trace distance the two states are treated as identical.
pub const IDENTICAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct JordanHahn {
    pub epsilon: f64,
    pub rho_plus: DensityMatrix,
    pub rho_minus: DensityMatrix,
    /// `rho1 - rho2`.
    pub delta: HermitianMatrix,
    /// Number of strictly positive eigenvalues of `delta`.
    pub rank_plus: usize,
}

/// Splits `rho1 - rho2` along its eigenbasis.
///
/// Eigenvalues of `delta` within `rank_tol` of zero go to neither part, and
/// `epsilon` is the trace of the positive part.
pub fn jordan_hahn(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<JordanHahn> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch(rho1.dim(), rho2.dim()));
    }
    let delta = rho1.matrix() - rho2.matrix();
    let es = delta.eigensystem();
    let values = es.values();
    let half_norm = 0.5 * schatten_of_spectrum(values, 1.0);
    if half_norm < IDENTICAL_TOL {
        return Err(Error::IdenticalStates(half_norm));
    }

    let tol = rank_tol(values);
    let plus: Vec<f64> = values.iter().map(|&l| if l > tol { l } else { 0.0 }).collect();
    let minus: Vec<f64> = values.iter().map(|&l| if l < -tol { -l } else { 0.0 }).collect();
    let eps_plus: f64 = plus.iter().sum();
    let eps_minus: f64 = minus.iter().sum();
    if eps_plus == 0.0 || eps_minus == 0.0 {
        return Err(Error::IdenticalStates(half_norm));
    }
    let rank_plus = plus.iter().filter(|&&l| l > 0.0).count();

    let rho_plus = DensityMatrix::from_eigen(
        plus.iter().map(|l| l / eps_plus).collect(),
        es.vectors.clone(),
    );
    let rho_minus = DensityMatrix::from_eigen(
        minus.iter().map(|l| l / eps_minus).collect(),
        es.vectors,
    );

    Ok(JordanHahn {
        epsilon: eps_plus,
        rho_plus,
        rho_minus,
        delta,
        rank_plus,
    })
}

/// The vectors `a` (length `k`) and `b` (length `d - k`), both non-increasing, with
/// `lambda_desc(delta) = (eps * a, -eps * reverse(b))`.
///
/// `a` is the nonzero spectrum of `rho_plus`; `b` is the spectrum of `rho_minus`
/// restricted to the complement of the support of `rho_plus`.
pub fn delta_spectrum_split(jh: &JordanHahn) -> (Vec<f64>, Vec<f64>) {
    let k = jh.rank_plus;
    let d = jh.delta.dim();
    let a = jh.rho_plus.spectrum().descending()[..k].to_vec();
    let b = jh.rho_minus.spectrum().descending()[..d - k].to_vec();
    (a, b)
}

/// The common part `omega = (rho1 - eps rho_plus) / (1 - eps)`, when it is a state.
///
/// This exists exactly when `rho1 >= eps rho_plus`; then
/// `rho1 = eps rho_plus + (1 - eps) omega` and `rho2 = eps rho_minus + (1 - eps) omega`.
pub fn common_part(jh: &JordanHahn, rho1: &DensityMatrix) -> Option<DensityMatrix> {
    if jh.epsilon >= 1.0 - 1e-12 {
        return None;
    }
    let rest = rho1.matrix() - &jh.rho_plus.matrix().scale(jh.epsilon);
    if rest.lambda_min() < -PSD_TOL {
        return None;
    }
    validate_state(&rest.scale(1.0 / (1.0 - jh.epsilon))).ok()
}
