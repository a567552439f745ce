//! Majorization and the spectral lemmas behind the entropy-difference bound.

use rand::Rng;
use rand_distr::Exp1;

use crate::decomposition::JordanHahn;
use crate::entropies::{entropy_of_positive, eta_unchecked, von_neumann};
use crate::error::{Error, Result};
use crate::linalg::HermitianMatrix;
use crate::states::{random_mixed, validate_state, DensityMatrix, PSD_TOL};

/// Absolute tolerance on sorted partial sums.
pub const PARTIAL_SUM_TOL: f64 = 1e-10;
/// Allowed mismatch of the totals.
pub const TOTAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationReport {
    pub holds: bool,
    /// `min_k (sum_{j<=k} y_desc - sum_{j<=k} x_desc)` over `k = 1..=d`.
    pub worst_partial_sum_gap: f64,
    /// First 1-based `k` where the relation fails.
    pub failing_k: Option<usize>,
}

fn sorted_desc(v: &[f64]) -> Vec<f64> {
    let mut s = v.to_vec();
    // stable: ties keep their original order
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Reports whether `x` is majorized by `y`.
pub fn majorizes(y: &[f64], x: &[f64]) -> Result<MajorizationReport> {
    if y.len() != x.len() {
        return Err(Error::DimensionMismatch(y.len(), x.len()));
    }
    let (ys, xs) = (sorted_desc(y), sorted_desc(x));
    let d = xs.len();
    let mut worst = f64::INFINITY;
    let mut failing_k = None;
    let (mut sy, mut sx) = (0.0, 0.0);
    for k in 0..d {
        sy += ys[k];
        sx += xs[k];
        let gap = sy - sx;
        worst = worst.min(gap);
        if failing_k.is_none() && gap < -PARTIAL_SUM_TOL {
            failing_k = Some(k + 1);
        }
    }
    if failing_k.is_none() && (sy - sx).abs() > TOTAL_TOL {
        failing_k = Some(d);
    }
    Ok(MajorizationReport {
        holds: failing_k.is_none(),
        worst_partial_sum_gap: if d == 0 { 0.0 } else { worst },
        failing_k,
    })
}

/// Lidskii: `lambda_desc(A) + lambda_asc(B)` is majorized by `lambda(A + B)`.
pub fn lidskii_check(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<MajorizationReport> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let x = lidskii_vector(a, b);
    majorizes(&(a + b).eigenvalues().values, &x)
}

/// `lambda_desc(A) + lambda_asc(B)`.
fn lidskii_vector(a: &HermitianMatrix, b: &HermitianMatrix) -> Vec<f64> {
    let a_desc = a.eigenvalues().descending();
    let b_asc = b.eigenvalues().ascending();
    a_desc.iter().zip(&b_asc).map(|(p, q)| p + q).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma1Report {
    /// `lambda_min(omega + delta)`.
    pub lhs: f64,
    /// `min_j (lambda_desc_j(delta) + lambda_asc_j(omega))`.
    pub rhs: f64,
    /// When `omega + delta >= 0`: whether `lambda_desc(delta) + lambda_asc(omega) >= 0`
    /// holds entrywise (within `1e-9`).
    pub entrywise_nonnegative: Option<bool>,
}

/// Smallest eigenvalue of a sum against the smallest Lidskii-vector entry.
pub fn lemma1_bound(omega: &HermitianMatrix, delta: &HermitianMatrix) -> Result<Lemma1Report> {
    if omega.dim() != delta.dim() {
        return Err(Error::DimensionMismatch(omega.dim(), delta.dim()));
    }
    let x = lidskii_vector(delta, omega);
    let lhs = (omega + delta).lambda_min();
    let rhs = x.iter().copied().fold(f64::INFINITY, f64::min);
    let entrywise_nonnegative = (lhs >= -PSD_TOL).then(|| rhs >= -1e-9);
    Ok(Lemma1Report {
        lhs,
        rhs,
        entrywise_nonnegative,
    })
}

/// `(S(omega + delta), H(lambda_desc(delta) + lambda_asc(omega)))`.
///
/// Requires `omega + delta >= 0` up to `PSD_TOL`. Entries of the Lidskii vector
/// in `[-PSD_TOL, 0)` count as zero.
pub fn lemma2_bound(omega: &HermitianMatrix, delta: &HermitianMatrix) -> Result<(f64, f64)> {
    if omega.dim() != delta.dim() {
        return Err(Error::DimensionMismatch(omega.dim(), delta.dim()));
    }
    let lhs = entropy_of_positive(&(omega + delta))?;
    let x = lidskii_vector(delta, omega);
    if let Some(bad) = x.iter().find(|&&v| v < -PSD_TOL) {
        return Err(Error::NumericalFault(format!(
            "Lidskii vector entry {bad:.3e} negative although omega + delta >= 0"
        )));
    }
    let rhs = x.iter().map(|&v| eta_unchecked(v)).sum();
    Ok((lhs, rhs))
}

/// `[S(rho_minus + delta) - S(rho_minus)] - [S(omega + delta) - S(omega)]`.
///
/// Nonnegative for every state `omega` with `omega + delta >= 0`: the entropy
/// increment along `delta` is maximized at `omega = rho_minus`.
pub fn variational_gap(omega: &DensityMatrix, jh: &JordanHahn) -> Result<f64> {
    if omega.dim() != jh.delta.dim() {
        return Err(Error::DimensionMismatch(omega.dim(), jh.delta.dim()));
    }
    let at_omega = entropy_of_positive(&(omega.matrix() + &jh.delta))
        .map_err(|_| Error::Precondition("omega + delta is not positive".into()))?
        - von_neumann(omega);
    let at_minus = entropy_of_positive(&(jh.rho_minus.matrix() + &jh.delta))? - von_neumann(&jh.rho_minus);
    Ok(at_minus - at_omega)
}

/// Draws a state `omega` with `omega + delta >= 0`.
///
/// `omega = (1 - s) rho_minus + s nu` with `nu` Hilbert-Schmidt random. The
/// feasible `s` form an interval `[0, s_max]` (the minimum eigenvalue is concave
/// in `s`); `s_max` is found by bisection and `s` is drawn uniformly below it.
pub fn feasible_omega<R: Rng + ?Sized>(jh: &JordanHahn, rng: &mut R) -> Result<DensityMatrix> {
    let d = jh.delta.dim();
    let nu = random_mixed(d, d, rng)?;
    let mix = |s: f64| &jh.rho_minus.matrix().scale(1.0 - s) + &nu.matrix().scale(s);
    let feasible = |s: f64| (&mix(s) + &jh.delta).lambda_min() >= 0.0;

    let s_max = if feasible(1.0) {
        1.0
    } else {
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..32 {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    let s = rng.random::<f64>() * s_max;
    validate_state(&mix(s))
}

/// Gap between the simplex optimum `z = b` and a feasible `z` of
/// `z -> sum_j [eta(z_j - eps b_j) - eta(z_j)]`.
///
/// Requires `b`, `z` probability vectors with `z_j >= eps b_j`.
pub fn simplex_optimum_gap(z: &[f64], b: &[f64], eps: f64) -> Result<f64> {
    if z.len() != b.len() {
        return Err(Error::DimensionMismatch(z.len(), b.len()));
    }
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::Precondition(format!("eps must lie in [0, 1], got {eps}")));
    }
    let (sz, sb): (f64, f64) = (z.iter().sum(), b.iter().sum());
    if (sz - 1.0).abs() > TOTAL_TOL || (sb - 1.0).abs() > TOTAL_TOL || b.iter().any(|&v| v < 0.0) {
        return Err(Error::Precondition("z and b must be probability vectors".into()));
    }
    if let Some(j) = (0..z.len()).find(|&j| z[j] - eps * b[j] < -1e-12) {
        return Err(Error::Precondition(format!("z[{j}] < eps * b[{j}]")));
    }
    let objective = |w: &[f64]| -> f64 {
        w.iter()
            .zip(b)
            .map(|(&wj, &bj)| eta_unchecked((wj - eps * bj).max(0.0)) - eta_unchecked(wj))
            .sum()
    };
    Ok(objective(b) - objective(z))
}

/// Draws `z = eps b + (1 - eps) w` with `w` uniform on the simplex.
pub fn feasible_simplex_point<R: Rng + ?Sized>(b: &[f64], eps: f64, rng: &mut R) -> Vec<f64> {
    let w: Vec<f64> = (0..b.len()).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = w.iter().sum();
    b.iter()
        .zip(&w)
        .map(|(&bj, &wj)| eps * bj + (1.0 - eps) * wj / total)
        .collect()
}
