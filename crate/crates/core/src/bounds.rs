//! Continuity bounds as calculators returning the bounded quantity and the bound.
//!
//! Every calculator returns a [`BoundEvaluation`]. A bound whose hypotheses fail
//! is reported as not applicable (`rhs == None`) rather than as an error. For
//! identical inputs the relative- and conditional-entropy calculators return
//! `lhs = rhs = 0`; the two entropy-difference bounds that need the Jordan-Hahn
//! parts report [`Error::IdenticalStates`] instead.

use crate::decomposition::{jordan_hahn, JordanHahn};
use crate::entropies::{binary_entropy_unchecked, conditional_entropy, dmax, relative_entropy, von_neumann};
use crate::error::{domain, Error, Result};
use crate::linalg::{partial_trace, schatten_norm, schatten_of_spectrum, trace_distance, HermitianMatrix, Subsystem};
use crate::states::{BipartitePair, DensityMatrix, PSD_TOL};

/// Largest `Tr(rho sigma)` for which two states count as orthogonal.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEvaluation {
    pub name: &'static str,
    /// The bounded quantity. `NaN` when it is undefined and the bound is not applicable.
    pub lhs: f64,
    /// The bound, or `None` when the hypotheses fail.
    pub rhs: Option<f64>,
}

impl BoundEvaluation {
    fn new(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Self { name, lhs, rhs: Some(rhs) }
    }

    fn degenerate(name: &'static str) -> Self {
        Self::new(name, 0.0, 0.0)
    }

    fn not_applicable(name: &'static str, lhs: f64) -> Self {
        Self { name, lhs, rhs: None }
    }

    pub fn applicable(&self) -> bool {
        self.rhs.is_some()
    }

    /// `rhs - lhs` when applicable.
    pub fn slack(&self) -> Option<f64> {
        self.rhs.map(|r| r - self.lhs)
    }

    /// True when the bound is not applicable or its slack is at least `-tol`.
    pub fn holds(&self, tol: f64) -> bool {
        self.slack().is_none_or(|s| s >= -tol)
    }
}

fn d_finite(rho: &DensityMatrix, sigma: &HermitianMatrix, what: &str) -> Result<f64> {
    relative_entropy(rho, sigma)?.finite(what)
}

fn dmax_finite(rho: &DensityMatrix, sigma: &DensityMatrix, what: &str) -> Result<f64> {
    dmax(rho, sigma)?.finite(what)
}

/// `ln(e^m - 1)`.
fn log_expm1(m: f64) -> f64 {
    m.exp_m1().ln()
}

/// `None` for identical states, the decomposition otherwise.
fn decompose(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<Option<JordanHahn>> {
    match jordan_hahn(rho1, rho2) {
        Ok(jh) => Ok(Some(jh)),
        Err(Error::IdenticalStates(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `|S(rho1) - S(rho2)| <= eps ln(d - 1) + h(eps)`.
pub fn af_bound(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<BoundEvaluation> {
    const NAME: &str = "af";
    let eps = trace_distance(rho1, rho2)?;
    let d = rho1.dim();
    if d < 2 {
        return Err(domain("the dimension must be at least 2"));
    }
    if decompose(rho1, rho2)?.is_none() {
        return Ok(BoundEvaluation::degenerate(NAME));
    }
    let lhs = (von_neumann(rho1) - von_neumann(rho2)).abs();
    let rhs = eps * ((d - 1) as f64).ln() + binary_entropy_unchecked(eps);
    Ok(BoundEvaluation::new(NAME, lhs, rhs))
}

/// `S(rho1) - S(rho2) <= eps S(rho_plus) - eps S(rho_minus) + h(eps)`.
pub fn theorem1_bound(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<BoundEvaluation> {
    let jh = jordan_hahn(rho1, rho2)?;
    let lhs = von_neumann(rho1) - von_neumann(rho2);
    let rhs = jh.epsilon * (von_neumann(&jh.rho_plus) - von_neumann(&jh.rho_minus))
        + binary_entropy_unchecked(jh.epsilon);
    Ok(BoundEvaluation::new("entropy-difference", lhs, rhs))
}

/// `|S(rho1) - S(rho2) - eps (S(rho_plus) - S(rho_minus))| <= h(eps)`.
pub fn theorem1_symmetric_gap(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<BoundEvaluation> {
    let jh = jordan_hahn(rho1, rho2)?;
    let gap = von_neumann(rho1)
        - von_neumann(rho2)
        - jh.epsilon * (von_neumann(&jh.rho_plus) - von_neumann(&jh.rho_minus));
    Ok(BoundEvaluation::new(
        "entropy-difference-symmetric",
        gap.abs(),
        binary_entropy_unchecked(jh.epsilon),
    ))
}

/// `D(rho || omega) - D(sigma || omega) <= ln(1/t - 1)` for orthogonal `rho`, `sigma`
/// and `omega >= t rho`.
///
/// Not applicable when the hypotheses fail or either relative entropy is infinite.
pub fn aux_lemma_gap(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    omega: &DensityMatrix,
    t: f64,
) -> Result<BoundEvaluation> {
    const NAME: &str = "orthogonal-pair";
    if !(t > 0.0 && t < 1.0) {
        return Err(domain(format!("t must lie in (0, 1), got {t}")));
    }
    let overlap = rho.matrix().as_matrix().matmul(sigma.matrix().as_matrix()).trace().re;
    let remainder = omega.matrix() - &rho.matrix().scale(t);
    if overlap > ORTHOGONALITY_TOL || remainder.lambda_min() < -PSD_TOL {
        return Ok(BoundEvaluation::not_applicable(NAME, f64::NAN));
    }
    match (
        relative_entropy(rho, omega.matrix())?.value(),
        relative_entropy(sigma, omega.matrix())?.value(),
    ) {
        (Some(a), Some(b)) => Ok(BoundEvaluation::new(NAME, a - b, (1.0 / t - 1.0).ln())),
        _ => Ok(BoundEvaluation::not_applicable(NAME, f64::NAN)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalBound {
    pub evaluation: BoundEvaluation,
    /// `|| Tr_A rho_plus - Tr_A rho_minus ||_1`, zero for pairs with equal marginals.
    pub plus_minus_marginal_gap: f64,
}

/// `|S(A|B)_1 - S(A|B)_2| <= eps ln(d_A^2 - 1) + h(eps)` for pairs with equal B-marginals.
pub fn conditional_bound(pair: &BipartitePair) -> Result<ConditionalBound> {
    const NAME: &str = "conditional";
    let Some(jh) = decompose(&pair.rho1, &pair.rho2)? else {
        return Ok(ConditionalBound {
            evaluation: BoundEvaluation::degenerate(NAME),
            plus_minus_marginal_gap: 0.0,
        });
    };
    let lhs = (conditional_entropy(&pair.rho1, pair.dims)? - conditional_entropy(&pair.rho2, pair.dims)?).abs();
    let plus_b = partial_trace(jh.rho_plus.matrix(), pair.dims, Subsystem::B)?;
    let minus_b = partial_trace(jh.rho_minus.matrix(), pair.dims, Subsystem::B)?;
    let gap = schatten_of_spectrum(&(&plus_b - &minus_b).eigenvalues().values, 1.0);

    let evaluation = if pair.equal_marginals {
        let d_a = pair.dims.0 as f64;
        let rhs = jh.epsilon * (d_a * d_a - 1.0).ln() + binary_entropy_unchecked(jh.epsilon);
        BoundEvaluation::new(NAME, lhs, rhs)
    } else {
        BoundEvaluation::not_applicable(NAME, lhs)
    };
    Ok(ConditionalBound {
        evaluation,
        plus_minus_marginal_gap: gap,
    })
}

fn require_full_rank(sigma: &DensityMatrix) -> bool {
    sigma.is_full_rank()
}

/// `|D(rho1 || sigma) - D(rho2 || sigma)| <= eps ln(e^m - 1) + h(eps)` with
/// `m = max(D_max(rho_plus || sigma), D_max(rho_minus || sigma))`.
pub fn relent_bound_fixed_second(
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
    sigma: &DensityMatrix,
) -> Result<BoundEvaluation> {
    const NAME: &str = "relative-entropy";
    if !require_full_rank(sigma) {
        return Ok(BoundEvaluation::not_applicable(NAME, f64::NAN));
    }
    let Some(jh) = decompose(rho1, rho2)? else {
        return Ok(BoundEvaluation::degenerate(NAME));
    };
    let lhs = (d_finite(rho1, sigma.matrix(), "D(rho1||sigma)")?
        - d_finite(rho2, sigma.matrix(), "D(rho2||sigma)")?)
    .abs();
    let m = dmax_finite(&jh.rho_plus, sigma, "D_max(rho_plus||sigma)")?
        .max(dmax_finite(&jh.rho_minus, sigma, "D_max(rho_minus||sigma)")?);
    let rhs = jh.epsilon * log_expm1(m) + binary_entropy_unchecked(jh.epsilon);
    Ok(BoundEvaluation::new(NAME, lhs, rhs))
}

/// The two one-sided steps behind [`relent_bound_fixed_second`]:
///
/// * `D(rho1||sigma) - D(rho2||sigma) <= eps (D(rho_plus||sigma) - D(rho_minus||sigma)) + h(eps)`
/// * `D(rho_plus||sigma) - D(rho_minus||sigma) <= ln(e^{D_max(rho_plus||sigma)} - 1)`
pub fn relent_intermediate_bounds(
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
    sigma: &DensityMatrix,
) -> Result<[BoundEvaluation; 2]> {
    const FIRST: &str = "relative-entropy-split";
    const SECOND: &str = "relative-entropy-parts";
    if !require_full_rank(sigma) {
        return Ok([
            BoundEvaluation::not_applicable(FIRST, f64::NAN),
            BoundEvaluation::not_applicable(SECOND, f64::NAN),
        ]);
    }
    let jh = jordan_hahn(rho1, rho2)?;
    let s = sigma.matrix();
    let gap = d_finite(rho1, s, "D(rho1||sigma)")? - d_finite(rho2, s, "D(rho2||sigma)")?;
    let parts = d_finite(&jh.rho_plus, s, "D(rho_plus||sigma)")?
        - d_finite(&jh.rho_minus, s, "D(rho_minus||sigma)")?;
    let m = dmax_finite(&jh.rho_plus, sigma, "D_max(rho_plus||sigma)")?;
    Ok([
        BoundEvaluation::new(FIRST, gap, jh.epsilon * parts + binary_entropy_unchecked(jh.epsilon)),
        BoundEvaluation::new(SECOND, parts, log_expm1(m)),
    ])
}

/// `D(rho || sigma) <= eps ln(e^{D_max(omega_plus || sigma)} - 1) + h(eps)` with
/// `rho - sigma = eps (omega_plus - omega_minus)`.
pub fn relent_self_bound(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<BoundEvaluation> {
    const NAME: &str = "relative-entropy-self";
    if !require_full_rank(sigma) {
        return Ok(BoundEvaluation::not_applicable(NAME, f64::NAN));
    }
    let Some(jh) = decompose(rho, sigma)? else {
        return Ok(BoundEvaluation::degenerate(NAME));
    };
    let lhs = d_finite(rho, sigma.matrix(), "D(rho||sigma)")?;
    let m = dmax_finite(&jh.rho_plus, sigma, "D_max(omega_plus||sigma)")?;
    let rhs = jh.epsilon * log_expm1(m) + binary_entropy_unchecked(jh.epsilon);
    Ok(BoundEvaluation::new(NAME, lhs, rhs))
}

/// `|D(rho1 || sigma1) - D(rho2 || sigma2)|` against
/// `eps ln(e^m - 1) + ln(1 + delta / lambda) + h(eps)`, where
/// `m = max(D_max(rho_plus || sigma1), D_max(rho_minus || sigma2))`, `delta` is the
/// trace distance of the second arguments and `lambda` their smallest eigenvalue.
pub fn relent_bound_both(
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
    sigma1: &DensityMatrix,
    sigma2: &DensityMatrix,
) -> Result<BoundEvaluation> {
    const NAME: &str = "relative-entropy-both";
    if !require_full_rank(sigma1) || !require_full_rank(sigma2) {
        return Ok(BoundEvaluation::not_applicable(NAME, f64::NAN));
    }
    let lhs = (d_finite(rho1, sigma1.matrix(), "D(rho1||sigma1)")?
        - d_finite(rho2, sigma2.matrix(), "D(rho2||sigma2)")?)
    .abs();
    let delta = trace_distance(sigma1, sigma2)?;
    let lambda = sigma1.lambda_min().min(sigma2.lambda_min());
    let second = (delta / lambda).ln_1p();
    let first = match decompose(rho1, rho2)? {
        None => 0.0,
        Some(jh) => {
            let m = dmax_finite(&jh.rho_plus, sigma1, "D_max(rho_plus||sigma1)")?
                .max(dmax_finite(&jh.rho_minus, sigma2, "D_max(rho_minus||sigma2)")?);
            jh.epsilon * log_expm1(m) + binary_entropy_unchecked(jh.epsilon)
        }
    };
    Ok(BoundEvaluation::new(NAME, lhs, first + second))
}

/// `|D(rho1 || sigma) - D(rho2 || sigma)| <= max_i ln(1 + ||rho1 - rho2||_inf / (lambda_min(rho_i) lambda_min(sigma)))`,
/// applicable when `min_i lambda_min(rho_i) > ||rho1 - rho2||_inf`.
pub fn gour_bound(rho1: &DensityMatrix, rho2: &DensityMatrix, sigma: &DensityMatrix) -> Result<BoundEvaluation> {
    const NAME: &str = "gour";
    if !require_full_rank(sigma) {
        return Ok(BoundEvaluation::not_applicable(NAME, f64::NAN));
    }
    let lhs = (d_finite(rho1, sigma.matrix(), "D(rho1||sigma)")?
        - d_finite(rho2, sigma.matrix(), "D(rho2||sigma)")?)
    .abs();
    let op_norm = schatten_norm(&(rho1.matrix() - rho2.matrix()), f64::INFINITY)?;
    let lambdas = [rho1.lambda_min(), rho2.lambda_min()];
    let full_rank = rho1.is_full_rank() && rho2.is_full_rank();
    if !full_rank || lambdas[0].min(lambdas[1]) <= op_norm {
        return Ok(BoundEvaluation::not_applicable(NAME, lhs));
    }
    let ls = sigma.lambda_min();
    let rhs = lambdas
        .iter()
        .map(|&l| (op_norm / (l * ls)).ln_1p())
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(BoundEvaluation::new(NAME, lhs, rhs))
}

fn check_lambda(lambda_min_sigma: f64) -> Result<()> {
    if !(lambda_min_sigma > 0.0 && lambda_min_sigma <= 1.0) {
        return Err(domain(format!(
            "lambda_min(sigma) must lie in (0, 1], got {lambda_min_sigma}"
        )));
    }
    Ok(())
}

fn check_unit(name: &str, v: f64) -> Result<()> {
    if !(0.0..1.0).contains(&v) {
        return Err(domain(format!("{name} must lie in [0, 1), got {v}")));
    }
    Ok(())
}

/// `(1 + eps) h(eps / (1 + eps))`.
fn scaled_binary(eps: f64) -> f64 {
    (1.0 + eps) * binary_entropy_unchecked(eps / (1.0 + eps))
}

/// `eps ln(1/lambda) + (1 + eps) h(eps / (1 + eps))`.
pub fn bluhm_bound_fixed(eps: f64, lambda_min_sigma: f64) -> Result<f64> {
    check_unit("eps", eps)?;
    check_lambda(lambda_min_sigma)?;
    Ok(-eps * lambda_min_sigma.ln() + scaled_binary(eps))
}

/// The two-argument bound
/// `(eps + 3 delta / (1 - lambda/2)) ln(2/lambda) + (1 + eps) h(eps / (1 + eps))
///  + 2 ln(1 + (2 delta / lambda) / (1 - lambda/2 + delta))`.
pub fn bluhm_bound_both(eps: f64, delta: f64, lambda_min_sigma: f64) -> Result<f64> {
    check_unit("eps", eps)?;
    check_unit("delta", delta)?;
    check_lambda(lambda_min_sigma)?;
    let l = lambda_min_sigma;
    let half = 1.0 - l / 2.0;
    Ok((eps + 3.0 * delta / half) * (2.0 / l).ln()
        + scaled_binary(eps)
        + 2.0 * ((2.0 * delta / l) / (half + delta)).ln_1p())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tensor;
    use crate::states::{maximally_mixed, tightness_pair, validate_state};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    fn diag_state(v: &[f64]) -> DensityMatrix {
        validate_state(&HermitianMatrix::from_real_diagonal(v)).unwrap()
    }

    fn h(e: f64) -> f64 {
        -e * e.ln() - (1.0 - e) * (1.0 - e).ln()
    }

    fn bell() -> DensityMatrix {
        let s = Complex64::new(0.5f64.sqrt(), 0.0);
        let z = Complex64::new(0.0, 0.0);
        validate_state(&HermitianMatrix::projector(&[s, z, z, s]).unwrap()).unwrap()
    }

    #[test]
    fn af_examples() {
        let (r1, r2) = tightness_pair(3, 0.5, None).unwrap();
        let b = af_bound(&r1, &r2).unwrap();
        assert_abs_diff_eq!(b.slack().unwrap(), 0.0, epsilon = 1e-9);

        let b = af_bound(&diag_state(&[0.7, 0.3]), &diag_state(&[0.4, 0.6])).unwrap();
        assert_abs_diff_eq!(b.rhs.unwrap(), h(0.3), epsilon = 1e-14);

        let s = diag_state(&[0.7, 0.3]);
        let b = af_bound(&s, &s).unwrap();
        assert_eq!((b.lhs, b.rhs), (0.0, Some(0.0)));
    }

    #[test]
    fn theorem1_qutrit_example() {
        let r1 = diag_state(&[0.7, 0.3, 0.0]);
        let r2 = diag_state(&[0.4, 0.2, 0.4]);
        let b = theorem1_bound(&r1, &r2).unwrap();
        assert_abs_diff_eq!(b.lhs, -0.444056, epsilon = 1e-6);
        assert_abs_diff_eq!(b.rhs.unwrap(), 0.4 * h(0.75) + h(0.4), epsilon = 1e-12);
        assert_abs_diff_eq!(b.rhs.unwrap(), 0.897946, epsilon = 1e-6);

        let g = theorem1_symmetric_gap(&r1, &r2).unwrap();
        assert_abs_diff_eq!(g.lhs, 0.668990, epsilon = 1e-6);
        assert_abs_diff_eq!(g.rhs.unwrap(), 0.673012, epsilon = 1e-6);
        let swapped = theorem1_symmetric_gap(&r2, &r1).unwrap();
        assert_abs_diff_eq!(swapped.lhs, g.lhs, epsilon = 1e-12);
    }

    #[test]
    fn theorem1_tightness_and_qubits() {
        let (r1, r2) = tightness_pair(3, 0.5, None).unwrap();
        let b = theorem1_bound(&r1, &r2).unwrap();
        assert_abs_diff_eq!(b.lhs, 1.5 * 2f64.ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(b.slack().unwrap(), 0.0, epsilon = 1e-9);

        let b = theorem1_bound(&diag_state(&[0.9, 0.1]), &diag_state(&[0.35, 0.65])).unwrap();
        assert_abs_diff_eq!(b.rhs.unwrap(), h(0.55), epsilon = 1e-12);

        let s = diag_state(&[0.5, 0.5]);
        assert!(matches!(theorem1_bound(&s, &s), Err(Error::IdenticalStates(_))));
        assert!(matches!(theorem1_symmetric_gap(&s, &s), Err(Error::IdenticalStates(_))));
    }

    #[test]
    fn aux_lemma_examples() {
        let b = aux_lemma_gap(
            &diag_state(&[1.0, 0.0]),
            &diag_state(&[0.0, 1.0]),
            &diag_state(&[0.5, 0.5]),
            0.5,
        )
        .unwrap();
        assert_abs_diff_eq!(b.lhs, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(b.rhs.unwrap(), 0.0, epsilon = 1e-14);

        // omega = rho: sigma lies in the kernel of omega
        let b = aux_lemma_gap(
            &diag_state(&[1.0, 0.0]),
            &diag_state(&[0.0, 1.0]),
            &diag_state(&[1.0, 0.0]),
            0.99,
        )
        .unwrap();
        assert!(!b.applicable());

        // not orthogonal
        let b = aux_lemma_gap(
            &diag_state(&[0.5, 0.5]),
            &diag_state(&[0.0, 1.0]),
            &diag_state(&[0.5, 0.5]),
            0.5,
        )
        .unwrap();
        assert!(!b.applicable());
        assert!(aux_lemma_gap(&diag_state(&[1.0, 0.0]), &diag_state(&[0.0, 1.0]), &diag_state(&[0.5, 0.5]), 1.0).is_err());
    }

    #[test]
    fn conditional_bell_example() {
        let pair = BipartitePair::new(bell(), maximally_mixed(4).unwrap(), (2, 2)).unwrap();
        assert!(pair.equal_marginals);
        let c = conditional_bound(&pair).unwrap();
        let ln4 = 4f64.ln();
        assert_abs_diff_eq!(c.evaluation.lhs, ln4, epsilon = 1e-9);
        assert_abs_diff_eq!(c.evaluation.rhs.unwrap(), ln4, epsilon = 1e-9);
        assert!(c.plus_minus_marginal_gap < 1e-9);

        let same = BipartitePair::new(bell(), bell(), (2, 2)).unwrap();
        let c = conditional_bound(&same).unwrap();
        assert_eq!(c.evaluation.slack(), Some(0.0));

        let product = validate_state(&tensor(
            &HermitianMatrix::from_real_diagonal(&[1.0, 0.0]),
            &HermitianMatrix::from_real_diagonal(&[1.0, 0.0]),
        ))
        .unwrap();
        let c = conditional_bound(&BipartitePair::new(product, maximally_mixed(4).unwrap(), (2, 2)).unwrap())
            .unwrap();
        assert!(!c.evaluation.applicable());
    }

    #[test]
    fn relent_fixed_example() {
        let (r1, r2, s) = (diag_state(&[0.7, 0.3]), diag_state(&[0.5, 0.5]), diag_state(&[0.5, 0.5]));
        let b = relent_bound_fixed_second(&r1, &r2, &s).unwrap();
        let d = 0.7 * 1.4f64.ln() + 0.3 * 0.6f64.ln();
        assert_abs_diff_eq!(b.lhs, d, epsilon = 1e-12);
        assert_abs_diff_eq!(b.rhs.unwrap(), h(0.2), epsilon = 1e-12);
        let swapped = relent_bound_fixed_second(&r2, &r1, &s).unwrap();
        assert_abs_diff_eq!(swapped.lhs, b.lhs, epsilon = 1e-14);
        assert_abs_diff_eq!(swapped.rhs.unwrap(), b.rhs.unwrap(), epsilon = 1e-14);

        let same = relent_bound_fixed_second(&r1, &r1, &s).unwrap();
        assert_eq!(same.slack(), Some(0.0));
        assert!(!relent_bound_fixed_second(&r1, &r2, &diag_state(&[1.0, 0.0])).unwrap().applicable());

        let [split, parts] = relent_intermediate_bounds(&r1, &r2, &s).unwrap();
        assert!(split.holds(1e-12) && parts.holds(1e-12));
        // D(|0><0| || I/2) - D(|1><1| || I/2) = 0 <= ln(2 - 1)
        assert_abs_diff_eq!(parts.slack().unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn relent_self_examples() {
        let b = relent_self_bound(&diag_state(&[0.7, 0.3]), &diag_state(&[0.5, 0.5])).unwrap();
        assert_abs_diff_eq!(b.rhs.unwrap(), h(0.2), epsilon = 1e-12);
        assert_abs_diff_eq!(b.lhs, 0.082282878505051, epsilon = 1e-12);

        let pure = diag_state(&[0.0, 0.0, 1.0, 0.0]);
        let b = relent_self_bound(&pure, &maximally_mixed(4).unwrap()).unwrap();
        assert_abs_diff_eq!(b.lhs, 4f64.ln(), epsilon = 1e-12);
        assert!(b.holds(1e-12));

        let s = diag_state(&[0.5, 0.5]);
        assert_eq!(relent_self_bound(&s, &s).unwrap().slack(), Some(0.0));
    }

    #[test]
    fn relent_both_examples() {
        let (r1, r2) = (diag_state(&[0.7, 0.3]), diag_state(&[0.5, 0.5]));
        let s = diag_state(&[0.5, 0.5]);
        let both = relent_bound_both(&r1, &r2, &s, &s).unwrap();
        let fixed = relent_bound_fixed_second(&r1, &r2, &s).unwrap();
        assert_abs_diff_eq!(both.rhs.unwrap(), fixed.rhs.unwrap(), epsilon = 1e-14);

        let (s1, s2) = (diag_state(&[0.6, 0.4]), diag_state(&[0.45, 0.55]));
        let b = relent_bound_both(&r1, &r1, &s1, &s2).unwrap();
        assert_abs_diff_eq!(b.rhs.unwrap(), (0.15f64 / 0.4).ln_1p(), epsilon = 1e-12);
        assert!(b.holds(1e-12));
    }

    #[test]
    fn gour_examples() {
        let s = diag_state(&[0.5, 0.5]);
        let b = gour_bound(&diag_state(&[0.7, 0.3]), &diag_state(&[0.6, 0.4]), &s).unwrap();
        assert_abs_diff_eq!(b.rhs.unwrap(), (5.0f64 / 3.0).ln(), epsilon = 1e-12);
        assert!(b.holds(0.0));
        let b = gour_bound(&diag_state(&[0.7, 0.3]), &diag_state(&[1.0, 0.0]), &s).unwrap();
        assert!(!b.applicable());
    }

    #[test]
    fn bluhm_examples() {
        assert_abs_diff_eq!(bluhm_bound_fixed(0.2, 0.1).unwrap(), 1.001191, epsilon = 1e-6);
        assert_abs_diff_eq!(
            bluhm_bound_fixed(0.2, 0.1).unwrap(),
            0.2 * 10f64.ln() + 1.2 * h(1.0 / 6.0),
            epsilon = 1e-14
        );
        assert_eq!(bluhm_bound_fixed(0.0, 0.3).unwrap(), 0.0);
        assert!(bluhm_bound_fixed(1e-9, 0.3).unwrap() < 1e-7);
        assert_abs_diff_eq!(
            bluhm_bound_fixed(0.5, 0.5).unwrap(),
            0.5 * 2f64.ln() + 1.5 * h(1.0 / 3.0),
            epsilon = 1e-14
        );
        assert!(bluhm_bound_fixed(0.2, 0.0).is_err());
        assert!(bluhm_bound_fixed(0.2, -0.1).is_err());

        assert_abs_diff_eq!(
            bluhm_bound_both(0.2, 0.0, 0.1).unwrap(),
            0.2 * 20f64.ln() + 1.2 * h(1.0 / 6.0),
            epsilon = 1e-14
        );
        assert_eq!(bluhm_bound_both(0.0, 0.0, 0.1).unwrap(), 0.0);
        assert!(bluhm_bound_both(0.2, 0.1, 0.1).unwrap() > bluhm_bound_fixed(0.2, 0.1).unwrap());
        assert!(bluhm_bound_both(0.2, 1.5, 0.1).is_err());
    }
}
