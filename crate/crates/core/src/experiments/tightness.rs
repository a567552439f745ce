use crate::bounds::{af_bound, theorem1_bound};
use crate::error::Result;
use crate::states::tightness_pair;

pub const TIGHTNESS_EPSILONS: [f64; 4] = [0.1, 0.25, 0.5, 0.9];
pub const TIGHTNESS_DIMS: [usize; 3] = [2, 3, 8];

#[derive(Debug, Clone, PartialEq)]
pub struct TightnessRow {
    pub dim: usize,
    pub epsilon: f64,
    /// `S(rho1) - S(rho2)`.
    pub entropy_gap: f64,
    pub bound: f64,
    pub af: f64,
    pub slack: f64,
    pub af_slack: f64,
}

impl TightnessRow {
    pub fn saturated(&self, tol: f64) -> bool {
        self.slack.abs() <= tol && self.af_slack.abs() <= tol
    }
}

/// Both bounds on the saturating pair for every `(d, eps)` combination.
pub fn tightness_table(dims: &[usize], epsilons: &[f64]) -> Result<Vec<TightnessRow>> {
    let mut rows = Vec::with_capacity(dims.len() * epsilons.len());
    for &dim in dims {
        for &epsilon in epsilons {
            let (rho1, rho2) = tightness_pair(dim, epsilon, None)?;
            let t = theorem1_bound(&rho1, &rho2)?;
            let af = af_bound(&rho1, &rho2)?;
            let (bound, af_rhs) = (t.rhs.unwrap_or(f64::NAN), af.rhs.unwrap_or(f64::NAN));
            rows.push(TightnessRow {
                dim,
                epsilon,
                entropy_gap: t.lhs,
                bound,
                af: af_rhs,
                slack: bound - t.lhs,
                af_slack: af_rhs - af.lhs,
            });
        }
    }
    Ok(rows)
}
