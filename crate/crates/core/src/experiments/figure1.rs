use crate::bounds::{bluhm_bound_fixed, gour_bound, relent_bound_fixed_second};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::trace_distance;
use crate::states::{random_equal_marginal_pair, random_mixed, random_pure, DensityMatrix};

use super::{split_dimension, trial_rng, Ensemble, ExperimentConfig};

const LABEL: &str = "figure1";

/// One row of the bound comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub trial_index: usize,
    pub dim: usize,
    pub epsilon: f64,
    /// Trace distance of the second arguments; empty for single-`sigma` runs.
    pub delta: Option<f64>,
    pub lhs_actual: f64,
    pub bound_new: f64,
    pub bound_gour: Option<f64>,
    pub gour_applicable: bool,
    pub bound_bluhm: f64,
    pub slack_new: f64,
    pub lambda_min_sigma: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialFault {
    pub trial_index: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure1Summary {
    pub trials: usize,
    pub faults: usize,
    pub fraction_new_le_bluhm: f64,
    pub gour_applicable: usize,
    /// `None` when the Gour bound applied to no trial.
    pub fraction_new_le_gour: Option<f64>,
    pub min_slack: f64,
    /// Trials with `slack_new < -tolerance`.
    pub violations: usize,
}

impl Figure1Summary {
    /// Recomputes the summary from records alone.
    pub fn from_records(records: &[TrialRecord], faults: usize, tolerance: f64) -> Self {
        let n = records.len();
        let le_bluhm = records.iter().filter(|r| r.bound_new <= r.bound_bluhm).count();
        let gour: Vec<f64> = records
            .iter()
            .filter(|r| r.gour_applicable)
            .filter_map(|r| r.bound_gour.map(|g| g - r.bound_new))
            .collect();
        let le_gour = gour.iter().filter(|&&g| g >= 0.0).count();
        Self {
            trials: n,
            faults,
            fraction_new_le_bluhm: if n == 0 { 1.0 } else { le_bluhm as f64 / n as f64 },
            gour_applicable: gour.len(),
            fraction_new_le_gour: (!gour.is_empty()).then(|| le_gour as f64 / gour.len() as f64),
            min_slack: records.iter().map(|r| r.slack_new).fold(f64::INFINITY, f64::min),
            violations: records.iter().filter(|r| r.slack_new < -tolerance).count(),
        }
    }

    /// No violations, no faults, and the new bound never above a competitor.
    pub fn all_pass(&self) -> bool {
        self.faults == 0
            && self.violations == 0
            && self.fraction_new_le_bluhm == 1.0
            && self.fraction_new_le_gour.is_none_or(|f| f == 1.0)
    }
}

#[derive(Debug, Clone)]
pub struct Figure1Run {
    pub records: Vec<TrialRecord>,
    pub faults: Vec<TrialFault>,
    pub summary: Figure1Summary,
}

fn sample_pair(ensemble: Ensemble, d: usize, rng: &mut rand_chacha::ChaCha20Rng) -> Result<(DensityMatrix, DensityMatrix)> {
    match ensemble {
        Ensemble::HilbertSchmidt => Ok((random_mixed(d, d, rng)?, random_mixed(d, d, rng)?)),
        Ensemble::Pure => Ok((random_pure(d, rng)?, random_pure(d, rng)?)),
        Ensemble::EqualMarginal => {
            let (d_a, d_b) = split_dimension(d)?;
            let pair = random_equal_marginal_pair(d_a, d_b, 0.5, rng)?;
            Ok((pair.rho1, pair.rho2))
        }
    }
}

/// Evaluates one trial: `sigma` is Hilbert-Schmidt random, the pair comes from
/// the configured ensemble.
pub fn figure1_trial(ensemble: Ensemble, d: usize, seed: u64, trial_index: usize) -> Result<TrialRecord> {
    let mut rng = trial_rng(seed, LABEL, d, trial_index);
    let (rho1, rho2) = sample_pair(ensemble, d, &mut rng)?;
    let sigma = random_mixed(d, d, &mut rng)?;
    if !sigma.is_full_rank() {
        return Err(Error::NumericalFault("sampled sigma is singular".into()));
    }

    let new = relent_bound_fixed_second(&rho1, &rho2, &sigma)?;
    let gour = gour_bound(&rho1, &rho2, &sigma)?;
    let epsilon = trace_distance(&rho1, &rho2)?;
    let lambda_min_sigma = sigma.lambda_min();
    let bound_new = new
        .rhs
        .ok_or_else(|| Error::NumericalFault("new bound not applicable to a full-rank sigma".into()))?;
    let bound_bluhm = bluhm_bound_fixed(epsilon, lambda_min_sigma)?;
    if !bound_new.is_finite() || !bound_bluhm.is_finite() || gour.rhs.is_some_and(|g| !g.is_finite()) {
        return Err(Error::NumericalFault(format!("non-finite bound in trial {trial_index}")));
    }

    Ok(TrialRecord {
        trial_index,
        dim: d,
        epsilon,
        delta: None,
        lhs_actual: new.lhs,
        bound_new,
        bound_gour: gour.rhs,
        gour_applicable: gour.applicable(),
        bound_bluhm,
        slack_new: bound_new - new.lhs,
        lambda_min_sigma,
    })
}

/// Runs `cfg.trials` independent trials and summarizes them.
///
/// Trials that hit a numerical fault are counted and left out of the records.
pub fn run_figure1(cfg: &ExperimentConfig, exec: Execution) -> Result<Figure1Run> {
    cfg.validate()?;
    let d = cfg.single_dim();
    if cfg.ensemble == Ensemble::EqualMarginal {
        split_dimension(d)?;
    }
    let outcomes = exec.map(cfg.trials, |i| figure1_trial(cfg.ensemble, d, cfg.seed, i));

    let mut records = Vec::with_capacity(cfg.trials);
    let mut faults = Vec::new();
    for (trial_index, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(r) => records.push(r),
            Err(e) => faults.push(TrialFault {
                trial_index,
                message: e.to_string(),
            }),
        }
    }
    let summary = Figure1Summary::from_records(&records, faults.len(), cfg.tolerance);
    Ok(Figure1Run {
        records,
        faults,
        summary,
    })
}
