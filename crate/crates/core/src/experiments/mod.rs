//! Seeded Monte-Carlo experiments: the bound comparison, randomized property
//! suites, the saturation table and CSV persistence.
//!
//! Each trial draws from its own ChaCha20 stream keyed by the master seed, an
//! experiment label, the dimension and the trial index, so results do not
//! depend on how trials are scheduled.

mod csv_io;
mod figure1;
mod suite;
mod tightness;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};

pub use csv_io::{emit_csv, parse_csv, read_csv, write_csv, CSV_HEADER};
pub use figure1::{figure1_trial, run_figure1, Figure1Run, Figure1Summary, TrialFault, TrialRecord};
pub use suite::{run_property_suite, CheckStats, Counterexample, NamedMatrix, Suite, SuiteReport, SUITE_DIMS};
pub use tightness::{tightness_table, TightnessRow, TIGHTNESS_DIMS, TIGHTNESS_EPSILONS};

/// Dimension used when none is given.
pub const DEFAULT_DIM: usize = 15;

/// State ensemble for randomized experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ensemble {
    #[default]
    HilbertSchmidt,
    Pure,
    EqualMarginal,
}

impl Ensemble {
    pub const NAMES: [&'static str; 3] = ["hilbert-schmidt", "pure", "equal-marginal"];

    pub fn name(self) -> &'static str {
        match self {
            Self::HilbertSchmidt => "hilbert-schmidt",
            Self::Pure => "pure",
            Self::EqualMarginal => "equal-marginal",
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ensemble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hilbert-schmidt" => Ok(Self::HilbertSchmidt),
            "pure" => Ok(Self::Pure),
            "equal-marginal" => Ok(Self::EqualMarginal),
            other => Err(Error::Usage(format!(
                "unknown ensemble '{other}' (expected one of {})",
                Self::NAMES.join(", ")
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// `None` means the default: [`DEFAULT_DIM`] for single-dimension runs,
    /// [`SUITE_DIMS`] for property suites.
    pub dim: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub ensemble: Ensemble,
    pub output_path: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            dim: None,
            trials: 1000,
            seed: 42,
            tolerance: 1e-9,
            ensemble: Ensemble::HilbertSchmidt,
            output_path: None,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Usage("trials must be at least 1".into()));
        }
        if let Some(d) = self.dim {
            if d < 2 {
                return Err(Error::Usage(format!("dim must be at least 2, got {d}")));
            }
        }
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(Error::Usage(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    pub fn single_dim(&self) -> usize {
        self.dim.unwrap_or(DEFAULT_DIM)
    }
}

/// 64-bit FNV-1a, used to turn experiment labels into seed material.
fn label_hash(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// The generator for one trial.
pub fn trial_rng(seed: u64, label: &str, dim: usize, trial: usize) -> ChaCha20Rng {
    let key = seed ^ label_hash(label).rotate_left(17) ^ (dim as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut rng = ChaCha20Rng::seed_from_u64(key);
    rng.set_stream(trial as u64);
    rng
}

/// `(p, d / p)` with `p` the smallest prime factor of `d`.
pub fn split_dimension(d: usize) -> Result<(usize, usize)> {
    let p = (2..=d).find(|&p| d.is_multiple_of(p)).unwrap_or(d);
    if p == d {
        return Err(Error::Usage(format!(
            "dimension {d} is prime and cannot be split into two subsystems"
        )));
    }
    Ok((p, d / p))
}
