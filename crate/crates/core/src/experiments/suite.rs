use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::bounds::{
    af_bound, aux_lemma_gap, bluhm_bound_fixed, conditional_bound, gour_bound, relent_bound_both,
    relent_bound_fixed_second, relent_intermediate_bounds, relent_self_bound, theorem1_bound,
    theorem1_symmetric_gap,
};
use crate::decomposition::{delta_spectrum_split, jordan_hahn};
use crate::entropies::{
    binary_entropy_unchecked, conditional_entropy, dmax, relative_entropy, shannon, von_neumann,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{partial_trace, pinch, tensor, HermitianMatrix, Subsystem};
use crate::majorization::{
    feasible_omega, feasible_simplex_point, lemma1_bound, lemma2_bound, lidskii_check, majorizes,
    simplex_optimum_gap, variational_gap,
};
use crate::states::{
    random_equal_marginal_pair, random_hermitian, random_mixed, random_pure, validate_state,
    DensityMatrix,
};

use super::{split_dimension, trial_rng, Ensemble, ExperimentConfig};

pub const SUITE_DIMS: [usize; 5] = [2, 3, 5, 8, 15];
const CONDITIONAL_DIMS: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 3)];
const VARIATIONAL_DIMS: [usize; 3] = [2, 3, 4];
/// Feasible points drawn per variational / simplex instance.
const SAMPLES_PER_INSTANCE: usize = 1000;
/// One trial in this many also checks the lemmas at a bisection-sampled feasible point.
const FEASIBLE_STRIDE: usize = 4;
const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lidskii,
    Theorem1,
    Conditional,
    Relent,
    Dmax,
    ProofLemmas,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "lidskii",
        "theorem1",
        "conditional",
        "relent",
        "dmax",
        "proof-lemmas",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Lidskii => "lidskii",
            Self::Theorem1 => "theorem1",
            Self::Conditional => "conditional",
            Self::Relent => "relent",
            Self::Dmax => "dmax",
            Self::ProofLemmas => "proof-lemmas",
            Self::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Self::All => vec![
                Self::Lidskii,
                Self::Theorem1,
                Self::Conditional,
                Self::Relent,
                Self::Dmax,
                Self::ProofLemmas,
            ],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lidskii" => Ok(Self::Lidskii),
            "theorem1" => Ok(Self::Theorem1),
            "conditional" => Ok(Self::Conditional),
            "relent" => Ok(Self::Relent),
            "dmax" => Ok(Self::Dmax),
            "proof-lemmas" => Ok(Self::ProofLemmas),
            "all" => Ok(Self::All),
            other => Err(Error::Usage(format!(
                "unknown suite '{other}' (expected one of {})",
                Self::NAMES.join(", ")
            ))),
        }
    }
}

/// A matrix in row-major real/imaginary parts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedMatrix {
    pub name: String,
    pub dim: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl NamedMatrix {
    fn new(name: &str, h: &HermitianMatrix) -> Self {
        let data = h.as_matrix().as_slice();
        Self {
            name: name.to_owned(),
            dim: h.dim(),
            re: data.iter().map(|z| z.re).collect(),
            im: data.iter().map(|z| z.im).collect(),
        }
    }
}

/// Inputs of a failing trial, enough to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub suite: &'static str,
    pub check: &'static str,
    pub dims: String,
    pub trial_index: usize,
    pub margin: f64,
    pub matrices: Vec<NamedMatrix>,
    pub scalars: Vec<(&'static str, f64)>,
}

/// Outcome of one check over one dimension group.
///
/// A margin `>= -tolerance` passes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckStats {
    pub suite: &'static str,
    pub check: &'static str,
    pub dims: String,
    pub evaluated: usize,
    pub failures: usize,
    pub worst_margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub tolerance: f64,
    pub checks: Vec<CheckStats>,
    pub faults: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.faults.is_empty() && self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn total_failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum::<usize>() + self.faults.len()
    }

    /// All groups of the named check.
    pub fn check<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a CheckStats> + 'a {
        self.checks.iter().filter(move |c| c.check == name)
    }

    /// Smallest margin of the named check over all groups.
    pub fn worst(&self, name: &str) -> Option<f64> {
        self.check(name).map(|c| c.worst_margin).reduce(f64::min)
    }

    /// Number of evaluations of the named check over all groups.
    pub fn evaluated(&self, name: &str) -> usize {
        self.check(name).map(|c| c.evaluated).sum()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {:<13} {:<28} {:<8} n={:<7} failures={:<5} worst={:.3e}",
                if c.failures == 0 { "PASS" } else { "FAIL" },
                c.suite,
                c.check,
                c.dims,
                c.evaluated,
                c.failures,
                c.worst_margin
            )?;
        }
        for fault in &self.faults {
            writeln!(f, "FAULT {fault}")?;
        }
        write!(
            f,
            "{} suite {}: {} checks, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checks.len(),
            self.total_failures()
        )
    }
}

/// Margins and witnesses of one randomized trial.
#[derive(Default)]
struct Trial {
    margins: Vec<(&'static str, f64)>,
    witnesses: Vec<NamedMatrix>,
    scalars: Vec<(&'static str, f64)>,
}

impl Trial {
    fn check(&mut self, name: &'static str, margin: f64) {
        self.margins.push((name, margin));
    }

    /// A pass/fail check with no natural margin.
    fn require(&mut self, name: &'static str, ok: bool) {
        self.check(name, if ok { 0.0 } else { f64::NEG_INFINITY });
    }

    fn witness(&mut self, name: &str, h: &HermitianMatrix) {
        self.witnesses.push(NamedMatrix::new(name, h));
    }

    fn scalar(&mut self, name: &'static str, v: f64) {
        self.scalars.push((name, v));
    }

    /// Drops the witnesses unless some margin fails.
    fn compact(mut self, tol: f64) -> Self {
        if self.margins.iter().all(|&(_, m)| m >= -tol) {
            self.witnesses = Vec::new();
        }
        self
    }
}

fn fails(margin: f64, tol: f64) -> bool {
    !(margin >= -tol)
}

struct Runner<'a> {
    cfg: &'a ExperimentConfig,
    exec: Execution,
    suite: &'static str,
    checks: Vec<CheckStats>,
    faults: Vec<String>,
    counterexamples: Vec<Counterexample>,
}

impl<'a> Runner<'a> {
    /// Runs `n` trials of `body` for one dimension group and folds the margins in.
    fn group<F>(&mut self, dims: String, key: usize, n: usize, body: F)
    where
        F: Fn(&mut ChaCha20Rng) -> Result<Trial> + Sync + Send,
    {
        let (seed, tol, suite) = (self.cfg.seed, self.cfg.tolerance, self.suite);
        let outcomes = self.exec.map(n, |i| {
            let mut rng = trial_rng(seed, suite, key, i);
            body(&mut rng).map(|t| t.compact(tol))
        });

        let start = self.checks.len();
        for (i, outcome) in outcomes.into_iter().enumerate() {
            let trial = match outcome {
                Ok(t) => t,
                Err(e) => {
                    self.faults.push(format!("{suite} {dims} trial {i}: {e}"));
                    continue;
                }
            };
            for &(check, margin) in &trial.margins {
                let stats = match self.checks[start..].iter_mut().find(|c| c.check == check) {
                    Some(s) => s,
                    None => {
                        self.checks.push(CheckStats {
                            suite,
                            check,
                            dims: dims.clone(),
                            evaluated: 0,
                            failures: 0,
                            worst_margin: f64::INFINITY,
                        });
                        self.checks.last_mut().expect("just pushed")
                    }
                };
                stats.evaluated += 1;
                if margin < stats.worst_margin || margin.is_nan() {
                    stats.worst_margin = margin;
                }
                if fails(margin, tol) {
                    stats.failures += 1;
                    let logged = self
                        .counterexamples
                        .iter()
                        .filter(|c| c.check == check && c.dims == dims)
                        .count();
                    if logged < MAX_COUNTEREXAMPLES {
                        self.counterexamples.push(Counterexample {
                            suite,
                            check,
                            dims: dims.clone(),
                            trial_index: i,
                            margin,
                            matrices: trial.witnesses.clone(),
                            scalars: trial.scalars.clone(),
                        });
                    }
                }
            }
        }
    }

    fn dims(&self) -> Vec<usize> {
        self.cfg.dim.map_or_else(|| SUITE_DIMS.to_vec(), |d| vec![d])
    }
}

/// Rank drawn uniformly from `1..=d`.
fn mixed_rank_state(d: usize, rng: &mut ChaCha20Rng) -> Result<DensityMatrix> {
    let rank = rng.random_range(1..=d);
    random_mixed(d, rank, rng)
}

fn sample_state(ensemble: Ensemble, d: usize, rng: &mut ChaCha20Rng) -> Result<DensityMatrix> {
    match ensemble {
        Ensemble::Pure => random_pure(d, rng),
        _ => mixed_rank_state(d, rng),
    }
}

fn d_finite(rho: &DensityMatrix, sigma: &HermitianMatrix) -> Result<f64> {
    relative_entropy(rho, sigma)?.finite("relative entropy")
}

fn lidskii(r: &mut Runner<'_>) {
    for d in r.dims() {
        r.group(format!("d={d}"), d, r.cfg.trials, |rng| {
            let mut t = Trial::default();
            let a = random_hermitian(d, rng);
            let b = random_hermitian(d, rng);
            t.witness("A", &a);
            t.witness("B", &b);
            t.check("lidskii", lidskii_check(&a, &b)?.worst_partial_sum_gap);

            // Schur-Horn: the diagonal of a state is majorized by its spectrum.
            let rho = mixed_rank_state(d, rng)?;
            t.witness("rho", rho.matrix());
            let y = rho.spectrum().values.clone();
            let x: Vec<f64> = (0..d).map(|i| rho.matrix().get(i, i).re).collect();
            let rep = majorizes(&y, &x)?;
            t.check("schur-horn", rep.worst_partial_sum_gap);
            if rep.holds {
                t.check("schur-concavity", shannon(&x)? - shannon(&y)?);
            }
            Ok(t)
        });
    }
}

fn theorem1(r: &mut Runner<'_>) {
    let ensemble = r.cfg.ensemble;
    for d in r.dims() {
        r.group(format!("d={d}"), d, r.cfg.trials, |rng| {
            let mut t = Trial::default();
            let rho1 = sample_state(ensemble, d, rng)?;
            let rho2 = sample_state(ensemble, d, rng)?;
            t.witness("rho1", rho1.matrix());
            t.witness("rho2", rho2.matrix());

            let b = theorem1_bound(&rho1, &rho2)?;
            let rhs = b.rhs.unwrap_or(f64::NAN);
            t.check("entropy-difference", rhs - b.lhs);
            let g = theorem1_symmetric_gap(&rho1, &rho2)?;
            t.check("symmetric-gap", g.slack().unwrap_or(f64::NAN));
            t.check("af", af_bound(&rho1, &rho2)?.slack().unwrap_or(f64::NAN));

            let jh = jordan_hahn(&rho1, &rho2)?;
            let h = binary_entropy_unchecked(jh.epsilon);
            let plus_only = jh.epsilon * von_neumann(&jh.rho_plus) + h;
            let af_rhs = jh.epsilon * ((d - 1) as f64).ln() + h;
            t.scalar("epsilon", jh.epsilon);
            t.check("chain-drop-minus", plus_only - rhs);
            t.check("chain-rank", af_rhs - plus_only);
            Ok(t)
        });
    }
}

fn conditional(r: &mut Runner<'_>) -> Result<()> {
    let pairs = match r.cfg.dim {
        Some(d) => vec![split_dimension(d)?],
        None => CONDITIONAL_DIMS.to_vec(),
    };
    for (d_a, d_b) in pairs {
        r.group(format!("{d_a}x{d_b}"), d_a * d_b, r.cfg.trials, |rng| {
            let mut t = Trial::default();
            let u = 1.0 - rng.random::<f64>();
            let pair = random_equal_marginal_pair(d_a, d_b, u, rng)?;
            t.witness("rho1", pair.rho1.matrix());
            t.witness("rho2", pair.rho2.matrix());
            t.scalar("strength", u);

            let c = conditional_bound(&pair)?;
            t.check("conditional", c.evaluation.slack().unwrap_or(f64::NAN));
            t.check("plus-minus-marginals", -c.plus_minus_marginal_gap);

            let jh = jordan_hahn(&pair.rho1, &pair.rho2)?;
            let minus_b = partial_trace(jh.rho_minus.matrix(), (d_a, d_b), Subsystem::B)?;
            let tau_a = HermitianMatrix::identity(d_a).scale(1.0 / d_a as f64);
            let omega = validate_state(&tensor(&tau_a, &minus_b))?;
            let t_weight = 1.0 / (d_a * d_a) as f64;
            let aux = aux_lemma_gap(&jh.rho_minus, &jh.rho_plus, &omega, t_weight)?;
            t.check("orthogonal-pair", aux.slack().unwrap_or(f64::NAN));
            let dm = dmax(&jh.rho_minus, &omega)?.finite("D_max(rho_minus||omega)")?;
            t.check("dmax-minus", ((d_a * d_a) as f64).ln() - dm);
            Ok(t)
        });
    }
    Ok(())
}

/// Two complementary projectors from the eigenbasis of a random Hermitian matrix.
fn random_pinching(d: usize, rng: &mut ChaCha20Rng) -> Result<Vec<HermitianMatrix>> {
    let es = random_hermitian(d, rng).eigensystem();
    let k = rng.random_range(1..d);
    let mut blocks = vec![HermitianMatrix::zeros(d), HermitianMatrix::zeros(d)];
    for j in 0..d {
        let p = HermitianMatrix::projector(&es.vectors.column(j))?;
        let b = usize::from(j >= k);
        blocks[b] = &blocks[b] + &p;
    }
    Ok(blocks)
}

fn relent(r: &mut Runner<'_>) {
    for d in r.dims() {
        r.group(format!("d={d}"), d, r.cfg.trials, |rng| {
            let mut t = Trial::default();
            let rho1 = random_mixed(d, d, rng)?;
            let rho2 = random_mixed(d, d, rng)?;
            let sigma = random_mixed(d, d, rng)?;
            let sigma2 = random_mixed(d, d, rng)?;
            for (name, m) in [("rho1", &rho1), ("rho2", &rho2), ("sigma", &sigma), ("sigma2", &sigma2)] {
                t.witness(name, m.matrix());
            }

            let new = relent_bound_fixed_second(&rho1, &rho2, &sigma)?;
            let new_rhs = new.rhs.unwrap_or(f64::NAN);
            t.check("relent-fixed", new_rhs - new.lhs);
            let [split, parts] = relent_intermediate_bounds(&rho1, &rho2, &sigma)?;
            t.check("relent-split", split.slack().unwrap_or(f64::NAN));
            t.check("relent-parts", parts.slack().unwrap_or(f64::NAN));
            t.check("relent-self", relent_self_bound(&rho1, &sigma)?.slack().unwrap_or(f64::NAN));
            let both = relent_bound_both(&rho1, &rho2, &sigma, &sigma2)?;
            t.check("relent-both", both.slack().unwrap_or(f64::NAN));

            let eps = crate::linalg::trace_distance(&rho1, &rho2)?;
            t.scalar("epsilon", eps);
            t.check("bluhm-dominance", bluhm_bound_fixed(eps, sigma.lambda_min())? - new_rhs);
            let gour = gour_bound(&rho1, &rho2, &sigma)?;
            if let Some(g) = gour.rhs {
                t.check("gour", g - gour.lhs);
                t.check("gour-dominance", g - new_rhs);
            }

            // identities
            let base = d_finite(&rho1, sigma.matrix())?;
            let mut worst = 0.0f64;
            for c in [0.5, 2.0, d as f64] {
                let scaled = d_finite(&rho1, &sigma.matrix().scale(c))?;
                worst = worst.max((scaled - (base - c.ln())).abs());
            }
            t.check("scaling", -worst);

            let rho_ab = random_mixed(2 * d, 2 * d, rng)?;
            t.witness("rho_ab", rho_ab.matrix());
            let rho_b = partial_trace(rho_ab.matrix(), (2, d), Subsystem::B)?;
            let one_b = tensor(&HermitianMatrix::identity(2), &rho_b);
            let cond = conditional_entropy(&rho_ab, (2, d))?;
            t.check("condrel", -(cond + d_finite(&rho_ab, &one_b)?).abs());

            t.check("nonnegativity", d_finite(&rho1, rho2.matrix())?);

            let blocks = random_pinching(d, rng)?;
            let p1 = validate_state(&pinch(rho1.matrix(), &blocks)?)?;
            let p2 = pinch(rho2.matrix(), &blocks)?;
            t.check(
                "data-processing",
                d_finite(&rho1, rho2.matrix())? - d_finite(&p1, &p2)?,
            );
            Ok(t)
        });
    }
}

fn dmax_suite(r: &mut Runner<'_>) {
    for d in r.dims() {
        r.group(format!("d={d}"), d, r.cfg.trials, |rng| {
            let mut t = Trial::default();
            let rho = mixed_rank_state(d, rng)?;
            let sigma = random_mixed(d, d, rng)?;
            t.witness("rho", rho.matrix());
            t.witness("sigma", sigma.matrix());
            let m = dmax(&rho, &sigma)?.finite("D_max")?;
            t.scalar("dmax", m);
            // rho <= e^m sigma, i.e. sigma - e^{-m} rho >= 0
            let gap = |l: f64| (sigma.matrix() - &rho.matrix().scale((-l).exp())).lambda_min();
            t.check("dmax-dominates", gap(m));
            t.require("dmax-minimal", gap(m - 1e-6) < 0.0);
            t.check("dmax-above-relent", m - d_finite(&rho, sigma.matrix())?);
            Ok(t)
        });
    }
}

fn proof_lemmas(r: &mut Runner<'_>) {
    let trials = r.cfg.trials;
    for d in r.dims() {
        r.group(format!("d={d}"), d, trials, |rng| {
            let mut t = Trial::default();
            let omega = random_hermitian(d, rng);
            let delta = random_hermitian(d, rng);
            t.witness("omega", &omega);
            t.witness("delta", &delta);
            let l1 = lemma1_bound(&omega, &delta)?;
            t.check("lemma1", l1.rhs - l1.lhs);
            if let Some(ok) = l1.entrywise_nonnegative {
                t.require("lemma1-entrywise", ok);
            }

            let rho1 = mixed_rank_state(d, rng)?;
            let rho2 = mixed_rank_state(d, rng)?;
            t.witness("rho1", rho1.matrix());
            t.witness("rho2", rho2.matrix());
            let jh = jordan_hahn(&rho1, &rho2)?;
            let mut feasible = vec![rho2.clone(), jh.rho_minus.clone()];
            if rng.random_range(0..FEASIBLE_STRIDE) == 0 {
                feasible.push(feasible_omega(&jh, rng)?);
            }
            for w in &feasible {
                let l1 = lemma1_bound(w.matrix(), &jh.delta)?;
                t.check("lemma1", l1.rhs - l1.lhs);
                t.require("lemma1-entrywise", l1.entrywise_nonnegative == Some(true));
                let (lhs, rhs) = lemma2_bound(w.matrix(), &jh.delta)?;
                t.check("lemma2", rhs - lhs);
            }

            // entropy identities
            let h = binary_entropy_unchecked(jh.epsilon);
            let mix = validate_state(
                &(&jh.rho_plus.matrix().scale(jh.epsilon) + &jh.rho_minus.matrix().scale(1.0 - jh.epsilon)),
            )?;
            let split = jh.epsilon * von_neumann(&jh.rho_plus)
                + (1.0 - jh.epsilon) * von_neumann(&jh.rho_minus)
                + h;
            t.check("orthogonal-mixture", -(von_neumann(&mix) - split).abs());

            let p = rng.random::<f64>();
            let mix = validate_state(&(&rho1.matrix().scale(p) + &rho2.matrix().scale(1.0 - p)))?;
            let average = p * von_neumann(&rho1) + (1.0 - p) * von_neumann(&rho2);
            t.scalar("p", p);
            t.check("almost-convexity", average + binary_entropy_unchecked(p) - von_neumann(&mix));
            t.check("concavity", von_neumann(&mix) - average);
            Ok(t)
        });
    }

    let var_dims = r.cfg.dim.map_or_else(|| VARIATIONAL_DIMS.to_vec(), |d| vec![d]);
    let instances = trials.div_ceil(SAMPLES_PER_INSTANCE);
    for d in var_dims {
        r.group(format!("d={d}"), 1000 + d, instances, |rng| {
            let mut t = Trial::default();
            let rho1 = mixed_rank_state(d, rng)?;
            let rho2 = mixed_rank_state(d, rng)?;
            t.witness("rho1", rho1.matrix());
            t.witness("rho2", rho2.matrix());
            let jh = jordan_hahn(&rho1, &rho2)?;
            t.check("variational", variational_gap(&rho2, &jh)?);
            for _ in 0..SAMPLES_PER_INSTANCE {
                let omega = feasible_omega(&jh, rng)?;
                t.check("variational", variational_gap(&omega, &jh)?);
            }
            let (_, b) = delta_spectrum_split(&jh);
            for _ in 0..SAMPLES_PER_INSTANCE {
                let z = feasible_simplex_point(&b, jh.epsilon, rng);
                t.check("simplex-optimum", simplex_optimum_gap(&z, &b, jh.epsilon)?);
            }
            Ok(t)
        });
    }
}

/// Runs the named invariant family and, when `cfg.output_path` is set, writes
/// the report with any counterexamples there as JSON.
pub fn run_property_suite(cfg: &ExperimentConfig, suite: Suite, exec: Execution) -> Result<SuiteReport> {
    cfg.validate()?;
    if cfg.ensemble == Ensemble::EqualMarginal {
        return Err(Error::Usage(
            "the equal-marginal ensemble applies to figure1 only".into(),
        ));
    }
    let mut checks = Vec::new();
    let mut faults = Vec::new();
    let mut counterexamples = Vec::new();
    for member in suite.members() {
        let mut r = Runner {
            cfg,
            exec,
            suite: member.name(),
            checks: Vec::new(),
            faults: Vec::new(),
            counterexamples: Vec::new(),
        };
        match member {
            Suite::Lidskii => lidskii(&mut r),
            Suite::Theorem1 => theorem1(&mut r),
            Suite::Conditional => conditional(&mut r)?,
            Suite::Relent => relent(&mut r),
            Suite::Dmax => dmax_suite(&mut r),
            Suite::ProofLemmas => proof_lemmas(&mut r),
            Suite::All => unreachable!("expanded by members()"),
        }
        checks.append(&mut r.checks);
        faults.append(&mut r.faults);
        counterexamples.append(&mut r.counterexamples);
    }
    let report = SuiteReport {
        suite,
        seed: cfg.seed,
        tolerance: cfg.tolerance,
        checks,
        faults,
        counterexamples,
    };
    if let Some(path) = &cfg.output_path {
        let io = |source| Error::Io {
            path: path.clone(),
            source,
        };
        let mut w = BufWriter::new(File::create(path).map_err(io)?);
        serde_json::to_writer_pretty(&mut w, &report)
            .map_err(|e| Error::NumericalFault(format!("serializing report: {e}")))?;
        w.write_all(b"\n").map_err(io)?;
        w.flush().map_err(io)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(dim: Option<usize>, trials: usize) -> ExperimentConfig {
        ExperimentConfig {
            dim,
            trials,
            ..Default::default()
        }
    }

    #[test]
    fn suite_names_parse() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!(matches!("everything".parse::<Suite>(), Err(Error::Usage(_))));
    }

    #[test]
    fn small_suites_pass() {
        let report = run_property_suite(&cfg(Some(4), 30), Suite::All, Execution::Parallel).unwrap();
        assert!(report.passed(), "{report}");
        for name in ["lidskii", "entropy-difference", "conditional", "relent-fixed", "dmax-minimal", "lemma2", "variational", "simplex-optimum"] {
            assert!(report.evaluated(name) > 0, "{name} never evaluated");
        }
        assert_eq!(report.evaluated("variational"), SAMPLES_PER_INSTANCE + 1);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = run_property_suite(&cfg(Some(3), 20), Suite::Theorem1, Execution::Sequential).unwrap();
        let b = run_property_suite(&cfg(Some(3), 20), Suite::Theorem1, Execution::Parallel).unwrap();
        assert_eq!(a.checks, b.checks);
    }

    #[test]
    fn absurd_tolerance_reports_counterexamples() {
        let c = ExperimentConfig {
            tolerance: 1e-300,
            ..cfg(Some(3), 20)
        };
        let report = run_property_suite(&c, Suite::ProofLemmas, Execution::Sequential).unwrap();
        // equality cases (lemma2 at omega = rho_minus) fail at this tolerance
        assert!(!report.passed());
        assert!(!report.counterexamples.is_empty());
        assert!(report.counterexamples.iter().all(|c| !c.matrices.is_empty()));
    }

    #[test]
    fn conditional_on_prime_dim_is_usage_error() {
        assert!(matches!(
            run_property_suite(&cfg(Some(7), 2), Suite::Conditional, Execution::Sequential),
            Err(Error::Usage(_))
        ));
    }
}
