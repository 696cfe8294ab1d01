//! Monte-Carlo comparison of truncated expansions with the grid sum.
//!
//! Every path `q` gets its own seed `derive_seed(seed, q)`. The differences
//! `D_q` are computed in parallel, collected in path order and reduced
//! sequentially, so a report does not depend on the thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::BasisSystem;
use crate::coefficients::{
    coefficient_tensor, moment_bound_2n, ms_error_bound, parseval_residual, CoefficientTensor,
};
use crate::error::{Error, Result};
use crate::expansion::truncated_expansion;
use crate::kernel::IntegralSpec;
use crate::numeric::RunningStats;
use crate::stochastic::{brownian_path, derive_seed, path_iterated_integral, ZetaProjector};

pub const MIN_PATHS: usize = 100;

/// Multiplier `c` in the grid allowance `c·(T − t)²/N` is `k²`.
pub fn allowance_constant(k: usize) -> f64 {
    (k * k) as f64
}

/// Inputs of a run, echoed into its report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunEcho {
    pub spec: IntegralSpec,
    pub basis: BasisSystem,
    pub orders: Vec<usize>,
    pub paths: usize,
    pub steps: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentReport {
    pub n: u32,
    pub samples: usize,
    /// Sample mean of `D^{2n}`.
    pub moment: f64,
    pub std_error: f64,
    pub parseval: f64,
    pub bound: f64,
    pub grid_allowance: f64,
    /// `moment ≤ bound + 3·std_error + grid_allowance`
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub samples: usize,
    /// Sample mean of `D²`.
    pub mean_sq_diff: f64,
    pub std_error: f64,
    pub parseval: f64,
    pub bound_ms: f64,
    pub bound_2n: Option<f64>,
    pub grid_allowance: f64,
    pub allowance_constant: f64,
    /// `mean_sq_diff ≤ parseval + 3·std_error + grid_allowance`
    pub pass: bool,
    /// `mean_sq_diff ≤ bound_ms + 3·std_error + grid_allowance`
    pub within_ms_bound: bool,
    pub moment: Option<MomentReport>,
    pub config: RunEcho,
}

fn check_run(spec: &IntegralSpec, n_paths: usize, steps: usize) -> Result<()> {
    if !spec.all_stochastic() {
        return Err(Error::domain("validation needs every index i_l ≥ 1"));
    }
    if n_paths < MIN_PATHS {
        return Err(Error::domain(format!(
            "at least {MIN_PATHS} paths are needed, got {n_paths}"
        )));
    }
    if steps == 0 {
        return Err(Error::domain("N must be at least 1"));
    }
    Ok(())
}

/// `D_q = path_iterated_integral − truncated_expansion` for `q = 0..n_paths`.
pub fn sample_differences(
    tensor: &CoefficientTensor,
    n_paths: usize,
    steps: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    let spec = tensor.spec();
    let iv = spec.interval();
    let m = spec.dimension().max(1);
    let projector = ZetaProjector::new(iv, tensor.basis(), tensor.max_order(), steps)?;
    (0..n_paths)
        .into_par_iter()
        .map(|q| {
            let path = brownian_path(iv, m, steps, derive_seed(seed, q as u64))?;
            let pool = projector.project(&path)?;
            let exact = path_iterated_integral(spec, &path)?;
            Ok(exact - truncated_expansion(tensor, &pool)?.value)
        })
        .collect()
}

fn moment_stats(diffs: &[f64], n: u32) -> RunningStats {
    diffs.iter().map(|d| d.powi(2 * n as i32)).collect()
}

fn moment_report(
    tensor: &CoefficientTensor,
    diffs: &[f64],
    n: u32,
    steps: usize,
) -> Result<MomentReport> {
    let spec = tensor.spec();
    let k = spec.k();
    let parseval = parseval_residual(spec, tensor)?.value;
    let stats = moment_stats(diffs, n);
    let bound = moment_bound_2n(n, k, parseval)?;
    let grid_allowance = allowance_constant(k) * spec.interval().length().powi(2) / steps as f64;
    Ok(MomentReport {
        n,
        samples: diffs.len(),
        moment: stats.mean(),
        std_error: stats.std_error(),
        parseval,
        bound,
        grid_allowance,
        pass: stats.mean() <= bound + 3.0 * stats.std_error() + grid_allowance,
    })
}

/// Strong-error report for a given tensor; `moment` adds the `E[D^{2n}]` check.
pub fn estimate_with_tensor(
    tensor: &CoefficientTensor,
    n_paths: usize,
    steps: usize,
    seed: u64,
    moment: Option<u32>,
) -> Result<ValidationReport> {
    let spec = tensor.spec();
    check_run(spec, n_paths, steps)?;
    if let Some(n) = moment {
        check_moment(n)?;
    }
    let k = spec.k();
    let diffs = sample_differences(tensor, n_paths, steps, seed)?;
    let stats = moment_stats(&diffs, 1);
    let parseval = parseval_residual(spec, tensor)?.value;
    let bound_ms = ms_error_bound(k, parseval)?;
    let c = allowance_constant(k);
    let grid_allowance = c * spec.interval().length().powi(2) / steps as f64;
    let mean = stats.mean();
    let se = stats.std_error();
    let moment = moment
        .map(|n| moment_report(tensor, &diffs, n, steps))
        .transpose()?;
    Ok(ValidationReport {
        samples: n_paths,
        mean_sq_diff: mean,
        std_error: se,
        parseval,
        bound_ms,
        bound_2n: moment.as_ref().map(|m| m.bound),
        grid_allowance,
        allowance_constant: c,
        pass: mean <= parseval + 3.0 * se + grid_allowance,
        within_ms_bound: mean <= bound_ms + 3.0 * se + grid_allowance,
        moment,
        config: RunEcho {
            spec: spec.clone(),
            basis: tensor.basis(),
            orders: tensor.orders().to_vec(),
            paths: n_paths,
            steps,
            seed,
        },
    })
}

pub fn strong_error_estimate(
    spec: &IntegralSpec,
    basis: BasisSystem,
    orders: &[usize],
    n_paths: usize,
    steps: usize,
    seed: u64,
) -> Result<ValidationReport> {
    check_run(spec, n_paths, steps)?;
    let tensor = coefficient_tensor(spec, basis, orders)?;
    estimate_with_tensor(&tensor, n_paths, steps, seed, None)
}

fn check_moment(n: u32) -> Result<()> {
    if !(1..=2).contains(&n) {
        return Err(Error::domain(format!(
            "moment degree n must be 1 or 2, got {n}"
        )));
    }
    Ok(())
}

/// Sample `E[D^{2n}]` against [`moment_bound_2n`] plus the grid allowance.
pub fn moment_check(
    spec: &IntegralSpec,
    basis: BasisSystem,
    orders: &[usize],
    n: u32,
    n_paths: usize,
    steps: usize,
    seed: u64,
) -> Result<MomentReport> {
    check_moment(n)?;
    check_run(spec, n_paths, steps)?;
    let tensor = coefficient_tensor(spec, basis, orders)?;
    let diffs = sample_differences(&tensor, n_paths, steps, seed)?;
    moment_report(&tensor, &diffs, n, steps)
}
