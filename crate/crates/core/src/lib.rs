//! Mean-square approximation of iterated Itô stochastic integrals by
//! generalized multiple Fourier series.
//!
//! The pieces, bottom up:
//!
//! - [`basis`]: Legendre, trigonometric, Haar and Rademacher–Walsh systems on `[t, T]`.
//! - [`kernel`]: weights `ψ_l` and the kernel `K` of `J[ψ^{(k)}]_{T,t}`.
//! - [`coefficients`]: Fourier coefficient tensors and their truncation error.
//! - [`partitions`]: pair partitions indexing the correction terms.
//! - [`expansion`]: evaluation of the truncated expansion for a Gaussian pool.
//! - [`stochastic`]: pools, Wiener paths and the pathwise grid sum.
//! - [`validation`]: Monte-Carlo comparison against the grid sum.
//! - [`cli`]: the `ito-fourier` command line.

pub mod basis;
pub mod cli;
pub mod coefficients;
pub mod error;
pub mod expansion;
mod explicit;
pub mod kernel;
pub mod numeric;
pub mod partitions;
pub mod quadrature;
pub mod stochastic;
pub mod validation;

pub use basis::{breakpoints, eval_basis, gram_matrix, integrate_basis, BasisSystem, Interval};
pub use coefficients::{
    coefficient_tensor, fourier_coefficient, moment_bound_2n, ms_error_bound, parseval_residual,
    CoefficientTensor, Residual,
};
pub use error::{Error, Result};
pub use expansion::{explicit_expansion, hermite_reference, truncated_expansion, ExpansionResult};
pub use kernel::{eval_kernel, eval_weight, kernel_l2_norm_sq, IntegralSpec, Weight};
pub use partitions::{pair_partitions, partition_count, PairPartition};
pub use stochastic::{
    brownian_path, gaussian_pool, path_iterated_integral, zeta_from_path, GaussianPool, WienerPath,
};
pub use validation::{moment_check, strong_error_estimate, MomentReport, ValidationReport};
