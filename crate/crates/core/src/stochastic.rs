//! Gaussian pools, discretized Wiener paths and the pathwise iterated sum.
//!
//! Random values are counter-based: the normal at `(seed, stream, index)`
//! is produced from ChaCha8 keyed by `seed`, with the stream selected by
//! `stream` and the block position by `index` (four 32-bit words per value,
//! Box–Muller on two 53-bit uniforms). Any entry can therefore be produced
//! on its own, in any order, on any thread.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::basis::{self, BasisSystem, Interval};
use crate::error::{Error, Result};
use crate::kernel::IntegralSpec;

const POOL_STREAM: u64 = 1 << 32;
const PATH_STREAM: u64 = 2 << 32;
const WORDS_PER_NORMAL: u128 = 4;

/// Sequential reader of the normals of one `(seed, stream)`.
pub struct NormalStream {
    rng: ChaCha8Rng,
}

impl NormalStream {
    pub fn new(seed: u64, stream: u64, start: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        rng.set_word_pos(start as u128 * WORDS_PER_NORMAL);
        NormalStream { rng }
    }

    pub fn next_normal(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        let a = self.rng.next_u64();
        let b = self.rng.next_u64();
        let u1 = ((a >> 11) as f64 + 1.0) * SCALE; // (0, 1]
        let u2 = (b >> 11) as f64 * SCALE; // [0, 1)
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }
}

/// The standard normal at `(seed, stream, index)`.
pub fn normal_at(seed: u64, stream: u64, index: u64) -> f64 {
    NormalStream::new(seed, stream, index).next_normal()
}

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent child seed for item `counter` of a run seeded with `seed`.
pub fn derive_seed(seed: u64, counter: u64) -> u64 {
    mix64(seed ^ mix64(counter.wrapping_add(0x9e37_79b9_7f4a_7c15)))
}

/// `ζ_j^{(i)}` for `i = 0..=m`, `j = 0..=jmax`. Row 0 holds the
/// deterministic `∫_t^T φ_j ds`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianPool {
    interval: Interval,
    basis: BasisSystem,
    m: usize,
    jmax: usize,
    values: Vec<f64>,
}

fn deterministic_row(iv: &Interval, basis: BasisSystem, jmax: usize) -> Result<Vec<f64>> {
    (0..=jmax)
        .map(|j| basis::integrate_basis(basis, j, iv))
        .collect()
}

impl GaussianPool {
    /// Builds a pool from the `m` stochastic rows (each of length `jmax + 1`);
    /// row 0 is filled from the basis integrals.
    pub fn from_rows(
        interval: Interval,
        basis: BasisSystem,
        jmax: usize,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::domain("a pool needs at least one Wiener component"));
        }
        basis.check_index(jmax)?;
        let m = rows.len();
        let mut values = deterministic_row(&interval, basis, jmax)?;
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != jmax + 1 {
                return Err(Error::Compatibility(format!(
                    "pool row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    jmax + 1
                )));
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::Numeric(format!("pool row {} is not finite", i + 1)));
            }
            values.extend(row);
        }
        Ok(GaussianPool {
            interval,
            basis,
            m,
            jmax,
            values,
        })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn basis(&self) -> BasisSystem {
        self.basis
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn jmax(&self) -> usize {
        self.jmax
    }

    /// `ζ_j^{(i)}`; panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(
            i <= self.m && j <= self.jmax,
            "pool index ({i}, {j}) out of range"
        );
        self.values[i * (self.jmax + 1) + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * (self.jmax + 1)..(i + 1) * (self.jmax + 1)]
    }
}

/// Pool of independent standard normals; entry `(i, j)` depends only on `(seed, i, j)`.
pub fn gaussian_pool(
    iv: &Interval,
    basis: BasisSystem,
    m: usize,
    jmax: usize,
    seed: u64,
) -> Result<GaussianPool> {
    let rows = (1..=m)
        .map(|i| {
            let mut s = NormalStream::new(seed, POOL_STREAM | i as u64, 0);
            (0..=jmax).map(|_| s.next_normal()).collect()
        })
        .collect();
    GaussianPool::from_rows(*iv, basis, jmax, rows)
}

/// Increments of an `m`-dimensional Wiener process on a uniform grid of `N` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct WienerPath {
    interval: Interval,
    m: usize,
    steps: usize,
    /// Row `i − 1` holds component `i`.
    increments: Vec<f64>,
}

impl WienerPath {
    pub fn from_increments(interval: Interval, rows: Vec<Vec<f64>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::domain("a path needs at least one component"));
        }
        let steps = rows[0].len();
        if steps == 0 {
            return Err(Error::domain("a path needs at least one step"));
        }
        if rows.iter().any(|r| r.len() != steps) {
            return Err(Error::Compatibility(
                "path components have different lengths".into(),
            ));
        }
        Ok(WienerPath {
            interval,
            m,
            steps,
            increments: rows.concat(),
        })
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn dt(&self) -> f64 {
        self.interval.length() / self.steps as f64
    }

    /// Grid point `τ_l = t + l·Δτ`.
    pub fn tau(&self, l: usize) -> f64 {
        self.interval.start() + l as f64 * self.dt()
    }

    /// `Δw^{(i)}` over the steps; component 0 is not stored.
    pub fn component(&self, i: usize) -> &[f64] {
        assert!(i >= 1 && i <= self.m, "component {i} out of range");
        &self.increments[(i - 1) * self.steps..i * self.steps]
    }

    /// `w_T − w_t` of component `i ≥ 1`.
    pub fn total(&self, i: usize) -> f64 {
        self.component(i).iter().sum()
    }
}

pub fn brownian_path(iv: &Interval, m: usize, steps: usize, seed: u64) -> Result<WienerPath> {
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if steps == 0 {
        return Err(Error::domain("N must be at least 1"));
    }
    let sd = (iv.length() / steps as f64).sqrt();
    let mut increments = Vec::with_capacity(m * steps);
    for i in 1..=m {
        let mut s = NormalStream::new(seed, PATH_STREAM | i as u64, 0);
        increments.extend((0..steps).map(|_| sd * s.next_normal()));
    }
    Ok(WienerPath {
        interval: *iv,
        m,
        steps,
        increments,
    })
}

/// Left-point projection of path increments onto `φ_0 … φ_{jmax}`.
///
/// The basis table is built once per grid, so many paths on the same grid
/// share it.
#[derive(Debug, Clone)]
pub struct ZetaProjector {
    interval: Interval,
    basis: BasisSystem,
    jmax: usize,
    steps: usize,
    /// `table[l * (jmax+1) + j] = φ_j(τ_l)`
    table: Vec<f64>,
    deterministic: Vec<f64>,
}

impl ZetaProjector {
    pub fn new(iv: &Interval, basis: BasisSystem, jmax: usize, steps: usize) -> Result<Self> {
        basis.check_index(jmax)?;
        if steps == 0 {
            return Err(Error::domain("N must be at least 1"));
        }
        if basis.is_piecewise() {
            for j in 1..=jmax {
                for x in basis::unit_breakpoints(basis, j) {
                    let pos = x * steps as f64;
                    if (pos - pos.round()).abs() > 1e-9 {
                        return Err(Error::Grid(format!(
                            "jump of {basis} function {j} at {} is not on the {steps}-step grid",
                            iv.start() + x * iv.length()
                        )));
                    }
                }
            }
        }
        let scale = 1.0 / iv.length().sqrt();
        let width = jmax + 1;
        let mut table = vec![0.0; steps * width];
        for (l, row) in table.chunks_exact_mut(width).enumerate() {
            // exact normalized grid coordinate, so jumps land on the right side
            let x = l as f64 / steps as f64;
            basis::eval_unit_all(basis, jmax, x, row);
            row.iter_mut().for_each(|v| *v *= scale);
        }
        Ok(ZetaProjector {
            interval: *iv,
            basis,
            jmax,
            steps,
            table,
            deterministic: deterministic_row(iv, basis, jmax)?,
        })
    }

    pub fn project(&self, path: &WienerPath) -> Result<GaussianPool> {
        if path.interval() != &self.interval || path.steps() != self.steps {
            return Err(Error::Compatibility(
                "path grid differs from the projector grid".into(),
            ));
        }
        let width = self.jmax + 1;
        let mut values = self.deterministic.clone();
        values.reserve(path.m() * width);
        for i in 1..=path.m() {
            let mut acc = vec![0.0; width];
            for (dw, row) in path.component(i).iter().zip(self.table.chunks_exact(width)) {
                for (a, &phi) in acc.iter_mut().zip(row) {
                    *a += phi * dw;
                }
            }
            values.extend(acc);
        }
        Ok(GaussianPool {
            interval: self.interval,
            basis: self.basis,
            m: path.m(),
            jmax: self.jmax,
            values,
        })
    }
}

/// `ζ_j^{(i)} ≈ Σ_l φ_j(τ_l) Δw_l^{(i)}` for `j ≤ jmax`.
pub fn zeta_from_path(path: &WienerPath, basis: BasisSystem, jmax: usize) -> Result<GaussianPool> {
    ZetaProjector::new(path.interval(), basis, jmax, path.steps())?.project(path)
}

/// The ordered grid sum `Σ_{l_k} … Σ_{l_1 < l_2} ∏ ψ_l(τ_{l_l}) Δw^{(i_l)}_{τ_{l_l}}`,
/// with `Δτ` in place of `Δw` for index 0.
pub fn path_iterated_integral(spec: &IntegralSpec, path: &WienerPath) -> Result<f64> {
    if spec.interval() != path.interval() {
        return Err(Error::Compatibility(
            "spec and path intervals differ".into(),
        ));
    }
    if spec.dimension() > path.m() {
        return Err(Error::Compatibility(format!(
            "spec uses component {} but the path has {}",
            spec.dimension(),
            path.m()
        )));
    }
    let n = path.steps();
    let dt = path.dt();
    let dt_row = vec![dt; n];
    let mut prefix = vec![1.0; n];
    let mut total = 0.0;
    for (level, (&i, w)) in spec.indices().iter().zip(spec.weights()).enumerate() {
        let incr = if i == 0 {
            &dt_row[..]
        } else {
            path.component(i)
        };
        let mut running = 0.0;
        for (l, (p, &d)) in prefix.iter_mut().zip(incr).enumerate() {
            let term = w.eval_offset(l as f64 * dt) * d * *p;
            *p = running;
            running += term;
        }
        if level + 1 == spec.k() {
            total = running;
        }
    }
    Ok(total)
}
