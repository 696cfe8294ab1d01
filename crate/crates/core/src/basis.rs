//! Complete orthonormal systems of `L₂([t, T])`.
//!
//! Every system is evaluated through the normalized coordinate
//! `x = (s − t)/(T − t) ∈ [0, 1]` and scaled by `1/√(T − t)`.
//!
//! Flattened indices:
//!
//! * Haar: `j = 0` is the constant; level `n` occupies `j ∈ [2ⁿ, 2ⁿ⁺¹)` with
//!   inner index `j − 2ⁿ + 1 ∈ 1..=2ⁿ` in increasing order.
//! * Walsh (Rademacher products): `j = 0` is the constant; products whose
//!   largest factor is `M` occupy `j ∈ [2^{M−1}, 2^M)`, ordered
//!   lexicographically by the ascending factor list `m₁ < … < m_k = M`.
//!
//! Haar and Walsh functions are right-continuous at their jumps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quadrature::PanelGrid;

/// Largest Haar level `n` (so `j < 2^{31}`).
pub const HAAR_MAX_LEVEL: u32 = 30;
/// Largest Rademacher factor `m` in a Walsh product (so `j < 2^{20}`).
pub const WALSH_MAX_FACTOR: u32 = 20;
/// Largest Legendre / trigonometric index.
pub const SMOOTH_MAX_INDEX: usize = 1 << 20;

/// Nodes per panel used for Gram matrices and Walsh integrals.
pub(crate) const PANEL_NODES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    start: f64,
    end: f64,
}

impl Interval {
    pub fn new(start: f64, end: f64) -> Result<Self> {
        if !start.is_finite() || !end.is_finite() {
            return Err(Error::domain(format!(
                "interval [{start}, {end}] is not finite"
            )));
        }
        if end <= start {
            return Err(Error::domain(format!(
                "interval [{start}, {end}] requires T > t"
            )));
        }
        Ok(Interval { start, end })
    }

    pub fn unit() -> Self {
        Interval {
            start: 0.0,
            end: 1.0,
        }
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        self.end
    }

    pub fn length(&self) -> f64 {
        self.end - self.start
    }

    pub fn contains(&self, s: f64) -> bool {
        s >= self.start && s <= self.end
    }

    pub(crate) fn check(&self, s: f64) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "point {s} outside [{}, {}]",
                self.start, self.end
            )))
        }
    }

    pub(crate) fn normalize(&self, s: f64) -> f64 {
        ((s - self.start) / self.length()).clamp(0.0, 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisSystem {
    Legendre,
    Trigonometric,
    Haar,
    Walsh,
}

impl BasisSystem {
    pub const ALL: [BasisSystem; 4] = [
        BasisSystem::Legendre,
        BasisSystem::Trigonometric,
        BasisSystem::Haar,
        BasisSystem::Walsh,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BasisSystem::Legendre => "legendre",
            BasisSystem::Trigonometric => "trigonometric",
            BasisSystem::Haar => "haar",
            BasisSystem::Walsh => "walsh",
        }
    }

    /// Piecewise-constant systems, whose jumps must be resolved explicitly.
    pub fn is_piecewise(&self) -> bool {
        matches!(self, BasisSystem::Haar | BasisSystem::Walsh)
    }

    /// Largest valid flattened index.
    pub fn max_index(&self) -> usize {
        match self {
            BasisSystem::Legendre | BasisSystem::Trigonometric => SMOOTH_MAX_INDEX,
            BasisSystem::Haar => (1usize << (HAAR_MAX_LEVEL + 1)) - 1,
            BasisSystem::Walsh => (1usize << WALSH_MAX_FACTOR) - 1,
        }
    }

    pub(crate) fn check_index(&self, j: usize) -> Result<()> {
        if j > self.max_index() {
            return Err(Error::Index(format!(
                "{} index {j} exceeds the representable maximum {}",
                self.name(),
                self.max_index()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for BasisSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "legendre" => Ok(BasisSystem::Legendre),
            "trigonometric" => Ok(BasisSystem::Trigonometric),
            "haar" => Ok(BasisSystem::Haar),
            "walsh" => Ok(BasisSystem::Walsh),
            other => Err(Error::domain(format!(
                "unknown basis `{other}` (expected legendre, trigonometric, haar or walsh)"
            ))),
        }
    }
}

impl Serialize for BasisSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for BasisSystem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Haar index `j ≥ 1` as `(level n, inner index 1..=2ⁿ)`.
pub fn haar_level(j: usize) -> (u32, usize) {
    debug_assert!(j >= 1);
    let n = usize::BITS - 1 - j.leading_zeros();
    (n, j - (1usize << n) + 1)
}

/// Inverse of [`haar_level`].
pub fn haar_index(level: u32, inner: usize) -> usize {
    (1usize << level) + inner - 1
}

/// Rademacher factors of Walsh index `j ≥ 1` as a bit mask (bit `m−1` set
/// for every factor `m`).
pub fn walsh_factors(j: usize) -> u64 {
    debug_assert!(j >= 1);
    let top = usize::BITS - j.leading_zeros(); // M
    let mut rank = j - (1usize << (top - 1));
    let mut mask = 1u64 << (top - 1);
    // Lexicographic unranking over subsets of {1..M-1}, each followed by M:
    // the subsets whose next element is `e` form a block of 2^{M-1-e}.
    for e in 1..top {
        let block = 1usize << (top - 1 - e);
        if rank < block {
            mask |= 1u64 << (e - 1);
        } else {
            rank -= block;
        }
    }
    debug_assert_eq!(rank, 0);
    mask
}

fn walsh_sign(mask: u64, x: f64) -> f64 {
    // bit m-1 of `digits` is floor(2^m x) mod 2
    let scaled = (x * (1u64 << WALSH_MAX_FACTOR) as f64).floor() as u64;
    let mut digits = 0u64;
    for m in 1..=WALSH_MAX_FACTOR {
        digits |= ((scaled >> (WALSH_MAX_FACTOR - m)) & 1) << (m - 1);
    }
    if (digits & mask).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Value of the normalized (unit-interval) basis function at `x ∈ [0, 1]`.
pub(crate) fn eval_unit(system: BasisSystem, j: usize, x: f64) -> f64 {
    if j == 0 {
        return 1.0;
    }
    match system {
        BasisSystem::Legendre => {
            let xi = 2.0 * x - 1.0;
            let (mut p0, mut p1) = (1.0, xi);
            for n in 1..j {
                let n = n as f64;
                let p2 = ((2.0 * n + 1.0) * xi * p1 - n * p0) / (n + 1.0);
                p0 = p1;
                p1 = p2;
            }
            ((2 * j + 1) as f64).sqrt() * p1
        }
        BasisSystem::Trigonometric => {
            let r = j.div_ceil(2);
            let arg = 2.0 * std::f64::consts::PI * r as f64 * x;
            if j % 2 == 1 {
                std::f64::consts::SQRT_2 * arg.sin()
            } else {
                std::f64::consts::SQRT_2 * arg.cos()
            }
        }
        BasisSystem::Haar => {
            let (n, inner) = haar_level(j);
            let scale = (1u64 << n) as f64;
            let y = x * scale - (inner - 1) as f64;
            let amp = scale.sqrt();
            if (0.0..0.5).contains(&y) {
                amp
            } else if (0.5..1.0).contains(&y) {
                -amp
            } else {
                0.0
            }
        }
        BasisSystem::Walsh => walsh_sign(walsh_factors(j), x),
    }
}

/// Values of `φ_0 … φ_{jmax}` at normalized `x`, before the `1/√(T−t)` scale.
pub(crate) fn eval_unit_all(system: BasisSystem, jmax: usize, x: f64, out: &mut [f64]) {
    debug_assert_eq!(out.len(), jmax + 1);
    match system {
        BasisSystem::Legendre => {
            let xi = 2.0 * x - 1.0;
            let (mut p0, mut p1) = (1.0, xi);
            out[0] = 1.0;
            if jmax >= 1 {
                out[1] = 3f64.sqrt() * xi;
            }
            for n in 1..jmax {
                let nf = n as f64;
                let p2 = ((2.0 * nf + 1.0) * xi * p1 - nf * p0) / (nf + 1.0);
                p0 = p1;
                p1 = p2;
                out[n + 1] = ((2 * n + 3) as f64).sqrt() * p2;
            }
        }
        _ => {
            for (j, o) in out.iter_mut().enumerate() {
                *o = eval_unit(system, j, x);
            }
        }
    }
}

/// `φ_j(s)` of the chosen system on `iv`.
pub fn eval_basis(system: BasisSystem, j: usize, s: f64, iv: &Interval) -> Result<f64> {
    system.check_index(j)?;
    iv.check(s)?;
    Ok(eval_unit(system, j, iv.normalize(s)) / iv.length().sqrt())
}

/// Jump points of `φ_j` in normalized coordinates, ascending, interior only.
pub(crate) fn unit_breakpoints(system: BasisSystem, j: usize) -> Vec<f64> {
    if j == 0 {
        return Vec::new();
    }
    match system {
        BasisSystem::Legendre | BasisSystem::Trigonometric => Vec::new(),
        BasisSystem::Haar => {
            let (n, inner) = haar_level(j);
            let scale = (1u64 << n) as f64;
            let left = (inner - 1) as f64 / scale;
            let mid = left + 0.5 / scale;
            let right = inner as f64 / scale;
            [left, mid, right]
                .into_iter()
                .filter(|&x| x > 0.0 && x < 1.0)
                .collect()
        }
        BasisSystem::Walsh => {
            let mask = walsh_factors(j);
            let top = 64 - mask.leading_zeros();
            let cells = 1u64 << top;
            let half_cell = 0.5 / cells as f64;
            (1..cells)
                .map(|c| c as f64 / cells as f64)
                .filter(|&x| walsh_sign(mask, x) != walsh_sign(mask, x - half_cell))
                .collect()
        }
    }
}

/// Interior discontinuity points of `φ_j` on `iv`, ascending.
pub fn breakpoints(system: BasisSystem, j: usize, iv: &Interval) -> Result<Vec<f64>> {
    system.check_index(j)?;
    Ok(unit_breakpoints(system, j)
        .into_iter()
        .map(|x| iv.start() + iv.length() * x)
        .collect())
}

/// Smoothness budget of `φ_j` on its continuity panels: polynomial degree
/// and number of full oscillations over the interval.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct Resolution {
    pub degree: usize,
    pub cycles: usize,
}

pub(crate) fn resolution(system: BasisSystem, j: usize) -> Resolution {
    match system {
        BasisSystem::Legendre => Resolution {
            degree: j,
            cycles: 0,
        },
        BasisSystem::Trigonometric => Resolution {
            degree: 0,
            cycles: j.div_ceil(2),
        },
        BasisSystem::Haar | BasisSystem::Walsh => Resolution::default(),
    }
}

/// Uniform sub-panels per continuity panel so that each sub-panel holds at
/// most about half an oscillation of the combined integrand.
pub(crate) fn subdivisions_for_cycles(cycles: usize) -> usize {
    (2 * cycles).max(1)
}

/// `∫_t^T φ_j(s) ds`.
pub fn integrate_basis(system: BasisSystem, j: usize, iv: &Interval) -> Result<f64> {
    system.check_index(j)?;
    if j == 0 {
        return Ok(iv.length().sqrt());
    }
    match system {
        // orthogonal to the constant φ_0
        BasisSystem::Legendre | BasisSystem::Trigonometric | BasisSystem::Haar => Ok(0.0),
        BasisSystem::Walsh => {
            let grid = PanelGrid::with_breakpoints(
                iv.start(),
                iv.end(),
                &breakpoints(system, j, iv)?,
                1,
                PANEL_NODES,
            )?;
            let scale = 1.0 / iv.length().sqrt();
            let vals: Vec<f64> = grid
                .nodes()
                .iter()
                .map(|&s| eval_unit(system, j, iv.normalize(s)) * scale)
                .collect();
            Ok(grid.integrate(&vals))
        }
    }
}

/// Gram matrix `∫ φ_i φ_j` for `i, j ≤ p`, by breakpoint-aware panel quadrature.
#[allow(clippy::needless_range_loop)]
pub fn gram_matrix(system: BasisSystem, p: usize, iv: &Interval) -> Result<Vec<Vec<f64>>> {
    system.check_index(p)?;
    if system.is_piecewise() {
        return Ok(piecewise_gram(system, p));
    }
    let inv_len = 1.0 / iv.length();
    let mut gram = vec![vec![0.0; p + 1]; p + 1];
    for i in 0..=p {
        for j in i..=p {
            let (ri, rj) = (resolution(system, i), resolution(system, j));
            let nodes = PANEL_NODES.max((ri.degree + rj.degree).div_ceil(2) + 1);
            let mut breaks = breakpoints(system, i, iv)?;
            breaks.extend(breakpoints(system, j, iv)?);
            let grid = PanelGrid::with_breakpoints(
                iv.start(),
                iv.end(),
                &breaks,
                subdivisions_for_cycles(ri.cycles + rj.cycles),
                nodes,
            )?;
            let vals: Vec<f64> = grid
                .nodes()
                .iter()
                .map(|&s| {
                    let x = iv.normalize(s);
                    eval_unit(system, i, x) * eval_unit(system, j, x) * inv_len
                })
                .collect();
            let g = grid.integrate(&vals);
            gram[i][j] = g;
            gram[j][i] = g;
        }
    }
    Ok(gram)
}

/// Haar and Walsh values are `±2^{e/2}/√(T−t)`; returns `e`.
fn half_exponent(system: BasisSystem, j: usize) -> u32 {
    match system {
        BasisSystem::Haar if j > 0 => haar_level(j).0,
        _ => 0,
    }
}

fn sign_of(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Cellwise sums in unit coordinates, where every product is `±2^{(e+e')/2}`
/// times a dyadic width, so the result is exact.
#[allow(clippy::needless_range_loop)]
fn piecewise_gram(system: BasisSystem, p: usize) -> Vec<Vec<f64>> {
    let mut gram = vec![vec![0.0; p + 1]; p + 1];
    for i in 0..=p {
        for j in i..=p {
            let mut cuts = vec![0.0, 1.0];
            cuts.extend(unit_breakpoints(system, i));
            cuts.extend(unit_breakpoints(system, j));
            cuts.sort_by(f64::total_cmp);
            cuts.dedup();
            let e = half_exponent(system, i) + half_exponent(system, j);
            let amp = 2f64.powi((e / 2) as i32)
                * if e % 2 == 1 {
                    std::f64::consts::SQRT_2
                } else {
                    1.0
                };
            let g: f64 = cuts
                .windows(2)
                .map(|w| {
                    let mid = 0.5 * (w[0] + w[1]);
                    let sign =
                        sign_of(eval_unit(system, i, mid)) * sign_of(eval_unit(system, j, mid));
                    sign * amp * (w[1] - w[0])
                })
                .sum();
            gram[i][j] = g;
            gram[j][i] = g;
        }
    }
    gram
}
