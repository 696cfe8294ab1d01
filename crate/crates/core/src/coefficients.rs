//! Fourier coefficients of the kernel, truncated coefficient tensors and
//! Parseval-based mean-square error measures.
//!
//! A coefficient is the iterated simplex integral
//!
//! ```text
//! C_{j_k…j_1} = ∫_t^T ψ_k φ_{j_k}(t_k) ∫_t^{t_k} … ∫_t^{t_2} ψ_1 φ_{j_1}(t_1) dt_1 … dt_k.
//! ```
//!
//! The inner antiderivatives are tabulated at the Gauss nodes of a shared
//! panel grid (split at every jump of every active basis function), so a
//! tensor is filled by a depth-first walk over index prefixes: the level-`l`
//! table for a prefix `(j_1,…,j_l)` is computed once and reused by every
//! extension of that prefix.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{self, BasisSystem, Resolution};
use crate::error::{Error, Result};
use crate::kernel::{kernel_l2_norm_sq, IntegralSpec};
use crate::numeric::CompensatedSum;
use crate::quadrature::PanelGrid;

/// Default cap on the number of tensor entries.
pub const DEFAULT_MAX_ENTRIES: usize = 100_000_000;

/// Minimum nodes per panel.
const BASE_NODES: usize = 16;

/// Dense coefficient array, row-major with `j₁` varying fastest:
/// `offset = j₁ + (p₁+1)·(j₂ + (p₂+1)·(j₃ + …))`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTensor {
    spec: IntegralSpec,
    basis: BasisSystem,
    orders: Vec<usize>,
    values: Vec<f64>,
}

fn entry_count(orders: &[usize], max_entries: usize) -> Result<usize> {
    orders
        .iter()
        .try_fold(1usize, |acc, &p| acc.checked_mul(p + 1))
        .filter(|&n| n <= max_entries)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "tensor with orders {orders:?} exceeds the limit of {max_entries} entries"
            ))
        })
}

impl CoefficientTensor {
    /// Wraps precomputed values; checks shape and finiteness.
    pub fn from_values(
        spec: IntegralSpec,
        basis: BasisSystem,
        orders: Vec<usize>,
        values: Vec<f64>,
    ) -> Result<Self> {
        if orders.len() != spec.k() {
            return Err(Error::Compatibility(format!(
                "{} orders given for multiplicity {}",
                orders.len(),
                spec.k()
            )));
        }
        let n = entry_count(&orders, usize::MAX)?;
        if values.len() != n {
            return Err(Error::Compatibility(format!(
                "tensor of shape {orders:?} needs {n} values, got {}",
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Numeric(format!(
                "non-finite coefficient at offset {pos}"
            )));
        }
        for &p in &orders {
            basis.check_index(p)?;
        }
        Ok(CoefficientTensor {
            spec,
            basis,
            orders,
            values,
        })
    }

    pub fn zeros(spec: IntegralSpec, basis: BasisSystem, orders: Vec<usize>) -> Result<Self> {
        let n = entry_count(&orders, DEFAULT_MAX_ENTRIES)?;
        CoefficientTensor::from_values(spec, basis, orders, vec![0.0; n])
    }

    pub fn spec(&self) -> &IntegralSpec {
        &self.spec
    }

    pub fn basis(&self) -> BasisSystem {
        self.basis
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_order(&self) -> usize {
        self.orders.iter().copied().max().unwrap_or(0)
    }

    /// Flat offset of `(j₁,…,j_k)`.
    pub fn offset(&self, jtuple: &[usize]) -> Result<usize> {
        if jtuple.len() != self.orders.len() {
            return Err(Error::Arity {
                expected: self.orders.len(),
                got: jtuple.len(),
            });
        }
        let mut off = 0;
        for (&j, &p) in jtuple.iter().zip(&self.orders).rev() {
            if j > p {
                return Err(Error::Index(format!("index {j} exceeds order {p}")));
            }
            off = off * (p + 1) + j;
        }
        Ok(off)
    }

    pub fn get(&self, jtuple: &[usize]) -> Result<f64> {
        Ok(self.values[self.offset(jtuple)?])
    }

    /// Multi-index of a flat offset.
    pub fn tuple_at(&self, mut offset: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&p| {
                let j = offset % (p + 1);
                offset /= p + 1;
                j
            })
            .collect()
    }

    /// Same shape and metadata, values mapped elementwise.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        CoefficientTensor::from_values(
            self.spec.clone(),
            self.basis,
            self.orders.clone(),
            self.values.iter().map(|&v| f(v)).collect(),
        )
    }
}

/// Node tables shared by every coefficient on one panel grid.
struct Tabulation<'a> {
    spec: &'a IntegralSpec,
    grid: PanelGrid,
    /// `weights[l][q] = ψ_l(x_q)`
    weights: Vec<Vec<f64>>,
    /// Basis indices that occur, ascending, and their node values.
    phi_index: Vec<usize>,
    phi: Vec<Vec<f64>>,
    /// Active indices per level.
    levels: Vec<Vec<usize>>,
}

impl<'a> Tabulation<'a> {
    fn new(spec: &'a IntegralSpec, system: BasisSystem, levels: Vec<Vec<usize>>) -> Result<Self> {
        let iv = spec.interval();
        let k = spec.k();
        for js in &levels {
            for &j in js {
                system.check_index(j)?;
            }
        }

        let mut phi_index: Vec<usize> = levels.iter().flatten().copied().collect();
        phi_index.sort_unstable();
        phi_index.dedup();

        // Break points: every jump of every active function. For large
        // piecewise sets the finest dyadic lattice covers them all.
        let breaks: Vec<f64> = if system.is_piecewise() && phi_index.len() > 64 {
            let jmax = *phi_index.last().expect("non-empty");
            let depth = match system {
                BasisSystem::Haar => basis::haar_level(jmax).0 + 1,
                _ => usize::BITS - jmax.leading_zeros(),
            };
            let cells = 1u64 << depth;
            (1..cells).map(|c| c as f64 / cells as f64).collect()
        } else {
            phi_index
                .iter()
                .flat_map(|&j| basis::unit_breakpoints(system, j))
                .collect()
        };

        // Degree of the level-l integrand ψ_l φ_{j_l} G_{l-1} on one panel.
        let mut cycles = 0;
        let mut running = 0usize;
        let mut inner_degree = 0usize;
        let mut outer_degree = 0usize;
        for (l, js) in levels.iter().enumerate() {
            let jmax = js.iter().copied().max().unwrap_or(0);
            let Resolution { degree, cycles: c } = basis::resolution(system, jmax);
            cycles += c;
            let d = spec.weights()[l].degree() + degree + running;
            if l + 1 < k {
                inner_degree = inner_degree.max(d);
            } else {
                outer_degree = d;
            }
            running = d + 1;
        }
        let nodes = BASE_NODES
            .max(inner_degree + 1)
            .max(outer_degree.div_ceil(2) + 1);
        let subdivisions = basis::subdivisions_for_cycles(cycles);

        let breaks: Vec<f64> = breaks
            .iter()
            .map(|x| iv.start() + iv.length() * x)
            .collect();
        let grid = PanelGrid::with_breakpoints(iv.start(), iv.end(), &breaks, subdivisions, nodes)?;

        let t = iv.start();
        let weights = spec
            .weights()
            .iter()
            .map(|w| grid.nodes().iter().map(|&s| w.eval_offset(s - t)).collect())
            .collect();
        let scale = 1.0 / iv.length().sqrt();
        let phi = phi_index
            .iter()
            .map(|&j| {
                grid.nodes()
                    .iter()
                    .map(|&s| basis::eval_unit(system, j, iv.normalize(s)) * scale)
                    .collect()
            })
            .collect();

        Ok(Tabulation {
            spec,
            grid,
            weights,
            phi_index,
            phi,
            levels,
        })
    }

    fn phi_row(&self, j: usize) -> &[f64] {
        let pos = self.phi_index.binary_search(&j).expect("tabulated index");
        &self.phi[pos]
    }

    fn integrand(&self, level: usize, j: usize, prev: Option<&[f64]>) -> Vec<f64> {
        let w = &self.weights[level];
        let phi = self.phi_row(j);
        match prev {
            None => w.iter().zip(phi).map(|(a, b)| a * b).collect(),
            Some(g) => w
                .iter()
                .zip(phi)
                .zip(g)
                .map(|((a, b), c)| a * b * c)
                .collect(),
        }
    }

    /// Fills `out` (levels `level..k` in row-major order, first of them fastest).
    fn descend(
        &self,
        level: usize,
        prev: Option<&[f64]>,
        offset: usize,
        strides: &[usize],
        out: &mut [f64],
    ) {
        let k = self.spec.k();
        let stride = strides[level];
        if level + 1 == k {
            for (pos, &j) in self.levels[level].iter().enumerate() {
                let g = self.integrand(level, j, prev);
                out[offset + pos * stride] = self.grid.integrate(&g);
            }
            return;
        }
        let mut cum = vec![0.0; self.grid.nodes().len()];
        for (pos, &j) in self.levels[level].iter().enumerate() {
            let g = self.integrand(level, j, prev);
            self.grid.cumulative(&g, &mut cum);
            self.descend(level + 1, Some(&cum), offset + pos * stride, strides, out);
        }
    }

    /// All coefficients over the product of the level index lists.
    fn fill(&self) -> Vec<f64> {
        let k = self.spec.k();
        let counts: Vec<usize> = self.levels.iter().map(Vec::len).collect();
        let total: usize = counts.iter().product();
        let first = counts[0];

        // strides for levels ≥ 1 within one j₁ subtree
        let mut strides = vec![0usize; k];
        let mut acc = 1;
        for l in 1..k {
            strides[l] = acc;
            acc *= counts[l];
        }
        let sub_len = acc;

        let subtrees: Vec<Vec<f64>> = self.levels[0]
            .par_iter()
            .map(|&j1| {
                let mut sub = vec![0.0; sub_len];
                let g = self.integrand(0, j1, None);
                if k == 1 {
                    sub[0] = self.grid.integrate(&g);
                } else {
                    let mut cum = vec![0.0; g.len()];
                    self.grid.cumulative(&g, &mut cum);
                    self.descend(1, Some(&cum), 0, &strides, &mut sub);
                }
                sub
            })
            .collect();

        let mut values = vec![0.0; total];
        for (pos1, sub) in subtrees.iter().enumerate() {
            for (q, &v) in sub.iter().enumerate() {
                values[pos1 + first * q] = v;
            }
        }
        values
    }
}

/// `C_{j_k…j_1}` for `jtuple = (j₁,…,j_k)`, `j₁` the innermost index.
pub fn fourier_coefficient(
    spec: &IntegralSpec,
    basis: BasisSystem,
    jtuple: &[usize],
) -> Result<f64> {
    if jtuple.len() != spec.k() {
        return Err(Error::Arity {
            expected: spec.k(),
            got: jtuple.len(),
        });
    }
    let levels = jtuple.iter().map(|&j| vec![j]).collect();
    let tab = Tabulation::new(spec, basis, levels)?;
    let v = tab.fill()[0];
    if !v.is_finite() {
        return Err(Error::Numeric(format!(
            "coefficient {jtuple:?} is not finite"
        )));
    }
    Ok(v)
}

/// Dense tensor of all coefficients with `j_l ≤ p_l`.
pub fn coefficient_tensor(
    spec: &IntegralSpec,
    basis: BasisSystem,
    orders: &[usize],
) -> Result<CoefficientTensor> {
    coefficient_tensor_with_limit(spec, basis, orders, DEFAULT_MAX_ENTRIES)
}

pub fn coefficient_tensor_with_limit(
    spec: &IntegralSpec,
    basis: BasisSystem,
    orders: &[usize],
    max_entries: usize,
) -> Result<CoefficientTensor> {
    if orders.len() != spec.k() {
        return Err(Error::Arity {
            expected: spec.k(),
            got: orders.len(),
        });
    }
    entry_count(orders, max_entries)?;
    let levels = orders.iter().map(|&p| (0..=p).collect()).collect();
    let tab = Tabulation::new(spec, basis, levels)?;
    CoefficientTensor::from_values(spec.clone(), basis, orders.to_vec(), tab.fill())
}

/// Mean-square truncation measure `∫K² − ΣC²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    /// Clamped at zero.
    pub value: f64,
    /// Value before clamping.
    pub raw: f64,
    /// `∫K²`.
    pub kernel_norm_sq: f64,
}

impl Residual {
    /// True when a negative round-off value was clamped to zero.
    pub fn clamped(&self) -> bool {
        self.raw < 0.0
    }
}

pub fn parseval_residual(spec: &IntegralSpec, tensor: &CoefficientTensor) -> Result<Residual> {
    if tensor.spec() != spec {
        return Err(Error::Compatibility(
            "coefficient tensor was built for a different integral".into(),
        ));
    }
    let norm = kernel_l2_norm_sq(spec);
    let captured: CompensatedSum = tensor.values().iter().map(|c| c * c).collect();
    let raw = norm - captured.value();
    Ok(Residual {
        value: raw.max(0.0),
        raw,
        kernel_norm_sq: norm,
    })
}

fn factorial(k: usize) -> Result<f64> {
    if k > 20 {
        return Err(Error::Capacity(format!(
            "{k}! overflows exact 64-bit range"
        )));
    }
    Ok((1..=k as u64).product::<u64>() as f64)
}

fn check_residual(residual: f64) -> Result<()> {
    if !residual.is_finite() || residual < 0.0 {
        return Err(Error::domain(format!(
            "residual must be finite and ≥ 0, got {residual}"
        )));
    }
    Ok(())
}

/// `k!·residual`, the bound on `E[R²]` when every index is nonzero.
pub fn ms_error_bound(k: usize, residual: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::domain("multiplicity must be positive"));
    }
    check_residual(residual)?;
    Ok(factorial(k)? * residual)
}

/// `(k!)^{2n} (n(2n−1))^{n(k−1)} (2n−1)!! · residualⁿ`, the bound on `E[R^{2n}]`.
pub fn moment_bound_2n(n: u32, k: usize, residual: f64) -> Result<f64> {
    if n == 0 || k == 0 {
        return Err(Error::domain("n and k must be positive"));
    }
    check_residual(residual)?;
    let kf = factorial(k)?;
    let n_f = n as f64;
    let double_fact: f64 = (1..=n).map(|i| (2 * i - 1) as f64).product();
    let exp_k = n
        .checked_mul(k as u32 - 1)
        .and_then(|e| i32::try_from(e).ok())
        .ok_or_else(|| Error::Capacity("moment bound exponent overflow".into()))?;
    let bound = kf.powi(2 * n as i32)
        * (n_f * (2.0 * n_f - 1.0)).powi(exp_k)
        * double_fact
        * residual.powi(n as i32);
    if !bound.is_finite() {
        return Err(Error::Capacity(format!(
            "moment bound overflows for n={n}, k={k}"
        )));
    }
    Ok(bound)
}

/// Version written into coefficient table headers.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableHeader {
    format_version: u32,
    spec: IntegralSpec,
    basis: BasisSystem,
    orders: Vec<usize>,
}

/// One JSON header line, then `j1,…,jk,value` per entry in storage order.
/// Values carry 17 significant digits, enough to read back bit-exact.
pub fn write_table(tensor: &CoefficientTensor, mut out: impl Write) -> Result<()> {
    let header = TableHeader {
        format_version: FORMAT_VERSION,
        spec: tensor.spec.clone(),
        basis: tensor.basis,
        orders: tensor.orders.clone(),
    };
    serde_json::to_writer(&mut out, &header).map_err(|e| Error::Io(e.into()))?;
    writeln!(out)?;
    let mut line = String::new();
    for (off, v) in tensor.values.iter().enumerate() {
        line.clear();
        for j in tensor.tuple_at(off) {
            line.push_str(&j.to_string());
            line.push(',');
        }
        line.push_str(&format!("{v:.16e}"));
        writeln!(out, "{line}")?;
    }
    Ok(())
}

pub fn read_table(input: impl BufRead) -> Result<CoefficientTensor> {
    let mut lines = input.lines();
    let first = lines
        .next()
        .ok_or_else(|| Error::config("header", "empty coefficient table"))??;
    let de = &mut serde_json::Deserializer::from_str(&first);
    let header: TableHeader = serde_path_to_error::deserialize(de).map_err(Error::from_json)?;
    if header.format_version != FORMAT_VERSION {
        return Err(Error::config(
            "format_version",
            format!("unsupported table version {}", header.format_version),
        ));
    }
    let mut tensor = CoefficientTensor::zeros(header.spec, header.basis, header.orders)?;
    let k = tensor.orders.len();
    let mut seen = vec![false; tensor.len()];
    for (row, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let at = format!("row {}", row + 1);
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != k + 1 {
            return Err(Error::config(
                at,
                format!("expected {} fields, got {}", k + 1, fields.len()),
            ));
        }
        let tuple = fields[..k]
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::config(&at, e.to_string()))?;
        let value: f64 = fields[k]
            .parse()
            .map_err(|e: std::num::ParseFloatError| Error::config(&at, e.to_string()))?;
        if !value.is_finite() {
            return Err(Error::config(at, "coefficient is not finite"));
        }
        let off = tensor
            .offset(&tuple)
            .map_err(|e| Error::config(&at, e.to_string()))?;
        if std::mem::replace(&mut seen[off], true) {
            return Err(Error::config(at, format!("duplicate entry {tuple:?}")));
        }
        tensor.values[off] = value;
    }
    if let Some(off) = seen.iter().position(|s| !s) {
        return Err(Error::config(
            "rows",
            format!("missing entry {:?}", tensor.tuple_at(off)),
        ));
    }
    Ok(tensor)
}
