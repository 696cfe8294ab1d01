//! Composite Gauss–Legendre quadrature on panel grids.
//!
//! A [`PanelGrid`] splits an interval at a sorted list of break points and
//! places an `n`-point Gauss–Legendre rule on every panel. Besides the plain
//! integral it can tabulate the running antiderivative of a sampled integrand
//! at every node: panel-boundary values accumulate the full panel sums, and
//! in-panel values use the spectral integration matrix of the rule, which is
//! exact for integrands that are polynomials of degree `< n` on the panel.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest node count accepted for a single panel rule.
pub const MAX_NODES: usize = 512;

/// Largest number of panels a grid may hold.
pub const MAX_PANELS: usize = 1 << 20;

/// Gauss–Legendre rule on `[-1, 1]` together with its integration matrix.
#[derive(Debug)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Row-major `n × n`; `integ[q * n + r] = ∫_{-1}^{x_q} ℓ_r(x) dx`.
    integ: Vec<f64>,
}

/// Legendre polynomial value and derivative at `x` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for m in 1..n {
        let m = m as f64;
        let p2 = ((2.0 * m + 1.0) * x * p1 - m * p0) / (m + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

impl GaussRule {
    fn build(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            // cos ordering is descending; store ascending
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }

        // P_m at every node, m = 0..=n
        let table: Vec<Vec<f64>> = nodes
            .iter()
            .map(|&x| {
                let mut row = Vec::with_capacity(n + 1);
                let (mut a, mut b) = (1.0, x);
                row.push(a);
                row.push(b);
                for m in 1..n {
                    let m = m as f64;
                    let c = ((2.0 * m + 1.0) * x * b - m * a) / (m + 1.0);
                    row.push(c);
                    a = b;
                    b = c;
                }
                row.truncate(n + 1);
                row
            })
            .collect();

        let mut integ = vec![0.0; n * n];
        for q in 0..n {
            let pq = &table[q];
            for r in 0..n {
                let pr = &table[r];
                let mut acc = 0.5 * (nodes[q] + 1.0);
                for m in 1..n {
                    acc += 0.5 * pr[m] * (pq[m + 1] - pq[m - 1]);
                }
                integ[q * n + r] = weights[r] * acc;
            }
        }
        GaussRule {
            nodes,
            weights,
            integ,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Shared, lazily built rule with `n` nodes.
pub fn gauss_rule(n: usize) -> Result<Arc<GaussRule>> {
    if n == 0 || n > MAX_NODES {
        return Err(Error::Numeric(format!(
            "Gauss rule with {n} nodes requested (limit {MAX_NODES})"
        )));
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussRule>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("gauss rule cache poisoned");
    Ok(guard
        .entry(n)
        .or_insert_with(|| Arc::new(GaussRule::build(n)))
        .clone())
}

/// Panels `[breaks[b], breaks[b+1]]` with a Gauss rule on each.
#[derive(Debug, Clone)]
pub struct PanelGrid {
    breaks: Vec<f64>,
    rule: Arc<GaussRule>,
    nodes: Vec<f64>,
}

impl PanelGrid {
    /// `breaks` must be strictly increasing with at least two entries.
    pub fn new(breaks: Vec<f64>, nodes_per_panel: usize) -> Result<Self> {
        if breaks.len() < 2 {
            return Err(Error::Numeric("panel grid needs at least one panel".into()));
        }
        if breaks.len() - 1 > MAX_PANELS {
            return Err(Error::Numeric(format!(
                "panel refinement exceeds cap: {} panels (limit {MAX_PANELS})",
                breaks.len() - 1
            )));
        }
        if breaks
            .windows(2)
            .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
        {
            return Err(Error::Numeric(
                "panel breaks must be strictly increasing".into(),
            ));
        }
        let rule = gauss_rule(nodes_per_panel)?;
        let mut nodes = Vec::with_capacity((breaks.len() - 1) * rule.len());
        for w in breaks.windows(2) {
            let (mid, half) = (0.5 * (w[0] + w[1]), 0.5 * (w[1] - w[0]));
            nodes.extend(rule.nodes.iter().map(|&x| mid + half * x));
        }
        Ok(PanelGrid {
            breaks,
            rule,
            nodes,
        })
    }

    /// Splits `[a, b]` at `interior` points (any order, duplicates and
    /// points outside `(a, b)` dropped), then subdivides every resulting
    /// panel into `subdivisions` equal parts.
    pub fn with_breakpoints(
        a: f64,
        b: f64,
        interior: &[f64],
        subdivisions: usize,
        nodes_per_panel: usize,
    ) -> Result<Self> {
        let mut pts: Vec<f64> = interior
            .iter()
            .copied()
            .filter(|&x| x > a && x < b)
            .collect();
        pts.sort_by(|x, y| x.partial_cmp(y).expect("finite break points"));
        pts.dedup();
        let mut coarse = Vec::with_capacity(pts.len() + 2);
        coarse.push(a);
        coarse.extend(pts);
        coarse.push(b);

        let subdivisions = subdivisions.max(1);
        let panels = (coarse.len() - 1).saturating_mul(subdivisions);
        if panels > MAX_PANELS {
            return Err(Error::Numeric(format!(
                "panel refinement exceeds cap: {panels} panels (limit {MAX_PANELS})"
            )));
        }
        let mut breaks = Vec::with_capacity(panels + 1);
        breaks.push(a);
        for w in coarse.windows(2) {
            let h = (w[1] - w[0]) / subdivisions as f64;
            for s in 1..subdivisions {
                breaks.push(w[0] + s as f64 * h);
            }
            breaks.push(w[1]);
        }
        PanelGrid::new(breaks, nodes_per_panel)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn panels(&self) -> usize {
        self.breaks.len() - 1
    }

    pub fn nodes_per_panel(&self) -> usize {
        self.rule.len()
    }

    /// ∫ f over the grid given `f` sampled at [`Self::nodes`].
    pub fn integrate(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.nodes.len());
        let n = self.rule.len();
        let mut total = 0.0;
        for (w, chunk) in self.breaks.windows(2).zip(values.chunks_exact(n)) {
            let half = 0.5 * (w[1] - w[0]);
            let s: f64 = self
                .rule
                .weights
                .iter()
                .zip(chunk)
                .map(|(a, b)| a * b)
                .sum();
            total += half * s;
        }
        total
    }

    /// Running antiderivative `F(x_q) = ∫_a^{x_q} f` at every node, written to `out`.
    pub fn cumulative(&self, values: &[f64], out: &mut [f64]) {
        debug_assert_eq!(values.len(), self.nodes.len());
        debug_assert_eq!(out.len(), self.nodes.len());
        let n = self.rule.len();
        let mut base = 0.0;
        for ((w, chunk), dst) in self
            .breaks
            .windows(2)
            .zip(values.chunks_exact(n))
            .zip(out.chunks_exact_mut(n))
        {
            let half = 0.5 * (w[1] - w[0]);
            for (q, d) in dst.iter_mut().enumerate() {
                let row = &self.rule.integ[q * n..(q + 1) * n];
                let s: f64 = row.iter().zip(chunk).map(|(a, b)| a * b).sum();
                *d = base + half * s;
            }
            let s: f64 = self
                .rule
                .weights
                .iter()
                .zip(chunk)
                .map(|(a, b)| a * b)
                .sum();
            base += half * s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = gauss_rule(16).unwrap();
        for deg in 0..=31u32 {
            let s: f64 = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(x, w)| w * x.powi(deg as i32))
                .sum();
            let exact = if deg % 2 == 1 {
                0.0
            } else {
                2.0 / (deg as f64 + 1.0)
            };
            assert_abs_diff_eq!(s, exact, epsilon = 1e-14);
        }
    }

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 16, 64, 200] {
            let rule = gauss_rule(n).unwrap();
            let s: f64 = rule.weights.iter().sum();
            assert_abs_diff_eq!(s, 2.0, epsilon = 1e-13);
            assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn cumulative_is_exact_below_node_count() {
        let grid = PanelGrid::with_breakpoints(0.0, 2.0, &[0.5], 3, 16).unwrap();
        let f: Vec<f64> = grid.nodes().iter().map(|&x| x.powi(15) - 3.0 * x).collect();
        let mut out = vec![0.0; f.len()];
        grid.cumulative(&f, &mut out);
        for (&x, &v) in grid.nodes().iter().zip(&out) {
            let exact = x.powi(16) / 16.0 - 1.5 * x * x;
            assert_abs_diff_eq!(v, exact, epsilon = 1e-11);
        }
        assert_abs_diff_eq!(
            grid.integrate(&f),
            2f64.powi(16) / 16.0 - 6.0,
            epsilon = 1e-10
        );
    }

    #[test]
    fn rejects_oversized_requests() {
        assert!(gauss_rule(0).is_err());
        assert!(gauss_rule(MAX_NODES + 1).is_err());
        assert!(PanelGrid::with_breakpoints(0.0, 1.0, &[], MAX_PANELS + 1, 4).is_err());
    }
}
