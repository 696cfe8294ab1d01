//! Weight functions and the kernel `K(t₁,…,t_k)` of an iterated integral.

use serde::{Deserialize, Serialize};

use crate::basis::Interval;
use crate::error::{Error, Result};

/// Polynomial weight `ψ(s) = Σ_q c_q (s − t)^q`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Weight {
    #[serde(rename = "poly")]
    coeffs: Vec<f64>,
}

impl Weight {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain(
                "weight polynomial needs at least one coefficient",
            ));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("weight coefficients must be finite"));
        }
        Ok(Weight { coeffs })
    }

    /// `ψ ≡ 1`.
    pub fn one() -> Self {
        Weight { coeffs: vec![1.0] }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Horner evaluation at offset `u = s − t`.
    pub(crate) fn eval_offset(&self, u: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * u + c)
    }
}

pub fn eval_weight(w: &Weight, s: f64, iv: &Interval) -> Result<f64> {
    iv.check(s)?;
    Ok(w.eval_offset(s - iv.start()))
}

/// The iterated integral `J[ψ^{(k)}]_{T,t}`: interval, Wiener component per
/// level (`0` selects `ds`) and weight per level, innermost first.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralSpec {
    interval: Interval,
    indices: Vec<usize>,
    weights: Vec<Weight>,
}

impl IntegralSpec {
    pub fn new(interval: Interval, indices: Vec<usize>, weights: Vec<Weight>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::config(
                "indices",
                "multiplicity k must be at least 1",
            ));
        }
        if indices.len() != weights.len() {
            return Err(Error::config(
                "weights",
                format!(
                    "{} weights given for {} indices",
                    weights.len(),
                    indices.len()
                ),
            ));
        }
        Ok(IntegralSpec {
            interval,
            indices,
            weights,
        })
    }

    /// All weights `ψ ≡ 1`.
    pub fn unit_weights(interval: Interval, indices: Vec<usize>) -> Result<Self> {
        let k = indices.len();
        IntegralSpec::new(interval, indices, vec![Weight::one(); k])
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Smallest Wiener dimension `m` this spec needs.
    pub fn dimension(&self) -> usize {
        self.indices.iter().copied().max().unwrap_or(0)
    }

    pub fn all_stochastic(&self) -> bool {
        self.indices.iter().all(|&i| i >= 1)
    }
}

/// JSON form: `{"t":…, "T":…, "k":…, "indices":[…], "weights":[{"poly":[…]}, …]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegralSpecJson {
    pub t: f64,
    #[serde(rename = "T")]
    pub end: f64,
    pub k: usize,
    pub indices: Vec<usize>,
    pub weights: Vec<Weight>,
}

impl TryFrom<IntegralSpecJson> for IntegralSpec {
    type Error = Error;

    fn try_from(j: IntegralSpecJson) -> Result<Self> {
        let interval = Interval::new(j.t, j.end).map_err(|e| Error::config("T", e.to_string()))?;
        if j.k != j.indices.len() {
            return Err(Error::config(
                "indices",
                format!("k = {} but {} indices given", j.k, j.indices.len()),
            ));
        }
        for (q, w) in j.weights.iter().enumerate() {
            Weight::new(w.coeffs.clone())
                .map_err(|e| Error::config(format!("weights[{q}].poly"), e.to_string()))?;
        }
        IntegralSpec::new(interval, j.indices, j.weights)
    }
}

impl From<&IntegralSpec> for IntegralSpecJson {
    fn from(s: &IntegralSpec) -> Self {
        IntegralSpecJson {
            t: s.interval.start(),
            end: s.interval.end(),
            k: s.k(),
            indices: s.indices.clone(),
            weights: s.weights.clone(),
        }
    }
}

impl Serialize for IntegralSpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        IntegralSpecJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntegralSpec {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = IntegralSpecJson::deserialize(deserializer)?;
        IntegralSpec::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// `K(t₁,…,t_k) = ∏ψ_l(t_l)` on `t₁ < … < t_k`, zero elsewhere.
pub fn eval_kernel(spec: &IntegralSpec, point: &[f64]) -> Result<f64> {
    if point.len() != spec.k() {
        return Err(Error::Arity {
            expected: spec.k(),
            got: point.len(),
        });
    }
    for &s in point {
        spec.interval.check(s)?;
    }
    if point.windows(2).any(|w| w[0] >= w[1]) {
        return Ok(0.0);
    }
    let t = spec.interval.start();
    Ok(spec
        .weights
        .iter()
        .zip(point)
        .map(|(w, &s)| w.eval_offset(s - t))
        .product())
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Antiderivative vanishing at 0.
fn poly_integrate(a: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + 1);
    out.push(0.0);
    out.extend(a.iter().enumerate().map(|(q, &c)| c / (q + 1) as f64));
    out
}

fn poly_eval(a: &[f64], u: f64) -> f64 {
    a.iter().rev().fold(0.0, |acc, &c| acc * u + c)
}

/// `∫_{[t,T]^k} K²`, by exact iterated integration of polynomials in `s − t`.
pub fn kernel_l2_norm_sq(spec: &IntegralSpec) -> f64 {
    let mut inner = vec![1.0];
    for w in &spec.weights {
        let sq = poly_mul(w.coeffs(), w.coeffs());
        inner = poly_integrate(&poly_mul(&sq, &inner));
    }
    poly_eval(&inner, spec.interval.length())
}
