//! Truncated multiple Fourier–Hermite expansion of an iterated integral.

use serde::Serialize;

use crate::coefficients::CoefficientTensor;
use crate::error::{Error, Result};
use crate::explicit;
use crate::numeric::CompensatedSum;
use crate::stochastic::GaussianPool;

/// Largest multiplicity the general formula accepts.
pub const MAX_EXPANSION_K: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionResult {
    pub value: f64,
    /// `∏(p_l + 1)`
    pub terms_evaluated: usize,
    pub orders: Vec<usize>,
}

fn check_pool(tensor: &CoefficientTensor, pool: &GaussianPool) -> Result<()> {
    let spec = tensor.spec();
    if pool.interval() != spec.interval() {
        return Err(Error::Compatibility(
            "pool and tensor intervals differ".into(),
        ));
    }
    if pool.basis() != tensor.basis() {
        return Err(Error::Compatibility(format!(
            "pool basis {} differs from tensor basis {}",
            pool.basis(),
            tensor.basis()
        )));
    }
    if pool.m() < spec.dimension() {
        return Err(Error::Compatibility(format!(
            "pool has {} components, spec uses {}",
            pool.m(),
            spec.dimension()
        )));
    }
    if pool.jmax() < tensor.max_order() {
        return Err(Error::Compatibility(format!(
            "pool covers j ≤ {}, tensor needs j ≤ {}",
            pool.jmax(),
            tensor.max_order()
        )));
    }
    Ok(())
}

/// Visits every multi-index in storage order (`j₁` fastest) with its coefficient.
fn for_each_tuple(tensor: &CoefficientTensor, mut f: impl FnMut(&[usize], f64)) {
    let orders = tensor.orders();
    let mut j = vec![0usize; orders.len()];
    for &c in tensor.values() {
        f(&j, c);
        for (jl, &p) in j.iter_mut().zip(orders) {
            if *jl < p {
                *jl += 1;
                break;
            }
            *jl = 0;
        }
    }
}

/// Signed sum over all admissible pairings of the positions in `mask`:
/// the lowest position is either kept as a factor `ζ` or paired with a
/// matching partner, which contributes `−1`.
fn pairing_sum(mask: u32, zeta: &[f64], partners: &[u32]) -> f64 {
    if mask == 0 {
        return 1.0;
    }
    let q = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << q);
    let mut v = zeta[q] * pairing_sum(rest, zeta, partners);
    let mut m = partners[q] & rest;
    while m != 0 {
        let q2 = m.trailing_zeros();
        v -= pairing_sum(rest & !(1 << q2), zeta, partners);
        m &= m - 1;
    }
    v
}

/// Bracket multiplying `C_{j_k…j_1}`: the product of the pooled values plus
/// every pairing correction. Positions pair when `i_g = i_g' ≠ 0` and
/// `j_g = j_g'`.
pub fn bracket(indices: &[usize], jtuple: &[usize], pool: &GaussianPool) -> f64 {
    let k = indices.len();
    debug_assert!(k <= MAX_EXPANSION_K && jtuple.len() == k);
    let mut zeta = [0.0; MAX_EXPANSION_K];
    let mut partners = [0u32; MAX_EXPANSION_K];
    let mut any = false;
    for a in 0..k {
        zeta[a] = pool.get(indices[a], jtuple[a]);
        for b in a + 1..k {
            if indices[a] != 0 && indices[a] == indices[b] && jtuple[a] == jtuple[b] {
                partners[a] |= 1 << b;
                any = true;
            }
        }
    }
    if !any {
        return zeta[..k].iter().product();
    }
    pairing_sum((1u32 << k) - 1, &zeta[..k], &partners[..k])
}

/// `Σ_j C_j · bracket(j)` over the whole tensor.
pub fn truncated_expansion(
    tensor: &CoefficientTensor,
    pool: &GaussianPool,
) -> Result<ExpansionResult> {
    let k = tensor.spec().k();
    if k > MAX_EXPANSION_K {
        return Err(Error::UnsupportedMultiplicity(k));
    }
    check_pool(tensor, pool)?;
    let indices = tensor.spec().indices();
    let mut sum = CompensatedSum::new();
    for_each_tuple(tensor, |j, c| {
        if c != 0.0 {
            sum.add(c * bracket(indices, j, pool));
        }
    });
    finish(tensor, sum.value())
}

/// Same sum, with each bracket written out as the fixed list of products for
/// `k ≤ 7`.
pub fn explicit_expansion(
    tensor: &CoefficientTensor,
    pool: &GaussianPool,
) -> Result<ExpansionResult> {
    let k = tensor.spec().k();
    let terms = explicit::terms(k).ok_or(Error::UnsupportedMultiplicity(k))?;
    check_pool(tensor, pool)?;
    let i = tensor.spec().indices();
    let mut sum = CompensatedSum::new();
    for_each_tuple(tensor, |j, c| {
        let mut b = 0.0;
        for t in terms {
            let on = t.pairs.iter().all(|&(g, h)| {
                let (g, h) = (g - 1, h - 1);
                i[g] == i[h] && i[g] != 0 && j[g] == j[h]
            });
            if on {
                let prod: f64 = t
                    .singles
                    .iter()
                    .map(|&q| pool.get(i[q - 1], j[q - 1]))
                    .product();
                b += t.sign() * prod;
            }
        }
        sum.add(c * b);
    });
    finish(tensor, sum.value())
}

fn finish(tensor: &CoefficientTensor, value: f64) -> Result<ExpansionResult> {
    if !value.is_finite() {
        return Err(Error::Numeric("expansion value is not finite".into()));
    }
    Ok(ExpansionResult {
        value,
        terms_evaluated: tensor.len(),
        orders: tensor.orders().to_vec(),
    })
}

/// `(δ^k − …)/k!`: coefficients of `δ^{k−2m} Δ^m`, `m = 0, 1, …`.
const HERMITE: [&[f64]; 7] = [
    &[1.0],
    &[1.0, -1.0],
    &[1.0, -3.0],
    &[1.0, -6.0, 3.0],
    &[1.0, -10.0, 15.0],
    &[1.0, -15.0, 45.0, -15.0],
    &[1.0, -21.0, 105.0, -105.0],
];

/// Closed form of `J` when all indices and weights coincide, in terms of
/// `δ = Σ C_j ζ_j` and `Δ = Σ C_j²`.
pub fn hermite_reference(k: usize, delta: f64, cap_delta: f64) -> Result<f64> {
    if !(1..=HERMITE.len()).contains(&k) {
        return Err(Error::UnsupportedMultiplicity(k));
    }
    if !delta.is_finite() || !cap_delta.is_finite() || cap_delta < 0.0 {
        return Err(Error::domain("Δ must be finite and nonnegative, δ finite"));
    }
    let fact: f64 = (1..=k).map(|x| x as f64).product();
    let value: f64 = HERMITE[k - 1]
        .iter()
        .enumerate()
        .map(|(m, &c)| c * delta.powi((k - 2 * m) as i32) * cap_delta.powi(m as i32))
        .sum();
    Ok(value / fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{BasisSystem, Interval};
    use crate::coefficients::coefficient_tensor;
    use crate::kernel::IntegralSpec;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn pool(rows: Vec<Vec<f64>>) -> GaussianPool {
        let jmax = rows[0].len() - 1;
        GaussianPool::from_rows(Interval::unit(), BasisSystem::Legendre, jmax, rows).unwrap()
    }

    fn tensor(indices: Vec<usize>, orders: Vec<usize>, values: Vec<f64>) -> CoefficientTensor {
        let spec = IntegralSpec::unit_weights(Interval::unit(), indices).unwrap();
        CoefficientTensor::from_values(spec, BasisSystem::Legendre, orders, values).unwrap()
    }

    #[test]
    fn single_integral() {
        let iv = Interval::new(0.0, 2.0).unwrap();
        let spec = IntegralSpec::unit_weights(iv, vec![1]).unwrap();
        let c = 2f64.sqrt();
        let t =
            CoefficientTensor::from_values(spec, BasisSystem::Legendre, vec![0], vec![c]).unwrap();
        let p = GaussianPool::from_rows(iv, BasisSystem::Legendre, 0, vec![vec![0.8]]).unwrap();
        assert_abs_diff_eq!(truncated_expansion(&t, &p).unwrap().value, c * 0.8);
        assert_abs_diff_eq!(explicit_expansion(&t, &p).unwrap().value, c * 0.8);
    }

    #[test]
    fn repeated_index_correction() {
        let t = tensor(vec![1, 1], vec![0, 0], vec![0.5]);
        let p = pool(vec![vec![1.7]]);
        let r = truncated_expansion(&t, &p).unwrap();
        assert_abs_diff_eq!(r.value, 0.5 * (1.7 * 1.7 - 1.0), epsilon = 1e-15);
        assert_eq!(r.terms_evaluated, 1);
        assert_eq!(r.orders, vec![0, 0]);
    }

    #[test]
    fn zero_tensor() {
        let t = tensor(vec![1, 2, 1], vec![1, 1, 1], vec![0.0; 8]);
        let p = pool(vec![vec![0.3, -1.1], vec![2.0, 0.4]]);
        assert_eq!(truncated_expansion(&t, &p).unwrap().value, 0.0);
    }

    #[test]
    fn two_distinct_components_legendre() {
        let spec = IntegralSpec::unit_weights(Interval::unit(), vec![1, 2]).unwrap();
        let t = coefficient_tensor(&spec, BasisSystem::Legendre, &[1, 1]).unwrap();
        let (a, b, c, d) = (0.9, -0.4, 1.3, 0.25);
        let p = pool(vec![vec![a, b], vec![c, d]]);
        // C₁₀ = ∫φ₁(s)·s ds = h and C₀₁ = ∫(∫₀^s φ₁) ds = −h, with C_{j₂j₁}
        let h = 1.0 / (2.0 * 3f64.sqrt());
        let want = 0.5 * a * c + h * a * d - h * b * c;
        assert_abs_diff_eq!(
            truncated_expansion(&t, &p).unwrap().value,
            want,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            explicit_expansion(&t, &p).unwrap().value,
            want,
            epsilon = 1e-14
        );
    }

    #[test]
    fn two_pairs_of_components() {
        let t = tensor(vec![1, 1, 2, 2], vec![0; 4], vec![1.5]);
        let (z, e) = (0.7, -1.9);
        let p = pool(vec![vec![z], vec![e]]);
        let want = 1.5 * (z * z - 1.0) * (e * e - 1.0);
        assert_abs_diff_eq!(
            explicit_expansion(&t, &p).unwrap().value,
            want,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            truncated_expansion(&t, &p).unwrap().value,
            want,
            epsilon = 1e-14
        );
    }

    #[test]
    fn time_components_never_pair() {
        let t = tensor(vec![0, 0], vec![0, 0], vec![1.0]);
        let p = pool(vec![vec![0.3]]);
        // row 0 is ∫φ₀ = 1 on [0,1]
        assert_eq!(truncated_expansion(&t, &p).unwrap().value, 1.0);
    }

    #[test]
    fn errors() {
        let t = tensor(vec![1, 2], vec![2, 2], vec![0.0; 9]);
        assert!(matches!(
            truncated_expansion(&t, &pool(vec![vec![0.0; 3]])),
            Err(Error::Compatibility(_))
        ));
        assert!(matches!(
            truncated_expansion(&t, &pool(vec![vec![0.0; 2], vec![0.0; 2]])),
            Err(Error::Compatibility(_))
        ));
        let t8 = tensor(vec![1; 8], vec![0; 8], vec![1.0]);
        assert!(matches!(
            explicit_expansion(&t8, &pool(vec![vec![0.0]])),
            Err(Error::UnsupportedMultiplicity(8))
        ));
        assert!(truncated_expansion(&t8, &pool(vec![vec![0.0]])).is_ok());
        let t11 = tensor(vec![1; 11], vec![0; 11], vec![1.0]);
        assert!(matches!(
            truncated_expansion(&t11, &pool(vec![vec![0.0]])),
            Err(Error::UnsupportedMultiplicity(11))
        ));
    }

    #[test]
    fn hermite_examples() {
        assert_abs_diff_eq!(hermite_reference(2, 1.0, 1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(hermite_reference(3, 0.0, 5.0).unwrap(), 0.0);
        assert_abs_diff_eq!(hermite_reference(7, 1.0, 0.0).unwrap(), 1.0 / 5040.0);
        let (d, c) = (0.8f64, 1.3f64);
        let six =
            (d.powi(6) - 15.0 * d.powi(4) * c + 45.0 * d * d * c * c - 15.0 * c.powi(3)) / 720.0;
        assert_abs_diff_eq!(hermite_reference(6, d, c).unwrap(), six, epsilon = 1e-15);
        assert!(hermite_reference(0, 1.0, 1.0).is_err());
        assert!(hermite_reference(8, 1.0, 1.0).is_err());
        assert!(hermite_reference(2, 1.0, -1.0).is_err());
    }

    #[test]
    fn distinct_components_have_no_corrections() {
        let p = pool(vec![
            vec![0.3, -0.7, 1.1],
            vec![1.2, 0.1, -0.5],
            vec![-2.0, 0.6, 0.9],
        ]);
        let indices = [1, 2, 3];
        for j1 in 0..3 {
            for j2 in 0..3 {
                for j3 in 0..3 {
                    let prod = p.get(1, j1) * p.get(2, j2) * p.get(3, j3);
                    assert_eq!(bracket(&indices, &[j1, j2, j3], &p), prod);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn linear_in_tensor(
            vals in prop::collection::vec(-2.0f64..2.0, 27),
            other in prop::collection::vec(-2.0f64..2.0, 27),
            s in -3.0f64..3.0,
            zs in prop::collection::vec(-3.0f64..3.0, 6),
        ) {
            let p = pool(vec![zs[..3].to_vec(), zs[3..].to_vec()]);
            let idx = vec![1, 2, 1];
            let a = tensor(idx.clone(), vec![2, 2, 2], vals.clone());
            let b = tensor(idx.clone(), vec![2, 2, 2], other.clone());
            let mix: Vec<f64> = vals.iter().zip(&other).map(|(x, y)| x + s * y).collect();
            let ab = tensor(idx, vec![2, 2, 2], mix);
            let lhs = truncated_expansion(&ab, &p).unwrap().value;
            let rhs = truncated_expansion(&a, &p).unwrap().value + s * truncated_expansion(&b, &p).unwrap().value;
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
        }

        #[test]
        fn general_matches_explicit(
            k in 1usize..=5,
            seed_idx in prop::collection::vec(0usize..3, 5),
            vals in prop::collection::vec(-1.0f64..1.0, 32),
            zs in prop::collection::vec(-2.5f64..2.5, 6),
        ) {
            let idx = seed_idx[..k].to_vec();
            let t = tensor(idx, vec![1; k], vals[..1 << k].to_vec());
            let p = pool(vec![zs[..2].to_vec(), zs[2..4].to_vec(), zs[4..].to_vec()]);
            let a = truncated_expansion(&t, &p).unwrap().value;
            let b = explicit_expansion(&t, &p).unwrap().value;
            prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()));
        }
    }
}
