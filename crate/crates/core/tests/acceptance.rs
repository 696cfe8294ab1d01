//! Acceptance criteria 1–9. Runs without the libtest harness so that the
//! `criterion N: PASS|FAIL` lines always show; exits nonzero if any fails.

use std::path::Path;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use ito_fourier::basis::{gram_matrix, BasisSystem, Interval};
use ito_fourier::coefficients::{coefficient_tensor, parseval_residual, CoefficientTensor};
use ito_fourier::expansion::{explicit_expansion, hermite_reference, truncated_expansion};
use ito_fourier::kernel::{IntegralSpec, Weight};
use ito_fourier::partitions::{pair_partitions, partition_count};
use ito_fourier::stochastic::GaussianPool;
use ito_fourier::validation::estimate_with_tensor;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

static LINES: Mutex<[Option<String>; 10]> = Mutex::new([const { None }; 10]);

fn verdict(n: u32, ok: bool, detail: &str) {
    let word = if ok { "PASS" } else { "FAIL" };
    LINES.lock().unwrap()[n as usize] = Some(format!("criterion {n}: {word} ({detail})"));
    assert!(ok, "criterion {n} failed: {detail}");
}

fn main() {
    let criteria: [fn(); 9] = [
        ac1_partition_enumeration,
        ac2_orthonormality,
        ac3_symmetrization_relations,
        ac4_general_formula_matches_explicit_formulas,
        ac5_finite_order_hermite_identity,
        ac6_parseval_residuals,
        ac7_strong_monte_carlo,
        ac8_moment_bounds,
        ac9_cli_thread_count_invariance,
    ];
    let handles: Vec<_> = criteria.into_iter().map(std::thread::spawn).collect();
    let mut failed = 0;
    for (n, h) in (1..).zip(handles) {
        let ok = h.join().is_ok();
        let line = LINES.lock().unwrap()[n].take();
        match line {
            Some(l) => println!("{l}"),
            None => println!("criterion {n}: FAIL (aborted before a verdict)"),
        }
        failed += usize::from(!ok);
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

/// Uniform on [0, 1).
fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

fn below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1 = 1.0 - uniform(rng);
    let u2 = uniform(rng);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn random_pool(
    rng: &mut ChaCha8Rng,
    iv: Interval,
    basis: BasisSystem,
    m: usize,
    jmax: usize,
) -> GaussianPool {
    let rows = (0..m)
        .map(|_| (0..=jmax).map(|_| normal(rng)).collect())
        .collect();
    GaussianPool::from_rows(iv, basis, jmax, rows).unwrap()
}

fn ones(iv: Interval, indices: Vec<usize>) -> IntegralSpec {
    IntegralSpec::unit_weights(iv, indices).unwrap()
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn ac1_partition_enumeration() {
    let start = Instant::now();
    let mut ok = true;
    let worked = [
        ((2, 1), 1),
        ((4, 2), 3),
        ((4, 1), 6),
        ((5, 1), 10),
        ((5, 2), 15),
    ];
    for ((k, r), want) in worked {
        ok &= pair_partitions(k, r).unwrap().len() == want;
    }
    for k in 1..=10usize {
        for r in 0..=k / 2 {
            let want = factorial(k as u64)
                / (2u64.pow(r as u32) * factorial(r as u64) * factorial((k - 2 * r) as u64));
            let list = pair_partitions(k, r).unwrap();
            let mut distinct = list.clone();
            distinct.dedup();
            let valid = list.iter().all(|p| {
                let mut used: Vec<usize> = p
                    .pairs
                    .iter()
                    .flat_map(|&(a, b)| [a, b])
                    .chain(p.singles.iter().copied())
                    .collect();
                used.sort();
                p.pairs.len() == r && used == (1..=k).collect::<Vec<_>>()
            });
            ok &= list.len() as u64 == want && distinct.len() == list.len() && valid;
            ok &= partition_count(k, r).unwrap() == want;
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(1);
    verdict(
        1,
        ok,
        &format!("worked counts and k ≤ 10 closed form, {elapsed:?}"),
    );
}

fn ac2_orthonormality() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for system in [BasisSystem::Legendre, BasisSystem::Trigonometric] {
        for iv in [Interval::unit(), Interval::new(-1.0, 2.5).unwrap()] {
            let g = gram_matrix(system, 20, &iv).unwrap();
            for (i, row) in g.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    worst = worst.max((v - if i == j { 1.0 } else { 0.0 }).abs());
                }
            }
        }
    }
    let mut haar_exact = true;
    for iv in [Interval::unit(), Interval::new(0.3, 1.8).unwrap()] {
        let g = gram_matrix(BasisSystem::Haar, 63, &iv).unwrap();
        for (i, row) in g.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                haar_exact &= v == if i == j { 1.0 } else { 0.0 };
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = worst <= 1e-10 && haar_exact && elapsed < Duration::from_secs(1);
    verdict(
        2,
        ok,
        &format!("smooth max deviation {worst:.2e} ≤ 1e-10, Haar p = 63 exact: {haar_exact}, {elapsed:?}"),
    );
}

fn ac3_symmetrization_relations() {
    let tol = 1e-10;
    let mut worst: f64 = 0.0;
    let cases = [
        (Interval::unit(), Weight::one()),
        (
            Interval::new(0.5, 2.0).unwrap(),
            Weight::new(vec![0.5, 1.0]).unwrap(),
        ),
    ];
    for basis in [BasisSystem::Legendre, BasisSystem::Trigonometric] {
        for (iv, w) in &cases {
            let spec = |k: usize| IntegralSpec::new(*iv, vec![1; k], vec![w.clone(); k]).unwrap();
            let c1 = coefficient_tensor(&spec(1), basis, &[10]).unwrap();
            let c2 = coefficient_tensor(&spec(2), basis, &[10, 10]).unwrap();
            let c3 = coefficient_tensor(&spec(3), basis, &[10, 10, 10]).unwrap();
            let c = |j: usize| c1.get(&[j]).unwrap();
            for a in 0..=10 {
                for b in 0..=10 {
                    let lhs = c2.get(&[a, b]).unwrap() + c2.get(&[b, a]).unwrap();
                    worst = worst.max((lhs - c(a) * c(b)).abs());
                    for d in 0..=10 {
                        let perms = [
                            [a, b, d],
                            [a, d, b],
                            [b, a, d],
                            [b, d, a],
                            [d, a, b],
                            [d, b, a],
                        ];
                        let sum: f64 = perms.iter().map(|p| c3.get(p).unwrap()).sum();
                        worst = worst.max((sum - c(a) * c(b) * c(d)).abs());
                    }
                }
                worst = worst.max((2.0 * c2.get(&[a, a]).unwrap() - c(a).powi(2)).abs());
                worst = worst.max((6.0 * c3.get(&[a, a, a]).unwrap() - c(a).powi(3)).abs());
            }
        }
    }
    verdict(
        3,
        worst <= tol,
        &format!("max deviation {worst:.2e} ≤ {tol:.0e}, j ≤ 10"),
    );
}

fn ac4_general_formula_matches_explicit_formulas() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    let iv = Interval::new(0.0, 1.5).unwrap();
    for k in 1..=7 {
        for _ in 0..100 {
            let indices: Vec<usize> = (0..k).map(|_| below(&mut rng, 4)).collect();
            let orders: Vec<usize> = (0..k).map(|_| below(&mut rng, 4)).collect();
            let n: usize = orders.iter().map(|p| p + 1).product();
            let values = (0..n).map(|_| 2.0 * uniform(&mut rng) - 1.0).collect();
            let t = CoefficientTensor::from_values(
                ones(iv, indices),
                BasisSystem::Legendre,
                orders,
                values,
            )
            .unwrap();
            let pool = random_pool(&mut rng, iv, BasisSystem::Legendre, 3, 3);
            let a = truncated_expansion(&t, &pool).unwrap().value;
            let b = explicit_expansion(&t, &pool).unwrap().value;
            worst = worst.max((a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE));
        }
    }
    let elapsed = start.elapsed();
    let ok = worst <= 1e-12 && elapsed < Duration::from_secs(30);
    verdict(
        4,
        ok,
        &format!("max relative error {worst:.2e} ≤ 1e-12 over 700 instances, {elapsed:?}"),
    );
}

fn ac5_finite_order_hermite_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    let cases = [
        (Interval::unit(), Weight::one()),
        (
            Interval::new(0.25, 1.5).unwrap(),
            Weight::new(vec![0.5, 1.0]).unwrap(),
        ),
    ];
    for (iv, w) in &cases {
        let single = IntegralSpec::new(*iv, vec![1], vec![w.clone()]).unwrap();
        let c1 = coefficient_tensor(&single, BasisSystem::Legendre, &[6]).unwrap();
        for k in 2..=7 {
            let spec = IntegralSpec::new(*iv, vec![1; k], vec![w.clone(); k]).unwrap();
            let full = coefficient_tensor(&spec, BasisSystem::Legendre, &vec![6; k]).unwrap();
            for p in 0..=6 {
                let t = if p == 6 {
                    full.clone()
                } else {
                    coefficient_tensor(&spec, BasisSystem::Legendre, &vec![p; k]).unwrap()
                };
                let trials = if k == 7 && p == 6 { 100 } else { 100 / 7 + 1 };
                for _ in 0..trials {
                    let pool = random_pool(&mut rng, *iv, BasisSystem::Legendre, 1, 6);
                    let delta: f64 = (0..=p)
                        .map(|j| c1.get(&[j]).unwrap() * pool.get(1, j))
                        .sum();
                    let cap: f64 = (0..=p).map(|j| c1.get(&[j]).unwrap().powi(2)).sum();
                    let want = hermite_reference(k, delta, cap).unwrap();
                    let got = truncated_expansion(&t, &pool).unwrap().value;
                    let fact: f64 = (1..=k).map(|x| x as f64).product();
                    let scale = want
                        .abs()
                        .max((delta.abs() + cap.sqrt()).powi(k as i32) / fact);
                    worst = worst.max((got - want).abs() / scale);
                }
            }
        }
    }
    verdict(
        5,
        worst <= 1e-10,
        &format!("max relative error {worst:.2e} ≤ 1e-10, k = 2..7, p = 0..6"),
    );
}

fn ac6_parseval_residuals() {
    let spec = ones(Interval::unit(), vec![1, 2]);
    let res = |p: usize| {
        let t = coefficient_tensor(&spec, BasisSystem::Legendre, &[p, p]).unwrap();
        parseval_residual(&spec, &t).unwrap().value
    };
    // ∫K² = 1/2; C₀₀ = 1/2, C₁₀ = −C₀₁ = 1/(2√3), C₁₁ = 0
    let want0 = 0.5 - 0.25;
    let want1 = 0.5 - 0.25 - 2.0 / 12.0;
    let seq: Vec<f64> = (0..=12).map(res).collect();
    let monotone = seq.windows(2).all(|w| w[1] <= w[0] + 1e-15);
    let ok = (seq[0] - want0).abs() <= 1e-10
        && (seq[1] - want1).abs() <= 1e-10
        && monotone
        && seq[12] < 0.025;
    verdict(
        6,
        ok,
        &format!(
            "r(0) = {:.12}, r(1) = {:.12}, r(12) = {:.5}, monotone: {monotone}",
            seq[0], seq[1], seq[12]
        ),
    );
}

fn ac7_strong_monte_carlo() {
    let start = Instant::now();
    let spec = ones(Interval::unit(), vec![1, 2]);
    let t = coefficient_tensor(&spec, BasisSystem::Legendre, &[0, 0]).unwrap();
    let r = estimate_with_tensor(&t, 10_000, 4096, 2024, None).unwrap();
    let elapsed = start.elapsed();
    let gap = (r.mean_sq_diff - 0.25).abs();
    let ok = gap <= 3.0 * r.std_error + r.grid_allowance && elapsed < Duration::from_secs(120);
    verdict(
        7,
        ok,
        &format!(
            "E[D²] ≈ {:.5} ± {:.5}, |gap to 0.25| = {gap:.5} ≤ 3 SE + {:.5}, {elapsed:?}",
            r.mean_sq_diff, r.std_error, r.grid_allowance
        ),
    );
}

fn ac8_moment_bounds() {
    let mut ok = true;
    let mut details = Vec::new();
    let configs: [(Vec<usize>, usize); 4] = [
        (vec![1, 2], 0),
        (vec![1, 1], 0),
        (vec![1, 1], 2),
        (vec![1, 1], 6),
    ];
    for (indices, p) in configs {
        let spec = ones(Interval::unit(), indices.clone());
        let t = coefficient_tensor(&spec, BasisSystem::Legendre, &[p, p]).unwrap();
        let r = estimate_with_tensor(&t, 4000, 1024, 88, Some(2)).unwrap();
        let m = r.moment.as_ref().unwrap();
        // k = 2, n = 2: (2!)⁴ (2·3)² · 3 · r² = 1728 r²
        let bound4 = 1728.0 * r.parseval.powi(2);
        let second = r.mean_sq_diff <= 2.0 * r.parseval + 3.0 * r.std_error + r.grid_allowance;
        let fourth =
            m.moment <= bound4 + m.grid_allowance && (m.bound - bound4).abs() <= 1e-12 * bound4;
        ok &= second && fourth;
        details.push(format!(
            "{indices:?} p={p}: E[D²] {:.2e} vs 2r {:.2e}, E[D⁴] {:.2e} vs {:.2e}",
            r.mean_sq_diff,
            2.0 * r.parseval,
            m.moment,
            bound4
        ));
    }
    verdict(8, ok, &details.join("; "));
}

fn cli(args: &[&str], dir: &Path) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ito-fourier"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn ac9_cli_thread_count_invariance() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("run.json"),
        r#"{"spec":{"t":0.0,"T":1.0,"k":2,"indices":[1,1],"weights":[{"poly":[1.0]},{"poly":[0.5,1.0]}]},"basis":"legendre","orders":[3,3]}"#,
    )
    .unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["coeffs", "--config", "run.json", "--out", "OUT"],
        vec![
            "coeffs", "--config", "run.json", "--basis", "haar", "--orders", "7,7", "--out", "OUT",
        ],
        vec![
            "approximate",
            "--config",
            "run.json",
            "--seed",
            "7",
            "--out",
            "OUT",
        ],
        vec!["partitions", "--k", "6", "--out", "OUT"],
        vec![
            "validate", "--config", "run.json", "--paths", "300", "--steps", "256", "--seed", "9",
            "--moment", "2", "--out", "OUT",
        ],
        vec!["bases", "--jmax", "4", "--out", "OUT"],
    ];
    let mut ok = true;
    for cmd in &commands {
        let mut outputs = Vec::new();
        for threads in ["1", "8"] {
            let name = format!("out-{threads}");
            let mut args = vec!["--threads", threads];
            args.extend(
                cmd.iter()
                    .map(|a| if *a == "OUT" { name.as_str() } else { a }),
            );
            let run = cli(&args, d);
            ok &= run.status.code() == Some(0);
            outputs.push(std::fs::read(d.join(&name)).unwrap_or_default());
        }
        ok &= !outputs[0].is_empty() && outputs[0] == outputs[1];
    }
    verdict(
        9,
        ok,
        &format!(
            "{} commands byte-identical at --threads 1 and 8",
            commands.len()
        ),
    );
}
