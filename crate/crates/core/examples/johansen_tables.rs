//! Regenerates `src/johansen/tables.rs`.
//!
//! Simulates the asymptotic null distributions of the Johansen trace and
//! maximum-eigenvalue statistics for 1..=12 common trends under all five
//! deterministic cases, by discretizing the Brownian functionals on a grid
//! of `STEPS` points.
//!
//!     cargo run --release -p vecmkit --example johansen_tables > crates/core/src/johansen/tables.rs

use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;
use vecmkit::simulate::{derive_seed, Rng};

const STEPS: usize = 1000;
const REPS: usize = 100_000;
const MAX_N: usize = 12;
const SEED: u64 = 20_240_917;

/// Upper-tail probabilities at which quantiles are tabulated.
const PROBS: [f64; 21] = [
    0.999, 0.995, 0.99, 0.975, 0.95, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.15, 0.1, 0.075, 0.05, 0.025, 0.01,
    0.005, 0.001,
];

// layout of the moment vector z_t = (ε, W_{t−1}, 1, t/T, (t/T)²)
const E0: usize = 0;
const W0: usize = MAX_N;
const ONE: usize = 2 * MAX_N;
const TR: usize = ONE + 1;
const TQ: usize = ONE + 2;
const DIM: usize = ONE + 3;

fn moments(seed: u64) -> DMatrix<f64> {
    let mut rng = Rng::new(seed);
    let mut m = DMatrix::<f64>::zeros(DIM, DIM);
    let mut w = [0.0; MAX_N];
    let mut z = [0.0; DIM];
    for t in 1..=STEPS {
        let u = t as f64 / STEPS as f64;
        for i in 0..MAX_N {
            z[E0 + i] = rng.normal();
            z[W0 + i] = w[i];
        }
        z[ONE] = 1.0;
        z[TR] = u;
        z[TQ] = u * u;
        for a in 0..DIM {
            let za = z[a];
            for b in a..DIM {
                m[(a, b)] += za * z[b];
            }
        }
        for i in 0..MAX_N {
            w[i] += z[E0 + i];
        }
    }
    for a in 0..DIM {
        for b in 0..a {
            m[(a, b)] = m[(b, a)];
        }
    }
    m
}

fn sub(m: &DMatrix<f64>, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
}

fn partial(m: &DMatrix<f64>, a: &[usize], b: &[usize], d: &[usize]) -> DMatrix<f64> {
    let mab = sub(m, a, b);
    if d.is_empty() {
        return mab;
    }
    let mdd_inv = sub(m, d, d).try_inverse().expect("deterministic block invertible");
    mab - sub(m, a, d) * mdd_inv * sub(m, d, b)
}

/// (levels block, unrestricted deterministics) for case 1..=5 with n trends.
fn blocks(case: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
    let w: Vec<usize> = (0..n).map(|i| W0 + i).collect();
    let w_short: Vec<usize> = (0..n - 1).map(|i| W0 + i).collect();
    match case {
        1 => (w, vec![]),
        2 => ([w, vec![ONE]].concat(), vec![]),
        3 => ([w_short, vec![TR]].concat(), vec![ONE]),
        4 => ([w, vec![TR]].concat(), vec![ONE]),
        5 => ([w_short, vec![TQ]].concat(), vec![ONE, TR]),
        _ => unreachable!(),
    }
}

/// [case][n−1] → (trace, max-eigen).
fn statistics(m: &DMatrix<f64>) -> Vec<Vec<(f64, f64)>> {
    (1..=5)
        .map(|case| {
            (1..=MAX_N)
                .map(|n| {
                    let e: Vec<usize> = (0..n).map(|i| E0 + i).collect();
                    let (f, d) = blocks(case, n);
                    let s00 = partial(m, &e, &e, &d);
                    let s01 = partial(m, &e, &f, &d);
                    let s11 = partial(m, &f, &f, &d);
                    let l0 = s00.cholesky().expect("S00 positive definite").l();
                    let a = l0.solve_lower_triangular(&s01).unwrap();
                    let s11_inv = s11.try_inverse().expect("S11 invertible");
                    let b = &a * s11_inv * a.transpose();
                    let b = (&b + b.transpose()) * 0.5;
                    let eig = SymmetricEigen::new(b).eigenvalues;
                    let t = STEPS as f64;
                    let terms: Vec<f64> = eig.iter().map(|l| -t * (1.0 - l.clamp(0.0, 1.0 - 1e-15)).ln()).collect();
                    let trace = terms.iter().sum();
                    let max = terms.iter().cloned().fold(0.0, f64::max);
                    (trace, max)
                })
                .collect()
        })
        .collect()
}

fn quantile(sorted: &[f64], upper_p: f64) -> f64 {
    let q = 1.0 - upper_p;
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    let w = pos - lo as f64;
    sorted[lo] * (1.0 - w) + sorted[hi] * w
}

fn main() {
    let reps: usize = std::env::var("REPS").ok().and_then(|v| v.parse().ok()).unwrap_or(REPS);
    let draws: Vec<Vec<Vec<(f64, f64)>>> = (0..reps as u64)
        .into_par_iter()
        .map(|j| statistics(&moments(derive_seed(SEED, j))))
        .collect();

    println!("//! Asymptotic Johansen trace and maximum-eigenvalue null distributions.");
    println!("//!");
    println!("//! Generated by `examples/johansen_tables.rs`: {reps} replications of the");
    println!("//! Brownian functionals discretized on {STEPS} steps, seed {SEED}.");
    println!("//! Do not edit by hand.");
    println!();
    println!("/// Upper-tail probabilities of the tabulated quantiles.");
    println!("pub const PROBS: [f64; {}] = {:?};", PROBS.len(), PROBS);
    println!();
    println!("pub struct Dist {{");
    println!("    pub quantiles: [f64; {}],", PROBS.len());
    println!("    pub mean: f64,");
    println!("    pub var: f64,");
    println!("}}");
    println!();
    for (name, pick) in [("TRACE", 0usize), ("MAX_EIGEN", 1usize)] {
        println!("/// Indexed [case − 1][trends − 1].");
        println!("pub static {name}: [[Dist; {MAX_N}]; 5] = [");
        for case in 0..5 {
            println!("    [");
            for n in 0..MAX_N {
                let mut v: Vec<f64> = draws
                    .iter()
                    .map(|d| if pick == 0 { d[case][n].0 } else { d[case][n].1 })
                    .collect();
                v.sort_by(f64::total_cmp);
                let mean = v.iter().sum::<f64>() / v.len() as f64;
                let var = v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (v.len() - 1) as f64;
                let qs: Vec<String> = PROBS.iter().map(|&p| format!("{:.4}", quantile(&v, p))).collect();
                println!(
                    "        Dist {{ quantiles: [{}], mean: {:.4}, var: {:.4} }},",
                    qs.join(", "),
                    mean,
                    var
                );
            }
            println!("    ],");
        }
        println!("];");
        println!();
    }
}
