//! Accuracy and timing against the platform math library.
//!
//! This is the only module of the workspace that calls platform
//! trigonometric functions; they serve purely as the comparison baseline.

use std::hint::black_box;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::eval::Function;
use crate::{tol_arg, CliError, Outcome};
use geomfree::analysis::arcsin_newton;
use geomfree::{cos_eval, sin_eval, Result as KernelResult};

pub const MIN_N: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchFunction {
    Sin,
    Cos,
    Arcsin,
    All,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = BenchFunction::All)]
    pub function: BenchFunction,
    /// Sample count, at least 100.
    #[arg(long, default_value_t = 100_000)]
    pub n: usize,
    /// Interval start; default -π for sin/cos, -1 for arcsin.
    #[arg(long)]
    pub lo: Option<f64>,
    /// Interval end; default π for sin/cos, 1 for arcsin.
    #[arg(long)]
    pub hi: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-15, value_parser = tol_arg)]
    pub tol: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub function: String,
    pub interval: [f64; 2],
    pub n: usize,
    pub max_abs_error_vs_platform: f64,
    pub ns_per_eval_self: f64,
    pub ns_per_eval_platform: f64,
}

fn platform(f: Function) -> fn(f64) -> f64 {
    match f {
        Function::Sin => f64::sin,
        Function::Cos => f64::cos,
        Function::Arcsin => f64::asin,
    }
}

fn kernel(f: Function, x: f64, tol: f64) -> KernelResult<f64> {
    let v = match f {
        Function::Sin => sin_eval(x, tol)?,
        Function::Cos => cos_eval(x, tol)?,
        Function::Arcsin => arcsin_newton(x, tol.max(1e-13))?,
    };
    Ok(v.value)
}

fn elapsed_ns(start: Instant, n: usize) -> f64 {
    (start.elapsed().as_nanos().max(1) as f64) / n as f64
}

/// Benchmark one function over `n` uniform points of `[lo, hi]`.
pub fn bench_one(f: Function, lo: f64, hi: f64, n: usize, seed: u64, tol: f64) -> Result<BenchRecord, CliError> {
    if n < MIN_N {
        return Err(CliError::Usage(format!("--n must be at least {MIN_N}, got {n}")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(CliError::Usage(format!("bad interval [{lo}, {hi}]")));
    }
    if f == Function::Arcsin && (lo < -1.0 || hi > 1.0) {
        return Err(CliError::Usage(format!("arcsin interval [{lo}, {hi}] exceeds [-1, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<f64> = (0..n).map(|_| rng.random_range(lo..=hi)).collect();

    // The first call builds the constants table; keep it out of the timing.
    kernel(f, xs[0], tol)?;
    let start = Instant::now();
    let mut ours = Vec::with_capacity(n);
    for &x in &xs {
        ours.push(kernel(f, black_box(x), tol)?);
    }
    let ns_self = elapsed_ns(start, n);

    let p = platform(f);
    let start = Instant::now();
    let theirs: Vec<f64> = xs.iter().map(|&x| p(black_box(x))).collect();
    let ns_platform = elapsed_ns(start, n);

    let max_err = ours
        .iter()
        .zip(&theirs)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(BenchRecord {
        function: f.name().into(),
        interval: [lo, hi],
        n,
        max_abs_error_vs_platform: max_err,
        ns_per_eval_self: ns_self,
        ns_per_eval_platform: ns_platform,
    })
}

pub fn run(a: &BenchArgs) -> Result<Outcome, CliError> {
    let functions: &[Function] = match a.function {
        BenchFunction::Sin => &[Function::Sin],
        BenchFunction::Cos => &[Function::Cos],
        BenchFunction::Arcsin => &[Function::Arcsin],
        BenchFunction::All => &[Function::Sin, Function::Cos, Function::Arcsin],
    };
    let mut records = Vec::new();
    for &f in functions {
        let (dlo, dhi) = match f {
            Function::Arcsin => (-1.0, 1.0),
            _ => (-std::f64::consts::PI, std::f64::consts::PI),
        };
        records.push(bench_one(f, a.lo.unwrap_or(dlo), a.hi.unwrap_or(dhi), a.n, a.seed, a.tol)?);
    }
    let mut text = format!(
        "{:<8} {:>24} {:>8} {:>12} {:>10} {:>10}\n",
        "function", "interval", "n", "max |err|", "ns/self", "ns/libm"
    );
    for r in &records {
        text += &format!(
            "{:<8} {:>24} {:>8} {:>12.3e} {:>10.1} {:>10.1}\n",
            r.function,
            format!("[{:.6}, {:.6}]", r.interval[0], r.interval[1]),
            r.n,
            r.max_abs_error_vs_platform,
            r.ns_per_eval_self,
            r.ns_per_eval_platform
        );
    }
    Ok(Outcome::ok(text, serde_json::to_value(&records).expect("serializable")))
}
