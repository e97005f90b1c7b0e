use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::output::Style;
use crate::{tol_arg, CliError, Outcome, EXIT_CHECK_FAILED, EXIT_OK};
use geomfree::analysis::{
    arc_length, arcsin_derivative_check, arcsin_newton, arcsin_quadrature, arcsin_split_halves,
    ode_oracle, quarter_circle_area,
};
use geomfree::constants::{table, verify_cos2_bound, verify_q_multiples};
use geomfree::exact_series::{
    verify_ode_coefficients, verify_pythagorean, verify_sine_sum, verify_sine_sum_split,
};
use geomfree::identities::{
    adversarial_samples, check_identity_id, check_period_minimality, check_periodicity, check_sine_monotonic,
    check_sine_range, check_special_angles, seeded_samples, summarize, verify_sine_cubic,
    IdentityCheck, IdentityId,
};
use geomfree::report::{CheckEntry, CheckKind};

pub const SCHEMA_VERSION: &str = "1";
pub const MAX_DEGREE: usize = 100;
pub const MAX_SAMPLES: usize = 1_000_000;

const QUAD_TOL: f64 = 1e-10;
const NEWTON_TOL: f64 = 1e-13;
const MINIMALITY_GRID: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Exact,
    Numeric,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Truncation degree of the exact identities, at most 100.
    #[arg(long, default_value_t = 50)]
    pub degree: usize,
    /// Random samples per numeric identity, at most 1e6.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Kernel tolerance for the numeric identities.
    #[arg(long, default_value_t = 1e-15, value_parser = tol_arg)]
    pub tol: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: String,
    pub timestamp: String,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn new(checks: Vec<CheckEntry>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        Self {
            schema_version: SCHEMA_VERSION.into(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            summary: Summary {
                total: checks.len(),
                passed,
                failed: checks.len() - passed,
            },
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }
}

pub fn exact_checks(degree: usize) -> Vec<CheckEntry> {
    let split_max = 20.min(degree.saturating_sub(1) / 2);
    vec![
        verify_pythagorean(degree),
        verify_sine_sum(degree),
        verify_sine_sum_split(split_max),
        verify_cos2_bound(),
        verify_ode_coefficients(degree.max(2)),
        verify_sine_cubic(),
        verify_q_multiples(),
    ]
}

fn from_check(c: &IdentityCheck, samples: usize) -> CheckEntry {
    CheckEntry::numeric(&c.name, c.pass, c.discrepancy(), c.combined_bound + c.slack, samples)
}

/// Largest discrepancy with the bound that applied to it, and whether every
/// sample passed.
struct Worst {
    pass: bool,
    gap: f64,
    allow: f64,
    n: usize,
}

impl Worst {
    fn new() -> Self {
        Self {
            pass: true,
            gap: 0.0,
            allow: 0.0,
            n: 0,
        }
    }

    fn add(&mut self, gap: f64, allow: f64) {
        self.pass &= gap <= allow;
        self.n += 1;
        if self.n == 1 || gap > self.gap {
            self.gap = gap;
            self.allow = allow;
        }
    }

    fn entry(&self, name: &str) -> CheckEntry {
        CheckEntry::numeric(name, self.pass, self.gap, self.allow, self.n)
    }
}

pub fn numeric_checks(samples: usize, seed: u64, tol: f64) -> Result<Vec<CheckEntry>, CliError> {
    let t = table();
    let two_pi = 4.0 * t.q;
    let mut out = Vec::new();

    let pairs = seeded_samples(samples, seed, -two_pi, two_pi);
    for id in IdentityId::ALL {
        out.push(summarize(id.name(), &check_identity_id(id, &pairs, tol)?));
    }
    let mut hard = Vec::new();
    let adversarial = adversarial_samples();
    for id in IdentityId::ALL {
        hard.extend(check_identity_id(id, &adversarial, tol)?);
    }
    out.push(summarize("identities_adversarial", &hard));
    out.push(from_check(&check_periodicity(samples, tol)?, samples));
    // Largest certified upper bound on |cos 2R|, which must stay below 1.
    let m = check_period_minimality(MINIMALITY_GRID)?;
    out.push(CheckEntry::numeric(&m.name, m.pass, m.lhs, m.rhs, MINIMALITY_GRID));
    let grid = samples.max(2);
    out.push(from_check(&check_sine_range(grid)?, grid));
    // Certified uncertainty of the tightest step against the observed rise.
    let m = check_sine_monotonic(grid)?;
    out.push(CheckEntry::numeric(&m.name, m.pass, m.combined_bound, m.lhs, grid));
    out.push(check_special_angles());

    let half_q = t.q / 2.0;
    let r = quarter_circle_area(QUAD_TOL)?;
    let mut w = Worst::new();
    w.add((r.value - half_q).abs(), QUAD_TOL);
    out.push(w.entry("quarter_circle_area"));

    let mut w = Worst::new();
    for x in [1.0, -1.0] {
        let g = arcsin_quadrature(x, QUAD_TOL)?;
        w.add((g.value - x * t.q).abs(), QUAD_TOL);
    }
    out.push(w.entry("arcsin_integral_endpoints"));

    let (head, tail) = arcsin_split_halves(QUAD_TOL)?;
    let whole = arcsin_quadrature(1.0, QUAD_TOL)?;
    let mut w = Worst::new();
    w.add((head.value - tail.value).abs(), 2.0 * QUAD_TOL);
    w.add((whole.value - 2.0 * head.value).abs(), 2.0 * QUAD_TOL);
    out.push(w.entry("arcsin_integral_split"));

    let grid: Vec<f64> = (0..=180).map(|i| -0.9 + 0.01 * i as f64).collect();
    let mut w = Worst::new();
    w.add(arcsin_derivative_check(&grid, 1e-5)?, 1e-8);
    w.n = grid.len();
    out.push(w.entry("arcsin_derivative"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = Worst::new();
    for _ in 0..samples.min(500) {
        let x: f64 = rng.random_range(-1.0..=1.0);
        let n = arcsin_newton(x, NEWTON_TOL)?;
        let q = arcsin_quadrature(x, QUAD_TOL)?;
        w.add((n.value - q.value).abs(), NEWTON_TOL + QUAD_TOL + q.est_error);
    }
    out.push(w.entry("arcsin_two_oracle"));

    let full = arc_length(-1.0, 1.0, QUAD_TOL)?;
    let mut w = Worst::new();
    w.add((full.value - 2.0 * t.q).abs(), 1e-9);
    out.push(w.entry("arc_length"));

    let mut w = Worst::new();
    for _ in 0..samples.min(100) {
        let mut v: [f64; 3] = [(); 3].map(|_| rng.random_range(-1.0..=1.0));
        v.sort_by(f64::total_cmp);
        let ac = arc_length(v[0], v[2], QUAD_TOL)?;
        let ab = arc_length(v[0], v[1], QUAD_TOL)?;
        let bc = arc_length(v[1], v[2], QUAD_TOL)?;
        let allow = ac.est_error + ab.est_error + bc.est_error + 3.0 * QUAD_TOL;
        w.add((ac.value - ab.value - bc.value).abs(), allow);
    }
    out.push(w.entry("arc_length_additivity"));

    let traj = ode_oracle(two_pi, 1e-3)?;
    let (df, ddf) = traj.max_deviation()?;
    let mut w = Worst::new();
    w.add(traj.energy_drift, 1e-11);
    w.n = traj.points.len();
    out.push(w.entry("ode_energy"));
    let mut w = Worst::new();
    w.add(df.max(ddf), 1e-10);
    w.n = traj.points.len();
    out.push(w.entry("ode_trajectory"));

    Ok(out)
}

pub fn build_report(a: &VerifyArgs) -> Result<VerifyReport, CliError> {
    if a.degree == 0 || a.degree > MAX_DEGREE {
        return Err(CliError::Usage(format!(
            "--degree must lie in 1..={MAX_DEGREE}, got {}",
            a.degree
        )));
    }
    if a.samples == 0 || a.samples > MAX_SAMPLES {
        return Err(CliError::Usage(format!(
            "--samples must lie in 1..={MAX_SAMPLES}, got {}",
            a.samples
        )));
    }
    let mut checks = Vec::new();
    if matches!(a.suite, Suite::Exact | Suite::All) {
        checks.extend(exact_checks(a.degree));
    }
    if matches!(a.suite, Suite::Numeric | Suite::All) {
        checks.extend(numeric_checks(a.samples, a.seed, a.tol)?);
    }
    Ok(VerifyReport::new(checks))
}

fn render(report: &VerifyReport, style: Style) -> String {
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in &report.checks {
        let mark = if c.pass {
            style.pass("PASS")
        } else {
            style.fail("FAIL")
        };
        let detail = match c.kind {
            CheckKind::Exact => format!(
                "residual {} ({} nonzero)",
                c.detail.residual.as_deref().unwrap_or("?"),
                c.detail.nonzero_terms.unwrap_or(0)
            ),
            CheckKind::Numeric => format!(
                "max discrepancy {:.3e} <= bound {:.3e}",
                c.detail.max_discrepancy.unwrap_or(f64::NAN),
                c.detail.bound.unwrap_or(f64::NAN)
            ),
        };
        let kind = match c.kind {
            CheckKind::Exact => "exact",
            CheckKind::Numeric => "numeric",
        };
        s += &format!("{mark}  {:<width$}  {kind:<7}  n={:<7} {detail}\n", c.name, c.samples);
    }
    let summary = format!(
        "{} checks: {} passed, {} failed\n",
        report.summary.total, report.summary.passed, report.summary.failed
    );
    s += &style.bold(&summary);
    s
}

pub fn run(a: &VerifyArgs, style: Style) -> Result<Outcome, CliError> {
    let report = build_report(a)?;
    Ok(Outcome {
        text: render(&report, style),
        json: serde_json::to_value(&report).expect("serializable"),
        code: if report.all_pass() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
    })
}
