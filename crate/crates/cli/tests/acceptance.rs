//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Tolerances are the stated ones; nothing is loosened here.

mod common;

use std::cmp::Ordering;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use geomfree::analysis::{
    arc_length, arcsin_derivative_check, arcsin_quadrature, ode_oracle, quarter_circle_area, SPLIT,
};
use geomfree::constants::{certified_cos_sign, find_q, q_multiples_table};
use geomfree::identities::{check_period_minimality, check_periodicity, solve_sine_cubic, special_angles};
use geomfree::series_kernel::cos_eval_exact;
use geomfree::{cos_eval, sin_eval, ExactRational};

const PI: f64 = 3.141592653589793;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

fn exact(x: f64) -> ExactRational {
    ExactRational::from_float(x).unwrap()
}

fn binary(args: &[&str]) -> Result<(Value, i32, Duration), String> {
    let start = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_geomfree"))
        .args(args)
        .args(["--format", "json"])
        .env("GEOMFREE_NO_COLOR", "1")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let v = serde_json::from_slice(&o.stdout)
        .map_err(|e| format!("{args:?}: bad json ({e}); stderr {}", String::from_utf8_lossy(&o.stderr)))?;
    Ok((v, o.status.code().unwrap_or(-1), elapsed))
}

fn check<'a>(report: &'a Value, name: &str) -> Result<&'a Value, String> {
    report["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["name"] == name))
        .ok_or_else(|| format!("check {name} missing from report"))
}

fn exact_zero(report: &Value, name: &str) -> Result<(), String> {
    let c = check(report, name)?;
    ensure(
        c["pass"] == true && c["detail"]["residual"] == "0",
        format!("{name}: {c}"),
    )
}

fn ac1() -> Outcome {
    let (r, code, t) = binary(&["verify", "--suite", "exact", "--degree", "50"])?;
    ensure(code == 0, format!("exit {code}"))?;
    exact_zero(&r, "pythagorean_exact")?;
    ensure(t < Duration::from_secs(10), format!("took {t:?}"))?;
    Ok(format!("residual 0 at degree 50 in {:.2}s", t.as_secs_f64()))
}

fn ac2() -> Outcome {
    let (r, code, t) = binary(&["verify", "--suite", "exact", "--degree", "41"])?;
    ensure(code == 0, format!("exit {code}"))?;
    exact_zero(&r, "sine_sum_exact")?;
    exact_zero(&r, "sine_sum_split_exact")?;
    let n = check(&r, "sine_sum_split_exact")?["samples"].as_u64().unwrap_or(0);
    ensure(n == 21, format!("split checked for {n} values of n"))?;
    ensure(t < Duration::from_secs(30), format!("took {t:?}"))?;
    Ok(format!("degree 41 residual 0, split n = 0..=20, {:.2}s", t.as_secs_f64()))
}

fn ac3() -> Outcome {
    let (sum, bound) = cos_eval_exact(&exact(2.0), 4).map_err(|e| e.to_string())?;
    ensure(sum == rat(-19, 45), format!("partial sum {sum}"))?;
    ensure(bound == rat(2, 315), format!("bound {bound}"))?;
    let upper = &sum + &bound;
    ensure(upper == rat(-131, 315), format!("upper {upper}"))?;
    let f = upper.to_f64().unwrap();
    ensure((f + 0.4158730).abs() < 5e-8, format!("{f}"))?;
    Ok(format!("-19/45 + 2/315 = {upper} ≈ {f:.7}"))
}

/// Cosine by its Taylor series in exact arithmetic, to below 2^-200.
fn oracle_cos(x: &ExactRational) -> ExactRational {
    let tiny = ExactRational::new(BigInt::one(), BigInt::one() << 200);
    let x2 = x * x;
    let (mut term, mut sum, mut n) = (ExactRational::one(), ExactRational::zero(), 0u32);
    while term.abs() >= tiny || n < 8 {
        sum += &term;
        term = -(term * &x2) / BigInt::from((n + 1) * (n + 2));
        n += 2;
    }
    sum
}

fn ac4() -> Outcome {
    let t = find_q(1e-13).map_err(|e| e.to_string())?;
    let err = (2.0 * t.q - PI).abs();
    ensure(err <= 5e-13, format!("|2Q - π| = {err:e}"))?;
    let (l, r) = t.bracket;
    let sl = certified_cos_sign(&exact(l)).map_err(|e| e.to_string())?;
    let sr = certified_cos_sign(&exact(r)).map_err(|e| e.to_string())?;
    ensure(sl == Ordering::Greater && sr == Ordering::Less, "bracket signs not certified")?;

    let (mut lo, mut hi) = (exact(1.0), exact(2.0));
    let half = rat(1, 2);
    for _ in 0..60 {
        let mid = (&lo + &hi) * &half;
        if oracle_cos(&mid).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (olo, ohi) = (lo.to_f64().unwrap(), hi.to_f64().unwrap());
    ensure(olo <= r && l <= ohi, format!("oracle [{olo}, {ohi}] vs bracket [{l}, {r}]"))?;
    ensure((t.q - olo).abs() <= 1e-13, format!("oracle {olo} vs {}", t.q))?;
    Ok(format!("Q = {}, |2Q - π| = {err:.1e}, oracle agrees", t.q))
}

fn ac5() -> Outcome {
    let rows: Vec<(i32, i32)> = q_multiples_table().iter().map(|r| (r.sin, r.cos)).collect();
    ensure(rows == [(0, 1), (1, 0), (0, -1), (-1, 0), (0, 1)], format!("{rows:?}"))?;
    Ok(format!("{rows:?}"))
}

fn ac6() -> Outcome {
    let (r, code, _) = binary(&["verify", "--suite", "numeric", "--samples", "1000", "--seed", "7"])?;
    ensure(code == 0, format!("exit {code}"))?;
    let names = [
        "pythagorean",
        "sine_sum",
        "sine_difference",
        "sine_double",
        "cofunction_sin",
        "cofunction_cos",
        "cosine_sum",
        "cosine_difference",
        "cosine_double",
        "cosine_squared",
        "triple_angle",
    ];
    for n in names {
        let c = check(&r, n)?;
        let d = &c["detail"];
        ensure(c["pass"] == true, format!("{n}: {c}"))?;
        ensure(c["samples"] == 1000, format!("{n}: samples {}", c["samples"]))?;
        ensure(
            d["max_discrepancy"].as_f64() <= d["bound"].as_f64(),
            format!("{n}: {d}"),
        )?;
    }
    Ok(format!("{} identities at 1000 samples", names.len()))
}

fn ac7() -> Outcome {
    let p = check_periodicity(1000, 1e-15).map_err(|e| e.to_string())?;
    ensure(p.discrepancy() <= 5e-15, format!("max {:e}", p.discrepancy()))?;
    ensure(p.pass, "periodicity beyond certified bounds")?;
    let m = check_period_minimality(500).map_err(|e| e.to_string())?;
    ensure(m.pass, format!("minimality: {m:?}"))?;
    Ok(format!(
        "max |sin(x+4Q) - sin x| = {:.1e}; max |cos 2R| upper bound {:.6}",
        p.discrepancy(),
        m.lhs
    ))
}

fn ac8() -> Outcome {
    let table = special_angles();
    let expect = [
        ("π/6", 0.5, 0.8660254037844386),
        ("π/4", 0.7071067811865476, 0.7071067811865476),
        ("π/3", 0.8660254037844386, 0.5),
    ];
    let mut worst = 0.0f64;
    for (label, s, c) in expect {
        let e = table.get(label).ok_or(format!("{label} missing"))?;
        for (got, want) in [(e.sin_value, s), (e.cos_value, c)] {
            let ulps = (got - want).abs() / (f64::EPSILON * want);
            worst = worst.max(ulps);
            ensure(ulps <= 2.0, format!("{label}: {got} vs {want}"))?;
        }
        let ks = sin_eval(e.angle, 1e-15).map_err(|x| x.to_string())?.value;
        let kc = cos_eval(e.angle, 1e-15).map_err(|x| x.to_string())?.value;
        for (got, want) in [(ks, s), (kc, c)] {
            let ulps = (got - want).abs() / (f64::EPSILON * want);
            worst = worst.max(ulps);
            ensure(ulps <= 2.0, format!("series at {label}: {got} vs {want}"))?;
        }
    }
    let roots = solve_sine_cubic();
    ensure(roots == vec![(rat(1, 2), 2), (rat(-1, 1), 1)], format!("{roots:?}"))?;
    Ok(format!("worst {worst:.1} ulp; roots 1/2 (x2), -1"))
}

fn ac9() -> Outcome {
    let e = |x: geomfree::Result<geomfree::analysis::QuadratureResult>| x.map_err(|e| e.to_string());
    let area = e(quarter_circle_area(1e-10))?.value;
    ensure((area - PI / 4.0).abs() <= 1e-10, format!("area {area}"))?;
    let g1 = e(arcsin_quadrature(1.0, 1e-10))?.value;
    ensure((g1 - PI / 2.0).abs() <= 1e-10, format!("g(1) {g1}"))?;
    let gm1 = e(arcsin_quadrature(-1.0, 1e-10))?.value;
    ensure((gm1 + PI / 2.0).abs() <= 1e-10, format!("g(-1) {gm1}"))?;
    let gs = e(arcsin_quadrature(SPLIT, 1e-10))?.value;
    ensure((g1 - 2.0 * gs).abs() <= 2e-10, format!("g(1) {g1} vs 2 g(s) {}", 2.0 * gs))?;
    Ok(format!(
        "errors {:.1e}, {:.1e}, {:.1e}; split {:.1e}",
        (area - PI / 4.0).abs(),
        (g1 - PI / 2.0).abs(),
        (gm1 + PI / 2.0).abs(),
        (g1 - 2.0 * gs).abs()
    ))
}

fn ac10() -> Outcome {
    let grid: Vec<f64> = (0..=180).map(|i| -0.9 + 0.01 * i as f64).collect();
    let d = arcsin_derivative_check(&grid, 1e-5).map_err(|e| e.to_string())?;
    ensure(d <= 1e-8, format!("{d:e}"))?;
    Ok(format!("max discrepancy {d:.2e} over {} points", grid.len()))
}

fn ac11() -> Outcome {
    let full = arc_length(-1.0, 1.0, 1e-10).map_err(|e| e.to_string())?;
    ensure((full.value - PI).abs() <= 1e-9, format!("{}", full.value))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let mut v: [f64; 3] = [(); 3].map(|_| rng.random_range(-1.0..=1.0));
        v.sort_by(f64::total_cmp);
        let l = |a, b| arc_length(a, b, 1e-10).map_err(|e| e.to_string());
        let (ac, ab, bc) = (l(v[0], v[2])?, l(v[0], v[1])?, l(v[1], v[2])?);
        let gap = (ac.value - ab.value - bc.value).abs();
        let allow = ac.est_error + ab.est_error + bc.est_error + 3e-10;
        ensure(gap <= allow, format!("{v:?}: {gap:e} > {allow:e}"))?;
        worst = worst.max(gap);
    }
    Ok(format!("|L(-1,1) - π| = {:.1e}; additivity worst {worst:.1e}", (full.value - PI).abs()))
}

fn ac12() -> Outcome {
    let t = ode_oracle(2.0 * PI, 1e-3).map_err(|e| e.to_string())?;
    ensure(t.energy_drift <= 1e-11, format!("drift {:e}", t.energy_drift))?;
    let (df, _) = t.max_deviation().map_err(|e| e.to_string())?;
    ensure(df <= 1e-10, format!("deviation {df:e}"))?;
    Ok(format!("energy drift {:.1e}, max |f - sin| {df:.1e}", t.energy_drift))
}

fn ac13() -> Outcome {
    let mut parts = Vec::new();
    for f in ["sin", "cos"] {
        let (v, code, t) = binary(&["bench", "--function", f, "--n", "100000", "--seed", "1"])?;
        ensure(code == 0, format!("{f}: exit {code}"))?;
        let r = &v[0];
        let iv = &r["interval"];
        ensure(
            iv[0].as_f64() == Some(-PI) && iv[1].as_f64() == Some(PI) && r["n"] == 100000,
            format!("{f}: {r}"),
        )?;
        let e = r["max_abs_error_vs_platform"].as_f64().unwrap_or(f64::NAN);
        ensure(e <= 1e-13, format!("{f}: max error {e:e}"))?;
        ensure(t < Duration::from_secs(60), format!("{f}: took {t:?}"))?;
        parts.push(format!("{f} {e:.1e} in {:.1}s", t.as_secs_f64()));
    }
    Ok(parts.join("; "))
}

fn ac14() -> Outcome {
    let (found, files) = common::audit::violations();
    ensure(found.is_empty(), found.join("; "))?;
    ensure(common::audit::allowed_hits() > 0, "scan saw no calls in the bench module")?;
    Ok(format!("{files} source files clean outside {}", common::audit::ALLOWED))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("AC1", "exact Pythagorean identity", ac1),
        ("AC2", "exact sine-sum identity", ac2),
        ("AC3", "cos 2 bound", ac3),
        ("AC4", "π derivation", ac4),
        ("AC5", "Q-multiples table", ac5),
        ("AC6", "numeric identity suite", ac6),
        ("AC7", "periodicity and minimality", ac7),
        ("AC8", "special angles", ac8),
        ("AC9", "integrals", ac9),
        ("AC10", "arcsin derivative", ac10),
        ("AC11", "arc length", ac11),
        ("AC12", "ODE converse check", ac12),
        ("AC13", "accuracy vs platform", ac13),
        ("AC14", "trig-free audit", ac14),
    ];
    let mut failed = 0;
    for (id, what, f) in criteria {
        match f() {
            Ok(detail) => println!("[PASS] {id} {what}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {what}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
