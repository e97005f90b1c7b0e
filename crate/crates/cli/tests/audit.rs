mod common;

use common::audit;

#[test]
fn no_platform_trig_outside_bench() {
    let (found, files) = audit::violations();
    assert!(files >= 15, "scanned only {files} files");
    assert!(found.is_empty(), "platform trig calls:\n{}", found.join("\n"));
}

#[test]
fn scan_sees_the_bench_baseline() {
    assert!(audit::allowed_hits() >= 3);
}

#[test]
fn patterns_catch_planted_calls() {
    let p = audit::patterns();
    for bad in [
        "let y = x.sin();",
        "let y = (2.0 * x).cos ();",
        "f64::atan2(y, x)",
        "let (s, c) = x.sin_cos();",
        "use std::f64::consts::PI;",
        "let q = consts::FRAC_PI_2;",
    ] {
        assert_eq!(audit::scan_text(bad, &p).len(), 1, "{bad}");
    }
    for ok in [
        "let v = sin_eval(x, tol);",
        "// x.sin() in a comment",
        "let r = x.sqrt();",
        "cos_at(x, 0.0, tol)",
        "std::f64::consts::FRAC_1_SQRT_2",
    ] {
        assert!(audit::scan_text(ok, &p).is_empty(), "{ok}");
    }
}
