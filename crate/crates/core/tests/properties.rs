use geomfree::constants::table;
use geomfree::exact_series::{cauchy_product, BiPoly, UniPoly};
use geomfree::identities::special_angles;
use geomfree::series_kernel::{sin_eval_exact, cos_eval_exact};
use geomfree::{cos_eval, sin_eval, ExactRational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

fn uni(cap: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec((-20i64..20, 1i64..6), 0..=cap + 1)
        .prop_map(move |cs| UniPoly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect(), cap))
}

fn bi(cap: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=cap, 0..=cap, -9i64..9, 1i64..4), 0..12).prop_map(move |ts| {
        let mut p = BiPoly::zero(cap);
        for (i, j, n, d) in ts {
            p.add_term(i, j, rat(n, d));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in uni(8), q in uni(8), r in uni(8)) {
        let pq = cauchy_product(&p, &q, 8);
        prop_assert_eq!(&pq, &cauchy_product(&q, &p, 8));
        prop_assert_eq!(
            cauchy_product(&pq, &r, 8),
            cauchy_product(&p, &cauchy_product(&q, &r, 8), 8)
        );
        prop_assert_eq!(
            cauchy_product(&p, &(&q + &r), 8),
            &pq + &cauchy_product(&p, &r, 8)
        );
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&(&p + &(-&p)), &UniPoly::zero(8));
    }

    #[test]
    fn truncation_coherence(p in uni(10), q in uni(10), k in 0usize..10) {
        let full = cauchy_product(&p, &q, 10).truncate(k);
        let early = cauchy_product(&p.truncate(k), &q.truncate(k), k);
        prop_assert_eq!(full, early);
    }

    #[test]
    fn odd_even_bit_identity(x in -1e6f64..1e6) {
        let (s, ns) = (sin_eval(x, 1e-15).unwrap(), sin_eval(-x, 1e-15).unwrap());
        prop_assert_eq!(ns.value.to_bits(), (-s.value).to_bits());
        prop_assert_eq!(ns.abs_error_bound, s.abs_error_bound);
        let (c, nc) = (cos_eval(x, 1e-15).unwrap(), cos_eval(-x, 1e-15).unwrap());
        prop_assert_eq!(nc.value.to_bits(), c.value.to_bits());
    }

    #[test]
    fn sine_is_bounded(x in -1e8f64..1e8) {
        let s = sin_eval(x, 1e-15).unwrap();
        let c = cos_eval(x, 1e-15).unwrap();
        prop_assert!(s.value.abs() <= 1.0 + s.abs_error_bound);
        prop_assert!(c.value.abs() <= 1.0 + c.abs_error_bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn bivariate_commutativity(p in bi(10), q in bi(10)) {
        prop_assert_eq!(p.mul_truncated(&q, 10), q.mul_truncated(&p, 10));
        prop_assert_eq!(p.mul_truncated(&q, 10).swap_vars(), p.swap_vars().mul_truncated(&q.swap_vars(), 10));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Dyadic rationals in [-4, 4] are exact binary64 values.
    #[test]
    fn exact_and_float_agree(n in -4096i64..=4096) {
        let x = rat(n, 1024);
        let xf = n as f64 / 1024.0;
        let (s, sb) = sin_eval_exact(&x, 30).unwrap();
        let (c, cb) = cos_eval_exact(&x, 30).unwrap();
        let fs = sin_eval(xf, 1e-15).unwrap();
        let fc = cos_eval(xf, 1e-15).unwrap();
        let ds = (ExactRational::from_float(fs.value).unwrap() - s).to_f64().unwrap().abs();
        let dc = (ExactRational::from_float(fc.value).unwrap() - c).to_f64().unwrap().abs();
        prop_assert!(ds <= fs.abs_error_bound + sb.to_f64().unwrap(), "sin {}: {:e}", xf, ds);
        prop_assert!(dc <= fc.abs_error_bound + cb.to_f64().unwrap(), "cos {}: {:e}", xf, dc);
    }
}

#[test]
fn derivative_cycle() {
    let two_pi = 4.0 * table().q;
    let h = 1e-5;
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let x = -two_pi + 2.0 * two_pi * i as f64 / 999.0;
        let (xp, xm) = (x + h, x - h);
        let ds = (sin_eval(xp, 1e-15).unwrap().value - sin_eval(xm, 1e-15).unwrap().value) / (xp - xm);
        let dc = (cos_eval(xp, 1e-15).unwrap().value - cos_eval(xm, 1e-15).unwrap().value) / (xp - xm);
        worst = worst.max((ds - cos_eval(x, 1e-15).unwrap().value).abs());
        worst = worst.max((dc + sin_eval(x, 1e-15).unwrap().value).abs());
    }
    // h^2/6 truncation plus 2u/h cancellation.
    assert!(worst <= 1e-9, "{worst:e}");
}

#[test]
fn special_angles_match_kernel_within_two_ulp() {
    for e in special_angles().entries {
        let s = sin_eval(e.angle, 1e-15).unwrap().value;
        let c = cos_eval(e.angle, 1e-15).unwrap().value;
        let ulp = |v: f64| 2.0 * f64::EPSILON * v.abs().max(f64::MIN_POSITIVE);
        assert!((s - e.sin_value).abs() <= ulp(e.sin_value).max(1e-16), "{} sin", e.label);
        assert!((c - e.cos_value).abs() <= ulp(e.cos_value).max(1e-16), "{} cos", e.label);
    }
}
