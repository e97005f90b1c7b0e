use geomfree::analysis::{
    arc_length, arcsin_newton, arcsin_quadrature, arcsin_split_halves, ode_oracle,
};
use geomfree::constants::table;
use geomfree::sin_eval;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL_N: f64 = 1e-13;
const TOL_Q: f64 = 1e-10;

#[test]
fn two_oracle_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let x: f64 = rng.random_range(-1.0..=1.0);
        let n = arcsin_newton(x, TOL_N).unwrap();
        let q = arcsin_quadrature(x, TOL_Q).unwrap();
        assert!((n.value - q.value).abs() <= TOL_N + TOL_Q + q.est_error, "x = {x}");
    }
}

#[test]
fn inverse_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let q = table().q;
    for _ in 0..300 {
        let x: f64 = rng.random_range(-1.0..=1.0);
        let y = arcsin_newton(x, TOL_N).unwrap();
        let s = sin_eval(y.value, 1e-15).unwrap();
        // |sin'| <= 1
        assert!((s.value - x).abs() <= s.abs_error_bound + y.abs_error_bound + f64::EPSILON, "x = {x}");

        let t: f64 = rng.random_range(-q..=q);
        let st = sin_eval(t, 1e-15).unwrap();
        let back = arcsin_newton(st.value.clamp(-1.0, 1.0), TOL_N).unwrap();
        // arcsin' blows up near ±1: |Δy| <= sqrt(2 |Δx|) there.
        let dx = st.abs_error_bound + f64::EPSILON;
        let allowance = if t.abs() < 1.5 { 20.0 * dx } else { (2.0 * dx).sqrt() * 2.0 };
        assert!((back.value - t).abs() <= back.abs_error_bound + allowance, "t = {t}");
    }
}

#[test]
fn arc_length_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let mut v: [f64; 3] = [(); 3].map(|_| rng.random_range(-1.0..=1.0));
        v.sort_by(f64::total_cmp);
        let ac = arc_length(v[0], v[2], TOL_Q).unwrap();
        let ab = arc_length(v[0], v[1], TOL_Q).unwrap();
        let bc = arc_length(v[1], v[2], TOL_Q).unwrap();
        let err = ac.est_error + ab.est_error + bc.est_error + 3.0 * TOL_Q;
        assert!((ac.value - ab.value - bc.value).abs() <= err, "{v:?}");
    }
}

#[test]
fn half_integrals_agree() {
    let (head, tail) = arcsin_split_halves(TOL_Q).unwrap();
    assert!((head.value - tail.value).abs() <= 2.0 * TOL_Q);
    let whole = arcsin_quadrature(1.0, TOL_Q).unwrap();
    assert!((whole.value - 2.0 * head.value).abs() <= 2.0 * TOL_Q);
}

#[test]
fn ode_velocity_matches_cosine() {
    let t = ode_oracle(10.0, 1e-3).unwrap();
    assert_eq!(t.points[0].t, 0.0);
    let (df, ddf) = t.max_deviation().unwrap();
    // O(h^4) t_end
    let bound = 1e-12 * 10.0 * 10.0;
    assert!(df <= bound && ddf <= bound, "{df:e} {ddf:e}");
}
