use num_complex::Complex64;

use super::*;
use crate::exact::{rat, rat_int};
use crate::series::{named_series, SeriesName, DEFAULT_GRID};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn theta_one_one_vanishes() {
    let th = theta_char_eval(&ThetaChar::new(rat_int(1), rat_int(1)), c(0.0, 1.0), 60);
    assert!(th.norm() < 1e-12, "theta[1,1](i) = {th}");
    let th = theta_char_eval(&ThetaChar::new(rat_int(1), rat_int(1)), c(0.3, 0.8), 60);
    assert!(th.norm() < 1e-12);
}

#[test]
fn eval_series_constant() {
    let one = crate::series::PuiseuxSeries::<crate::exact::Rational>::one(
        DEFAULT_GRID,
        40 * DEFAULT_GRID,
    );
    for tau in [c(0.3, 1.2), c(-0.7, 0.6), c(0.0, 2.5)] {
        let v = eval_series(&one, tau, 1e-8).unwrap();
        assert!((v - 1.0).norm() < 1e-12);
    }
}

#[test]
fn eval_series_real_on_imaginary_axis() {
    // Every named series has real rational coefficients, so values on the
    // imaginary axis are real to within the working precision.
    for name in SeriesName::ALL {
        let s = named_series(name, DEFAULT_GRID, 40 * DEFAULT_GRID).unwrap();
        let v = eval_series(&s, c(0.0, 1.25), 1e-10).unwrap();
        assert!(v.im.abs() < 1e-10, "Im {name:?}(1.25i) = {}", v.im);
    }
}

#[test]
fn eval_series_rejects_bad_domains() {
    let h = named_series(SeriesName::H, DEFAULT_GRID, 10 * DEFAULT_GRID).unwrap();
    assert!(matches!(
        eval_series(&h, c(0.2, -1.0), 1e-8),
        Err(NumericError::LowerHalfPlane(_))
    ));
    // Shallow truncation at small Im tau: the tail bound must refuse.
    let h_short = named_series(SeriesName::H, DEFAULT_GRID, 5 * DEFAULT_GRID).unwrap();
    assert!(matches!(
        eval_series(&h_short, c(0.28, 0.014), 1e-8),
        Err(NumericError::InsufficientTerms { .. })
    ));
}

#[test]
fn uvw_numeric_shadow_of_eq22() {
    // eval(u) eval(v) eval(w) = eval(eta) eval(eta7)^2 at a tame point,
    // through the dense series route.
    let tau = c(0.1, 0.9);
    let tol = 1e-10;
    let order = 40 * DEFAULT_GRID;
    let ev = |n: SeriesName| {
        eval_series(&named_series(n, DEFAULT_GRID, order).unwrap(), tau, tol).unwrap()
    };
    let lhs = ev(SeriesName::U) * ev(SeriesName::V) * ev(SeriesName::W);
    let eta7 = ev(SeriesName::Eta7);
    let rhs = ev(SeriesName::Eta) * eta7 * eta7;
    assert!((lhs - rhs).norm() < 1e-10, "err = {}", (lhs - rhs).norm());
}

#[test]
fn bilateral_blocks_match_series_evaluation() {
    // The lacunary evaluators agree with the dense q-expansions at a tame
    // point, including the eta block.
    let tau = c(0.17, 1.05);
    let tol = 1e-10;
    let order = 40 * DEFAULT_GRID;
    for (block, name) in [
        (Block::U, SeriesName::U),
        (Block::V, SeriesName::V),
        (Block::W, SeriesName::W),
        (Block::Eta, SeriesName::Eta),
    ] {
        let (direct, bound) = eval_block(block, tau, 64);
        assert!(bound < tol);
        let via_series =
            eval_series(&named_series(name, DEFAULT_GRID, order).unwrap(), tau, tol).unwrap();
        assert!(
            (direct - via_series).norm() < 1e-10,
            "{name:?}: {}",
            (direct - via_series).norm()
        );
    }
}

#[test]
fn inversion_self_consistent_at_fixed_point() {
    // tau = i is fixed by tau -> -1/tau.
    let r = run_check(NumericCheck::ThetaInversion, c(0.0, 1.0), 64, 1e-10).unwrap();
    assert!(r.pass, "max error {}", r.max_error);
}

#[test]
fn split_reduction_three_term_form() {
    // theta[1, 1/7](tau/7) collapses to three terms after the vanishing of
    // theta[1,1] and quasi-periodicity.
    let tau = c(0.23, 0.91);
    let lhs = theta_char_eval(&ThetaChar::new(rat_int(1), rat(1, 7)), tau / 7.0, 80);
    let th = |k: i64| theta_char_eval(&ThetaChar::new(rat(k, 7), rat_int(1)), 7.0 * tau, 80);
    let one = Complex64::new(1.0, 0.0);
    let rhs = (one + e_phase(13.0 / 14.0)) * th(1)
        + (one + e_phase(11.0 / 14.0)) * th(3)
        + (one + e_phase(9.0 / 14.0)) * th(5);
    assert!((lhs - rhs).norm() < 1e-12, "err = {}", (lhs - rhs).norm());
}

#[test]
fn all_checks_pass_at_one_generic_point() {
    let tau = c(0.2, 1.1);
    for check in NumericCheck::ALL {
        // The cusp-limit check needs a tall point; it has its own test.
        if check == NumericCheck::H0Limit {
            continue;
        }
        let r = run_check(check, tau, 64, 1e-8).unwrap();
        assert!(r.pass, "{}: max error {}", r.check, r.max_error);
    }
    let r = run_check(NumericCheck::H0Limit, c(0.0, 4.0), 64, 1e-6).unwrap();
    assert!(r.pass, "h0-limit at 4i: max error {}", r.max_error);
}

#[test]
fn doubling_terms_does_not_hurt() {
    let tau = c(0.05, 1.4);
    let lo = run_check(NumericCheck::Thm3, tau, 48, 1e-8).unwrap();
    let hi = run_check(NumericCheck::Thm3, tau, 96, 1e-8).unwrap();
    assert!(lo.pass && hi.pass);
    assert!(hi.max_error <= lo.max_error + 1e-12);
}

#[test]
fn h0_limit_tightens_with_height() {
    let lo = run_check(NumericCheck::H0Limit, c(0.0, 3.0), 64, 1e-4).unwrap();
    let hi = run_check(NumericCheck::H0Limit, c(0.0, 4.0), 64, 1e-6).unwrap();
    assert!(lo.pass && hi.pass);
    assert!(hi.max_error < lo.max_error);
}

#[test]
fn rejects_lower_half_plane() {
    assert!(matches!(
        run_check(NumericCheck::Thm2, c(0.0, -1.0), 64, 1e-8),
        Err(NumericError::LowerHalfPlane(_))
    ));
    assert!(NumericCheck::parse("nonesuch").is_err());
    assert_eq!(NumericCheck::parse("thm3").unwrap(), NumericCheck::Thm3);
}

#[test]
fn reports_serialize() {
    let r = run_check(NumericCheck::ThetaQuasi, c(0.2, 1.1), 48, 1e-8).unwrap();
    let js = r.to_json();
    assert_eq!(js["check"], "theta-quasi");
    assert_eq!(js["status"], "pass");
    assert_eq!(js["terms"], 48);
}
