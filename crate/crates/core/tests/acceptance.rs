//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use num_complex::Complex64;

use klein7::exact::{eval_poly, named_constant, rat, rat_int, Cyc7, NamedConstant};
use klein7::identities::{self, builders, Status};
use klein7::klein::{self, build_generators, Mat3, Mobius2};
use klein7::numeric::{self, NumericCheck};
use klein7::series::{from_f_sum, from_product, BuildContext, PuiseuxSeries, SeriesName};

const G: i64 = klein7::series::DEFAULT_GRID;

fn announce(criterion: &str, pass: bool) {
    println!(
        "acceptance {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion failed: {criterion}");
}

/// Criterion 1: every registry entry (series and polynomial kinds) passes at
/// order 40 with zero mismatches across the full q^(1/168) grid, within the
/// two-minute budget.
#[test]
fn criterion_1_verify_all_order_40() {
    let started = Instant::now();
    let ctx = BuildContext::new(40);
    let reports = identities::verify_all_with(&ctx);
    let elapsed = started.elapsed();
    let mut ok = true;
    for r in &reports {
        if r.status != Status::Pass {
            eprintln!("  {}: {:?} {:?}", r.id, r.status, r.first_mismatch);
            ok = false;
        }
        // Full-grid claim: series entries actually compared up to order 40
        // (the printed z window is capped by its statement).
        if let Some(order) = &r.order_checked {
            let expected = if r.id == "z-print" {
                rat_int(8)
            } else {
                rat_int(40)
            };
            if *order != expected {
                eprintln!("  {}: order_checked = {order}, expected {expected}", r.id);
                ok = false;
            }
        }
    }
    ok &= elapsed.as_secs_f64() <= 120.0;
    println!(
        "  ({} entries in {:.2} s)",
        reports.len(),
        elapsed.as_secs_f64()
    );
    announce("1 (verify --all --order 40, <= 2 min)", ok);
}

/// Criterion 2: the z expansion matches the nine printed coefficients.
#[test]
fn criterion_2_z_printed_coefficients() {
    let ctx = BuildContext::new(12);
    let z = ctx.series(SeriesName::Z);
    let expect: [(i64, i64); 9] = [
        (-1, 1),
        (0, 4),
        (1, 2),
        (2, 8),
        (3, -5),
        (4, -4),
        (5, -10),
        (6, 12),
        (7, -7),
    ];
    let ok = expect
        .iter()
        .all(|(k, c)| z.coefficient_at(k * G).unwrap() == rat_int(*c));
    announce("2 (z expansion: 1, 4, 2, 8, -5, -4, -10, 12, -7)", ok);
}

/// Criterion 3: bilateral-sum and product constructions of u, v, w agree
/// exactly to order 60 (independent code paths).
#[test]
fn criterion_3_triple_product_oracle() {
    let trunc = 60 * G;
    let mut ok = true;
    for (name, alpha, beta, shift) in [
        (SeriesName::U, 3, 4, 3),
        (SeriesName::V, 2, 5, 27),
        (SeriesName::W, 1, 6, 75),
    ] {
        let spec = klein7::series::product_spec(name).expect("u, v, w have product specs");
        let via_product: PuiseuxSeries<klein7::exact::Rational> =
            from_product(&spec, G, trunc).unwrap();
        let via_sum = from_f_sum(&rat_int(alpha), &rat_int(beta), G, trunc)
            .unwrap()
            .mul_monomial(&rat_int(1), shift);
        let report = via_product.compare(&via_sum).unwrap();
        ok &= report.is_equal() && report.bound_numerator() >= 60 * G;
    }
    announce("3 (triple-product oracle to order 60)", ok);
}

/// Criterion 4: the matrix algebra -- A symmetric, A^2 scalar, the T and T^2
/// words against the printed monomial displays (with the exact literal
/// scalars 7 and 49 pinned), and the 2x2 word decomposition.
#[test]
fn criterion_4_matrix_algebra() {
    let mut ok = true;
    let (a, b) = build_generators();
    ok &= a == a.transpose();
    let (inv_report, d) = klein::check_a_involution();
    ok &= inv_report.status == Status::Pass && d.is_some();

    let word = b.mul(&a).mul(&b.pow(2)).mul(&a).mul(&b.pow(4)).mul(&a);
    let eta1 = named_constant(NamedConstant::Eta1);
    let eta3 = named_constant(NamedConstant::Eta3);
    let scalar = &eta1 * &(&eta3 * &eta3);
    let zero = Cyc7::zero();
    let mono_t = Mat3::new([
        [zero.clone(), -&Cyc7::zeta_pow(4), zero.clone()],
        [zero.clone(), zero.clone(), Cyc7::zeta()],
        [Cyc7::zeta_pow(2), zero.clone(), zero.clone()],
    ]);
    let mono_t2 = Mat3::new([
        [zero.clone(), zero.clone(), -&Cyc7::zeta_pow(5)],
        [Cyc7::zeta_pow(3), zero.clone(), zero.clone()],
        [zero.clone(), -&Cyc7::zeta_pow(6), zero],
    ]);
    // The printed displays hold entrywise once the literal factor 7 of the
    // unnormalized word product is accounted for (exactly).
    ok &= word == mono_t.scalar_mul(&scalar).scalar_mul(&Cyc7::from_int(7));
    ok &= word.mul(&word)
        == mono_t2
            .scalar_mul(&(&scalar * &scalar))
            .scalar_mul(&Cyc7::from_int(49));

    let alpha = Mobius2::new(0, -1, 1, 0);
    let beta = Mobius2::new(1, 1, 0, 1);
    let w2 = beta
        .mul(&alpha)
        .mul(&beta.pow(2))
        .mul(&alpha)
        .mul(&beta.pow(4))
        .mul(&alpha);
    let expect = Mobius2::new(3, -1, 7, -2);
    ok &= w2 == expect || w2 == expect.neg();
    announce(
        "4 (A symmetric, A^2 scalar, T words, 2x2 decomposition)",
        ok,
    );
}

/// Criterion 5: root arithmetic -- f(r) = f(r') = f(r'') = 0, r' = eps1
/// eta3^2, the b-solve, and the full cusp-value table, all exact.
#[test]
fn criterion_5_root_arithmetic() {
    let f = [rat_int(1), rat_int(5), rat_int(-8), rat_int(1)];
    let r = named_constant(NamedConstant::R);
    let rp = named_constant(NamedConstant::RPrime);
    let rpp = named_constant(NamedConstant::RDblPrime);
    let mut ok = eval_poly(&f, &r).is_zero()
        && eval_poly(&f, &rp).is_zero()
        && eval_poly(&f, &rpp).is_zero();
    ok &= rp == named_constant(NamedConstant::Eps1Eta3Sq);
    let den = &(&(&r * &r) - &r.scale(&rat_int(8))) + &Cyc7::from_int(4);
    ok &= &(&r + &Cyc7::one()) * &den.inverse().unwrap() == -&r;
    ok &= klein::check_roots().status == Status::Pass;
    ok &= klein::check_thm4_algebra().status == Status::Pass;
    ok &= klein::check_cusp_orbit().status == Status::Pass;
    announce("5 (cubic roots, b-solve, cusp-value table)", ok);
}

/// Criterion 6: the three polynomial identities, truncation-free.
#[test]
fn criterion_6_polynomial_identities() {
    let mut ok = true;
    for id in ["poly-P1", "poly-AminusB", "poly-T8b"] {
        let r = identities::verify(id, 5).unwrap();
        ok &= r.status == Status::Pass && r.order_checked.is_none();
    }
    announce("6 (trivariate polynomial identities)", ok);
}

/// Criterion 7: the numeric transformation laws at all five default points
/// with errors <= 1e-8, and the cusp limit at Y = 4 within 1e-6.
#[test]
fn criterion_7_numeric_transformation_laws() {
    let mut ok = true;
    let checks = [
        NumericCheck::Thm2,
        NumericCheck::Thm3,
        NumericCheck::Thm4,
        NumericCheck::ThetaInversion,
        NumericCheck::ThetaSplit,
        NumericCheck::StThetaForm,
    ];
    for check in checks {
        for tau in numeric::default_test_points() {
            match numeric::run_check(check, tau, 64, 1e-8) {
                Ok(r) => {
                    if !r.pass {
                        eprintln!("  {} at {tau}: max error {}", r.check, r.max_error);
                        ok = false;
                    }
                }
                Err(e) => {
                    eprintln!("  {} at {tau}: {e}", check.as_str());
                    ok = false;
                }
            }
        }
    }
    match numeric::run_check(NumericCheck::H0Limit, Complex64::new(0.0, 4.0), 64, 1e-6) {
        Ok(r) => ok &= r.pass,
        Err(_) => ok = false,
    }
    announce(
        "7 (thm2/thm3/thm4/theta laws at 5 points, h0-limit at Y=4)",
        ok,
    );
}

/// Criterion 8: mutation sensitivity -- perturbing a single u coefficient
/// (several positions sampled across the verified window, integral and
/// fractional deltas) always trips at least one registry entry at order 40.
#[test]
fn criterion_8_mutation_sensitivity() {
    let mut ok = true;
    let positions: [(i64, klein7::exact::Rational); 6] = [
        (3, rat_int(1)),     // the leading coefficient itself
        (3 + G, rat_int(1)), // a zero coefficient just above it
        (3 + 5 * G, rat_int(-2)),
        (3 + 17 * G, rat(1, 3)), // fractional bump
        (3 + 33 * G, rat_int(1)),
        (3 + 39 * G, rat_int(5)), // the last order inside the window
    ];
    for (n, delta) in positions {
        let ctx = BuildContext::new(40).with_u_perturbation(n, delta.clone());
        let reports = identities::verify_all_with(&ctx);
        let failures: Vec<&str> = reports
            .iter()
            .filter(|r| r.status == Status::Fail)
            .map(|r| r.id.as_str())
            .collect();
        if failures.is_empty() {
            eprintln!("  perturbation at numerator {n} by {delta} went unnoticed");
            ok = false;
        } else if !reports
            .iter()
            .any(|r| r.status == Status::Fail && r.first_mismatch.is_some())
        {
            eprintln!("  perturbation at numerator {n}: failures lack a first_mismatch");
            ok = false;
        }
    }
    announce("8 (single-coefficient mutations are caught)", ok);
}

/// Criterion 9: the cube-root route agrees with the root-free cube route to
/// order 40, and both sides of the cube-root identity lead at exactly
/// q^(3/8).
#[test]
fn criterion_9_nth_root_cross_validation() {
    let ctx = BuildContext::new(40);
    let mut ok = true;

    let (l_root, r_root) = builders::eq4_cuberoot(&ctx).unwrap();
    let (l_cube, r_cube) = builders::eq4_cubed(&ctx).unwrap();
    let target = 40 * G;
    for (a, b) in [
        (l_root.int_pow(3).unwrap(), l_cube),
        (r_root.int_pow(3).unwrap(), r_cube),
    ] {
        let rep = a.compare_up_to(&b, target).unwrap();
        ok &= rep.is_equal() && rep.bound_numerator() >= target;
    }

    let (l8, r8) = builders::thm8a_eta(&ctx).unwrap();
    let (l8c, r8c) = builders::bz_cube_8a(&ctx).unwrap();
    for (a, b) in [(l8.int_pow(3).unwrap(), l8c), (r8.int_pow(3).unwrap(), r8c)] {
        let rep = a.compare_up_to(&b, target).unwrap();
        ok &= rep.is_equal() && rep.bound_numerator() >= target;
    }

    ok &= l_root.lead_exponent().unwrap() == rat(3, 8);
    ok &= r_root.lead_exponent().unwrap() == rat(3, 8);
    announce(
        "9 (cube-root route vs cube route, leading exponent 3/8)",
        ok,
    );
}
