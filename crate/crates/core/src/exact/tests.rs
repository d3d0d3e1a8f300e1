use proptest::prelude::*;

use super::*;

fn zeta(k: i64) -> Cyc7 {
    Cyc7::zeta_pow(k)
}

#[test]
fn zeta_times_zeta6_is_one() {
    assert_eq!(&zeta(1) * &zeta(6), Cyc7::one());
}

#[test]
fn period_sum_is_minus_one() {
    let sum = &(&Cyc7::eta(1) + &Cyc7::eta(2)) + &Cyc7::eta(3);
    assert_eq!(sum, Cyc7::from_int(-1));
}

#[test]
fn eta1_times_eta3() {
    // (z + z^6)(z^3 + z^4) = z^4 + z^5 + z^9 + z^10 = eta2 + eta3.
    let lhs = &Cyc7::eta(1) * &Cyc7::eta(3);
    let rhs = &Cyc7::eta(2) + &Cyc7::eta(3);
    assert_eq!(lhs, rhs);
}

#[test]
fn eps1_canonical_form() {
    // 1 + z + z^6 rewritten through Phi_7: -(z^2 + z^3 + z^4 + z^5).
    let eps1 = named_constant(NamedConstant::Eps1);
    let coeffs: Vec<Rational> = eps1.coeffs().to_vec();
    let expect = [0, 0, -1, -1, -1, -1].map(rat_int);
    assert_eq!(coeffs, expect);
}

#[test]
fn eps1_quadratic_reduces_to_minus_eta3() {
    let eps1 = named_constant(NamedConstant::Eps1);
    let lhs = &(&(&eps1 * &eps1) - &eps1) - &Cyc7::one();
    assert_eq!(lhs, -&Cyc7::eta(3));
}

#[test]
fn inverse_basics() {
    assert_eq!(Cyc7::one().inverse().unwrap(), Cyc7::one());
    assert_eq!(zeta(1).inverse().unwrap(), zeta(6));
    assert_eq!(Cyc7::zero().inverse(), Err(ExactError::DivisionByZero));
    assert_eq!(
        Cyc7::zero().inverse_by_conjugates(),
        Err(ExactError::DivisionByZero)
    );
}

#[test]
fn r_in_printed_form() {
    // -eta1^2 * eta3^{-1} = 3(z^5 + z^2) + z^3 + z^4 + 4.
    let eta1 = Cyc7::eta(1);
    let r = &(-&(&eta1 * &eta1)) * &Cyc7::eta(3).inverse().unwrap();
    let expect: Vec<Rational> = [4, 0, 3, 1, 1, 3].map(rat_int).to_vec();
    assert_eq!(r.coeffs().to_vec(), expect);
    assert_eq!(r, named_constant(NamedConstant::R));
}

fn cubic() -> Vec<Rational> {
    vec![rat_int(1), rat_int(5), rat_int(-8), rat_int(1)]
}

#[test]
fn roots_annihilate_the_cubic() {
    for name in [
        NamedConstant::R,
        NamedConstant::RPrime,
        NamedConstant::RDblPrime,
    ] {
        let x = named_constant(name);
        assert!(eval_poly(&cubic(), &x).is_zero(), "f({name:?}) != 0");
    }
    // r' coincides with eps1 eta3^2.
    assert_eq!(
        named_constant(NamedConstant::RPrime),
        named_constant(NamedConstant::Eps1Eta3Sq)
    );
    assert!(eval_poly(&[rat_int(0), rat_int(1)], &Cyc7::zero()).is_zero());
}

#[test]
fn vieta_for_the_cubic() {
    let r = named_constant(NamedConstant::R);
    let rp = named_constant(NamedConstant::RPrime);
    let rpp = named_constant(NamedConstant::RDblPrime);
    assert_eq!(&(&r + &rp) + &rpp, Cyc7::from_int(8));
    let e2 = &(&(&r * &rp) + &(&r * &rpp)) + &(&rp * &rpp);
    assert_eq!(e2, Cyc7::from_int(5));
    assert_eq!(&(&r * &rp) * &rpp, Cyc7::from_int(-1));
}

#[test]
fn constant_names_round_trip() {
    for c in NamedConstant::ALL {
        assert_eq!(NamedConstant::parse(c.as_str()), Ok(c));
    }
    assert!(matches!(
        NamedConstant::parse("nonesuch"),
        Err(ExactError::UnknownConstant(_))
    ));
}

#[test]
fn embed_basics() {
    let one = Cyc7::one().embed(1, 10).unwrap();
    assert!((one.re - 1.0).abs() < 1e-12 && one.im.abs() < 1e-12);
    let eta1 = Cyc7::eta(1).embed(1, 10).unwrap();
    let expect = 2.0 * (2.0 * std::f64::consts::PI / 7.0).cos();
    assert!((eta1.re - expect).abs() < 1e-12);
    assert!(Cyc7::one().embed(0, 10).is_err());
    assert!(Cyc7::one().embed(7, 10).is_err());
    // Precision beyond what f64 can certify is refused, not faked.
    assert!(matches!(
        Cyc7::eta(1).embed(1, 30),
        Err(ExactError::PrecisionUnattainable { .. })
    ));
}

/// Floating root-finder oracle: Newton iteration on x^3 - 8x^2 + 5x + 1.
fn newton_root(seed: f64) -> f64 {
    let f = |x: f64| x * x * x - 8.0 * x * x + 5.0 * x + 1.0;
    let df = |x: f64| 3.0 * x * x - 16.0 * x + 5.0;
    let mut x = seed;
    for _ in 0..80 {
        x -= f(x) / df(x);
    }
    x
}

#[test]
fn embed_roots_match_floating_roots() {
    // The three real roots found independently by Newton iteration must be
    // exactly the embeddings of {r, r', r''} (as a set).
    let mut roots = [newton_root(7.5), newton_root(0.9), newton_root(-0.2)];
    roots.sort_by(f64::total_cmp);
    let mut embedded: Vec<f64> = [
        NamedConstant::R,
        NamedConstant::RPrime,
        NamedConstant::RDblPrime,
    ]
    .iter()
    .map(|c| {
        let a = named_constant(*c).embed(1, 10).unwrap();
        assert!(
            a.im.abs() < 1e-10,
            "{c:?} is real under the principal embedding"
        );
        a.re
    })
    .collect();
    embedded.sort_by(f64::total_cmp);
    for (root, emb) in roots.iter().zip(&embedded) {
        assert!((root - emb).abs() < 1e-10, "root {root} vs embedded {emb}");
    }
}

#[test]
fn zeta14_embedding_is_consistent() {
    // zeta_14 = -zeta_7^4 squares to zeta_7 and has seventh power -1.
    let z14 = -&zeta(4);
    assert_eq!(&z14 * &z14, zeta(1));
    let mut pow7 = Cyc7::one();
    for _ in 0..7 {
        pow7 = &pow7 * &z14;
    }
    assert_eq!(pow7, Cyc7::from_int(-1));
}

#[test]
fn rational_strings_round_trip() {
    for (s, n, d) in [("3/4", 3, 4), ("-7", -7, 1), ("0", 0, 1), ("41/49", 41, 49)] {
        let r = rational_from_str(s).unwrap();
        assert_eq!(r, rat(n, d));
        assert_eq!(rational_to_string(&r), s);
    }
    assert!(rational_from_str("1/0").is_none());
    assert!(rational_from_str("x").is_none());
}

#[test]
fn complex_approx_propagates_errors() {
    let a = ComplexApprox::new(1.0, 0.0, 1e-12);
    let b = ComplexApprox::new(2.0, -1.0, 1e-12);
    let sum = a.add(&b);
    assert!(sum.err >= 2e-12);
    let prod = a.mul(&b);
    assert!(prod.err >= 1e-12);
    let q = prod.div(&b);
    assert!(q.dist(&a) < 1e-10);
}

// ---------------------------------------------------------------------------
// Property tests
// ---------------------------------------------------------------------------

fn arb_cyc() -> impl Strategy<Value = Cyc7> {
    proptest::collection::vec((-20i64..20, 1i64..6), 6).prop_map(|cs| {
        let powers: Vec<(i64, Rational)> = cs
            .into_iter()
            .enumerate()
            .map(|(k, (n, d))| (k as i64, rat(n, d)))
            .collect();
        Cyc7::from_powers(&powers)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn prop_inverse_round_trip(a in arb_cyc()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(&a * &inv, Cyc7::one());
    }

    #[test]
    fn prop_inverse_methods_agree(a in arb_cyc()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.inverse().unwrap(), a.inverse_by_conjugates().unwrap());
    }

    #[test]
    fn prop_embedding_respects_arithmetic(a in arb_cyc(), b in arb_cyc()) {
        let ea = a.embed(1, 8).unwrap();
        let eb = b.embed(1, 8).unwrap();
        let sum = (&a + &b).embed(1, 8).unwrap();
        prop_assert!(sum.dist(&ea.add(&eb)) <= sum.err + ea.err + eb.err + 1e-9);
        let prod = (&a * &b).embed(1, 8).unwrap();
        prop_assert!(prod.dist(&ea.mul(&eb)) <= prod.err + ea.mul(&eb).err + 1e-9);
    }

    #[test]
    fn prop_embed_against_direct_summation(a in arb_cyc()) {
        // Independent route: Horner-free term-by-term sum in reverse order.
        let approx = a.embed(1, 8).unwrap();
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in a.coeffs().iter().enumerate().rev() {
            let x = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / 7.0;
            re += x * ang.cos();
            im += x * ang.sin();
        }
        let dist = ((approx.re - re).powi(2) + (approx.im - im).powi(2)).sqrt();
        prop_assert!(dist <= approx.err + 1e-9);
    }

    #[test]
    fn prop_conjugations_commute_with_mul(a in arb_cyc(), b in arb_cyc(), j in 1i64..=6) {
        let lhs = (&a * &b).conjugate(j).unwrap();
        let rhs = &a.conjugate(j).unwrap() * &b.conjugate(j).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
