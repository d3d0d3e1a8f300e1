//! The exact verification procedures for the matrix algebra and the cusp
//! bookkeeping. Each check runs a fixed list of equalities in Q(zeta_7) and
//! reports the first failure, in the same report format the identity
//! registry uses.

use std::time::Instant;

use crate::exact::{eval_poly, named_constant, rat, rat_int, Cyc7, NamedConstant, Rational};
use crate::identities::{Mismatch, Status, VerificationReport};

use super::matrices::{build_generators, Mat3, Mobius2, MobiusOnH, ProjPoint};

pub const KLEIN_CHECK_IDS: [&str; 8] = [
    "klein-generators",
    "klein-A2-scalar",
    "klein-T",
    "klein-word",
    "klein-roots",
    "klein-thm4",
    "klein-cusp-orbit",
    "klein-thm2-chain",
];

/// Collects exact assertions and their first failure.
struct Checker {
    id: &'static str,
    started: Instant,
    first_failure: Option<Mismatch>,
}

impl Checker {
    fn new(id: &'static str) -> Self {
        Checker {
            id,
            started: Instant::now(),
            first_failure: None,
        }
    }

    fn eq_cyc(&mut self, what: &str, got: &Cyc7, want: &Cyc7) {
        if self.first_failure.is_none() && got != want {
            self.first_failure = Some(Mismatch {
                location: what.to_owned(),
                lhs: got.to_string(),
                rhs: want.to_string(),
            });
        }
    }

    fn holds(&mut self, what: &str, cond: bool) {
        if self.first_failure.is_none() && !cond {
            self.first_failure = Some(Mismatch {
                location: what.to_owned(),
                lhs: "false".into(),
                rhs: "true".into(),
            });
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            id: self.id.to_owned(),
            status: if self.first_failure.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            order_checked: None,
            first_mismatch: self.first_failure,
            wall_time_ms: self.started.elapsed().as_secs_f64() * 1e3,
        }
    }
}

fn cusp_cubic() -> Vec<Rational> {
    // x^3 - 8x^2 + 5x + 1, lowest degree first.
    vec![rat_int(1), rat_int(5), rat_int(-8), rat_int(1)]
}

/// Structural facts about the generators: A is symmetric with the printed
/// entries, B is diagonal of exact order 7.
pub fn check_generators() -> VerificationReport {
    let mut c = Checker::new("klein-generators");
    let (a, b) = build_generators();
    let eps1 = named_constant(NamedConstant::Eps1);
    let minus_eta3 = -&named_constant(NamedConstant::Eta3);
    c.holds("A = A^T", a == a.transpose());
    c.eq_cyc("A[0][0] = eps1", a.entry(0, 0), &eps1);
    c.eq_cyc(
        "A[0][1] = eps1^2 - eps1 - 1 = -eta3",
        a.entry(0, 1),
        &minus_eta3,
    );
    c.eq_cyc("A[0][2] = 1", a.entry(0, 2), &Cyc7::one());
    c.eq_cyc("A[1][1] = -1", a.entry(1, 1), &(-&Cyc7::one()));
    c.eq_cyc("A[1][2] = -eps1", a.entry(1, 2), &(-&eps1));
    c.holds("B^7 = I", b.pow(7) == Mat3::identity());
    c.holds("B^3 != I", b.pow(3) != Mat3::identity());
    c.finish()
}

/// A^2 must be a scalar matrix; returns the check report together with the
/// computed scalar d (which is not printed anywhere, so it is computed, not
/// asserted a priori).
pub fn check_a_involution() -> (VerificationReport, Option<Cyc7>) {
    let mut c = Checker::new("klein-A2-scalar");
    let (a, _) = build_generators();
    let a2 = a.mul(&a);
    let d = a2.as_scalar();
    c.holds("A^2 is scalar", d.is_some());
    if let Some(d) = &d {
        let eps1 = named_constant(NamedConstant::Eps1);
        let eta3 = named_constant(NamedConstant::Eta3);
        let expect = &(&(&eps1 * &eps1) + &(&eta3 * &eta3)) + &Cyc7::one();
        c.eq_cyc("d = eps1^2 + eta3^2 + 1", d, &expect);
        // Scalarity implies A^2 v = d v for any vector; exercise one.
        let v = [
            Cyc7::zeta_pow(3),
            &Cyc7::eta(2) + &Cyc7::one(),
            Cyc7::from_int(-2),
        ];
        let av = a2.apply(&v);
        for (i, x) in av.iter().enumerate() {
            c.eq_cyc(&format!("(A^2 v)[{i}] = d v[{i}]"), x, &(d * &v[i]));
        }
    }
    (c.finish(), d)
}

/// The printed monomial form of T = B A B^2 A B^4 A and of T^2.
///
/// The displayed matrices are projective: the literal word product carries
/// an extra rational factor 7 (and 49 for the square), which this check
/// computes and pins exactly.
pub fn check_t() -> VerificationReport {
    let mut c = Checker::new("klein-T");
    let (a, b) = build_generators();
    let word = b.mul(&a).mul(&b.pow(2)).mul(&a).mul(&b.pow(4)).mul(&a);
    let eta1 = named_constant(NamedConstant::Eta1);
    let eta3 = named_constant(NamedConstant::Eta3);
    let scalar_t = &eta1 * &(&eta3 * &eta3);
    let zero = Cyc7::zero();
    let mono_t = Mat3::new([
        [zero.clone(), -&Cyc7::zeta_pow(4), zero.clone()],
        [zero.clone(), zero.clone(), Cyc7::zeta()],
        [Cyc7::zeta_pow(2), zero.clone(), zero.clone()],
    ]);
    let printed_t = mono_t.scalar_mul(&scalar_t);
    c.holds(
        "B A B^2 A B^4 A = 7 * (printed T)",
        word == printed_t.scalar_mul(&Cyc7::from_int(7)),
    );
    c.eq_cyc(
        "T[0][1] entry",
        word.entry(0, 1),
        &(-&(&scalar_t * &Cyc7::zeta_pow(4))).scale(&rat_int(7)),
    );
    c.eq_cyc("T[0][0] entry", word.entry(0, 0), &Cyc7::zero());

    let word2 = word.mul(&word);
    let scalar_t2 = &scalar_t * &scalar_t;
    let mono_t2 = Mat3::new([
        [zero.clone(), zero.clone(), -&Cyc7::zeta_pow(5)],
        [Cyc7::zeta_pow(3), zero.clone(), zero.clone()],
        [zero.clone(), -&Cyc7::zeta_pow(6), zero],
    ]);
    let printed_t2 = mono_t2.scalar_mul(&scalar_t2);
    c.holds(
        "T^2 = 49 * (printed T^2)",
        word2 == printed_t2.scalar_mul(&Cyc7::from_int(49)),
    );
    // Sanity on the printed displays themselves: (printed T)^2 = printed T^2.
    c.holds(
        "(printed T)^2 = printed T^2",
        printed_t.mul(&printed_t) == printed_t2,
    );
    // The scalar consequence used for h: applying T^2 to (s, t, 1) gives
    // s -> -zeta^5/(-zeta^6 t), t -> zeta^3 s/(-zeta^6 t); the monomial
    // coefficients must multiply out to exactly 1 in s^2/t^3.
    let a_ = -&Cyc7::zeta_pow(5);
    let b_ = Cyc7::zeta_pow(3);
    let c_ = -&Cyc7::zeta_pow(6);
    let coeff = &(&a_ * &(&b_ * &b_)) * &(&c_ * &(&c_ * &c_)).inverse().expect("nonzero");
    c.eq_cyc("monomial coefficient of s^2/t^3", &coeff, &Cyc7::one());
    c.finish()
}

/// The 2x2 word beta alpha beta^2 alpha beta^4 alpha against the inverse of
/// (2, -1; 7, -3), up to sign.
pub fn check_word_decomposition() -> VerificationReport {
    let mut c = Checker::new("klein-word");
    let alpha = Mobius2::new(0, -1, 1, 0);
    let beta = Mobius2::new(1, 1, 0, 1);
    let word = beta
        .mul(&alpha)
        .mul(&beta.pow(2))
        .mul(&alpha)
        .mul(&beta.pow(4))
        .mul(&alpha);
    let expect = Mobius2::new(3, -1, 7, -2);
    c.holds(
        "beta alpha beta^2 alpha beta^4 alpha = +-(3, -1; 7, -2)",
        word == expect || word == expect.neg(),
    );
    let a = Mobius2::new(2, -1, 7, -3);
    let prod = a.mul(&expect);
    c.holds(
        "(2, -1; 7, -3)(3, -1; 7, -2) = +-I",
        prod == Mobius2::identity() || prod == Mobius2::identity().neg(),
    );
    c.holds("det(2, -1; 7, -3) = 1", a.det() == 1);
    c.finish()
}

/// f(r) = f(r') = f(r'') = 0 with f = x^3 - 8x^2 + 5x + 1, the relations
/// among the three roots, and Vieta's identities -- all exactly in Q(zeta_7).
pub fn check_roots() -> VerificationReport {
    let mut c = Checker::new("klein-roots");
    let f = cusp_cubic();
    let r = named_constant(NamedConstant::R);
    let rp = named_constant(NamedConstant::RPrime);
    let rpp = named_constant(NamedConstant::RDblPrime);
    c.eq_cyc("f(r) = 0", &eval_poly(&f, &r), &Cyc7::zero());
    c.eq_cyc("f(r') = 0", &eval_poly(&f, &rp), &Cyc7::zero());
    c.eq_cyc("f(r'') = 0", &eval_poly(&f, &rpp), &Cyc7::zero());
    c.eq_cyc(
        "r' = eps1 eta3^2",
        &rp,
        &named_constant(NamedConstant::Eps1Eta3Sq),
    );
    // r as printed: 3(zeta^5 + zeta^2) + zeta^3 + zeta^4 + 4.
    let r_printed = Cyc7::from_powers(&[
        (5, rat_int(3)),
        (2, rat_int(3)),
        (3, rat_int(1)),
        (4, rat_int(1)),
        (0, rat_int(4)),
    ]);
    c.eq_cyc("r = 3(z^5 + z^2) + z^3 + z^4 + 4", &r, &r_printed);
    // Vieta: e1 = 8, e2 = 5, e3 = -1.
    let e1 = &(&r + &rp) + &rpp;
    c.eq_cyc("r + r' + r'' = 8", &e1, &Cyc7::from_int(8));
    let e2 = &(&(&r * &rp) + &(&r * &rpp)) + &(&rp * &rpp);
    c.eq_cyc("rr' + rr'' + r'r'' = 5", &e2, &Cyc7::from_int(5));
    let e3 = &(&r * &rp) * &rpp;
    c.eq_cyc("r r' r'' = -1", &e3, &Cyc7::from_int(-1));
    c.finish()
}

/// The small algebra inside the Fricke-involution argument: the b-solve,
/// the order-2 property of mu, and the excluded non-conjugate value.
pub fn check_thm4_algebra() -> VerificationReport {
    let mut c = Checker::new("klein-thm4");
    let r = named_constant(NamedConstant::R);
    let one = Cyc7::one();
    // (r + 1)/(r^2 - 8r + 4) = -r.
    let den = &(&(&r * &r) - &r.scale(&rat_int(8))) + &Cyc7::from_int(4);
    let b = &(&r + &one) * &den.inverse().expect("nonzero");
    c.eq_cyc("(r + 1)/(r^2 - 8r + 4) = -r", &b, &(-&r));
    // mu has order 2 projectively, and pointwise on generic values.
    let mu = MobiusOnH::mu();
    c.holds("mu o mu is scalar", mu.compose(&mu).as_scalar().is_some());
    for (i, h0) in [
        Cyc7::from_powers(&[(1, rat_int(2)), (3, rat(1, 2)), (0, rat_int(-1))]),
        Cyc7::from_powers(&[(2, rat_int(1)), (5, rat_int(4)), (0, rat(3, 7))]),
    ]
    .iter()
    .enumerate()
    {
        let image = mu.apply(&mu.apply_value(h0.clone()));
        c.holds(
            &format!("mu(mu(h{i})) = h{i}"),
            image.eq_projective(&ProjPoint::from_value(h0.clone())),
        );
    }
    // The excluded value (r - 1)/((1 - r) r - 1) = (5/49) r^2 - (43/49) r + 41/49,
    // and it is not a root of the cusp cubic.
    let excl_den = &(&(&one - &r) * &r) - &one;
    let excl = &(&r - &one) * &excl_den.inverse().expect("nonzero");
    let excl_poly = eval_poly(&[rat(41, 49), rat(-43, 49), rat(5, 49)], &r);
    c.eq_cyc("excluded value as a polynomial in r", &excl, &excl_poly);
    c.holds(
        "f(excluded value) != 0",
        !eval_poly(&cusp_cubic(), &excl).is_zero(),
    );
    c.finish()
}

/// The six cusp values {inf, 1, 0, r, r', r''} under nu and mu: the printed
/// value table, the 3-cycle / 2-cycle structure, and orbit closure.
pub fn check_cusp_orbit() -> VerificationReport {
    let mut c = Checker::new("klein-cusp-orbit");
    let nu = MobiusOnH::nu();
    let mu = MobiusOnH::mu();
    let r = named_constant(NamedConstant::R);
    let rp = named_constant(NamedConstant::RPrime);
    let rpp = named_constant(NamedConstant::RDblPrime);

    let inf = ProjPoint::infinity();
    let one = ProjPoint::from_value(Cyc7::one());
    let zero = ProjPoint::from_value(Cyc7::zero());
    let pr = ProjPoint::from_value(r.clone());
    let prp = ProjPoint::from_value(rp.clone());
    let prpp = ProjPoint::from_value(rpp.clone());

    // The value table seeded by h(inf i) = inf: nu gives h(2/7) = 1 and
    // h(3/7) = 0; mu gives h(0) = r', h(-1/2) = r'', h(-1/3) = r.
    c.holds("nu(inf) = 1", nu.apply(&inf).eq_projective(&one));
    c.holds("nu(1) = 0", nu.apply(&one).eq_projective(&zero));
    c.holds("nu(0) = inf", nu.apply(&zero).eq_projective(&inf));
    c.holds(
        "mu(inf) = r' = 1/(1 - r)",
        mu.apply(&inf).eq_projective(&prp),
    );
    c.holds(
        "mu(1) = r'' = (r - 1)/r",
        mu.apply(&one).eq_projective(&prpp),
    );
    c.holds("mu(0) = r", mu.apply(&zero).eq_projective(&pr));

    // nu cycles the root triple r -> r'' -> r' -> r.
    c.holds("nu(r) = r''", nu.apply(&pr).eq_projective(&prpp));
    c.holds("nu(r'') = r'", nu.apply(&prpp).eq_projective(&prp));
    c.holds("nu(r') = r", nu.apply(&prp).eq_projective(&pr));
    // mu swaps the seeds back.
    c.holds("mu(r) = 0", mu.apply(&pr).eq_projective(&zero));
    c.holds("mu(r') = inf", mu.apply(&prp).eq_projective(&inf));
    c.holds("mu(r'') = 1", mu.apply(&prpp).eq_projective(&one));

    // Projective orders.
    c.holds(
        "nu^3 is scalar",
        nu.compose(&nu).compose(&nu).as_scalar().is_some(),
    );
    c.holds("nu is not scalar", nu.as_scalar().is_none());
    c.holds("mu^2 is scalar", mu.compose(&mu).as_scalar().is_some());

    // Orbit closure: both maps send the six-value set into itself.
    let orbit = [inf, one, zero, pr, prp, prpp];
    for (name, map) in [("nu", &nu), ("mu", &mu)] {
        for (i, p) in orbit.iter().enumerate() {
            let image = map.apply(p);
            c.holds(
                &format!("{name}(orbit[{i}]) stays in the orbit"),
                orbit.iter().any(|q| image.eq_projective(q)),
            );
        }
    }
    c.finish()
}

/// The cyclotomic simplification chain behind the s(-1/tau), t(-1/tau)
/// coefficient matrix, including the zeta_14 -> zeta_7 conversions via
/// zeta_14 = -zeta_7^4.
pub fn check_thm2_coefficients() -> VerificationReport {
    let mut c = Checker::new("klein-thm2-chain");
    let z = Cyc7::zeta();
    let one = Cyc7::one();
    let eps1 = named_constant(NamedConstant::Eps1);
    let eta3 = named_constant(NamedConstant::Eta3);

    // -z^2 (1 + z)(1 + z^2) = eps1.
    let lhs = -&(&(&(&z * &z) * &(&one + &z)) * &(&one + &(&z * &z)));
    c.eq_cyc("-z^2 (1+z)(1+z^2) = eps1", &lhs, &eps1);
    // -z^3 (1 + z) = -eta3.
    let lhs = -&(&Cyc7::zeta_pow(3) * &(&one + &z));
    c.eq_cyc("-z^3 (1+z) = -eta3", &lhs, &(-&eta3));
    // eps1^2 - eps1 - 1 = -eta3.
    let lhs = &(&(&eps1 * &eps1) - &eps1) - &one;
    c.eq_cyc("eps1^2 - eps1 - 1 = -eta3", &lhs, &(-&eta3));

    // zeta_14 = -zeta_7^4; the five conversions used in the derivation.
    let z14 = -&Cyc7::zeta_pow(4);
    let p = |k: u32| z14_pow(&z14, k);
    c.eq_cyc(
        "z14^12 - z14^4 = z^6 - z^2",
        &(&p(12) - &p(4)),
        &(&Cyc7::zeta_pow(6) - &Cyc7::zeta_pow(2)),
    );
    c.eq_cyc(
        "z14^13 + z14^10 = z^5 - z^3",
        &(&p(13) + &p(10)),
        &(&Cyc7::zeta_pow(5) - &Cyc7::zeta_pow(3)),
    );
    c.eq_cyc("1 + z14^9 = 1 - z", &(&one + &p(9)), &(&one - &z));
    c.eq_cyc(
        "z14^5 + z14^4 = z^2 - z^6",
        &(&p(5) + &p(4)),
        &(&Cyc7::zeta_pow(2) - &Cyc7::zeta_pow(6)),
    );
    c.eq_cyc(
        "z14^10 - z14^6 = z^5 - z^3",
        &(&p(10) - &p(6)),
        &(&Cyc7::zeta_pow(5) - &Cyc7::zeta_pow(3)),
    );

    // Normalizing the numerator and denominator rows by (1 - z) recovers the
    // printed coefficients.
    let inv = (&one - &z).inverse().expect("1 - zeta != 0");
    let lhs = &(&Cyc7::zeta_pow(6) - &Cyc7::zeta_pow(2)) * &inv;
    c.eq_cyc("(z^6 - z^2)/(1 - z) = eps1", &lhs, &eps1);
    let lhs = &(&Cyc7::zeta_pow(5) - &Cyc7::zeta_pow(3)) * &inv;
    c.eq_cyc("(z^5 - z^3)/(1 - z) = -eta3", &lhs, &(-&eta3));
    c.finish()
}

fn z14_pow(z14: &Cyc7, k: u32) -> Cyc7 {
    let mut out = Cyc7::one();
    for _ in 0..k {
        out = &out * z14;
    }
    out
}

/// Run every matrix/root check, in registry-report form.
pub fn run_all_checks() -> Vec<VerificationReport> {
    vec![
        check_generators(),
        check_a_involution().0,
        check_t(),
        check_word_decomposition(),
        check_roots(),
        check_thm4_algebra(),
        check_cusp_orbit(),
        check_thm2_coefficients(),
    ]
}
