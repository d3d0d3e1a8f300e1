//! Complex floating-point evaluation of series and of theta functions with
//! characteristics, used to validate the analytic transformation laws that
//! are not pure q-series statements.
//!
//! Conventions (fixed here, exercised behaviorally by `st-theta-form`):
//! `theta[eps, eps'](tau)` sums exp(2 pi i ((n + eps/2)^2 tau/2 +
//! (n + eps/2) eps'/2)) over the integers, under which the normalizations
//! u = e(-1/28) theta[1/7, 1](7 tau), v = e(-3/28) theta[3/7, 1](7 tau),
//! w = e(-5/28) theta[5/7, 1](7 tau) hold. Fractional powers come directly
//! from tau as q^e = exp(2 pi i tau e), sidestepping branch cuts in q;
//! sqrt(tau) is principal.
//!
//! Values of h, z and the eta quotients at Moebius-transformed points are
//! computed through the lacunary theta/eta building blocks (direct bilateral
//! sums for u, v, w, eta with coefficients +-1), not through their dense
//! q-expansions: near the real axis the dense coefficients grow like
//! exp(c sqrt(n)) and would drown a double-precision evaluation, while the
//! bilateral sums converge after a few dozen terms.

#[cfg(test)]
mod tests;

use num_complex::Complex64;
use thiserror::Error;

use serde_json::{json, Value};

use crate::exact::{named_constant, rational_to_f64, NamedConstant, Rational};
use crate::series::{named_series, CoeffField, PuiseuxSeries, SeriesName, DEFAULT_GRID};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("tau must lie in the upper half-plane (got im = {0})")]
    LowerHalfPlane(f64),
    #[error("tail bound {bound:.3e} exceeds the tolerance {tol:.3e}; increase terms")]
    InsufficientTerms { bound: f64, tol: f64 },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unknown numeric check: {0} (expected thm2, thm3, thm4, theta-inversion, theta-split, theta-quasi, st-theta-form, f-remark or h0-limit)")]
    UnknownCheck(String),
}

/// e(z) = exp(2 pi i z) for real z.
pub fn e_phase(z: f64) -> Complex64 {
    Complex64::new(0.0, 2.0 * std::f64::consts::PI * z).exp()
}

/// q^e = exp(2 pi i tau e).
fn q_pow(tau: Complex64, e: f64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau * e).exp()
}

/// |q| = e^(-2 pi Im tau).
fn q_abs(tau: Complex64) -> f64 {
    (-2.0 * std::f64::consts::PI * tau.im).exp()
}

/// Characteristics of a theta function; arbitrary rationals are accepted.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaChar {
    pub eps: Rational,
    pub eps_prime: Rational,
}

impl ThetaChar {
    pub fn new(eps: Rational, eps_prime: Rational) -> Self {
        ThetaChar { eps, eps_prime }
    }
}

/// Direct summation of `theta[eps, eps'](tau)` over |n| <= terms.
pub fn theta_char_eval(ch: &ThetaChar, tau: Complex64, terms: i64) -> Complex64 {
    let eps = rational_to_f64(&ch.eps);
    let epsp = rational_to_f64(&ch.eps_prime);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in -terms..=terms {
        let a = n as f64 + eps / 2.0;
        let exponent = Complex64::new(0.0, 2.0 * std::f64::consts::PI)
            * (tau * (a * a / 2.0) + Complex64::new(a * epsp / 2.0, 0.0));
        acc += exponent.exp();
    }
    acc
}

/// Evaluate a truncated series at tau through q^e = exp(2 pi i tau e).
/// The reported tail bound is geometric, padded by the largest stored
/// coefficient magnitude; it must come in under `tol`.
pub fn eval_series<C: CoeffField>(
    a: &PuiseuxSeries<C>,
    tau: Complex64,
    tol: f64,
) -> Result<Complex64, NumericError> {
    if tau.im <= 0.0 {
        return Err(NumericError::LowerHalfPlane(tau.im));
    }
    let grid = a.grid() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut max_coeff: f64 = 1.0;
    for (n, c) in a.terms() {
        let (re, im) = c.to_complex();
        let coeff = Complex64::new(re, im);
        max_coeff = max_coeff.max(coeff.norm());
        acc += coeff * q_pow(tau, n as f64 / grid);
    }
    let qa = q_abs(tau);
    let tail_lead = qa.powf(a.trunc() as f64 / grid);
    let ratio = qa.powf(1.0 / grid);
    let bound = max_coeff * tail_lead / (1.0 - ratio);
    if !bound.is_finite() || bound > tol {
        return Err(NumericError::InsufficientTerms { bound, tol });
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Bilateral evaluators for the lacunary building blocks
// ---------------------------------------------------------------------------

/// sum_{|n| <= terms} (-1)^n q^(((alpha+beta) n^2 + (alpha-beta) n)/2 + shift),
/// together with a conservative tail bound.
fn bilateral(alpha: f64, beta: f64, shift: f64, tau: Complex64, terms: i64) -> (Complex64, f64) {
    let expo = |n: f64| ((alpha + beta) * n * n + (alpha - beta) * n) / 2.0 + shift;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in -terms..=terms {
        let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        acc += sign * q_pow(tau, expo(n as f64));
    }
    let qa = q_abs(tau);
    let m = (terms + 1) as f64;
    // Exponents grow at least linearly past the vertex; bound each wing by a
    // geometric series with the local gap.
    let mut bound = 0.0;
    for wing in [m, -m] {
        let e0 = expo(wing);
        let gap = (expo(wing + wing.signum()) - e0).abs().max(1.0);
        bound += qa.powf(e0) / (1.0 - qa.powf(gap));
    }
    (acc, bound)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Block {
    U,
    V,
    W,
    // Pentagonal-number sum; only the evaluator cross-check tests need it
    // so far, the transformation checks run on u, v, w.
    #[allow(dead_code)]
    Eta,
}

/// One lacunary block at tau: u, v, w as bilateral theta sums, eta as the
/// pentagonal-number sum.
fn eval_block(block: Block, tau: Complex64, terms: i64) -> (Complex64, f64) {
    match block {
        Block::U => bilateral(3.0, 4.0, 1.0 / 56.0, tau, terms),
        Block::V => bilateral(2.0, 5.0, 9.0 / 56.0, tau, terms),
        Block::W => bilateral(1.0, 6.0, 25.0 / 56.0, tau, terms),
        // eta = sum (-1)^k q^(k(3k-1)/2 + 1/24) = f(-q, -q^2) shifted.
        Block::Eta => bilateral(1.0, 2.0, 1.0 / 24.0, tau, terms),
    }
}

/// h = u v^2 / w^3 evaluated through the bilateral sums.
fn eval_h(tau: Complex64, terms: i64, tol: f64) -> Result<Complex64, NumericError> {
    let (u, bu) = eval_block(Block::U, tau, terms);
    let (v, bv) = eval_block(Block::V, tau, terms);
    let (w, bw) = eval_block(Block::W, tau, terms);
    let bound = bu.max(bv).max(bw);
    if !bound.is_finite() || bound > tol {
        return Err(NumericError::InsufficientTerms { bound, tol });
    }
    // w is legitimately small high in the half-plane (leading power
    // q^(25/56)); degenerate only when it is indistinguishable from zero.
    if w.norm() <= 10.0 * bound {
        return Err(NumericError::DegenerateInput(format!(
            "w(tau) has modulus {:.3e}, within the tail bound {:.3e}",
            w.norm(),
            bound
        )));
    }
    Ok(u * v * v / (w * w * w))
}

fn embed_value(c: NamedConstant) -> Complex64 {
    let a = named_constant(c)
        .embed(1, 10)
        .expect("constant embeds in f64");
    Complex64::new(a.re, a.im)
}

fn require_upper(tau: Complex64) -> Result<(), NumericError> {
    if tau.im <= 0.0 {
        Err(NumericError::LowerHalfPlane(tau.im))
    } else {
        Ok(())
    }
}

fn require_upper_image(label: &str, tau: Complex64) -> Result<(), NumericError> {
    if tau.im <= 0.0 {
        Err(NumericError::DegenerateInput(format!(
            "{label} maps tau below the real axis (im = {}); this cannot happen for a genuine Moebius image",
            tau.im
        )))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// The check suite
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NumericCheck {
    Thm2,
    Thm3,
    Thm4,
    ThetaInversion,
    ThetaSplit,
    ThetaQuasi,
    StThetaForm,
    FRemark,
    H0Limit,
}

impl NumericCheck {
    pub const ALL: [NumericCheck; 9] = [
        NumericCheck::Thm2,
        NumericCheck::Thm3,
        NumericCheck::Thm4,
        NumericCheck::ThetaInversion,
        NumericCheck::ThetaSplit,
        NumericCheck::ThetaQuasi,
        NumericCheck::StThetaForm,
        NumericCheck::FRemark,
        NumericCheck::H0Limit,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            NumericCheck::Thm2 => "thm2",
            NumericCheck::Thm3 => "thm3",
            NumericCheck::Thm4 => "thm4",
            NumericCheck::ThetaInversion => "theta-inversion",
            NumericCheck::ThetaSplit => "theta-split",
            NumericCheck::ThetaQuasi => "theta-quasi",
            NumericCheck::StThetaForm => "st-theta-form",
            NumericCheck::FRemark => "f-remark",
            NumericCheck::H0Limit => "h0-limit",
        }
    }

    pub fn parse(name: &str) -> Result<Self, NumericError> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == name)
            .ok_or_else(|| NumericError::UnknownCheck(name.to_owned()))
    }
}

/// Outcome of one numeric check at one point.
#[derive(Clone, Debug)]
pub struct NumericCheckReport {
    pub check: &'static str,
    pub tau: Complex64,
    pub terms: i64,
    pub max_error: f64,
    pub tol: f64,
    pub pass: bool,
}

impl NumericCheckReport {
    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "tau": [self.tau.re, self.tau.im],
            "terms": self.terms,
            "max_error": self.max_error,
            "tol": self.tol,
            "status": if self.pass { "pass" } else { "fail" },
        })
    }
}

/// The five generic evaluation points used by the acceptance run.
pub fn default_test_points() -> [Complex64; 5] {
    [
        Complex64::new(0.2, 1.1),
        Complex64::new(-0.3, 0.8),
        Complex64::new(0.05, 1.4),
        Complex64::new(0.5, 0.9),
        Complex64::new(0.0, 1.0),
    ]
}

fn series_at_order(name: SeriesName, order: i64) -> PuiseuxSeries<Rational> {
    named_series(name, DEFAULT_GRID, order * DEFAULT_GRID)
        .expect("named series on the default grid")
}

/// s(tau), t(tau) through their product q-expansions.
fn st_by_series(
    tau: Complex64,
    order: i64,
    tol: f64,
) -> Result<(Complex64, Complex64), NumericError> {
    let s = eval_series(&series_at_order(SeriesName::S, order), tau, tol)?;
    let t = eval_series(&series_at_order(SeriesName::T, order), tau, tol)?;
    Ok((s, t))
}

fn check_thm2(tau: Complex64, terms: i64, tol: f64) -> Result<f64, NumericError> {
    let tau_inv = -1.0 / tau;
    require_upper_image("tau -> -1/tau", tau_inv)?;
    let order = terms.max(16);
    let (s, t) = st_by_series(tau, order, tol)?;
    let (s_inv, t_inv) = st_by_series(tau_inv, order, tol)?;
    let eps1 = embed_value(NamedConstant::Eps1);
    let eta3 = embed_value(NamedConstant::Eta3);
    // eps1^2 - eps1 - 1 reduces to -eta3 exactly; embed it independently.
    let m = eps1 * eps1 - eps1 - Complex64::new(1.0, 0.0);
    let den = s - eps1 * t - eta3;
    if den.norm() < 10.0 * tol {
        return Err(NumericError::DegenerateInput(format!(
            "transformation denominator has modulus {:.3e}",
            den.norm()
        )));
    }
    let s_rhs = (eps1 * s - eta3 * t + 1.0) / den;
    let t_rhs = (-eta3 * s - t - eps1) / den;
    let den_m = s - eps1 * t + m;
    let s_rhs_m = (eps1 * s + m * t + 1.0) / den_m;
    let t_rhs_m = (m * s - t - eps1) / den_m;
    Ok([
        (s_inv - s_rhs).norm(),
        (t_inv - t_rhs).norm(),
        (s_inv - s_rhs_m).norm(),
        (t_inv - t_rhs_m).norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max))
}

fn check_thm3(tau: Complex64, terms: i64, tol: f64) -> Result<f64, NumericError> {
    let image = (2.0 * tau - 1.0) / (7.0 * tau - 3.0);
    require_upper_image("tau -> (2tau - 1)/(7tau - 3)", image)?;
    let h = eval_h(tau, terms, tol)?;
    if h.norm() < 10.0 * tol {
        return Err(NumericError::DegenerateInput(format!(
            "h(tau) has modulus {:.3e}",
            h.norm()
        )));
    }
    let lhs = eval_h(image, terms, tol)?;
    let rhs = (h - 1.0) / h;
    Ok((lhs - rhs).norm())
}

fn check_thm4(tau: Complex64, terms: i64, tol: f64) -> Result<f64, NumericError> {
    let image = -1.0 / (7.0 * tau);
    require_upper_image("tau -> -1/(7 tau)", image)?;
    let h = eval_h(tau, terms, tol)?;
    let r = embed_value(NamedConstant::R);
    let den = (1.0 - r) * h - 1.0;
    if den.norm() < 10.0 * tol {
        return Err(NumericError::DegenerateInput(format!(
            "(1 - r) h - 1 has modulus {:.3e}",
            den.norm()
        )));
    }
    let lhs = eval_h(image, terms, tol)?;
    let rhs = (h - r) / den;
    Ok((lhs - rhs).norm())
}

fn inversion_chars() -> Vec<ThetaChar> {
    vec![
        ThetaChar::new(crate::exact::rat(1, 7), crate::exact::rat_int(1)),
        ThetaChar::new(crate::exact::rat(3, 7), crate::exact::rat_int(1)),
        ThetaChar::new(crate::exact::rat(5, 7), crate::exact::rat_int(1)),
        ThetaChar::new(crate::exact::rat_int(1), crate::exact::rat(1, 3)),
        ThetaChar::new(crate::exact::rat(1, 3), crate::exact::rat(1, 2)),
    ]
}

/// theta[eps, eps'](-1/tau) = e(-1/8) sqrt(tau) e(eps eps'/4) theta[eps', -eps](tau).
fn check_theta_inversion(tau: Complex64, terms: i64) -> Result<f64, NumericError> {
    let tau_inv = -1.0 / tau;
    require_upper_image("tau -> -1/tau", tau_inv)?;
    let mut worst: f64 = 0.0;
    for ch in inversion_chars() {
        let lhs = theta_char_eval(&ch, tau_inv, terms);
        let swapped = ThetaChar::new(ch.eps_prime.clone(), -ch.eps.clone());
        let phase = e_phase(-0.125)
            * e_phase(rational_to_f64(&ch.eps) * rational_to_f64(&ch.eps_prime) / 4.0);
        let rhs = phase * tau.sqrt() * theta_char_eval(&swapped, tau, terms);
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

/// theta[eps, eps'](tau) = sum_{k=0}^{6} theta[(eps + 2k)/7, 7 eps'](49 tau).
fn check_theta_split(tau: Complex64, terms: i64) -> Result<f64, NumericError> {
    let chars = vec![
        ThetaChar::new(crate::exact::rat_int(1), crate::exact::rat(1, 7)),
        ThetaChar::new(crate::exact::rat(1, 7), crate::exact::rat_int(1)),
        ThetaChar::new(crate::exact::rat(1, 3), crate::exact::rat_int(2)),
    ];
    let seven = crate::exact::rat_int(7);
    let mut worst: f64 = 0.0;
    for ch in chars {
        let lhs = theta_char_eval(&ch, tau, terms);
        let mut rhs = Complex64::new(0.0, 0.0);
        for k in 0..7 {
            let eps_k = (&ch.eps + crate::exact::rat_int(2 * k)) / seven.clone();
            let piece = ThetaChar::new(eps_k, &ch.eps_prime * &seven);
            rhs += theta_char_eval(&piece, 49.0 * tau, terms);
        }
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

/// The shift rule theta[eps, eps'] = e(-+ eps m/2) theta[+-eps + 2l, +-eps' + 2m]
/// over a spread of small integer shifts, both sign branches.
fn check_theta_quasi(tau: Complex64, terms: i64) -> Result<f64, NumericError> {
    let chars = [
        ThetaChar::new(crate::exact::rat(1, 7), crate::exact::rat_int(1)),
        ThetaChar::new(crate::exact::rat(3, 5), crate::exact::rat(1, 2)),
        ThetaChar::new(crate::exact::rat(2, 3), crate::exact::rat(5, 7)),
    ];
    let shifts: [(i64, i64); 5] = [(1, 1), (2, -1), (-1, 2), (0, 3), (-2, -2)];
    let mut worst: f64 = 0.0;
    for ch in &chars {
        let lhs = theta_char_eval(ch, tau, terms);
        let eps = rational_to_f64(&ch.eps);
        for (l, m) in shifts {
            let plus = ThetaChar::new(
                &ch.eps + crate::exact::rat_int(2 * l),
                &ch.eps_prime + crate::exact::rat_int(2 * m),
            );
            let rhs = e_phase(-eps * m as f64 / 2.0) * theta_char_eval(&plus, tau, terms);
            worst = worst.max((lhs - rhs).norm());
            let minus = ThetaChar::new(
                &(-ch.eps.clone()) + crate::exact::rat_int(2 * l),
                &(-ch.eps_prime.clone()) + crate::exact::rat_int(2 * m),
            );
            let rhs = e_phase(eps * m as f64 / 2.0) * theta_char_eval(&minus, tau, terms);
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok(worst)
}

/// Product expansions against the theta-quotient (and theta-prefactor) forms.
fn check_st_theta_form(tau: Complex64, terms: i64, tol: f64) -> Result<f64, NumericError> {
    let order = terms.max(16);
    let (s, t) = st_by_series(tau, order, tol)?;
    let tau7 = 7.0 * tau;
    let th = |num: i64| {
        theta_char_eval(
            &ThetaChar::new(crate::exact::rat(num, 7), crate::exact::rat_int(1)),
            tau7,
            terms,
        )
    };
    let t1 = th(1);
    let t3 = th(3);
    let t5 = th(5);
    if t5.norm() < 10.0 * tol {
        return Err(NumericError::DegenerateInput(format!(
            "theta[5/7,1](7 tau) has modulus {:.3e}",
            t5.norm()
        )));
    }
    let mut worst = (s - e_phase(1.0 / 7.0) * t1 / t5).norm();
    worst = worst.max((t - e_phase(1.0 / 14.0) * t3 / t5).norm());
    // The same convention pins u, v, w directly.
    for (block, theta_val, prefactor) in [
        (Block::U, t1, -1.0 / 28.0),
        (Block::V, t3, -3.0 / 28.0),
        (Block::W, t5, -5.0 / 28.0),
    ] {
        let (direct, bound) = eval_block(block, tau, terms);
        if bound > tol {
            return Err(NumericError::InsufficientTerms { bound, tol });
        }
        worst = worst.max((direct - e_phase(prefactor) * theta_val).norm());
    }
    Ok(worst)
}

/// u = -i F(3/7; 7 tau), v = -i F(2/7; 7 tau), w = -i F(1/7; 7 tau) with
/// F(t; z) = -i sum (-1)^n q^((n + t + 1/2)^2 / 2), q = e(z).
fn check_f_remark(tau: Complex64, terms: i64, tol: f64) -> Result<f64, NumericError> {
    let f_eval = |t: f64, z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for n in -terms..=terms {
            let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let a = n as f64 + t + 0.5;
            acc += sign * q_pow(z, a * a / 2.0);
        }
        Complex64::new(0.0, -1.0) * acc
    };
    let z = 7.0 * tau;
    let mut worst: f64 = 0.0;
    for (block, t) in [
        (Block::U, 3.0 / 7.0),
        (Block::V, 2.0 / 7.0),
        (Block::W, 1.0 / 7.0),
    ] {
        let (direct, bound) = eval_block(block, tau, terms);
        if bound > tol {
            return Err(NumericError::InsufficientTerms { bound, tol });
        }
        let via_f = Complex64::new(0.0, -1.0) * f_eval(t, z);
        worst = worst.max((direct - via_f).norm());
    }
    Ok(worst)
}

/// h evaluated through the Fricke right side at tau = iY tends to
/// r' = 1/(1 - r); the deviation at Y = Im(tau) is the reported error.
fn check_h0_limit(tau: Complex64, terms: i64, tol: f64) -> Result<f64, NumericError> {
    let y = tau.im;
    let h = eval_h(Complex64::new(0.0, y), terms, tol)?;
    let r = embed_value(NamedConstant::R);
    let den = (1.0 - r) * h - 1.0;
    if den.norm() < 10.0 * tol {
        return Err(NumericError::DegenerateInput(format!(
            "(1 - r) h - 1 has modulus {:.3e}",
            den.norm()
        )));
    }
    let val = (h - r) / den;
    let rp = embed_value(NamedConstant::RPrime);
    Ok((val - rp).norm())
}

/// Run one transformation-law check at one point.
pub fn run_check(
    check: NumericCheck,
    tau: Complex64,
    terms: i64,
    tol: f64,
) -> Result<NumericCheckReport, NumericError> {
    require_upper(tau)?;
    if tol <= 0.0 {
        return Err(NumericError::DegenerateInput(
            "tolerance must be positive".into(),
        ));
    }
    let max_error = match check {
        NumericCheck::Thm2 => check_thm2(tau, terms, tol)?,
        NumericCheck::Thm3 => check_thm3(tau, terms, tol)?,
        NumericCheck::Thm4 => check_thm4(tau, terms, tol)?,
        NumericCheck::ThetaInversion => check_theta_inversion(tau, terms)?,
        NumericCheck::ThetaSplit => check_theta_split(tau, terms)?,
        NumericCheck::ThetaQuasi => check_theta_quasi(tau, terms)?,
        NumericCheck::StThetaForm => check_st_theta_form(tau, terms, tol)?,
        NumericCheck::FRemark => check_f_remark(tau, terms, tol)?,
        NumericCheck::H0Limit => check_h0_limit(tau, terms, tol)?,
    };
    Ok(NumericCheckReport {
        check: check.as_str(),
        tau,
        terms,
        max_error,
        tol,
        pass: max_error <= tol,
    })
}
