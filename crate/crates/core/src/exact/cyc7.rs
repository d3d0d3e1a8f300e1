//! The cyclotomic field Q(zeta_7).
//!
//! Elements are kept in the canonical power basis {1, z, ..., z^5} with
//! z = zeta_7 = e^(2 pi i/7); reduction uses z^6 = -(1 + z + ... + z^5),
//! i.e. the minimal polynomial Phi_7(x) = x^6 + x^5 + ... + x + 1.
//! Two elements are equal iff their canonical coefficient arrays are equal.
//!
//! Quantities that live in Q(zeta_14) embed here through zeta_14 = -zeta_7^4,
//! since Q(zeta_14) = Q(zeta_7).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat_int, rational_to_f64, rational_to_string, ComplexApprox, ExactError, Rational};

/// An element of Q(zeta_7) in the canonical degree-<=5 form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyc7 {
    coeffs: [Rational; 6],
}

fn zero_coeffs() -> [Rational; 6] {
    std::array::from_fn(|_| Rational::zero())
}

impl Cyc7 {
    pub fn zero() -> Self {
        Cyc7 {
            coeffs: zero_coeffs(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = zero_coeffs();
        coeffs[0] = r;
        Cyc7 { coeffs }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// Build from coefficients of arbitrary powers of zeta; exponents are
    /// folded mod 7 and the zeta^6 component is eliminated via Phi_7.
    pub fn from_powers(powers: &[(i64, Rational)]) -> Self {
        let mut folded = [(); 7].map(|_| Rational::zero());
        for (e, c) in powers {
            let k = e.rem_euclid(7) as usize;
            folded[k] = &folded[k] + c;
        }
        let c6 = folded[6].clone();
        let mut coeffs = zero_coeffs();
        for (k, item) in folded.iter().enumerate().take(6) {
            coeffs[k] = item - &c6;
        }
        Cyc7 { coeffs }
    }

    /// zeta_7^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        Self::from_powers(&[(k, Rational::one())])
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// eta_i = zeta^i + zeta^(-i); the periods of the real subfield.
    pub fn eta(i: i64) -> Self {
        Self::from_powers(&[(i, Rational::one()), (-i, Rational::one())])
    }

    pub fn coeffs(&self) -> &[Rational; 6] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational part if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let coeffs = std::array::from_fn(|k| &self.coeffs[k] * r);
        Cyc7 { coeffs }
    }

    /// The Galois conjugation sigma_j: zeta -> zeta^j, for 1 <= j <= 6.
    pub fn conjugate(&self, j: i64) -> Result<Self, ExactError> {
        if !(1..=6).contains(&j) {
            return Err(ExactError::BadConjugation(j));
        }
        let powers: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (j * k as i64, c.clone()))
            .collect();
        Ok(Self::from_powers(&powers))
    }

    /// Field norm down to Q: the product of all six conjugates.
    pub fn norm(&self) -> Rational {
        let mut p = self.clone();
        for j in 2..=6 {
            p = &p * &self.conjugate(j).expect("valid index");
        }
        p.as_rational()
            .expect("norm is Galois-invariant, hence rational")
    }

    /// Multiplicative inverse, computed by the extended Euclidean algorithm
    /// on the coefficient polynomial and Phi_7 over the rational polynomials.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // Bezout: a(x) * self(x) + b(x) * Phi_7(x) = gcd = const.
        let phi: Vec<Rational> = (0..=6).map(|_| Rational::one()).collect();
        let me: Vec<Rational> = self.coeffs.to_vec();
        let (g, a) = ext_gcd_with_modulus(&me, &phi);
        // g is a nonzero constant (Phi_7 is irreducible, self != 0).
        debug_assert!(poly_degree(&g) == Some(0));
        let ginv = Rational::one() / g[0].clone();
        let mut coeffs = zero_coeffs();
        for (k, c) in a.iter().enumerate() {
            // a has degree <= 5 because deg(self) <= 5 < deg(Phi_7).
            coeffs[k] = c * &ginv;
        }
        Ok(Cyc7 { coeffs })
    }

    /// Multiplicative inverse by the conjugate-product route:
    /// x^(-1) = (prod_{j=2..6} sigma_j(x)) / N(x). Used to cross-check
    /// [`Cyc7::inverse`]; both must agree exactly.
    pub fn inverse_by_conjugates(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let mut p = self.conjugate(2)?;
        for j in 3..=6 {
            p = &p * &self.conjugate(j)?;
        }
        let n = (self * &p).as_rational().expect("norm is rational");
        Ok(p.scale(&(Rational::one() / n)))
    }

    /// Complex embedding sending zeta -> e^(2 pi i j/7), with a conservative
    /// error bound. The bound must come out at most 10^(-digits+2).
    pub fn embed(&self, conj: i64, digits: u32) -> Result<ComplexApprox, ExactError> {
        if !(1..=6).contains(&conj) {
            return Err(ExactError::BadConjugation(conj));
        }
        let mut acc = ComplexApprox::exact(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * ((conj * k as i64) as f64) / 7.0;
            // cos/sin are correctly rounded to ~1 ulp; the rational-to-f64
            // conversion contributes one more half-ulp.
            let root = ComplexApprox::new(angle.cos(), angle.sin(), 4.0 * f64::EPSILON);
            let coeff = ComplexApprox::new(rational_to_f64(c), 0.0, {
                let mag = rational_to_f64(&c.abs());
                mag * f64::EPSILON
            });
            acc = acc.add(&coeff.mul(&root));
        }
        let bound = 10f64.powi(2 - (digits as i32));
        if acc.err > bound {
            return Err(ExactError::PrecisionUnattainable { digits });
        }
        Ok(acc)
    }
}

impl Add for &Cyc7 {
    type Output = Cyc7;
    fn add(self, rhs: &Cyc7) -> Cyc7 {
        let coeffs = std::array::from_fn(|k| &self.coeffs[k] + &rhs.coeffs[k]);
        Cyc7 { coeffs }
    }
}

impl Sub for &Cyc7 {
    type Output = Cyc7;
    fn sub(self, rhs: &Cyc7) -> Cyc7 {
        let coeffs = std::array::from_fn(|k| &self.coeffs[k] - &rhs.coeffs[k]);
        Cyc7 { coeffs }
    }
}

impl Neg for &Cyc7 {
    type Output = Cyc7;
    fn neg(self) -> Cyc7 {
        let coeffs = std::array::from_fn(|k| -self.coeffs[k].clone());
        Cyc7 { coeffs }
    }
}

impl Mul for &Cyc7 {
    type Output = Cyc7;
    fn mul(self, rhs: &Cyc7) -> Cyc7 {
        // Convolution up to degree 10, then reduction.
        let mut conv: Vec<(i64, Rational)> = Vec::with_capacity(36);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv.push(((i + j) as i64, a * b));
            }
        }
        Cyc7::from_powers(&conv)
    }
}

impl fmt::Display for Cyc7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", rational_to_string(&mag))?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Exact Horner evaluation of a rational-coefficient polynomial at a Cyc7
/// point. Coefficients are given lowest-degree first.
pub fn eval_poly(coeffs: &[Rational], x: &Cyc7) -> Cyc7 {
    let mut acc = Cyc7::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + &Cyc7::from_rational(c.clone());
    }
    acc
}

/// The named constants of the level-7 theory.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedConstant {
    /// zeta_7
    Zeta7,
    /// eta_1 = zeta + zeta^6
    Eta1,
    /// eta_2 = zeta^2 + zeta^5
    Eta2,
    /// eta_3 = zeta^3 + zeta^4
    Eta3,
    /// eps_1 = 1 + eta_1
    Eps1,
    /// r = -eta_1^2 / eta_3, a root of x^3 - 8x^2 + 5x + 1
    R,
    /// r' = 1/(1 - r)
    RPrime,
    /// r'' = (r - 1)/r
    RDblPrime,
    /// eps_1 * eta_3^2 (equal to r')
    Eps1Eta3Sq,
}

impl NamedConstant {
    pub const ALL: [NamedConstant; 9] = [
        NamedConstant::Zeta7,
        NamedConstant::Eta1,
        NamedConstant::Eta2,
        NamedConstant::Eta3,
        NamedConstant::Eps1,
        NamedConstant::R,
        NamedConstant::RPrime,
        NamedConstant::RDblPrime,
        NamedConstant::Eps1Eta3Sq,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            NamedConstant::Zeta7 => "zeta7",
            NamedConstant::Eta1 => "eta1",
            NamedConstant::Eta2 => "eta2",
            NamedConstant::Eta3 => "eta3",
            NamedConstant::Eps1 => "eps1",
            NamedConstant::R => "r",
            NamedConstant::RPrime => "r_prime",
            NamedConstant::RDblPrime => "r_dblprime",
            NamedConstant::Eps1Eta3Sq => "eps1_eta3sq",
        }
    }

    pub fn parse(name: &str) -> Result<Self, ExactError> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == name)
            .ok_or_else(|| ExactError::UnknownConstant(name.to_owned()))
    }
}

/// The canonical Cyc7 value of a named constant.
pub fn named_constant(name: NamedConstant) -> Cyc7 {
    match name {
        NamedConstant::Zeta7 => Cyc7::zeta(),
        NamedConstant::Eta1 => Cyc7::eta(1),
        NamedConstant::Eta2 => Cyc7::eta(2),
        NamedConstant::Eta3 => Cyc7::eta(3),
        NamedConstant::Eps1 => &Cyc7::one() + &Cyc7::eta(1),
        NamedConstant::R => {
            let eta1 = Cyc7::eta(1);
            let eta3_inv = Cyc7::eta(3).inverse().expect("eta_3 != 0");
            &(-&(&eta1 * &eta1)) * &eta3_inv
        }
        NamedConstant::RPrime => {
            let r = named_constant(NamedConstant::R);
            (&Cyc7::one() - &r).inverse().expect("1 - r != 0")
        }
        NamedConstant::RDblPrime => {
            let r = named_constant(NamedConstant::R);
            &(&r - &Cyc7::one()) * &r.inverse().expect("r != 0")
        }
        NamedConstant::Eps1Eta3Sq => {
            let eta3 = Cyc7::eta(3);
            &named_constant(NamedConstant::Eps1) * &(&eta3 * &eta3)
        }
    }
}

// ---------------------------------------------------------------------------
// Q[x] helpers for the extended gcd
// ---------------------------------------------------------------------------

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub_scaled(
    a: &[Rational],
    b: &[Rational],
    scale: &Rational,
    shift: usize,
) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, Rational::zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] = &out[i + shift] - &(c * scale);
    }
    poly_trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead_inv = Rational::one() / b[db].clone();
    let mut rem = poly_trim(a.to_vec());
    let mut quo = vec![Rational::zero(); rem.len().saturating_sub(db) + 1];
    while let Some(dr) = poly_degree(&rem) {
        if dr < db {
            break;
        }
        let q = &rem[dr] * &lead_inv;
        quo[dr - db] = q.clone();
        rem = poly_sub_scaled(&rem, b, &q, dr - db);
    }
    (poly_trim(quo), rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = &out[i] - c;
    }
    poly_trim(out)
}

/// Returns (g, s) with s*a = g (mod modulus) and g a nonzero constant when
/// gcd(a, modulus) = 1, which holds for every nonzero a of degree < 6
/// against the irreducible Phi_7.
fn ext_gcd_with_modulus(a: &[Rational], modulus: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = poly_trim(modulus.to_vec());
    let mut r1 = poly_trim(a.to_vec());
    let mut s0: Vec<Rational> = Vec::new(); // coefficient of `a` in r0
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while poly_degree(&r1).is_some() {
        let (q, rem) = poly_divmod(&r0, &r1);
        let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s_next);
    }
    (r0, s0)
}
