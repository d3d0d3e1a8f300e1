//! Coefficient fields usable in a Puiseux series: exact rationals and Q(zeta_7).

use std::fmt;

use num_traits::{One, Zero};
use serde_json::Value;

use crate::exact::{rational_to_f64, rational_to_string, Cyc7, Rational};

/// The operations a series coefficient must support. Everything is exact;
/// `to_complex` exists only for the numeric cross-check module.
pub trait CoeffField: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// None iff zero.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Principal complex embedding (zeta_7 -> e^(2 pi i/7)).
    fn to_complex(&self) -> (f64, f64);
    /// Exact JSON rendering: a "p/q" string for rationals, an array of six
    /// such strings for Q(zeta_7) coefficients.
    fn to_json(&self) -> Value;
}

impl CoeffField for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inverse(&self) -> Option<Self> {
        if <Rational as Zero>::is_zero(self) {
            None
        } else {
            Some(<Rational as One>::one() / self.clone())
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn to_complex(&self) -> (f64, f64) {
        (rational_to_f64(self), 0.0)
    }
    fn to_json(&self) -> Value {
        Value::String(rational_to_string(self))
    }
}

impl CoeffField for Cyc7 {
    fn zero() -> Self {
        Cyc7::zero()
    }
    fn one() -> Self {
        Cyc7::one()
    }
    fn is_zero(&self) -> bool {
        Cyc7::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        Cyc7::inverse(self).ok()
    }
    fn from_rational(r: &Rational) -> Self {
        Cyc7::from_rational(r.clone())
    }
    fn scale(&self, r: &Rational) -> Self {
        Cyc7::scale(self, r)
    }
    fn to_complex(&self) -> (f64, f64) {
        let a = self.embed(1, 10).expect("f64 embedding of a coefficient");
        (a.re, a.im)
    }
    fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs()
                .iter()
                .map(|c| Value::String(rational_to_string(c)))
                .collect(),
        )
    }
}

/// Coefficient magnitude estimate used by numeric tail bounds.
pub fn coeff_abs_f64<C: CoeffField>(c: &C) -> f64 {
    let (re, im) = c.to_complex();
    (re * re + im * im).sqrt()
}
