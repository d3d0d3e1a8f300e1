//! Exact arithmetic: arbitrary-precision rationals, the cyclotomic field
//! Q(zeta_7), and error-tracked complex approximations.

mod complex_approx;
mod cyc7;

pub use complex_approx::ComplexApprox;
pub use cyc7::{eval_poly, named_constant, Cyc7, NamedConstant};

use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Coefficient scalar: an arbitrary-precision rational, always stored in
/// lowest terms with positive denominator (maintained by `num-rational`).
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ExactError {
    #[error("division by zero in Q(zeta_7)")]
    DivisionByZero,
    #[error("unknown named constant: {0}")]
    UnknownConstant(String),
    #[error("conjugation index must be in 1..=6, got {0}")]
    BadConjugation(i64),
    #[error("requested precision of {digits} digits is beyond f64 embedding accuracy")]
    PrecisionUnattainable { digits: u32 },
}

/// Shorthand for the rational n/d.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for an integral rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Exact string rendering, "p" for integers and "p/q" otherwise.
/// This is the form used in all JSON output; it is bit-stable across runs.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parse "p" or "p/q".
pub fn rational_from_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<num_bigint::BigInt>()
            .ok()
            .map(Rational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<num_bigint::BigInt>().ok()?;
            let q = q.trim().parse::<num_bigint::BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

/// Nearest f64 value. Exact for small numerators/denominators; the
/// conversion error is covered by the `ComplexApprox` error budget.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of leading digits for out-of-range bigints.
        let n = r.numer().to_f64().unwrap_or(if r.numer().is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        });
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

#[cfg(test)]
mod tests;
