//! Exact trivariate polynomials in the commuting indeterminates u, v, w.
//!
//! These back the truncation-free polynomial identities: both sides are
//! expanded by brute force and compared term by term.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer polynomial in u, v, w, keyed by the exponent triple.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TriPoly {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn constant(n: i64) -> Self {
        let mut p = TriPoly::default();
        if n != 0 {
            p.terms.insert((0, 0, 0), BigInt::from(n));
        }
        p
    }

    /// c * u^a v^b w^c.
    pub fn term(coeff: i64, u: u32, v: u32, w: u32) -> Self {
        let mut p = TriPoly::default();
        if coeff != 0 {
            p.terms.insert((u, v, w), BigInt::from(coeff));
        }
        p
    }

    pub fn var_u() -> Self {
        Self::term(1, 1, 0, 0)
    }

    pub fn var_v() -> Self {
        Self::term(1, 0, 1, 0)
    }

    pub fn var_w() -> Self {
        Self::term(1, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, key: (u32, u32, u32), val: BigInt) {
        if val.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += val;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.insert(*k, -v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TriPoly::zero().sub(self)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = TriPoly::zero();
        for ((a1, b1, c1), x) in &self.terms {
            for ((a2, b2, c2), y) in &rhs.terms {
                out.insert((a1 + a2, b1 + b2, c1 + c2), x * y);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = TriPoly::constant(1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(&self, n: i64) -> Self {
        self.mul(&TriPoly::constant(n))
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b, c), coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !coeff.is_one() || (*a, *b, *c) == (0, 0, 0) {
                write!(f, "{coeff}")?;
            }
            for (name, e) in [("u", a), ("v", b), ("w", c)] {
                match e {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Shorthand monomial builder.
fn m(u: u32, v: u32, w: u32) -> TriPoly {
    TriPoly::term(1, u, v, w)
}

/// The core alternating polynomial u^3 w - v^3 u + w^3 v.
pub fn klein_core() -> TriPoly {
    m(3, 0, 1).sub(&m(1, 3, 0)).add(&m(0, 1, 3))
}

/// v (u^2 v^4 - u v^2 w^3 + w^6) - u w (u^3 v^2 - w^3 u^2 + v^3 w^2)
///   = (w^3 - u v^2) (u^3 w - v^3 u + w^3 v).
pub fn identity_p1() -> (TriPoly, TriPoly) {
    let inner1 = m(2, 4, 0).sub(&m(1, 2, 3)).add(&m(0, 0, 6));
    let inner2 = m(3, 2, 0).sub(&m(2, 0, 3)).add(&m(0, 3, 2));
    let lhs = m(0, 1, 0).mul(&inner1).sub(&m(1, 0, 1).mul(&inner2));
    let rhs = m(0, 0, 3).sub(&m(1, 2, 0)).mul(&klein_core());
    (lhs, rhs)
}

/// Cleared-denominator form of the factorization behind the first
/// eta-quotient cube identity:
/// u^6 w^2 + v^2 w^6 + u^2 v^6 - 2 u v w (u^3 v^2 - u^2 w^3 + v^3 w^2)
///   = (u^3 w - v^3 u + w^3 v)^2.
pub fn identity_a_minus_2b() -> (TriPoly, TriPoly) {
    let a = m(6, 0, 2).add(&m(0, 2, 6)).add(&m(2, 6, 0));
    let inner = m(3, 2, 0).sub(&m(2, 0, 3)).add(&m(0, 3, 2));
    let b = m(1, 1, 1).mul(&inner);
    let lhs = a.sub(&b.scale(2));
    let rhs = klein_core().pow(2);
    (lhs, rhs)
}

/// Cleared-denominator form of the reciprocal-square comparison:
/// v^6 w^4 + u^6 v^4 + u^4 w^6 - (u^3 v^2 - u^2 w^3 + v^3 w^2)^2
///   = 2 (u^3 w - v^3 u + w^3 v) u^2 v^2 w^2.
pub fn identity_t8b() -> (TriPoly, TriPoly) {
    let a = m(0, 6, 4).add(&m(6, 4, 0)).add(&m(4, 0, 6));
    let inner = m(3, 2, 0).sub(&m(2, 0, 3)).add(&m(0, 3, 2));
    let lhs = a.sub(&inner.pow(2));
    let rhs = klein_core().mul(&m(2, 2, 2)).scale(2);
    (lhs, rhs)
}
