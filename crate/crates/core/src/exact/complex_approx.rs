//! Floating complex values that carry a conservative absolute error bound.
//!
//! The bound is propagated pessimistically: every operation adds the
//! worst-case first-order error of its inputs plus a rounding allowance
//! proportional to the result magnitude. This is deliberately crude --
//! the exact modules do all the real work, these values only bridge to
//! floating-point cross-checks.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug)]
pub struct ComplexApprox {
    pub re: f64,
    pub im: f64,
    /// Conservative bound on the absolute error |value - true|.
    pub err: f64,
}

impl ComplexApprox {
    pub fn new(re: f64, im: f64, err: f64) -> Self {
        ComplexApprox { re, im, err }
    }

    pub fn exact(re: f64, im: f64) -> Self {
        ComplexApprox { re, im, err: 0.0 }
    }

    pub fn from_complex(z: Complex64, err: f64) -> Self {
        ComplexApprox {
            re: z.re,
            im: z.im,
            err,
        }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn abs(&self) -> f64 {
        self.value().norm()
    }

    fn rounding(&self) -> f64 {
        2.0 * f64::EPSILON * self.abs()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let v = self.value() + rhs.value();
        let mut out = ComplexApprox::from_complex(v, self.err + rhs.err);
        out.err += out.rounding();
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let v = self.value() - rhs.value();
        let mut out = ComplexApprox::from_complex(v, self.err + rhs.err);
        out.err += out.rounding();
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let v = self.value() * rhs.value();
        let err = self.abs() * rhs.err + rhs.abs() * self.err + self.err * rhs.err;
        let mut out = ComplexApprox::from_complex(v, err);
        out.err += out.rounding();
        out
    }

    /// Division; the divisor must stay away from zero by more than its own
    /// error bound for the result to be meaningful.
    pub fn div(&self, rhs: &Self) -> Self {
        let v = self.value() / rhs.value();
        let rl = (rhs.abs() - rhs.err).max(f64::MIN_POSITIVE);
        let err = (self.err + v.norm() * rhs.err) / rl;
        let mut out = ComplexApprox::from_complex(v, err);
        out.err += out.rounding();
        out
    }

    /// Distance to another approximate value, ignoring both error bounds.
    pub fn dist(&self, rhs: &Self) -> f64 {
        (self.value() - rhs.value()).norm()
    }
}
