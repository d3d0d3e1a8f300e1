//! Truncated Puiseux series on a fixed exponent grid.
//!
//! A series is a finite sum  sum_{n} c_n q^(n/D)  known modulo q^(T/D):
//! every exponent is an integer numerator n over the common grid
//! denominator D, the coefficients live on the half-open range [lead, T),
//! and nothing at all is claimed about exponents >= T/D. Reading past the
//! truncation is an error, never a silent zero -- that rule is what makes
//! a verified identity mean something.
//!
//! The default grid D = 168 = lcm(56, 24, 7) accommodates every exponent
//! that occurs here: 1/56, 9/56, 25/56, 1/24, -3/7, -2/7 and all integers.
//!
//! Truncation tracking: `mul` propagates min(a.trunc + b.lead,
//! b.trunc + a.lead); `invert` of a series with leading exponent L/D and
//! truncation T yields truncation T - 2L; `nth_root` keeps the relative
//! precision of its argument. Recomputing a pipeline at a higher truncation
//! never changes a coefficient previously reported as known.

mod coeff;
mod fsum;
mod named;
mod product;

pub use coeff::{coeff_abs_f64, CoeffField};
pub use fsum::from_f_sum;
pub use named::{named_series, product_spec, BuildContext, SeriesName};
pub use product::{eta_series, from_product, ProductFactor, ProductSpec};

use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::exact::{rational_to_string, Rational};

/// Grid denominator used by every series in this crate.
pub const DEFAULT_GRID: i64 = 168;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SeriesError {
    #[error("grid mismatch: {0} vs {1}")]
    GridMismatch(i64, i64),
    #[error("leading coefficient is zero (or series is zero on its known range)")]
    ZeroLeadingCoefficient,
    #[error("exponent {0} is off the q^(1/{1}) grid")]
    OffGrid(String, i64),
    #[error("coefficient at exponent {0} is beyond the truncation bound {1}")]
    BeyondTruncation(String, String),
    #[error("nth_root precondition violated: {0}")]
    RootPrecondition(String),
}

/// A truncated Puiseux series over the coefficient field `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxSeries<C: CoeffField> {
    grid: i64,
    /// Exponent numerator of the first stored coefficient. For the zero
    /// series (nothing nonzero on the known range) `lead == trunc` and the
    /// coefficient vector is empty; otherwise `coeffs[0]` is nonzero.
    lead: i64,
    /// The series is known modulo q^(trunc/grid).
    trunc: i64,
    /// Dense coefficients for exponent numerators lead, lead+1, ..., trunc-1.
    coeffs: Vec<C>,
}

impl<C: CoeffField> PuiseuxSeries<C> {
    /// The zero series, known modulo q^(trunc/grid).
    pub fn zero(grid: i64, trunc: i64) -> Self {
        assert!(grid > 0, "grid must be positive");
        PuiseuxSeries {
            grid,
            lead: trunc,
            trunc,
            coeffs: Vec::new(),
        }
    }

    /// c * q^(lead/grid), known modulo q^(trunc/grid).
    pub fn monomial(c: C, lead: i64, grid: i64, trunc: i64) -> Self {
        assert!(grid > 0, "grid must be positive");
        if c.is_zero() || lead >= trunc {
            return Self::zero(grid, trunc);
        }
        let mut coeffs = vec![C::zero(); (trunc - lead) as usize];
        coeffs[0] = c;
        PuiseuxSeries {
            grid,
            lead,
            trunc,
            coeffs,
        }
    }

    pub fn one(grid: i64, trunc: i64) -> Self {
        Self::monomial(C::one(), 0, grid, trunc)
    }

    pub fn constant(c: C, grid: i64, trunc: i64) -> Self {
        Self::monomial(c, 0, grid, trunc)
    }

    /// Build from (exponent numerator, coefficient) pairs.
    pub fn from_terms(terms: &[(i64, C)], grid: i64, trunc: i64) -> Self {
        assert!(grid > 0, "grid must be positive");
        let lead = terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, _)| *n)
            .min()
            .unwrap_or(trunc)
            .min(trunc);
        let mut out = Self::zero(grid, trunc);
        if lead >= trunc {
            return out;
        }
        out.lead = lead;
        out.coeffs = vec![C::zero(); (trunc - lead) as usize];
        for (n, c) in terms {
            if *n < trunc && !c.is_zero() {
                let idx = (*n - lead) as usize;
                out.coeffs[idx] = c.add(&out.coeffs[idx]);
            }
        }
        out.normalize();
        out
    }

    pub fn grid(&self) -> i64 {
        self.grid
    }

    /// Exponent numerator of the leading term; equals `trunc` for the zero
    /// series.
    pub fn lead(&self) -> i64 {
        self.lead
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Leading exponent as a rational, if the series has a nonzero term.
    pub fn lead_exponent(&self) -> Option<Rational> {
        if self.is_zero_on_range() {
            None
        } else {
            Some(Rational::new(self.lead.into(), self.grid.into()))
        }
    }

    pub fn trunc_exponent(&self) -> Rational {
        Rational::new(self.trunc.into(), self.grid.into())
    }

    /// True when no nonzero coefficient is known. (The series may still be
    /// nonzero beyond its truncation.)
    pub fn is_zero_on_range(&self) -> bool {
        self.lead >= self.trunc
    }

    fn normalize(&mut self) {
        let first = self.coeffs.iter().position(|c| !c.is_zero());
        match first {
            None => {
                self.lead = self.trunc;
                self.coeffs.clear();
            }
            Some(k) if k > 0 => {
                self.coeffs.drain(..k);
                self.lead += k as i64;
            }
            _ => {}
        }
    }

    /// Stored coefficient by exponent numerator. Numerators below the lead
    /// are known zeros; numerators at or past the truncation are an error.
    pub fn coefficient_at(&self, n: i64) -> Result<C, SeriesError> {
        if n >= self.trunc {
            return Err(SeriesError::BeyondTruncation(
                rational_to_string(&Rational::new(n.into(), self.grid.into())),
                rational_to_string(&self.trunc_exponent()),
            ));
        }
        if n < self.lead {
            return Ok(C::zero());
        }
        Ok(self.coeffs[(n - self.lead) as usize].clone())
    }

    /// Coefficient at a rational exponent, which must lie on the grid and
    /// below the truncation bound.
    pub fn coefficient(&self, exponent: &Rational) -> Result<C, SeriesError> {
        let scaled = exponent * Rational::from_integer(self.grid.into());
        if !scaled.is_integer() {
            return Err(SeriesError::OffGrid(
                rational_to_string(exponent),
                self.grid,
            ));
        }
        let n = i64::try_from(scaled.to_integer())
            .map_err(|_| SeriesError::OffGrid(rational_to_string(exponent), self.grid))?;
        self.coefficient_at(n)
    }

    /// Nonzero (numerator, coefficient) pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.lead + k as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_grid(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.grid != rhs.grid {
            return Err(SeriesError::GridMismatch(self.grid, rhs.grid));
        }
        Ok(())
    }

    /// Forget everything at or above `new_trunc`.
    pub fn truncate_to(&self, new_trunc: i64) -> Self {
        if new_trunc >= self.trunc {
            return self.clone();
        }
        let mut out = self.clone();
        out.trunc = new_trunc;
        if out.lead >= new_trunc {
            return Self::zero(self.grid, new_trunc);
        }
        out.coeffs.truncate((new_trunc - out.lead) as usize);
        out.normalize();
        out
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_grid(rhs)?;
        let trunc = self.trunc.min(rhs.trunc);
        let lead = self.lead.min(rhs.lead).min(trunc);
        let mut coeffs = vec![C::zero(); (trunc - lead) as usize];
        for (n, c) in self.terms() {
            if n < trunc {
                let i = (n - lead) as usize;
                coeffs[i] = coeffs[i].add(c);
            }
        }
        for (n, c) in rhs.terms() {
            if n < trunc {
                let i = (n - lead) as usize;
                coeffs[i] = coeffs[i].add(c);
            }
        }
        let mut out = PuiseuxSeries {
            grid: self.grid,
            lead,
            trunc,
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.checked_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if num_traits::Zero::is_zero(r) {
            return Self::zero(self.grid, self.trunc);
        }
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = c.scale(r);
        }
        out
    }

    /// Multiply by the monomial c * q^(shift/grid).
    pub fn mul_monomial(&self, c: &C, shift: i64) -> Self {
        if c.is_zero() {
            return Self::zero(self.grid, self.trunc + shift);
        }
        let mut out = self.clone();
        out.lead += shift;
        out.trunc += shift;
        for x in &mut out.coeffs {
            *x = x.mul(c);
        }
        out
    }

    /// Exact product with sound truncation tracking:
    /// trunc = min(a.trunc + b.lead, b.trunc + a.lead).
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_grid(rhs)?;
        let trunc = (self.trunc + rhs.lead).min(rhs.trunc + self.lead);
        if self.is_zero_on_range() || rhs.is_zero_on_range() {
            return Ok(Self::zero(self.grid, trunc));
        }
        let lead = self.lead + rhs.lead;
        let mut coeffs = vec![C::zero(); (trunc - lead).max(0) as usize];
        let a: Vec<(i64, &C)> = self.terms().collect();
        let b: Vec<(i64, &C)> = rhs.terms().collect();
        for (na, ca) in &a {
            let limit = trunc - na;
            for (nb, cb) in &b {
                if *nb >= limit {
                    break;
                }
                let i = (na + nb - lead) as usize;
                coeffs[i] = coeffs[i].add(&ca.mul(cb));
            }
        }
        let mut out = PuiseuxSeries {
            grid: self.grid,
            lead,
            trunc,
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("series grids must agree")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("series grids must agree")
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("series grids must agree")
    }

    /// Reciprocal series. Requires a nonzero leading coefficient; the result
    /// has leading exponent -lead/grid and truncation trunc - 2*lead.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.is_zero_on_range() {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        let c0 = &self.coeffs[0];
        let c0_inv = c0.inverse().ok_or(SeriesError::ZeroLeadingCoefficient)?;
        let rel_len = (self.trunc - self.lead) as usize;
        // Relative coefficients of self (a_0 = c0, a_i at q^((lead+i)/grid)).
        let nonzero: Vec<(usize, &C)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut b = vec![C::zero(); rel_len];
        b[0] = c0_inv.clone();
        for k in 1..rel_len {
            let mut acc = C::zero();
            for (i, ai) in &nonzero {
                if *i > k {
                    break;
                }
                let bj = &b[k - i];
                if !bj.is_zero() {
                    acc = acc.add(&ai.mul(bj));
                }
            }
            if !acc.is_zero() {
                b[k] = acc.mul(&c0_inv).neg();
            }
        }
        let lead = -self.lead;
        let trunc = self.trunc - 2 * self.lead;
        let mut out = PuiseuxSeries {
            grid: self.grid,
            lead,
            trunc,
            coeffs: b,
        };
        out.normalize();
        Ok(out)
    }

    /// Integer power; negative exponents require an invertible series.
    pub fn int_pow(&self, k: i64) -> Result<Self, SeriesError> {
        if k == 0 {
            // The truncation of x^0 is what one multiplication chain of
            // length zero knows: the full relative precision of x.
            let trunc = self.trunc - self.lead;
            return Ok(Self::one(self.grid, trunc));
        }
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut acc = base.clone();
        for _ in 1..k.unsigned_abs() {
            acc = acc.checked_mul(&base)?;
        }
        Ok(acc)
    }

    /// Formal n-th root. Preconditions: the leading coefficient is 1 and the
    /// leading exponent numerator is divisible by n. The branch is pinned by
    /// requiring the result's leading coefficient to be 1.
    pub fn nth_root(&self, n: u32) -> Result<Self, SeriesError> {
        if n == 0 {
            return Err(SeriesError::RootPrecondition(
                "root order must be >= 1".into(),
            ));
        }
        if self.is_zero_on_range() {
            return Err(SeriesError::RootPrecondition(
                "series is zero on its known range".into(),
            ));
        }
        if self.coeffs[0] != C::one() {
            return Err(SeriesError::RootPrecondition(format!(
                "leading coefficient must be 1, got {}",
                self.coeffs[0]
            )));
        }
        if self.lead % (n as i64) != 0 {
            return Err(SeriesError::RootPrecondition(format!(
                "leading exponent numerator {} is not divisible by {}",
                self.lead, n
            )));
        }
        let rel_len = (self.trunc - self.lead) as usize;
        let nonzero: Vec<(usize, &C)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // b = a^(1/n) with a_0 = b_0 = 1 satisfies n a b' = a' b; reading off
        // the coefficient of y^(k-1) gives
        //   n k b_k = sum_{i>=1} i a_i b_{k-i} - n sum_{1<=j<k} j b_j a_{k-j}.
        let mut b = vec![C::zero(); rel_len];
        b[0] = C::one();
        let n_rat = crate::exact::rat_int(n as i64);
        for k in 1..rel_len {
            let mut acc = C::zero();
            for (i, ai) in &nonzero {
                if *i > k {
                    break;
                }
                let bj = &b[k - i];
                if !bj.is_zero() {
                    // contribution i*a_i*b_{k-i} - n*(k-i)*b_{k-i}*a_i
                    let weight = crate::exact::rat_int(*i as i64)
                        - &n_rat * crate::exact::rat_int((k - i) as i64);
                    acc = acc.add(&ai.mul(bj).scale(&weight));
                }
            }
            if !acc.is_zero() {
                let inv_nk = crate::exact::Rational::new(1.into(), (n as i64 * k as i64).into());
                b[k] = acc.scale(&inv_nk);
            }
        }
        let lead = self.lead / n as i64;
        let trunc = lead + rel_len as i64;
        let mut out = PuiseuxSeries {
            grid: self.grid,
            lead,
            trunc,
            coeffs: b,
        };
        out.normalize();
        Ok(out)
    }

    /// Compare two series up to the smaller truncation (optionally capped).
    pub fn compare(&self, rhs: &Self) -> Result<MatchReport<C>, SeriesError> {
        self.compare_up_to(rhs, i64::MAX)
    }

    pub fn compare_up_to(&self, rhs: &Self, cap: i64) -> Result<MatchReport<C>, SeriesError> {
        self.check_grid(rhs)?;
        let bound = self.trunc.min(rhs.trunc).min(cap);
        let start = self.lead.min(rhs.lead);
        let mut first_mismatch = None;
        for n in start..bound {
            let a = self.coefficient_at(n).expect("below both truncations");
            let b = rhs.coefficient_at(n).expect("below both truncations");
            if a != b {
                first_mismatch = Some((n, a, b));
                break;
            }
        }
        Ok(MatchReport {
            grid: self.grid,
            bound,
            first_mismatch,
        })
    }

    /// Reinterpret the coefficients in another field. The only embedding
    /// used here is Q into Q(zeta_7); it makes rational-coefficient series
    /// composable with cyclotomic scalars.
    pub fn embed_coefficients<D: CoeffField>(&self) -> PuiseuxSeries<D>
    where
        C: Into<Rational> + Clone,
    {
        PuiseuxSeries {
            grid: self.grid,
            lead: self.lead,
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| D::from_rational(&c.clone().into()))
                .collect(),
        }
    }

    /// JSON form: {grid, lead, trunc, coefficients: [[numerator, coeff], ...]}
    /// with coefficients rendered as exact strings in ascending exponent
    /// order. Rendering is bit-stable across runs.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.terms().map(|(n, c)| json!([n, c.to_json()])).collect();
        json!({
            "grid": self.grid,
            "lead": if self.is_zero_on_range() { Value::Null } else { json!(self.lead) },
            "trunc": self.trunc,
            "coefficients": coeffs,
        })
    }
}

impl<C: CoeffField> fmt::Display for PuiseuxSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_on_range() {
            return write!(f, "O(q^{})", rational_to_string(&self.trunc_exponent()));
        }
        let mut shown = 0;
        for (n, c) in self.terms() {
            if shown > 0 {
                write!(f, " + ")?;
            }
            let e = Rational::new(n.into(), self.grid.into());
            write!(f, "({}) q^({})", c, rational_to_string(&e))?;
            shown += 1;
            if shown >= 8 {
                write!(f, " + ...")?;
                break;
            }
        }
        write!(f, " + O(q^{})", rational_to_string(&self.trunc_exponent()))
    }
}

/// Result of an exact comparison of two series.
#[derive(Clone, Debug)]
pub struct MatchReport<C: CoeffField> {
    grid: i64,
    /// Exponent numerator up to which the comparison ran (exclusive).
    bound: i64,
    first_mismatch: Option<(i64, C, C)>,
}

impl<C: CoeffField> MatchReport<C> {
    pub fn is_equal(&self) -> bool {
        self.first_mismatch.is_none()
    }

    /// The comparison bound as a rational exponent.
    pub fn equal_up_to(&self) -> Rational {
        Rational::new(self.bound.into(), self.grid.into())
    }

    pub fn bound_numerator(&self) -> i64 {
        self.bound
    }

    pub fn first_mismatch(&self) -> Option<(Rational, &C, &C)> {
        self.first_mismatch
            .as_ref()
            .map(|(n, a, b)| (Rational::new((*n).into(), self.grid.into()), a, b))
    }
}
