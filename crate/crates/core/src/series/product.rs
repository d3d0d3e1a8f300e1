//! Series from infinite products of the shape prod_{k>=0} (1 - q^(a+mk))^e.

use super::{CoeffField, PuiseuxSeries, SeriesError};
use crate::exact::Rational;

/// One factor family: prod_{k>=0} (1 - q^(a+mk))^e with a >= 1, m >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    /// First exponent of the family (in integer powers of q).
    pub a: i64,
    /// Step between consecutive exponents.
    pub m: i64,
    /// Signed multiplicity: negative means the factor sits in a denominator.
    pub e: i32,
}

/// A q-power prefactor times a product of `(1 - q^(a+mk))^e` families.
/// Since every a is >= 1, each factor is 1 + O(q), so truncating at order T
/// needs only the finitely many factors with a + mk below T.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductSpec {
    /// Exponent of the leading q-power in front of the product.
    pub prefactor: Rational,
    pub factors: Vec<ProductFactor>,
}

impl ProductSpec {
    pub fn new(prefactor: Rational, factors: Vec<(i64, i64, i32)>) -> Self {
        let factors = factors
            .into_iter()
            .map(|(a, m, e)| {
                assert!(a >= 1 && m >= 1, "product factors must have a >= 1, m >= 1");
                ProductFactor { a, m, e }
            })
            .collect();
        ProductSpec { prefactor, factors }
    }

    /// Prefactor exponent as a grid numerator; errors if off the grid.
    fn prefactor_numerator(&self, grid: i64) -> Result<i64, SeriesError> {
        let scaled = &self.prefactor * Rational::from_integer(grid.into());
        if !scaled.is_integer() {
            return Err(SeriesError::OffGrid(
                crate::exact::rational_to_string(&self.prefactor),
                grid,
            ));
        }
        i64::try_from(scaled.to_integer()).map_err(|_| {
            SeriesError::OffGrid(crate::exact::rational_to_string(&self.prefactor), grid)
        })
    }
}

/// Multiply the relative coefficient array (integer q-powers, scaled by
/// `grid` on the exponent grid) by (1 - q^s): c'_k = c_k - c_{k-s}.
fn mul_one_minus<C: CoeffField>(coeffs: &mut [C], s: usize) {
    if s == 0 || s >= coeffs.len() {
        return;
    }
    for k in (s..coeffs.len()).rev() {
        if !coeffs[k - s].is_zero() {
            coeffs[k] = coeffs[k].sub(&coeffs[k - s]);
        }
    }
}

/// Divide by (1 - q^s), i.e. multiply by the geometric series:
/// c'_k = c_k + c'_{k-s}.
fn div_one_minus<C: CoeffField>(coeffs: &mut [C], s: usize) {
    if s == 0 || s >= coeffs.len() {
        return;
    }
    for k in s..coeffs.len() {
        if !coeffs[k - s].is_zero() {
            coeffs[k] = coeffs[k].add(&coeffs[k - s]);
        }
    }
}

/// Exact expansion of q^prefactor * prod factors, truncated at q^(trunc/grid).
pub fn from_product<C: CoeffField>(
    spec: &ProductSpec,
    grid: i64,
    trunc: i64,
) -> Result<PuiseuxSeries<C>, SeriesError> {
    let lead = spec.prefactor_numerator(grid)?;
    let rel_len = (trunc - lead).max(0);
    if rel_len == 0 {
        return Ok(PuiseuxSeries::zero(grid, trunc));
    }
    // Work in relative integer powers of q: index k corresponds to
    // exponent numerator lead + k*grid... no: factors step by whole powers
    // of q, i.e. by `grid` on the numerator scale. Track a compact array in
    // steps of one q-power and expand at the end.
    let rel_orders = ((rel_len + grid - 1) / grid) as usize + 1;
    let mut compact = vec![C::zero(); rel_orders];
    compact[0] = C::one();
    for f in &spec.factors {
        let mut n = f.a;
        while (n as usize) < rel_orders {
            let s = n as usize;
            if f.e > 0 {
                for _ in 0..f.e {
                    mul_one_minus(&mut compact, s);
                }
            } else {
                for _ in 0..(-f.e) {
                    div_one_minus(&mut compact, s);
                }
            }
            n += f.m;
        }
    }
    let terms: Vec<(i64, C)> = compact
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (lead + k as i64 * grid, c))
        .collect();
    Ok(PuiseuxSeries::from_terms(&terms, grid, trunc))
}

/// Dedekind eta of m*tau as a q-series: q^(m/24) * prod_{k>=1} (1 - q^(mk)).
pub fn eta_series<C: CoeffField>(
    m: i64,
    grid: i64,
    trunc: i64,
) -> Result<PuiseuxSeries<C>, SeriesError> {
    assert!(m >= 1, "eta argument multiplier must be >= 1");
    let spec = ProductSpec::new(Rational::new(m.into(), 24.into()), vec![(m, m, 1)]);
    from_product(&spec, grid, trunc)
}
