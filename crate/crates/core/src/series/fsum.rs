//! Bilateral theta sums: f(-q^alpha, -q^beta) expanded directly from the
//! series definition. This is the summation-side counterpart of the product
//! expansions and serves as the independent oracle for them.

use super::{CoeffField, PuiseuxSeries, SeriesError};
use crate::exact::{rat_int, Rational};

/// Expand f(-q^alpha, -q^beta) = sum_{n in Z} (-1)^n q^(((alpha+beta) n^2 + (alpha-beta) n)/2)
/// truncated at q^(trunc/grid). Requires alpha + beta > 0 so that only
/// finitely many terms land below the truncation.
pub fn from_f_sum<C: CoeffField>(
    alpha: &Rational,
    beta: &Rational,
    grid: i64,
    trunc: i64,
) -> Result<PuiseuxSeries<C>, SeriesError> {
    use num_traits::Signed;
    let sum = alpha + beta;
    assert!(sum.is_positive(), "from_f_sum requires alpha + beta > 0");
    let diff = alpha - beta;
    let half = Rational::new(1.into(), 2.into());
    let exponent = |n: i64| -> Rational {
        let n = rat_int(n);
        (&sum * &n * &n + &diff * &n) * &half
    };
    let grid_rat = rat_int(grid);
    let mut terms: Vec<(i64, C)> = Vec::new();
    let mut push = |n: i64| -> Result<bool, SeriesError> {
        let e = exponent(n);
        let scaled = &e * &grid_rat;
        if !scaled.is_integer() {
            return Err(SeriesError::OffGrid(
                crate::exact::rational_to_string(&e),
                grid,
            ));
        }
        let num = i64::try_from(scaled.to_integer())
            .map_err(|_| SeriesError::OffGrid(crate::exact::rational_to_string(&e), grid))?;
        if num >= trunc {
            return Ok(false);
        }
        let c = if n.rem_euclid(2) == 0 {
            C::one()
        } else {
            C::one().neg()
        };
        terms.push((num, c));
        Ok(true)
    };
    // The exponent is a upward parabola in n; walk outward from 0 until both
    // wings have left the window and are past the vertex.
    let mut n: i64 = 0;
    loop {
        let mut live = false;
        if n == 0 {
            live |= push(0)?;
        } else {
            live |= push(n)?;
            live |= push(-n)?;
        }
        if !live && exponent(n + 1) > exponent(n) && exponent(-(n + 1)) > exponent(-n) {
            break;
        }
        n += 1;
    }
    Ok(PuiseuxSeries::from_terms(&terms, grid, trunc))
}
