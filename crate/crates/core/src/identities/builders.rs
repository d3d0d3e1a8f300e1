//! Builders producing the (lhs, rhs) series of each registry identity.
//!
//! Quotient statements are verified after clearing denominators wherever
//! possible; `invert` appears only where the statement is intrinsically a
//! quotient (the eta quotients and j_7^*). All constructions go through the
//! shared [`BuildContext`] so that base series are built once per run and
//! the u-perturbation test hook applies everywhere u is used.

use crate::exact::{rat_int, Rational};
use crate::series::{BuildContext, PuiseuxSeries, SeriesError, SeriesName};

pub type Series = PuiseuxSeries<Rational>;
pub type SeriesPair = (Series, Series);
pub type SeriesBuilder = fn(&BuildContext) -> Result<SeriesPair, SeriesError>;

fn pow(s: &Series, k: i64) -> Result<Series, SeriesError> {
    s.int_pow(k)
}

/// j_7^*^(1/3): strip the leading q^(-1), take the formal cube root pinned
/// to leading coefficient 1, and restore q^(-1/3).
fn j7star_cbrt(ctx: &BuildContext) -> Result<Series, SeriesError> {
    let j = ctx.series(SeriesName::J7Star);
    let normalized = j.mul_monomial(&Rational::from_integer(1.into()), ctx.grid());
    let root = normalized.nth_root(3)?;
    Ok(root.mul_monomial(&Rational::from_integer(1.into()), -(ctx.grid() / 3)))
}

/// u^3 w - v^3 u + w^3 v as a series.
fn klein_core_series(ctx: &BuildContext) -> Result<Series, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    Ok(pow(&u, 3)?
        .mul(&w)
        .sub(&pow(&v, 3)?.mul(&u))
        .add(&pow(&w, 3)?.mul(&v)))
}

pub fn cor1(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = klein_core_series(ctx)?;
    let rhs = Series::zero(ctx.grid(), lhs.trunc());
    Ok((lhs, rhs))
}

pub fn klein_st(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let s = ctx.series(SeriesName::S);
    let t = ctx.series(SeriesName::T);
    let lhs = pow(&s, 3)?.sub(&s.mul(&pow(&t, 3)?)).add(&t);
    let rhs = Series::zero(ctx.grid(), lhs.trunc());
    Ok((lhs, rhs))
}

/// (X, Y, Z) = (s, -1, t) on the quartic X^3 Y + Y^3 Z + Z^3 X.
pub fn klein_quartic(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let x = ctx.series(SeriesName::S);
    let y = ctx.constant(-1);
    let z = ctx.series(SeriesName::T);
    let lhs = pow(&x, 3)?
        .mul(&y)
        .add(&pow(&y, 3)?.mul(&z))
        .add(&pow(&z, 3)?.mul(&x));
    let rhs = Series::zero(ctx.grid(), lhs.trunc());
    Ok((lhs, rhs))
}

pub fn h_eq_st2(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let h = ctx.series(SeriesName::H);
    let s = ctx.series(SeriesName::S);
    let t = ctx.series(SeriesName::T);
    Ok((h, s.mul(&pow(&t, 2)?)))
}

pub fn eq22(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = ctx
        .series(SeriesName::U)
        .mul(&ctx.series(SeriesName::V))
        .mul(&ctx.series(SeriesName::W));
    let rhs = ctx
        .series(SeriesName::Eta)
        .mul(&pow(&ctx.series(SeriesName::Eta7), 2)?);
    Ok((lhs, rhs))
}

pub fn eq25(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let h = ctx.series(SeriesName::H);
    let lhs = h
        .sub(&ctx.one())
        .mul(&pow(&ctx.series(SeriesName::W), 2)?)
        .mul(&ctx.series(SeriesName::V));
    let rhs = pow(&ctx.series(SeriesName::U), 3)?;
    Ok((lhs, rhs))
}

/// s^2/t^3 = (s t^2 - 1)/(s t^2), cross-multiplied: s^3 t^2 = s t^5 - t^3.
pub fn h_hm1(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let s = ctx.series(SeriesName::S);
    let t = ctx.series(SeriesName::T);
    let lhs = pow(&s, 3)?.mul(&pow(&t, 2)?);
    let rhs = s.mul(&pow(&t, 5)?).sub(&pow(&t, 3)?);
    Ok((lhs, rhs))
}

/// h(h-1) = u^4 v / w^5, cross-multiplied.
pub fn h_squared_form(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let h = ctx.series(SeriesName::H);
    let lhs = h
        .mul(&h.sub(&ctx.one()))
        .mul(&pow(&ctx.series(SeriesName::W), 5)?);
    let rhs = pow(&ctx.series(SeriesName::U), 4)?.mul(&ctx.series(SeriesName::V));
    Ok((lhs, rhs))
}

/// The cubic polynomial h^3 - 8h^2 + 5h + 1 of the cusp values.
fn cusp_cubic(ctx: &BuildContext) -> Result<Series, SeriesError> {
    let h = ctx.series(SeriesName::H);
    Ok(pow(&h, 3)?
        .sub(&pow(&h, 2)?.scale(&rat_int(8)))
        .add(&h.scale(&rat_int(5)))
        .add(&ctx.one()))
}

pub fn thm5(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let h = ctx.series(SeriesName::H);
    let lhs = pow(&ctx.series(SeriesName::Eta), 4)?
        .mul(&h)
        .mul(&h.sub(&ctx.one()));
    let rhs = pow(&ctx.series(SeriesName::Eta7), 4)?.mul(&cusp_cubic(ctx)?);
    Ok((lhs, rhs))
}

pub fn z_def(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let h = ctx.series(SeriesName::H);
    let z = ctx.series(SeriesName::Z);
    let lhs = z.mul(&h).mul(&h.sub(&ctx.one()));
    let rhs = pow(&h, 3)?.sub(&h.scale(&rat_int(3))).add(&ctx.one());
    Ok((lhs, rhs))
}

pub fn z_eta(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let z = ctx.series(SeriesName::Z);
    let rhs = ctx.series(SeriesName::EtaQuot4).add(&ctx.constant(8));
    Ok((z, rhs))
}

/// The printed beginning of z: 1/q + 4 + 2q + 8q^2 - 5q^3 - 4q^4 - 10q^5
/// + 12q^6 - 7q^7.
pub fn z_print(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let g = ctx.grid();
    let printed: [(i64, i64); 9] = [
        (-1, 1),
        (0, 4),
        (1, 2),
        (2, 8),
        (3, -5),
        (4, -4),
        (5, -10),
        (6, 12),
        (7, -7),
    ];
    let terms: Vec<(i64, Rational)> = printed.iter().map(|(k, c)| (k * g, rat_int(*c))).collect();
    let rhs = Series::from_terms(&terms, g, 8 * g);
    Ok((ctx.series(SeriesName::Z), rhs))
}

pub fn lem2(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let h = ctx.series(SeriesName::H);
    let lhs = ctx
        .series(SeriesName::J7Star)
        .mul(&h)
        .mul(&h.sub(&ctx.one()))
        .mul(&cusp_cubic(ctx)?);
    let rhs = pow(&pow(&h, 2)?.sub(&h).add(&ctx.one()), 3)?;
    Ok((lhs, rhs))
}

/// v^3 w^2 - w^3 u^2 + u^3 v^2.
fn eq4_inner(ctx: &BuildContext) -> Result<Series, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    Ok(pow(&v, 3)?
        .mul(&pow(&w, 2)?)
        .sub(&pow(&w, 3)?.mul(&pow(&u, 2)?))
        .add(&pow(&u, 3)?.mul(&pow(&v, 2)?)))
}

pub fn eq4_cubed(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = pow(&eq4_inner(ctx)?, 3)?;
    let rhs = pow(&ctx.series(SeriesName::Eta), 9)?
        .mul(&pow(&ctx.series(SeriesName::Eta7), 6)?)
        .mul(&ctx.series(SeriesName::J7Star));
    Ok((lhs, rhs))
}

pub fn eq4_cuberoot(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = eq4_inner(ctx)?;
    let rhs = pow(&ctx.series(SeriesName::Eta), 3)?
        .mul(&pow(&ctx.series(SeriesName::Eta7), 2)?)
        .mul(&j7star_cbrt(ctx)?);
    Ok((lhs, rhs))
}

/// u^4 v^5 + u^5 w^4 - v^4 w^5 = ((eta/eta7)^4 + 8) u^3 v^3 w^3.
pub fn thm6a(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let lhs = pow(&u, 4)?
        .mul(&pow(&v, 5)?)
        .add(&pow(&u, 5)?.mul(&pow(&w, 4)?))
        .sub(&pow(&v, 4)?.mul(&pow(&w, 5)?));
    let scale = ctx.series(SeriesName::EtaQuot4).add(&ctx.constant(8));
    let rhs = scale.mul(&pow(&u, 3)?).mul(&pow(&v, 3)?).mul(&pow(&w, 3)?);
    Ok((lhs, rhs))
}

/// u w^5 + v^5 w - u^5 v = (-(eta/eta7)^4 - 5) u^2 v^2 w^2.
pub fn thm6b(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let lhs = u
        .mul(&pow(&w, 5)?)
        .add(&pow(&v, 5)?.mul(&w))
        .sub(&pow(&u, 5)?.mul(&v));
    let scale = ctx.series(SeriesName::EtaQuot4).neg().sub(&ctx.constant(5));
    let rhs = scale.mul(&pow(&u, 2)?).mul(&pow(&v, 2)?).mul(&pow(&w, 2)?);
    Ok((lhs, rhs))
}

/// u^8 v^10 + u^10 w^8 + v^8 w^10 = (E^2 + 14E + 54) u^6 v^6 w^6.
pub fn thm7a(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let lhs = pow(&u, 8)?
        .mul(&pow(&v, 10)?)
        .add(&pow(&u, 10)?.mul(&pow(&w, 8)?))
        .add(&pow(&v, 8)?.mul(&pow(&w, 10)?));
    let e = ctx.series(SeriesName::EtaQuot4);
    let scale = pow(&e, 2)?
        .add(&e.scale(&rat_int(14)))
        .add(&ctx.constant(54));
    let rhs = scale.mul(&pow(&u, 6)?).mul(&pow(&v, 6)?).mul(&pow(&w, 6)?);
    Ok((lhs, rhs))
}

/// u^2 w^10 + v^10 w^2 + u^10 v^2 = (E^2 + 12E + 41) u^4 v^4 w^4.
pub fn thm7b(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let lhs = pow(&u, 2)?
        .mul(&pow(&w, 10)?)
        .add(&pow(&v, 10)?.mul(&pow(&w, 2)?))
        .add(&pow(&u, 10)?.mul(&pow(&v, 2)?));
    let e = ctx.series(SeriesName::EtaQuot4);
    let scale = pow(&e, 2)?
        .add(&e.scale(&rat_int(12)))
        .add(&ctx.constant(41));
    let rhs = scale.mul(&pow(&u, 4)?).mul(&pow(&v, 4)?).mul(&pow(&w, 4)?);
    Ok((lhs, rhs))
}

/// u^6 w^2 + v^2 w^6 + u^2 v^6, the cleared left side shared by the last
/// pair of Berndt-Zhang style identities.
fn t8_lhs(ctx: &BuildContext) -> Result<Series, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    Ok(pow(&u, 6)?
        .mul(&pow(&w, 2)?)
        .add(&pow(&v, 2)?.mul(&pow(&w, 6)?))
        .add(&pow(&u, 2)?.mul(&pow(&v, 6)?)))
}

/// u^3 v^2 - u^2 w^3 + v^3 w^2 (the cleared form of v/u^2 - w/v^2 + u/w^2).
fn t8_inner(ctx: &BuildContext) -> Result<Series, SeriesError> {
    eq4_inner(ctx)
}

pub fn thm8a_series(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = t8_lhs(ctx)?;
    let uvw = ctx
        .series(SeriesName::U)
        .mul(&ctx.series(SeriesName::V))
        .mul(&ctx.series(SeriesName::W));
    let rhs = uvw.mul(&t8_inner(ctx)?).scale(&rat_int(2));
    Ok((lhs, rhs))
}

pub fn thm8a_eta(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = t8_lhs(ctx)?;
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let rhs = pow(&ctx.series(SeriesName::Eta), 2)?
        .mul(&j7star_cbrt(ctx)?)
        .mul(&pow(&u, 2)?)
        .mul(&pow(&v, 2)?)
        .mul(&pow(&w, 2)?)
        .scale(&rat_int(2));
    Ok((lhs, rhs))
}

/// v^6 w^4 + u^6 v^4 + u^4 w^6 = (u^3 v^2 - u^2 w^3 + v^3 w^2)^2.
fn t8b_lhs(ctx: &BuildContext) -> Result<Series, SeriesError> {
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    Ok(pow(&v, 6)?
        .mul(&pow(&w, 4)?)
        .add(&pow(&u, 6)?.mul(&pow(&v, 4)?))
        .add(&pow(&u, 4)?.mul(&pow(&w, 6)?)))
}

pub fn thm8b(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    Ok((t8b_lhs(ctx)?, pow(&t8_inner(ctx)?, 2)?))
}

/// The eta form of the reciprocal-square identity, cleared of denominators:
/// (v^6 w^4 + u^6 v^4 + u^4 w^6) eta7^4 = eta^2 (j_7^*)^(2/3) u^4 v^4 w^4.
pub fn thm8b_eta(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = t8b_lhs(ctx)?.mul(&pow(&ctx.series(SeriesName::Eta7), 4)?);
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let rhs = pow(&ctx.series(SeriesName::Eta), 2)?
        .mul(&pow(&j7star_cbrt(ctx)?, 2)?)
        .mul(&pow(&u, 4)?)
        .mul(&pow(&v, 4)?)
        .mul(&pow(&w, 4)?);
    Ok((lhs, rhs))
}

// The Berndt-Zhang originals are the cubes of the four identities above.
// The two involving the cube root are rebuilt here without nth_root, so
// they cross-validate the root extraction.

pub fn bz_cube_6a(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let (lhs, rhs) = thm6a(ctx)?;
    Ok((pow(&lhs, 3)?, pow(&rhs, 3)?))
}

pub fn bz_cube_6b(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let (lhs, rhs) = thm6b(ctx)?;
    Ok((pow(&lhs, 3)?, pow(&rhs, 3)?))
}

/// (u^6 w^2 + v^2 w^6 + u^2 v^6)^3 = 8 eta^6 j_7^* (u^2 v^2 w^2)^3.
pub fn bz_cube_8a(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = pow(&t8_lhs(ctx)?, 3)?;
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let rhs = pow(&ctx.series(SeriesName::Eta), 6)?
        .mul(&ctx.series(SeriesName::J7Star))
        .mul(&pow(&u, 6)?)
        .mul(&pow(&v, 6)?)
        .mul(&pow(&w, 6)?)
        .scale(&rat_int(8));
    Ok((lhs, rhs))
}

/// ((v^6 w^4 + u^6 v^4 + u^4 w^6) eta7^4)^3 = eta^6 (j_7^*)^2 (u^4 v^4 w^4)^3.
pub fn bz_cube_8b(ctx: &BuildContext) -> Result<SeriesPair, SeriesError> {
    let lhs = pow(
        &t8b_lhs(ctx)?.mul(&pow(&ctx.series(SeriesName::Eta7), 4)?),
        3,
    )?;
    let (u, v, w) = (
        ctx.series(SeriesName::U),
        ctx.series(SeriesName::V),
        ctx.series(SeriesName::W),
    );
    let rhs = pow(&ctx.series(SeriesName::Eta), 6)?
        .mul(&pow(&ctx.series(SeriesName::J7Star), 2)?)
        .mul(&pow(&u, 12)?)
        .mul(&pow(&v, 12)?)
        .mul(&pow(&w, 12)?);
    Ok((lhs, rhs))
}
