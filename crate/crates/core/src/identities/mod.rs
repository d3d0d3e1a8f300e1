//! The identity registry: every q-series and polynomial identity the crate
//! verifies, each addressable by a short stable id.
//!
//! Series identities are checked coefficient-by-coefficient with exact
//! rational arithmetic up to the requested integer truncation order;
//! polynomial identities are expanded exactly in trivariate integers and
//! are truncation-free.

pub mod builders;
pub mod poly;


use std::time::Instant;

use serde_json::{json, Value};
use thiserror::Error;

use crate::exact::{rational_to_string, Rational};
use crate::series::{BuildContext, SeriesError};

use builders::SeriesBuilder;
use poly::TriPoly;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RegistryError {
    #[error("unknown identity id: {0}")]
    UnknownId(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityKind {
    Series,
    Polynomial,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    InsufficientTruncation,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InsufficientTruncation => "insufficient-truncation",
        }
    }
}

/// First point of disagreement: a grid exponent for series identities, a
/// monomial or named assertion for exact checks.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome record of one identity check.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    /// Exponent bound actually compared, for series identities.
    pub order_checked: Option<Rational>,
    pub first_mismatch: Option<Mismatch>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "status": self.status.as_str(),
            "order_checked": self.order_checked.as_ref().map(rational_to_string),
            "first_mismatch": self.first_mismatch.as_ref().map(|m| json!({
                "exponent": m.location,
                "lhs": m.lhs,
                "rhs": m.rhs,
            })),
            "wall_time_ms": self.wall_time_ms,
        })
    }
}

enum Builder {
    Series(SeriesBuilder),
    Poly(fn() -> (TriPoly, TriPoly)),
}

/// One registry entry: a short id, a human-readable statement, and a
/// deterministic builder for the two sides.
pub struct IdentityEntry {
    id: &'static str,
    description: &'static str,
    /// Some identities only assert finitely many printed coefficients; their
    /// comparison order is capped.
    order_cap: Option<i64>,
    builder: Builder,
}

impl IdentityEntry {
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn description(&self) -> &'static str {
        self.description
    }

    pub fn kind(&self) -> IdentityKind {
        match self.builder {
            Builder::Series(_) => IdentityKind::Series,
            Builder::Poly(_) => IdentityKind::Polynomial,
        }
    }
}

const fn series_entry(
    id: &'static str,
    description: &'static str,
    builder: SeriesBuilder,
) -> IdentityEntry {
    IdentityEntry {
        id,
        description,
        order_cap: None,
        builder: Builder::Series(builder),
    }
}

static REGISTRY: &[IdentityEntry] = &[
    series_entry("cor1", "u^3 w - v^3 u + w^3 v = 0", builders::cor1),
    series_entry("klein-st", "s^3 - s t^3 + t = 0", builders::klein_st),
    series_entry(
        "klein-quartic",
        "(X, Y, Z) = (s, -1, t) satisfies X^3 Y + Y^3 Z + Z^3 X = 0",
        builders::klein_quartic,
    ),
    series_entry("h-eq-st2", "h = s t^2", builders::h_eq_st2),
    series_entry("eq22", "u v w = eta(tau) eta(7tau)^2", builders::eq22),
    series_entry("eq25", "(h - 1) w^2 v = u^3", builders::eq25),
    series_entry(
        "h-hm1",
        "s^2/t^3 = (s t^2 - 1)/(s t^2), cross-multiplied",
        builders::h_hm1,
    ),
    series_entry(
        "h-squared-form",
        "h (h - 1) = u^4 v / w^5, cross-multiplied",
        builders::h_squared_form,
    ),
    series_entry(
        "thm5",
        "eta^4 h (h - 1) = eta7^4 (h^3 - 8 h^2 + 5 h + 1)",
        builders::thm5,
    ),
    series_entry("z-def", "z h (h - 1) = h^3 - 3 h + 1", builders::z_def),
    series_entry("z-eta", "z = (eta/eta7)^4 + 8", builders::z_eta),
    IdentityEntry {
        id: "z-print",
        description: "z = 1/q + 4 + 2q + 8q^2 - 5q^3 - 4q^4 - 10q^5 + 12q^6 - 7q^7 + ...",
        order_cap: Some(8),
        builder: Builder::Series(builders::z_print),
    },
    series_entry(
        "lem2",
        "j7* h (h - 1) (h^3 - 8 h^2 + 5 h + 1) = (h^2 - h + 1)^3",
        builders::lem2,
    ),
    series_entry(
        "eq4-cubed",
        "(v^3 w^2 - w^3 u^2 + u^3 v^2)^3 = eta^9 eta7^6 j7*",
        builders::eq4_cubed,
    ),
    series_entry(
        "eq4-cuberoot",
        "v^3 w^2 - w^3 u^2 + u^3 v^2 = eta^3 eta7^2 (j7*)^(1/3)",
        builders::eq4_cuberoot,
    ),
    series_entry(
        "thm6a",
        "v^2 u/w^3 + u^2 w/v^3 - w^2 v/u^3 = (eta/eta7)^4 + 8, cleared",
        builders::thm6a,
    ),
    series_entry(
        "thm6b",
        "w^3/(v^2 u) + v^3/(u^2 w) - u^3/(w^2 v) = -(eta/eta7)^4 - 5, cleared",
        builders::thm6b,
    ),
    series_entry(
        "thm7a",
        "v^4 u^2/w^6 + u^4 w^2/v^6 + w^4 v^2/u^6 = E^2 + 14 E + 54, E = (eta/eta7)^4, cleared",
        builders::thm7a,
    ),
    series_entry(
        "thm7b",
        "w^6/(v^4 u^2) + v^6/(u^4 w^2) + u^6/(w^4 v^2) = E^2 + 12 E + 41, cleared",
        builders::thm7b,
    ),
    series_entry(
        "thm8a-series",
        "u^4/v^2 + w^4/u^2 + v^4/w^2 = 2 u v w (v/u^2 - w/v^2 + u/w^2), cleared",
        builders::thm8a_series,
    ),
    series_entry(
        "thm8a-eta",
        "u^4/v^2 + w^4/u^2 + v^4/w^2 = 2 eta^2 (j7*)^(1/3), cleared",
        builders::thm8a_eta,
    ),
    series_entry(
        "thm8b",
        "v^2/u^4 + u^2/w^4 + w^2/v^4 = (v/u^2 - w/v^2 + u/w^2)^2, cleared",
        builders::thm8b,
    ),
    series_entry(
        "thm8b-eta",
        "v^2/u^4 + u^2/w^4 + w^2/v^4 = eta^2/eta7^4 (j7*)^(2/3), cleared",
        builders::thm8b_eta,
    ),
    series_entry(
        "bz-cube-6a",
        "cube of thm6a (the original form of the first eta identity)",
        builders::bz_cube_6a,
    ),
    series_entry(
        "bz-cube-6b",
        "cube of thm6b (the original form of the second eta identity)",
        builders::bz_cube_6b,
    ),
    series_entry(
        "bz-cube-8a",
        "cube of thm8a: (...)^3 = 8 eta^6 j7* (u^2 v^2 w^2)^3, root-free",
        builders::bz_cube_8a,
    ),
    series_entry(
        "bz-cube-8b",
        "cube of thm8b-eta: (...)^3 eta7^12 = eta^6 (j7*)^2 (u^4 v^4 w^4)^3, root-free",
        builders::bz_cube_8b,
    ),
    IdentityEntry {
        id: "poly-P1",
        description: "v(u^2 v^4 - u v^2 w^3 + w^6) - u w(u^3 v^2 - w^3 u^2 + v^3 w^2) = (w^3 - u v^2)(u^3 w - v^3 u + w^3 v)",
        order_cap: None,
        builder: Builder::Poly(poly::identity_p1),
    },
    IdentityEntry {
        id: "poly-AminusB",
        description: "(u^4/v^2 + w^4/u^2 + v^4/w^2) - 2 u v w (v/u^2 - w/v^2 + u/w^2) = (u^3 w - v^3 u + w^3 v)^2/(u^2 v^2 w^2), cleared",
        order_cap: None,
        builder: Builder::Poly(poly::identity_a_minus_2b),
    },
    IdentityEntry {
        id: "poly-T8b",
        description: "(v^2/u^4 + u^2/w^4 + w^2/v^4) - (v/u^2 - w/v^2 + u/w^2)^2 = 2(u^3 w - v^3 u + w^3 v)/(u^2 v^2 w^2), cleared",
        order_cap: None,
        builder: Builder::Poly(poly::identity_t8b),
    },
];

/// All registry entries, in a fixed order.
pub fn registry() -> &'static [IdentityEntry] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static IdentityEntry> {
    REGISTRY.iter().find(|e| e.id == id)
}

fn run_series_entry(
    entry: &IdentityEntry,
    ctx: &BuildContext,
    started: Instant,
) -> VerificationReport {
    let builder = match &entry.builder {
        Builder::Series(b) => b,
        Builder::Poly(_) => unreachable!(),
    };
    let target_order = match entry.order_cap {
        Some(cap) => ctx.order().min(cap),
        None => ctx.order(),
    };
    let target = target_order * ctx.grid();
    let outcome = builder(ctx).and_then(|(lhs, rhs)| lhs.compare_up_to(&rhs, target));
    match outcome {
        Err(e) => VerificationReport {
            id: entry.id.to_owned(),
            status: match e {
                SeriesError::ZeroLeadingCoefficient
                | SeriesError::RootPrecondition(_)
                | SeriesError::BeyondTruncation(..) => Status::InsufficientTruncation,
                _ => Status::Fail,
            },
            order_checked: None,
            first_mismatch: Some(Mismatch {
                location: "builder".into(),
                lhs: e.to_string(),
                rhs: String::new(),
            }),
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        },
        Ok(report) => {
            let (status, first_mismatch) = match report.first_mismatch() {
                Some((exp, lhs, rhs)) => (
                    Status::Fail,
                    Some(Mismatch {
                        location: rational_to_string(&exp),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }),
                ),
                None if report.bound_numerator() >= target => (Status::Pass, None),
                None => (Status::InsufficientTruncation, None),
            };
            VerificationReport {
                id: entry.id.to_owned(),
                status,
                order_checked: Some(report.equal_up_to()),
                first_mismatch,
                wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
            }
        }
    }
}

fn run_poly_entry(entry: &IdentityEntry, started: Instant) -> VerificationReport {
    let builder = match &entry.builder {
        Builder::Poly(b) => b,
        Builder::Series(_) => unreachable!(),
    };
    let (lhs, rhs) = builder();
    let diff = lhs.sub(&rhs);
    let (status, first_mismatch) = if diff.is_zero() {
        (Status::Pass, None)
    } else {
        (
            Status::Fail,
            Some(Mismatch {
                location: "polynomial difference".into(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
        )
    };
    VerificationReport {
        id: entry.id.to_owned(),
        status,
        order_checked: None,
        first_mismatch,
        wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
    }
}

/// Verify one identity with a caller-supplied context (shared series cache,
/// optional perturbation hook).
pub fn verify_with(ctx: &BuildContext, id: &str) -> Result<VerificationReport, RegistryError> {
    let entry = find(id).ok_or_else(|| RegistryError::UnknownId(id.to_owned()))?;
    let started = Instant::now();
    Ok(match entry.kind() {
        IdentityKind::Series => run_series_entry(entry, ctx, started),
        IdentityKind::Polynomial => run_poly_entry(entry, started),
    })
}

/// Verify one identity to the given integer truncation order.
pub fn verify(id: &str, order: i64) -> Result<VerificationReport, RegistryError> {
    verify_with(&BuildContext::new(order), id)
}

/// Run the whole registry; individual failures are reported, never thrown.
pub fn verify_all_with(ctx: &BuildContext) -> Vec<VerificationReport> {
    REGISTRY
        .iter()
        .map(|e| verify_with(ctx, e.id).expect("registry ids are valid"))
        .collect()
}

pub fn verify_all(order: i64) -> Vec<VerificationReport> {
    verify_all_with(&BuildContext::new(order))
}
