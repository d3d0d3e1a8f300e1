//! Exact verification toolkit for the level-7 theta series `u`, `v`, `w`,
//! the Hauptmodul `h` of Gamma_1(7), and the matrix algebra of the
//! three-dimensional projective representation acting on the Klein quartic.
//!
//! The crate is organized as follows:
//!
//! - [`exact`]: arbitrary-precision rationals and exact arithmetic in the
//!   cyclotomic field Q(zeta_7), including the named constants
//!   (eta_i, eps_1, the cubic roots r, r', r'').
//! - [`series`]: a truncated Puiseux-series engine on the q^(1/168) grid,
//!   with constructors for every named series (u, v, w, s, t, h, z,
//!   eta, eta(7tau), eta quotients, j_7^*).
//! - [`identities`]: a registry of q-series and trivariate polynomial
//!   identities, each verifiable to a requested truncation order with
//!   exact arithmetic.
//! - [`klein`]: exact checks of the 3x3 matrix generators, the 2x2 word
//!   decomposition, the cubic root arithmetic and the cusp-value orbit.
//! - [`numeric`]: complex floating-point evaluation of series and theta
//!   functions with characteristics, for the analytic transformation laws
//!   that are not pure q-series statements.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to use concurrently.

pub mod exact;
pub mod identities;
pub mod klein;
pub mod numeric;
pub mod series;

pub use exact::{ComplexApprox, Cyc7, Rational};
pub use identities::{registry, verify, verify_all, VerificationReport};
pub use series::{BuildContext, ProductSpec, PuiseuxSeries, SeriesName, DEFAULT_GRID};
