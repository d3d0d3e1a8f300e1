//! Exact matrix algebra over Q(zeta_7): the 3x3 generators of the projective
//! representation, the 2x2 word decomposition, the cubic root arithmetic and
//! the cusp-value orbit. Every check here is exact -- no tolerances anywhere.

mod checks;
mod matrices;

#[cfg(test)]
mod tests;

pub use checks::{
    check_a_involution, check_cusp_orbit, check_generators, check_roots, check_t,
    check_thm2_coefficients, check_thm4_algebra, check_word_decomposition, run_all_checks,
    KLEIN_CHECK_IDS,
};
pub use matrices::{build_generators, Mat3, Mobius2, MobiusOnH, ProjPoint};
