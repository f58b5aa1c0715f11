//! Exact symbolic computations for the vacuum affine vertex algebra of type
//! `A_l` (`l` even) at level `k = -(l+1)/2`.
//!
//! Everything in this crate is computed over exact rational numbers
//! ([`Rat`](crate::rational::Rat), arbitrary precision); no floating point is
//! used anywhere.  The crate is `no_std` (with `alloc`): it contains the pure
//! algebra and no IO.  The companion CLI crate carries file formats and
//! reporting.
//!
//! The pipeline implemented here:
//!
//! - [`root_system`]: the type-`A_l` root system, weights in fundamental
//!   coordinates, coroot pairings.
//! - [`finite_lie`]: `sl(l+1)` as traceless matrices, Chevalley generators,
//!   nested-bracket root vectors, the trace form.
//! - [`affine_lie`]: the affinization with its central extension, affine
//!   weights and positive real roots, affine coroot pairings.
//! - [`verma`]: the level-`k` generalized Verma (vacuum) module, PBW
//!   monomials of negative degree, the explicit singular vector of conformal
//!   degree 2 and its annihilation checks.
//! - [`enveloping`]: `U(sl(l+1))` with PBW normal ordering, the Zhu-algebra
//!   image of the singular vector, the adjoint closure `R` of that image, and
//!   the zero-weight polynomials obtained by projecting to the Cartan part.
//! - [`classification`]: the `2^l` common zeros of the zero-weight
//!   polynomials, one per support set, with an independent solver
//!   cross-checked against the closed-form weights.
//! - [`admissibility`]: exact admissibility checks for the resulting affine
//!   weights (shifted pairings with positive real coroots, rationality rank,
//!   simple-system extraction by minimality).
//!
//! Only even `l >= 2` is supported; constructors reject other ranks.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod admissibility;
pub mod affine_lie;
pub mod classification;
pub mod enveloping;
pub mod error;
pub mod finite_lie;
pub mod linalg;
pub mod rational;
pub mod root_system;
pub mod verma;

pub use error::Error;
pub use rational::Rat;

/// Checks that `l` is a valid rank for this pipeline: even and at least 2.
pub fn check_rank(l: usize) -> Result<(), Error> {
    if l == 0 || l % 2 != 0 {
        Err(Error::BadRank { l })
    } else {
        Ok(())
    }
}

/// The boundary level `k = -(l+1)/2` that this crate specialises to.
pub fn boundary_level(l: usize) -> Rat {
    rational::ratio(-((l as i64) + 1), 2)
}
