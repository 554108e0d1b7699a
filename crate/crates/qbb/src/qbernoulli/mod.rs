//! Generalized q-Bernoulli numbers and polynomials.

pub mod beta;
pub mod cexp;
pub mod identities;
pub mod polys;

pub use beta::{beta3_closed_form, beta3_numbers, beta_closed_form, beta_numbers, BetaFamily, BetaMethod, BetaSequence};
pub use cexp::{cexp_coeffs, g3_reciprocal_coeffs, CexpMethod};
pub use identities::{identity_residual, run_default_grid, IdentityId, IdentityReport, Point};
pub use polys::{alsalam_poly, bernoulli_poly, AlSalam, BernoulliCtx, Family};
