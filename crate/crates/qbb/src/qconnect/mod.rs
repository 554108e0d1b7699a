//! q-Laguerre and little q-Legendre bases, and the expansion of the
//! Bernoulli polynomials in each of them.

pub mod expansion;
pub mod laguerre;
pub mod legendre;

pub use expansion::{
    connection_coeffs, connection_coeffs_with, expansion_residual, legendre_coeff_oracle, Basis,
    ConnectionExpansion, ConnectionOptions, LaguerrePrefactor, LegendreForm,
};
pub use laguerre::{laguerre_recurrence_residual, laguerre_rodrigues, qlaguerre};
pub use legendre::{legendre_norm, legendre_norm_printed, legendre_rodrigues, qlegendre, qlegendre_poly};
