//! Jackson q-Bessel functions and their zeros.

pub mod cache;
pub mod functions;
pub mod hcoeffs;
pub mod zeros;

pub use cache::ZeroCache;
pub use functions::{
    g_coeffs, g_form, g_real, hahn_product_forms, jbessel, modified, modified_deriv, BesselForm, BesselKind,
};
pub use hcoeffs::{h_coeffs, h_series_quotient, h_zero_sum, HCoeffs, HMethod};
pub use zeros::{bessel_zeros, unit_interval_sign_change, zero_free_check, ZeroTable};
