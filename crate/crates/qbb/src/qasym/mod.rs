//! Residue-series evaluation of the Bernoulli numbers over Bessel zeros,
//! leading-order asymptotics, and the large-alpha limit forms.

pub mod limits;
pub mod residue;

pub use limits::{alpha_limit, LimitKind};
pub use residue::{
    beta_asymptotic_leading, beta_residue, beta_residue_tol, beta_residue_with_table, residue_terms, Parity, ResidueSeriesResult,
};
