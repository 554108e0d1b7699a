//! q-calculus primitives.

pub mod combinatorics;
pub mod diff;
pub mod exp;
pub mod gamma;
pub mod integral;
pub mod phi21;
pub mod pochhammer;
pub mod poly;
pub mod series;
pub mod trig;

pub use combinatorics::{qbinom, qcombinatorics, qfact, qint, QCombinatorics, QTables};
pub use diff::{qdiff_fn, qdiff_poly, QDiffKind};
pub use exp::{big_e_q, e_q, exp_q, qexp, qexp_coeffs, QExpKind};
pub use gamma::{qbeta, qgamma, qgamma_beta, QGammaBeta};
pub use integral::qintegral01;
pub use phi21::phi21;
pub use pochhammer::{qpoch, qpoch2, qpoch_inf, qpochhammer, PochLength};
pub use poly::Poly;
pub use series::{series_div, series_inv, series_mul};
pub use trig::{qtrig, qtrig_value, TrigKind};
