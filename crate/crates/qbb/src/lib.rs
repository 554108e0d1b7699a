//! Generalized q-Bernoulli polynomials attached to the Jackson q-Bessel
//! functions, with the q-calculus they are built on.
//!
//! Everything runs on [`Real`], an MPFR float whose precision is carried by
//! [`QParams`]. The modules build on each other in order:
//!
//! * [`qcore`]: q-Pochhammer symbols, q-exponentials and q-trigonometric
//!   functions, q-difference operators, Jackson integrals, `2phi1`.
//! * [`qbessel`]: the three Jackson q-Bessel functions, zero tables and the
//!   `h^(r)_k` coefficients.
//! * [`qbernoulli`]: the numbers and polynomials themselves and a catalog of
//!   identities that can be checked numerically.
//! * [`qasym`]: the residue series over Bessel zeros and large-`alpha` limits.
//! * [`qconnect`]: expansions in q-Laguerre and little q-Legendre bases.
//! * [`verify`]: the verification suite behind `qbb verify`.
//! * [`io`]: JSON codecs for zero tables, reports and expansions.

pub mod error;
pub mod io;
pub mod params;
pub mod qasym;
pub mod qbernoulli;
pub mod qbessel;
pub mod qconnect;
pub mod qcore;
pub mod real;
pub mod verify;

pub use error::{Error, Result};
pub use params::{QParams, Truncated, DEFAULT_PRECISION_BITS};
pub use qcore::Poly;
pub use real::Real;
