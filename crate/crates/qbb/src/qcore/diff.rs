//! q-difference operators in coefficient and pointwise form.

use crate::error::{domain, Result};
use crate::params::QParams;
use crate::qcore::combinatorics::qint;
use crate::qcore::poly::Poly;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QDiffKind {
    /// `(f(qz) - f(z)) / ((q-1) z)`.
    Dq,
    /// `(f(z/q) - f(z)) / ((1/q-1) z)`.
    DqInv,
    /// `(f(q^{1/2} z) - f(q^{-1/2} z)) / ((q^{1/2}-q^{-1/2}) z)`.
    DeltaSym,
}

/// Exact coefficient image: `x^n -> [n]_q x^{n-1}`, `[n]_{1/q} x^{n-1}` or
/// `[n]_q q^{(1-n)/2} x^{n-1}`.
pub fn qdiff_poly(kind: QDiffKind, f: &Poly, p: &QParams) -> Poly {
    let q = p.q();
    match kind {
        QDiffKind::Dq => f.lower_with(|n| qint(n as i64, q)),
        QDiffKind::DqInv => f.lower_with(|n| qint(n as i64, q) * q.powi(1 - n as i64)),
        QDiffKind::DeltaSym => {
            let rq = q.sqrt();
            f.lower_with(|n| qint(n as i64, q) * rq.powi(1 - n as i64))
        }
    }
}

/// Difference quotient of `f` at `z != 0`.
pub fn qdiff_fn(kind: QDiffKind, f: impl Fn(&Real) -> Real, z: &Real, p: &QParams) -> Result<Real> {
    if z.is_zero() {
        return domain("q-difference quotient is undefined at z = 0");
    }
    let q = p.q();
    let (a, b) = match kind {
        QDiffKind::Dq => (q.clone(), p.one()),
        QDiffKind::DqInv => (q.recip(), p.one()),
        QDiffKind::DeltaSym => {
            let r = q.sqrt();
            let ri = r.recip();
            (r, ri)
        }
    };
    let num = f(&(&a * z)) - f(&(&b * z));
    Ok(num / ((a - b) * z))
}
