//! q-trigonometric and q-hyperbolic functions as real even/odd series.

use crate::error::{domain, Result};
use crate::params::{QParams, Truncated};
use crate::qcore::exp::QExpKind;
use crate::qcore::series::sum_ratio_series;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigKind {
    /// Odd part of `e_q(iz)`, radius `1/(1-q)`.
    SinSmall,
    CosSmall,
    /// Odd part of `E_q(iz)`.
    SinBig,
    CosBig,
    /// Odd part of `exp_q(iz)`.
    S,
    C,
    /// Odd part of `exp_q(z)`.
    Sh,
    Ch,
}

impl TrigKind {
    pub const ALL: [TrigKind; 8] = [
        TrigKind::SinSmall,
        TrigKind::CosSmall,
        TrigKind::SinBig,
        TrigKind::CosBig,
        TrigKind::S,
        TrigKind::C,
        TrigKind::Sh,
        TrigKind::Ch,
    ];

    pub fn is_odd(self) -> bool {
        matches!(self, TrigKind::SinSmall | TrigKind::SinBig | TrigKind::S | TrigKind::Sh)
    }

    fn exp_kind(self) -> QExpKind {
        match self {
            TrigKind::SinSmall | TrigKind::CosSmall => QExpKind::SmallE,
            TrigKind::SinBig | TrigKind::CosBig => QExpKind::BigE,
            _ => QExpKind::SymExp,
        }
    }

    fn alternating(self) -> bool {
        !matches!(self, TrigKind::Sh | TrigKind::Ch)
    }
}

/// Evaluates the chosen function at real `z`.
///
/// With `a_n = q^{c n(n-1)}/[n]_q!` the coefficients of the underlying
/// exponential, consecutive even (odd) terms differ by
/// `-+ q^{2c(4m+1)} z^2 / ([2m+1][2m+2])` (resp. `4m+3`, `[2m+2][2m+3]`).
/// Large arguments are handled by the summation engine's precision boost.
pub fn qtrig(kind: TrigKind, z: &Real, p: &QParams) -> Result<Truncated> {
    let q = p.q();
    if matches!(kind, TrigKind::SinSmall | TrigKind::CosSmall) && (z * (1 - q)).abs() >= 1 {
        return domain(format!("sin_q/cos_q need |z| < 1/(1-q), got z = {}", z.to_sci(12)));
    }
    let c2 = match kind.exp_kind() {
        QExpKind::SmallE => p.one(),
        QExpKind::BigE => q.clone(),
        QExpKind::SymExp => q.sqrt(),
    };
    let odd = kind.is_odd();
    let sign = if kind.alternating() { -1 } else { 1 };
    let t0 = if odd { z.clone() } else { p.one() };
    let z2 = z.square();
    sum_ratio_series(
        &t0,
        |m, prec| {
            let q = q.with_prec(prec);
            let m = m as i64;
            let (e, a, b) = if odd { (4 * m + 3, 2 * m + 2, 2 * m + 3) } else { (4 * m + 1, 2 * m + 1, 2 * m + 2) };
            let mut r = z2.with_prec(prec) * c2.with_prec(prec).powi(e) * (1 - &q).square();
            r /= (1 - q.powi(a)) * (1 - q.powi(b));
            r * sign
        },
        p.prec(),
        p.tol_bits(),
        1_000_000,
    )
}

pub fn qtrig_value(kind: TrigKind, z: &Real, p: &QParams) -> Result<Real> {
    Ok(qtrig(kind, z, p)?.value)
}
