//! Closed forms of the polynomials and numbers as `alpha -> infinity`.

use crate::error::{domain, Result};
use crate::params::QParams;
use crate::qbernoulli::polys::{alsalam_poly, AlSalam};
use crate::qcore::combinatorics::qfact;
use crate::qcore::pochhammer::qpoch;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LimitKind {
    /// `x^n (1/(2x);q)_n`
    B1Limit,
    /// `(-1/2)^n q^{n(n-1)/2} G_n(-2x)`
    B2Limit,
    /// The double-sum display, evaluated literally.
    B3Limit,
    /// The Cauchy product of the two exponential factors, unsimplified.
    B3LimitCauchy,
    /// `(-1)^n 2^{-n} q^{n(n-1)/2}`
    BetaLimit,
    /// `B3Limit` at `x = 0`.
    Beta3Limit,
}

impl LimitKind {
    pub const ALL: [LimitKind; 6] = [
        LimitKind::B1Limit,
        LimitKind::B2Limit,
        LimitKind::B3Limit,
        LimitKind::B3LimitCauchy,
        LimitKind::BetaLimit,
        LimitKind::Beta3Limit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LimitKind::B1Limit => "B1_LIMIT",
            LimitKind::B2Limit => "B2_LIMIT",
            LimitKind::B3Limit => "B3_LIMIT",
            LimitKind::B3LimitCauchy => "B3_LIMIT_CAUCHY",
            LimitKind::BetaLimit => "BETA_LIMIT",
            LimitKind::Beta3Limit => "BETA3_LIMIT",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        LimitKind::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(s))
    }
}

fn neg_half_pow(n: usize, prec: u32) -> Real {
    let v = Real::two_pow(-(n as i32), prec);
    if n % 2 == 1 { -v } else { v }
}

/// `q^{e/4}` via a square root of the square root.
fn q_quarter(q: &Real, e: i64) -> Real {
    q.sqrt().sqrt().powi(e)
}

/// `q^{n(n-1)/4} (-1/2)^n sum_k (-1)^k q^{k(n-k+3)} (q^{-n};q)_{2k}/(q^2;q^2)_k (2x q^{(1-n)/2};q)_{n-2k}`
fn b3_printed(n: usize, x: &Real, p: &QParams) -> Real {
    let q = p.q();
    let prec = p.prec();
    let q2 = q.square();
    let ni = n as i64;
    let shift = x.mul_2exp(1) * q_quarter(q, 2 - 2 * ni);
    let mut s = p.zero();
    for k in 0..=n / 2 {
        let ki = k as i64;
        let mut t = q.powi(ki * (ni - ki + 3)) * qpoch(&q.powi(-ni), q, 2 * k) / qpoch(&q2, &q2, k);
        t *= qpoch(&shift, q, n - 2 * k);
        if k % 2 == 1 { s -= t } else { s += t }
    }
    q_quarter(q, ni * (ni - 1)) * neg_half_pow(n, prec) * s
}

/// `[n]! sum_k (-1)^k q^{3k/2} ((1-q)/2)^{2k}/(q^2;q^2)_k * q^{m(m-1)/4} (-1/2)^m (2x q^{(1-m)/2};q)_m/[m]!`, `m = n-2k`.
fn b3_cauchy(n: usize, x: &Real, p: &QParams) -> Real {
    let q = p.q();
    let prec = p.prec();
    let q2 = q.square();
    let c = (1 - q).mul_2exp(-1);
    let mut s = p.zero();
    for k in 0..=n / 2 {
        let m = n - 2 * k;
        let mi = m as i64;
        let mut t = q_quarter(q, 6 * k as i64) * c.powi(2 * k as i64) / qpoch(&q2, &q2, k);
        let shift = x.mul_2exp(1) * q_quarter(q, 2 - 2 * mi);
        t *= q_quarter(q, mi * (mi - 1)) * neg_half_pow(m, prec) * qpoch(&shift, q, m) / qfact(m, q);
        if k % 2 == 1 { s -= t } else { s += t }
    }
    qfact(n, q) * s
}

/// Evaluates a limit form. `x` is ignored by the number limits.
pub fn alpha_limit(kind: LimitKind, n: usize, x: &Real, p: &QParams) -> Result<Real> {
    let q = p.q();
    let prec = p.prec();
    let x = x.with_prec(prec);
    Ok(match kind {
        LimitKind::B1Limit => {
            if x.is_zero() {
                return domain("B1_LIMIT needs x != 0; use BETA_LIMIT at x = 0");
            }
            x.powi(n as i64) * qpoch(&x.mul_2exp(1).recip(), q, n)
        }
        LimitKind::B2Limit => {
            let g = alsalam_poly(AlSalam::G, n, p).eval(&-x.mul_2exp(1));
            neg_half_pow(n, prec) * p.q_powi((n * n.saturating_sub(1) / 2) as i64) * g
        }
        LimitKind::B3Limit => b3_printed(n, &x, p),
        LimitKind::B3LimitCauchy => b3_cauchy(n, &x, p),
        LimitKind::BetaLimit => neg_half_pow(n, prec) * p.q_powi((n * n.saturating_sub(1) / 2) as i64),
        LimitKind::Beta3Limit => b3_printed(n, &p.zero(), p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbernoulli::polys::{bernoulli_poly, Family};

    #[test]
    fn examples() {
        let p = QParams::new(0.5, 256).unwrap();
        let x = p.real(0.3);
        assert_eq!(alpha_limit(LimitKind::BetaLimit, 2, &x, &p).unwrap(), 0.125);
        let b1 = alpha_limit(LimitKind::B1Limit, 1, &p.ratio(3, 10), &p).unwrap();
        assert!((b1 + p.ratio(1, 5)).abs() < 1e-70);
        assert!(alpha_limit(LimitKind::B1Limit, 1, &p.zero(), &p).is_err());
    }

    #[test]
    fn large_alpha_convergence() {
        let p = QParams::new(0.5, 256).unwrap();
        let a = p.int(200);
        for n in 0..=6 {
            for x in [p.ratio(3, 10), p.one()] {
                for (fam, kind) in [
                    (Family::K1, LimitKind::B1Limit),
                    (Family::K2, LimitKind::B2Limit),
                    (Family::K3, LimitKind::B3LimitCauchy),
                ] {
                    let b = bernoulli_poly(fam, n, &a, &p).unwrap().eval(&x);
                    let l = alpha_limit(kind, n, &x, &p).unwrap();
                    assert!((b - l).abs() < 1e-10, "{kind:?} n={n}");
                }
            }
            let b3 = bernoulli_poly(Family::K3, n, &a, &p).unwrap().eval(&p.zero());
            assert!((b3 - alpha_limit(LimitKind::Beta3Limit, n, &p.zero(), &p).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn printed_b3_limit_is_off_away_from_zero() {
        let p = QParams::new(0.5, 256).unwrap();
        let x = p.real(0.3);
        let a = alpha_limit(LimitKind::B3Limit, 3, &x, &p).unwrap();
        let b = alpha_limit(LimitKind::B3LimitCauchy, 3, &x, &p).unwrap();
        assert!((a - b).abs() > 1e-3);
    }

    #[test]
    fn beta_limit_is_b1_limit_near_zero() {
        let p = QParams::new(0.5, 256).unwrap();
        let x = p.real(1e-6);
        for n in 1..=5 {
            let a = alpha_limit(LimitKind::B1Limit, n, &x, &p).unwrap();
            let b = alpha_limit(LimitKind::BetaLimit, n, &x, &p).unwrap();
            assert!(((a - &b) / b).abs() < 1e-4);
        }
    }
}
