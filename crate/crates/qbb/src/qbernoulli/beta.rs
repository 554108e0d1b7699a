//! The numbers `beta_{n,alpha}(q)` (shared by families 1 and 2) and
//! `beta^(3)_{n,alpha}(q)`.
//!
//! Both recurrences depend on `alpha` only through `p = q^{2 alpha + 2}`, so
//! the solvers take `p` directly. They also accept any positive base,
//! including `1/q`, since only finite products appear.

use crate::error::Result;
use crate::params::QParams;
use crate::qbessel::functions::check_alpha;
use crate::qcore::combinatorics::QTables;
use crate::qcore::pochhammer::qpoch;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaFamily {
    /// `beta_{n,alpha}`, shared by the first two polynomial families.
    Shared12,
    K3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaMethod {
    /// The forward solve of the defining convolution with `1/g`.
    RecQ1902,
    /// The rearranged recurrence expressing `beta_n` through `beta_{n-2k-2}`.
    RecYY,
}

#[derive(Clone, Debug)]
pub struct BetaSequence {
    pub family: BetaFamily,
    pub alpha: Real,
    pub method: BetaMethod,
    pub values: Vec<Real>,
}

/// `q^{e/4}` for integer `e`.
pub(crate) fn q_quarter(q4: &Real, e: i64) -> Real {
    q4.powi(e)
}

/// Shared tables for a base `q` and parameter `p`.
struct Recur {
    t: QTables,
    /// `(q^2;q^2)_k (p;q^2)_k`
    den: Vec<Real>,
    one_minus_q: Real,
    q4: Real,
}

impl Recur {
    fn new(q: &Real, p: &Real, n: usize) -> Self {
        let q2 = q.square();
        let den = (0..=n / 2 + 1).map(|k| qpoch(&q2, &q2, k) * qpoch(p, &q2, k)).collect();
        Recur { t: QTables::new(q, n), den, one_minus_q: 1 - q, q4: q.sqrt().sqrt() }
    }
}

/// Solves for `beta_0..beta_n` at base `q` with `p = q^{2 alpha+2}`.
/// `three` selects the `beta^(3)` recurrence.
pub fn solve_beta(q: &Real, p: &Real, n: usize, three: bool, method: BetaMethod) -> Vec<Real> {
    solve_beta_tracked(q, p, n, three, method).0
}

/// As [`solve_beta`], also returning the worst cancellation in bits: how far
/// any `beta_m` falls below the largest quantity it was formed from.
fn solve_beta_tracked(q: &Real, p: &Real, n: usize, three: bool, method: BetaMethod) -> (Vec<Real>, f64) {
    let prec = q.prec();
    let mut loss = 0.0f64;
    let r = Recur::new(q, p, n);
    let mut b: Vec<Real> = Vec::with_capacity(n + 1);
    let half = Real::from_ratio(1, 2, prec);
    for m in 0..=n {
        if m == 0 {
            b.push(Real::one(prec));
            continue;
        }
        // (-1/2)^m, times q^{m(m-1)/4} for family 3
        let mut rhs = half.powi(m as i64);
        if m % 2 == 1 {
            rhs = -rhs;
        }
        if three {
            rhs *= q_quarter(&r.q4, (m * (m - 1)) as i64);
        }
        let v = match method {
            BetaMethod::RecQ1902 => {
                let mut s = Real::zero(prec);
                for k in 1..=m / 2 {
                    let mut t = r.one_minus_q.powi(2 * k as i64) * &b[m - 2 * k];
                    t /= Real::from_i64(4, prec).powi(k as i64) * r.t.fact(m - 2 * k) * &r.den[k];
                    if three {
                        t *= q_quarter(&r.q4, (4 * k * k + 2 * k) as i64);
                    }
                    s += t;
                }
                let s = s * r.t.fact(m);
                let scale = rhs.log2_abs().max(s.log2_abs());
                let v = rhs - s;
                loss = loss.max(cancellation(scale, &v, prec));
                v
            }
            BetaMethod::RecYY => {
                let mut s = Real::zero(prec);
                let h = r.one_minus_q.mul_2exp(-1);
                for k in 0..m / 2 {
                    let mut t = h.powi(2 * k as i64) * &b[m - 2 * k - 2];
                    t /= r.t.fact(m - 2 * k - 2) * &r.den[k + 1];
                    if three {
                        t *= q_quarter(&r.q4, (4 * k * k + 10 * k) as i64);
                    }
                    s += t;
                }
                let mut pre = r.t.fact(m) * r.one_minus_q.square() / 4;
                if three {
                    pre *= q_quarter(&r.q4, 6);
                }
                let s = pre * s;
                let scale = rhs.log2_abs().max(s.log2_abs());
                let v = rhs - s;
                loss = loss.max(cancellation(scale, &v, prec));
                v
            }
        };
        b.push(v);
    }
    (b, loss)
}

fn cancellation(scale: f64, v: &Real, prec: u32) -> f64 {
    if v.is_zero() {
        prec as f64
    } else {
        (scale - v.log2_abs()).max(0.0)
    }
}

/// Solves at `prec + 32` bits and repeats with the bits lost to cancellation
/// added back until the loss stops growing, so every value keeps about
/// `prec` correct bits. Small `q` with large `alpha` makes `beta_n` tiny next
/// to its inputs, and a noisy first pass underestimates the loss.
fn solve_beta_adaptive(p: &QParams, pp_exp: &Real, n: usize, three: bool, method: BetaMethod) -> Vec<Real> {
    let solve = |wp: u32| {
        let q = p.q().with_prec(wp);
        let pp = q.powr(&pp_exp.with_prec(wp));
        solve_beta_tracked(&q, &pp, n, three, method)
    };
    let cap = 3 * p.prec();
    let mut extra = 0u32;
    loop {
        let (vals, loss) = solve(p.prec() + 32 + extra);
        let need = (loss.ceil() as u32).saturating_sub(24).min(cap);
        if need <= extra || extra == cap {
            return vals;
        }
        extra = (need + 16).min(cap);
    }
}
/// `beta_{0..=n, alpha}(q)`.
pub fn beta_numbers(alpha: &Real, p: &QParams, n: usize, method: BetaMethod) -> Result<BetaSequence> {
    check_alpha(alpha)?;
    let e = (alpha + 1).mul_2exp(1);
    let values = solve_beta_adaptive(p, &e, n, false, method).into_iter().map(|v| v.with_prec(p.prec())).collect();
    Ok(BetaSequence { family: BetaFamily::Shared12, alpha: alpha.clone(), method, values })
}

/// `beta^(3)_{0..=n, alpha}(q)`.
pub fn beta3_numbers(alpha: &Real, p: &QParams, n: usize, method: BetaMethod) -> Result<BetaSequence> {
    check_alpha(alpha)?;
    let e = (alpha + 1).mul_2exp(1);
    let values = solve_beta_adaptive(p, &e, n, true, method).into_iter().map(|v| v.with_prec(p.prec())).collect();
    Ok(BetaSequence { family: BetaFamily::K3, alpha: alpha.clone(), method, values })
}

/// The displayed closed forms for `beta_1..beta_5`.
pub fn beta_closed_form(n: usize, alpha: &Real, p: &QParams) -> Option<Real> {
    let q = p.q();
    let pp = p.q_pow(&(alpha + 1).mul_2exp(1));
    let q2 = q.square();
    let qa = |e: i64| p.q_pow(&(alpha.mul_2exp(1) + e as i32));
    let one_p = 1 - &pp;
    let poch2 = qpoch(&pp, &q2, 2);
    Some(match n {
        0 => p.one(),
        1 => p.ratio(-1, 2),
        2 => q * (1 - qa(1)) / (one_p * 4),
        3 => -(q.powi(3) * (1 - qa(-1))) / (one_p * 8),
        4 => {
            p.ratio(1, 16)
                - (q + q.powi(3)) * (1 - q.powi(3)) * (1 - qa(1)) / (one_p.square() * 16)
                - (1 - q) * (1 - q.powi(3)) / (poch2 * 16)
        }
        5 => {
            (1 + &q2) * (1 - q.powi(5)) * (q.powi(3) - &pp) / (one_p.square() * 32)
                + (1 - q.powi(3)) * (1 - q.powi(5)) / (poch2 * 32)
                - p.ratio(1, 32)
        }
        _ => return None,
    })
}

/// The displayed closed forms for `beta^(3)_1..beta^(3)_5`. The `n = 4`
/// display disagrees with both recurrences; it is reproduced as printed.
pub fn beta3_closed_form(n: usize, alpha: &Real, p: &QParams) -> Option<Real> {
    let q = p.q();
    let pp = p.q_pow(&(alpha + 1).mul_2exp(1));
    let p2 = &pp * q.square();
    let rq = q.sqrt();
    let q32 = &rq * q;
    let one_p = 1 - &pp;
    let qi = |k: i64| (1 - q.powi(k)) / (1 - q);
    let b2num = &rq * &one_p - &q32 * (1 - q);
    let den = |c: i64| one_p.square() * (1 - &p2) * c as i32;
    Some(match n {
        0 => p.one(),
        1 => p.ratio(-1, 2),
        2 => &b2num / (&one_p * 4),
        3 => -(&q32 * (q.powi(3) - &pp)) / (&one_p * 8),
        4 => {
            (q.powi(3) * qpoch(&pp, &q.square(), 2) * &one_p) / den(16)
                - qi(3) * q.powi(5) * (1 - q).square() * &one_p / den(16)
                + qi(4) * qi(3) * &q32 * (1 - &p2) * &b2num / den(16)
        }
        5 => {
            qi(5) * q.powi(3) * (1 - q) * (1 + q.square()) * (q.powi(3) - &pp) * (1 - &p2) / den(32)
                + qi(5) * q.powi(5) * (1 - q) * (1 - q.powi(3)) * &one_p / den(32)
                - q.powi(5) * one_p.square() * (1 - &p2) / den(32)
        }
        _ => return None,
    })
}
