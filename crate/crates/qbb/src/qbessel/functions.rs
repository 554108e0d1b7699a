//! Jackson q-Bessel functions, their modified forms and the generating
//! denominators `g^(k)_alpha`.

use crate::error::{domain, Result};
use crate::params::{QParams, Truncated};
use crate::qcore::exp::{big_e_q, e_q};
use crate::qcore::phi21::phi21;
use crate::qcore::pochhammer::qpoch_inf;
use crate::qcore::series::{sum_ratio_series, sum_ratio_series_ext};
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BesselKind {
    J1,
    J2,
    J3,
}

impl BesselKind {
    pub fn name(self) -> &'static str {
        match self {
            BesselKind::J1 => "J1",
            BesselKind::J2 => "J2",
            BesselKind::J3 => "J3",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "J1" | "1" => Some(BesselKind::J1),
            "J2" | "2" => Some(BesselKind::J2),
            "J3" | "3" => Some(BesselKind::J3),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BesselForm {
    /// `J^(k)_alpha(t;q)` with its normalising prefactor and power of `t`.
    Raw,
    /// The even entire series `calJ^(k)_alpha(t;q)` with value 1 at 0.
    Modified,
    /// `g^(k)_alpha(it;q)`, a positive even series in `t`.
    GForm,
}

pub(crate) fn check_alpha(alpha: &Real) -> Result<()> {
    if !(*alpha > -1) || !alpha.is_finite() {
        return domain(format!("alpha must exceed -1, got {}", alpha.to_sci(12)));
    }
    Ok(())
}

/// `u_{n+1}/u_n` for the terms `u_n = c_n z^{2n}` of `calJ^(k)_alpha(z; P)`.
/// `sign` is -1 for a real argument and +1 for an imaginary one.
fn term_ratio(kind: BesselKind, n: usize, pa: &Real, base: &Real, z2: &Real, sign: i32, prec: u32) -> Real {
    let base = base.with_prec(prec);
    let n = n as i64;
    let pn1 = base.powi(n + 1);
    let den = (1 - &pn1) * (1 - pa.with_prec(prec) * base.powi(n));
    let num = match kind {
        BesselKind::J1 => z2.with_prec(prec).mul_2exp(-2),
        // P^{(n+1)(n+1+a)-n(n+a)} = P^{2n+1} P^a
        BesselKind::J2 => z2.with_prec(prec).mul_2exp(-2) * base.powi(2 * n + 1) * pa.with_prec(prec) / &base,
        BesselKind::J3 => z2.with_prec(prec) * pn1,
    };
    num / den * sign
}

/// `P^{alpha+1}`; every ratio above uses it.
fn pa1(alpha: &Real, base: &Real) -> Real {
    base.powr(&(alpha + 1))
}

fn radius_check(kind: BesselKind, z: &Real) -> Result<()> {
    if kind == BesselKind::J1 && z.abs() >= 2 {
        return domain(format!("J1 series needs |t| < 2, got {}", z.to_sci(12)));
    }
    Ok(())
}

/// `calJ^(k)_alpha(z; P)` with `P = bp.q()`, at real (`imaginary = false`) or
/// purely imaginary argument `i z`.
pub fn modified(kind: BesselKind, alpha: &Real, z: &Real, imaginary: bool, bp: &QParams) -> Result<Truncated> {
    modified_ext(kind, alpha, z, imaginary, bp).map(|r| r.0)
}

/// As [`modified`], also returning `log2` of the largest term.
pub fn modified_ext(
    kind: BesselKind,
    alpha: &Real,
    z: &Real,
    imaginary: bool,
    bp: &QParams,
) -> Result<(Truncated, f64)> {
    check_alpha(alpha)?;
    radius_check(kind, z)?;
    let base = bp.q();
    let pa = pa1(alpha, base);
    let z2 = z.square();
    let sign = if imaginary { 1 } else { -1 };
    sum_ratio_series_ext(
        &bp.one(),
        |n, prec| term_ratio(kind, n, &pa, base, &z2, sign, prec),
        bp.prec(),
        bp.tol_bits(),
        1_000_000,
    )
}

/// `d/dz calJ^(k)_alpha(z; P)` at real `z`, from the termwise derivative.
pub fn modified_deriv(kind: BesselKind, alpha: &Real, z: &Real, bp: &QParams) -> Result<Truncated> {
    check_alpha(alpha)?;
    radius_check(kind, z)?;
    let base = bp.q();
    let pa = pa1(alpha, base);
    let z2 = z.square();
    // d_n = 2n c_n z^{2n-1}, n >= 1; d_1 = 2 c_1 z with c_1 z^2 = ratio(0).
    let first = term_ratio(kind, 0, &pa, base, &z2, -1, bp.prec() + 64);
    if z.is_zero() {
        return Ok(Truncated { value: bp.zero(), terms_used: 1, tail_bound: Real::zero(64) });
    }
    let d1 = first * 2 / z;
    sum_ratio_series(
        &d1,
        |m, prec| {
            let r = term_ratio(kind, m + 1, &pa, base, &z2, -1, prec);
            r * (m as i32 + 2) / (m as i32 + 1)
        },
        bp.prec(),
        bp.tol_bits(),
        1_000_000,
    )
}

/// Coefficients `c_0..c_n` of `calJ^(k)_alpha(z; P)` in `u = z^2`.
pub fn modified_coeffs(kind: BesselKind, alpha: &Real, base: &Real, n: usize) -> Vec<Real> {
    let prec = base.prec();
    let pa = pa1(alpha, base);
    let one = Real::one(prec);
    let mut c = one.clone();
    let mut out = vec![c.clone()];
    for k in 0..n {
        c *= term_ratio(kind, k, &pa, base, &one, -1, prec);
        out.push(c.clone());
    }
    out
}

/// Argument of `calJ(.; q^2)` that represents `g^(k)_alpha(t; q)`.
pub fn g_argument(kind: BesselKind, t: &Real, p: &QParams) -> Real {
    let q = p.q();
    match kind {
        BesselKind::J3 => t.mul_2exp(-1) * (1 - q) / q.sqrt().sqrt(),
        _ => t * (1 - q),
    }
}

/// `g^(k)_alpha(it; q)`.
pub fn g_form(kind: BesselKind, alpha: &Real, t: &Real, p: &QParams) -> Result<Truncated> {
    modified(kind, alpha, &g_argument(kind, t, p), true, &p.squared())
}

/// `g^(k)_alpha(t; q)` at real `t`.
pub fn g_real(kind: BesselKind, alpha: &Real, t: &Real, p: &QParams) -> Result<Truncated> {
    modified(kind, alpha, &g_argument(kind, t, p), false, &p.squared())
}

/// Power-series coefficients of `g^(k)_alpha(it; q)` in `t`, degrees `0..=n`.
pub fn g_coeffs(kind: BesselKind, alpha: &Real, p: &QParams, n: usize) -> Vec<Real> {
    let base = p.q().square();
    let c = modified_coeffs(kind, alpha, &base, n / 2);
    let s = g_argument(kind, &p.one(), p).square();
    let mut out = vec![p.zero(); n + 1];
    let mut w = p.one();
    for (m, cm) in c.iter().enumerate() {
        // imaginary argument flips the sign of every odd power of u
        let sgn = if m % 2 == 0 { 1 } else { -1 };
        out[2 * m] = cm * &w * sgn;
        w *= &s;
    }
    out
}

/// Evaluates the chosen form. `Raw` needs `t > 0` unless `alpha` is an integer.
pub fn jbessel(kind: BesselKind, form: BesselForm, alpha: &Real, t: &Real, p: &QParams) -> Result<Truncated> {
    check_alpha(alpha)?;
    match form {
        BesselForm::Modified => modified(kind, alpha, t, false, p),
        BesselForm::GForm => {
            if kind == BesselKind::J1 && (t * (1 - p.q())).abs() >= 2 {
                return domain("g^(1) series needs |t(1-q)| < 2");
            }
            g_form(kind, alpha, t, p)
        }
        BesselForm::Raw => {
            let integer_alpha = alpha.to_i64_exact();
            if integer_alpha.is_none() && !(*t > 0) {
                return domain("raw form with non-integer alpha needs t > 0");
            }
            let m = modified(kind, alpha, t, false, p)?;
            let pref = qpoch_inf(&p.q_pow(&(alpha + 1)), p).value / qpoch_inf(p.q(), p).value;
            let arg = if kind == BesselKind::J3 { t.clone() } else { t.mul_2exp(-1) };
            let pow = match integer_alpha {
                Some(k) => arg.powi(k),
                None => arg.powr(alpha),
            };
            let scale = pref * pow;
            Ok(Truncated {
                value: &m.value * &scale,
                terms_used: m.terms_used,
                tail_bound: m.tail_bound * scale.abs().with_prec(64),
            })
        }
    }
}

/// The three sides of `g^(1)(it) E_q(t/2) = g^(2)(it) e_q(t/2)
/// = 2phi1(q^{a+1/2}, -q^{a+1/2}; q^{2a+1}; q, (1-q)t/2)`, in that order.
/// Needs `|(1-q) t / 2| < 1`.
pub fn hahn_product_forms(alpha: &Real, t: &Real, p: &QParams) -> Result<[Real; 3]> {
    check_alpha(alpha)?;
    let q = p.q();
    let z = (1 - q) * t.mul_2exp(-1);
    if z.abs() >= 1 {
        return domain(format!("needs |(1-q)t/2| < 1, got {}", z.to_sci(12)));
    }
    let half = t.mul_2exp(-1);
    let lhs1 = g_form(BesselKind::J1, alpha, t, p)?.value * big_e_q(&half, p);
    let lhs2 = g_form(BesselKind::J2, alpha, t, p)?.value * e_q(&half, p)?;
    let a = p.q_pow(&(alpha + p.ratio(1, 2)));
    let c = p.q_pow(&(alpha.mul_2exp(1) + 1));
    let rhs = phi21(&a, &-&a, &c, &z, p)?.value;
    Ok([lhs1, lhs2, rhs])
}
