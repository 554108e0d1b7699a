//! The coefficients `h^(r)_k(q^2)` of `J_{alpha+1}/J_alpha`.

use crate::error::{domain, Result};
use crate::params::QParams;
use crate::qbessel::functions::{check_alpha, modified, modified_coeffs, BesselKind};
use crate::qbessel::zeros::ZeroTable;
use crate::qcore::series::series_div;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HMethod {
    /// Sum over the Bessel zeros, with a geometric tail estimate.
    ZeroSum,
    /// Taylor coefficients of the quotient by power-series division.
    SeriesQuotient,
}

#[derive(Clone, Debug)]
pub struct HCoeffs {
    /// `values[k-1] = h_k`.
    pub values: Vec<Real>,
    /// Estimated bound on the omitted tail of each zero sum; zero for the
    /// series quotient.
    pub tail_bounds: Vec<Real>,
    pub zeros_used: usize,
}

fn check_kind(r: BesselKind) -> Result<()> {
    if !matches!(r, BesselKind::J2 | BesselKind::J3) {
        return domain("h coefficients are defined for J2 and J3");
    }
    Ok(())
}

/// `J_{a+1}(t)/J_a(t) = scale(t) calJ_{a+1}/calJ_a` with `scale = (t/2)/(1-P^{a+1})`
/// for J2 and `t/(1-P^{a+1})` for J3.
fn half(r: BesselKind) -> bool {
    r == BesselKind::J2
}

/// `h_1..h_kmax` from the power series of `calJ_{a+1}/calJ_a` in `u = t^2`.
pub fn h_series_quotient(r: BesselKind, alpha: &Real, p: &QParams, kmax: usize) -> Result<HCoeffs> {
    check_kind(r)?;
    check_alpha(alpha)?;
    let prec = p.prec() + 32;
    let base = p.q().with_prec(prec).square();
    let n = kmax.saturating_sub(1);
    let num = modified_coeffs(r, &(alpha + 1), &base, n);
    let den = modified_coeffs(r, alpha, &base, n);
    let quo = series_div(&num, &den, n, prec)?;
    let mut d = 1 - base.powr(&(alpha + 1));
    if half(r) {
        d = d.mul_2exp(1);
    }
    let values = quo.iter().take(kmax).map(|c| (c / &d).with_prec(p.prec())).collect();
    Ok(HCoeffs { values, tail_bounds: vec![Real::zero(64); kmax], zeros_used: 0 })
}

/// `h_k = sum_m -2 J_{a+1}(j_m) / J'_a(j_m) j_m^{-2k}` over the zeros in `table`.
pub fn h_zero_sum(table: &ZeroTable, kmax: usize) -> Result<HCoeffs> {
    check_kind(table.kind)?;
    let p = table.params()?;
    let bp = p.squared();
    let alpha = &table.alpha;
    let pa1 = bp.q_pow(&(alpha + 1));
    let mut residues = Vec::with_capacity(table.zeros.len());
    for (z, d) in table.zeros.iter().zip(&table.dmod) {
        let up = modified(table.kind, &(alpha + 1), z, false, &bp)?.value;
        let mut r = z * up / ((1 - &pa1) * d);
        if half(table.kind) {
            r = r.mul_2exp(-1);
        }
        residues.push(-r.mul_2exp(1));
    }
    let mut values = Vec::with_capacity(kmax);
    let mut tail_bounds = Vec::with_capacity(kmax);
    for k in 1..=kmax as i64 {
        let terms: Vec<Real> =
            residues.iter().zip(&table.zeros).map(|(r, z)| r * z.powi(-2 * k)).collect();
        let mut s = p.zero();
        for t in &terms {
            s += t;
        }
        values.push(s);
        tail_bounds.push(geometric_tail(&terms));
    }
    Ok(HCoeffs { values, tail_bounds, zeros_used: table.zeros.len() })
}

/// Tail estimate `|t_M| rho/(1-rho)` from the last two terms.
fn geometric_tail(terms: &[Real]) -> Real {
    let n = terms.len();
    if n < 2 {
        return Real::from_f64(f64::INFINITY, 64);
    }
    let last = terms[n - 1].abs().with_prec(64);
    let rho = (&last / terms[n - 2].abs().with_prec(64)).abs();
    if rho >= 1 {
        return Real::from_f64(f64::INFINITY, 64);
    }
    &last * &rho / (1 - rho)
}

/// Dispatches on the method. `zeros_used` matters only for `ZeroSum`.
pub fn h_coeffs(
    r: BesselKind,
    alpha: &Real,
    p: &QParams,
    kmax: usize,
    zeros_used: usize,
    method: HMethod,
) -> Result<HCoeffs> {
    match method {
        HMethod::SeriesQuotient => h_series_quotient(r, alpha, p, kmax),
        HMethod::ZeroSum => {
            let t = crate::qbessel::zeros::bessel_zeros(r, alpha, p, zeros_used)?;
            h_zero_sum(&t, kmax)
        }
    }
}
