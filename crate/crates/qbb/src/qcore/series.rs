//! Summation engine for series given by a term ratio, plus truncated
//! power-series arithmetic.

use crate::error::{Error, Result};
use crate::params::Truncated;
use crate::real::Real;

const PROBE_PREC: u32 = 64;
const GUARD_BITS: u32 = 32;

/// Sums `t_0 + t_1 + ...` with `t_{n+1} = t_n * ratio(n, prec)`.
///
/// A 64-bit probe pass locates the largest term and the index past which
/// terms fall `tol_bits` below it. The real pass then runs with enough extra
/// bits to absorb cancellation against that largest term, so the result is
/// accurate to roughly `2^-tol_bits` absolutely even when the terms are huge.
/// The tail bound assumes the ratios keep shrinking in magnitude past the
/// cutoff, which holds for every q-series in this crate.
pub(crate) fn sum_ratio_series(
    t0: &Real,
    ratio: impl Fn(usize, u32) -> Real,
    out_prec: u32,
    tol_bits: u32,
    max_terms: usize,
) -> Result<Truncated> {
    sum_ratio_series_ext(t0, ratio, out_prec, tol_bits, max_terms).map(|s| s.0)
}

/// As [`sum_ratio_series`], also returning `log2` of the largest term.
pub(crate) fn sum_ratio_series_ext(
    t0: &Real,
    ratio: impl Fn(usize, u32) -> Real,
    out_prec: u32,
    tol_bits: u32,
    max_terms: usize,
) -> Result<(Truncated, f64)> {
    if t0.is_zero() {
        let t = Truncated { value: Real::zero(out_prec), terms_used: 1, tail_bound: Real::zero(64) };
        return Ok((t, f64::NEG_INFINITY));
    }
    let l0 = t0.log2_abs();
    let mut l = l0;
    let mut max_l = l0;
    let mut stop = None;
    for n in 0..max_terms {
        let r = ratio(n, PROBE_PREC);
        if r.is_zero() {
            stop = Some((n, true));
            break;
        }
        let lr = r.log2_abs();
        l += lr;
        if l > max_l {
            max_l = l;
        }
        // Geometric tail factor 1/(1-|r|), in bits.
        let tail_bits = if lr < 0.0 { -(1.0 - lr.exp2()).log2() } else { f64::INFINITY };
        if l + tail_bits < max_l - tol_bits as f64 - GUARD_BITS as f64 {
            stop = Some((n, false));
            break;
        }
    }
    let (last, terminated) = stop.ok_or_else(|| {
        Error::Convergence(format!("ratio series still growing after {max_terms} terms"))
    })?;
    let boost = max_l.max(0.0).ceil() as u32;
    let work = out_prec.max(tol_bits) + boost + GUARD_BITS;
    let mut t = t0.with_prec(work);
    let mut s = t.clone();
    for n in 0..last {
        t *= ratio(n, work);
        s += &t;
    }
    let tail_bound = if terminated {
        Real::zero(64)
    } else {
        let next = (&t * ratio(last, work)).abs().with_prec(64);
        let r = ratio(last + 1, 64).abs();
        if r < 1 { next / (1 - r) } else { next * 2 }
    };
    Ok((Truncated { value: s.with_prec(out_prec), terms_used: last + 1, tail_bound }, max_l))
}

/// Coefficients of `a * b` up to degree `n`.
pub fn series_mul(a: &[Real], b: &[Real], n: usize, prec: u32) -> Vec<Real> {
    (0..=n)
        .map(|k| {
            let mut s = Real::zero(prec);
            for i in 0..=k {
                if let (Some(x), Some(y)) = (a.get(i), b.get(k - i)) {
                    s += x * y;
                }
            }
            s
        })
        .collect()
}

/// Coefficients of `1 / a` up to degree `n`; needs `a[0] != 0`.
pub fn series_inv(a: &[Real], n: usize, prec: u32) -> Result<Vec<Real>> {
    let a0 = a.first().filter(|v| !v.is_zero()).ok_or_else(|| {
        Error::Domain("power series with zero constant term has no inverse".into())
    })?;
    let inv0 = Real::one(prec) / a0;
    let mut b = vec![inv0.clone()];
    for k in 1..=n {
        let mut s = Real::zero(prec);
        for i in 1..=k {
            if let Some(ai) = a.get(i) {
                s += ai * &b[k - i];
            }
        }
        b.push(-(s * &inv0));
    }
    Ok(b)
}

/// Coefficients of `a / b` up to degree `n`.
pub fn series_div(a: &[Real], b: &[Real], n: usize, prec: u32) -> Result<Vec<Real>> {
    Ok(series_mul(a, &series_inv(b, n, prec)?, n, prec))
}
