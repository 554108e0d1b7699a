//! `beta_{n,alpha}` as a sum over the zeros `j_k` of `calJ^(2)_alpha(.; q^2)`:
//!
//! ```text
//! beta_{2m}   = 2 (-1)^{m+1} (q;q)_{2m}   sum_k Cos_q(j_k/(2(1-q))) / (j_k^{2m+1} calJ'(j_k))
//! beta_{2m+1} = 2 (-1)^m     (q;q)_{2m+1} sum_k Sin_q(j_k/(2(1-q))) / (j_k^{2m+2} calJ'(j_k))
//! ```
//!
//! The formula holds for `n > alpha + 1/2`; below that the contour integral
//! behind it does not vanish and the sum is either divergent or wrong.

use crate::error::{domain, Result};
use crate::params::QParams;
use crate::qbessel::functions::{check_alpha, BesselKind};
use crate::qbessel::zeros::{bessel_zeros, ZeroTable};
use crate::qcore::pochhammer::qpoch;
use crate::qcore::trig::{qtrig, TrigKind};
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueSeriesResult {
    /// Index of the Bernoulli number, not of the display.
    pub n: usize,
    pub parity: Parity,
    pub value: Real,
    pub zeros_used: usize,
    pub last_term_magnitude: Real,
    /// `last_term_magnitude < tol * |value|`, with `tol` from the params, or
    /// every term annihilated by its trig factor (the sum is zero).
    pub converged: bool,
}

/// The signed summands, already multiplied by the prefactor.
pub fn residue_terms(table: &ZeroTable, n: usize, p: &QParams) -> Result<Vec<Real>> {
    Ok(terms_and_envelope(table, n, p)?.0)
}

/// Summands, and the largest summand with the trig factor replaced by 1.
fn terms_and_envelope(table: &ZeroTable, n: usize, p: &QParams) -> Result<(Vec<Real>, Real)> {
    if table.kind != BesselKind::J2 {
        return domain("the residue series runs over zeros of J2");
    }
    if n == 0 {
        return domain("beta_0 has no residue representation");
    }
    let prec = p.prec();
    let q = p.q();
    let m = (n / 2) as i64;
    let odd = n % 2 == 1;
    let sign = if (m % 2 == 0) == odd { 2 } else { -2 };
    let pre = qpoch(q, q, n) * sign;
    let kind = if odd { TrigKind::SinBig } else { TrigKind::CosBig };
    let scale = (1 - q).mul_2exp(1).recip();
    let mut out = Vec::with_capacity(table.zeros.len());
    let mut envelope = Real::zero(64);
    for (j, d) in table.zeros.iter().zip(&table.dmod) {
        let j = j.with_prec(prec);
        let trig = qtrig(kind, &(&j * &scale), p)?.value;
        let bare = &pre / (j.powi(n as i64 + 1) * d);
        if bare.abs() > envelope {
            envelope = bare.abs().with_prec(64);
        }
        out.push(bare * trig);
    }
    Ok((out, envelope))
}

/// Sums the residue series over a precomputed table of zeros.
pub fn beta_residue_with_table(table: &ZeroTable, n: usize, p: &QParams) -> Result<ResidueSeriesResult> {
    beta_residue_tol(table, n, p, p.tol())
}

/// As [`beta_residue_with_table`], judging convergence against `tol`
/// instead of the truncation tolerance of `p`, which still governs the
/// evaluation of every term.
pub fn beta_residue_tol(table: &ZeroTable, n: usize, p: &QParams, tol: &Real) -> Result<ResidueSeriesResult> {
    let (terms, envelope) = terms_and_envelope(table, n, p)?;
    let mut value = p.zero();
    for t in &terms {
        value += t;
    }
    let last = terms.last().map(|t| t.abs()).unwrap_or_else(|| p.zero());
    // at alpha = +-1/2 the trig factor vanishes at every zero; what is left
    // is rounding noise, and the sum has converged to 0
    let noise = envelope * Real::two_pow(-(p.prec() as i32) / 2, 64);
    let annihilated = terms.iter().all(|t| t.abs() < noise);
    let converged = !terms.is_empty() && (last < tol * value.abs() || annihilated);
    Ok(ResidueSeriesResult {
        n,
        parity: if n % 2 == 0 { Parity::Even } else { Parity::Odd },
        value,
        zeros_used: terms.len(),
        last_term_magnitude: last,
        converged,
    })
}

/// `beta_{n,alpha}(q)` from the first `zeros_used` zeros.
pub fn beta_residue(n: usize, alpha: &Real, p: &QParams, zeros_used: usize) -> Result<ResidueSeriesResult> {
    check_alpha(alpha)?;
    if n == 0 {
        return domain("beta_0 has no residue representation; n must be >= 1");
    }
    let table = bessel_zeros(BesselKind::J2, alpha, p, zeros_used)?;
    beta_residue_with_table(&table, n, p)
}

/// The first residue term alone. Its relative deviation from the full sum
/// shrinks like `(j_1/j_2)^{n - alpha - 1/2}`.
pub fn beta_asymptotic_leading(n: usize, alpha: &Real, p: &QParams) -> Result<Real> {
    Ok(beta_residue(n, alpha, p, 1)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbernoulli::beta::{beta_numbers, BetaMethod};

    fn rel(a: &Real, b: &Real) -> f64 {
        ((a - b) / b).abs().to_f64()
    }

    /// `(j_k/j_{k+1})^{n - alpha - 1/2}`, the observed term ratio.
    fn rate(t: &ZeroTable, k: usize, n: usize) -> f64 {
        let r = (&t.zeros[k] / &t.zeros[k + 1]).to_f64();
        r.powf(n as f64 - t.alpha.to_f64() - 0.5)
    }

    #[test]
    fn matches_recurrence_within_tail() {
        let p = QParams::new(0.5, 256).unwrap();
        let a = p.real(0.7);
        let table = bessel_zeros(BesselKind::J2, &a, &p, 6).unwrap();
        let b = beta_numbers(&a, &p, 6, BetaMethod::RecQ1902).unwrap().values;
        let r6 = beta_residue_with_table(&table, 6, &p).unwrap();
        assert!(rel(&r6.value, &b[6]) < 1e-15);
        // beta_2 converges slowly: the error is the geometric tail of the last term.
        let r2 = beta_residue_with_table(&table, 2, &p).unwrap();
        let rho = rate(&table, 4, 2);
        let tail = r2.last_term_magnitude.to_f64() * rho / (1.0 - rho);
        let err = (&r2.value - &b[2]).abs().to_f64();
        assert!(err < 1.1 * tail && err > 0.9 * tail, "{err} vs {tail}");
        assert_eq!(r2.parity, Parity::Even);
    }

    #[test]
    fn parity_annihilation() {
        let p = QParams::new(0.5, 256).unwrap();
        let half = p.ratio(1, 2);
        for n in [3, 5] {
            let r = beta_residue(n, &half, &p, 6).unwrap();
            assert!(r.value.abs() < 1e-40, "odd n={n}: {:?}", r.value);
            assert!(r.converged);
        }
        for n in [2, 4] {
            let r = beta_residue(n, &-&half, &p, 6).unwrap();
            assert!(r.value.abs() < 1e-40, "even n={n}: {:?}", r.value);
            assert!(r.converged);
        }
        // a surviving parity does not count as annihilated
        assert!(!beta_residue(4, &half, &p, 6).unwrap().converged);
    }

    #[test]
    fn leading_term_dominates_more_with_n() {
        let p = QParams::new(0.5, 256).unwrap();
        let a = p.real(0.7);
        let table = bessel_zeros(BesselKind::J2, &a, &p, 8).unwrap();
        let dev = |n: usize| {
            let full = beta_residue_with_table(&table, n, &p).unwrap().value;
            let lead = beta_asymptotic_leading(n, &a, &p).unwrap();
            assert_eq!(full.sign(), lead.sign(), "n={n}");
            ((lead / full) - 1).abs().to_f64()
        };
        assert!(dev(3) < dev(1));
        for n in 2..=16 {
            assert!(dev(n) < rate(&table, 0, n), "n={n}");
        }
    }

    #[test]
    fn rejects_n_zero() {
        let p = QParams::new(0.5, 128).unwrap();
        assert!(beta_residue(0, &p.real(0.7), &p, 3).is_err());
    }
}
