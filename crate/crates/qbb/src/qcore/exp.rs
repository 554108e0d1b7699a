//! The three q-exponentials.
//!
//! `e_q` and `E_q` are evaluated from their product forms, which involve no
//! cancellation. The series forms live in [`oracle`] for testing.

use crate::error::{domain, Result};
use crate::params::{QParams, Truncated};
use crate::qcore::pochhammer::qpoch_inf;
use crate::qcore::series::sum_ratio_series;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QExpKind {
    /// `e_q(x) = sum x^n/[n]_q!`, radius `1/(1-q)`.
    SmallE,
    /// `E_q(x) = sum q^{n(n-1)/2} x^n/[n]_q!`, entire.
    BigE,
    /// `exp_q(x) = sum q^{n(n-1)/4} x^n/[n]_q!`, entire.
    SymExp,
}

impl QExpKind {
    /// `c` in the coefficient weight `q^{c n(n-1)}`.
    pub(crate) fn quadratic_weight(self) -> (i64, i64) {
        match self {
            QExpKind::SmallE => (0, 1),
            QExpKind::BigE => (1, 2),
            QExpKind::SymExp => (1, 4),
        }
    }
}

pub fn qexp(kind: QExpKind, x: &Real, p: &QParams) -> Result<Truncated> {
    let q = p.q();
    match kind {
        QExpKind::SmallE => {
            let a = x * (1 - q);
            if a.abs() >= 1 {
                return domain(format!("e_q needs |x| < 1/(1-q), got x = {}", x.to_sci(12)));
            }
            let t = qpoch_inf(&a, p);
            let value = t.value.recip();
            let tail_bound = t.tail_bound * value.square().with_prec(64);
            Ok(Truncated { value, tail_bound, terms_used: t.terms_used })
        }
        QExpKind::BigE => Ok(qpoch_inf(&-(x * (1 - q)), p)),
        QExpKind::SymExp => sym_exp_series(x, p),
    }
}

pub fn e_q(x: &Real, p: &QParams) -> Result<Real> {
    Ok(qexp(QExpKind::SmallE, x, p)?.value)
}

pub fn big_e_q(x: &Real, p: &QParams) -> Real {
    qpoch_inf(&-(x * (1 - p.q())), p).value
}

pub fn exp_q(x: &Real, p: &QParams) -> Real {
    sym_exp_series(x, p).expect("exp_q series converges everywhere").value
}

fn sym_exp_series(x: &Real, p: &QParams) -> Result<Truncated> {
    let q = p.q();
    let sq = q.sqrt();
    sum_ratio_series(
        &p.one(),
        |n, prec| {
            let q = q.with_prec(prec);
            let x = x.with_prec(prec);
            // t_{n+1}/t_n = x q^{n/2} (1-q)/(1-q^{n+1})
            x * sq.with_prec(prec).powi(n as i64) * (1 - &q) / (1 - q.powi(n as i64 + 1))
        },
        p.prec(),
        p.tol_bits(),
        1_000_000,
    )
}

/// Power-series coefficients of the chosen exponential up to degree `n`.
pub fn qexp_coeffs(kind: QExpKind, q: &Real, n: usize) -> Vec<Real> {
    let (num, den) = kind.quadratic_weight();
    let root = match den {
        1 => q.clone(),
        2 => q.sqrt(),
        _ => q.sqrt().sqrt(),
    };
    let mut out = Vec::with_capacity(n + 1);
    let mut c = Real::one(q.prec());
    out.push(c.clone());
    for k in 1..=n {
        // a_k/a_{k-1} = q^{c (2k-2)} / [k]_q
        let w = if num == 0 { Real::one(q.prec()) } else { root.powi(2 * (k as i64 - 1)) };
        c = c * w * (1 - q) / (1 - q.powi(k as i64));
        out.push(c.clone());
    }
    out
}

/// Plain series evaluations used as independent checks of the product forms.
pub mod oracle {
    use super::*;

    pub fn series(kind: QExpKind, x: &Real, q: &Real, terms: usize) -> Real {
        let c = qexp_coeffs(kind, q, terms);
        let mut s = Real::zero(q.prec());
        for a in c.iter().rev() {
            s = s * x + a;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocity_at_spec_point() {
        let p = QParams::new(0.5, 256).unwrap();
        let x = p.real(0.3);
        let prod = e_q(&x, &p).unwrap() * big_e_q(&-&x, &p);
        assert!((prod - 1).abs() < Real::two_pow(-250, 64));
    }

    #[test]
    fn zero_argument() {
        let p = QParams::new(0.7, 128).unwrap();
        for k in [QExpKind::SmallE, QExpKind::BigE, QExpKind::SymExp] {
            assert_eq!(qexp(k, &p.zero(), &p).unwrap().value, 1);
        }
    }

    #[test]
    fn sym_exp_matches_partial_sum() {
        let p = QParams::new(0.5, 256).unwrap();
        let v = qexp(QExpKind::SymExp, &p.one(), &p).unwrap();
        let brute = oracle::series(QExpKind::SymExp, &p.one(), p.q(), 60);
        assert!((&v.value - brute).abs() <= &v.tail_bound + Real::two_pow(-240, 64));
    }

    #[test]
    fn products_match_series() {
        let p = QParams::new(0.4, 192).unwrap();
        let x = p.real(0.9);
        let e = e_q(&x, &p).unwrap();
        let big = big_e_q(&x, &p);
        assert!((e - oracle::series(QExpKind::SmallE, &x, p.q(), 400)).abs() < Real::two_pow(-170, 64));
        assert!((big - oracle::series(QExpKind::BigE, &x, p.q(), 60)).abs() < Real::two_pow(-170, 64));
    }

    #[test]
    fn small_e_radius() {
        let p = QParams::new(0.5, 64).unwrap();
        assert!(e_q(&p.real(2.0), &p).is_err());
        assert!(e_q(&p.real(-2.5), &p).is_err());
    }
}
