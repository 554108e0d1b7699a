use crate::error::{domain, Result};
use crate::params::{QParams, Truncated};
use crate::real::Real;

/// Length argument of [`qpochhammer`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(i64),
    Infinite,
}

/// `(a;q)_n = prod_{k<n} (1 - a q^k)` for any base, including `q > 1`.
pub fn qpoch(a: &Real, q: &Real, n: usize) -> Real {
    let prec = a.prec().max(q.prec());
    let mut prod = Real::one(prec);
    let mut f = a.with_prec(prec);
    for _ in 0..n {
        prod *= 1 - &f;
        f *= q;
    }
    prod
}

/// `(a, b; q)_n`.
pub fn qpoch2(a: &Real, b: &Real, q: &Real, n: usize) -> Real {
    qpoch(a, q, n) * qpoch(b, q, n)
}

/// `(a;q)_inf` with the base taken from `p`.
///
/// Stops once `|a q^k|` drops below the truncation tolerance. The omitted
/// factors satisfy `|log prod| <= S/(1-|a q^K|)` with `S = |a| q^K/(1-q)`,
/// which gives the reported tail bound.
pub fn qpoch_inf(a: &Real, p: &QParams) -> Truncated {
    let q = p.q();
    let extra = 16 + (p.tol_bits() as f64 / (-q.log2_abs()).max(1e-6)).log2().max(0.0).ceil() as u32;
    let work = p.prec() + extra;
    let mut prod = Real::one(work);
    let mut f = a.with_prec(work);
    let tol = p.tol();
    let mut k = 0usize;
    while f.abs() >= *tol {
        prod *= 1 - &f;
        f *= q;
        k += 1;
    }
    let s = f.abs().with_prec(64) / (1 - q.with_prec(64));
    let tail_bound = prod.abs().with_prec(64) * s * 4;
    Truncated { value: prod.with_prec(p.prec()), terms_used: k, tail_bound }
}

/// Finite or infinite q-shifted factorial behind one entry point.
pub fn qpochhammer(a: &Real, p: &QParams, n: PochLength) -> Result<Truncated> {
    match n {
        PochLength::Finite(m) if m < 0 => domain(format!("negative length {m} in q-Pochhammer")),
        PochLength::Finite(m) => Ok(Truncated {
            value: qpoch(a, p.q(), m as usize).with_prec(p.prec()),
            terms_used: m as usize,
            tail_bound: Real::zero(64),
        }),
        PochLength::Infinite => Ok(qpoch_inf(a, p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let p = QParams::new(0.5, 128).unwrap();
        assert_eq!(qpochhammer(&p.real(0.7), &p, PochLength::Finite(0)).unwrap().value, 1);
        assert!(qpochhammer(&p.one(), &p, PochLength::Infinite).unwrap().value.is_zero());
        assert_eq!(qpoch(&p.real(0.5), p.q(), 2), 0.375);
        assert!(qpochhammer(&p.one(), &p, PochLength::Finite(-1)).is_err());
    }

    #[test]
    fn euler_pentagonal_check() {
        // (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
        let p = QParams::new(0.3, 192).unwrap();
        let lhs = qpoch_inf(p.q(), &p).value;
        let mut rhs = p.zero();
        for k in -40i64..=40 {
            let t = p.q_powi(k * (3 * k - 1) / 2);
            if k % 2 == 0 { rhs += t } else { rhs -= t }
        }
        assert!((lhs - rhs).abs() < Real::two_pow(-180, 64));
    }
}
