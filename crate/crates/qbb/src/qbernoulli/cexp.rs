//! Coefficients of `1/exp_q` and of `1/g^(3)`.

use crate::error::{domain, Result};
use crate::params::QParams;
use crate::qbernoulli::beta::{beta3_numbers, BetaMethod};
use crate::qcore::combinatorics::QTables;
use crate::qcore::exp::{qexp_coeffs, QExpKind};
use crate::qcore::series::series_inv;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CexpMethod {
    SeriesInversion,
    /// Signed sum over compositions of `n`; exponential cost, `N <= 20`.
    PartitionSum,
}

pub const PARTITION_SUM_MAX: usize = 20;

/// `c_0..c_N` with `1/exp_q(z) = sum c_n z^n`.
pub fn cexp_coeffs(p: &QParams, n: usize, method: CexpMethod) -> Result<Vec<Real>> {
    let prec = p.prec() + 32;
    let q = p.q().with_prec(prec);
    let a = qexp_coeffs(QExpKind::SymExp, &q, n);
    let c = match method {
        CexpMethod::SeriesInversion => series_inv(&a, n, prec)?,
        CexpMethod::PartitionSum => {
            if n > PARTITION_SUM_MAX {
                return domain(format!("composition sum is limited to N <= {PARTITION_SUM_MAX}"));
            }
            (0..=n).map(|m| composition_sum(&a, m, prec)).collect()
        }
    };
    Ok(c.into_iter().map(|v| v.with_prec(p.prec())).collect())
}

/// `sum over s_1+...+s_k = m, s_i > 0` of `(-1)^k a_{s_1}...a_{s_k}`.
fn composition_sum(a: &[Real], m: usize, prec: u32) -> Real {
    if m == 0 {
        return Real::one(prec);
    }
    let mut total = Real::zero(prec);
    // Bit i of `mask` set means a cut after position i+1.
    for mask in 0u32..(1u32 << (m - 1)) {
        let mut prod = Real::one(prec);
        let mut start = 0;
        let mut parts = 0;
        for i in 0..m {
            let cut = i == m - 1 || mask & (1 << i) != 0;
            if cut {
                prod *= &a[i + 1 - start];
                start = i + 1;
                parts += 1;
            }
        }
        if parts % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    total
}

/// Coefficients of `1/g^(3)_alpha(it;q)`:
/// `sum_k (-1)^k c_k beta^(3)_{n-k} / (2^k [n-k]_q!)`.
pub fn g3_reciprocal_coeffs(alpha: &Real, p: &QParams, n: usize) -> Result<Vec<Real>> {
    let c = cexp_coeffs(p, n, CexpMethod::SeriesInversion)?;
    let b = beta3_numbers(alpha, p, n, BetaMethod::RecQ1902)?.values;
    let t = QTables::new(p.q(), n);
    Ok((0..=n)
        .map(|m| {
            let mut s = p.zero();
            for k in 0..=m {
                let term = &c[k] * &b[m - k] / (t.fact(m - k) * Real::two_pow(k as i32, p.prec()));
                if k % 2 == 1 { s -= term } else { s += term }
            }
            s
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbessel::{g_coeffs, BesselKind};
    use crate::qcore::series::series_mul;

    #[test]
    fn first_coefficients() {
        let p = QParams::new(0.6, 128).unwrap();
        let c = cexp_coeffs(&p, 4, CexpMethod::SeriesInversion).unwrap();
        assert_eq!(c[0], 1);
        assert!((&c[1] + 1).abs() < Real::two_pow(-120, 64));
    }

    #[test]
    fn inversion_matches_compositions() {
        for q in [0.3, 0.5, 0.8] {
            let p = QParams::new(q, 192).unwrap();
            let a = cexp_coeffs(&p, 10, CexpMethod::SeriesInversion).unwrap();
            let b = cexp_coeffs(&p, 10, CexpMethod::PartitionSum).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < Real::two_pow(-170, 64));
            }
        }
    }

    #[test]
    fn g3_reciprocal_times_g3_is_one() {
        let p = QParams::new(0.5, 192).unwrap();
        let a = p.real(0.4);
        let r = g3_reciprocal_coeffs(&a, &p, 12).unwrap();
        assert_eq!(r[0], 1);
        assert!(r[1].abs() < Real::two_pow(-180, 64));
        let g = g_coeffs(BesselKind::J3, &a, &p, 12);
        let prod = series_mul(&r, &g, 12, p.prec());
        assert!((&prod[0] - 1).abs() < Real::two_pow(-180, 64));
        for v in &prod[1..] {
            assert!(v.abs() < Real::two_pow(-170, 64));
        }
    }
}
