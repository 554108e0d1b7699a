use crate::error::{domain, Error, Result};
use crate::params::{QParams, Truncated};
use crate::qcore::series::sum_ratio_series;
use crate::real::Real;

/// `2phi1(a, b; c; q, z) = sum (a;q)_n (b;q)_n z^n / ((q;q)_n (c;q)_n)` for `|z| < 1`.
pub fn phi21(a: &Real, b: &Real, c: &Real, z: &Real, p: &QParams) -> Result<Truncated> {
    if z.abs() >= 1 {
        return domain(format!("2phi1 needs |z| < 1, got {}", z.to_sci(12)));
    }
    let q = p.q();
    // c = q^{-m} makes (c;q)_{m+1} vanish.
    let lc = c.abs().ln() / q.ln();
    if c.sign() > 0 && *c >= 1 {
        let m = lc.with_prec(64).to_f64().round();
        if m <= 0.0 && (c * q.powi(-m as i64) - 1).abs() < Real::two_pow(-(p.prec() as i32) + 8, 64) {
            return Err(Error::Pole { func: "2phi1", arg: c.to_decimal() });
        }
    }
    sum_ratio_series(
        &p.one(),
        |n, prec| {
            let qn = q.with_prec(prec).powi(n as i64);
            let num = (1 - a.with_prec(prec) * &qn) * (1 - b.with_prec(prec) * &qn);
            let den = (1 - q.with_prec(prec) * &qn) * (1 - c.with_prec(prec) * &qn);
            num * z.with_prec(prec) / den
        },
        p.prec(),
        p.tol_bits(),
        10_000_000,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        let p = QParams::new(0.5, 128).unwrap();
        let (b, c) = (p.real(0.3), p.real(0.7));
        assert_eq!(phi21(&p.real(0.2), &b, &c, &p.zero(), &p).unwrap().value, 1);
        let a = p.q().recip();
        let z = p.real(0.2);
        let v = phi21(&a, &b, &c, &z, &p).unwrap().value;
        let two_term = 1 + (1 - &a) * (1 - &b) * &z / ((1 - p.q()) * (1 - &c));
        assert!((v - two_term).abs() < Real::two_pow(-120, 64));
    }

    #[test]
    fn q_binomial_theorem() {
        // 2phi1(a, 0; 0; q, z) = (az;q)_inf / (z;q)_inf
        use crate::qcore::pochhammer::qpoch_inf;
        let p = QParams::new(0.4, 160).unwrap();
        let (a, z) = (p.real(0.3), p.real(0.6));
        let lhs = phi21(&a, &p.zero(), &p.zero(), &z, &p).unwrap().value;
        let rhs = qpoch_inf(&(&a * &z), &p).value / qpoch_inf(&z, &p).value;
        assert!((lhs - rhs).abs() < Real::two_pow(-150, 64));
    }

    #[test]
    fn rejects_poles_and_radius() {
        let p = QParams::new(0.5, 128).unwrap();
        let one = p.one();
        assert!(phi21(&one, &one, &p.real(4.0), &p.real(0.5), &p).is_err());
        assert!(phi21(&one, &one, &p.real(0.5), &p.real(1.0), &p).is_err());
    }
}
