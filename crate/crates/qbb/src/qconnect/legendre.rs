use crate::params::QParams;
use crate::qcore::diff::{qdiff_poly, QDiffKind};
use crate::qcore::pochhammer::qpoch;
use crate::qcore::poly::Poly;
use crate::real::Real;

/// Monomial coefficients of `P_n(x|q) = sum_k (q^-n;q)_k (q^{n+1};q)_k q^k x^k / (q;q)_k^2`.
pub fn qlegendre_poly(n: usize, p: &QParams) -> Poly {
    let q = p.q();
    let ni = n as i64;
    let a = q.powi(-ni);
    let b = q.powi(ni + 1);
    let c = (0..=n)
        .map(|k| qpoch(&a, q, k) * qpoch(&b, q, k) * q.powi(k as i64) / qpoch(q, q, k).square())
        .collect();
    Poly::new(c, p.prec())
}

pub fn qlegendre(n: usize, x: &Real, p: &QParams) -> Real {
    qlegendre_poly(n, p).eval(x)
}

/// `q^{n(n-1)/2} (1-q)^n/(q;q)_n D_{1/q}^n (x^n (qx;q)_n)`, exact in coefficients.
pub fn legendre_rodrigues(n: usize, p: &QParams) -> Poly {
    let q = p.q();
    // x^n (qx;q)_n = x^n prod_{j=1}^{n} (1 - q^j x)
    let mut f = Poly::monomial(p.one(), n);
    for j in 1..=n as i64 {
        f = f.mul(&Poly::new(vec![p.one(), -q.powi(j)], p.prec()));
    }
    for _ in 0..n {
        f = qdiff_poly(QDiffKind::DqInv, &f, p);
    }
    let ni = n as i64;
    f.scale(&(q.powi(ni * (ni - 1) / 2) * (1 - q).powi(ni) / qpoch(q, q, n)))
}

/// `int_0^1 P_n^2 d_q x = q^n (1-q)/(1-q^{2n+1})`.
pub fn legendre_norm(n: usize, p: &QParams) -> Real {
    let q = p.q();
    q.powi(n as i64) * (1 - q) / (1 - q.powi(2 * n as i64 + 1))
}

/// The constant `(1-q)/(1-q^{2n+1})` without the `q^n`.
pub fn legendre_norm_printed(n: usize, p: &QParams) -> Real {
    let q = p.q();
    (1 - q) / (1 - q.powi(2 * n as i64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::integral::qintegral01;

    #[test]
    fn examples() {
        let p = QParams::new(0.5, 256).unwrap();
        let x = p.real(0.3);
        assert_eq!(qlegendre(0, &x, &p), 1);
        for n in 0..6 {
            assert_eq!(qlegendre(n, &p.zero(), &p), 1);
        }
        let p1 = 1 - (1 + p.q()) * &x;
        assert!((qlegendre(1, &x, &p) - p1).abs() < Real::two_pow(-250, 64));
    }

    #[test]
    fn orthogonality_and_rodrigues() {
        let p = QParams::new(0.5, 256).unwrap();
        for m in 0..=4 {
            for n in 0..=4 {
                let (a, b) = (qlegendre_poly(m, &p), qlegendre_poly(n, &p));
                let v = qintegral01(|x| a.eval(x) * b.eval(x), &p).unwrap().value;
                let want = if m == n { legendre_norm(n, &p) } else { p.zero() };
                assert!((v - want).abs() < Real::two_pow(-240, 64), "({m},{n})");
            }
        }
        for n in 0..=5 {
            let d = legendre_rodrigues(n, &p).rel_distance(&qlegendre_poly(n, &p));
            assert!(d < Real::two_pow(-240, 64), "n={n}");
        }
    }
}
