use crate::error::{domain, Result};
use crate::params::QParams;
use crate::qbessel::functions::check_alpha;
use crate::qcore::pochhammer::{qpoch, qpoch_inf};
use crate::real::Real;

/// `L^alpha_n(x;q) = (q^{a+1};q)_n/(q;q)_n sum_k (q^-n;q)_k q^{k(k-1)/2} (q^{n+a+1} x)^k / ((q^{a+1};q)_k (q;q)_k)`,
/// the terminating `2phi1(q^-n, -x; 0; q, q^{n+a+1}) / (q;q)_n`.
pub fn qlaguerre(n: usize, alpha: &Real, x: &Real, p: &QParams) -> Result<Real> {
    check_alpha(alpha)?;
    let q = p.q();
    let qa1 = p.q_pow(&(alpha + 1));
    let z = p.q_pow(&(alpha + 1 + n as i32)) * x;
    let qn = q.powi(-(n as i64));
    let mut term = p.one();
    let mut sum = p.one();
    for k in 0..n as i64 {
        // term_{k+1}/term_k
        term *= (1 - &qn * q.powi(k)) * q.powi(k) * &z;
        term /= (1 - &qa1 * q.powi(k)) * (1 - q.powi(k + 1));
        sum += &term;
    }
    Ok(qpoch(&qa1, q, n) / qpoch(q, q, n) * sum)
}

/// Residual of `-x a_n L_n = L_{n+1} - b_n L_n + d_n L_{n-1}`, relative to
/// the largest of the three polynomial values (at least 1).
pub fn laguerre_recurrence_residual(n: usize, alpha: &Real, x: &Real, p: &QParams) -> Result<Real> {
    if n == 0 {
        return domain("the three-term recurrence needs n >= 1");
    }
    let q = p.q();
    let l = |m| qlaguerre(m, alpha, x, p);
    let (lm, l0, lp) = (l(n - 1)?, l(n)?, l(n + 1)?);
    let ni = n as i32;
    let qna = p.q_pow(&(alpha + ni));
    let den = 1 - q.powi(n as i64 + 1);
    let a = p.q_pow(&(alpha + (2 * ni + 1))) / &den;
    let d = q * (1 - &qna) / &den;
    let b = 1 + &d;
    let res = (x * a * &l0 + &lp - b * &l0 + d * &lm).abs();
    let scale = [&lm, &l0, &lp].into_iter().fold(p.one(), |s, v| if v.abs() > s { v.abs() } else { s });
    Ok(res / scale)
}

/// Rodrigues form `(1-q)^n/(q;q)_n (-x;q)_inf x^{-a} D_q^n (x^{a+n}/(-x;q)_inf)` for
/// `n <= 2` and `x > 0`, by nested difference quotients.
pub fn laguerre_rodrigues(n: usize, alpha: &Real, x: &Real, p: &QParams) -> Result<Real> {
    check_alpha(alpha)?;
    if n > 2 {
        return domain("the Rodrigues check is limited to n <= 2");
    }
    if *x <= 0 {
        return domain("the Rodrigues form needs x > 0");
    }
    let wp = p.with_precision(p.prec() + 64);
    let q = wp.q().clone();
    let e = alpha + n as i32;
    let f = |t: &Real| t.powr(&e) / qpoch_inf(&-t, &wp).value;
    fn dq(f: &dyn Fn(&Real) -> Real, k: usize, t: &Real, q: &Real) -> Real {
        if k == 0 {
            return f(t);
        }
        (dq(f, k - 1, t, q) - dq(f, k - 1, &(q * t), q)) / ((1 - q) * t)
    }
    let x = x.with_prec(wp.prec());
    let v = dq(&f, n, &x, &q) * qpoch_inf(&-&x, &wp).value / x.powr(alpha);
    let v = v * (1 - &q).powi(n as i64) / qpoch(&q, &q, n);
    Ok(v.with_prec(p.prec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree() {
        let p = QParams::new(0.5, 256).unwrap();
        let a = p.real(0.5);
        let x = p.real(0.7);
        assert_eq!(qlaguerre(0, &a, &x, &p).unwrap(), 1);
        for n in 1..=10 {
            let r = laguerre_recurrence_residual(n, &a, &x, &p).unwrap();
            assert!(r < Real::two_pow(-240, 64), "n={n}: {r:?}");
        }
    }

    #[test]
    fn rodrigues_agrees() {
        let p = QParams::new(0.5, 256).unwrap();
        let a = p.real(0.5);
        for n in 0..=2 {
            for x in [p.real(0.2), p.real(0.5)] {
                let s = qlaguerre(n, &a, &x, &p).unwrap();
                let r = laguerre_rodrigues(n, &a, &x, &p).unwrap();
                assert!((&s - &r).abs() < Real::two_pow(-200, 64), "n={n}: {s:?} {r:?}");
            }
        }
    }
}
