use crate::error::{Error, Result};
use crate::params::QParams;
use crate::qcore::combinatorics::qfact;
use crate::qcore::pochhammer::qpoch_inf;
use crate::real::Real;

#[derive(Clone, Debug)]
pub struct QGammaBeta {
    pub gamma_x: Real,
    pub beta_xy: Real,
}

/// Positive integers at or below this take the `[n-1]_q!` path.
const FACTORIAL_PATH_MAX: i64 = 10_000;

/// `Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^(1-x)`.
pub fn qgamma(x: &Real, p: &QParams) -> Result<Real> {
    if let Some(n) = x.to_i64_exact() {
        if n <= 0 {
            return Err(Error::Pole { func: "Gamma_q", arg: x.to_decimal() });
        }
        if n <= FACTORIAL_PATH_MAX {
            return Ok(qfact((n - 1) as usize, p.q()).with_prec(p.prec()));
        }
    }
    let q = p.q();
    let num = qpoch_inf(q, p).value;
    let den = qpoch_inf(&p.q_pow(x), p).value;
    let scale = (1 - q).powr(&(1 - x));
    Ok(num / den * scale)
}

/// `B_q(x, y) = Gamma_q(x) Gamma_q(y) / Gamma_q(x+y)`.
pub fn qbeta(x: &Real, y: &Real, p: &QParams) -> Result<Real> {
    if !(*x > 0 && *y > 0) {
        return Err(Error::Domain("q-beta needs x > 0 and y > 0".into()));
    }
    Ok(qgamma(x, p)? * qgamma(y, p)? / qgamma(&(x + y), p)?)
}

pub fn qgamma_beta(x: &Real, y: &Real, p: &QParams) -> Result<QGammaBeta> {
    Ok(QGammaBeta { gamma_x: qgamma(x, p)?, beta_xy: qbeta(x, y, p)? })
}
