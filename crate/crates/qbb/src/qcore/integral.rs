use crate::error::{Error, Result};
use crate::params::{QParams, Truncated};
use crate::real::Real;

/// Consecutive terms that must stay below tolerance before stopping.
const QUIET_RUN: usize = 4;

/// Jackson integral `int_0^1 f d_q x = (1-q) sum_k q^k f(q^k)`.
///
/// Summation stops after a run of terms below `trunc_rel_tol` times the
/// largest partial sum seen so far. The reported tail bound extrapolates the last term
/// geometrically with ratio `q`, which is exact for bounded `f` that is
/// eventually monotone near 0. If no such run appears within a window of
/// several times the expected length the integral is reported as divergent.
pub fn qintegral01(f: impl Fn(&Real) -> Real, p: &QParams) -> Result<Truncated> {
    let q = p.q();
    let work = p.prec() + 16;
    let q = q.with_prec(work);
    let expected = (p.tol_bits() as f64 / -q.log2_abs()).ceil() as usize;
    let window = 8 * expected + 256;
    let tol = p.tol();
    let mut x = Real::one(work);
    let mut sum = Real::zero(work);
    let mut peak = Real::zero(64);
    let mut quiet = 0;
    for k in 0..window {
        let term = &x * f(&x);
        sum += &term;
        let mag = sum.abs().with_prec(64);
        if mag > peak {
            peak = mag;
        }
        let small = term.abs() <= &peak * tol;
        quiet = if small { quiet + 1 } else { 0 };
        if quiet >= QUIET_RUN {
            let one_minus = 1 - &q;
            let tail = term.abs().with_prec(64) * q.with_prec(64) / one_minus.with_prec(64);
            return Ok(Truncated {
                value: (sum * &one_minus).with_prec(p.prec()),
                terms_used: k + 1,
                tail_bound: tail * one_minus.with_prec(64),
            });
        }
        x *= &q;
    }
    Err(Error::Convergence(format!("Jackson integral terms did not decay within {window} terms")))
}
