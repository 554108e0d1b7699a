//! Positive zeros of `calJ^(k)_alpha(.; q^2)` for k = 2, 3.

use crate::error::{domain, Error, Result};
use crate::params::QParams;
use crate::qbessel::functions::{check_alpha, g_real, modified_deriv, modified_ext, BesselKind};
use crate::real::Real;

/// Hard cap on function evaluations during the bracket scan.
pub const SCAN_BUDGET: usize = 100_000;
/// Largest table the search will build.
pub const MAX_ZEROS: usize = 64;

/// Ordered positive zeros with the derivative of the modified function at
/// each one.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    pub kind: BesselKind,
    pub alpha: Real,
    /// The original `q`; the functions are evaluated at base `q^2`.
    pub q: Real,
    pub precision_bits: u32,
    pub zeros: Vec<Real>,
    pub dmod: Vec<Real>,
}

impl ZeroTable {
    pub fn base(&self) -> Real {
        self.q.square()
    }

    pub fn certified_count(&self) -> usize {
        self.zeros.len()
    }

    pub fn params(&self) -> Result<QParams> {
        QParams::from_real(self.q.clone(), self.precision_bits)
    }

    /// Re-checks every zero: strict ordering, a sign change across
    /// `z(1 -+ 2^{-prec/2})`, a small residual and a nonzero derivative.
    pub fn validate(&self) -> Result<()> {
        check_alpha(&self.alpha)?;
        if !matches!(self.kind, BesselKind::J2 | BesselKind::J3) {
            return domain("zero tables exist only for J2 and J3");
        }
        if self.zeros.len() != self.dmod.len() {
            return domain("zeros and dmod lengths differ");
        }
        let p = self.params()?;
        let bp = p.squared();
        let eps = Real::two_pow(-(self.precision_bits as i32 / 2) - 1, self.precision_bits);
        let mut prev = Real::zero(64);
        for (z, d) in self.zeros.iter().zip(&self.dmod) {
            if !(*z > prev) {
                return domain("zeros must be positive and strictly increasing");
            }
            prev = z.clone();
            let lo = eval_sign(self.kind, &self.alpha, &(z * (1 - &eps)), &bp)?;
            let hi = eval_sign(self.kind, &self.alpha, &(z * (1 + &eps)), &bp)?;
            if lo * hi >= 0 {
                return Err(Error::Decode(format!("no sign change around zero {}", z.to_sci(20))));
            }
            if d.is_zero() || d.sign() != hi {
                return Err(Error::Decode(format!("derivative at {} has the wrong sign", z.to_sci(20))));
            }
            if !residual_ok(self.kind, &self.alpha, z, &bp)? {
                return Err(Error::Decode(format!("residual too large at {}", z.to_sci(20))));
            }
        }
        Ok(())
    }

    /// `z_m / z_{m+1}` for the last pair, to compare with `q^2`.
    pub fn last_ratio(&self) -> Option<Real> {
        let n = self.zeros.len();
        (n >= 2).then(|| &self.zeros[n - 2] / &self.zeros[n - 1])
    }

    /// Relative deviation of the last-pair ratio from `q^2`.
    pub fn ratio_deviation(&self) -> Option<Real> {
        let b = self.base();
        self.last_ratio().map(|r| ((r - &b) / b).abs())
    }
}

fn eval_sign(kind: BesselKind, alpha: &Real, z: &Real, bp: &QParams) -> Result<i32> {
    Ok(modified_ext(kind, alpha, z, false, bp)?.0.value.sign())
}

/// `|calJ(z)| < 2^{-0.2 prec}` times the largest series term.
fn residual_ok(kind: BesselKind, alpha: &Real, z: &Real, bp: &QParams) -> Result<bool> {
    let (t, max_l) = modified_ext(kind, alpha, z, false, bp)?;
    Ok(t.value.is_zero() || t.value.log2_abs() < max_l - 0.2 * bp.prec() as f64)
}

/// Finds the first `count` positive zeros of `calJ^(k)_alpha(.; q^2)`.
///
/// The scan walks geometrically with step factor `1 + (1-q^2)/4`. Once three
/// zeros are known it jumps ahead to `z_m * max(1+step, 1/(2q^2))`, since
/// consecutive zeros separate roughly by `q^-2`. Each sign change is then
/// bisected until the bracket is narrower than `z 2^{-(prec-8)}`.
pub fn bessel_zeros(kind: BesselKind, alpha: &Real, p: &QParams, count: usize) -> Result<ZeroTable> {
    check_alpha(alpha)?;
    if !matches!(kind, BesselKind::J2 | BesselKind::J3) {
        return domain("zeros are computed for J2 and J3 only");
    }
    if count == 0 || count > MAX_ZEROS {
        return domain(format!("count must lie in 1..={MAX_ZEROS}, got {count}"));
    }
    let bp = p.squared();
    let base = bp.q().clone();
    let step = 1 + (1 - &base).mul_2exp(-2);
    let jump = (base.mul_2exp(1)).recip();
    let jump = if jump > step { jump } else { step.clone() };
    let mut x = Real::two_pow(-10, p.prec());
    let mut sx = eval_sign(kind, alpha, &x, &bp)?;
    let mut evals = 1usize;
    let mut zeros: Vec<Real> = Vec::new();
    let mut dmod = Vec::new();
    while zeros.len() < count {
        if evals >= SCAN_BUDGET {
            return Err(Error::SearchFailure {
                found: zeros.len(),
                wanted: count,
                partial: zeros.iter().map(Real::to_decimal).collect(),
            });
        }
        let y = &x * &step;
        let sy = eval_sign(kind, alpha, &y, &bp)?;
        evals += 1;
        if sy == 0 {
            push_zero(kind, alpha, y.clone(), &bp, &mut zeros, &mut dmod)?;
        } else if sx * sy < 0 {
            let z = bisect(kind, alpha, x.clone(), y.clone(), sx, &bp)?;
            push_zero(kind, alpha, z, &bp, &mut zeros, &mut dmod)?;
        }
        x = y;
        sx = sy;
        if zeros.len() >= 3 && sx != 0 {
            let ahead = zeros.last().unwrap() * &jump;
            if ahead > x {
                let s = eval_sign(kind, alpha, &ahead, &bp)?;
                evals += 1;
                // Only skip if the sign has not flipped, i.e. no zero was jumped.
                if s == sx {
                    x = ahead;
                }
            }
        }
    }
    Ok(ZeroTable { kind, alpha: alpha.clone(), q: p.q().clone(), precision_bits: p.prec(), zeros, dmod })
}

fn push_zero(
    kind: BesselKind,
    alpha: &Real,
    z: Real,
    bp: &QParams,
    zeros: &mut Vec<Real>,
    dmod: &mut Vec<Real>,
) -> Result<()> {
    let d = modified_deriv(kind, alpha, &z, bp)?.value;
    if d.is_zero() {
        return Err(Error::Convergence(format!("derivative vanishes at zero {}", z.to_sci(20))));
    }
    zeros.push(z);
    dmod.push(d);
    Ok(())
}

fn bisect(kind: BesselKind, alpha: &Real, mut lo: Real, mut hi: Real, slo: i32, bp: &QParams) -> Result<Real> {
    let prec = bp.prec();
    let rel = Real::two_pow(-(prec as i32 - 8), 64);
    let mut lo_sign = slo;
    for _ in 0..(4 * prec as usize + 64) {
        let mid = (&lo + &hi).mul_2exp(-1);
        if &hi - &lo <= &mid * &rel {
            return Ok(mid);
        }
        let s = eval_sign(kind, alpha, &mid, bp)?;
        if s == 0 {
            return Ok(mid);
        }
        if s == lo_sign {
            lo = mid;
            lo_sign = s;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi).mul_2exp(-1))
}

/// The sufficient condition for `g^(k)_alpha` to have no zeros in `|t| <= 1`.
pub fn zero_free_check(kind: BesselKind, alpha0: &Real, p: &QParams) -> Result<bool> {
    check_alpha(alpha0)?;
    let q = p.q();
    let one_minus = (1 - q).square();
    let rhs = (1 - q.square()) * (1 - p.q_pow(&(alpha0 + 1).mul_2exp(1)));
    let lhs = match kind {
        BesselKind::J2 => p.q_pow(&(alpha0 + 1).mul_2exp(1)) * one_minus,
        BesselKind::J3 => q.powi(3).sqrt() * one_minus,
        BesselKind::J1 => return domain("zero-free criterion is stated for J2 and J3"),
    };
    Ok(lhs < rhs)
}

/// Scans `g^(k)_alpha(t; q)` on `(0, 1]` at `points` equally spaced `t` and
/// returns the first `t` where the sign differs from the value at 0.
pub fn unit_interval_sign_change(kind: BesselKind, alpha: &Real, p: &QParams, points: usize) -> Result<Option<Real>> {
    for i in 1..=points {
        let t = p.ratio(i as i64, points as i64);
        if g_real(kind, alpha, &t, p)?.value.sign() <= 0 {
            return Ok(Some(t));
        }
    }
    Ok(None)
}
