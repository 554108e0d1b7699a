use crate::error::{domain, Result};
use crate::real::{Real, MAX_PRECISION_BITS};

pub const DEFAULT_PRECISION_BITS: u32 = 256;
pub const MIN_PRECISION_BITS: u32 = 64;

/// Base `q` together with the precision policy.
///
/// The base is stored at the working precision. `trunc_rel_tol` defaults to
/// `2^-precision_bits` and controls where infinite series and products stop.
#[derive(Clone, Debug)]
pub struct QParams {
    q: Real,
    precision_bits: u32,
    trunc_rel_tol: Real,
}

/// A value produced by truncating an infinite series or product.
#[derive(Clone, Debug)]
pub struct Truncated {
    pub value: Real,
    pub terms_used: usize,
    /// Bound on the magnitude of the omitted tail (absolute).
    pub tail_bound: Real,
}

impl QParams {
    pub fn new(q: f64, precision_bits: u32) -> Result<Self> {
        check_prec(precision_bits)?;
        Self::from_real(Real::from_f64(q, precision_bits), precision_bits)
    }

    /// Parses `q` from a decimal string at full precision, so `"0.3"` means
    /// 3/10 rather than the nearest double.
    pub fn parse(q: &str, precision_bits: u32) -> Result<Self> {
        check_prec(precision_bits)?;
        Self::from_real(Real::parse(q, precision_bits)?, precision_bits)
    }

    pub fn from_real(q: Real, precision_bits: u32) -> Result<Self> {
        check_prec(precision_bits)?;
        if !(q > 0 && q < 1) {
            return domain(format!("q must lie in (0,1), got {}", q.to_sci(12)));
        }
        Ok(QParams {
            q: q.with_prec(precision_bits),
            precision_bits,
            trunc_rel_tol: Real::two_pow(-(precision_bits as i32), 64),
        })
    }

    pub fn with_trunc_rel_tol(mut self, tol: Real) -> Result<Self> {
        if !(tol > 0 && tol < 1) {
            return domain("trunc_rel_tol must lie in (0,1)");
        }
        self.trunc_rel_tol = tol;
        Ok(self)
    }

    /// Same policy, different base (e.g. `q^2` for the Bessel functions).
    pub fn with_base(&self, base: Real) -> Result<Self> {
        if !(base > 0 && base < 1) {
            return domain("base must lie in (0,1)");
        }
        Ok(QParams { q: base.with_prec(self.precision_bits), ..self.clone() })
    }

    /// Same base value carried at a different precision.
    pub fn with_precision(&self, precision_bits: u32) -> Self {
        QParams {
            q: self.q.with_prec(precision_bits),
            precision_bits,
            trunc_rel_tol: Real::two_pow(-(precision_bits as i32), 64),
        }
    }

    /// The `q^2` base used by the Bessel-side functions.
    pub fn squared(&self) -> Self {
        QParams { q: self.q.square(), ..self.clone() }
    }

    pub fn q(&self) -> &Real {
        &self.q
    }

    pub fn prec(&self) -> u32 {
        self.precision_bits
    }

    pub fn tol(&self) -> &Real {
        &self.trunc_rel_tol
    }

    /// `-log2(trunc_rel_tol)`, the number of bits series are summed to.
    pub fn tol_bits(&self) -> u32 {
        (-self.trunc_rel_tol.log2_abs()).ceil().max(8.0) as u32
    }

    pub fn real(&self, v: f64) -> Real {
        Real::from_f64(v, self.precision_bits)
    }

    pub fn int(&self, v: i64) -> Real {
        Real::from_i64(v, self.precision_bits)
    }

    pub fn ratio(&self, num: i64, den: i64) -> Real {
        Real::from_ratio(num, den, self.precision_bits)
    }

    pub fn zero(&self) -> Real {
        Real::zero(self.precision_bits)
    }

    pub fn one(&self) -> Real {
        Real::one(self.precision_bits)
    }

    /// `q^x` for real `x`.
    pub fn q_pow(&self, x: &Real) -> Real {
        self.q.powr(x)
    }

    pub fn q_powi(&self, n: i64) -> Real {
        self.q.powi(n)
    }
}

fn check_prec(bits: u32) -> Result<()> {
    if !(MIN_PRECISION_BITS..=MAX_PRECISION_BITS).contains(&bits) {
        return domain(format!(
            "precision_bits must lie in [{MIN_PRECISION_BITS}, {MAX_PRECISION_BITS}], got {bits}"
        ));
    }
    Ok(())
}
