//! Arbitrary-precision real scalar.
//!
//! [`Real`] wraps an MPFR float. Binary operations run at the larger of the
//! two operand precisions, so mixing a 256-bit value with a boosted 400-bit
//! intermediate never silently drops bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

/// Longest decimal string accepted by [`Real::parse`].
pub const MAX_DECIMAL_LEN: usize = 20_000;

/// Largest precision accepted anywhere a precision comes from user input.
pub const MAX_PRECISION_BITS: u32 = 1 << 16;

#[derive(Clone, PartialEq, PartialOrd)]
pub struct Real(Float);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRealError {
    #[error("empty decimal string")]
    Empty,
    #[error("decimal string longer than {MAX_DECIMAL_LEN} bytes")]
    TooLong,
    #[error("invalid decimal `{0}`")]
    Invalid(String),
    #[error("value `{0}` is not finite")]
    NotFinite(String),
}

impl Real {
    pub fn zero(prec: u32) -> Self {
        Real(Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        Real(Float::with_val(prec, 1))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Real(Float::with_val(prec, v))
    }

    /// Exact binary value of `v`, rounded to `prec`.
    pub fn from_f64(v: f64, prec: u32) -> Self {
        Real(Float::with_val(prec, v))
    }

    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        Real(Float::with_val(prec, rug::Rational::from((num, den))))
    }

    pub fn from_float(f: Float) -> Self {
        Real(f)
    }

    /// Parses a finite decimal such as `-1.25e-3`. Surrounding whitespace is
    /// ignored; `inf` and `nan` are rejected.
    pub fn parse(s: &str, prec: u32) -> Result<Self, ParseRealError> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseRealError::Empty);
        }
        if t.len() > MAX_DECIMAL_LEN {
            return Err(ParseRealError::TooLong);
        }
        let ok = t
            .bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'));
        if !ok {
            return Err(ParseRealError::Invalid(t.to_string()));
        }
        let inc = Float::parse(t).map_err(|_| ParseRealError::Invalid(t.to_string()))?;
        let f = Float::with_val(prec, inc);
        if !f.is_finite() {
            return Err(ParseRealError::NotFinite(t.to_string()));
        }
        Ok(Real(f))
    }

    pub fn pi(prec: u32) -> Self {
        Real(Float::with_val(prec, Constant::Pi))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Copy rounded (or exactly widened) to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        Real(Float::with_val(prec, &self.0))
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// `log2 |self|`, finite even when the value is outside the f64 range.
    /// Returns negative infinity for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, e) = self.0.to_f64_exp();
        m.abs().log2() + e as f64
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    /// -1, 0 or 1.
    pub fn sign(&self) -> i32 {
        match self.0.cmp0() {
            Some(Ordering::Less) => -1,
            Some(Ordering::Greater) => 1,
            _ => 0,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_i64_exact(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.to_integer().and_then(|i| i.to_i64())
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.abs_ref()))
    }

    pub fn sqrt(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.sqrt_ref()))
    }

    pub fn ln(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.ln_ref()))
    }

    pub fn exp(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.exp_ref()))
    }

    pub fn sin(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.sin_ref()))
    }

    pub fn recip(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.recip_ref()))
    }

    pub fn square(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.square_ref()))
    }

    pub fn powi(&self, n: i64) -> Self {
        Real(Float::with_val(self.prec(), (&self.0).pow(n)))
    }

    pub fn powr(&self, e: &Real) -> Self {
        let p = self.prec().max(e.prec());
        Real(Float::with_val(p, (&self.0).pow(&e.0)))
    }

    /// `self * 2^k`, exact.
    pub fn mul_2exp(&self, k: i32) -> Self {
        let mut f = self.0.clone();
        if k >= 0 {
            f <<= k as u32;
        } else {
            f >>= (-k) as u32;
        }
        Real(f)
    }

    /// `2^k` at the given precision.
    pub fn two_pow(k: i32, prec: u32) -> Self {
        Real::one(prec).mul_2exp(k)
    }

    pub fn max_abs<'a>(vals: impl IntoIterator<Item = &'a Real>, prec: u32) -> Real {
        let mut m = Real::zero(prec);
        for v in vals {
            let a = v.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// Full-precision decimal rendering, deterministic and re-parseable.
    pub fn to_decimal(&self) -> String {
        format!("{}", self.0)
    }

    /// Short rendering for diagnostics.
    pub fn to_sci(&self, digits: usize) -> String {
        self.0.to_string_radix(10, Some(digits.max(2)))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_sci(20))
    }
}

impl PartialEq<i32> for Real {
    fn eq(&self, other: &i32) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i32> for Real {
    fn partial_cmp(&self, other: &i32) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl PartialEq<f64> for Real {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for Real {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

macro_rules! real_binop {
    ($Tr:ident, $m:ident, $TrA:ident, $ma:ident) => {
        impl<'a, 'b> $Tr<&'b Real> for &'a Real {
            type Output = Real;
            fn $m(self, rhs: &'b Real) -> Real {
                let p = self.prec().max(rhs.prec());
                Real(Float::with_val(p, $Tr::$m(&self.0, &rhs.0)))
            }
        }
        impl $Tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                $Tr::$m(&self, &rhs)
            }
        }
        impl<'b> $Tr<&'b Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &'b Real) -> Real {
                $Tr::$m(&self, rhs)
            }
        }
        impl<'a> $Tr<Real> for &'a Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                $Tr::$m(self, &rhs)
            }
        }
        impl<'a> $Tr<i32> for &'a Real {
            type Output = Real;
            fn $m(self, rhs: i32) -> Real {
                Real(Float::with_val(self.prec(), $Tr::$m(&self.0, rhs)))
            }
        }
        impl $Tr<i32> for Real {
            type Output = Real;
            fn $m(self, rhs: i32) -> Real {
                $Tr::$m(&self, rhs)
            }
        }
        impl<'a> $Tr<&'a Real> for i32 {
            type Output = Real;
            fn $m(self, rhs: &'a Real) -> Real {
                Real(Float::with_val(rhs.prec(), $Tr::$m(self, &rhs.0)))
            }
        }
        impl $Tr<Real> for i32 {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                $Tr::$m(self, &rhs)
            }
        }
        impl<'b> $TrA<&'b Real> for Real {
            fn $ma(&mut self, rhs: &'b Real) {
                if rhs.prec() > self.prec() {
                    self.0.set_prec(rhs.prec());
                }
                $TrA::$ma(&mut self.0, &rhs.0);
            }
        }
        impl $TrA<Real> for Real {
            fn $ma(&mut self, rhs: Real) {
                $TrA::$ma(self, &rhs);
            }
        }
        impl $TrA<i32> for Real {
            fn $ma(&mut self, rhs: i32) {
                $TrA::$ma(&mut self.0, rhs);
            }
        }
    };
}

real_binop!(Add, add, AddAssign, add_assign);
real_binop!(Sub, sub, SubAssign, sub_assign);
real_binop!(Mul, mul, MulAssign, mul_assign);
real_binop!(Div, div, DivAssign, div_assign);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl<'a> Neg for &'a Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(Float::with_val(self.prec(), -&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ops_use_max_precision() {
        let a = Real::from_i64(1, 64);
        let b = Real::from_ratio(1, 3, 256);
        assert_eq!((&a + &b).prec(), 256);
        assert_eq!((&b * &a).prec(), 256);
        let mut c = a.clone();
        c += &b;
        assert_eq!(c.prec(), 256);
    }

    #[test]
    fn decimal_round_trip() {
        let x = Real::from_ratio(-22, 7, 256);
        let s = x.to_decimal();
        let y = Real::parse(&s, 256).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Real::parse("", 64).is_err());
        assert!(Real::parse("inf", 64).is_err());
        assert!(Real::parse("nan", 64).is_err());
        assert!(Real::parse("1.2.3", 64).is_err());
        assert!(Real::parse("0x10", 64).is_err());
        assert_eq!(Real::parse(" 0.25 ", 64).unwrap(), 0.25);
    }

    #[test]
    fn log2_abs_far_outside_f64() {
        let tiny = Real::two_pow(-5000, 64);
        assert!((tiny.log2_abs() + 5000.0).abs() < 1e-9);
    }
}
