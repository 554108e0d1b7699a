use std::fmt;

use crate::real::Real;

/// Dense polynomial in `x`; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zeros are stripped on construction, so the zero polynomial has
/// no coefficients and [`Poly::degree`] returns `None` for it.
#[derive(Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<Real>,
    prec: u32,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Real>, prec: u32) -> Self {
        while coeffs.last().is_some_and(Real::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, prec }
    }

    pub fn zero(prec: u32) -> Self {
        Poly { coeffs: Vec::new(), prec }
    }

    pub fn constant(c: Real) -> Self {
        let prec = c.prec();
        Poly::new(vec![c], prec)
    }

    pub fn monomial(c: Real, n: usize) -> Self {
        let prec = c.prec();
        let mut v = vec![Real::zero(prec); n];
        v.push(c);
        Poly::new(v, prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn coeffs(&self) -> &[Real] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Real> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Real {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Real::zero(self.prec))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Real) -> Real {
        let mut s = Real::zero(self.prec.max(x.prec()));
        for c in self.coeffs.iter().rev() {
            s = s * x + c;
        }
        s
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let prec = self.prec.max(other.prec);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(prec);
        }
        let mut out = vec![Real::zero(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out, prec)
    }

    pub fn scale(&self, c: &Real) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect(), self.prec.max(c.prec()))
    }

    /// `x -> p(a x)`.
    pub fn dilate(&self, a: &Real) -> Poly {
        let mut w = Real::one(self.prec);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &w);
            w *= a;
        }
        Poly::new(out, self.prec)
    }

    /// Applies `x^n -> f(n) x^{n-1}` termwise.
    pub fn lower_with(&self, f: impl Fn(usize) -> Real) -> Poly {
        let out = self.coeffs.iter().enumerate().skip(1).map(|(n, c)| c * f(n)).collect();
        Poly::new(out, self.prec)
    }

    /// Largest coefficient difference, divided by `max(1, largest coefficient)`.
    pub fn rel_distance(&self, other: &Poly) -> Real {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut diff = Real::zero(64);
        let mut scale = Real::one(64);
        for i in 0..n {
            let (a, b) = (self.coeff(i), other.coeff(i));
            let d = (&a - &b).abs();
            if d > diff {
                diff = d;
            }
            for v in [a.abs(), b.abs()] {
                if v > scale {
                    scale = v;
                }
            }
        }
        diff / scale
    }

    fn zip(&self, other: &Poly, f: impl Fn(&Real, &Real) -> Real) -> Poly {
        let prec = self.prec.max(other.prec);
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n).map(|i| f(&self.coeff(i), &other.coeff(i))).collect();
        Poly::new(out, prec)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&c| Real::from_i64(c, 64)).collect(), 64)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.mul(&b), p(&[-1, 0, 1]));
        assert_eq!(a.add(&b), p(&[0, 2]));
        assert_eq!(a.sub(&a), Poly::zero(64));
        assert_eq!(a.eval(&Real::from_i64(3, 64)), 4);
        assert_eq!(a.dilate(&Real::from_i64(2, 64)), p(&[1, 2]));
    }
}
