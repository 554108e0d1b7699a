//! The polynomials `B^(k)_{n,alpha}(x;q)` and the Al-Salam polynomials.

use crate::error::{domain, Result};
use crate::params::QParams;
use crate::qbernoulli::beta::{q_quarter, solve_beta, BetaMethod};
use crate::qbessel::functions::check_alpha;
use crate::qcore::combinatorics::QTables;
use crate::qcore::poly::Poly;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    K1,
    K2,
    K3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::K1, Family::K2, Family::K3];

    pub fn index(self) -> u8 {
        match self {
            Family::K1 => 1,
            Family::K2 => 2,
            Family::K3 => 3,
        }
    }

    pub fn from_index(k: i64) -> Result<Self> {
        match k {
            1 => Ok(Family::K1),
            2 => Ok(Family::K2),
            3 => Ok(Family::K3),
            _ => domain(format!("family must be 1, 2 or 3, got {k}")),
        }
    }
}

/// Numbers, q-binomials and polynomials for one `(alpha, base)` pair, up to
/// degree `nmax`. The base may exceed 1.
#[derive(Clone, Debug)]
pub struct BernoulliCtx {
    pub alpha: Real,
    pub base: Real,
    pub tables: QTables,
    pub beta: Vec<Real>,
    pub beta3: Vec<Real>,
    q4: Real,
}

impl BernoulliCtx {
    pub fn new(alpha: &Real, base: &Real, nmax: usize) -> Self {
        let p = base.powr(&(alpha + 1).mul_2exp(1));
        BernoulliCtx {
            alpha: alpha.clone(),
            base: base.clone(),
            tables: QTables::new(base, nmax),
            beta: solve_beta(base, &p, nmax, false, BetaMethod::RecQ1902),
            beta3: solve_beta(base, &p, nmax, true, BetaMethod::RecQ1902),
            q4: base.sqrt().sqrt(),
        }
    }

    pub fn nmax(&self) -> usize {
        self.beta.len() - 1
    }

    pub fn prec(&self) -> u32 {
        self.base.prec()
    }

    /// `q^{e/4}` at this base.
    pub fn q_quarter(&self, e: i64) -> Real {
        q_quarter(&self.q4, e)
    }

    /// Weight of `x^j` beyond the q-binomial: 1, `q^{j(j-1)/2}` or `q^{j(j-1)/4}`.
    pub fn weight(&self, k: Family, j: usize) -> Real {
        let e = (j * j.saturating_sub(1)) as i64;
        match k {
            Family::K1 => Real::one(self.prec()),
            Family::K2 => self.q_quarter(2 * e),
            Family::K3 => self.q_quarter(e),
        }
    }

    pub fn numbers(&self, k: Family) -> &[Real] {
        if k == Family::K3 {
            &self.beta3
        } else {
            &self.beta
        }
    }

    pub fn poly(&self, k: Family, n: usize) -> Poly {
        let b = self.numbers(k);
        let c = (0..=n).map(|j| self.tables.binom(n, j) * self.weight(k, j) * &b[n - j]).collect();
        Poly::new(c, self.prec())
    }

    pub fn eval(&self, k: Family, n: usize, x: &Real) -> Real {
        self.poly(k, n).eval(x)
    }

    pub fn h_poly(&self, n: usize) -> Poly {
        Poly::new((0..=n).map(|k| self.tables.binom(n, k)).collect(), self.prec())
    }

    pub fn g_poly(&self, n: usize) -> Poly {
        let c = (0..=n)
            .map(|k| self.tables.binom(n, k) * self.base.powi(k as i64 * k as i64 - (n * k) as i64))
            .collect();
        Poly::new(c, self.prec())
    }
}

fn ctx(alpha: &Real, p: &QParams, n: usize) -> Result<BernoulliCtx> {
    check_alpha(alpha)?;
    Ok(BernoulliCtx::new(alpha, &p.q().with_prec(p.prec() + 32), n))
}

fn round(poly: Poly, prec: u32) -> Poly {
    Poly::new(poly.into_coeffs().into_iter().map(|c| c.with_prec(prec)).collect(), prec)
}

/// `B^(k)_{n,alpha}(x;q)` in monomial form.
pub fn bernoulli_poly(k: Family, n: usize, alpha: &Real, p: &QParams) -> Result<Poly> {
    Ok(round(ctx(alpha, p, n)?.poly(k, n), p.prec()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlSalam {
    H,
    G,
}

/// `H_n(x) = sum [n k] x^k`, `G_n(x) = sum [n k] q^{k^2-nk} x^k`.
pub fn alsalam_poly(which: AlSalam, n: usize, p: &QParams) -> Poly {
    let prec = p.prec();
    let q = p.q().with_prec(prec + 32);
    let t = QTables::new(&q, n);
    let c = (0..=n)
        .map(|k| {
            let b = t.binom(n, k);
            match which {
                AlSalam::H => b,
                AlSalam::G => b * q.powi((k * k) as i64 - (n * k) as i64),
            }
        })
        .collect();
    round(Poly::new(c, prec + 32), prec)
}
