use crate::error::{domain, Result};
use crate::params::QParams;
use crate::real::Real;

/// `[n]_q = (1 - q^n)/(1 - q)`.
pub fn qint(n: i64, q: &Real) -> Real {
    (1 - q.powi(n)) / (1 - q)
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfact(n: usize, q: &Real) -> Real {
    let mut f = Real::one(q.prec());
    for k in 2..=n {
        f *= qint(k as i64, q);
    }
    f
}

/// Gaussian binomial coefficient, computed as a product of ratios.
pub fn qbinom(n: usize, k: usize, q: &Real) -> Real {
    let mut r = Real::one(q.prec());
    if k > n {
        return Real::zero(q.prec());
    }
    let k = k.min(n - k);
    for j in 1..=k {
        r *= 1 - q.powi((n - k + j) as i64);
        r /= 1 - q.powi(j as i64);
    }
    r
}

#[derive(Clone, Debug)]
pub struct QCombinatorics {
    pub qint: Real,
    pub qfact: Real,
    pub qbinom: Real,
}

pub fn qcombinatorics(n: i64, k: i64, p: &QParams) -> Result<QCombinatorics> {
    if n < 0 || k < 0 || k > n {
        return domain(format!("need 0 <= k <= n, got n={n}, k={k}"));
    }
    let q = p.q();
    Ok(QCombinatorics {
        qint: qint(n, q),
        qfact: qfact(n as usize, q),
        qbinom: qbinom(n as usize, k as usize, q),
    })
}

/// Cached `[n]_q`, `[n]_q!` and `(q;q)_n` for `n <= nmax`, any base.
#[derive(Clone, Debug)]
pub struct QTables {
    q: Real,
    qint: Vec<Real>,
    fact: Vec<Real>,
    poch: Vec<Real>,
}

impl QTables {
    pub fn new(q: &Real, nmax: usize) -> Self {
        let prec = q.prec();
        let mut t = QTables {
            q: q.clone(),
            qint: vec![Real::zero(prec)],
            fact: vec![Real::one(prec)],
            poch: vec![Real::one(prec)],
        };
        t.ensure(nmax);
        t
    }

    pub fn ensure(&mut self, nmax: usize) {
        while self.fact.len() <= nmax {
            let n = self.fact.len() as i64;
            let qi = qint(n, &self.q);
            let f = self.fact.last().unwrap() * &qi;
            let pc = self.poch.last().unwrap() * (1 - self.q.powi(n));
            self.qint.push(qi);
            self.fact.push(f);
            self.poch.push(pc);
        }
    }

    pub fn q(&self) -> &Real {
        &self.q
    }

    pub fn qint(&self, n: usize) -> &Real {
        &self.qint[n]
    }

    pub fn fact(&self, n: usize) -> &Real {
        &self.fact[n]
    }

    /// `(q;q)_n`.
    pub fn poch(&self, n: usize) -> &Real {
        &self.poch[n]
    }

    pub fn binom(&self, n: usize, k: usize) -> Real {
        if k > n {
            return Real::zero(self.q.prec());
        }
        &self.poch[n] / (&self.poch[k] * &self.poch[n - k])
    }
}
