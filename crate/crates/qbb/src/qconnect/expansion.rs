use crate::error::{domain, Error, Result};
use crate::params::QParams;
use crate::qbernoulli::polys::{BernoulliCtx, Family};
use crate::qbessel::functions::check_alpha;
use crate::qconnect::laguerre::qlaguerre;
use crate::qconnect::legendre::qlegendre_poly;
use crate::qcore::integral::qintegral01;
use crate::qcore::pochhammer::{qpoch, qpoch_inf};
use crate::real::Real;

const GUARD: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    QLaguerre,
    QLegendre,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::QLaguerre => "QLAGUERRE",
            Basis::QLegendre => "QLEGENDRE",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "QLAGUERRE" | "LAGUERRE" => Some(Basis::QLaguerre),
            "QLEGENDRE" | "LEGENDRE" => Some(Basis::QLegendre),
            _ => None,
        }
    }
}

/// Normalisation of the Laguerre coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LaguerrePrefactor {
    /// `A_m / A_0 = q^m / (q^{a+1};q)_m`, which reconstructs the polynomial.
    #[default]
    Normalized,
    /// `A_m = -q^m (q^{a+m+1}, q^-a;q)_inf pi / ((1-q)^2 (q;q)_inf^2 sin(a pi))`.
    AsPrinted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LegendreForm {
    /// `C_k = (1-q^{2k+1}) sum_m c_m q^{km} (q;q)_m (q^-m;q)_k / (q;q)_{m+k+1}` over
    /// the monomial coefficients `c_m`.
    #[default]
    Corrected,
    /// `lambda_k = q^{-k(k-3)/2} (1-q^{2k+1})` outside the displayed inner sum.
    AsPrinted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConnectionOptions {
    pub laguerre: LaguerrePrefactor,
    pub legendre: LegendreForm,
}

/// `B^(k)_{n,alpha} = sum_m coeffs[m] basis_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionExpansion {
    pub basis: Basis,
    pub family: Family,
    pub n: usize,
    pub alpha: Real,
    pub q: Real,
    pub coeffs: Vec<Real>,
}

impl ConnectionExpansion {
    /// `sum_m coeffs[m] basis_m(x)`.
    pub fn eval(&self, x: &Real, p: &QParams) -> Result<Real> {
        let mut s = p.zero();
        for (m, c) in self.coeffs.iter().enumerate() {
            let b = match self.basis {
                Basis::QLaguerre => qlaguerre(m, &self.alpha, x, p)?,
                Basis::QLegendre => qlegendre_poly(m, p).eval(x),
            };
            s += c * b;
        }
        Ok(s)
    }
}

/// Family weight inside the displayed sums: `q^{k(2n-k+1)/2}`, `q^{nk}` or
/// `q^{k(4n-k+1)/4}`.
fn family_weight(ctx: &BernoulliCtx, fam: Family, n: usize, k: usize) -> Real {
    let (n, k) = (n as i64, k as i64);
    match fam {
        Family::K1 => ctx.q_quarter(2 * k * (2 * n - k + 1)),
        Family::K2 => ctx.q_quarter(4 * n * k),
        Family::K3 => ctx.q_quarter(k * (4 * n - k + 1)),
    }
}

fn check_laguerre_alpha(alpha: &Real) -> Result<()> {
    if alpha.is_integer() {
        return Err(Error::Pole { func: "qlaguerre connection".into(), arg: alpha.to_sci(12) });
    }
    Ok(())
}

fn laguerre_coeffs(ctx: &BernoulliCtx, fam: Family, n: usize, pre: LaguerrePrefactor, wp: &QParams) -> Vec<Real> {
    let q = wp.q();
    let alpha = &ctx.alpha;
    let beta = ctx.numbers(fam);
    let ni = n as i64;
    let qmn = q.powi(-ni);
    let qa1 = wp.q_pow(&(alpha + 1));
    let a_printed = |m: usize| {
        let pi = Real::pi(wp.prec());
        let num = q.powi(m as i64)
            * qpoch_inf(&(&qa1 * q.powi(m as i64)), wp).value
            * qpoch_inf(&wp.q_pow(&-alpha), wp).value
            * &pi;
        -num / ((1 - q).square() * qpoch_inf(q, wp).value.square() * (alpha * &pi).sin())
    };
    (0..=n)
        .map(|m| {
            let mut s = wp.zero();
            for k in m..=n {
                let qak = wp.q_pow(&-(alpha + k as i32));
                let mut t = family_weight(ctx, fam, n, k) * qpoch(&qmn, q, k);
                t *= qpoch(&q.powi(-(k as i64)), q, m) * qpoch(&qak, q, k) * &beta[n - k];
                s += t / qpoch(q, q, k);
            }
            let a = match pre {
                LaguerrePrefactor::Normalized => q.powi(m as i64) / qpoch(&qa1, q, m),
                LaguerrePrefactor::AsPrinted => a_printed(m),
            };
            a * s
        })
        .collect()
}

fn legendre_coeffs(ctx: &BernoulliCtx, fam: Family, n: usize, form: LegendreForm, wp: &QParams) -> Vec<Real> {
    let q = wp.q();
    let ni = n as i64;
    match form {
        LegendreForm::Corrected => {
            let c = ctx.poly(fam, n);
            (0..=n)
                .map(|k| {
                    let mut s = wp.zero();
                    for m in k..=n {
                        let mut t = c.coeff(m) * q.powi((k * m) as i64) * qpoch(q, q, m);
                        t *= qpoch(&q.powi(-(m as i64)), q, k);
                        s += t / qpoch(q, q, m + k + 1);
                    }
                    (1 - q.powi(2 * k as i64 + 1)) * s
                })
                .collect()
        }
        LegendreForm::AsPrinted => {
            let beta = ctx.numbers(fam);
            let qmn = q.powi(-ni);
            (0..=n)
                .map(|k| {
                    let ki = k as i64;
                    let lambda = ctx.q_quarter(-2 * ki * (ki - 3)) * (1 - q.powi(2 * ki + 1));
                    let mut s = wp.zero();
                    for m in k..=n {
                        let mut t = family_weight(ctx, fam, n, m) * qpoch(&qmn, q, m);
                        t *= qpoch(&q.powi(-(m as i64)), q, k) * &beta[n - m];
                        t /= qpoch(q, q, m + k + 1);
                        if m % 2 == 1 { s -= t } else { s += t }
                    }
                    lambda * s
                })
                .collect()
        }
    }
}

/// Connection coefficients with the default (reconstructing) forms.
pub fn connection_coeffs(
    basis: Basis,
    family: Family,
    n: usize,
    alpha: &Real,
    p: &QParams,
) -> Result<ConnectionExpansion> {
    connection_coeffs_with(basis, family, n, alpha, p, ConnectionOptions::default())
}

pub fn connection_coeffs_with(
    basis: Basis,
    family: Family,
    n: usize,
    alpha: &Real,
    p: &QParams,
    opts: ConnectionOptions,
) -> Result<ConnectionExpansion> {
    check_alpha(alpha)?;
    if basis == Basis::QLaguerre {
        check_laguerre_alpha(alpha)?;
    }
    let wp = p.with_precision(p.prec() + GUARD);
    let ctx = BernoulliCtx::new(&alpha.with_prec(wp.prec()), wp.q(), n);
    let coeffs = match basis {
        Basis::QLaguerre => laguerre_coeffs(&ctx, family, n, opts.laguerre, &wp),
        Basis::QLegendre => legendre_coeffs(&ctx, family, n, opts.legendre, &wp),
    };
    Ok(ConnectionExpansion {
        basis,
        family,
        n,
        alpha: alpha.clone(),
        q: p.q().clone(),
        coeffs: coeffs.into_iter().map(|c| c.with_prec(p.prec())).collect(),
    })
}

/// `C_k = int_0^1 P_k B d_q x / int_0^1 P_k^2 d_q x`, both by Jackson integration.
pub fn legendre_coeff_oracle(family: Family, n: usize, k: usize, alpha: &Real, p: &QParams) -> Result<Real> {
    check_alpha(alpha)?;
    let wp = p.with_precision(p.prec() + GUARD);
    let ctx = BernoulliCtx::new(&alpha.with_prec(wp.prec()), wp.q(), n);
    let b = ctx.poly(family, n);
    let pk = qlegendre_poly(k, &wp);
    let num = qintegral01(|x| pk.eval(x) * b.eval(x), &wp)?.value;
    let den = qintegral01(|x| pk.eval(x).square(), &wp)?.value;
    Ok((num / den).with_prec(p.prec()))
}

/// `max_x |sum_m C_m basis_m(x) - B(x)| / max(1, |B(x)|)`.
pub fn expansion_residual(exp: &ConnectionExpansion, xs: &[Real], p: &QParams) -> Result<Real> {
    if xs.is_empty() {
        return domain("expansion_residual needs at least one point");
    }
    let wp = p.with_precision(p.prec() + GUARD);
    let ctx = BernoulliCtx::new(&exp.alpha.with_prec(wp.prec()), wp.q(), exp.n);
    let b = ctx.poly(exp.family, exp.n);
    let mut worst = Real::zero(64);
    for x in xs {
        let x = x.with_prec(wp.prec());
        let truth = b.eval(&x);
        let got = exp.eval(&x, &wp)?;
        let scale = if truth.abs() > 1 { truth.abs() } else { wp.one() };
        let r = ((got - &truth).abs() / scale).with_prec(64);
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}
