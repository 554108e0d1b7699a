//! JSON encodings of the library's artifacts.
//!
//! Every number is written as a decimal string at full precision. Decoders
//! validate structure and ranges and never panic on malformed input; numeric
//! re-validation (e.g. [`ZeroTable::validate`]) is left to the caller because
//! it costs function evaluations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::MIN_PRECISION_BITS;
use crate::qasym::ResidueSeriesResult;
use crate::qbernoulli::{Family, IdentityReport, Point};
use crate::qbessel::{BesselKind, ZeroTable};
use crate::qconnect::{Basis, ConnectionExpansion};
use crate::real::{Real, MAX_PRECISION_BITS};

/// Longest JSON document the decoders accept.
pub const MAX_DOCUMENT_LEN: usize = 4 << 20;
/// Longest vector accepted in any artifact.
pub const MAX_VECTOR_LEN: usize = 4096;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZeroTableJson {
    kind: String,
    alpha: String,
    q: String,
    precision_bits: u32,
    zeros: Vec<String>,
    dmod: Vec<String>,
}

pub(crate) fn decode_err(msg: impl Into<String>) -> Error {
    Error::Decode(msg.into())
}

pub(crate) fn check_len(text: &str) -> Result<()> {
    if text.len() > MAX_DOCUMENT_LEN {
        return Err(decode_err("document too long"));
    }
    Ok(())
}

pub(crate) fn check_prec(bits: u32) -> Result<()> {
    if !(MIN_PRECISION_BITS..=MAX_PRECISION_BITS).contains(&bits) {
        return Err(decode_err(format!("precision_bits {bits} out of range")));
    }
    Ok(())
}

pub(crate) fn parse_num(s: &str, prec: u32, what: &str) -> Result<Real> {
    Real::parse(s, prec).map_err(|e| decode_err(format!("{what}: {e}")))
}

pub(crate) fn parse_vec(v: &[String], prec: u32, what: &str) -> Result<Vec<Real>> {
    if v.len() > MAX_VECTOR_LEN {
        return Err(decode_err(format!("{what}: too many entries")));
    }
    v.iter().map(|s| parse_num(s, prec, what)).collect()
}

pub(crate) fn decimals(v: &[Real]) -> Vec<String> {
    v.iter().map(Real::to_decimal).collect()
}

pub(crate) fn check_q(q: &Real) -> Result<()> {
    if !(*q > 0 && *q < 1) {
        return Err(decode_err("q must lie in (0,1)"));
    }
    Ok(())
}

pub(crate) fn check_alpha(a: &Real) -> Result<()> {
    if !(*a > -1) {
        return Err(decode_err("alpha must exceed -1"));
    }
    Ok(())
}

pub fn encode_zero_table(t: &ZeroTable) -> String {
    let j = ZeroTableJson {
        kind: t.kind.name().to_string(),
        alpha: t.alpha.to_decimal(),
        q: t.q.to_decimal(),
        precision_bits: t.precision_bits,
        zeros: decimals(&t.zeros),
        dmod: decimals(&t.dmod),
    };
    serde_json::to_string_pretty(&j).expect("plain strings always serialise")
}

/// Structural decode: kinds, ranges, ordering and lengths.
pub fn decode_zero_table(text: &str) -> Result<ZeroTable> {
    check_len(text)?;
    let j: ZeroTableJson = serde_json::from_str(text).map_err(|e| decode_err(e.to_string()))?;
    let kind = match BesselKind::from_name(&j.kind) {
        Some(k @ (BesselKind::J2 | BesselKind::J3)) => k,
        _ => return Err(decode_err(format!("unknown zero-table kind `{}`", j.kind))),
    };
    check_prec(j.precision_bits)?;
    let prec = j.precision_bits;
    let alpha = parse_num(&j.alpha, prec, "alpha")?;
    check_alpha(&alpha)?;
    let q = parse_num(&j.q, prec, "q")?;
    check_q(&q)?;
    if j.zeros.len() != j.dmod.len() {
        return Err(decode_err("zeros and dmod lengths differ"));
    }
    let zeros = parse_vec(&j.zeros, prec, "zeros")?;
    let dmod = parse_vec(&j.dmod, prec, "dmod")?;
    let mut prev = Real::zero(64);
    for z in &zeros {
        if !(*z > prev) {
            return Err(decode_err("zeros must be positive and strictly increasing"));
        }
        prev = z.clone();
    }
    if dmod.iter().any(Real::is_zero) {
        return Err(decode_err("dmod entries must be nonzero"));
    }
    Ok(ZeroTable { kind, alpha, q, precision_bits: prec, zeros, dmod })
}

/// Precision that keeps every digit of a decimal string: about 3.33 bits
/// per character plus guard bits. Rounding the result to the writer's
/// precision recovers the written value.
pub(crate) fn parse_auto(s: &str, what: &str) -> Result<Real> {
    let bits = ((s.len() as u32).saturating_mul(10) / 3 + 16).clamp(MIN_PRECISION_BITS, MAX_PRECISION_BITS);
    parse_num(s, bits, what)
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct PointJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdentityReportJson {
    id: String,
    point: PointJson,
    residual: String,
    tolerance: String,
    pass: bool,
}

fn point_json(p: &Point) -> PointJson {
    let d = |v: &Option<Real>| v.as_ref().map(Real::to_decimal);
    PointJson { k: p.k, n: p.n, alpha: d(&p.alpha), q: d(&p.q), x: d(&p.x), a: d(&p.a) }
}

fn identity_report_json(r: &IdentityReport) -> IdentityReportJson {
    IdentityReportJson {
        id: r.id.clone(),
        point: point_json(&r.point),
        residual: r.residual.to_decimal(),
        tolerance: r.tolerance.to_decimal(),
        pass: r.pass,
    }
}

pub fn encode_identity_report(r: &IdentityReport) -> String {
    serde_json::to_string(&identity_report_json(r)).expect("plain strings always serialise")
}

/// One report per line, in the given order.
pub fn encode_identity_reports(rs: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in rs {
        out.push_str(&encode_identity_report(r));
        out.push('\n');
    }
    out
}

pub fn decode_identity_report(text: &str) -> Result<IdentityReport> {
    check_len(text)?;
    let j: IdentityReportJson = serde_json::from_str(text).map_err(|e| decode_err(e.to_string()))?;
    let id_ok = !j.id.is_empty()
        && j.id.len() <= 64
        && j.id.bytes().all(|b| b.is_ascii_uppercase() || b.is_ascii_digit() || b == b'_');
    if !id_ok {
        return Err(decode_err(format!("malformed identity id `{}`", j.id)));
    }
    let opt = |v: &Option<String>, what: &str| v.as_deref().map(|s| parse_auto(s, what)).transpose();
    let pj = &j.point;
    if matches!(pj.k, Some(k) if !(1..=3).contains(&k)) {
        return Err(decode_err("point.k must be 1, 2 or 3"));
    }
    if matches!(pj.n, Some(n) if !(0..=MAX_VECTOR_LEN as i64).contains(&n)) {
        return Err(decode_err("point.n out of range"));
    }
    let point = Point {
        k: pj.k,
        n: pj.n,
        alpha: opt(&pj.alpha, "alpha")?,
        q: opt(&pj.q, "q")?,
        x: opt(&pj.x, "x")?,
        a: opt(&pj.a, "a")?,
    };
    if let Some(a) = &point.alpha {
        check_alpha(a)?;
    }
    if let Some(q) = &point.q {
        check_q(q)?;
    }
    let residual = parse_auto(&j.residual, "residual")?;
    let tolerance = parse_auto(&j.tolerance, "tolerance")?;
    if residual.is_sign_negative() || !(tolerance > 0) {
        return Err(decode_err("residual must be >= 0 and tolerance > 0"));
    }
    if j.pass != (residual <= tolerance) {
        return Err(decode_err("pass flag disagrees with residual <= tolerance"));
    }
    Ok(IdentityReport { id: j.id, point, residual, tolerance, pass: j.pass })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConnectionExpansionJson {
    basis: String,
    family: u8,
    n: usize,
    alpha: String,
    q: String,
    coeffs: Vec<String>,
}

pub fn encode_connection_expansion(e: &ConnectionExpansion) -> String {
    let j = ConnectionExpansionJson {
        basis: e.basis.name().to_string(),
        family: e.family.index(),
        n: e.n,
        alpha: e.alpha.to_decimal(),
        q: e.q.to_decimal(),
        coeffs: decimals(&e.coeffs),
    };
    serde_json::to_string_pretty(&j).expect("plain strings always serialise")
}

pub fn decode_connection_expansion(text: &str) -> Result<ConnectionExpansion> {
    check_len(text)?;
    let j: ConnectionExpansionJson = serde_json::from_str(text).map_err(|e| decode_err(e.to_string()))?;
    let basis = match j.basis.as_str() {
        "QLAGUERRE" => Basis::QLaguerre,
        "QLEGENDRE" => Basis::QLegendre,
        other => return Err(decode_err(format!("unknown basis `{other}`"))),
    };
    let family = Family::from_index(j.family as i64).map_err(|_| decode_err("family must be 1, 2 or 3"))?;
    if j.coeffs.len() != j.n.saturating_add(1) {
        return Err(decode_err("coeffs must have length n + 1"));
    }
    let alpha = parse_auto(&j.alpha, "alpha")?;
    check_alpha(&alpha)?;
    if basis == Basis::QLaguerre && alpha.is_integer() {
        return Err(decode_err("Laguerre expansions need non-integer alpha"));
    }
    let q = parse_auto(&j.q, "q")?;
    check_q(&q)?;
    if j.coeffs.len() > MAX_VECTOR_LEN {
        return Err(decode_err("coeffs: too many entries"));
    }
    let coeffs = j.coeffs.iter().map(|c| parse_auto(c, "coeffs")).collect::<Result<Vec<_>>>()?;
    Ok(ConnectionExpansion { basis, family, n: j.n, alpha, q, coeffs })
}

#[derive(Serialize)]
struct ResidueJson<'a> {
    n: usize,
    parity: &'a str,
    value: String,
    zeros_used: usize,
    last_term_magnitude: String,
    converged: bool,
}

pub fn encode_residue_result(r: &ResidueSeriesResult) -> String {
    let j = ResidueJson {
        n: r.n,
        parity: r.parity.name(),
        value: r.value.to_decimal(),
        zeros_used: r.zeros_used,
        last_term_magnitude: r.last_term_magnitude.to_decimal(),
        converged: r.converged,
    };
    serde_json::to_string(&j).expect("plain strings always serialise")
}
