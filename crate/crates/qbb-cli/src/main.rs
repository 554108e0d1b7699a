//! `qbb`: tables of q-Bernoulli numbers, polynomials, q-Bessel zeros and
//! connection coefficients, and the identity verification suite.
//!
//! Exit codes: 0 success, 1 verification failure or numerical error,
//! 2 invalid arguments, 3 an unconverged residue series.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qbb::error::Error;
use qbb::io::{encode_connection_expansion, encode_identity_reports, encode_zero_table};
use qbb::params::QParams;
use qbb::qasym::beta_residue_tol;
use qbb::qbernoulli::{beta3_numbers, beta_numbers, bernoulli_poly, BetaMethod, Family, IdentityReport};
use qbb::qbessel::{BesselKind, ZeroCache};
use qbb::qconnect::{connection_coeffs_with, Basis, ConnectionOptions, LaguerrePrefactor, LegendreForm};
use qbb::real::Real;
use qbb::verify::{parse_suite, summarize, Grid, Suite};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "qbb", version, about = "q-Bernoulli polynomials from Jackson q-Bessel functions")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Common {
    /// The base q, 0 < q < 1, as a decimal string.
    #[arg(long, global = true, default_value = "0.5")]
    q: String,
    /// The order alpha > -1.
    #[arg(long, global = true, default_value = "0.5", allow_hyphen_values = true)]
    alpha: String,
    /// Working precision in bits.
    #[arg(long, global = true, env = "QBB_PRECISION_BITS", default_value_t = 256,
          value_parser = clap::value_parser!(u32).range(16..=1 << 16))]
    precision_bits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Do not read or write the zero-table cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    RecQ1902,
    RecYy,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// beta_n (families 1, 2) or beta^(3)_n (family 3) for n = 0..=N.
    Numbers {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=3))]
        family: i64,
        #[arg(short = 'N', value_parser = clap::value_parser!(u32).range(0..=4096))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::RecQ1902)]
        method: Method,
    },
    /// Monomial coefficients of B^(k)_{n,alpha}(x;q).
    Poly {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=3))]
        family: i64,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(0..=4096))]
        n: u32,
    },
    /// Positive zeros of the modified q-Bessel function at base q^2.
    Zeros {
        #[arg(long, value_parser = clap::value_parser!(i64).range(2..=3))]
        kind: i64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        count: u32,
    },
    /// Coefficients of B^(k)_{n,alpha} in a q-Laguerre or little q-Legendre basis.
    Connect {
        #[arg(long)]
        basis: String,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..=3))]
        family: i64,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(0..=512))]
        n: u32,
        /// Use the constants exactly as displayed in the source formulas.
        #[arg(long)]
        as_printed: bool,
    },
    /// Residue-series beta_n over the first zeros against the recurrence.
    Asym {
        #[arg(short = 'N', default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=200))]
        n: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=64))]
        zeros: u32,
        /// A sum has converged when its last term is below `tol * |sum|`.
        #[arg(long, default_value = "1e-12")]
        tol: String,
    },
    /// Run identity and oracle checks; one report per point.
    Verify {
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = GridArg::Default)]
        grid: GridArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GridArg {
    /// Built-in grids of every check.
    Default,
    /// Only the `--q`/`--alpha` pair.
    Custom,
}

/// A command failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Pole { .. } | Error::Parse(_) | Error::UnknownIdentity(_) => 2,
            _ => 1,
        };
        Fail(code, e.to_string())
    }
}

fn bad(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

/// A column-oriented table rendered as JSON or quoted CSV.
struct Table {
    command: &'static str,
    meta: Value,
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "params": self.meta,
                    "columns": self.columns,
                    "rows": self.rows,
                });
                serde_json::to_string_pretty(&v).expect("strings always serialise") + "\n"
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Always).from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
        }
    }
}

struct Ctx {
    p: QParams,
    alpha: Real,
    cache: ZeroCache,
    format: Format,
}

impl Ctx {
    fn new(c: &Common) -> Result<Self, Fail> {
        let p = QParams::parse(&c.q, c.precision_bits).map_err(|e| bad(format!("--q: {e}")))?;
        let alpha = Real::parse(&c.alpha, c.precision_bits).map_err(|e| bad(format!("--alpha: {e}")))?;
        if !(alpha > -1) {
            return Err(bad(format!("--alpha must exceed -1, got {}", c.alpha)));
        }
        let cache = if c.no_cache { ZeroCache::disabled() } else { ZeroCache::from_env() };
        Ok(Ctx { p, alpha, cache, format: c.format })
    }

    fn meta(&self) -> Value {
        json!({
            "q": self.p.q().to_decimal(),
            "alpha": self.alpha.to_decimal(),
            "precision_bits": self.p.prec(),
        })
    }
}

fn family(k: i64) -> Family {
    Family::from_index(k).expect("clap restricts the range")
}

fn numbers(ctx: &Ctx, k: i64, n: usize, method: Method) -> Result<String, Fail> {
    let method = match method {
        Method::RecQ1902 => BetaMethod::RecQ1902,
        Method::RecYy => BetaMethod::RecYY,
    };
    let seq = if k == 3 { beta3_numbers } else { beta_numbers }(&ctx.alpha, &ctx.p, n, method)?;
    let rows = seq.values.iter().enumerate().map(|(i, v)| vec![i.to_string(), v.to_decimal()]).collect();
    let mut meta = ctx.meta();
    meta["family"] = json!(k);
    Ok(Table { command: "numbers", meta, columns: vec!["n", "value"], rows }.render(ctx.format))
}

fn poly(ctx: &Ctx, k: i64, n: usize) -> Result<String, Fail> {
    let poly = bernoulli_poly(family(k), n, &ctx.alpha, &ctx.p)?;
    let rows = poly.coeffs().iter().enumerate().map(|(j, c)| vec![j.to_string(), c.to_decimal()]).collect();
    let mut meta = ctx.meta();
    meta["family"] = json!(k);
    meta["n"] = json!(n);
    Ok(Table { command: "poly", meta, columns: vec!["power", "coeff"], rows }.render(ctx.format))
}

fn zeros(ctx: &Ctx, kind: i64, count: usize) -> Result<String, Fail> {
    let kind = if kind == 2 { BesselKind::J2 } else { BesselKind::J3 };
    let t = ctx.cache.zeros(kind, &ctx.alpha, &ctx.p, count)?;
    Ok(match ctx.format {
        Format::Json => encode_zero_table(&t) + "\n",
        Format::Csv => {
            let rows = t
                .zeros
                .iter()
                .zip(&t.dmod)
                .enumerate()
                .map(|(i, (z, d))| vec![(i + 1).to_string(), z.to_decimal(), d.to_decimal()])
                .collect();
            let mut meta = ctx.meta();
            meta["kind"] = json!(kind.name());
            Table { command: "zeros", meta, columns: vec!["m", "zero", "dmod"], rows }.render(Format::Csv)
        }
    })
}

fn connect(ctx: &Ctx, basis: &str, k: i64, n: usize, as_printed: bool) -> Result<String, Fail> {
    let basis = Basis::from_name(basis).ok_or_else(|| bad(format!("unknown basis `{basis}`")))?;
    let opts = if as_printed {
        ConnectionOptions { laguerre: LaguerrePrefactor::AsPrinted, legendre: LegendreForm::AsPrinted }
    } else {
        ConnectionOptions::default()
    };
    let e = connection_coeffs_with(basis, family(k), n, &ctx.alpha, &ctx.p, opts)?;
    Ok(match ctx.format {
        Format::Json => encode_connection_expansion(&e) + "\n",
        Format::Csv => {
            let rows = e.coeffs.iter().enumerate().map(|(j, c)| vec![j.to_string(), c.to_decimal()]).collect();
            let mut meta = ctx.meta();
            meta["basis"] = json!(basis.name());
            Table { command: "connect", meta, columns: vec!["k", "coeff"], rows }.render(Format::Csv)
        }
    })
}

fn asym(ctx: &Ctx, nmax: usize, count: usize, tol: &str) -> Result<(String, bool), Fail> {
    let tol = Real::parse(tol, 64).map_err(|e| bad(format!("--tol: {e}")))?;
    if !(tol > 0 && tol < 1) {
        return Err(bad("--tol must lie in (0,1)"));
    }
    let table = ctx.cache.zeros(BesselKind::J2, &ctx.alpha, &ctx.p, count)?;
    let beta = beta_numbers(&ctx.alpha, &ctx.p, nmax, BetaMethod::RecQ1902)?.values;
    let mut rows = Vec::new();
    let mut all_converged = true;
    for (n, b) in beta.iter().enumerate().skip(1) {
        let r = beta_residue_tol(&table, n, &ctx.p, &tol)?;
        all_converged &= r.converged;
        let scale = if b.is_zero() { Real::one(64) } else { b.abs() };
        let err = ((&r.value - b).abs() / scale).with_prec(64);
        rows.push(vec![
            n.to_string(),
            r.parity.name().to_string(),
            r.value.to_decimal(),
            b.to_decimal(),
            err.to_sci(6),
            r.last_term_magnitude.to_sci(6),
            r.converged.to_string(),
        ]);
    }
    let mut meta = ctx.meta();
    meta["zeros_used"] = json!(count);
    meta["tol"] = json!(tol.to_decimal());
    let columns = vec!["n", "parity", "residue", "recurrence", "rel_error", "last_term", "converged"];
    Ok((Table { command: "asym", meta, columns, rows }.render(ctx.format), all_converged))
}

fn verify(ctx: &Ctx, common: &Common, suite: &str, grid: GridArg) -> Result<(String, Vec<IdentityReport>), Fail> {
    let items = parse_suite(suite)?;
    let grid = match grid {
        GridArg::Default => Grid::Default,
        GridArg::Custom => Grid::Custom { q: ctx.p.q().clone(), alpha: ctx.alpha.clone() },
    };
    let reports = Suite::new(common.precision_bits, grid, ctx.cache.clone()).run(&items)?;
    let text = match ctx.format {
        Format::Json => encode_identity_reports(&reports),
        Format::Csv => {
            let opt = |v: &Option<Real>| v.as_ref().map(Real::to_decimal).unwrap_or_default();
            let rows = reports
                .iter()
                .map(|r| {
                    let pt = &r.point;
                    vec![
                        r.id.clone(),
                        pt.k.map(|k| k.to_string()).unwrap_or_default(),
                        pt.n.map(|n| n.to_string()).unwrap_or_default(),
                        opt(&pt.alpha),
                        opt(&pt.q),
                        opt(&pt.x),
                        opt(&pt.a),
                        r.residual.to_decimal(),
                        r.tolerance.to_decimal(),
                        r.pass.to_string(),
                    ]
                })
                .collect();
            let columns = vec!["id", "k", "n", "alpha", "q", "x", "a", "residual", "tolerance", "pass"];
            Table { command: "verify", meta: ctx.meta(), columns, rows }.render(Format::Csv)
        }
    };
    Ok((text, reports))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Fail> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Fail(1, format!("writing {}: {e}", path.display()))),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(|e| Fail(1, format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<u8, Fail> {
    let ctx = Ctx::new(&cli.common)?;
    let (text, code) = match cli.cmd {
        Cmd::Numbers { family, n, method } => (numbers(&ctx, family, n as usize, method)?, 0),
        Cmd::Poly { family, n } => (poly(&ctx, family, n as usize)?, 0),
        Cmd::Zeros { kind, count } => (zeros(&ctx, kind, count as usize)?, 0),
        Cmd::Connect { basis, family, n, as_printed } => (connect(&ctx, &basis, family, n as usize, as_printed)?, 0),
        Cmd::Asym { n, zeros, tol } => {
            let (text, converged) = asym(&ctx, n as usize, zeros as usize, &tol)?;
            if !converged {
                eprintln!("residue series did not converge for every n");
            }
            (text, if converged { 0 } else { 3 })
        }
        Cmd::Verify { suite, grid } => {
            let (text, reports) = verify(&ctx, &cli.common, &suite, grid)?;
            let (pass, fail) = summarize(&reports);
            for r in reports.iter().filter(|r| !r.pass) {
                eprintln!("FAIL {} residual {} > {}", r.id, r.residual.to_sci(4), r.tolerance.to_sci(4));
            }
            eprintln!("verify: {pass} passed, {fail} failed");
            (text, if fail == 0 { 0 } else { 1 })
        }
    };
    emit(&cli.common.out, &text)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
