//! Command-line front end.
//!
//! Exit codes: 0 when a verdict or value was produced (an obstruction is a
//! verdict, not a failure), 1 on usage or parse errors, 2 when an internal
//! invariant is violated.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::algebra::GComplex;
use crate::boundary::BPoly2;
use crate::certifier::certify;
use crate::error::{Error, ParseError};
use crate::expr::{parse_poly, parse_poly2};
use crate::moment::{moment, moment_cutoff, moment_symbolic, monomial_moment, monomial_moment_by_expansion};
use crate::numeric::{disc_fourier_test, interior_center_demo_with, moment_quad, QuadConfig, DEFAULT_NODES};
use crate::report::{IdentityRow, MomentEntry, NumericSection, Report, Status};
use crate::slicer::{certify_nd_with, default_planes, BPolyN, SlicePlane};

pub const NODES_ENV: &str = "HOLEXT_NODES";

#[derive(Debug, Parser)]
#[command(name = "holext", version, about = "Certify holomorphic extension of polynomial boundary data on the sphere")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Reject inputs whose weighted degree exceeds this bound.
    #[arg(long, global = true, default_value_t = 32)]
    max_degree: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ExprArg {
    /// Polynomial in z1..zn and ~z1..~zn; read from stdin when omitted or "-".
    #[arg(short = 'e', long = "expr", allow_hyphen_values = true)]
    expr: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the boundary data extends holomorphically to the ball.
    Check {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(short = 'n', long = "dim", default_value_t = 2)]
        dim: usize,
    },
    /// Exact moment mu(a, N), with G(a, N) = 2*pi*i*mu.
    Moment {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: String,
        #[arg(short = 'N', default_value_t = 0)]
        n: u32,
    },
    /// Sweep of moments over N; symbolic in a unless -a is given.
    Moments {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: Option<String>,
        /// Largest N (default: the last N that can be nonzero).
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Restrict to 2-planes through 0 and the pole, certify each, check gluing.
    Slice {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(short = 'n', long = "dim")]
        dim: usize,
        /// Plane direction as comma-separated Gaussian rationals, e.g.
        /// "3/5,4/5i,0"; repeatable. Defaults to a fixed 12-plane family.
        #[arg(long = "plane", allow_hyphen_values = true)]
        planes: Vec<String>,
    },
    /// Floating-point cross-check of an exact moment and a per-disc Fourier test.
    Quad {
        #[command(flatten)]
        expr: ExprArg,
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: String,
        #[arg(short = 'N', default_value_t = 0)]
        n: u32,
        #[arg(long, env = NODES_ENV, default_value_t = DEFAULT_NODES)]
        nodes: usize,
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
    /// Built-in demonstrations.
    Demo {
        #[arg(value_enum)]
        which: DemoKind,
        #[arg(long, env = NODES_ENV, default_value_t = 64)]
        nodes: usize,
        /// Largest h, k, m, N in the identity table.
        #[arg(long, default_value_t = 3)]
        max: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DemoKind {
    InteriorCenter,
    BinomialIdentityTable,
}

/// Result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(format!("parse error {e}"))
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Internal(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("internal error: {msg}\n") },
    }
}

fn read_expr(arg: &ExprArg, stdin: &mut dyn Read) -> Result<String, Failure> {
    match arg.expr.as_deref() {
        Some(text) if text != "-" => Ok(text.to_string()),
        _ => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            Ok(buf.trim().to_string())
        }
    }
}

fn guard_degree(degree: Option<u32>, limit: u32) -> Result<(), Failure> {
    match degree {
        Some(d) if d > limit => Err(Error::DegreeLimit { degree: d, limit }.into()),
        _ => Ok(()),
    }
}

fn load2(cli: &Cli, arg: &ExprArg, stdin: &mut dyn Read) -> Result<BPoly2, Failure> {
    let f = parse_poly2(&read_expr(arg, stdin)?)?;
    guard_degree(f.weighted_degree().ok(), cli.max_degree)?;
    Ok(f)
}

fn loadn(cli: &Cli, arg: &ExprArg, dim: usize, stdin: &mut dyn Read) -> Result<BPolyN, Failure> {
    if dim < 2 {
        return Err(Failure::Usage("dimension must be at least 2".into()));
    }
    let f = parse_poly(&read_expr(arg, stdin)?, dim)?;
    guard_degree(f.weighted_degree().ok(), cli.max_degree)?;
    Ok(f)
}

fn parse_gaussian(text: &str) -> Result<GComplex, Failure> {
    text.parse::<GComplex>()
        .map_err(|e| Failure::Usage(format!("bad Gaussian rational {text:?}: {}", e.message)))
}

fn parse_plane(text: &str, dim: usize) -> Result<SlicePlane, Failure> {
    let v = text
        .split(',')
        .map(parse_gaussian)
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != dim {
        return Err(Error::Dimension { expected: dim, got: v.len() }.into());
    }
    Ok(SlicePlane::new(v)?)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let report = match &cli.command {
        Command::Check { expr, dim } if *dim == 2 => {
            let f = load2(cli, expr, stdin)?;
            let cert = certify(&f)?;
            Report::from_certificate(&cert).with_input(f.to_string())
        }
        Command::Check { expr, dim } => {
            let f = loadn(cli, expr, *dim, stdin)?;
            let planes = default_planes(*dim);
            let cert = certify_nd_with(&f, &planes)?;
            Report::from_nd_certificate(&cert, &planes, &f.normal_form()).with_input(f.to_string())
        }
        Command::Slice { expr, dim, planes } => {
            let f = loadn(cli, expr, *dim, stdin)?;
            let planes = if planes.is_empty() {
                default_planes(*dim)
            } else {
                planes
                    .iter()
                    .map(|p| parse_plane(p, *dim))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let cert = certify_nd_with(&f, &planes)?;
            Report::from_nd_certificate(&cert, &planes, &f.normal_form()).with_input(f.to_string())
        }
        Command::Moment { expr, a, n } => {
            let f = load2(cli, expr, stdin)?;
            let a = parse_gaussian(a)?;
            let mu = moment(&f, &a, *n).mu;
            let mut r = Report::new(Status::Computed).with_input(f.to_string());
            r.moments = Some(vec![MomentEntry {
                n: *n,
                a: Some(a.to_string()),
                mu: Some(mu.to_string()),
                symbolic: None,
                cleared_power: None,
            }]);
            r
        }
        Command::Moments { expr, a, max_n } => {
            let f = load2(cli, expr, stdin)?;
            let a = a.as_deref().map(parse_gaussian).transpose()?;
            let last = max_n.unwrap_or_else(|| moment_cutoff(&f).saturating_sub(1));
            let entries: Vec<MomentEntry> = (0..=last)
                .into_par_iter()
                .map(|n| match &a {
                    Some(a) => MomentEntry {
                        n,
                        a: Some(a.to_string()),
                        mu: Some(moment(&f, a, n).mu.to_string()),
                        symbolic: None,
                        cleared_power: None,
                    },
                    None => {
                        let sm = moment_symbolic(&f, n);
                        MomentEntry {
                            n,
                            a: None,
                            mu: None,
                            symbolic: Some(sm.poly.to_string()),
                            cleared_power: Some(sm.cleared_power),
                        }
                    }
                })
                .collect();
            let mut r = Report::new(Status::Computed).with_input(f.to_string());
            r.moments = Some(entries);
            r
        }
        Command::Quad { expr, a, n, nodes, tolerance } => {
            let f = load2(cli, expr, stdin)?;
            let a_exact = parse_gaussian(a)?;
            let a_float = a_exact.to_complex64();
            let cfg = QuadConfig::new(*nodes, *tolerance);
            let exact = moment(&f, &a_exact, *n).mu;
            let quad = moment_quad(&f, a_float, *n, &cfg)?;
            let fourier = disc_fourier_test(&f, a_float, &cfg)?;
            let err = (quad - exact.to_complex64()).norm();
            let mut r = Report::new(Status::Computed).with_input(f.to_string());
            r.numeric = Some(NumericSection {
                nodes: *nodes,
                tolerance: *tolerance,
                a: Some([a_float.re, a_float.im]),
                n: Some(*n),
                mu_quad: Some([quad.re, quad.im]),
                mu_exact: Some(exact.to_string()),
                abs_error: Some(err),
                max_negative_mode: Some(fourier),
                within_tolerance: Some(err <= *tolerance),
            });
            r
        }
        Command::Demo { which: DemoKind::InteriorCenter, nodes, .. } => {
            let cfg = QuadConfig::new(*nodes, 1e-12);
            let demo = interior_center_demo_with(20, &cfg)?;
            Report::from_demo(&demo, cfg.tolerance)
        }
        Command::Demo { which: DemoKind::BinomialIdentityTable, max, .. } => {
            let rows = identity_table(*max);
            if !cli.json {
                return Ok(render_table(&rows));
            }
            let mut r = Report::new(Status::Computed);
            r.table = Some(rows);
            r
        }
    };
    if cli.json {
        Ok(report.to_json() + "\n")
    } else {
        Ok(render_text(&report))
    }
}

fn identity_table(max: u32) -> Vec<IdentityRow> {
    let mut rows = Vec::new();
    for h in 0..=max {
        for k in 0..=max {
            for m in 0..=max {
                for n in 0..=max {
                    let closed = monomial_moment(h, k, m, n);
                    let oracle = monomial_moment_by_expansion(h, k, m, n);
                    rows.push(IdentityRow {
                        h,
                        k,
                        m,
                        n,
                        agree: closed == oracle,
                        closed_form: closed.to_string(),
                        oracle: oracle.to_string(),
                    });
                }
            }
        }
    }
    rows
}

fn render_table(rows: &[IdentityRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>3} {:>3} {:>3} {:>3} {:>12} {:>12}  agree", "h", "k", "m", "N", "closed", "oracle");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>3} {:>3} {:>12} {:>12}  {}",
            r.h,
            r.k,
            r.m,
            r.n,
            r.closed_form,
            r.oracle,
            if r.agree { "yes" } else { "NO" }
        );
    }
    let agreed = rows.iter().filter(|r| r.agree).count();
    let _ = writeln!(out, "{agreed}/{} rows agree", rows.len());
    out
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    if let Some(input) = &r.input {
        let _ = writeln!(out, "input: {input}");
    }
    match r.status {
        Status::Extends => {
            let _ = writeln!(out, "status: extends");
            if let Some(ext) = &r.extension {
                let _ = writeln!(out, "extension: {ext}");
            }
        }
        Status::Obstructed => {
            let _ = writeln!(out, "status: obstructed");
            let mut fields = Vec::new();
            if let Some(w) = &r.witness {
                fields.push(format!("witness={w}"));
            }
            if let Some(v) = r.l_o {
                fields.push(format!("l_o={v}"));
            }
            if let Some(v) = r.k_o {
                fields.push(format!("k_o={v}"));
            }
            if let Some(v) = r.n {
                fields.push(format!("N={v}"));
            }
            if let Some(v) = r.frequency {
                fields.push(format!("frequency={v}"));
            }
            if let Some(v) = &r.monomial {
                fields.push(format!("monomial={v}"));
            }
            if let Some(v) = &r.coefficient {
                fields.push(format!("coefficient={v}"));
            }
            let _ = writeln!(out, "{}", fields.join(" "));
        }
        Status::Computed => {}
    }
    for m in r.moments.iter().flatten() {
        match (&m.mu, &m.symbolic) {
            (Some(mu), _) => {
                let _ = writeln!(out, "N={} a={} mu={mu}", m.n, m.a.as_deref().unwrap_or("?"));
            }
            (None, Some(sym)) => {
                let _ = writeln!(out, "N={} (1+|a|^2)^{} * mu = {sym}", m.n, m.cleared_power.unwrap_or(0));
            }
            _ => {}
        }
    }
    if let Some(s) = &r.slices {
        for (i, p) in s.planes.iter().enumerate() {
            let status = match p.status {
                Status::Extends => "extends",
                _ => "obstructed",
            };
            let _ = writeln!(out, "plane {i} [{}]: {status}  slice = {}", p.direction.join(", "), p.restriction);
        }
        let _ = writeln!(out, "gluing: {}", s.gluing);
        if let Some(c) = &s.common_restriction {
            let _ = writeln!(out, "common restriction to L: {c}");
        }
        let _ = writeln!(out, "slices consistent with global verdict: {}", s.consistent_with_global);
    }
    if let Some(nm) = &r.numeric {
        let _ = writeln!(out, "nodes: {}", nm.nodes);
        if let Some(e) = &nm.mu_exact {
            let _ = writeln!(out, "mu (exact): {e}");
        }
        if let Some([re, im]) = nm.mu_quad {
            let _ = writeln!(out, "mu (quadrature): {re:+.15e} {im:+.15e}i");
        }
        if let Some(err) = nm.abs_error {
            let _ = writeln!(out, "abs error: {err:.3e} (tolerance {:.1e})", nm.tolerance);
        }
        if let Some(f) = nm.max_negative_mode {
            let _ = writeln!(out, "max negative Fourier mode on the disc: {f:.3e}");
        }
    }
    if let Some(d) = &r.demo {
        let _ = writeln!(out, "lines through the origin (f = |z1|^2):");
        for l in &d.lines {
            let _ = writeln!(
                out,
                "  v = ({}, {})  restriction = {}  max negative mode = {:.1e}  {}",
                l.direction[0],
                l.direction[1],
                l.restriction,
                l.max_negative_mode,
                if l.extends { "extends" } else { "does not extend" }
            );
        }
        let _ = writeln!(out, "all lines extend: {}", d.lines_extend);
        let _ = writeln!(
            out,
            "disc through z_o at a = {}: mu = {} (quadrature {:+.15e})",
            d.disc_a, d.disc_moment, d.disc_moment_quad[0]
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_parsing() {
        let p = parse_plane("3/5,4/5i,0", 3).unwrap();
        assert_eq!(p.direction()[1], GComplex::from_parts((0, 1), (4, 5)));
        assert!(matches!(parse_plane("1,0", 3), Err(Failure::Usage(_))));
        assert!(matches!(parse_plane("1,1,0", 3), Err(Failure::Usage(_))));
        assert!(matches!(parse_plane("1,0,x", 3), Err(Failure::Usage(_))));
    }

    #[test]
    fn invariant_errors_map_to_exit_two() {
        assert!(matches!(Failure::from(Error::Invariant("x".into())), Failure::Internal(_)));
        assert!(matches!(Failure::from(Error::UndefinedDegree), Failure::Usage(_)));
    }

    #[test]
    fn identity_table_agrees() {
        let rows = identity_table(2);
        assert_eq!(rows.len(), 81);
        assert!(rows.iter().all(|r| r.agree));
        let text = render_table(&rows);
        assert!(text.ends_with("81/81 rows agree\n"));
    }

    #[test]
    fn degree_guard() {
        assert!(guard_degree(Some(5), 4).is_err());
        assert!(guard_degree(Some(4), 4).is_ok());
        assert!(guard_degree(None, 0).is_ok());
    }
}
