//! cfkit command line: evaluate, construct, transform, diagnose, verify and
//! compare generalized continued fractions in exact arithmetic.
//!
//! Depth convention: `--depth N` denotes the convergent f_N built from the
//! partial coefficients a_1..a_N, b_1..b_N.
//!
//! Exit codes: 0 success (and verification success), 1 verification failed,
//! 2 usage or parse error, 3 numeric error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cfkit::bench::{self, ReportFormat};
use cfkit::cf::{self, convergents, CFSpec, CoefficientSequence};
use cfkit::diagnostics::{self, RegimeReport};
use cfkit::error::ErrorClass;
use cfkit::expr::{parse_constant_expr, parse_sequence_expr};
use cfkit::hypergeom::{gauss_cf, HypParams};
use cfkit::numerics::{ConstantExpr, Rational};
use cfkit::transforms::{apply_equivalence, scaling_to_match_denominators, ScalingSequence};
use cfkit::verify::verify_to_digits;

#[derive(Parser)]
#[command(
    name = "cfkit",
    version,
    about = "Exact-arithmetic toolkit for generalized continued fractions",
    after_help = "Exit codes: 0 ok/verified, 1 not verified, 2 usage or parse error, 3 numeric error."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate convergents as exact rationals (decimals opt-in)
    Eval(EvalArgs),
    /// Construct the Gauss hypergeometric-ratio continued fraction
    Gauss(GaussArgs),
    /// Rescale a fraction by an equivalence transformation
    Transform(TransformArgs),
    /// Ratio-test diagnostics against the Worpitzky boundary
    Diagnose(DiagnoseArgs),
    /// Verify a fraction against a constant target to a decimal precision
    Verify(VerifyArgs),
    /// Error comparison of the conjecture-pi4 fraction vs the Leibniz series
    Compare(CompareArgs),
}

/// Where the continued fraction comes from: a preset, a CF-spec file, or a
/// pair of closed-form expressions.
#[derive(Args)]
struct Source {
    /// Built-in fraction: conjecture-pi4, euler-pi4 or gauss-pi4
    #[arg(long, conflicts_with_all = ["file", "a_expr", "b_expr"])]
    preset: Option<String>,
    /// CF-spec JSON file
    #[arg(long, conflicts_with_all = ["a_expr", "b_expr"])]
    file: Option<PathBuf>,
    /// Closed form for the partial numerators a_n, e.g. "(n-1)^2"
    #[arg(long = "a-expr", requires = "b_expr", allow_hyphen_values = true)]
    a_expr: Option<String>,
    /// Closed form for the partial denominators b_n, e.g. "-(2*n-1)"
    #[arg(long = "b-expr", requires = "a_expr", allow_hyphen_values = true)]
    b_expr: Option<String>,
    /// Leading term b0 as a rational (default 0); only with --a-expr/--b-expr
    #[arg(long, requires = "a_expr", allow_hyphen_values = true)]
    b0: Option<String>,
}

impl Source {
    fn resolve(&self) -> Result<CFSpec, CliError> {
        if let Some(name) = &self.preset {
            return Ok(cf::preset(name)?);
        }
        if let Some(path) = &self.file {
            return Ok(cf::file::read_file(path)?);
        }
        if let (Some(a), Some(b)) = (&self.a_expr, &self.b_expr) {
            let a_seq = CoefficientSequence::from_poly(parse_sequence_expr(a)?);
            let b_seq = CoefficientSequence::from_poly(parse_sequence_expr(b)?);
            let b0: Rational = match &self.b0 {
                Some(text) => text.parse()?,
                None => Rational::zero(),
            };
            return Ok(CFSpec::new(b0, a_seq, b_seq));
        }
        Err(CliError::Usage(
            "no continued fraction given: use --preset, --file, or --a-expr with --b-expr".into(),
        ))
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    source: Source,
    /// Convergent index N (evaluates f_N)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    depth: u32,
    /// Also print decimals truncated at this many fractional places
    #[arg(long, env = "CFKIT_DIGITS")]
    digits: Option<u32>,
    /// Print every convergent f_1..f_N
    #[arg(long)]
    show_all: bool,
    /// One JSON object per line instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GaussArgs {
    /// Hypergeometric parameter a (rational)
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Hypergeometric parameter b (rational)
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// Hypergeometric parameter c (rational; not zero or a negative integer)
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    /// Argument z (nonzero rational)
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// Negate the ratio (a_1 = -1 instead of 1)
    #[arg(long)]
    negate: bool,
    /// Explicit head length when the coefficients need parity branches
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    max_head: u64,
    /// Also evaluate the convergent at this depth
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    depth: Option<u32>,
    /// Decimal places for the evaluated convergent
    #[arg(long, env = "CFKIT_DIGITS")]
    digits: Option<u32>,
    /// Write the CF-spec file here instead of printing it
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    source: Source,
    /// Scaling sequence r_n as a closed form, e.g. "-(2*n-1)"
    #[arg(long, conflicts_with = "match_b_expr", allow_hyphen_values = true)]
    scale_expr: Option<String>,
    /// Derive the scaling that makes the denominators equal this closed form
    #[arg(long, allow_hyphen_values = true)]
    match_b_expr: Option<String>,
    /// Write the transformed CF-spec file here instead of printing it
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Args)]
struct DiagnoseArgs {
    #[command(flatten)]
    source: Source,
    /// How far to probe the ratio sequence for monotonicity
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
    probe_depth: u64,
    /// One JSON object instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Target constant, affine in pi, e.g. "-pi/4"
    #[arg(long, allow_hyphen_values = true)]
    target: String,
    /// Decimal places that must be certified correct
    #[arg(long, env = "CFKIT_DIGITS", default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    /// Give up past this depth
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    max_depth: u32,
    /// One JSON object instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CompareArgs {
    /// Depths to report, comma separated, e.g. 5,15,25
    #[arg(long, value_delimiter = ',', required = true)]
    depths: Vec<usize>,
    /// Bracket precision backing the certified errors
    #[arg(long, env = "CFKIT_DIGITS", default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Emit exact rationals p/q instead of truncated scientific notation
    #[arg(long)]
    exact: bool,
    /// Add an elapsed-time column (wall clock, non-deterministic)
    #[arg(long)]
    timing: bool,
    /// One JSON object per row instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

enum CliError {
    Lib(cfkit::Error),
    Usage(String),
    Unverified,
}

impl From<cfkit::Error> for CliError {
    fn from(e: cfkit::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn report_and_code(self) -> u8 {
        match self {
            CliError::Lib(e) => {
                eprintln!("error: {e}");
                match e.class() {
                    ErrorClass::Usage => 2,
                    ErrorClass::Numeric => 3,
                }
            }
            CliError::Usage(msg) => {
                eprintln!("error: {msg}");
                2
            }
            CliError::Unverified => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Gauss(args) => cmd_gauss(args),
        Cmd::Transform(args) => cmd_transform(args),
        Cmd::Diagnose(args) => cmd_diagnose(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Compare(args) => cmd_compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => ExitCode::from(e.report_and_code()),
    }
}

fn format_value(v: &Rational, digits: Option<u32>) -> String {
    match digits {
        Some(d) => format!("{v} ≈ {}", v.to_decimal(d)),
        None => v.to_string(),
    }
}

fn cmd_eval(args: EvalArgs) -> Result<(), CliError> {
    let cf = args.source.resolve()?;
    let depth = args.depth as usize;
    if args.show_all {
        let trace = convergents(&cf, depth)?;
        for n in 1..=depth {
            match (trace.value(n), args.json) {
                (Some(v), false) => println!("f_{n} = {}", format_value(v, args.digits)),
                (None, false) => println!("f_{n} undefined (B_{n} = 0)"),
                (value, true) => {
                    let obj = serde_json::json!({
                        "depth": n,
                        "value": value.map(|v| v.to_string()),
                        "decimal": value.and_then(|v| args.digits.map(|d| v.to_decimal(d))),
                    });
                    println!("{obj}");
                }
            }
        }
        if trace.value(depth).is_none() {
            return Err(cfkit::Error::UndefinedConvergent { depth }.into());
        }
    } else {
        let value = cf::convergent(&cf, depth)?;
        if args.json {
            let obj = serde_json::json!({
                "depth": depth,
                "value": value.to_string(),
                "decimal": args.digits.map(|d| value.to_decimal(d)),
            });
            println!("{obj}");
        } else {
            println!("{}", format_value(&value, args.digits));
        }
    }
    Ok(())
}

fn parse_rational_arg(text: &str, what: &str) -> Result<Rational, CliError> {
    text.parse().map_err(|_| {
        CliError::Usage(format!(
            "--{what}: expected a rational `p` or `p/q`, got `{text}`"
        ))
    })
}

fn cmd_gauss(args: GaussArgs) -> Result<(), CliError> {
    let a = parse_rational_arg(&args.a, "a")?;
    let b = parse_rational_arg(&args.b, "b")?;
    let c = parse_rational_arg(&args.c, "c")?;
    let z = parse_rational_arg(&args.z, "z")?;
    let params = HypParams::new(a, b, c)?;
    let spec = gauss_cf(&params, &z, args.negate, args.max_head)?;
    emit_or_print(&spec, args.emit.as_deref())?;
    if let Some(depth) = args.depth {
        let value = cf::convergent(&spec, depth as usize)?;
        println!("f_{depth} = {}", format_value(&value, args.digits));
    }
    Ok(())
}

fn emit_or_print(spec: &CFSpec, emit: Option<&Path>) -> Result<(), CliError> {
    match emit {
        Some(path) => {
            cf::file::write_file(spec, path)?;
            println!("wrote {}", path.display());
        }
        None => print!("{}", cf::file::to_json(spec)),
    }
    Ok(())
}

fn cmd_transform(args: TransformArgs) -> Result<(), CliError> {
    let cf_in = args.source.resolve()?;
    let scaling = match (&args.scale_expr, &args.match_b_expr) {
        (Some(expr), None) => {
            ScalingSequence::new(CoefficientSequence::from_poly(parse_sequence_expr(expr)?))
        }
        (None, Some(expr)) => {
            let target = CoefficientSequence::from_poly(parse_sequence_expr(expr)?);
            scaling_to_match_denominators(&cf_in, &target)?
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --scale-expr or --match-b-expr is required".into(),
            ))
        }
    };
    let cf_out = apply_equivalence(&cf_in, &scaling)?;

    println!("n  a_n -> a'_n  b_n -> b'_n");
    for n in 1..=5u64 {
        println!(
            "{n}  {} -> {}  {} -> {}",
            cf_in.a.eval(n)?,
            cf_out.a.eval(n)?,
            cf_in.b.eval(n)?,
            cf_out.b.eval(n)?,
        );
    }
    emit_or_print(&cf_out, args.emit.as_deref())
}

fn diagnose_line(report: &RegimeReport) -> String {
    let mut line = format!("limit {}, {}", report.limit, report.regime);
    if let Some(m) = report.rho_monotone_from {
        line.push_str(&format!(", rho decreasing from n={m}"));
    }
    if report.abs_b_sum_diverges {
        line.push_str(", sum|b| diverges");
    }
    line
}

fn cmd_diagnose(args: DiagnoseArgs) -> Result<(), CliError> {
    let cf = args.source.resolve()?;
    let report = diagnostics::classify(&cf, args.probe_depth)?;
    if args.json {
        let obj = serde_json::json!({
            "limit": report.limit.to_string(),
            "regime": report.regime.to_string(),
            "rho_monotone_from": report.rho_monotone_from,
            "abs_b_sum_diverges": report.abs_b_sum_diverges,
        });
        println!("{obj}");
    } else {
        println!("{}", diagnose_line(&report));
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let cf = args.source.resolve()?;
    let expr: ConstantExpr = parse_constant_expr(&args.target)?;
    let verdict = verify_to_digits(&cf, &expr, args.digits, args.max_depth as usize)?;

    if args.json {
        let obj = serde_json::json!({
            "verified": verdict.verified,
            "achieved_decimals": verdict.achieved_decimals,
            "requested_decimals": verdict.requested_decimals,
            "depth_used": verdict.depth_used,
            "target": expr.to_string(),
        });
        println!("{obj}");
    } else {
        let shown = if verdict.achieved_decimals == u32::MAX {
            "exact".to_string()
        } else {
            verdict.achieved_decimals.to_string()
        };
        println!(
            "verified: {}, achieved {shown} decimals (requested {}) at depth {}",
            verdict.verified, verdict.requested_decimals, verdict.depth_used
        );
    }
    if verdict.verified {
        Ok(())
    } else {
        Err(CliError::Unverified)
    }
}

fn cmd_compare(args: CompareArgs) -> Result<(), CliError> {
    if args.depths.contains(&0) {
        return Err(CliError::Usage("depths must be positive".into()));
    }
    let cf = cf::preset("conjecture-pi4")?;
    let expr = ConstantExpr::neg_quarter_pi();
    let rows = if args.timing {
        bench::compare_table_timed(&cf, &expr, &args.depths, args.digits)?
    } else {
        bench::compare_table(&cf, &expr, &args.depths, args.digits)?
    };
    if args.json {
        for row in &rows {
            let obj = serde_json::json!({
                "n": row.n,
                "series_error": bench::sci3(&row.series_error),
                "series_error_exact": row.series_error.to_string(),
                "cf_error": bench::sci3(&row.cf_error),
                "cf_error_exact": row.cf_error.to_string(),
                "error_ratio": bench::sci3(&row.error_ratio),
                "cf_decimals": row.cf_decimals,
                "elapsed_ms": row.elapsed_ms,
            });
            println!("{obj}");
        }
        return Ok(());
    }
    let format = match args.format {
        Format::Text => ReportFormat::Text,
        Format::Csv => ReportFormat::Csv,
    };
    print!("{}", bench::render_report(&rows, format, args.exact));
    Ok(())
}
