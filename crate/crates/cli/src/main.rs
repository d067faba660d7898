//! rookcalc: exact generalized q-Stirling / Bell calculator and identity
//! verifier.
//!
//! Exit codes: 0 success (and all identities hold), 1 identity failures,
//! 2 cross-check mismatch, 3 invalid parameters or unknown identity,
//! 4 enumeration size cap exceeded.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use rookcalc_core::identities::{run_sweep, IdentityReport, SweepSpec, IDENTITY_NAMES};
use rookcalc_core::rook::{Board, PreWeights, Rule};
use rookcalc_core::stirling::{bell_poly, bell_type2, stirling, stirling_cd, stirling_type2};
use rookcalc_core::{BigRational, LaurentPolynomial};
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "rookcalc",
    version,
    about = "Exact generalized q-Stirling and Bell numbers via rook placements, with identity verification",
    after_help = "The environment variable ROOKCALC_THREADS bounds the worker threads used by `verify`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a triangle of generalized Stirling values
    Table(TableArgs),
    /// Print Bell values for n = 0..n-max
    Bell(BellArgs),
    /// Sum rook placement weights on a board by direct enumeration
    Oracle(OracleArgs),
    /// Check identities over parameter sweeps
    Verify(VerifyArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Table family: s, cd or type2
    #[arg(long)]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<i64>,
    /// Largest row to render (max 20, or 8 with --cross-check)
    #[arg(long = "n-max")]
    n_max: u32,
    /// Evaluate at q = RATIONAL instead of printing polynomials
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Output format: pretty, csv or json
    #[arg(long, default_value = "pretty")]
    format: String,
    /// Re-derive every entry by rook enumeration; exit 2 on any mismatch
    #[arg(long = "cross-check")]
    cross_check: bool,
    /// Write to a file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BellArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<i64>,
    /// Largest index to print (max 20)
    #[arg(long = "n-max")]
    n_max: u32,
    /// Evaluation point for the polynomial variable x
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    x: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, default_value = "pretty")]
    format: String,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Board spec: word=<UV-string>;pre=<uniform int | j,b=v;...>
    #[arg(long)]
    board: String,
    /// Number of rooks to place
    #[arg(long)]
    rooks: u64,
    /// Increment rule: same-row or bottom-shift
    #[arg(long, default_value = "same-row")]
    rule: String,
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name, or "all" for the whole validated suite
    #[arg(long)]
    identity: String,
    /// Named range preset (only "desk")
    #[arg(long)]
    preset: Option<String>,
    #[arg(long = "n-max")]
    n_max: Option<u32>,
    #[arg(long = "m-max")]
    m_max: Option<u32>,
    /// Cap on n + m
    #[arg(long = "nm-max")]
    nm_max: Option<u32>,
    /// Ranges are written lo..hi (inclusive) or a single value
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Range of x evaluation points
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, default_value = "pretty")]
    format: String,
    #[arg(long)]
    output: Option<PathBuf>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> CliError {
        CliError::new(3, message)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::new(3, format!("io error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(3)
                }
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Bell(args) => cmd_bell(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout()),
    })
}

fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::invalid(format!("invalid rational {text:?}"));
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|_| bad())?;
    let denom = BigInt::from_str(denom).map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(CliError::invalid("rational denominator must be nonzero"));
    }
    Ok(BigRational::new(numer, denom))
}

fn parse_range(text: &str) -> Result<(i64, i64), CliError> {
    let bad = || {
        CliError::invalid(format!(
            "invalid range {text:?}; expected lo..hi or a value"
        ))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let v: i64 = text.trim().parse().map_err(|_| bad())?;
        Ok((v, v))
    }
}

fn require(value: Option<i64>, flag: &str, kind: &str) -> Result<i64, CliError> {
    value.ok_or_else(|| CliError::invalid(format!("--{flag} is required for kind {kind}")))
}

fn render_value(p: &LaurentPolynomial, q: &Option<BigRational>) -> Result<String, CliError> {
    match q {
        Some(point) => {
            let v = p
                .eval_at(point)
                .map_err(|e| CliError::invalid(format!("evaluation failed: {e}")))?;
            Ok(v.to_string())
        }
        None => Ok(p.to_string()),
    }
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    let cap = if args.cross_check { 8 } else { 20 };
    if args.n_max > cap {
        return Err(CliError::invalid(format!(
            "--n-max {} exceeds the cap of {cap}{}",
            args.n_max,
            if args.cross_check {
                " with --cross-check"
            } else {
                ""
            }
        )));
    }
    let q = args.q.as_deref().map(parse_rational).transpose()?;
    type ValueFn = Box<dyn Fn(u32, i64) -> LaurentPolynomial>;
    type BoardFn = Box<dyn Fn(u32) -> Board>;
    // parameter bindings and the matching board for cross-checks
    let (params, value, board): (Vec<(&str, i64)>, ValueFn, BoardFn) = match args.kind.as_str() {
        "s" => {
            let s = require(args.s, "s", "s")?;
            (
                vec![("s", s)],
                Box::new(move |n, k| stirling(n, k, s)),
                Box::new(Board::staircase),
            )
        }
        "cd" => {
            let s = require(args.s, "s", "cd")?;
            let c = require(args.c, "c", "cd")?;
            let d = require(args.d, "d", "cd")?;
            (
                vec![("s", s), ("c", c), ("d", d)],
                Box::new(move |n, k| stirling_cd(n, k, s, c, d)),
                Box::new(move |n| Board::staircase_cd(n, c, d)),
            )
        }
        "type2" => {
            let alpha = require(args.alpha, "alpha", "type2")?;
            let beta = require(args.beta, "beta", "type2")?;
            let rho = require(args.rho, "rho", "type2")?;
            (
                vec![("alpha", alpha), ("beta", beta), ("rho", rho)],
                Box::new(move |n, k| stirling_type2(n, k, alpha, beta, rho)),
                Box::new(move |n| Board::staircase_cd(n, beta - alpha, -rho)),
            )
        }
        other => return Err(CliError::invalid(format!("unknown table kind {other:?}"))),
    };
    let rule_s = match args.kind.as_str() {
        "type2" => 1 - args.beta.unwrap(),
        _ => args.s.unwrap(),
    };
    let mut rows: Vec<Vec<LaurentPolynomial>> = Vec::new();
    for n in 0..=args.n_max {
        let row: Vec<LaurentPolynomial> = (0..=i64::from(n)).map(|k| value(n, k)).collect();
        if args.cross_check {
            let b = board(n);
            for (k, entry) in row.iter().enumerate() {
                let rooks = n as usize - k;
                let direct = b.rook_sum(rooks, Rule::SameRow, rule_s);
                if direct != *entry {
                    return Err(CliError::new(
                        2,
                        format!(
                            "cross-check mismatch at n={n} k={k}: recurrence {entry}, enumeration {direct}"
                        ),
                    ));
                }
            }
        }
        rows.push(row);
    }
    let mut out = open_output(&args.output)?;
    match args.format.as_str() {
        "pretty" => {
            for (n, row) in rows.iter().enumerate() {
                let rendered: Result<Vec<String>, CliError> =
                    row.iter().map(|v| render_value(v, &q)).collect();
                writeln!(out, "n={n}: {}", rendered?.join(", "))?;
            }
        }
        "csv" => {
            writeln!(out, "n,k,value")?;
            for (n, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{}", render_value(v, &q)?)?;
                }
            }
        }
        "json" => {
            let mut doc = serde_json::Map::new();
            doc.insert("kind".into(), args.kind.clone().into());
            let mut p = serde_json::Map::new();
            for (name, v) in &params {
                p.insert((*name).into(), (*v).into());
            }
            doc.insert("params".into(), p.into());
            if let Some(point) = &q {
                doc.insert("q".into(), point.to_string().into());
            }
            let rows_json: Result<Vec<serde_json::Value>, CliError> = rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    let values: Result<Vec<String>, CliError> =
                        row.iter().map(|v| render_value(v, &q)).collect();
                    Ok(serde_json::json!({"n": n, "values": values?}))
                })
                .collect();
            doc.insert("rows".into(), rows_json?.into());
            serde_json::to_writer_pretty(&mut out, &serde_json::Value::Object(doc))
                .map_err(|e| CliError::invalid(format!("json error: {e}")))?;
            writeln!(out)?;
        }
        other => return Err(CliError::invalid(format!("unknown format {other:?}"))),
    }
    out.flush()?;
    Ok(())
}

fn cmd_bell(args: BellArgs) -> Result<(), CliError> {
    if args.n_max > 20 {
        return Err(CliError::invalid("--n-max exceeds the cap of 20"));
    }
    let q = args.q.as_deref().map(parse_rational).transpose()?;
    let type2_params = (args.alpha, args.beta, args.rho);
    let (kind, params, values): (&str, Vec<(&str, i64)>, Vec<LaurentPolynomial>) =
        match (args.s, type2_params) {
            (Some(s), (None, None, None)) => (
                "bell_s",
                vec![("s", s), ("x0", args.x)],
                (0..=args.n_max)
                    .map(|n| bell_poly(n, s).eval_x(args.x))
                    .collect(),
            ),
            (None, (Some(alpha), Some(beta), Some(rho))) => (
                "bell_type2",
                vec![
                    ("alpha", alpha),
                    ("beta", beta),
                    ("rho", rho),
                    ("x0", args.x),
                ],
                (0..=args.n_max)
                    .map(|n| bell_type2(n, alpha, beta, rho).eval_x(args.x))
                    .collect(),
            ),
            _ => {
                return Err(CliError::invalid(
                    "pass either --s or all of --alpha, --beta, --rho",
                ))
            }
        };
    let mut out = open_output(&args.output)?;
    match args.format.as_str() {
        "pretty" => {
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "B[{n}] = {}", render_value(v, &q)?)?;
            }
        }
        "csv" => {
            writeln!(out, "n,value")?;
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n},{}", render_value(v, &q)?)?;
            }
        }
        "json" => {
            let rendered: Result<Vec<String>, CliError> =
                values.iter().map(|v| render_value(v, &q)).collect();
            let mut doc = serde_json::Map::new();
            doc.insert("kind".into(), kind.into());
            let mut p = serde_json::Map::new();
            for (name, v) in &params {
                p.insert((*name).into(), (*v).into());
            }
            doc.insert("params".into(), p.into());
            if let Some(point) = &q {
                doc.insert("q".into(), point.to_string().into());
            }
            doc.insert("values".into(), rendered?.into());
            serde_json::to_writer_pretty(&mut out, &serde_json::Value::Object(doc))
                .map_err(|e| CliError::invalid(format!("json error: {e}")))?;
            writeln!(out)?;
        }
        other => return Err(CliError::invalid(format!("unknown format {other:?}"))),
    }
    out.flush()?;
    Ok(())
}

fn parse_board_spec(spec: &str) -> Result<Board, CliError> {
    let mut segments = spec.split(';');
    let word = segments
        .next()
        .and_then(|s| s.strip_prefix("word="))
        .ok_or_else(|| CliError::invalid("board spec must start with word=<UV-string>"))?;
    let first_pre = segments
        .next()
        .and_then(|s| s.strip_prefix("pre="))
        .ok_or_else(|| CliError::invalid("board spec must contain pre=<uniform | j,b=v;...>"))?;
    let mut entries: Vec<&str> = vec![first_pre];
    entries.extend(segments);
    let pre = if entries.len() == 1 && !entries[0].contains('=') {
        let uniform: i64 = entries[0].trim().parse().map_err(|_| {
            CliError::invalid(format!("invalid uniform pre-weight {:?}", entries[0]))
        })?;
        PreWeights::Uniform(uniform)
    } else {
        // j,b=v entries; unlisted cells default to 1
        let mut cells = BTreeMap::new();
        for entry in entries {
            let bad = || {
                CliError::invalid(format!(
                    "invalid pre-weight entry {entry:?}; expected j,b=v"
                ))
            };
            let (cell, v) = entry.split_once('=').ok_or_else(bad)?;
            let (j, b) = cell.split_once(',').ok_or_else(bad)?;
            let j: u32 = j.trim().parse().map_err(|_| bad())?;
            let b: u32 = b.trim().parse().map_err(|_| bad())?;
            let v: i64 = v.trim().parse().map_err(|_| bad())?;
            cells.insert((j, b), v);
        }
        PreWeights::PerCell(cells)
    };
    Board::from_word(word, &pre).map_err(|e| CliError::invalid(format!("bad board: {e}")))
}

fn cmd_oracle(args: OracleArgs) -> Result<(), CliError> {
    let board = parse_board_spec(&args.board)?;
    let rule = match args.rule.as_str() {
        "same-row" => Rule::SameRow,
        "bottom-shift" => Rule::BottomShift,
        other => return Err(CliError::invalid(format!("unknown rule {other:?}"))),
    };
    let rooks =
        usize::try_from(args.rooks).map_err(|_| CliError::invalid("--rooks is out of range"))?;
    let count = board.placement_count(rooks);
    if count > BigInt::from(10_000_000u64) {
        return Err(CliError::new(
            4,
            format!("{count} placements exceed the enumeration cap of 10000000"),
        ));
    }
    let sum = board.rook_sum(rooks, rule, args.s);
    let mut out = open_output(&args.output)?;
    writeln!(out, "{sum}")?;
    out.flush()?;
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if let Some(preset) = &args.preset {
        if preset != "desk" {
            return Err(CliError::invalid(format!("unknown preset {preset:?}")));
        }
    }
    let mut spec = SweepSpec::default();
    if let Some(v) = args.n_max {
        spec.n_max = v;
    }
    if let Some(v) = args.m_max {
        spec.m_max = v;
    }
    if let Some(v) = args.nm_max {
        spec.nm_max = v;
    } else if args.n_max.is_some() || args.m_max.is_some() {
        spec.nm_max = spec.n_max + spec.m_max;
    }
    if let Some(v) = &args.s {
        spec.s = parse_range(v)?;
    }
    if let Some(v) = &args.alpha {
        spec.alpha = parse_range(v)?;
    }
    if let Some(v) = &args.c {
        spec.c = parse_range(v)?;
    }
    if let Some(v) = &args.d {
        spec.d = parse_range(v)?;
    }
    if let Some(v) = &args.rho {
        spec.rho = parse_range(v)?;
    }
    if let Some(v) = &args.beta {
        spec.beta = parse_range(v)?;
    }
    if let Some(v) = &args.x {
        spec.x0 = parse_range(v)?;
    }
    let names: Vec<&str> = if args.identity == "all" {
        IDENTITY_NAMES.to_vec()
    } else {
        vec![args.identity.as_str()]
    };
    let mut reports: Vec<IdentityReport> = Vec::new();
    for name in names {
        let mut batch = run_sweep(name, &spec).map_err(|e| CliError::invalid(e.to_string()))?;
        reports.append(&mut batch);
    }
    let passed = reports.iter().filter(|r| r.holds).count();
    let total = reports.len();
    let mut out = open_output(&args.output)?;
    match args.format.as_str() {
        "pretty" => {
            for r in &reports {
                if r.holds {
                    writeln!(out, "ok {} {}", r.identity, r.params_string())?;
                } else {
                    writeln!(
                        out,
                        "FAIL {} {} lhs={} rhs={} diff={}",
                        r.identity,
                        r.params_string(),
                        r.lhs,
                        r.rhs,
                        r.diff
                    )?;
                }
            }
            writeln!(out, "{passed}/{total} hold")?;
        }
        "csv" => {
            writeln!(out, "identity,params,holds")?;
            for r in &reports {
                writeln!(out, "{},{},{}", r.identity, r.params_string(), r.holds)?;
            }
        }
        "json" => {
            serde_json::to_writer_pretty(&mut out, &reports)
                .map_err(|e| CliError::invalid(format!("json error: {e}")))?;
            writeln!(out)?;
        }
        other => return Err(CliError::invalid(format!("unknown format {other:?}"))),
    }
    out.flush()?;
    if passed == total {
        Ok(())
    } else {
        Err(CliError::new(
            1,
            format!("{} of {total} identity instances fail", total - passed),
        ))
    }
}
