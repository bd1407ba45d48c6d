//! `overmex` command-line tool: verification runs, statistic tables and
//! bijection audits, with JSON or CSV output on stdout.
//!
//! Exit codes: 0 when everything checked passes, 1 on a verification
//! failure, 2 on a usage error.

mod report;

use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use overmex::bijection::{audit_lemma41, audit_section3, BijectionTrace};
use overmex::harness::HarnessError;
use overmex::opart::{pbar, DEFAULT_ENUMERATION_CAP};
use overmex::{list_identities, plan_jobs, run_jobs, Enumerator, ParamName, Selection};
use serde_json::{json, Value};

pub use report::{emit_identities, emit_report, Format, CSV_HEADER};

/// Environment variable overriding the enumeration cap.
pub const CAP_ENV: &str = "OVERMEX_ENUM_CAP";
pub const MAX_ORDER: usize = 2000;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Closed integer interval written `a..b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span(pub i64, pub i64);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}"));
        let span = match s.split_once("..") {
            Some((a, b)) => Span(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                Span(v, v)
            }
        };
        if span.0 > span.1 {
            return Err(format!("empty range {s}"));
        }
        Ok(span)
    }
}

/// `INDEX=DELTA`: add `DELTA` to the left-hand side at `INDEX`.
#[derive(Debug, Clone)]
pub struct Perturb(pub i64, pub BigInt);

impl FromStr for Perturb {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (i, d) = s.split_once('=').ok_or_else(|| format!("expected INDEX=DELTA, got {s:?}"))?;
        let index = i.trim().parse().map_err(|_| format!("bad index {i:?}"))?;
        let delta = d.trim().parse().map_err(|_| format!("bad delta {d:?}"))?;
        Ok(Perturb(index, delta))
    }
}

#[derive(Debug, Parser)]
#[command(name = "overmex", version, about = "Check truncated theta identities and overpartition statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the registered identity ids.
    List {
        /// Print full descriptors instead of bare ids.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Verify identities and print one report per job.
    Verify(VerifyArgs),
    /// Tabulate a statistic for n = 1..=n-max.
    Table(TableArgs),
    /// Audit one of the overpartition bijections at a fixed n.
    Bijection(BijectionArgs),
}

#[derive(Debug, clap::Args)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["id", "all"]))]
struct VerifyArgs {
    /// Identity id; may be repeated.
    #[arg(long)]
    id: Vec<String>,
    /// Run the whole registry.
    #[arg(long)]
    all: bool,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    j: Option<Span>,
    /// Series order for series checks.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..=MAX_ORDER as u64))]
    order: u64,
    /// Largest n for enumerative checks and inequalities.
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Fill in elapsed times (output is then no longer reproducible).
    #[arg(long)]
    timing: bool,
    /// Self-test: perturb every job's left-hand side, `INDEX=DELTA`.
    #[arg(long, value_name = "INDEX=DELTA", allow_hyphen_values = true)]
    perturb: Option<Perturb>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    Pbar,
    Op21,
    Mbar,
    Nbar,
    Mk,
}

impl Stat {
    fn name(self) -> &'static str {
        match self {
            Stat::Pbar => "pbar",
            Stat::Op21 => "op21",
            Stat::Mbar => "mbar",
            Stat::Nbar => "nbar",
            Stat::Mk => "mk",
        }
    }
}

#[derive(Debug, clap::Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    stat: Stat,
    /// Statistic parameter, a value or a range `a..b`; defaults to 1.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<Span>,
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Section3,
    Lemma41,
}

#[derive(Debug, clap::Args)]
struct BijectionArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Staircase size for lemma41.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    j: Option<u32>,
    /// Exit 1 unless the audit passes.
    #[arg(long)]
    check: bool,
    /// Include every mapped pair.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

struct Usage(String);

impl From<HarnessError> for Usage {
    fn from(e: HarnessError) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(format!("write failed: {e}"))
    }
}

fn enumerator(cap_env: Option<&str>) -> Result<Enumerator, Usage> {
    match cap_env {
        None => Ok(Enumerator::new(DEFAULT_ENUMERATION_CAP)),
        Some(s) => s
            .trim()
            .parse::<u32>()
            .map(Enumerator::new)
            .map_err(|_| Usage(format!("{CAP_ENV} must be a nonnegative integer, got {s:?}"))),
    }
}

fn check_cap(e: &Enumerator, n_max: u32) -> Result<(), Usage> {
    e.check_cap(n_max).map_err(|err| Usage(format!("{err}; raise it with {CAP_ENV}")))
}

/// Runs the tool on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cap = std::env::var(CAP_ENV).ok();
    run_with_cap(argv, cap.as_deref(), out, err)
}

/// Like [`run`] with the enumeration cap override passed explicitly.
pub fn run_with_cap<I, T>(argv: I, cap_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    let result = enumerator(cap_env).and_then(|e| match cli.command {
        Command::List { format } => {
            emit_identities(out, list_identities(), format)?;
            Ok(EXIT_PASS)
        }
        Command::Verify(args) => verify(args, &e, out),
        Command::Table(args) => table(args, &e, out),
        Command::Bijection(args) => bijection(args, &e, out),
    });
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn verify(args: VerifyArgs, e: &Enumerator, out: &mut dyn Write) -> Result<i32, Usage> {
    check_cap(e, args.n_max)?;
    let ranges = [(ParamName::K, args.k), (ParamName::M, args.m), (ParamName::Ell, args.ell), (ParamName::J, args.j)]
        .into_iter()
        .filter_map(|(name, span)| span.map(|Span(a, b)| (name, (a, b))))
        .collect();
    let selection = Selection {
        ids: if args.all { None } else { Some(args.id) },
        ranges,
        order: args.order as usize,
        n_max: args.n_max,
    };
    let mut jobs = plan_jobs(&selection)?;
    if let Some(Perturb(index, delta)) = args.perturb {
        jobs = jobs.into_iter().map(|j| j.perturbed(index, delta.clone())).collect();
    }
    let reports = run_jobs(&jobs, e)?;
    emit_report(out, &reports, args.format, args.timing)?;
    Ok(if reports.iter().all(|r| r.passed()) { EXIT_PASS } else { EXIT_FAIL })
}

fn table(args: TableArgs, e: &Enumerator, out: &mut dyn Write) -> Result<i32, Usage> {
    let name = args.stat.name();
    let ks: Vec<u32> = match (args.stat, args.k) {
        (Stat::Pbar, Some(_)) => return Err(Usage("pbar takes no --k".into())),
        (Stat::Pbar, None) => Vec::new(),
        (stat, span) => {
            let Span(lo, hi) = span.unwrap_or(Span(1, 1));
            let min = if stat == Stat::Op21 || stat == Stat::Mbar { 0 } else { 1 };
            if lo < min || hi > i64::from(u32::MAX) {
                return Err(Usage(format!("{name} needs k >= {min}")));
            }
            (lo as u32..=hi as u32).collect()
        }
    };
    let mut rows: Vec<(u32, Option<u32>, BigInt)> = Vec::new();
    if args.stat == Stat::Pbar {
        // read off the generating function, so no enumeration cap applies
        rows.extend((1..=args.n_max).map(|n| (n, None, pbar(i64::from(n)))));
    } else {
        check_cap(e, args.n_max)?;
        for n in 1..=args.n_max {
            for &k in &ks {
                let v = match args.stat {
                    Stat::Op21 => e.op21(n, k),
                    Stat::Mbar => e.mbar(n, k),
                    Stat::Nbar => e.nbar(n, k),
                    Stat::Mk => e.mk_stat(n, k),
                    Stat::Pbar => unreachable!(),
                }
                .map_err(|err| Usage(err.to_string()))?;
                rows.push((n, Some(k), BigInt::from(v)));
            }
        }
    }
    match args.format {
        Format::Csv => {
            if args.stat == Stat::Pbar {
                writeln!(out, "n,{name}")?;
            } else {
                writeln!(out, "n,k,{name}")?;
            }
            for (n, k, v) in &rows {
                match k {
                    Some(k) => writeln!(out, "{n},{k},{v}")?,
                    None => writeln!(out, "{n},{v}")?,
                }
            }
        }
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|(n, k, v)| {
                    let mut obj = json!({ "n": n });
                    if let Some(k) = k {
                        obj["k"] = json!(k);
                    }
                    obj[name] = report::big(v);
                    obj
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&arr).expect("serializable"))?;
        }
    }
    Ok(EXIT_PASS)
}

fn trace_json(t: &BijectionTrace) -> Value {
    json!({
        "input": t.input.to_string(),
        "output": t.output.to_string(),
        "case": t.case.to_string(),
        "weightDelta": t.weight_delta,
    })
}

fn bijection(args: BijectionArgs, e: &Enumerator, out: &mut dyn Write) -> Result<i32, Usage> {
    check_cap(e, args.n)?;
    let bad = |err: overmex::bijection::BijectionError| Usage(err.to_string());
    let (summary, traces, passed) = match args.which {
        Which::Section3 => {
            if args.j.is_some() {
                return Err(Usage("section3 takes no --j".into()));
            }
            let a = audit_section3(args.n, e, args.trace).map_err(bad)?;
            let passed = a.passed();
            let summary = json!({
                "which": "section3",
                "n": a.n,
                "aSize": a.a_size,
                "bSize": a.b_size,
                "cSize": a.c_size,
                "pbar": a.pbar,
                "roundTrips": a.round_trips,
                "distinctImages": a.distinct_images,
                "witness": a.witness.as_ref().map(ToString::to_string),
                "witnessInC": a.witness_in_c,
                "passed": passed,
            });
            (summary, a.traces, passed)
        }
        Which::Lemma41 => {
            let j = args.j.ok_or_else(|| Usage("lemma41 needs --j".into()))?;
            let a = audit_lemma41(args.n, j, e, args.trace).map_err(bad)?;
            let passed = a.passed();
            let summary = json!({
                "which": "lemma41",
                "n": a.n,
                "j": a.j,
                "sourceSize": a.source_size,
                "targetSize": a.target_size,
                "roundTrips": a.round_trips,
                "distinctImages": a.distinct_images,
                "passed": passed,
            });
            (summary, a.traces, passed)
        }
    };
    match args.format {
        Format::Json => {
            let mut doc = summary;
            if args.trace {
                doc["pairs"] = Value::Array(traces.iter().map(trace_json).collect());
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))?;
        }
        Format::Csv if args.trace => {
            writeln!(out, "input,output,case,weight_delta")?;
            for t in &traces {
                writeln!(out, "{},{},{},{}", t.input.display_with(" "), t.output.display_with(" "), t.case, t.weight_delta)?;
            }
        }
        Format::Csv => {
            let obj = summary.as_object().expect("object");
            let cell = |v: &Value| match v {
                Value::String(s) => s.replace(',', " "),
                Value::Null => String::new(),
                other => other.to_string(),
            };
            writeln!(out, "{}", obj.keys().cloned().collect::<Vec<_>>().join(","))?;
            writeln!(out, "{}", obj.values().map(cell).collect::<Vec<_>>().join(","))?;
        }
    }
    Ok(if args.check && !passed { EXIT_FAIL } else { EXIT_PASS })
}
