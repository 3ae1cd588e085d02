//! `sextic`: JSON front end for the sextic crate.
//!
//! Exit codes: 0 success, 1 error or failed check, 2 degenerate input
//! (JSON diagnostic still printed), 64 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sextic::algebra::Rational;
use sextic::census::{run_census, CensusConfig};
use sextic::curve::CurveModel;
use sextic::families::{e160b1_record, e2cyclic_record, isog3_record, FamilyRecord};
use sextic::fibration::fibration_record;
use sextic::s6::{delta_formula, point_to_sextic_field, S6Point};
use sextic::verify::{verify_one, verify_suite, ITEMS};
use sextic::Error;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_DEGENERATE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "sextic", version, about = "Cyclic sextic points on elliptic curves")]
struct Cli {
    /// Also write the JSON result to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Δ(A, B, T, U), the discriminant of the intersection cubic.
    Delta {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Rational,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Rational,
        #[arg(long = "T", allow_hyphen_values = true)]
        t: Rational,
        #[arg(long = "U", allow_hyphen_values = true)]
        u: Rational,
    },
    /// Run the point-to-field pipeline at (U, D, T).
    Pipeline {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long = "U", allow_hyphen_values = true)]
        u: Rational,
        #[arg(long = "D", allow_hyphen_values = true)]
        d: Rational,
        #[arg(long = "T", allow_hyphen_values = true)]
        t: Rational,
    },
    /// Points from a parametrized family.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Checks on the elliptic fibration.
    #[command(subcommand)]
    Fibration(FibrationCmd),
    /// Count square-free values of g_{a,b} below a limit.
    Census {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Accepts integers and powers like 1e6.
        #[arg(long, value_parser = parse_count)]
        limit: u64,
        #[arg(long, value_delimiter = ',', value_parser = parse_count)]
        grid: Vec<u64>,
        #[arg(long)]
        workers: Option<usize>,
        /// CSV with columns X, count, slope_so_far.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Include every value with its smallest (m, n).
        #[arg(long)]
        witnesses: bool,
    },
    /// Run the pinned checks, or one of them by name.
    Verify { name: Option<String> },
}

#[derive(Args, Debug)]
struct CurveArgs {
    /// y² = x³ + Ax + B.
    #[arg(long = "A", allow_hyphen_values = true, requires = "b", conflicts_with = "curve")]
    a: Option<Rational>,
    #[arg(long = "B", allow_hyphen_values = true, requires = "a")]
    b: Option<Rational>,
    /// c·y² = x³ + a₂x² + a₁x + a₀ as "c,a2,a1,a0".
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    curve: Vec<Rational>,
}

impl CurveArgs {
    fn model(&self) -> Result<CurveModel, Error> {
        match (&self.a, &self.b, self.curve.as_slice()) {
            (Some(a), Some(b), []) => CurveModel::weierstrass(a.clone(), b.clone()),
            (None, None, [c, a2, a1, a0]) => CurveModel::new(c.clone(), a2.clone(), a1.clone(), a0.clone()),
            _ => Err(Error::InvalidInput("give --A and --B, or --curve c,a2,a1,a0".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// E_{a,b}: y² = x³ + ax² − 2abx + ab².
    Isog3 {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// y² = x³ − 4x² − x.
    #[command(name = "160b1")]
    E160b1 {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// E_c^b with its 2-torsion section.
    E2cyclic {
        #[arg(long, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long = "T", allow_hyphen_values = true)]
        t: Rational,
    },
}

#[derive(Subcommand, Debug)]
enum FibrationCmd {
    /// Torsion, section and fiber checks; optional point-count isogeny check.
    Check {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Rational,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Rational,
        #[arg(long = "isogeny-T", allow_hyphen_values = true)]
        isogeny_t: Option<Rational>,
        #[arg(long, value_delimiter = ',', default_value = "5,7,11,13")]
        primes: Vec<u64>,
    },
}

/// `123`, `1e6`, `2.5e5`-free: an integer or `k e j` with integer `k`.
fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<u32>().map_err(|_| format!("bad exponent in {s:?}"))?),
        None => (s, 0),
    };
    let m: u64 = mant.parse().map_err(|_| format!("not a count: {s:?}"))?;
    10u64.checked_pow(exp).and_then(|p| m.checked_mul(p)).ok_or_else(|| format!("{s:?} overflows"))
}

struct Outcome {
    body: Value,
    code: u8,
}

impl Outcome {
    fn ok(body: impl Serialize) -> Result<Self, Error> {
        Ok(Outcome { body: to_value(body)?, code: EXIT_OK })
    }
}

fn to_value(v: impl Serialize) -> Result<Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::Inconsistency(format!("serialization: {e}")))
}

fn degenerate(e: &Error) -> Outcome {
    Outcome { body: json!({ "degenerate": true, "diagnostic": e.to_string() }), code: EXIT_DEGENERATE }
}

fn family(r: FamilyRecord) -> Result<Outcome, Error> {
    let code = if r.is_degenerate() { EXIT_DEGENERATE } else { EXIT_OK };
    Ok(Outcome { body: to_value(&r)?, code })
}

fn write_csv(path: &Path, rows: &[sextic::census::Checkpoint]) -> Result<(), Error> {
    let io = |e: csv::Error| Error::InvalidInput(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["X", "count", "slope_so_far"]).map_err(io)?;
    for c in rows {
        let slope = c.slope_so_far.map(|s| s.to_string()).unwrap_or_default();
        w.write_record([c.x.to_string(), c.count.to_string(), slope]).map_err(io)?;
    }
    w.flush().map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Delta { a, b, t, u } => Outcome::ok(json!({ "delta": delta_formula(&a, &b, &t, &u).to_string() })),
        Command::Pipeline { curve, u, d, t } => {
            let e = curve.model()?;
            match point_to_sextic_field(&e, &S6Point::new(u, d, t)) {
                Ok(c) => Outcome::ok(&c),
                Err(err) if err.is_degenerate() => Ok(degenerate(&err)),
                Err(err) => Err(err),
            }
        }
        Command::Family(FamilyCmd::Isog3 { a, b, m, n }) => family(isog3_record(a, b, m, n)?),
        Command::Family(FamilyCmd::E160b1 { m, n }) => family(e160b1_record(m, n)?),
        Command::Family(FamilyCmd::E2cyclic { b, c, t }) => family(e2cyclic_record(&b, &c, &t)?),
        Command::Fibration(FibrationCmd::Check { a, b, isogeny_t, primes }) => {
            let r = fibration_record(&a, &b, isogeny_t.as_ref().map(|t| (t, primes.as_slice())))?;
            let code = if r.all_hold() { EXIT_OK } else { EXIT_FAIL };
            Ok(Outcome { body: to_value(&r)?, code })
        }
        Command::Census { a, b, limit, grid, workers, csv, witnesses } => {
            let (report, values) = run_census(&CensusConfig { a, b, limit, grid, workers })?;
            if let Some(path) = csv {
                write_csv(&path, &report.checkpoints)?;
            }
            let mut body = to_value(&report)?;
            if witnesses {
                body["witnesses"] = values.iter().map(|(g, (m, n))| json!([g, m, n])).collect();
            }
            Ok(Outcome { body, code: EXIT_OK })
        }
        Command::Verify { name: Some(name) } => match verify_one(&name) {
            Some(item) => {
                let code = if item.passed { EXIT_OK } else { EXIT_FAIL };
                Ok(Outcome { body: to_value(&item)?, code })
            }
            None => Err(Error::Parse(format!("unknown check {name:?}; known: {}", ITEMS.join(", ")))),
        },
        Command::Verify { name: None } => {
            let r = verify_suite();
            let code = if r.all_passed { EXIT_OK } else { EXIT_FAIL };
            Ok(Outcome { body: to_value(&r)?, code })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let render = |v: &Value| {
        if cli.pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.expect("json value")
    };
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            let code = if matches!(e, Error::Parse(_)) { EXIT_USAGE } else { EXIT_FAIL };
            Outcome { body: json!({ "error": e.to_string() }), code }
        }
    };
    let text = render(&outcome.body);
    // a closed pipe on stdout is not an error for the computation
    let _ = writeln!(std::io::stdout(), "{text}");
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, format!("{text}\n")) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_FAIL);
        }
    }
    ExitCode::from(outcome.code)
}
