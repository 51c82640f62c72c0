//! Command-line front end. Usage problems exit with 2, domain errors with 1;
//! a scan also exits 1 when any record carries an error flag.
//!
//! The default factorization budget can be set through the
//! `INTPOINTS_BUDGET` environment variable.

use crate::arith::{format_rational, parse_integer, parse_rational, Integer, Rational};
use crate::congruence::{
    self, catalog_text, cubic_field_poly, orbit_with_cap, quartic_field_poly, Family,
};
use crate::curves::{
    balady_solve, box_oracle, hessian_solve, phi_project, quartic_ab_solve, simcong_search,
    t_of_xy, CurveParams, CurveSolutions, IntegerPoint, SolveOptions,
};
use crate::factor::{factorize, FactorOptions};
use crate::poly::{RationalPoly, Var};
use crate::scan::{self, QabMode, ScanFamily, ScanJob};
use crate::systems::{build_system, reference_text};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

const DEFAULT_BUDGET: u64 = 1_000_000_000;
const BUDGET_ENV: &str = "INTPOINTS_BUDGET";

pub fn run() -> i32 {
    run_from(std::env::args())
}

/// Entry point taking explicit argv, for tests.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

#[derive(Parser)]
#[command(
    name = "intpoints",
    version,
    about = "Integral points on the curve families H_d, X_T, Q_{a,b} and the \
             polynomial congruences behind cyclic cubic and quartic fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputOpts {
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ScanOpts {
    /// First parameter value (inclusive)
    #[arg(long, allow_hyphen_values = true)]
    from: i64,
    /// Last parameter value (inclusive)
    #[arg(long, allow_hyphen_values = true)]
    to: i64,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Rho-iteration budget per parameter (default from INTPOINTS_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
    /// Seed for the randomized factorization steps
    #[arg(long, default_value_t = 0x9e37_79b9_7f4a_7c15)]
    seed: u64,
    /// JSONL output path
    #[arg(long)]
    out: PathBuf,
    /// Continue an interrupted sweep instead of refusing to touch its file
    #[arg(long)]
    resume: bool,
    /// Also print the records in this format after the sweep
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// The cubic family H_d: x^3 + y^3 + d*x*y + 1 = 0
    Hessian {
        #[command(subcommand)]
        cmd: HessianCmd,
    },
    /// The quartic family X_T: (x+y)^4 - 4x^2y^2 + T*x*y*(x+y) + 4 = 0
    Balady {
        #[command(subcommand)]
        cmd: BaladyCmd,
    },
    /// The family Q_{a,b}: x^4 - 4y^2 + a*x*y + b = 0
    Qab {
        #[command(subcommand)]
        cmd: QabCmd,
    },
    /// Solutions of y | x^4+4, x | y^4+4, (x+y) | 4-4x^2y^2
    Simcong {
        /// Bound on |x|
        #[arg(long)]
        bound: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Polynomial congruence solutions and their quotients
    Congruence {
        #[command(subcommand)]
        cmd: CongruenceCmd,
    },
    /// The symbolic coefficient systems S(m,n) and R(m,n)
    Systems {
        #[command(subcommand)]
        cmd: SystemsCmd,
    },
    /// Cyclic cubic/quartic field polynomials
    Fieldpoly {
        #[command(subcommand)]
        cmd: FieldpolyCmd,
    },
    /// Histogram and threshold report over scan records
    Stats {
        /// JSONL records produced by a scan
        records: PathBuf,
        /// Report parameters with at least this many solutions
        #[arg(long, default_value_t = 10)]
        threshold: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Exact-arithmetic utilities (factorization, roots, projections,
    /// brute-force oracles)
    Tools {
        #[command(subcommand)]
        cmd: ToolsCmd,
    },
}

#[derive(Subcommand)]
enum ToolsCmd {
    /// Prime factorization of a nonzero integer
    Factor {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        n: Integer,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Floor square root and perfect-square flag
    Isqrt {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        n: Integer,
    },
    /// p-adic valuation of a nonzero rational
    Valuation {
        #[arg(short, long, value_parser = rational_arg, allow_hyphen_values = true)]
        q: Rational,
        #[arg(short, long, value_parser = integer_arg)]
        p: Integer,
    },
    /// The projection (x, y) -> (x + y, x*y)
    Phi {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        x: Integer,
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        y: Integer,
    },
    /// T(x, y) = ((x+y)^4 - 4x^2y^2 + 4)/(x*y*(x+y))
    Txy {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        x: Integer,
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        y: Integer,
    },
    /// Divisor-pruned brute-force points of H_d with |x| <= xbound
    HessianOracle {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        d: Integer,
        #[arg(long)]
        xbound: u64,
    },
    /// Exhaustive on-curve points in the box |x|, |y| <= bound
    BoxOracle {
        #[arg(long, value_parser = family_params_arg)]
        curve: CurveParams,
        #[arg(long)]
        bound: u64,
    },
    /// Check that a leading coefficient is free of m-th powers
    LeadingCoeff {
        #[arg(long, value_parser = poly_arg, allow_hyphen_values = true)]
        f: RationalPoly,
    },
    /// Evaluate S(m,n)/R(m,n) at an assignment like "a0=3/8 a2=1 b0=..."
    EvalSystem {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Space-separated var=value pairs
        #[arg(long, allow_hyphen_values = true)]
        assign: String,
    },
}

#[derive(Subcommand)]
enum HessianCmd {
    /// All integer points for one d
    Solve {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        d: Integer,
        /// Work budget for factoring d^3 + 27
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Sweep a range of d values
    Scan {
        #[command(flatten)]
        opts: ScanOpts,
    },
}

#[derive(Subcommand)]
enum BaladyCmd {
    /// All integer points for one even T
    Solve {
        #[arg(short = 'T', long, value_parser = integer_arg, allow_hyphen_values = true)]
        t: Integer,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Sweep even T over a range
    Scan {
        #[command(flatten)]
        opts: ScanOpts,
    },
    /// Sweep the parametric family T = poly(t)
    ScanFamily {
        /// Polynomial in t, e.g. "2*t^3"
        #[arg(long, value_parser = poly_arg, allow_hyphen_values = true)]
        poly: RationalPoly,
        #[arg(long, allow_hyphen_values = true)]
        t_from: i64,
        #[arg(long, allow_hyphen_values = true)]
        t_to: i64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0x9e37_79b9_7f4a_7c15)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        resume: bool,
    },
}

#[derive(Subcommand)]
enum QabCmd {
    /// All integer points for one (a, b)
    Solve {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        a: Integer,
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        b: Integer,
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Sweep u with a = 4u (mode 4u) or odd u with a = 2u (mode 2u), b = 4
    Scan {
        #[arg(long, value_parser = mode_arg)]
        mode: QabMode,
        #[command(flatten)]
        opts: ScanOpts,
    },
}

#[derive(Subcommand)]
enum CongruenceCmd {
    /// Check fg | f^3+g^3+1 (cubic) or fg | f^4-4g^2+4 (quartic)
    Verify {
        #[arg(long, value_parser = poly_arg, allow_hyphen_values = true)]
        f: RationalPoly,
        #[arg(long, value_parser = poly_arg, allow_hyphen_values = true)]
        g: RationalPoly,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Walk the chain f_n = g_{n-1}, g_n = (g_{n-1}^3+1)/f_{n-1}
    Orbit {
        /// Catalog label of the seed (see `congruence catalog`)
        #[arg(long)]
        seed: String,
        #[arg(long)]
        steps: usize,
        /// Abort once a degree would exceed this cap
        #[arg(long, default_value_t = congruence::DEFAULT_ORBIT_DEGREE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Print the catalog of known solutions
    Catalog {
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum SystemsCmd {
    /// Generate S(m,n) or R(m,n) and print its polynomials
    Build {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Compare against the bundled reference tables
        #[arg(long)]
        check_appendix: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum FieldpolyCmd {
    /// X^3 + a(n) X^2 + lambda(n) X - 1 for a catalog solution at t = n
    Cubic {
        #[arg(long)]
        seed: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        n: Rational,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The quartic field polynomial attached to an integer point (x, y)
    Quartic {
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        x: Integer,
        #[arg(short, long, value_parser = integer_arg, allow_hyphen_values = true)]
        y: Integer,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cubic,
    Quartic,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Cubic => Family::Cubic,
            FamilyArg::Quartic => Family::Quartic,
        }
    }
}

fn integer_arg(s: &str) -> Result<Integer, String> {
    parse_integer(s).map_err(|e| e.to_string())
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn poly_arg(s: &str) -> Result<RationalPoly, String> {
    RationalPoly::parse(s).map_err(|e| e.to_string())
}

fn mode_arg(s: &str) -> Result<QabMode, String> {
    match s {
        "4u" => Ok(QabMode::FourU),
        "2u" => Ok(QabMode::TwoU),
        other => Err(format!("mode must be 4u or 2u, got {other:?}")),
    }
}

/// Curve designators like `hessian:d=25`, `balady:T=40`, `qab:a=1000,b=4`.
fn family_params_arg(s: &str) -> Result<CurveParams, String> {
    let (family, rest) = s
        .split_once(':')
        .ok_or_else(|| "expected family:key=value[,key=value]".to_string())?;
    let mut kv = BTreeMap::new();
    for pair in rest.split(',') {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {pair:?}"))?;
        kv.insert(k.trim().to_string(), integer_arg(v.trim())?);
    }
    let take = |kv: &mut BTreeMap<String, Integer>, key: &str| {
        kv.remove(key).ok_or_else(|| format!("missing {key}="))
    };
    let params = match family {
        "hessian" => CurveParams::Hessian {
            d: take(&mut kv, "d")?,
        },
        "balady" => CurveParams::Balady {
            t: take(&mut kv, "T")?,
        },
        "qab" | "quartic_ab" => CurveParams::QuarticAb {
            a: take(&mut kv, "a")?,
            b: take(&mut kv, "b")?,
        },
        other => return Err(format!("unknown family {other:?}")),
    };
    if let Some(extra) = kv.keys().next() {
        return Err(format!("unexpected parameter {extra:?}"));
    }
    Ok(params)
}

/// Assignments like `a0=3/8 a2=25/2 b0=7/8 b1=5 b2=25/2`.
fn parse_assignment(s: &str) -> Result<BTreeMap<Var, Rational>, String> {
    let mut out = BTreeMap::new();
    for pair in s.split_whitespace() {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| format!("expected var=value, got {pair:?}"))?;
        let idx: u32 = name[1..]
            .parse()
            .map_err(|_| format!("bad variable {name:?}"))?;
        let var = match name.as_bytes()[0] {
            b'a' => Var::A(idx),
            b'b' => Var::B(idx),
            _ => return Err(format!("bad variable {name:?}")),
        };
        out.insert(var, rational_arg(value)?);
    }
    Ok(out)
}

fn budget_or_default(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

fn solve_options(budget: Option<u64>) -> SolveOptions {
    SolveOptions {
        factor: FactorOptions {
            rho_budget: budget_or_default(budget),
            ..FactorOptions::default()
        },
    }
}

/// Serialized form of a solve result; identical across runs for fixed input.
#[derive(serde::Serialize, serde::Deserialize)]
pub struct SolveOutput {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub solutions: Vec<[String; 2]>,
    pub classes: Vec<String>,
}

impl SolveOutput {
    fn from_solutions(sols: &CurveSolutions, params: BTreeMap<String, String>) -> Self {
        SolveOutput {
            family: sols.params().family_name().to_string(),
            params,
            solutions: sols
                .points()
                .map(|p| [p.x.to_string(), p.y.to_string()])
                .collect(),
            classes: sols.classified().iter().map(|(_, c)| c.to_string()).collect(),
        }
    }
}

fn emit(output: &OutputOpts, content: String) -> Result<(), String> {
    match &output.out {
        None => {
            print!("{content}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
        Some(path) => std::fs::write(path, content).map_err(|e| format!("{}: {e}", path.display())),
    }
}

fn render_solutions(
    sols: &CurveSolutions,
    params: BTreeMap<String, String>,
    primary: &str,
    output: &OutputOpts,
) -> Result<(), String> {
    let text = match output.format {
        Format::Text => {
            let mut s = String::new();
            for p in sols.points() {
                s.push_str(&format!("{p}\n"));
            }
            s
        }
        Format::Json => {
            let payload = SolveOutput::from_solutions(sols, params);
            let mut s = serde_json::to_string(&payload).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("family,param,x,y,class\n");
            let param = params.get(primary).cloned().unwrap_or_default();
            for (p, class) in sols.classified() {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    sols.params().family_name(),
                    param,
                    p.x,
                    p.y,
                    class
                ));
            }
            s
        }
    };
    emit(output, text)
}

fn run_scan_command(family: ScanFamily, opts: &ScanOpts) -> Result<i32, String> {
    let job = ScanJob {
        family,
        lo: opts.from,
        hi: opts.to,
        budget: budget_or_default(opts.budget),
        seed: opts.seed,
        out: opts.out.clone(),
        resume: opts.resume,
    };
    let summary = scan::run_scan(&job, opts.workers).map_err(|e| e.to_string())?;
    match opts.format {
        Format::Text => {
            println!(
                "{} records ({} computed, {} resumed, {} with errors) -> {}",
                summary.total,
                summary.computed,
                summary.skipped_existing,
                summary.errors,
                summary.out.display()
            );
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "total": summary.total,
                    "computed": summary.computed,
                    "resumed": summary.skipped_existing,
                    "errors": summary.errors,
                    "out": summary.out,
                })
            );
        }
        Format::Csv => {
            let records = scan::read_records(&job.out).map_err(|e| e.to_string())?;
            let mut buf = Vec::new();
            scan::write_csv(&records, job.family.primary_key(), &mut buf)
                .map_err(|e| e.to_string())?;
            print!("{}", String::from_utf8_lossy(&buf));
        }
    }
    Ok(if summary.errors == 0 { 0 } else { 1 })
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Hessian { cmd } => match cmd {
            HessianCmd::Solve { d, budget, output } => {
                let sols = hessian_solve(&d, &solve_options(budget)).map_err(|e| e.to_string())?;
                let params = BTreeMap::from([("d".to_string(), d.to_string())]);
                render_solutions(&sols, params, "d", &output)?;
                Ok(0)
            }
            HessianCmd::Scan { opts } => run_scan_command(ScanFamily::Hessian, &opts),
        },
        Command::Balady { cmd } => match cmd {
            BaladyCmd::Solve { t, budget, output } => {
                let sols = balady_solve(&t, &solve_options(budget)).map_err(|e| e.to_string())?;
                let params = BTreeMap::from([("T".to_string(), t.to_string())]);
                render_solutions(&sols, params, "T", &output)?;
                Ok(0)
            }
            BaladyCmd::Scan { opts } => run_scan_command(ScanFamily::Balady, &opts),
            BaladyCmd::ScanFamily {
                poly,
                t_from,
                t_to,
                workers,
                budget,
                seed,
                out,
                resume,
            } => {
                let opts = ScanOpts {
                    from: t_from,
                    to: t_to,
                    workers,
                    budget,
                    seed,
                    out,
                    resume,
                    format: Format::Text,
                };
                run_scan_command(ScanFamily::BaladyFamily { poly }, &opts)
            }
        },
        Command::Qab { cmd } => match cmd {
            QabCmd::Solve { a, b, budget, output } => {
                let sols =
                    quartic_ab_solve(&a, &b, &solve_options(budget)).map_err(|e| e.to_string())?;
                let params = BTreeMap::from([
                    ("a".to_string(), a.to_string()),
                    ("b".to_string(), b.to_string()),
                ]);
                render_solutions(&sols, params, "a", &output)?;
                Ok(0)
            }
            QabCmd::Scan { mode, opts } => run_scan_command(ScanFamily::QuarticAb { mode }, &opts),
        },
        Command::Simcong { bound, output } => {
            let rows = simcong_search(bound).map_err(|e| e.to_string())?;
            let text = match output.format {
                Format::Text => {
                    let mut s = String::new();
                    for r in &rows {
                        s.push_str(&format!(
                            "{}  T = {}{}\n",
                            r.point,
                            format_rational(&r.t),
                            if r.integral { "  (integer)" } else { "" }
                        ));
                    }
                    s
                }
                Format::Json => {
                    let payload: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "x": r.point.x.to_string(),
                                "y": r.point.y.to_string(),
                                "T": format_rational(&r.t),
                                "integral": r.integral,
                            })
                        })
                        .collect();
                    format!("{}\n", serde_json::Value::Array(payload))
                }
                Format::Csv => {
                    let mut s = String::from("x,y,T,integral\n");
                    for r in &rows {
                        s.push_str(&format!(
                            "{},{},{},{}\n",
                            r.point.x,
                            r.point.y,
                            format_rational(&r.t),
                            r.integral
                        ));
                    }
                    s
                }
            };
            emit(&output, text)?;
            Ok(0)
        }
        Command::Congruence { cmd } => match cmd {
            CongruenceCmd::Verify { f, g, family } => match Family::from(family) {
                Family::Cubic => match congruence::verify_cubic(&f, &g) {
                    Ok(lambda) => {
                        println!("OK, lambda = {lambda}");
                        Ok(0)
                    }
                    Err(congruence::CongruenceError::NotDivisible { remainder }) => {
                        println!("not a solution; remainder = {remainder}");
                        Ok(0)
                    }
                    Err(e) => Err(e.to_string()),
                },
                Family::Quartic => match congruence::verify_quartic(&f, &g) {
                    Ok(l) => {
                        println!("OK, L = {l}");
                        Ok(0)
                    }
                    Err(congruence::CongruenceError::NotDivisible { remainder }) => {
                        println!("not a solution; remainder = {remainder}");
                        Ok(0)
                    }
                    Err(e) => Err(e.to_string()),
                },
            },
            CongruenceCmd::Orbit {
                seed,
                steps,
                cap,
                output,
            } => {
                let seed_sol = congruence::catalog_entry(&seed)
                    .ok_or_else(|| format!("unknown catalog label {seed:?}"))?;
                let chain = orbit_with_cap(&seed_sol, steps, cap).map_err(|e| e.to_string())?;
                let text = match output.format {
                    Format::Json => {
                        let payload: Vec<serde_json::Value> = chain
                            .iter()
                            .enumerate()
                            .map(|(k, s)| {
                                serde_json::json!({
                                    "step": k,
                                    "f": s.f().to_string(),
                                    "g": s.g().to_string(),
                                    "lambda": s.quotient().to_string(),
                                })
                            })
                            .collect();
                        format!("{}\n", serde_json::Value::Array(payload))
                    }
                    _ => {
                        let mut s = String::new();
                        for (k, sol) in chain.iter().enumerate() {
                            s.push_str(&format!(
                                "step {k}: f = {}\n        g = {}\n        lambda = {}\n",
                                sol.f(),
                                sol.g(),
                                sol.quotient()
                            ));
                        }
                        s
                    }
                };
                emit(&output, text)?;
                Ok(0)
            }
            CongruenceCmd::Catalog { output } => {
                let text = match output.format {
                    Format::Json => {
                        let payload: Vec<serde_json::Value> = congruence::catalog()
                            .iter()
                            .map(|s| {
                                serde_json::json!({
                                    "label": s.label(),
                                    "family": s.family().to_string(),
                                    "f": s.f().to_string(),
                                    "g": s.g().to_string(),
                                    "quotient": s.quotient().to_string(),
                                })
                            })
                            .collect();
                        format!("{}\n", serde_json::Value::Array(payload))
                    }
                    _ => catalog_text(),
                };
                emit(&output, text)?;
                Ok(0)
            }
        },
        Command::Systems { cmd } => match cmd {
            SystemsCmd::Build {
                family,
                m,
                n,
                check_appendix,
                output,
            } => {
                let family = Family::from(family);
                let sys = build_system(family, m, n).map_err(|e| e.to_string())?;
                let mut text = sys.dump();
                let mut code = 0;
                if check_appendix {
                    if reference_text(family, m, n).is_none() {
                        return Err(format!("no reference table for {family} ({m},{n})"));
                    }
                    for cmp in sys.check_reference().map_err(|e| e.to_string())? {
                        if cmp.matches {
                            text.push_str(&format!("{}: matches reference\n", cmp.name));
                        } else {
                            text.push_str(&format!(
                                "{}: MISMATCH\n  computed:  {}\n  reference: {}\n",
                                cmp.name, cmp.computed, cmp.reference
                            ));
                            code = 1;
                        }
                    }
                }
                emit(&output, text)?;
                Ok(code)
            }
        },
        Command::Fieldpoly { cmd } => match cmd {
            FieldpolyCmd::Cubic { seed, n, output } => {
                let sol = congruence::catalog_entry(&seed)
                    .ok_or_else(|| format!("unknown catalog label {seed:?}"))?;
                if sol.family() != Family::Cubic {
                    return Err(format!("{seed} is not a cubic catalog entry"));
                }
                let fp = cubic_field_poly(&sol, &n);
                let text = match output.format {
                    Format::Json => format!(
                        "{}\n",
                        serde_json::json!({
                            "seed": seed,
                            "n": format_rational(&n),
                            "poly": fp.to_string(),
                        })
                    ),
                    _ => format!("{fp}\n"),
                };
                emit(&output, text)?;
                Ok(0)
            }
            FieldpolyCmd::Quartic { x, y, output } => {
                let q = quartic_field_poly(&x, &y).map_err(|e| e.to_string())?;
                let text = match output.format {
                    Format::Json => format!(
                        "{}\n",
                        serde_json::json!({
                            "x": x.to_string(),
                            "y": y.to_string(),
                            "L": format_rational(&q.l),
                            "L_integral": q.l_integral,
                            "twice_L_integral": q.twice_l_integral,
                            "poly": q.poly.to_string(),
                        })
                    ),
                    _ => format!("L = {}; {}\n", format_rational(&q.l), q.poly),
                };
                emit(&output, text)?;
                Ok(0)
            }
        },
        Command::Tools { cmd } => match cmd {
            ToolsCmd::Factor { n, budget } => {
                let opts = FactorOptions {
                    rho_budget: budget_or_default(budget),
                    ..FactorOptions::default()
                };
                let f = factorize(&n, &opts).map_err(|e| e.to_string())?;
                let mut parts: Vec<String> = Vec::new();
                if f.sign() < 0 {
                    parts.push("-1".into());
                }
                for (p, e) in f.prime_powers() {
                    parts.push(if *e == 1 {
                        p.to_string()
                    } else {
                        format!("{p}^{e}")
                    });
                }
                if parts.is_empty() {
                    parts.push("1".into());
                }
                println!("{n} = {}", parts.join(" * "));
                println!("signed divisors: {}", f.signed_divisor_count());
                Ok(0)
            }
            ToolsCmd::Isqrt { n } => {
                let (root, exact) = crate::arith::isqrt(&n).map_err(|e| e.to_string())?;
                println!("isqrt({n}) = {root}{}", if exact { " (exact)" } else { "" });
                Ok(0)
            }
            ToolsCmd::Valuation { q, p } => {
                let v = crate::arith::p_adic_valuation(&q, &p).map_err(|e| e.to_string())?;
                println!("v_{p}({}) = {v}", format_rational(&q));
                Ok(0)
            }
            ToolsCmd::Phi { x, y } => {
                let image = phi_project(&IntegerPoint { x, y });
                println!("{image}");
                Ok(0)
            }
            ToolsCmd::Txy { x, y } => {
                let t = t_of_xy(&IntegerPoint { x, y }).map_err(|e| e.to_string())?;
                println!("T = {}", format_rational(&t));
                Ok(0)
            }
            ToolsCmd::HessianOracle { d, xbound } => {
                let mut oracle = crate::curves::HessianOracle::new();
                for p in oracle.points(&d, xbound).map_err(|e| e.to_string())? {
                    println!("{p}");
                }
                Ok(0)
            }
            ToolsCmd::BoxOracle { curve, bound } => {
                for p in box_oracle(&curve, bound).map_err(|e| e.to_string())? {
                    println!("{p}");
                }
                Ok(0)
            }
            ToolsCmd::LeadingCoeff { f } => {
                let ok = congruence::leading_coeff_normalized(&f).map_err(|e| e.to_string())?;
                println!(
                    "leading coefficient of {f} is {}free of deg-th powers",
                    if ok { "" } else { "NOT " }
                );
                Ok(0)
            }
            ToolsCmd::EvalSystem {
                family,
                m,
                n,
                assign,
            } => {
                let sys = build_system(family.into(), m, n).map_err(|e| e.to_string())?;
                let assignment = parse_assignment(&assign)?;
                let (all_zero, residuals) = sys.evaluate(&assignment).map_err(|e| e.to_string())?;
                let rendered: Vec<String> = residuals.iter().map(format_rational).collect();
                println!("all_zero: {all_zero}");
                println!("residuals: [{}]", rendered.join(", "));
                Ok(0)
            }
        },
        Command::Stats {
            records,
            threshold,
            output,
        } => {
            let records = scan::read_records(&records).map_err(|e| e.to_string())?;
            let report = scan::stats(&records, threshold);
            let text = match output.format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({
                        "total": report.total,
                        "histogram": report.histogram,
                        "nontrivial_records": report.nontrivial_records,
                        "error_records": report.error_records,
                        "over_threshold": report.over_threshold,
                    })
                ),
                _ => {
                    let mut s = format!("{} records\n", report.total);
                    for (count, how_many) in &report.histogram {
                        s.push_str(&format!("{count} solutions: {how_many}\n"));
                    }
                    s.push_str(&format!(
                        "records with nontrivial solutions: {}\n",
                        report.nontrivial_records
                    ));
                    s.push_str(&format!("records with errors: {}\n", report.error_records));
                    if !report.over_threshold.is_empty() {
                        s.push_str(&format!("parameters with >= {threshold} solutions:\n"));
                        for (params, count) in &report.over_threshold {
                            let kv: Vec<String> =
                                params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                            s.push_str(&format!("  {} ({count})\n", kv.join(", ")));
                        }
                    }
                    s
                }
            };
            emit(&output, text)?;
            Ok(0)
        }
    }
}
