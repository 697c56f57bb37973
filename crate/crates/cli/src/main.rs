//! Deterministic command-line surface over the AR-translation calculus.
//!
//! Exit codes: 0 success (or all checks passed), 1 verification failures
//! (the report is still emitted), 2 usage errors, 3 window exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use artau_core::qsl2::{BlockFamily, StringObject};
use artau_core::serial::{AlmostSplitSeq, SerialCheck, SerialFamily, SerialObj, Side};
use artau_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "artau",
    about = "Exact Auslander-Reiten translation calculus for two coalgebra families",
    version
)]
struct Cli {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Interval comodules of the truncated doubly-infinite line
    Serial {
        #[command(subcommand)]
        action: SerialAction,
    },
    /// The nontrivial block of quantum SL(2) at a root of unity
    Qsl2 {
        #[command(subcommand)]
        action: Qsl2Action,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArFormat {
    Dot,
    Json,
    Ascii,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjFormat {
    Text,
    Json,
}

#[derive(Args)]
struct SerialParams {
    /// Maximum path length of the coalgebra
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Vertex window as lo:hi (for example -8:4)
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(i64, i64)>,
    /// Syzygy depth reserved when the window is derived automatically
    #[arg(long, default_value_t = 2)]
    depth: i64,
}

#[derive(Subcommand)]
enum SerialAction {
    /// Apply a functor to an interval: OP V i j (or U i j, S i, I i)
    Op {
        #[command(flatten)]
        params: SerialParams,
        #[arg(long, value_enum, default_value_t = ObjFormat::Text)]
        format: ObjFormat,
        /// Functor name followed by the object tokens
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, required = true)]
        tokens: Vec<String>,
    },
    /// Print the dimension vector of an interval
    Dimvec {
        #[command(flatten)]
        params: SerialParams,
        #[arg(long, value_enum, default_value_t = ObjFormat::Text)]
        format: ObjFormat,
        /// With --format json, emit the full realized representation
        /// (presentation, dimension map, arrow matrices)
        #[arg(long)]
        full: bool,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, required = true)]
        tokens: Vec<String>,
    },
    /// Emit the AR quiver of the window
    Ar {
        #[command(flatten)]
        params: SerialParams,
        #[arg(long, value_enum, default_value_t = ArFormat::Dot)]
        format: ArFormat,
        /// Emit the stable quiver (injectives deleted)
        #[arg(long)]
        stable: bool,
    },
    /// Check every closed form against the linear-algebra oracle
    Verify {
        #[command(flatten)]
        params: SerialParams,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Test whether the family behaves as a symmetric coalgebra
    CheckSymmetric {
        #[command(flatten)]
        params: SerialParams,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

#[derive(Subcommand)]
enum Qsl2Action {
    /// Apply a symbolic operation: omega STEPS OBJ, or almost-split OBJ
    Op {
        /// Top vertex of the window [0, w]
        #[arg(long, default_value_t = 12)]
        window: i64,
        #[arg(long, value_enum, default_value_t = ObjFormat::Text)]
        format: ObjFormat,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true, required = true)]
        tokens: Vec<String>,
    },
    /// Print the dimension vector of O^k S n
    Dimvec {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 12)]
        window: i64,
        #[arg(long, value_enum, default_value_t = ObjFormat::Text)]
        format: ObjFormat,
        /// With --format json, emit the full realized representation
        #[arg(long)]
        full: bool,
    },
    /// Emit the AR quiver fragment
    Ar {
        #[arg(long, default_value_t = 3)]
        kmax: i64,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
        #[arg(long, default_value_t = 12)]
        window: i64,
        #[arg(long, value_enum, default_value_t = ArFormat::Dot)]
        format: ArFormat,
        #[arg(long)]
        stable: bool,
    },
    /// Realize and verify the almost split sequences
    Verify {
        /// Syzygy shifts i with |i| <= imax
        #[arg(long, default_value_t = 2)]
        imax: i64,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
        #[arg(long, default_value_t = 10)]
        window: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Gram-matrix and Nakayama checks for symmetry
    CheckSymmetric {
        #[arg(long, default_value_t = 2)]
        kmax: i64,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
        #[arg(long, default_value_t = 8)]
        window: i64,
        #[arg(long, default_value_t = 2)]
        margin: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

fn parse_window(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got {s}"))?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lo: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad hi: {e}"))?;
    if lo >= hi {
        return Err(format!("window {lo}:{hi} is empty"));
    }
    Ok((lo, hi))
}

/// Resolves the thread count: the flag wins, then ARTAU_THREADS, then 1.
fn resolve_threads(flag: usize) -> usize {
    if flag > 0 {
        return flag;
    }
    std::env::var("ARTAU_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| t > 0)
        .unwrap_or(1)
}

struct ParsedInterval {
    side: Side,
    i: i64,
    j: i64,
}

fn parse_serial_object(n: i64, tokens: &[String]) -> std::result::Result<ParsedInterval, String> {
    let num = |t: &String| -> std::result::Result<i64, String> {
        t.parse().map_err(|_| format!("expected an integer, got {t}"))
    };
    match tokens {
        [side, i, j] if side == "V" || side == "U" => Ok(ParsedInterval {
            side: if side == "V" { Side::V } else { Side::U },
            i: num(i)?,
            j: num(j)?,
        }),
        [s, i] if s == "S" => {
            let i = num(i)?;
            Ok(ParsedInterval { side: Side::V, i, j: i })
        }
        [s, i] if s == "I" => {
            let i = num(i)?;
            Ok(ParsedInterval { side: Side::V, i: i - n, j: i })
        }
        _ => Err(format!(
            "cannot parse interval from {:?}: expected V i j, U i j, S i or I i",
            tokens
        )),
    }
}

fn parse_string_object(tokens: &[String]) -> std::result::Result<StringObject, String> {
    let num = |t: &String| -> std::result::Result<i64, String> {
        t.parse().map_err(|_| format!("expected an integer, got {t}"))
    };
    match tokens {
        [s, nn] if s == "S" => Ok(StringObject { k: 0, n: num(nn)? }),
        [o, s, nn] if o.starts_with("O^") && s == "S" => {
            let k = o[2..]
                .parse()
                .map_err(|_| format!("bad syzygy power in {o}"))?;
            Ok(StringObject { k, n: num(nn)? })
        }
        _ => Err(format!(
            "cannot parse object from {:?}: expected S n or O^k S n",
            tokens
        )),
    }
}

/// Window wide enough for `depth` syzygy steps plus a transpose pipeline
/// around the given interval.
fn auto_serial_window(n: i64, depth: i64, i: i64, j: i64) -> (i64, i64) {
    let pad = (depth + 1) * (n + 1) + n + 1;
    (i - pad, j + pad)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::WindowExceeded(_) => 3,
        Error::InvalidObject(_) | Error::InvalidFamily(_) | Error::InjectiveInput(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.family {
        Family::Serial { action } => run_serial(action),
        Family::Qsl2 { action } => run_qsl2(action),
    }
}

fn serial_family(params: &SerialParams, obj: Option<(i64, i64)>) -> Result<SerialFamily> {
    let n = params.n as i64;
    let (lo, hi) = match params.window {
        Some(w) => w,
        None => match obj {
            Some((i, j)) => auto_serial_window(n, params.depth, i, j),
            None => (-2 * n, n),
        },
    };
    SerialFamily::new(params.n, lo, hi)
}

fn run_serial(action: SerialAction) -> Result<u8> {
    match action {
        SerialAction::Op { params, format, tokens } => {
            let (op_name, rest) = tokens.split_first().ok_or_else(|| {
                Error::InvalidObject("missing functor name".into())
            })?;
            let parsed = parse_serial_object(params.n as i64, rest)
                .map_err(Error::InvalidObject)?;
            let fam = serial_family(&params, Some((parsed.i, parsed.j)))?;
            let v = fam.interval(parsed.side, parsed.i, parsed.j)?;
            if op_name == "almost-split" {
                let seq = fam.almost_split(&v)?;
                print_almost_split(&seq, format);
                return Ok(0);
            }
            let result: SerialObj = match op_name.as_str() {
                "syzygy" => fam.single_syzygy(&v)?,
                "cosyzygy" => fam.single_cosyzygy(&v)?,
                "cosyzygy2" => fam.cosyzygy2(&v)?,
                "star" => fam.star_cf(&v)?,
                "nakayama" => fam.nakayama_cf(&v)?,
                "transpose" => fam.transpose_cf(&v)?,
                "dtr" => fam.dtr_cf(&v)?,
                other => {
                    return Err(Error::InvalidObject(format!(
                        "unknown functor {other}; expected one of syzygy, cosyzygy, \
                         cosyzygy2, star, nakayama, transpose, dtr, almost-split"
                    )))
                }
            };
            match format {
                ObjFormat::Text => println!("{result}"),
                ObjFormat::Json => {
                    println!("{}", serde_json::to_string(&result).expect("serializes"))
                }
            }
            Ok(0)
        }
        SerialAction::Dimvec { params, format, full, tokens } => {
            let parsed =
                parse_serial_object(params.n as i64, &tokens).map_err(Error::InvalidObject)?;
            let fam = serial_family(&params, Some((parsed.i, parsed.j)))?;
            let v = fam.interval(parsed.side, parsed.i, parsed.j)?;
            let rep = fam.realize(&v)?;
            if full {
                println!("{}", serde_json::to_string_pretty(&rep).expect("serializes"));
            } else {
                print_dimvec(rep.dim_vector(), format);
            }
            Ok(0)
        }
        SerialAction::Ar { params, format, stable } => {
            let fam = serial_family(&params, None)?;
            let (q, layout) = fam.ar_quiver();
            let q = if stable { q.stable() } else { q };
            match format {
                ArFormat::Dot => print!("{}", q.to_dot()),
                ArFormat::Json => println!("{}", q.to_json()),
                ArFormat::Ascii => print!("{}", q.to_ascii(&layout)),
            }
            Ok(0)
        }
        SerialAction::Verify { params, format, threads } => {
            let n = params.n as i64;
            let (lo, hi) = params.window.unwrap_or((-3 * n - 2, n + 2));
            let fam = SerialFamily::new(params.n, lo, hi)?;
            let report = fam.verify(&SerialCheck::ALL, resolve_threads(threads));
            print_report(&report, format);
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        SerialAction::CheckSymmetric { params, format, threads } => {
            let n = params.n as i64;
            let (lo, hi) = params.window.unwrap_or((-3 * n - 2, n + 2));
            let fam = SerialFamily::new(params.n, lo, hi)?;
            // The Nakayama functor shifts every interval by n here, so this
            // is expected to exit 1: the family is not symmetric.
            let report = fam.check_symmetric(resolve_threads(threads));
            print_report(&report, format);
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn run_qsl2(action: Qsl2Action) -> Result<u8> {
    match action {
        Qsl2Action::Op { window, format, tokens } => {
            let (op_name, rest) = tokens.split_first().ok_or_else(|| {
                Error::InvalidObject("missing operation name".into())
            })?;
            match op_name.as_str() {
                "omega" => {
                    let (steps, rest) = rest.split_first().ok_or_else(|| {
                        Error::InvalidObject("omega needs a step count".into())
                    })?;
                    let steps: i64 = steps
                        .parse()
                        .map_err(|_| Error::InvalidObject(format!("bad step count {steps}")))?;
                    let obj = parse_string_object(rest).map_err(Error::InvalidObject)?;
                    let out = obj.omega(steps);
                    match format {
                        ObjFormat::Text => println!("{out}"),
                        ObjFormat::Json => {
                            println!("{}", serde_json::to_string(&out).expect("serializes"))
                        }
                    }
                    Ok(0)
                }
                "almost-split" => {
                    let fam = BlockFamily::new(window, 1)?;
                    let obj = parse_string_object(rest).map_err(Error::InvalidObject)?;
                    let seq = fam.almost_split(&obj);
                    match format {
                        ObjFormat::Text => println!("{seq}"),
                        ObjFormat::Json => {
                            println!("{}", serde_json::to_string(&seq).expect("serializes"))
                        }
                    }
                    Ok(0)
                }
                other => Err(Error::InvalidObject(format!(
                    "unknown operation {other}; expected omega or almost-split"
                ))),
            }
        }
        Qsl2Action::Dimvec { k, n, window, format, full } => {
            let fam = BlockFamily::new(window, 1)?;
            if full {
                let rep = fam.realize(&StringObject { k, n })?;
                println!("{}", serde_json::to_string_pretty(&rep).expect("serializes"));
            } else {
                let d = fam.dim_vector(&StringObject { k, n })?;
                print_dimvec(&d, format);
            }
            Ok(0)
        }
        Qsl2Action::Ar { kmax, nmax, window, format, stable } => {
            let fam = BlockFamily::new(window, 1)?;
            let (q, layout) = fam.ar_quiver(kmax, nmax)?;
            let q = if stable { q.stable() } else { q };
            match format {
                ArFormat::Dot => print!("{}", q.to_dot()),
                ArFormat::Json => println!("{}", q.to_json()),
                ArFormat::Ascii => print!("{}", q.to_ascii(&layout)),
            }
            Ok(0)
        }
        Qsl2Action::Verify { imax, nmax, window, format, threads } => {
            let fam = BlockFamily::new(window, 1)?;
            let report = fam.verify_sequences(imax, nmax, resolve_threads(threads));
            print_report(&report, format);
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Qsl2Action::CheckSymmetric { kmax, nmax, window, margin, format, threads } => {
            let fam = BlockFamily::new(window, margin)?;
            let report = fam.check_symmetric(kmax, nmax, resolve_threads(threads));
            print_report(&report, format);
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn print_dimvec(dim: &std::collections::BTreeMap<i64, usize>, format: ObjFormat) {
    match format {
        ObjFormat::Text => {
            let parts: Vec<String> = dim
                .iter()
                .filter(|(_, &d)| d > 0)
                .map(|(v, d)| format!("{v}:{d}"))
                .collect();
            println!("{}", parts.join(" "));
        }
        ObjFormat::Json => {
            let filtered: std::collections::BTreeMap<i64, usize> =
                dim.iter().filter(|(_, &d)| d > 0).map(|(&v, &d)| (v, d)).collect();
            println!("{}", serde_json::to_string(&filtered).expect("serializes"));
        }
    }
}

fn print_almost_split(seq: &AlmostSplitSeq, format: ObjFormat) {
    match format {
        ObjFormat::Text => println!("{seq}"),
        ObjFormat::Json => println!("{}", serde_json::to_string(seq).expect("serializes")),
    }
}

fn print_report(report: &artau_core::report::Report, format: ReportFormat) {
    match format {
        ReportFormat::Text => print!("{}", report.to_text()),
        ReportFormat::Tsv => print!("{}", report.to_tsv()),
        ReportFormat::Json => println!("{}", report.to_json()),
    }
}
