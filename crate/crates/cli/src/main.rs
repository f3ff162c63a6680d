use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use hyperflex_core::algebra::ring::{is_prime, PrimeField};
use hyperflex_core::algebra::serial::{parse_rational, rational_poly_to_json, rational_poly_to_text};
use hyperflex_core::bitangents::{bitangent_resultant, galois_pattern_report};
use hyperflex_core::family::{box_count, discriminant, enumerate, is_smooth, is_smooth_over_q, point_count};
use hyperflex_core::padic::{formal_log, rho_log_image, torsion_disk_check};
use hyperflex_core::report::{density_from_sweep, parse_suites, run_report, Suite};
use hyperflex_core::stats::{box_report, chabauty_combine, density_good_reduction, max_points};
use hyperflex_core::{e6, Error, FamilyPoint};

#[derive(Parser)]
#[command(name = "hyperflex", version, about = "Exact computations on trigonal quartics with a hyperflex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discriminant, smoothness, point counts and height enumeration.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// E6 lattice checks.
    #[command(subcommand)]
    E6(E6Cmd),
    /// Bitangent resultant and its factorization patterns.
    #[command(subcommand)]
    Bitangents(BitangentCmd),
    /// Formal logarithm on the disk at infinity.
    #[command(subcommand)]
    Padic(PadicCmd),
    /// Finite-field sweeps and corollary arithmetic.
    #[command(subcommand)]
    Stats(StatsCmd),
    /// Run the verification suites and print a JSON report.
    Report {
        /// Comma-separated suites: e6, bitangents, padic, density, combine.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct Member {
    /// Coefficients p2,p5,p6,p8,p9,p12.
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Subcommand)]
enum FamilyCmd {
    Disc {
        #[command(flatten)]
        member: Member,
        #[command(flatten)]
        out: Output,
    },
    Smooth {
        #[command(flatten)]
        member: Member,
        /// Test modulo this prime instead of over Q.
        #[arg(long)]
        prime: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    Count {
        #[command(flatten)]
        member: Member,
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        out: Output,
    },
    Enumerate {
        #[arg(long)]
        height: String,
        #[arg(long)]
        minimal: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum E6Cmd {
    Verify,
}

#[derive(Subcommand)]
enum BitangentCmd {
    Resultant {
        #[command(flatten)]
        member: Member,
        #[command(flatten)]
        out: Output,
    },
    Galois {
        #[command(flatten)]
        member: Member,
        /// Comma-separated primes.
        #[arg(long, default_value = "2,3,5,7,11,13")]
        primes: String,
    },
}

#[derive(Subcommand)]
enum PadicCmd {
    Log {
        #[command(flatten)]
        member: Member,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        #[arg(long, default_value_t = 13)]
        order: usize,
    },
    Rholog {
        #[command(flatten)]
        member: Member,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        #[arg(long, default_value_t = 13)]
        order: usize,
    },
    Torsion {
        #[command(flatten)]
        member: Member,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        #[arg(long, default_value_t = 13)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum StatsCmd {
    Density {
        #[arg(long)]
        prime: u64,
        #[command(flatten)]
        out: Output,
    },
    Maxpoints {
        #[arg(long, default_value_t = 7)]
        prime: u64,
        #[command(flatten)]
        out: Output,
    },
    Box {
        #[arg(long)]
        height: String,
        #[command(flatten)]
        out: Output,
    },
    Combine {
        /// Average 2-Selmer bound.
        #[arg(long, default_value = "3")]
        selmer: String,
        /// Good-reduction density at 7; swept when omitted.
        #[arg(long)]
        d7: Option<String>,
        /// Maximum point count over F_7; swept when omitted.
        #[arg(long)]
        max_f7: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(m) => Failure::Input(m),
            other => Failure::Check(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn member(m: &Member) -> Result<FamilyPoint, Failure> {
    Ok(FamilyPoint::from_str(&m.b)?)
}

fn prime(p: u64) -> Result<PrimeField, Failure> {
    if is_prime(p) {
        Ok(PrimeField::new(p))
    } else {
        Err(Failure::Input(format!("{p} is not prime")))
    }
}

fn height(s: &str) -> Result<BigInt, Failure> {
    match BigInt::from_str(s.trim()) {
        Ok(a) if a >= BigInt::from(1) => Ok(a),
        _ => Err(Failure::Input(format!("height must be a positive integer, got {s:?}"))),
    }
}

fn csv_field(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn emit(v: &Value, format: Format) {
    let text = match (format, v) {
        (Format::Csv, Value::Object(map)) => format!(
            "{}\n{}",
            map.keys().cloned().collect::<Vec<_>>().join(","),
            map.values().map(csv_field).collect::<Vec<_>>().join(",")
        ),
        _ => serde_json::to_string_pretty(v).expect("serializable"),
    };
    // a closed pipe is not an error worth reporting
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn run_family(cmd: FamilyCmd) -> Outcome {
    match cmd {
        FamilyCmd::Disc { member: m, out } => {
            let b = member(&m)?;
            let d = discriminant(&b)?;
            emit(&json!({"b": b.to_string(), "discriminant": d.to_string()}), out.format);
        }
        FamilyCmd::Smooth { member: m, prime: p, out } => {
            let b = member(&m)?;
            let (field, smooth) = match p {
                Some(p) => {
                    let f = prime(p)?;
                    (json!(p), is_smooth(&f, &b.reduce(&f)))
                }
                None => (json!("Q"), is_smooth_over_q(&b)),
            };
            emit(&json!({"b": b.to_string(), "field": field, "smooth": smooth}), out.format);
        }
        FamilyCmd::Count { member: m, prime: p, out } => {
            let b = member(&m)?;
            let f = prime(p)?;
            let bp = b.reduce(&f);
            emit(
                &json!({"b": b.to_string(), "prime": p, "points": point_count(&f, &bp), "smooth": is_smooth(&f, &bp)}),
                out.format,
            );
        }
        FamilyCmd::Enumerate { height: h, minimal, out } => {
            let a = height(&h)?;
            if box_count(&a) > BigInt::from(u32::MAX) {
                return Err(Failure::Input(format!("height {a} gives more than 2^32 points")));
            }
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            for b in enumerate(&a, minimal) {
                let line = match out.format {
                    Format::Csv => b.to_string(),
                    Format::Json => to_value(&b).to_string(),
                };
                if writeln!(w, "{line}").is_err() {
                    break;
                }
            }
            let _ = w.flush();
        }
    }
    Ok(())
}

fn run_bitangents(cmd: BitangentCmd) -> Outcome {
    match cmd {
        BitangentCmd::Resultant { member: m, out } => {
            let b = member(&m)?;
            let r = bitangent_resultant(&b)?;
            emit(
                &json!({
                    "b": b.to_string(),
                    "degree": r.degree(),
                    "monic": r.monic,
                    "text": rational_poly_to_text(&r.poly, "a"),
                    "coefficients": rational_poly_to_json(&r.poly),
                }),
                out.format,
            );
        }
        BitangentCmd::Galois { member: m, primes } => {
            let b = member(&m)?;
            let ps = primes
                .split(',')
                .map(|s| s.trim().parse::<u64>().map_err(|_| Failure::Input(format!("not a prime: {s:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            for &p in &ps {
                prime(p)?;
            }
            emit(&to_value(&galois_pattern_report(&b, &ps)?), Format::Json);
        }
    }
    Ok(())
}

fn run_padic(cmd: PadicCmd) -> Outcome {
    match cmd {
        PadicCmd::Log { member: m, prime: p, order } => {
            let b = member(&m)?;
            prime(p)?;
            emit(&formal_log(&b, p, order)?.to_json(), Format::Json);
        }
        PadicCmd::Rholog { member: m, prime: p, order } => {
            let b = member(&m)?;
            prime(p)?;
            emit(&to_value(&rho_log_image(&b, p, order)?), Format::Json);
        }
        PadicCmd::Torsion { member: m, prime: p, order } => {
            let b = member(&m)?;
            prime(p)?;
            let only_zero = torsion_disk_check(&b, p, order)?;
            emit(&json!({"b": b.to_string(), "prime": p, "order": order, "only_root_is_zero": only_zero}), Format::Json);
        }
    }
    Ok(())
}

fn run_stats(cmd: StatsCmd) -> Outcome {
    match cmd {
        StatsCmd::Density { prime: p, out } => emit(&to_value(&density_good_reduction(p)?), out.format),
        StatsCmd::Maxpoints { prime: p, out } => emit(&to_value(&max_points(p)?), out.format),
        StatsCmd::Box { height: h, out } => emit(&to_value(&box_report(&height(&h)?)?), out.format),
        StatsCmd::Combine { selmer, d7, max_f7, out } => {
            let s = parse_rational(&selmer)?;
            let (d7, max_f7) = match (d7, max_f7) {
                (Some(d), Some(m)) => (parse_rational(&d)?, m),
                (d, m) => {
                    let sweep = max_points(7)?;
                    let swept = density_from_sweep(&sweep).density;
                    (d.map(|d| parse_rational(&d)).transpose()?.unwrap_or(swept), m.unwrap_or(sweep.max))
                }
            };
            emit(&to_value(&chabauty_combine(&s, &d7, max_f7)?), out.format);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Family(c) => run_family(c),
        Command::E6(E6Cmd::Verify) => {
            emit(&to_value(&e6::verify()), Format::Json);
            Ok(())
        }
        Command::Bitangents(c) => run_bitangents(c),
        Command::Padic(c) => run_padic(c),
        Command::Stats(c) => run_stats(c),
        Command::Report { only } => {
            let suites = match only {
                Some(list) => parse_suites(&list)?,
                None => Suite::ALL.to_vec(),
            };
            let report = run_report(&suites);
            emit(&to_value(&report), Format::Json);
            if report.all_pass {
                Ok(())
            } else {
                let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
                Err(Failure::Check(format!("failed checks: {}", names.join(", "))))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("hyperflex: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("hyperflex: invalid input: {m}");
            ExitCode::from(2)
        }
    }
}
