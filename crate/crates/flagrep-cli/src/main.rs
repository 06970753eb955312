//! `flagrep` — root systems, Weyl groups, highest-weight representations,
//! Borel-Weil-Bott cohomology, infinitesimal characters, and the SU(1,1)
//! Matsuki correspondence, from the command line.
//!
//! Exit codes: 0 success, 1 domain error (valid command, impossible
//! request), 2 usage error.  All output is deterministic: identical
//! arguments (and seeds) produce identical bytes.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use flagrep::bwb::{bwb, bwb_table, CohomologyResult};
use flagrep::cartan::{CartanMatrix, RootSystem, Weight};
use flagrep::highrep::{weight_system, weyl_dimension};
use flagrep::infchar::{chi_equal, integrally_dominant};
use flagrep::matsuki;
use flagrep::weyl::{orbit, weyl_order};

const DEFAULT_TABLE_CAP: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "flagrep",
    version,
    about = "Exact combinatorics of compact Lie group representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the roots of a root system.
    Roots {
        /// Type label (A1..A_n, B, C, D, E6-E8, F4, G2) or path to a
        /// whitespace-separated Cartan matrix file.
        source: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the order of the Weyl group.
    WeylOrder { source: String },
    /// Enumerate the Weyl orbit of an integral weight.
    Orbit {
        source: String,
        /// Integer coordinates in the fundamental-weight basis, e.g. "1,0".
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Dimension of the irreducible representation with this highest weight.
    Dim {
        source: String,
        /// Dominant integer coordinates, e.g. "1,1".
        #[arg(allow_hyphen_values = true)]
        coords: String,
    },
    /// Weight system of an irreducible representation, with multiplicities.
    Weights {
        source: String,
        #[arg(allow_hyphen_values = true)]
        coords: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Borel-Weil-Bott cohomology of one line bundle.
    Bwb {
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Borel-Weil-Bott over a box of weights.
    BwbTable {
        source: String,
        /// Inclusive coordinate range "lo..hi"; give once to apply to every
        /// coordinate, or once per coordinate.
        #[arg(long = "range", required = true, allow_hyphen_values = true)]
        ranges: Vec<String>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Decide whether two weights have the same infinitesimal character.
    ChiEqual {
        source: String,
        /// Rational coordinates, e.g. "1,-1/2".
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide integral dominance of a (possibly rational) weight.
    IntDom {
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        json: bool,
    },
    /// Verify the SU(1,1) Matsuki correspondence by sampling.
    MatsukiSl2 {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<flagrep::Error> for CliError {
    fn from(e: flagrep::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    // Die quietly when a pipe closes early (`flagrep roots E8 | head`),
    // like any other line-oriented tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// A type label if it parses as one; otherwise the path to a matrix file.
/// Unknown labels naming no file are usage errors; a file that reads but
/// fails validation is a domain error.
fn resolve(source: &str) -> Result<RootSystem, CliError> {
    let cartan = match CartanMatrix::from_label(source) {
        Ok(m) => m,
        Err(label_err) => {
            let path = Path::new(source);
            if !path.exists() {
                return Err(CliError::Usage(format!(
                    "{label_err}, and no file named {source:?} exists"
                )));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Domain(format!("cannot read {source:?}: {e}")))?;
            CartanMatrix::from_text(&text)?
        }
    };
    Ok(RootSystem::new(cartan)?)
}

fn split_coords(text: &str) -> Result<Vec<&str>, CliError> {
    let pieces: Vec<&str> = text.split(',').map(str::trim).collect();
    if pieces.iter().any(|p| p.is_empty()) {
        return Err(CliError::Usage(format!("malformed coordinates {text:?}")));
    }
    Ok(pieces)
}

fn parse_rational_weight(text: &str, rank: usize) -> Result<Weight, CliError> {
    let pieces = split_coords(text)?;
    if pieces.len() != rank {
        return Err(CliError::Usage(format!(
            "expected {rank} coordinates, got {}",
            pieces.len()
        )));
    }
    let coords = pieces
        .iter()
        .map(|p| BigRational::from_str(p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("malformed coordinates {text:?}")))?;
    Ok(Weight::from_coords(coords))
}

fn parse_integer_weight(text: &str, rank: usize) -> Result<Weight, CliError> {
    let pieces = split_coords(text)?;
    if pieces.len() != rank {
        return Err(CliError::Usage(format!(
            "expected {rank} coordinates, got {}",
            pieces.len()
        )));
    }
    let coords = pieces
        .iter()
        .map(|p| i64::from_str(p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            CliError::Usage(format!(
                "malformed coordinates {text:?}: this command requires integers \
                 (rationals are accepted only by chi-equal and int-dom)"
            ))
        })?;
    Ok(Weight::integral(&coords))
}

fn json_bigint(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(n) => n.into(),
        Err(_) => v.to_string().into(),
    }
}

/// Dimensions become JSON numbers when they fit, decimal strings beyond.
fn json_dimension(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(n) => n.into(),
        None => v.to_string().into(),
    }
}

/// Integer coordinates as numbers; non-integer rationals as "p/q" strings.
fn json_weight(w: &Weight) -> Value {
    Value::Array(
        w.coords()
            .iter()
            .map(|c| {
                if c.is_integer() {
                    json_bigint(c.numer())
                } else {
                    Value::String(c.to_string())
                }
            })
            .collect(),
    )
}

fn print_json(v: &Value) {
    println!("{v}");
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Roots { source, json } => {
            let rs = resolve(&source)?;
            if json {
                let value = json!({
                    "label": rs.cartan().label(),
                    "rank": rs.rank(),
                    "roots": rs.roots().iter().map(|r| r.simple_coords().to_vec()).collect::<Vec<_>>(),
                    "positives": (0..rs.num_positive()).collect::<Vec<_>>(),
                    "rho": json_weight(rs.rho()),
                });
                print_json(&value);
            } else {
                println!(
                    "rank {}, {} roots ({} positive)",
                    rs.rank(),
                    rs.roots().len(),
                    rs.num_positive()
                );
                for root in rs.roots() {
                    let sign = if root.is_positive() { '+' } else { '-' };
                    println!("  {sign} {:?}", root.simple_coords());
                }
            }
            Ok(())
        }
        Command::WeylOrder { source } => {
            let rs = resolve(&source)?;
            println!("{}", weyl_order(&rs));
            Ok(())
        }
        Command::Orbit {
            source,
            weight,
            json,
        } => {
            let rs = resolve(&source)?;
            let lambda = parse_integer_weight(&weight, rs.rank())?;
            let points = orbit(&rs, &lambda)?;
            if json {
                print_json(&Value::Array(points.iter().map(json_weight).collect()));
            } else {
                for p in &points {
                    println!("[{p}]");
                }
            }
            Ok(())
        }
        Command::Dim { source, coords } => {
            let rs = resolve(&source)?;
            let lambda = parse_integer_weight(&coords, rs.rank())?;
            println!("{}", weyl_dimension(&rs, &lambda)?);
            Ok(())
        }
        Command::Weights {
            source,
            coords,
            json,
            csv,
        } => {
            let rs = resolve(&source)?;
            let lambda = parse_integer_weight(&coords, rs.rank())?;
            let system = weight_system(&rs, &lambda)?;
            let sorted = system.sorted_weights();
            if json {
                let value = json!({
                    "highest_weight": json_weight(system.highest_weight()),
                    "dimension": json_dimension(system.dimension()),
                    "weights": sorted
                        .iter()
                        .map(|(w, m)| json!({
                            "coords": json_weight(w),
                            "multiplicity": json_dimension(m),
                        }))
                        .collect::<Vec<_>>(),
                });
                print_json(&value);
            } else if csv {
                let mut header = String::new();
                for i in 0..rs.rank() {
                    let _ = write!(header, "w{i},");
                }
                println!("{header}multiplicity");
                for (w, m) in &sorted {
                    println!("{w},{m}");
                }
            } else {
                println!("dim {}", system.dimension());
                for (w, m) in &sorted {
                    println!("  [{w}] x {m}");
                }
            }
            Ok(())
        }
        Command::Bwb {
            source,
            weight,
            json,
        } => {
            let rs = resolve(&source)?;
            let lambda = parse_integer_weight(&weight, rs.rank())?;
            let result = bwb(&rs, &lambda)?;
            if json {
                print_json(&json_cohomology(&result));
            } else {
                print_cohomology(&result);
            }
            Ok(())
        }
        Command::BwbTable {
            source,
            ranges,
            format,
        } => {
            let rs = resolve(&source)?;
            let parsed = parse_ranges(&ranges, rs.rank())?;
            let cap = table_cap()?;
            let table = bwb_table(&rs, &parsed, cap)?;
            match format {
                TableFormat::Json => {
                    let rows: Vec<Value> = table
                        .iter()
                        .map(|(lambda, result)| {
                            let mut row = json_cohomology(result);
                            row["lambda"] = json_weight(lambda);
                            row
                        })
                        .collect();
                    print_json(&Value::Array(rows));
                }
                TableFormat::Csv => {
                    let mut header = String::new();
                    for i in 0..rs.rank() {
                        let _ = write!(header, "l{i},");
                    }
                    header.push_str("vanishes,degree,");
                    for i in 0..rs.rank() {
                        let _ = write!(header, "hw{i},");
                    }
                    println!("{header}dimension");
                    for (lambda, result) in &table {
                        match result.degree() {
                            None => {
                                let blanks = ",".repeat(rs.rank());
                                println!("{lambda},true,,{blanks}");
                            }
                            Some(degree) => {
                                println!(
                                    "{lambda},false,{degree},{},{}",
                                    result.highest_weight().unwrap(),
                                    result.dimension().unwrap()
                                );
                            }
                        }
                    }
                }
            }
            Ok(())
        }
        Command::ChiEqual { source, a, b, json } => {
            let rs = resolve(&source)?;
            let wa = parse_rational_weight(&a, rs.rank())?;
            let wb = parse_rational_weight(&b, rs.rank())?;
            let equal = chi_equal(&rs, &wa, &wb)?;
            if json {
                print_json(&json!({ "equal": equal }));
            } else {
                println!("{equal}");
            }
            Ok(())
        }
        Command::IntDom {
            source,
            weight,
            json,
        } => {
            let rs = resolve(&source)?;
            let lambda = parse_rational_weight(&weight, rs.rank())?;
            let ok = integrally_dominant(&rs, &lambda)?;
            if json {
                print_json(&json!({ "integrally_dominant": ok }));
            } else {
                println!("{ok}");
            }
            Ok(())
        }
        Command::MatsukiSl2 {
            samples,
            seed,
            json,
        } => {
            let report = matsuki::verify_duality(samples, seed)?;
            let (_, _, certificate) = matsuki::closure_posets();
            let pairs: Vec<(&str, &str)> = report
                .pairs()
                .iter()
                .map(|(k, g)| (k.name(), g.name()))
                .collect();
            if json {
                let value = json!({
                    "duality_pairs": pairs
                        .iter()
                        .map(|(k, g)| json!([k, g]))
                        .collect::<Vec<_>>(),
                    "poset_reversal": certificate.holds(),
                    "sample_failures": Value::Array(Vec::new()),
                });
                print_json(&value);
            } else {
                println!("duality pairs:");
                for (k, g) in &pairs {
                    println!("  {k} <-> {g}");
                }
                println!("poset reversal: {}", certificate.holds());
                println!("samples per pair: {samples} (seed {seed})");
                println!("sample failures: none");
            }
            Ok(())
        }
    }
}

fn json_cohomology(result: &CohomologyResult) -> Value {
    match result.degree() {
        None => json!({ "vanishes": true }),
        Some(degree) => json!({
            "vanishes": false,
            "degree": degree,
            "highest_weight": json_weight(result.highest_weight().unwrap()),
            "dimension": json_dimension(result.dimension().unwrap()),
        }),
    }
}

fn print_cohomology(result: &CohomologyResult) {
    match result.degree() {
        None => println!("vanishes identically"),
        Some(degree) => println!(
            "degree {degree}, highest weight [{}], dimension {}, w = {}",
            result.highest_weight().unwrap(),
            result.dimension().unwrap(),
            result.w_used().unwrap()
        ),
    }
}

fn parse_ranges(ranges: &[String], rank: usize) -> Result<Vec<(i64, i64)>, CliError> {
    let mut parsed = Vec::new();
    for text in ranges {
        let parts: Vec<&str> = text.split("..").collect();
        let pair = match parts.as_slice() {
            [lo, hi] => (i64::from_str(lo.trim()), i64::from_str(hi.trim())),
            _ => {
                return Err(CliError::Usage(format!(
                    "malformed range {text:?}, expected \"lo..hi\""
                )))
            }
        };
        match pair {
            (Ok(lo), Ok(hi)) => parsed.push((lo, hi)),
            _ => {
                return Err(CliError::Usage(format!(
                    "malformed range {text:?}, expected \"lo..hi\""
                )))
            }
        }
    }
    if parsed.len() == 1 && rank > 1 {
        parsed = vec![parsed[0]; rank];
    }
    if parsed.len() != rank {
        return Err(CliError::Usage(format!(
            "expected 1 or {rank} ranges, got {}",
            parsed.len()
        )));
    }
    Ok(parsed)
}

/// Table-size cap from FLAGREP_MAX_TABLE (default one million points).
fn table_cap() -> Result<usize, CliError> {
    match std::env::var("FLAGREP_MAX_TABLE") {
        Err(_) => Ok(DEFAULT_TABLE_CAP),
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Usage(format!("FLAGREP_MAX_TABLE must be a positive integer, got {text:?}"))
        }),
    }
}
