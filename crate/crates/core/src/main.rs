//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 4 verification failure, and 3
//! for infeasibility or precondition violations (infeasible coalitions,
//! purity requirements, matroid requirements, scale limits). The
//! `SCGT_TOLERANCE` environment variable overrides the default 1e-9
//! comparison tolerance.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use scgt_core::attribution::{self, AttributionError};
use scgt_core::complex::ComplexError;
use scgt_core::games::GameError;
use scgt_core::io::{self, IoError};
use scgt_core::polytope::{self, PolytopeError};
use scgt_core::values::{self, ValueError};
use scgt_core::verify;

#[derive(Parser)]
#[command(
    name = "scgt",
    version,
    about = "Cooperative games on simplicial complexes: values, polytopes, attribution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect complexes
    Complex {
        #[command(subcommand)]
        command: ComplexCmd,
    },
    /// Individual and group values
    Values {
        #[command(subcommand)]
        command: ValuesCmd,
    },
    /// Facet polytope queries
    Polytope {
        #[command(subcommand)]
        command: PolytopeCmd,
    },
    /// Multi-touch attribution pipeline
    Attribution {
        #[command(subcommand)]
        command: AttributionCmd,
    },
    /// Run the seeded property suites on a built-in fixture
    Verify {
        /// One of: prototype, prototype-nonpure, u12, u23, u24, triangle,
        /// path3, path4, strip, bowtie
        #[arg(long, default_value = "prototype")]
        fixture: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Facets, rank, purity, matroid verdict, and face count
    Info { complex: PathBuf },
}

#[derive(Subcommand)]
enum ValuesCmd {
    /// Evaluate quasi-probabilistic values on a game
    Quasi {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// Facet-distribution-weighted Shapley group value
    Reduce {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        game: PathBuf,
        /// "uniform" or a distribution JSON file
        #[arg(long, default_value = "uniform")]
        dist: String,
    },
    /// Decompose quasi values over the facets containing their player
    Decompose {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
    },
}

#[derive(Subcommand)]
enum PolytopeCmd {
    /// Decide facet-polytope membership of a point
    Member {
        #[arg(long)]
        complex: PathBuf,
        /// Comma-separated coordinates, e.g. "0.2,0.2,0.8,0.6,0.6,0.6"
        #[arg(long)]
        point: String,
    },
}

#[derive(Subcommand)]
enum AttributionCmd {
    /// Ingest journeys, build the feasibility complex, attribute conversions
    Run {
        #[arg(long)]
        journeys: PathBuf,
        #[arg(long)]
        trackable: PathBuf,
        /// "shapley-reduce" or "quasi"
        #[arg(long, default_value = "shapley-reduce")]
        method: String,
        /// "uniform", "proportional", or a distribution JSON file
        #[arg(long, default_value = "uniform")]
        dist: String,
        /// Per-channel coefficient file (required for method=quasi)
        #[arg(long)]
        coeffs: Option<PathBuf>,
        /// Report destination; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn complex_code(err: &ComplexError) -> u8 {
    match err {
        ComplexError::InfeasibleFace(_) => 3,
        _ => 2,
    }
}

fn game_code(err: &GameError) -> u8 {
    match err {
        GameError::InfeasibleCoalition(_)
        | GameError::EmptyAnchor
        | GameError::ComplexMismatch => 3,
        GameError::NonzeroEmptyWorth => 2,
        GameError::Complex(e) => complex_code(e),
    }
}

fn value_code(err: &ValueError) -> u8 {
    match err {
        ValueError::CoefficientOutsideLink { .. }
        | ValueError::NegativeCoefficient(_)
        | ValueError::LambdaOutOfRange(_)
        | ValueError::LambdaMismatch { .. }
        | ValueError::NegativeWeight(_)
        | ValueError::WeightSumNotOne(_)
        | ValueError::DuplicatePlayer(_) => 2,
        ValueError::Game(e) => game_code(e),
        ValueError::Complex(e) => complex_code(e),
        _ => 3,
    }
}

fn io_code(err: &IoError) -> u8 {
    match err {
        IoError::Complex(e) => complex_code(e),
        IoError::Game(e) => game_code(e),
        IoError::Value(e) => value_code(e),
        _ => 2,
    }
}

fn polytope_code(err: &PolytopeError) -> u8 {
    match err {
        PolytopeError::DimensionMismatch { .. } => 2,
        PolytopeError::Value(e) => value_code(e),
        PolytopeError::Game(e) => game_code(e),
        _ => 3,
    }
}

fn attribution_code(err: &AttributionError) -> u8 {
    match err {
        AttributionError::UnknownChannel { .. }
        | AttributionError::MalformedRow { .. }
        | AttributionError::Csv(_)
        | AttributionError::MissingCoeffsFile
        | AttributionError::UnknownMethod(_) => 2,
        AttributionError::Io(e) => io_code(e),
        AttributionError::Value(e) => value_code(e),
        AttributionError::Game(e) => game_code(e),
        AttributionError::Complex(e) => complex_code(e),
        AttributionError::Polytope(e) => polytope_code(e),
        _ => 3,
    }
}

impl From<IoError> for Failure {
    fn from(err: IoError) -> Self {
        Failure {
            code: io_code(&err),
            message: err.to_string(),
        }
    }
}

impl From<ValueError> for Failure {
    fn from(err: ValueError) -> Self {
        Failure {
            code: value_code(&err),
            message: err.to_string(),
        }
    }
}

impl From<PolytopeError> for Failure {
    fn from(err: PolytopeError) -> Self {
        Failure {
            code: polytope_code(&err),
            message: err.to_string(),
        }
    }
}

impl From<AttributionError> for Failure {
    fn from(err: AttributionError) -> Self {
        Failure {
            code: attribution_code(&err),
            message: err.to_string(),
        }
    }
}

fn tolerance() -> Result<f64, Failure> {
    match std::env::var("SCGT_TOLERANCE") {
        Ok(raw) => match raw.parse::<f64>() {
            Ok(tol) if tol.is_finite() && tol >= 0.0 => Ok(tol),
            _ => Err(Failure::input(format!(
                "SCGT_TOLERANCE must be a finite non-negative number, found {raw:?}"
            ))),
        },
        Err(_) => Ok(1e-9),
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn complex_info(path: &Path) -> Result<(), Failure> {
    let complex = io::load_complex(path)?;
    let facets: Vec<Vec<u32>> = complex.facets().iter().map(|f| f.member_ids()).collect();
    let mut out = json!({
        "n": complex.n(),
        "facets": facets,
        "facet_count": complex.facets().len(),
        "rank": complex.rank(),
        "pure": complex.is_pure(),
        "matroid": complex.is_matroid(),
        "face_count": complex.face_count(),
    });
    if let Some(labels) = complex.labels() {
        out["labels"] = json!(labels);
    }
    print_json(&out);
    Ok(())
}

fn values_quasi(complex: &Path, game: &Path, coeffs: &Path) -> Result<(), Failure> {
    let complex = Arc::new(io::load_complex(complex)?);
    let worth = io::load_game_on(game, &complex)?;
    let quasi = io::load_coeffs(coeffs, &complex)?;
    let mut rows = Vec::new();
    for q in &quasi {
        let value = q.eval(&worth)?;
        rows.push(json!({
            "player": q.player().id(),
            "lambda": q.lambda(),
            "value": value,
        }));
    }
    print_json(&json!({ "values": rows }));
    Ok(())
}

fn values_reduce(complex: &Path, game: &Path, dist: &str) -> Result<(), Failure> {
    let tol = tolerance()?;
    let complex = Arc::new(io::load_complex(complex)?);
    let worth = io::load_game_on(game, &complex)?;
    let distribution = match dist {
        "uniform" => values::FacetDistribution::uniform(&complex),
        path => io::load_distribution(Path::new(path), &complex)?,
    };
    let values = values::reducible_group_value(&complex, &distribution, &worth, None)?;
    let rows: Vec<serde_json::Value> = complex
        .vertices()
        .map(|v| {
            let mut row = json!({
                "player": v.id(),
                "value": values[v.index()],
            });
            if let Some(label) = complex.label(v) {
                row["label"] = json!(label);
            }
            row
        })
        .collect();
    let channel_sum: f64 = values.iter().sum();
    let weighted: f64 = complex
        .facets()
        .iter()
        .map(|f| distribution.weight(f) * worth.value(*f))
        .sum();
    print_json(&json!({
        "values": rows,
        "efficiency": {
            "value_sum": channel_sum,
            "weighted_facet_worth": weighted,
            "residual": (channel_sum - weighted).abs(),
            "within_tolerance": (channel_sum - weighted).abs() <= tol,
        }
    }));
    Ok(())
}

fn values_decompose(complex: &Path, coeffs: &Path) -> Result<(), Failure> {
    let complex = Arc::new(io::load_complex(complex)?);
    let quasi = io::load_coeffs(coeffs, &complex)?;
    let mut rows = Vec::new();
    for q in &quasi {
        let decomposition = values::facet_decompose(q)?;
        let weights: Vec<serde_json::Value> = decomposition
            .weights()
            .iter()
            .map(|(facet, p)| json!({ "facet": facet.member_ids(), "P": p }))
            .collect();
        let locals: Vec<serde_json::Value> = decomposition
            .locals()
            .values()
            .map(|local| {
                let coefficients: Vec<serde_json::Value> = local
                    .coefficients()
                    .iter()
                    .map(|(face, p)| json!({ "face": face.member_ids(), "p": p }))
                    .collect();
                json!({
                    "facet": local.facet().member_ids(),
                    "coefficients": coefficients,
                })
            })
            .collect();
        rows.push(json!({
            "player": q.player().id(),
            "lambda": q.lambda(),
            "distribution": weights,
            "locals": locals,
        }));
    }
    print_json(&json!({ "decompositions": rows }));
    Ok(())
}

fn polytope_member(complex: &Path, point: &str) -> Result<(), Failure> {
    let tol = tolerance()?;
    let complex = io::load_complex(complex)?;
    let coords: Vec<f64> = point
        .split(',')
        .map(|t| match t.trim().parse::<f64>() {
            Ok(c) if c.is_finite() => Ok(c),
            _ => Err(Failure::input(format!("bad coordinate {t:?} in --point"))),
        })
        .collect::<Result<_, _>>()?;
    match polytope::polytope_membership(&complex, &coords, &tol)? {
        Some(dist) => {
            let realized = polytope::influence_vector(&complex, &dist)?;
            let residual = realized
                .coords()
                .iter()
                .zip(coords.iter())
                .map(|(a, b)| (a - b).abs())
                .fold(0.0f64, f64::max);
            let entries = io::DistFile::from_distribution(&complex, &dist);
            print_json(&json!({
                "member": true,
                "distribution": entries.weights,
                "residual": residual,
            }));
        }
        None => {
            print_json(&json!({
                "member": false,
                "distribution": null,
                "residual": null,
            }));
        }
    }
    Ok(())
}

fn attribution_run(
    journeys: &Path,
    trackable: &Path,
    method: &str,
    dist: &str,
    coeffs: Option<&Path>,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let report = attribution::run_pipeline(journeys, trackable, method, dist, coeffs)?;
    match out {
        Some(path) => {
            io::write_json(path, &report)?;
            println!("report written to {}", path.display());
        }
        None => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable report")
            );
        }
    }
    Ok(())
}

fn run_verify(fixture: &str, seed: u64) -> Result<bool, Failure> {
    let reports = attribution::run_verification(fixture, seed).ok_or_else(|| {
        Failure::input(format!(
            "unknown fixture {fixture:?}; expected one of {}",
            verify::FIXTURE_NAMES.join(", ")
        ))
    })?;
    let mut all_passed = true;
    for report in &reports {
        println!("{}", report.status_line());
        all_passed &= report.passed;
    }
    Ok(all_passed)
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Complex {
            command: ComplexCmd::Info { complex },
        } => {
            complex_info(&complex)?;
            Ok(0)
        }
        Command::Values { command } => {
            match command {
                ValuesCmd::Quasi {
                    complex,
                    game,
                    coeffs,
                } => values_quasi(&complex, &game, &coeffs)?,
                ValuesCmd::Reduce {
                    complex,
                    game,
                    dist,
                } => values_reduce(&complex, &game, &dist)?,
                ValuesCmd::Decompose { complex, coeffs } => values_decompose(&complex, &coeffs)?,
            }
            Ok(0)
        }
        Command::Polytope {
            command: PolytopeCmd::Member { complex, point },
        } => {
            polytope_member(&complex, &point)?;
            Ok(0)
        }
        Command::Attribution {
            command:
                AttributionCmd::Run {
                    journeys,
                    trackable,
                    method,
                    dist,
                    coeffs,
                    out,
                },
        } => {
            attribution_run(
                &journeys,
                &trackable,
                &method,
                &dist,
                coeffs.as_deref(),
                out.as_deref(),
            )?;
            Ok(0)
        }
        Command::Verify { fixture, seed } => {
            if run_verify(&fixture, seed)? {
                Ok(0)
            } else {
                Ok(4)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // Reject a malformed SCGT_TOLERANCE up front; the library would
    // otherwise fall back to the default silently.
    if let Err(failure) = tolerance() {
        eprintln!("error: {}", failure.message);
        return ExitCode::from(failure.code);
    }
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
