//! Command-line front end: matrix ingestion plus JSON/CSV/SVG emitters for
//! numerical-range computations.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use numrange::ellipse::elliptical_range;
use numrange::kippenhahn::{self, convex_hull, fov_boundary, kippenhahn_points};
use numrange::matrix::{self, eigenvalues, hermitian_parts};
use numrange::poly::{adjugate_dual, conic_of, normalize_conic, pencil_determinant};
use numrange::verify::{self, default_suite};
use numrange::{ellipse, poly, svg, Error, Matrix64};

#[derive(Parser)]
#[command(
    name = "numrange",
    about = "Numerical ranges of complex matrices: ellipses, Kippenhahn polynomials, dual conics, boundaries and verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args)]
struct Common {
    /// Path to a matrix JSON file: {"n":2,"entries":[[[re,im],...],...]}
    #[arg(long, conflicts_with = "matrix")]
    input: Option<PathBuf>,
    /// Inline matrix JSON literal
    #[arg(long)]
    matrix: Option<String>,
    /// Angle grid size for sweeps
    #[arg(long, default_value_t = 720)]
    grid: usize,
    /// Seed for randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Verification tolerance
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Output path (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format; defaults to the subcommand's natural format
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form elliptical disk F(A) of a 2x2 matrix (JSON)
    Ellipse(Common),
    /// Boundary-generating polynomial det(H1 u + H2 v + I w) (JSON)
    Poly(Common),
    /// Normalized dual conic of the pencil polynomial, 2x2 only (JSON)
    Dual(Common),
    /// Boundary-generating curve samples over the angle grid (CSV)
    Boundary(Common),
    /// Verification suite; exit 0 iff every check passes (JSON)
    Verify(Common),
    /// SVG figure: hull, boundary samples and eigenvalue markers
    Plot(Common),
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DIMENSION: u8 = 3;

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_DIMENSION,
    }
}

fn load_matrix(common: &Common) -> Result<Matrix64, (u8, String)> {
    let text = match (&common.input, &common.matrix) {
        (Some(path), None) => fs::read_to_string(path)
            .map_err(|e| (EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?,
        (None, Some(inline)) => inline.clone(),
        _ => {
            return Err((
                EXIT_PARSE,
                "provide exactly one of --input or --matrix".into(),
            ))
        }
    };
    matrix::json::parse::<f64>(&text).map_err(|e| (exit_code_for(&e), e.to_string()))
}

fn check_format(requested: Option<Format>, natural: Format) -> Result<(), (u8, String)> {
    match requested {
        None => Ok(()),
        Some(f) if f == natural => Ok(()),
        Some(_) => Err((
            EXIT_PARSE,
            "requested format is not supported by this subcommand".into(),
        )),
    }
}

fn emit(common: &Common, document: &str) -> Result<(), (u8, String)> {
    match &common.output {
        Some(path) => fs::write(path, document)
            .map_err(|e| (EXIT_PARSE, format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(document.as_bytes())
                .map_err(|e| (EXIT_PARSE, format!("cannot write stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, (u8, String)> {
    let lift = |e: Error| (exit_code_for(&e), e.to_string());
    match cli.command {
        Command::Ellipse(c) => {
            check_format(c.format, Format::Json)?;
            let a = load_matrix(&c)?;
            let e = elliptical_range(&a).map_err(lift)?;
            let doc = serde_json::to_string_pretty(&ellipse::json::to_json(&e)).unwrap();
            emit(&c, &(doc + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly(c) => {
            check_format(c.format, Format::Json)?;
            let a = load_matrix(&c)?;
            let p = pencil_determinant(&hermitian_parts(&a)).map_err(lift)?;
            let doc = serde_json::to_string_pretty(&poly::json::to_json(&p)).unwrap();
            emit(&c, &(doc + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual(c) => {
            check_format(c.format, Format::Json)?;
            let a = load_matrix(&c)?;
            let p = pencil_determinant(&hermitian_parts(&a)).map_err(lift)?;
            let conic = conic_of(&p).map_err(lift)?;
            let dual = adjugate_dual(&conic).map_err(lift)?;
            let normalized = normalize_conic(&dual).map_err(lift)?;
            let doc =
                serde_json::to_string_pretty(&poly::json::to_json(&normalized.to_poly())).unwrap();
            emit(&c, &(doc + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Boundary(c) => {
            check_format(c.format, Format::Csv)?;
            let a = load_matrix(&c)?;
            let samples = kippenhahn_points(&a, c.grid).map_err(lift)?;
            emit(&c, &kippenhahn::csv::to_csv(&samples))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(c) => {
            check_format(c.format, Format::Json)?;
            if c.tol <= 0.0 {
                return Err((EXIT_PARSE, "tolerance must be positive".into()));
            }
            let a = load_matrix(&c)?;
            let reports = default_suite(&a, c.grid, c.seed, c.tol).map_err(lift)?;
            let doc =
                serde_json::to_string_pretty(&verify::json::suite_to_json(&reports)).unwrap();
            emit(&c, &(doc + "\n"))?;
            if reports.iter().all(|r| r.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY_FAILED))
            }
        }
        Command::Plot(c) => {
            check_format(c.format, Format::Svg)?;
            let a = load_matrix(&c)?;
            let boundary = fov_boundary(&a, c.grid).map_err(lift)?;
            let pts: Vec<_> = boundary.iter().map(|s| s.point).collect();
            let hull = convex_hull(&pts).map_err(lift)?;
            let markers = eigenvalues(&a).map_err(lift)?;
            emit(&c, &svg::render(&boundary, &hull, &markers))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err((code, msg)) => fail(code, msg),
    }
}
