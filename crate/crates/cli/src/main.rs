//! `tmdesign`: construct, verify and certify odd-index interval and
//! spherical designs from the command line.
//!
//! Exit codes: 0 verified or certified, 1 negative mathematical result,
//! 2 usage or parse error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Failure;

#[derive(Debug, Parser)]
#[command(name = "tmdesign", version, about = "Odd-index interval and spherical designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a design and verify it.
    Construct(ConstructArgs),
    /// Check the T_m conditions of a design read from a JSON file.
    Verify(VerifyArgs),
    /// Produce a symmetry or antipodality certificate.
    Certify(CertifyArgs),
    /// Evaluate Newton's identities or the alternating binomial sums.
    Identities(IdentitiesArgs),
    /// Search for non-antipodal six-point T_2-designs on the circle.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConstructKind {
    PolygonWeighted,
    Binomial,
    Perturbed,
    SphericalPolygon,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    kind: ConstructKind,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Perturbation for `perturbed`; chosen automatically when absent.
    #[arg(long)]
    epsilon: Option<String>,
    /// Root refinement precision for `perturbed`.
    #[arg(long, default_value = "1e-30")]
    precision: String,
    /// Rotation angle in radians for `spherical-polygon`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    rotation: f64,
    /// Tolerance for the floating constructions.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyKind {
    Interval,
    Weighted,
    Spherical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Approximate,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// JSON input document.
    file: PathBuf,
    #[arg(long)]
    m: usize,
    /// Overrides the document's mode; exact when neither is given.
    #[arg(long)]
    mode: Option<ModeArg>,
    /// Zero tolerance, required in approximate mode unless the document has one.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    kind: VerifyKind,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CertifyKind {
    Symmetry,
    WeightedSymmetry,
    Antipodal,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    kind: CertifyKind,
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentityKind {
    Newton,
    BinomSum,
}

#[derive(Debug, Args)]
struct IdentitiesArgs {
    kind: IdentityKind,
    #[arg(long)]
    n: Option<u64>,
    /// Comma-separated rational roots for `newton`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    roots: Vec<String>,
    /// Highest power sum for `newton`; defaults to the number of roots.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SearchKind {
    SixPoint,
}

#[derive(Debug, Args)]
struct SearchArgs {
    kind: SearchKind,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Lower bound on ||x_i + x_j|| over all pairs.
    #[arg(long, default_value_t = 0.1)]
    margin: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Construct(a) => commands::construct(a),
        Command::Verify(a) => commands::verify(a),
        Command::Certify(a) => commands::certify(a),
        Command::Identities(a) => commands::identities(a),
        Command::Search(a) => commands::search(a),
    };
    let (doc, code) = match result {
        Ok(outcome) => (outcome.doc, if outcome.ok { 0 } else { 1 }),
        Err(failure) => {
            eprintln!("tmdesign: {}", failure.message());
            (failure.payload(), failure.exit_code())
        }
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    text.push('\n');
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("tmdesign: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}

impl From<ModeArg> for tm_designs::io::Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => tm_designs::io::Mode::Exact,
            ModeArg::Approximate => tm_designs::io::Mode::Approximate,
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        if self.is_usage() {
            2
        } else {
            1
        }
    }
}
