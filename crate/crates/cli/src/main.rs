//! `rlk`: identity checks, derived constructions and truncated enveloping
//! algebras for algebra files.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or is
//! inconclusive, 2 on usage, parse or precondition errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rlk::algebra::DEFAULT_CAP;
use rlk::{Mode, SweepConfig};

#[derive(Parser, Debug)]
#[command(
    name = "rlk",
    version,
    about = "Exact checks for restricted Leibniz and related algebras"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalArgs {
    /// Enumerate element sweeps when they fit under the cap, or always sample.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest element space enumerated exhaustively.
    #[arg(long, global = true, env = "RLK_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Number of samples for sampled sweeps.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Record the wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl GlobalArgs {
    fn sweep(&self) -> SweepConfig {
        SweepConfig {
            mode: match self.mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Sample => Mode::Sample,
            },
            cap: self.cap,
            samples: self.samples,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run identity checks on an algebra file.
    Check(CheckArgs),
    /// Build a derived algebra and verify it.
    Derive(DeriveArgs),
    /// Truncated restricted enveloping algebras.
    Envelope(EnvelopeArgs),
    /// Truncated free algebras.
    Free(FreeArgs),
    /// Print a built-in example algebra file.
    Fixture(FixtureArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    file: PathBuf,
    /// Identities to check (see `--list`).
    identities: Vec<String>,
    /// Operation to check, overriding the identity's default.
    #[arg(long)]
    op: Option<String>,
    /// p-map for restricted checks.
    #[arg(long)]
    pmap: Option<String>,
    /// Largest power for `lemdias`.
    #[arg(long, default_value_t = 5)]
    max_power: u64,
    /// List the available identities and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Dleib,
    Gln,
    OperatorDialgebra,
    TensorPrelie,
    Antisymmetrize,
}

#[derive(Args, Debug)]
pub struct DeriveArgs {
    file: PathBuf,
    #[arg(value_enum)]
    construction: Construction,
    /// Matrix size for `gln`.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Operator matrix for `operator-dialgebra`, rows separated by `;`.
    #[arg(long)]
    matrix: Option<String>,
    /// Zinbiel factor for `tensor-prelie`.
    #[arg(long = "with")]
    with: Option<PathBuf>,
    /// Operation of the input to use.
    #[arg(long)]
    op: Option<String>,
    /// Write the derived algebra here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Ud,
    Ul,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Signs {
    Derived,
    Printed,
}

#[derive(Args, Debug)]
pub struct EnvelopeArgs {
    file: PathBuf,
    #[arg(value_enum)]
    which: Which,
    /// Truncation degree; must be at least p.
    #[arg(long)]
    degree: usize,
    #[arg(long, default_value = "bracket")]
    bracket: String,
    #[arg(long)]
    pmap: Option<String>,
    /// Sign convention for the UL_p bracket relations.
    #[arg(long, value_enum, default_value_t = Signs::Derived)]
    signs: Signs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FreeKindArg {
    Dias,
    Zinbiel,
    Assoc,
}

#[derive(Args, Debug)]
pub struct FreeArgs {
    #[arg(value_enum)]
    kind: FreeKindArg,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    generators: usize,
    #[arg(long)]
    degree: usize,
    /// Write the truncated free algebra here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FixtureName {
    L2,
    Abelian,
    Broken,
    DualNumbers,
    Mat2,
    UpperTriangular,
    Zinbiel,
}

#[derive(Args, Debug)]
pub struct FixtureArgs {
    #[arg(value_enum)]
    name: FixtureName,
    #[arg(long, default_value_t = 2)]
    p: u64,
    /// Dimension (`abelian`), or truncation degree (`zinbiel`).
    #[arg(long, default_value_t = 1)]
    size: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(a) => commands::check(&cli.global, a),
        Command::Derive(a) => commands::derive(&cli.global, a),
        Command::Envelope(a) => commands::envelope(&cli.global, a),
        Command::Free(a) => commands::free(&cli.global, a),
        Command::Fixture(a) => commands::fixture(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("rlk: {e}");
            ExitCode::from(2)
        }
    }
}
