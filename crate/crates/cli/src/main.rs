mod jobs;
mod suite;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superprolong::{Error, FieldTag, Gaussian, Rational};

#[derive(Parser, Debug)]
#[command(name = "superprolong", version, about = "Exact Tanaka prolongation, Spencer cohomology and odd-ODE symmetries")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Run the built-in regression battery against the expected results.
    #[arg(long, global = true)]
    paper_suite: bool,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Scalar field.
    #[arg(long, global = true, value_enum, default_value = "Q")]
    pub field: FieldArg,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Qi")]
    Qi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum G0Arg {
    /// All degree-0 derivations of the symbol.
    Full,
    /// Derivations diagonal in the symbol basis.
    Scalings,
    /// The matrix algebra that comes with the named entry.
    Given,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleArg {
    /// Adjoint module of a graded algebra.
    Adjoint,
    /// The prolongation `m ⊕ g0 ⊕ g1 ⊕ …`.
    Prolongation,
    /// The symbol itself.
    Symbol,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Catalog name, e.g. `shc_symbol`, `odd_ode_symbol:3`, `cpe:2`.
    #[arg(long, conflicts_with = "input")]
    pub name: Option<String>,

    /// Algebra JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ProlongArgs {
    #[command(flatten)]
    pub source: Source,

    #[arg(long, value_enum)]
    pub g0: Option<G0Arg>,

    /// Reduction `ℓ:subspace` with subspace `zero`, `all` or `trace`; repeatable.
    #[arg(long)]
    pub reduce: Vec<String>,

    #[arg(long)]
    pub max_degree: Option<i32>,
}

#[derive(Args, Debug, Clone)]
pub struct DistArgs {
    /// Distribution JSON file.
    #[arg(long, conflicts_with = "name")]
    pub input: Option<PathBuf>,

    /// Left-invariant model of a negatively graded catalog symbol.
    #[arg(long)]
    pub name: Option<String>,

    /// Seed for the sample points.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Sample points besides the base point.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,

    #[arg(long, default_value_t = 8)]
    pub max_depth: usize,

    /// Polynomial degree cap during flag reduction.
    #[arg(long, default_value_t = superprolong::superfield::flag::DEFAULT_DEGREE_CAP)]
    pub degree_cap: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tanaka prolongation pr(m, g0).
    Prolong(ProlongArgs),
    /// Spencer cohomology H^{d,k}.
    Cohomology {
        #[command(flatten)]
        prolong: ProlongArgs,

        #[arg(long, default_value_t = 1)]
        k: usize,

        /// Degree or range `a..b` (inclusive); default: every degree with cochains.
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,

        #[arg(long, value_enum)]
        module: Option<ModuleArg>,
    },
    /// Derived flag, regularity and symbol of a distribution.
    Symbol(DistArgs),
    /// Strong regularity verdict with a witness.
    CheckRegular(DistArgs),
    /// Contact symmetries of an odd ODE.
    Odesym {
        /// ODE JSON file.
        #[arg(long, conflicts_with_all = ["order", "rhs"])]
        input: Option<PathBuf>,

        #[arg(long, requires = "rhs")]
        order: Option<usize>,

        /// Right-hand side, e.g. `xi2` or `ξ·ξ′·ξ″`.
        #[arg(long, allow_hyphen_values = true)]
        rhs: Option<String>,

        #[arg(long)]
        poly_degree: Option<u32>,

        /// Extra exponentials `λ` (for `e^{λx}`), comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        exponentials: Vec<String>,
    },
}

/// Outcome of a job: rendered output and exit status.
pub struct Output {
    pub json: serde_json::Value,
    pub table: String,
    pub code: u8,
}

pub fn input_error(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistent(_) => 1,
        Error::DegreeCap { .. } => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> superprolong::Result<Output> {
    let c = &cli.common;
    match (&cli.command, cli.paper_suite) {
        (_, true) => suite::run(),
        (None, false) => Err(input_error("no command given; see --help")),
        (Some(cmd), false) => match c.field {
            FieldArg::Q => dispatch::<Rational>(cmd),
            FieldArg::Qi => dispatch::<Gaussian>(cmd),
        },
    }
}

fn dispatch<F: superprolong::Field>(cmd: &Command) -> superprolong::Result<Output> {
    match cmd {
        Command::Prolong(a) => jobs::prolong_cmd::<F>(a),
        Command::Cohomology { prolong, k, d, module } => jobs::cohomology_cmd::<F>(prolong, *k, d.as_deref(), *module),
        Command::Symbol(a) => jobs::distribution_cmd::<F>(a, true),
        Command::CheckRegular(a) => jobs::distribution_cmd::<F>(a, false),
        Command::Odesym { input, order, rhs, poly_degree, exponentials } => {
            if F::TAG != FieldTag::Q {
                return Err(input_error("odesym works over Q only"));
            }
            jobs::odesym_cmd(input.as_deref(), *order, rhs.as_deref(), *poly_degree, exponentials)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = match cli.common.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable") + "\n",
                Format::Table => out.table,
            };
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
