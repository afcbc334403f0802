//! `cogmap`: run cognitive-map inference, aggregate expert models,
//! enumerate hidden patterns, and work sutra arithmetic from the command
//! line.
//!
//! Exit status: 0 success; 1 invalid model or inputs; 2 iteration cap
//! exceeded; 3 malformed request (unknown label, bad seed, wrong engine,
//! failed sutra precondition).

mod sutra_cmd;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cogmap::combine::{combine_models, CombineMode};
use cogmap::dispatch::{infer, Engine, RunError, RunRequest, Seed};
use cogmap::fixtures::{fixture, validate_fixture_catalog};
use cogmap::render::survey_to_human;
use cogmap::survey::enumerate_hidden_patterns;
use cogmap::{load_model, EngineError, Model, NeutroValue, Side};

/// Environment variable naming a directory of model files that are found
/// by bare name before the bundled fixtures.
const FIXTURE_DIR_VAR: &str = "COGMAP_FIXTURES";

#[derive(Parser)]
#[command(
    name = "cogmap",
    version,
    about = "Cognitive-map inference and sutra arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one seed to its hidden pattern.
    Run(RunArgs),
    /// Sum or average several experts' models.
    Combine(CombineArgs),
    /// Run every single-node seed and tabulate the hidden patterns.
    Enumerate(EnumerateArgs),
    /// List the bundled fixtures.
    Fixtures,
    /// Work a sutra procedure.
    Sutra {
        /// Also run the conventional algorithm and compare.
        #[arg(long, global = true)]
        verify: bool,
        #[command(subcommand)]
        procedure: sutra_cmd::Procedure,
    },
}

#[derive(Args)]
struct ModelArgs {
    /// Model file, or the name of a bundled fixture.
    #[arg(long, short)]
    model: String,
    /// Engine; defaults to the one matching the model kind.
    #[arg(long, short)]
    engine: Option<Engine>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Nodes switched on, by label or 1-based index (comma-separated).
    #[arg(long, value_delimiter = ',', required_unless_present = "values")]
    on: Vec<String>,
    /// Full seed vector for the max-min engines (comma-separated values).
    #[arg(long, value_delimiter = ',', conflicts_with = "on")]
    values: Vec<String>,
    /// Side the seed lives on, for relational and bipartite runs.
    #[arg(long, value_enum, default_value_t = SideArg::Domain)]
    side: SideArg,
    /// Alternate between both sides of a max-min system.
    #[arg(long, conflicts_with = "monopartite")]
    bipartite: bool,
    /// Iterate a square max-min system forward only.
    #[arg(long)]
    monopartite: bool,
    /// Override the step cap.
    #[arg(long)]
    max_iterations: Option<usize>,
}

#[derive(Args)]
struct CombineArgs {
    /// Model files or fixture names.
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Aggregation.
    #[arg(long, value_enum, default_value_t = ModeArg::Sum)]
    mode: ModeArg,
    /// Output file; standard output if omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    model: ModelArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Domain,
    Range,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Domain => Side::Domain,
            SideArg::Range => Side::Range,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Sum,
    Average,
}

/// A failed command, carrying its exit status.
#[derive(Debug)]
pub(crate) enum Failure {
    /// Invalid model or inputs (status 1).
    Invalid(String),
    /// Iteration cap exceeded (status 2).
    Cap(String),
    /// Malformed request (status 3).
    Request(String),
}

impl Failure {
    fn status(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Cap(_) => 2,
            Failure::Request(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Cap(m) | Failure::Request(m) => m,
        }
    }
}

impl From<RunError> for Failure {
    fn from(e: RunError) -> Self {
        match &e {
            RunError::Engine(EngineError::IterationCap { .. }) => Failure::Cap(e.to_string()),
            RunError::Engine(
                EngineError::NotSquare { .. }
                | EngineError::ShapeMismatch { .. }
                | EngineError::NoMatrices,
            ) => Failure::Invalid(e.to_string()),
            _ => Failure::Request(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(3);
        }
    };
    let result = match cli.command {
        Command::Run(args) => cmd_run(&args),
        Command::Combine(args) => cmd_combine(&args),
        Command::Enumerate(args) => cmd_enumerate(&args),
        Command::Fixtures => cmd_fixtures(),
        Command::Sutra { verify, procedure } => sutra_cmd::run(&procedure, verify),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.status())
        }
    }
}

/// Loads a model from a file path, from the fixture directory override, or
/// from the bundled catalog, in that order.
fn resolve_model(spec: &str) -> Result<Model, Failure> {
    let read = |path: &Path| {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
        load_model(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
    };
    let path = Path::new(spec);
    if path.is_file() {
        return read(path);
    }
    if let Some(dir) = std::env::var_os(FIXTURE_DIR_VAR) {
        let candidate = Path::new(&dir).join(format!("{spec}.json"));
        if candidate.is_file() {
            return read(&candidate);
        }
    }
    fixture(spec)
        .ok_or_else(|| Failure::Invalid(format!("no model file or fixture named {spec:?}")))
}

fn cmd_run(args: &RunArgs) -> Result<String, Failure> {
    let model = resolve_model(&args.model.model)?;
    let engine = args
        .model
        .engine
        .unwrap_or_else(|| Engine::for_kind(model.kind()));
    let side = Side::from(args.side);
    let seed = build_seed(&model, engine, side, &args.on, &args.values)?;
    let request = RunRequest {
        seed,
        side,
        bipartite: match (args.bipartite, args.monopartite) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        },
        max_iterations: args.max_iterations,
    };
    let trace = infer(&model, &args.model.model, engine, &request)?;
    Ok(match args.model.format {
        Format::Human => trace.to_human(),
        Format::Json => trace.to_json(),
    })
}

/// Turns `--on` labels/indices or `--values` into a seed for `engine`.
fn build_seed(
    model: &Model,
    engine: Engine,
    side: Side,
    on: &[String],
    values: &[String],
) -> Result<Seed, Failure> {
    if !values.is_empty() {
        let parsed = values
            .iter()
            .map(|v| {
                v.trim()
                    .parse::<NeutroValue>()
                    .map_err(|_| Failure::Request(format!("{v:?} is not a value")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Seed::Values(parsed));
    }
    let space = match side {
        Side::Domain => model.row_space(),
        Side::Range => model.col_space(),
    };
    let mut bits = vec![0u8; space.len()];
    for node in on {
        let node = node.trim();
        let index = space
            .index_of(node)
            .or_else(|| {
                node.parse::<usize>()
                    .ok()
                    .filter(|&k| (1..=space.len()).contains(&k))
                    .map(|k| k - 1)
            })
            .ok_or_else(|| Failure::Request(format!("unknown node {node:?}")))?;
        bits[index] = 1;
    }
    Ok(if engine.takes_values() {
        Seed::Values(
            bits.into_iter()
                .map(|b| NeutroValue::from(i64::from(b)))
                .collect(),
        )
    } else {
        Seed::Crisp(bits)
    })
}

fn cmd_combine(args: &CombineArgs) -> Result<String, Failure> {
    let models = args
        .inputs
        .iter()
        .map(|spec| resolve_model(spec))
        .collect::<Result<Vec<_>, _>>()?;
    let mode = match args.mode {
        ModeArg::Sum => CombineMode::Sum,
        ModeArg::Average => CombineMode::Average,
    };
    let combined = combine_models(&models, mode).map_err(|e| Failure::Invalid(e.to_string()))?;
    let document = combined.to_json();
    match &args.output {
        Some(path) => {
            std::fs::write(path, &document)
                .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(document),
    }
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<String, Failure> {
    let model = resolve_model(&args.model.model)?;
    let engine = args
        .model
        .engine
        .unwrap_or_else(|| Engine::for_kind(model.kind()));
    let rows = enumerate_hidden_patterns(&model, engine)?;
    Ok(match args.model.format {
        Format::Human => survey_to_human(&rows),
        Format::Json => serde_json::to_string_pretty(&rows).expect("tables serialize") + "\n",
    })
}

fn cmd_fixtures() -> Result<String, Failure> {
    let entries =
        validate_fixture_catalog().map_err(|(name, e)| Failure::Invalid(format!("{name}: {e}")))?;
    Ok(entries
        .iter()
        .map(|e| {
            format!(
                "{:<30} {:<7} {}×{}\n",
                e.name,
                e.kind.to_string(),
                e.shape.0,
                e.shape.1
            )
        })
        .collect())
}
