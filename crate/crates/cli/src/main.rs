use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fivevertex::lattice::Family;
use fivevertex::patterns::GtPattern;
use fivevertex::verify::SweepOptions;
use fivevertex_cli::commands::{self, StatesOut};
use fivevertex_cli::CliError;

#[derive(Parser)]
#[command(name = "fivevertex", version, about = "Colored five-vertex models, Demazure characters and crystals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutKind {
    Count,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Open,
    Closed,
    Generalized,
    Reduced,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Open => Family::Open,
            FamilyArg::Closed => Family::Closed,
            FamilyArg::Generalized => Family::Generalized,
            FamilyArg::Reduced => Family::Reduced,
        }
    }
}

/// Comma-separated list, kept whole so clap treats it as one value.
#[derive(Clone, Debug)]
struct List<T>(Vec<T>);

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<List<T>, String>
where
    T::Err: std::fmt::Display,
{
    s.split(',').map(|p| p.trim().parse::<T>().map_err(|e| format!("{p:?}: {e}"))).collect::<Result<_, _>>().map(List)
}

fn parse_gtp(s: &str) -> Result<GtPattern, String> {
    s.parse::<GtPattern>().map_err(|e| e.to_string())
}

#[derive(clap::Args)]
struct Model {
    /// Partition with trailing zeros, e.g. 3,2,0.
    #[arg(long, value_parser = parse_list::<i64>)]
    lambda: List<i64>,
    /// One-line permutation, e.g. 2,3,1.
    #[arg(long, value_parser = parse_list::<usize>)]
    w: List<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate the states of a model.
    States {
        #[command(flatten)]
        model: Model,
        #[arg(long, value_enum, default_value = "closed")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "count")]
        out: OutKind,
        /// Keep only states with this pattern, rows separated by '/'.
        #[arg(long, value_parser = parse_gtp)]
        gtp: Option<GtPattern>,
        /// Directory for SVG output when several states match.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Partition function.
    Partfn {
        #[command(flatten)]
        model: Model,
        #[arg(long, value_enum, default_value = "closed")]
        family: FamilyArg,
    },
    /// Demazure character.
    Char {
        #[command(flatten)]
        model: Model,
    },
    /// Demazure atom.
    Atom {
        #[command(flatten)]
        model: Model,
    },
    /// Tableaux of a Demazure crystal, or of its atom with --atoms.
    Crystal {
        #[command(flatten)]
        model: Model,
        #[arg(long)]
        atoms: bool,
    },
    /// Run verification sweeps; JSON-lines output.
    Verify {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        lambda_max: i64,
        /// all|partition|states|bijection|shortcut|tau|crystal
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Draw a state document as SVG.
    Render {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli, sink: &mut dyn Write) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::States { model, family, out, gtp, dir } => {
            let spec = commands::model(&model.lambda.0, &model.w.0, family.into())?;
            let out = match out {
                OutKind::Count => StatesOut::Count,
                OutKind::Json => StatesOut::Json,
                OutKind::Svg => StatesOut::Svg,
            };
            commands::states(&spec, gtp.as_ref(), out, dir.as_deref(), sink)
        }
        Cmd::Partfn { model, family } => {
            let spec = commands::model(&model.lambda.0, &model.w.0, family.into())?;
            commands::partfn(&spec, sink)
        }
        Cmd::Char { model } => commands::character(&model.lambda.0, &model.w.0, false, sink),
        Cmd::Atom { model } => commands::character(&model.lambda.0, &model.w.0, true, sink),
        Cmd::Crystal { model, atoms } => commands::crystal(&model.lambda.0, &model.w.0, atoms, sink),
        Cmd::Verify { rank, lambda_max, check, out, jobs } => {
            if rank == 0 || lambda_max < 0 {
                return Err(CliError::Usage("--rank must be positive and --lambda-max nonnegative".into()));
            }
            let checks = commands::parse_checks(&check)?;
            let opts = SweepOptions { max_rank: rank, lambda_max, checks, jobs: jobs.max(1) };
            commands::verify(&opts, out.as_deref(), sink)
        }
        Cmd::Render { state, out } => commands::render(&state, out.as_deref(), sink),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let result = run(cli, &mut lock);
    let _ = lock.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
