//! `rsfix`: batch analyses of reaction systems from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "rsfix", version, about = "Fixed points, attractors and reductions for reaction systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a single-system problem.
    Analyze {
        system: PathBuf,
        #[arg(long, value_enum, default_value = "fixpoints")]
        problem: AnalyzeProblem,
        #[command(flatten)]
        engine: Engine,
        /// Distinguished state for `given-state-attractor`, e.g. `{a,b}`.
        #[arg(long)]
        state: Option<String>,
    },
    /// Decide a problem over two systems with the same background set.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        problem: CompareProblem,
        #[command(flatten)]
        engine: Engine,
    },
    /// Decide whether the result function is a bijection.
    Bijective {
        system: PathBuf,
        #[arg(long, default_value_t = rsfix::dynamics::DEFAULT_CAP)]
        cap: usize,
    },
    /// Least and greatest fixed points of an inhibitorless system.
    Lfp { system: PathBuf },
    /// Compile a formula into a gadget system.
    Reduce {
        #[arg(value_parser = construction_names())]
        construction: String,
        formula: PathBuf,
        /// Output path for system A; B goes to `<stem>.b.rsys`, the manifest
        /// to `<stem>.json`. Without it, the systems are printed.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Iterate the result function from a state.
    Orbit {
        system: PathBuf,
        #[arg(long)]
        init: String,
        #[arg(long, default_value_t = 1 << 16)]
        max_steps: usize,
    },
    /// Write the transition graph as DOT.
    Graph {
        system: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Only visit subsets of this state.
        #[arg(long)]
        restrict: Option<String>,
        /// Allow graphs with more than 256 nodes.
        #[arg(long)]
        force: bool,
    },
    /// Solve a DIMACS CNF or a QDIMACS forall-exists CNF.
    Solve {
        formula: PathBuf,
        #[arg(long, default_value_t = rsfix::logic::DEFAULT_CNF_CAP)]
        cap: usize,
        #[arg(long, default_value_t = rsfix::logic::DEFAULT_QBF_OUTER_CAP)]
        outer_cap: usize,
    },
}

#[derive(clap::Args, Debug, Clone)]
struct Engine {
    #[arg(long, value_enum, default_value = "brute")]
    mode: EngineMode,
    /// State-space cap for brute force.
    #[arg(long, default_value_t = rsfix::dynamics::DEFAULT_CAP)]
    cap: usize,
    /// How `U != T` is encoded in attractor constraints.
    #[arg(long, value_enum, default_value = "direct")]
    encoding: Encoding,
    /// External solver command; `{input}` is replaced by the input path.
    #[arg(long)]
    solver: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum EngineMode {
    Brute,
    Sat,
    Qbf,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Encoding {
    /// `U` differs from `T` in some entity.
    Direct,
    /// `U` differs from `res(T)`; sound for fixed points only.
    Reach,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum AnalyzeProblem {
    /// List every fixed point; YES if there is one.
    Fixpoints,
    /// List every attractor; YES if there is one.
    Attractors,
    ExistsFixpoint,
    ExistsAttractor,
    ExistsFixge,
    GivenStateAttractor,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CompareProblem {
    ResEq,
    CommonFixpoint,
    CommonAttractor,
    CommonFixge,
    SharedFixpoints,
    SharedAttractors,
    SharedFixge,
}

fn construction_names() -> clap::builder::PossibleValuesParser {
    rsfix::Construction::ALL.iter().map(|c| c.name()).collect::<Vec<_>>().into()
}

fn exit_code(e: &rsfix::Error) -> u8 {
    match e {
        rsfix::Error::Parse { .. } => 3,
        rsfix::Error::Capability { .. } => 4,
        rsfix::Error::Recheck(_) => 5,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.error);
            if let Some(path) = e.path {
                eprintln!("  in {}", path.display());
            }
            ExitCode::from(exit_code(&e.error))
        }
    }
}
