mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Split-graph shelling antimatroids from the command line.
///
/// Graph files hold `K:`, `I:` and `E:` lines; family files hold one set per
/// line with `-` for the empty set. Set arguments are trailing vertex ids,
/// `-` for the empty set.
#[derive(Debug, Parser)]
#[command(name = "antikit", version)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphSet {
    /// Split graph file.
    pub graph: PathBuf,
    /// Vertex ids of the set, or `-` for the empty set.
    #[arg(required = true)]
    pub set: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and check a split graph file.
    Validate { graph: PathBuf },
    /// Test whether a vertex set is feasible.
    Feasible(GraphSet),
    /// Print a shelling order of a feasible set.
    Shelling(GraphSet),
    /// List every feasible set.
    Enumerate { graph: PathBuf },
    /// Tell whether a feasible set is Star or i-feasible.
    Classify(GraphSet),
    /// Find a maximum-weight feasible set.
    Maxweight {
        graph: PathBuf,
        /// Weight file with `vertex weight` lines.
        weights: PathBuf,
        /// Minimize instead of maximize.
        #[arg(long)]
        min: bool,
    },
    /// List the paths of the antimatroid.
    Paths { graph: PathBuf },
    /// List the rooted circuits.
    Circuits { graph: PathBuf },
    /// Test whether a vertex set is free.
    Free(GraphSet),
    /// Trace of a family on a vertex set.
    Trace {
        /// Family file.
        family: PathBuf,
        #[arg(required = true)]
        set: Vec<String>,
    },
    /// Rebuild the split graph of a feasible family.
    Reconstruct {
        family: PathBuf,
        /// Return the edgeless graph for a full power set.
        #[arg(long)]
        force_canonical: bool,
    },
    /// Decide whether a family is a split-graph shelling antimatroid.
    Recognize {
        family: PathBuf,
        /// Accept a full power set with the edgeless graph.
        #[arg(long)]
        force_canonical: bool,
    },
    /// Build the independent-set reduction of a general graph.
    Hardness {
        /// Graph file with `V:` and `E:` lines.
        graph: PathBuf,
        /// Vertex weight offset, a decimal or fraction in (0, 1).
        #[arg(long, default_value = "0.1", allow_hyphen_values = true)]
        delta: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
