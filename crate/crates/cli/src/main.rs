//! Command-line front end: per-graph depth, Ext, Hilbert series and Lie
//! dimensions, surface groups, batch runs and the verification sweeps.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 a mathematical
//! cross-check disagreed.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "raag-depth", version, about = "Depth of group algebras of right-angled Artin groups and surface groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Record wall-clock timings in the output (makes it nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Edge-list file: a vertex count line, then one `i j` pair per line.
    #[arg(long, value_name = "PATH")]
    pub edges: Option<PathBuf>,

    /// JSON file `{"labels": [...], "edges": [[a, b], ...]}`.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Link-cohomology connectivity `n_P`.
    #[value(name = "n-p", alias = "n_p", alias = "np")]
    NP,
    /// Least nonzero row of the link-cohomology table.
    ExtTable,
    /// Least dimension of a disconnecting simplex, plus two.
    Disconnecting,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionChoice {
    Froberg,
    Minimal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Toggle reduced H⁰ of every complex spanning its whole graph.
    Cohomology,
    /// Flip one sign of the degree-2 Fröberg differential.
    Froberg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Depth of Q[A] for the group with the given commutation graph.
    Depth {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Truncated Ext^p(Q, UL) from a free resolution.
    Ext {
        #[command(flatten)]
        input: GraphInput,
        /// Weight window.
        #[arg(long, default_value_t = 6)]
        weights: usize,
        /// Highest homological degree to compute.
        #[arg(long)]
        pmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = ResolutionChoice::Froberg)]
        resolution: ResolutionChoice,
    },
    /// Dimensions of UL by three independent methods.
    Hilbert {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 8)]
        weights: usize,
    },
    /// Dimensions of the graded Lie algebra L.
    LieDims {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 6)]
        weights: usize,
    },
    /// Graded data and truncated Ext of a surface group.
    Surface {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 6)]
        weights: usize,
        /// Highest degree of the minimal resolution; 0 skips Ext.
        #[arg(long, default_value_t = 3)]
        pmax: usize,
    },
    /// Exhaustive cross-checks over all labeled graphs.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Vertex bound for the resolution and Hilbert series sweeps.
        #[arg(long, default_value_t = 5)]
        algebra_vertices: usize,
        /// Weight window for Lie dimensions and resolutions.
        #[arg(long, default_value_t = 6)]
        weights: usize,
        /// Weight through which UL dimensions are compared.
        #[arg(long, default_value_t = 8)]
        ul_weights: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt a computation to confirm the sweeps catch it.
        #[arg(long, value_enum)]
        inject_fault: Vec<Fault>,
    },
    /// Depth reports for many graph files (directories are expanded).
    Batch {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (doc, status) = commands::run(&cli);
    output::emit(&doc, cli.format);
    ExitCode::from(status.code())
}
