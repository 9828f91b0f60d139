use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "diambound", version, about = "Lower and upper bounds on the diameter of large undirected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate BFS heuristics and report the best bounds found.
    Bounds(BoundsArgs),
    /// Exact diameter by one BFS per vertex (small graphs only).
    Exact(ExactArgs),
    /// Write a synthetic graph as a canonical edge list.
    Generate(GenerateArgs),
    /// Rebuild distribution tables from a saved record file.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Stop when upper - lower <= threshold.
    Auto,
    /// Stop when (upper - lower) / lower < precision.
    Precision,
    /// Run exactly --iterations iterations.
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodTag {
    /// Trivial lower bound ecc(v).
    Tlb,
    /// Trivial upper bound 2 ecc(v).
    Tub,
    /// Double sweep lower bound.
    Dslb,
    /// Tree upper bound from random starts.
    Rtub,
    /// Tree upper bound from highest-degree starts.
    Hdtub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyTag {
    Random,
    Degree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Tree,
    Gnm,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file, or '-' for standard input.
    #[arg(long, value_name = "PATH|-")]
    pub input: PathBuf,
    /// Restrict to the largest connected component.
    #[arg(long)]
    pub lcc: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Gap threshold for auto mode [default: 5].
    #[arg(long, value_name = "INT")]
    pub threshold: Option<u64>,
    #[arg(long, value_name = "FLOAT")]
    pub precision: Option<f64>,
    #[arg(long, value_name = "INT")]
    pub iterations: Option<usize>,
    /// Run a single heuristic (fixed mode only).
    #[arg(long, value_enum)]
    pub method: Option<MethodTag>,
    /// Start-vertex strategy for --method.
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyTag>,
    #[arg(long, value_name = "UINT64", default_value_t = 0)]
    pub seed: u64,
    /// Iteration guard for auto and precision modes [default: 10 n].
    #[arg(long, value_name = "INT")]
    pub max_iterations: Option<usize>,
    #[arg(long, value_name = "INT", default_value_t = 1)]
    pub workers: usize,
    /// Write one line per heuristic invocation.
    #[arg(long, value_name = "PATH")]
    pub records: Option<PathBuf>,
    /// Write per-method CDF/CCDF tables.
    #[arg(long, value_name = "PATH")]
    pub distributions: Option<PathBuf>,
    /// Write "dense original" id pairs for the analysed graph.
    #[arg(long, value_name = "PATH")]
    pub id_map: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_name = "INT", default_value_t = 1)]
    pub workers: usize,
    /// Largest vertex count accepted; 0 disables the check.
    #[arg(long, value_name = "INT", default_value_t = diambound::oracle::DEFAULT_EXACT_SIZE_LIMIT)]
    pub size_limit: usize,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Vertex count (for star: center plus n - 1 leaves).
    #[arg(long, value_name = "INT")]
    pub n: usize,
    /// Edge count (gnm only).
    #[arg(long, value_name = "INT")]
    pub m: Option<usize>,
    #[arg(long, value_name = "UINT64", default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Record file written by `bounds --records`, or '-'.
    #[arg(long, value_name = "PATH|-")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}
