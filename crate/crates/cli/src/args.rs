use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "fanfree", version, about = "Extremal graphs without k-fans: constructions, detection, spectra, search and lemma checks")]
pub struct Cli {
    /// Eigen-residual tolerance for spectral computations.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    /// Seed for randomized search. FANFREE_SEED, when set, takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads. Output order always follows input order.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Read input as one adjacency list (`u v` per line) instead of graph6 lines.
    #[arg(long, global = true)]
    pub adjlist: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Graph6,
    /// Graphviz; construct only.
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named graph.
    Construct(ConstructArgs),
    /// Tabulate ex(n, F_k) or f(beta, delta) as CSV.
    Table(TableArgs),
    /// Test each input graph for F_k.
    CheckFan {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Spectral radius and Perron vector of each input graph.
    Spectral {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Quotient matrix of an equitable partition and its largest root.
    Quotient {
        /// Classes separated by `|`, vertices by `,`, e.g. "0,1,2|3|4,5".
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Search for F_k-free graphs maximizing edges or spectral radius.
    Search(SearchArgs),
    /// Maximum cut of each input graph.
    Maxcut {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Evaluate the lemma predicates on each input graph.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// graph6 strings; when absent, graphs are read from --input or stdin.
    pub graphs: Vec<String>,

    /// File with one graph6 string per line.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Turan,
    G1,
    G2,
    ChvatalHanson,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub beta: Option<usize>,
    #[arg(long)]
    pub delta: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Ex,
    F,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub what: TableKind,
    /// Values as `a..b` (inclusive), `a,b,c` or a single number.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub delta: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Edges,
    Lambda1,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = ObjectiveArg::Edges)]
    pub objective: ObjectiveArg,
    /// Enumerate all isomorphism classes (n <= 9).
    #[arg(long, conflicts_with_all = ["restarts", "steps"])]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 10)]
    pub restarts: usize,
    /// Moves per restart; defaults to a budget scaled with n.
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub k: usize,
    /// Run a single lemma by id.
    #[arg(long)]
    pub lemma: Option<String>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[command(flatten)]
    pub input: InputArgs,
}
