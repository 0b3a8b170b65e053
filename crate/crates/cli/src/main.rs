mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "levi", version, about = "Levi graphs of n3 configurations: 2-factors, parity classes and Martinetti moves")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Graph text format for input and output
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Graph6)]
    pub format: FormatArg,
    /// Worker threads; 1 gives the reference serial order
    #[arg(long, global = true, env = "LEVI_THREADS", default_value_t = 1)]
    pub threads: usize,
    /// Emit JSON on stdout
    #[arg(long, global = true)]
    pub json: bool,
    /// Human-readable detail on stderr
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a family member
    Gen(GenArgs),
    /// Enumerate 2-factors and report the parity classes
    Classify(ClassifyArgs),
    /// Structural properties: girth, connectivity, cuts, canonical form
    Props(InputArg),
    /// Test two graphs for isomorphism
    Iso(IsoArgs),
    /// Martinetti extensions and reductions
    #[command(subcommand)]
    Martinetti(MartinettiCommand),
    /// Explicit witness 2-factors of opposite parity
    Witnesses(WitnessArgs),
    /// Re-check the published claims
    VerifyPaper(VerifyArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    K33,
    Heawood,
    Pappus,
    D,
    T,
    Cyclic,
    Star,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Family parameter n
    #[arg(long)]
    pub n: Option<usize>,
    /// T-family variant (1, 2 or 3)
    #[arg(long)]
    pub variant: Option<usize>,
    /// Base line of a cyclic configuration, e.g. 0,1,3
    #[arg(long, value_delimiter = ',')]
    pub base: Option<Vec<usize>>,
    /// Neighbor pairing for the Heawood star product, e.g. 0,1,2
    #[arg(long, value_delimiter = ',')]
    pub pairing: Option<Vec<usize>>,
    /// Write the vertex labels as JSON to this file
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InputArg {
    /// graph6 string, or - for stdin (one graph per line)
    pub input: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Full,
    Parity,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Full)]
    pub mode: ModeArg,
    /// Maximum number of perfect matchings to visit; 0 means unlimited
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Args, Debug)]
pub struct IsoArgs {
    /// First graph (graph6 or -)
    pub first: String,
    /// Second graph (graph6 or -)
    pub second: String,
}

#[derive(Args, Debug)]
pub struct MoveArgs {
    #[command(flatten)]
    pub input: InputArg,
    /// Apply only the site with this index in the site list
    #[arg(long)]
    pub site: Option<usize>,
    /// Keep one result per isomorphism class
    #[arg(long)]
    pub up_to_iso: bool,
    /// Write the JSON move log to this file
    #[arg(long)]
    pub log: Option<PathBuf>,
    /// Vertex labels (JSON array, as written by gen --labels)
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum MartinettiCommand {
    /// Print every Martinetti extension
    Extend(MoveArgs),
    /// Print every valid Martinetti reduction
    Reduce {
        #[command(flatten)]
        moves: MoveArgs,
        /// Accept reductions with a disconnected result
        #[arg(long)]
        allow_disconnected: bool,
    },
    /// List extension and reduction sites as JSON
    Sites {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        allow_disconnected: bool,
    },
    /// Print whether no valid reduction exists
    Irreducible(InputArg),
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    /// d or t
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub variant: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Claim groups to run
    #[arg(long, value_delimiter = ',')]
    pub claims: Option<Vec<String>>,
    /// Largest n for the D family
    #[arg(long, default_value_t = 15)]
    pub nmax: usize,
    /// Largest n for the T family
    #[arg(long, default_value_t = 2)]
    pub t_max: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("levi: {msg}");
            ExitCode::from(1)
        }
    }
}
