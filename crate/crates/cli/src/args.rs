use clap::{Args, Parser, Subcommand, ValueEnum};
use kncross::PartitionClass;

use crate::input::Span;

/// Crossings, nestings and the Euler transform on set partitions.
///
/// Commands that take an object read it as JSON from `--input` (a path or
/// inline JSON) or from standard input.
#[derive(Debug, Parser)]
#[command(name = "kncross", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for enumeration
    #[arg(long, global = true, env = "KNCROSS_JOBS", default_value_t = 1)]
    pub jobs: usize,

    /// Input file, or inline JSON when it starts with `{`, `[` or `"`
    #[arg(short, long, global = true)]
    pub input: Option<String>,

    /// Raise the enumeration ceiling from 10 to 12 ground elements
    #[arg(long, global = true)]
    pub large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Ascii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity coefficientwise over a grid of parameters
    #[command(subcommand)]
    Verify(Verify),
    /// Apply the bijection from BNW to NC
    Phi(PhiArgs),
    /// Apply the inverse bijection from NC to BNW
    PhiInv(PhiArgs),
    /// Noncrossing partition of {0..n} to a matching pair (A, mu)
    Psi,
    /// Matching pair (A, mu) to a noncrossing partition of {0..n}
    PsiInv,
    /// Triangular 01-filling encodings
    #[command(subcommand)]
    Fill(Fill),
    /// Count a class of partitions by number of blocks
    Enumerate(EnumerateArgs),
    /// Noncrossing partial matchings and Motzkin paths
    #[command(subcommand)]
    Motzkin(Motzkin),
    /// Draw an arc diagram or a filling as text
    Render(RenderArgs),
    /// Run the exhaustive property suite
    Selftest(SelftestArgs),
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// NC_{n+1}^(k)(t) = t sum_i C(n,i) NW_i^(k)(t)
    Euler {
        /// n or an inclusive range `a..b`
        #[arg(long, default_value = "1..6")]
        n: Span,
        #[arg(long, default_value = "2..4")]
        k: Span,
    },
    /// Gamma expansion of the Narayana polynomials
    Gamma {
        #[arg(long, default_value = "0..8")]
        n: Span,
    },
    /// Stirling numbers of the second kind as a transform
    Stirling {
        #[arg(long, default_value = "1..8")]
        n: Span,
    },
    /// Catalan numbers as the transform of Motzkin numbers
    Donaghey {
        #[arg(long, default_value = "0..14")]
        n: Span,
        /// Also check by enumeration while n+1 is at most this
        #[arg(long, default_value_t = 9)]
        enumerate_up_to: usize,
    },
    /// Look for the smallest failure of the transform for k-nonnesting partitions
    NestingGap {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    #[arg(long)]
    pub k: usize,
    /// Emit one JSON line per step before the result
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Subcommand)]
pub enum Fill {
    /// Partition of [n] to a filling of the staircase of order n-1
    MapC,
    InvC,
    /// Partition of [n] to a filling of the staircase of order n
    MapE,
    InvE,
    /// Simple filling to a composition and a filling without zero hooks
    MapF,
    /// Reads {"composition": [...], "filling": {...}}
    InvF,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: Span,
    #[arg(long, default_value = "2")]
    pub k: Span,
    #[arg(long, default_value = "nc")]
    pub class: PartitionClass,
    /// List the members as JSON lines instead of counting them
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Subcommand)]
pub enum Motzkin {
    /// Noncrossing partial matching of [n] to its path
    ToPath,
    /// Path (`UUDH...`, raw or as a JSON string) to its matching
    ToMatching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Arcs,
    Filling,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, value_enum, default_value_t = What::Arcs)]
    pub what: What,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 8)]
    pub nmax: usize,
    #[arg(long, default_value_t = 4)]
    pub kmax: usize,
}
