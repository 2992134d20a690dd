//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "schubertkit", version, about = "Exact double Schubert polynomials of classical type")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest X-degree handled when rewriting in the Q or P basis.
    #[arg(long, global = true, env = "SCHUBERTKIT_DEGREE_CAP")]
    pub degree_cap: Option<u32>,

    /// Worker threads for verification sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a Schubert polynomial, a (mixed) Stanley function, or a theta, eta or Schur polynomial.
    Compute(Target),
    /// Print the coefficients of an expansion in a named basis.
    Expand(Expand),
    /// Run a verification suite and report each check.
    Verify(Verify),
    /// Regenerate the golden corpus.
    Corpus(Corpus),
}

/// What to compute: an element (`--w`) or a shape (`--shape`).
#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Lie type: A, B, C or D.
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: String,

    /// Signed permutation in one-line notation, e.g. "2,-3,1".
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,

    /// Partition such as "3,1", typed as "2,1;type=1" in type D.
    #[arg(long)]
    pub shape: Option<String>,

    /// Number of leading y variables.
    #[arg(long)]
    pub k: Option<usize>,

    /// Number of leading z variables.
    #[arg(long)]
    pub l: Option<usize>,

    /// Number of y variables of a Schur polynomial (alias of `--k` in type A).
    #[arg(long)]
    pub m: Option<usize>,

    /// Keep the z variables.
    #[arg(long)]
    pub double: bool,
}

#[derive(Args, Debug)]
pub struct Expand {
    #[command(flatten)]
    pub target: Target,

    /// schur, theta, eta, q, p or split.
    #[arg(long)]
    pub basis: String,

    /// Flag sequence for the y side of a splitting; "b" is the type D box.
    #[arg(long)]
    pub flags_a: Option<String>,

    /// Flag sequence for the z side of a splitting.
    #[arg(long)]
    pub flags_b: Option<String>,
}

#[derive(Args, Debug)]
pub struct Verify {
    /// Suite name, or "all".
    #[arg(long)]
    pub suite: String,

    /// Restrict to one Lie type.
    #[arg(long = "type", value_name = "TYPE")]
    pub ty: Option<String>,

    /// Largest rank swept.
    #[arg(long, default_value_t = 3)]
    pub max_n: usize,

    /// Single rank; overrides `--max-n`.
    #[arg(long)]
    pub n: Option<usize>,

    /// Check the key identities of one element instead of a sweep.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,

    /// Leading y variables for `--w`.
    #[arg(long)]
    pub k: Option<usize>,

    /// Alias of `--k`.
    #[arg(long)]
    pub m: Option<usize>,

    /// Leading z variables for `--w`.
    #[arg(long)]
    pub l: Option<usize>,
}

#[derive(Args, Debug)]
pub struct Corpus {
    /// Output directory.
    #[arg(long, default_value = "corpus")]
    pub dir: PathBuf,

    /// Compare against the files in `--dir` instead of overwriting them.
    #[arg(long)]
    pub check: bool,
}
