use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fitt",
    version,
    about = "Fitting ideals of monomial ideals, edge ideals and numerical semigroup rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Maximum number of minors a single computation may enumerate.
    #[arg(
        long,
        global = true,
        visible_alias = "max-minors",
        env = "FITT_BUDGET",
        value_name = "N"
    )]
    pub budget: Option<u64>,

    /// Maximum node count for cover and window searches.
    #[arg(long, global = true, value_name = "N")]
    pub max_search: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fitting ideals of a monomial ideal and their radicals.
    Compute {
        #[command(flatten)]
        input: IdealInput,
        /// Only this index; all of 0..=μ(I) otherwise.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Radicals of the Fitting ideals of an edge ideal from admissible covers.
    EdgeRadical {
        /// Graph file with `vertices:` and `edges:` lines.
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long)]
        j: Option<usize>,
        /// Also compute the radicals from minors and compare.
        #[arg(long)]
        check: bool,
    },
    /// The three squarefree conditions at index `j - 1`.
    Classify {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        j: usize,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Numerical semigroup rings.
    #[command(subcommand)]
    Sg(SgCommand),
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Ideal file with `vars:` and `gens:` lines.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["vars", "gens"], required_unless_present = "vars")]
    pub ideal: Option<PathBuf>,
    /// Comma-separated variable names, e.g. `x1,x2,x3`.
    #[arg(long, requires = "gens")]
    pub vars: Option<String>,
    /// Comma-separated monomial generators, e.g. `x1*x2, x1*x3`.
    #[arg(long, requires = "vars", allow_hyphen_values = true)]
    pub gens: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// containment, radical, presentation, squarefree-equivalence, structure,
    /// edge-formula, complete-graph, semigroup or semigroup-examples.
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_vars: Option<usize>,
    #[arg(long)]
    pub max_gens: Option<usize>,
    #[arg(long)]
    pub max_degree: Option<u32>,
    #[arg(long)]
    pub graph_vertices: Option<usize>,
    /// Number of random instances for the sampled suites.
    #[arg(long)]
    pub samples: Option<usize>,
    /// List every check, not only failures.
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct SemigroupInput {
    /// Semigroup generators, e.g. `4,5`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub gens: Option<String>,
    /// Semigroup file with a `gens:` line and an optional `ideal:` line.
    #[arg(long, value_name = "FILE")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SemigroupIdealInput {
    #[command(flatten)]
    pub semigroup: SemigroupInput,
    /// Ideal generators as exponents, e.g. `12,13`.
    #[arg(long)]
    pub ideal_gens: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Route {
    Auto,
    Enumerate,
    MatrixTree,
}

#[derive(Debug, Subcommand)]
pub enum SgCommand {
    /// Frobenius number, genus, Apéry set, type and symmetry.
    Invariants(SemigroupInput),
    /// `Fitt_1` of a monomial ideal, compared with the ideal and its trace.
    Fitt {
        #[command(flatten)]
        input: SemigroupIdealInput,
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
    },
    /// Inverse and trace of a monomial ideal.
    Trace {
        #[command(flatten)]
        input: SemigroupIdealInput,
    },
    /// Compare `Fitt_1(ω)` with `ω` on every non-Gorenstein semigroup of bounded genus.
    Search {
        #[arg(long, default_value_t = 8)]
        max_genus: usize,
        /// List every semigroup examined.
        #[arg(long)]
        verbose: bool,
    },
}
