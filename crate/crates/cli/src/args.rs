//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "expalg",
    version,
    about = "Exact exponential sums: certified roots, free-generator certificates and witness checks",
    after_help = "Exit status: 0 certified, 2 property violated, 1 error."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit a JSON report.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit a flat CSV table.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Working precision in bits (overrides the config).
    #[arg(long, global = true, value_name = "BITS")]
    pub precision: Option<u32>,
    /// TOML config declaring precision, tolerance and basis symbols.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of an exponential sum.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Isolate every real root of an exponential sum.
    Roots {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Width of isolating intervals (overrides the config).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Split a domain into pieces where the sum is strictly monotone.
    Monotone {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Domain endpoints; defaults to a window holding every critical point.
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        domain: Option<Vec<String>>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Isolate the solutions of f(t) = c for an exponential-like f.
    Preimage {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Decide rational linear independence of basis combinations.
    Independent {
        #[arg(required = true, allow_hyphen_values = true)]
        vectors: Vec<String>,
    },
    /// Substitute exp(r_j t) for x_j in a polynomial without constant term.
    Induce {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Comma-separated generators r_1,...,r_n.
        #[arg(
            long,
            required = true,
            value_delimiter = ',',
            allow_hyphen_values = true
        )]
        gens: Vec<String>,
    },
    /// Certify that a polynomial in independent generators is exponential-like.
    Certify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(
            long,
            required = true,
            value_delimiter = ',',
            allow_hyphen_values = true
        )]
        gens: Vec<String>,
    },
    /// Evaluate or sample the explicit witness functions.
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Run a property check.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Run the built-in check suite.
    Report,
}

#[derive(Debug, Subcommand)]
pub enum WitnessCommand {
    /// Evaluate a witness at a rational point.
    Eval {
        name: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Sample a witness on a uniform grid, or list Cantor sequence terms.
    Dump {
        name: String,
        #[arg(long = "n", value_name = "N")]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Certify that f composed with the step witness takes two distinct values.
    Darboux {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exact upper density of a level set of the Darboux Baire-one witness.
    Density {
        #[arg(long)]
        k: u32,
        /// Largest block index searched.
        #[arg(long, default_value_t = 20)]
        n_max: u64,
    },
    /// Cluster the tail of a sequence prefix into limit-point estimates.
    Limset {
        #[arg(long, value_enum)]
        witness: SequenceName,
        #[arg(long = "N", value_name = "N")]
        n: u64,
        /// Clustering resolution; defaults to 3^-(L-1) for the deepest complete level L.
        #[arg(long)]
        resolution: Option<f64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceName {
    Cantor,
}
