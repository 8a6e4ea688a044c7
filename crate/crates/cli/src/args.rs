use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "catalan",
    version,
    about = "Exact and integral evaluation of Catalan numbers and log-gamma"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact big-integer values.
    #[command(subcommand)]
    Exact(ExactKind),
    /// One Catalan number through an integral representation, as a JSON row.
    Integral {
        repr: CatalanRepr,
        n: u32,
        #[arg(default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = catalan_core::quadrature::DEFAULT_MAX_EVALS)]
        max_evals: usize,
    },
    /// Sweep n = 1..=max-n over the chosen representations and write a report.
    Verify {
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_delimiter = ',', default_value = "feaux,duplication")]
        reprs: Vec<CatalanRepr>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// log Γ through one representation, compared with the reference.
    ///
    /// The `feaux` tag evaluates log Γ(x+1).
    Loggamma {
        repr: String,
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Residuals of the duplication and Raabe identities and the exponent check.
    Identities {
        set: IdentitySet,
        /// Duplication arguments.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        x: Vec<f64>,
        /// Raabe lower limits.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        a: Vec<f64>,
        /// Indices for the exponent check.
        #[arg(long, value_delimiter = ',')]
        n: Vec<u32>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExactKind {
    /// Cₙ
    Catalan { n: u32 },
    /// B(n, k)
    Ballot { n: u32, k: u32 },
    /// Aₘ(p, r)
    Fuss { m: u32, p: u32, r: u32 },
    /// B₃(n, k, ℓ)
    B3 { n: u32, k: u32, l: u32 },
    /// Number of Dyck words of semilength n, by enumeration.
    Dyck {
        n: u32,
        /// Print the words instead of the count.
        #[arg(long)]
        list: bool,
    },
    /// Monotone lattice paths below the diagonal, by dynamic programming.
    Paths { n: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum CatalanRepr {
    Feaux,
    Duplication,
}

impl CatalanRepr {
    pub fn as_str(self) -> &'static str {
        match self {
            CatalanRepr::Feaux => "feaux",
            CatalanRepr::Duplication => "duplication",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentitySet {
    Duplication,
    Raabe,
    Typo,
    All,
}
