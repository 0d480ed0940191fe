//! `sphere-spectra`: spectra of higher spin Dirac operators on spheres, and
//! the representation-theoretic queries behind them.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact spectra of higher spin Dirac operators on round spheres.
#[derive(Parser, Debug)]
#[command(name = "sphere-spectra", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenvalues, multiplicities and K-types of D_{λ_j} on Sⁿ (j = 0 is the Dirac operator).
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        j: usize,
        #[arg(long, default_value_t = 5)]
        lmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Weyl dimension and Casimir scalar of a Spin(n) weight.
    Dim {
        #[arg(long)]
        n: usize,
        /// Comma-separated entries, e.g. 3/2,1/2.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Interlacing branching between Spin(n+1) and Spin(n); --n is always the smaller group.
    Branch {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Largest first entry of the Spin(n+1) weights (direction up).
        #[arg(long)]
        a1max: Option<String>,
    },
    /// Decomposition of spinor-valued k-forms on Rⁿ.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Z(α)/Z(α′) for two Spin(n+1) K-types over Sⁿ.
    Ratio {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long = "alpha-prime", allow_hyphen_values = true)]
        alpha_prime: String,
    },
    /// Runs every consistency identity and the Clifford oracle.
    Verify {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 10)]
        lmax: usize,
        #[arg(long = "clifford-cap", default_value_t = 6)]
        clifford_cap: usize,
        /// Attach the eigenvalue branches to the wrong K-types (negative control).
        #[arg(long = "swap-pairing", hide = true)]
        swap_pairing: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
