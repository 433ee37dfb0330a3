//! `sumset`: witnesses, profiles and simulations from the command line.
//!
//! Exit status is 0 on success, 2 when the requested tuple is not realizable
//! and 1 on any error. The payload goes to stdout (or `--out`), diagnostics
//! to stderr.

mod commands;
mod emit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sumset_core::integer::FixedPointReal;
use sumset_core::rational::parse_rational;
use sumset_core::Rational;

#[derive(Parser, Debug)]
#[command(name = "sumset", version, about = "Density spectra of iterated sumsets")]
pub struct Cli {
    /// Write the payload here instead of stdout. `json` or `csv` select the
    /// format instead.
    #[arg(long, global = true)]
    pub out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn real(s: &str) -> Result<FixedPointReal, String> {
    FixedPointReal::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Build a set with a prescribed sumset profile.
    Witness {
        #[command(subcommand)]
        which: WitnessCmd,
    },
    /// Decide whether `(α, β)` with `β < 2α` is a density pair of `(A, 2A)`.
    Feasible {
        #[arg(long, value_parser = rational)]
        alpha: Rational,
        #[arg(long, value_parser = rational)]
        beta: Rational,
    },
    /// Haar measure and component count of a circle set file.
    Measure {
        #[arg(long)]
        set: PathBuf,
    },
    /// `μ(A), μ(2A), …, μ(kA)` for a circle set file.
    Profile {
        #[arg(long)]
        set: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    Region {
        #[command(subcommand)]
        which: RegionCmd,
    },
    /// `λ_k`, `F_k(c)` and the predicted density of `kA`.
    Fk(FkArgs),
    /// Pseudo `k`-th power sample and the windowed densities of `jA`.
    Simulate {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, value_parser = real, default_value = "sqrt2")]
        theta: FixedPointReal,
        #[arg(long, default_value_t = 2_000_000)]
        horizon: usize,
        /// Independent runs with seeds `seed, seed+1, …`.
        #[arg(long, default_value_t = 1)]
        trials: u64,
        /// `lo:hi`, default `N/2:N`.
        #[arg(long)]
        window: Option<String>,
    },
    /// Weighted representation sums `S_k(n)` against their limit.
    Sk {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_parser = real, default_value = "sqrt2")]
        theta: FixedPointReal,
        /// `lo:hi`, inclusive.
        #[arg(long, default_value = "200000:400000")]
        n_range: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// `Σ_{0<x<N} x^{−α}(N−x)^{−β}` and its asymptote.
    Jsum {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        n: usize,
    },
    /// Erdős–Turán check for `frac(θj)`, `X < j <= X + N`, in one interval.
    Discrepancy {
        #[arg(long, value_parser = real)]
        theta: FixedPointReal,
        /// `lo:hi` with rational ends in `[0, 1]`.
        #[arg(long, default_value = "0:1/2")]
        interval: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 10)]
        m: u64,
        #[arg(long, default_value_t = 0)]
        offset: u64,
    },
    /// Finite-depth Cantor approximants, or the scaled pair witness with `--beta`.
    Cantor {
        #[arg(long, default_value_t = 3)]
        ratio_denom: u32,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_parser = rational)]
        beta: Option<Rational>,
    },
}

#[derive(Subcommand, Debug)]
pub enum WitnessCmd {
    /// Circle set with `μ(A) = α`, `μ(2A) = β`.
    Pair {
        #[arg(long, value_parser = rational)]
        alpha: Rational,
        #[arg(long, value_parser = rational)]
        beta: Rational,
    },
    /// Two-interval circle set with profile `(α, β, γ)`.
    Triplet {
        #[arg(long, value_parser = rational)]
        alpha: Rational,
        #[arg(long, value_parser = rational)]
        beta: Rational,
        #[arg(long, value_parser = rational)]
        gamma: Rational,
    },
    /// Set of integers with `d(A) = α`, `d(2A) = β`, for `β < 2α`.
    Rational {
        #[arg(long, value_parser = rational)]
        alpha: Rational,
        #[arg(long, value_parser = rational)]
        beta: Rational,
        #[arg(long, default_value_t = 1_000_000)]
        horizon: usize,
        /// Also write the set in the integer-set format.
        #[arg(long)]
        set_out: Option<PathBuf>,
        #[arg(long)]
        bitmap: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum RegionCmd {
    /// Exact profiles of every `[0, x] ∪ [y, z]` on the grid `1/D`.
    Scan {
        #[arg(long)]
        denominator: u32,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct FkArgs {
    #[command(subcommand)]
    pub table: Option<FkCmd>,
    #[arg(long, required = true)]
    pub k: Option<usize>,
    #[arg(long, required = true)]
    pub c: Option<f64>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Subcommand, Debug)]
pub enum FkCmd {
    /// `c, F_k(c), k/(k+1) − F_k(c)` on an evenly spaced grid.
    Table {
        #[arg(long)]
        k: usize,
        /// `c0:c1:n`.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let mut cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.out.as_deref() {
        Some("json") => {
            cli.format = Format::Json;
            cli.out = None;
        }
        Some("csv") => {
            cli.format = Format::Csv;
            cli.out = None;
        }
        _ => {}
    }
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let reply = match commands::run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    for d in &reply.diagnostics {
        eprintln!("{d}");
    }
    if let Err(e) = emit::write(&reply, cli.format, cli.out.as_deref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    match reply.status {
        commands::Status::Ok => ExitCode::SUCCESS,
        commands::Status::Infeasible => ExitCode::from(2),
    }
}
