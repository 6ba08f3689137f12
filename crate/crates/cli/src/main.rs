//! `permafix`: exact computations on the slices of the permutahedron fixed
//! by permutation actions.
//!
//! Exit codes: 0 when every requested cross-check passes, 1 on a
//! mathematical mismatch, 2 on usage or parse errors.

mod commands;
mod report;
mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "permafix",
    version,
    about = "Exact geometry of permutation-fixed slices of the permutahedron"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Permutation, in cycle notation ("(123)(45)", needs --n) or one-line
    /// notation ("246513"); multi-digit elements need ',' or spaces
    #[arg(long)]
    sigma: Option<String>,
    /// Degree of the permutation (required with cycle notation)
    #[arg(long)]
    n: Option<usize>,
    /// Cycle type as comma-separated lengths, e.g. "4,3,2"
    #[arg(long = "type", value_name = "LENGTHS")]
    cycle_type: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit a machine-readable JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum VerifyLevel {
    /// Closed form only
    None,
    /// Also sum parallelotope volumes over all spanning trees
    Tiling,
    /// Tiling plus the lattice-point interpolation oracle
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices, generators, translation, and dimension of the fixed slice
    Describe {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Normalized volume, optionally verified along independent routes
    Volume {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "none")]
        verify: VerifyLevel,
        /// Worker threads for the tiling sum and dilate counts
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lattice-point counts of the dilates t = 1..=t-max
    Ehrhart {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "t-max", default_value_t = 8)]
        t_max: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Reduce a generator set to a single permutation with the same slice
    Subgroup {
        /// Degree of the permutations
        #[arg(long)]
        n: usize,
        /// Generator (repeatable), cycle or one-line notation
        #[arg(long = "gen", required = true, value_name = "PERM")]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value = "none")]
        verify: VerifyLevel,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Randomized self-checks; seed with the PERMAFIX_SEED variable
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Describe { input, output } => emit(commands::describe(input), output),
        Command::Volume {
            input,
            verify,
            threads,
            output,
        } => emit(commands::volume(input, *verify, *threads), output),
        Command::Ehrhart {
            input,
            t_max,
            threads,
            output,
        } => emit(commands::ehrhart(input, *t_max, *threads), output),
        Command::Subgroup {
            n,
            generators,
            verify,
            threads,
            output,
        } => emit(commands::subgroup(*n, generators, *verify, *threads), output),
        Command::Selftest => return run_selftest(),
    };
    match result {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(
    result: Result<commands::CommandOutput, commands::UsageError>,
    output: &OutputArgs,
) -> Result<bool, commands::UsageError> {
    let out = result?;
    if output.json {
        println!("{}", out.json);
    } else {
        print!("{}", out.text);
    }
    Ok(out.all_pass)
}

fn run_selftest() -> ExitCode {
    let (results, seed) = selftest::run();
    println!("selftest seed: {seed} (set {} to change)", selftest::SEED_VAR);
    let mut all_pass = true;
    for r in &results {
        let pass = r.failures.is_empty();
        all_pass &= pass;
        println!(
            "selftest {:<28} {} ({} cases)",
            r.name,
            if pass { "PASS" } else { "FAIL" },
            r.cases
        );
        for f in r.failures.iter().take(3) {
            eprintln!("  {f}");
        }
    }
    if all_pass {
        println!("selftest: all checks passed");
        ExitCode::SUCCESS
    } else {
        println!("selftest: FAILURES");
        ExitCode::from(1)
    }
}
