//! Command-line front end for the `binomial-euler` engine.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "binomial-euler", version, about = "Exact binomial transforms and identity verification")]
struct Cli {
    /// Emit versioned JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify binomial identities as exact polynomial identities.
    Verify(commands::VerifyArgs),
    /// Binomial transform (or its inverse) of a sequence file.
    Transform(commands::TransformArgs),
    /// Euler transformation (1/(1-t)) f(t/(1-t)) of a sequence file read as series coefficients.
    Euler(commands::EulerArgs),
    /// Generalized Euler transformation (1-xt)^-(alpha+1) f(t/(1-xt)).
    GenEuler(commands::GenEulerArgs),
    /// Expand (1 - base t)^-(exponent+1) or (1 + base t)^exponent as a series.
    Series(commands::SeriesArgs),
    /// Legendre polynomial P_n in one or all representations.
    Legendre(commands::LegendreArgs),
    /// Euler acceleration of the alternating series sum (-1)^k c_k.
    Accelerate(commands::AccelerateArgs),
    /// Print both sides of an identity, or the generating-product coefficient for eq11 with --q.
    Expand(commands::ExpandArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => commands::verify(a, cli.json),
        Command::Transform(a) => commands::transform(a, cli.json),
        Command::Euler(a) => commands::euler(a, cli.json),
        Command::GenEuler(a) => commands::gen_euler(a, cli.json),
        Command::Series(a) => commands::series(a, cli.json),
        Command::Legendre(a) => commands::legendre(a, cli.json),
        Command::Accelerate(a) => commands::accelerate(a, cli.json),
        Command::Expand(a) => commands::expand(a, cli.json),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
