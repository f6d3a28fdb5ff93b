use clap::{Parser, Subcommand};
use rodwave::report;
use rodwave::{Result, RodError};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rodwave", version, about = "Periodic hyperelastic-rod wave-breaking toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the variational infimum I(alpha, beta)
    #[command(allow_negative_numbers = true)]
    EvalI {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        /// Finite-difference grid size (overrides RODWAVE_GRID)
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Compute the slope threshold beta_gamma
    #[command(allow_negative_numbers = true)]
    BetaGamma {
        #[arg(long)]
        gamma: f64,
    },
    /// Critical constants (alpha0, alpha/gamma window endpoints)
    Constants,
    /// Closed-form upper bound of beta_gamma and the numeric value
    #[command(allow_negative_numbers = true)]
    Bounds {
        #[arg(long)]
        gamma: f64,
    },
    /// Apply the local-in-space blowup criterion to a datum file
    #[command(allow_negative_numbers = true)]
    Check {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        gamma: f64,
        /// Treat the datum on the line (nonperiodic criterion)
        #[arg(long)]
        line: bool,
    },
    /// Integrate the periodic equation and fit the breaking rate
    #[command(allow_negative_numbers = true)]
    Simulate {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        modes: Option<usize>,
        #[arg(long)]
        tmax: Option<f64>,
    },
    /// Applicability scan over a gamma range
    #[command(allow_negative_numbers = true)]
    Scan {
        #[arg(long)]
        gamma_min: f64,
        #[arg(long)]
        gamma_max: f64,
        #[arg(long)]
        step: f64,
    },
    /// Reproduce the hyper-elastic materials threshold table
    Materials,
    /// CSV curve samples behind the published figures
    FigData {
        /// One of: upbound-betag, i2beta, ifini, courbe
        #[arg(long)]
        which: String,
    },
}

fn read_datum(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| RodError::domain(format!("cannot read datum file {}: {e}", path.display())))
}

fn dispatch(command: Command) -> Result<String> {
    Ok(match command {
        Command::EvalI { alpha, beta, grid } => {
            if let Some(n) = grid {
                std::env::set_var("RODWAVE_GRID", n.to_string());
            }
            report::eval_i_report(alpha, beta, grid)?.to_json()
        }
        Command::BetaGamma { gamma } => report::beta_gamma_report(gamma)?.to_json(),
        Command::Constants => report::constants_report()?.to_json(),
        Command::Bounds { gamma } => report::bounds_report(gamma)?.to_json(),
        Command::Check { datum, gamma, line } => {
            report::check_report(&read_datum(&datum)?, gamma, line)?.to_json()
        }
        Command::Simulate {
            datum,
            gamma,
            modes,
            tmax,
        } => report::simulate_report(&read_datum(&datum)?, gamma, modes, tmax)?.to_json(),
        Command::Scan {
            gamma_min,
            gamma_max,
            step,
        } => report::scan_report(gamma_min, gamma_max, step)?.to_json(),
        Command::Materials => report::materials_report()?.to_json(),
        Command::FigData { which } => report::fig_data(&which)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let kind = match e {
                RodError::Domain(_) => "domain",
                RodError::Internal(_) => "internal",
            };
            eprintln!(
                "{}",
                serde_json::json!({ "error": { "kind": kind, "message": e.to_string() } })
            );
            ExitCode::from(if kind == "domain" { 2 } else { 1 })
        }
    }
}
