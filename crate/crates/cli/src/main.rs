mod commands;
mod config;
mod table;

use clap::{Parser, Subcommand};

use commands::{cmd_frames, cmd_run, cmd_sweep, CommonArgs, FramesArgs};

/// Command-line errors carrying their process exit code: configuration
/// problems exit 2, runtime / degenerate-math problems exit 3.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) | CliError::Runtime(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Parser)]
#[command(
    name = "spooky",
    version,
    about = "Monte Carlo simulator for an entangled photon-pair experiment \
             with a mechanical circular-polarization detector"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a measurement campaign and report the correlation witness
    Run(CommonArgs),
    /// Tabulate the frame-dependent detector verdict for observer velocities
    Frames(FramesArgs),
    /// Repeat the campaign across a swept parameter
    Sweep(CommonArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Frames(args) => cmd_frames(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match result {
        Ok(stdout) => print!("{stdout}"),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
