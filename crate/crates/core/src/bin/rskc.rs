use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use rs_keychain::cli::{self, CliError, EXIT_DECODE_FAILURE, EXIT_ERROR};

/// RS(127,63) key-chain cipher over 7-bit ASCII files.
#[derive(Parser)]
#[command(name = "rskc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random 63-symbol key file.
    Keygen {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encrypt an ASCII file into a stream file.
    Encrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode and decrypt a stream file.
    Decrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Inject symbol errors into every codeword of a stream file.
    Corrupt {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        errors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report per-chunk corrections and the key chain.
    Inspect {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Keygen { seed, out } => cli::keygen(seed, &out)?,
        Command::Encrypt { key, input, out } => cli::encrypt(&key, &input, &out)?,
        Command::Decrypt { key, input, out } => cli::decrypt(&key, &input, &out)?,
        Command::Corrupt {
            input,
            out,
            errors,
            seed,
        } => cli::corrupt(&input, &out, errors, seed)?,
        Command::Inspect { key, input } => {
            let report = cli::inspect(&key, &input)?;
            println!("{report}");
            if let Some(chunk) = report.first_failure() {
                eprintln!("rskc: decode failed at chunk {chunk}");
                return Ok(EXIT_DECODE_FAILURE as u8);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_ERROR as u8),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("rskc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
