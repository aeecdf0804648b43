//! Command-line front end. Exit codes: 0 success, 1 verification mismatch,
//! 2 usage or cap errors.

mod render;
mod verify;

pub use render::OutputFormat;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::{catalan, oracle, triangle};

#[derive(Debug, Parser)]
#[command(
    name = "dyck-squares",
    version,
    about = "Exact Dyck-path combinatorics: triangle labels, Catalan sum-of-squares \
             decompositions, and brute-force verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Dyck triangle labels d(i, j) up to a column
    Triangle {
        /// Largest abscissa i to build
        i_max: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        /// Override the table cap (memory grows with the square of this)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Decompose the n-th Catalan number into its column-term squares
    Decompose {
        n: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        /// Override the closed-form cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print the Catalan convolution matrix c(n, j)
    Convolution {
        n_max: usize,
        /// Largest row j; defaults to n_max
        j_max: Option<usize>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        /// Override the matrix cap (memory grows with the product of the axes)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Stream every Dyck word of semilength n in lexicographic order
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: OutputFormat,
        /// Override the enumeration cap (the word count grows as 4^n)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Cross-check the closed forms, the table, and brute-force enumeration
    Verify {
        /// Closed-form checks run for every n up to this bound
        #[arg(long, default_value_t = 64)]
        max_n: usize,
        /// Brute-force checks run for every n up to this bound
        #[arg(long, default_value_t = 10)]
        oracle_max_n: usize,
        /// Override the enumeration cap
        #[arg(long)]
        cap: Option<usize>,
        /// Perturb one term so the sweep reports a mismatch (self-test)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// Parse std::env::args and run; the returned code is the process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match execute(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    }) {
        Ok(code) => code,
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command, out: &mut impl Write) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Triangle { i_max, format, cap } => {
            let cap = cap.unwrap_or(triangle::DEFAULT_TABLE_CAP);
            let table = triangle::TriangleTable::build_with_cap(i_max, cap)?;
            render::triangle(out, &table, format)?;
        }
        Command::Decompose { n, format, cap } => {
            let cap = cap.unwrap_or(catalan::DEFAULT_CATALAN_CAP);
            let decomposition = catalan::decompose_with_cap(n, cap)?;
            render::decomposition(out, &decomposition, format)?;
        }
        Command::Convolution {
            n_max,
            j_max,
            format,
            cap,
        } => {
            let cap = cap.unwrap_or(catalan::DEFAULT_MATRIX_CAP);
            let matrix = catalan::convolution_matrix_with_cap(n_max, j_max.unwrap_or(n_max), cap)?;
            render::convolution(out, &matrix, format)?;
        }
        Command::Enumerate { n, format, cap } => {
            let cap = cap.unwrap_or(oracle::DEFAULT_ORACLE_CAP);
            let words = oracle::enumerate_with_cap(n, cap)?;
            render::words(out, words, format)?;
        }
        Command::Verify {
            max_n,
            oracle_max_n,
            cap,
            inject_fault,
        } => {
            let options = verify::Options {
                max_n,
                oracle_max_n,
                oracle_cap: cap.unwrap_or(oracle::DEFAULT_ORACLE_CAP),
                inject_fault,
            };
            if !verify::run(out, &options)? {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
