//! The `schlafli` command line: builds, enumeration, verification and
//! certificates, each reported as text or JSON.

mod commands;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::execute;
pub use report::{emit, parse_report, Format, LemmaReport, Outcome, Payload, Report};

#[derive(Parser, Debug)]
#[command(
    name = "schlafli",
    version,
    about = "Schläfli quandles and the knot quandles of twist-spun trefoils"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArg {
    /// Row limit for enumeration.
    #[arg(long, env = "QF_BUDGET", default_value_t = schlafli_core::DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a quandle table.
    #[command(subcommand)]
    Build(Build),
    /// Enumerate a presentation file.
    Enum {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
        /// Also write the table file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one of the structural results.
    #[command(subcommand)]
    Verify(Verify),
    /// Search for an isomorphism between two table files.
    Iso { a: PathBuf, b: PathBuf },
    /// Certify that Q_6 is infinite.
    CertifyInfinite {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Geometric,
    Algebraic,
}

#[derive(Subcommand, Debug)]
pub enum Build {
    /// The Schläfli quandle of {3,m}.
    Schlafli {
        #[arg(long)]
        m: usize,
        /// Defaults to geometric, except for {3,2}.
        #[arg(long, value_enum)]
        model: Option<Model>,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The quandle of the 16-, 24- or 600-cell.
    Cell {
        #[arg(long)]
        cells: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The knot quandle Q_m of the m-twist-spun trefoil.
    TwistSpun {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Q_m against the 16-/24-/600-cell quandle (m = 3, 4, 5).
    Main1 {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Q_m as a central extension of {3,m} (m = 2..5).
    Main2 {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Both presentations of {3,m} against the geometric model (m = 2..5).
    Lemma {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I) -> (Report, Format)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let echo = args.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    match Cli::try_parse_from(&args) {
        Ok(cli) => {
            let (outcome, payload) = execute(&cli.command);
            let report = Report {
                command: echo,
                outcome,
                payload,
                elapsed_ms: start.elapsed().as_millis() as u64,
            };
            (report, cli.format)
        }
        Err(e) => {
            let format = if args.iter().any(|a| a == "--format=json")
                || args
                    .windows(2)
                    .any(|w| w[0] == "--format" && w[1] == "json")
            {
                Format::Json
            } else {
                Format::Text
            };
            let payload = Payload::Error {
                message: e.to_string().trim_end().to_string(),
            };
            (
                Report {
                    command: echo,
                    outcome: Outcome::Error,
                    payload,
                    elapsed_ms: 0,
                },
                format,
            )
        }
    }
}
