use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use d2color_cli::commands::{self, ColorArgs, EXIT_USAGE};

/// Distance-2 coloring of planar graphs with maximum degree three.
#[derive(Parser)]
#[command(name = "d2color", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph with at most eight colors.
    Color {
        input: PathBuf,
        /// Output document (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write the reduction trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write an SVG drawing here.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        palette: usize,
        /// Exit with status 4 on a failed proof-step check instead of
        /// recovering by exact search.
        #[arg(long)]
        strict: bool,
        /// Where to write the diagnostic bundle on failure.
        #[arg(long)]
        diagnostic: Option<PathBuf>,
    },
    /// Check a coloring against a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Exact distance-2 chromatic number by exhaustive search.
    Chromatic {
        graph: PathBuf,
        #[arg(long, default_value_t = 8)]
        max: usize,
        /// Largest vertex count accepted.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Write a fixture, e.g. `prism:n=5` or `random-cubic-planar:n=20,seed=7`.
    Gen {
        spec: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Graphviz export.
    Dot { input: PathBuf },
    /// Compute a planar rotation system.
    Embed {
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Rebuild a coloring from a trace file.
    Replay {
        graph: PathBuf,
        trace: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };
    let result = match cli.command {
        Command::Color {
            input,
            out,
            trace,
            svg,
            palette,
            strict,
            diagnostic,
        } => commands::color(&ColorArgs {
            input,
            out,
            trace,
            svg,
            palette,
            strict,
            diagnostic,
        }),
        Command::Verify { graph, coloring } => commands::verify(&graph, &coloring),
        Command::Chromatic { graph, max, bound } => commands::chromatic(&graph, max, bound),
        Command::Gen { spec, out } => commands::gen(&spec, out.as_deref()),
        Command::Dot { input } => commands::dot(&input),
        Command::Embed { input, out } => commands::embed_cmd(&input, out.as_deref()),
        Command::Replay { graph, trace, out } => commands::replay(&graph, &trace, out.as_deref()),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            eprint!("{}", outcome.stderr);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
