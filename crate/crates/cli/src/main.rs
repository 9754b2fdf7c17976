use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sl3ido::report::{cmd_classify, cmd_ktypes, render_json, render_markdown, ReportDocument};
use sl3ido::selftest::cmd_selftest;

#[derive(Parser)]
#[command(
    name = "sl3ido",
    version,
    about = "Intertwining differential operators and K-type formulas for the double cover of SL(3,R)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Json,
}

#[derive(clap::Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the singular vectors, targets and characters at a parameter.
    Classify {
        /// Principal-series parameter: "a/b,c/d" in the simple-root basis, "-rho" or "-rho/2".
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        output: Output,
    },
    /// K-type table of one operator, or a common system such as "X,Y", twisted by an M-irrep.
    Ktypes {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Operator selector from `classify`, e.g. X, Y, XcY or X,Y.
        #[arg(long)]
        u: String,
        /// One of ++, +-, -+, --, H.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, default_value_t = 60)]
        nmax: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run the built-in golden tables and property checks.
    Selftest {
        #[command(flatten)]
        output: Output,
    },
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Md => render_markdown(doc),
        Format::Json => render_json(doc),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(|e| format!("cannot write to stdout: {e}")),
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Classify { lambda, output } => {
            let doc = cmd_classify(&lambda).map_err(|e| e.to_string())?;
            emit(&render(&doc, output.format), &output.out)?;
            Ok(true)
        }
        Command::Ktypes { lambda, u, sigma, nmax, output } => {
            let doc = cmd_ktypes(&lambda, &u, &sigma, nmax).map_err(|e| e.to_string())?;
            emit(&render(&doc, output.format), &output.out)?;
            Ok(true)
        }
        Command::Selftest { output } => {
            let report = cmd_selftest();
            let text = match output.format {
                Format::Md => report.render(),
                Format::Json => report.render_json(),
            };
            emit(&text, &output.out)?;
            if let Some(f) = report.first_failure() {
                eprintln!("error: selftest failed at `{}`", f.name);
            }
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
