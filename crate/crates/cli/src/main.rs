use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tracedcat_cli::loaders::load_poset;
use tracedcat_cli::{catalogue, render_json, render_text, run_scenario, Format, RunConfig};

#[derive(Parser)]
#[command(name = "tracedcat", version, about = "Run traced-category and Hopf-monad law scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario and compare every verdict with its expectation.
    Run {
        scenario: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampled cases per suite (scenario default when omitted).
        #[arg(long)]
        cases: Option<usize>,
        /// Object size bound (scenario default when omitted).
        #[arg(long)]
        max_size: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Extra poset file added to the poset models' generators.
        #[arg(long)]
        poset: Vec<PathBuf>,
    },
    /// List registered scenarios.
    List,
}

const USAGE: u8 = 2;
const MISMATCH: u8 = 1;

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List => {
            for s in catalogue() {
                println!("{:<34} cases {:>3}, max size {}  {}", s.name, s.cases, s.max_size, s.note);
            }
            println!("{:<34} group algebra of a group read from a Cayley-table file", "group-algebra:<file>");
            ExitCode::SUCCESS
        }
        Command::Run {
            scenario,
            seed,
            cases,
            max_size,
            out,
            format,
            poset,
        } => {
            let mut posets = Vec::new();
            for p in &poset {
                match load_poset(p) {
                    Ok(fp) => posets.push(fp),
                    Err(e) => {
                        eprintln!("tracedcat: {e}");
                        return ExitCode::from(USAGE);
                    }
                }
            }
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            };
            let config = RunConfig {
                seed,
                cases,
                max_size,
                posets,
                out,
                format,
            };
            let report = match run_scenario(&scenario, &config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("tracedcat: {e}");
                    return ExitCode::from(USAGE);
                }
            };
            let body = match config.format {
                Format::Json => render_json(&report),
                Format::Text => render_text(&report),
            };
            let written = match &config.out {
                Some(path) => fs::write(path, &body),
                None => std::io::stdout().write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("tracedcat: writing report: {e}");
                return ExitCode::from(USAGE);
            }
            if report.expected_match {
                ExitCode::SUCCESS
            } else {
                for line in report.mismatches() {
                    eprintln!("mismatch: {line}");
                }
                ExitCode::from(MISMATCH)
            }
        }
    }
}
