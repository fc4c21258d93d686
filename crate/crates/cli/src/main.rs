use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cli::{run, CliError, Command, Format, RunConfig, DEFAULT_GENUS, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "lgcheck", version, about = "Exact verification suites for the Fermat-type superpotential")]
struct Args {
    #[command(subcommand)]
    command: Sub,
    #[arg(long, global = true, default_value_t = DEFAULT_GENUS)]
    genus: u32,
    /// Filtration order for normalization [default: 4g]
    #[arg(long, global = true)]
    truncation_order: Option<u32>,
    /// Highest arity computed [default: 2g+2]
    #[arg(long, global = true)]
    max_arity: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Sampled tuples per arity, or sampled MC elements for dgla
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Sub {
    /// Transferred A-infinity structure and its hypotheses
    Transfer,
    /// Normalize a function to the superpotential by a coordinate change
    Normalize {
        /// Polynomial JSON; defaults to W itself
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Toric resolution and its dual complex
    Fan,
    /// Product table audits and cross-check
    Fukaya,
    /// Obstruction classes against brute-force lifts
    Dgla {
        /// Presentation JSON with a central_ideal
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

fn config(a: Args) -> RunConfig {
    let (command, input) = match a.command {
        Sub::Transfer => (Command::Transfer, None),
        Sub::Normalize { input } => (Command::Normalize, input),
        Sub::Fan => (Command::Fan, None),
        Sub::Fukaya => (Command::Fukaya, None),
        Sub::Dgla { input } => (Command::Dgla, Some(input)),
    };
    RunConfig {
        command,
        genus: a.genus,
        truncation_order: a.truncation_order,
        max_arity: a.max_arity,
        seed: a.seed,
        samples: a.samples,
        workers: a.workers,
        input,
        output: a.output,
        format: match a.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        },
    }
}

fn main() -> ExitCode {
    let cfg = config(Args::parse());
    let result = run(&cfg).and_then(|r| {
        let text = r.render(cfg.format);
        match &cfg.output {
            Some(p) => {
                std::fs::write(p, &text).map_err(|e| CliError::Io { path: p.display().to_string(), source: e })?
            }
            None => print!("{text}"),
        }
        Ok(r)
    });
    match result {
        Ok(r) => {
            if let Some(c) = r.first_failure() {
                eprintln!("verification failed: {}: {}", c.name, c.detail);
            }
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
