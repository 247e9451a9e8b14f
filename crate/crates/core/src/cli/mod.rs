//! Command-line front end: term DSL, run configuration, suites and reports.

pub mod config;
pub mod report;
pub mod suites;
pub mod term;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use crate::instances::registry;
use crate::pseudonorm::AlgebraTable;
use crate::{Error, Result};
use config::{RunConfig, Suite};
use report::{exit_code, render, Format};
use suites::SeriesTest;

/// Exit status for usage and parse errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ordalab", version, about = "Exact checks of ordered algebraic structures and convergence certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the registered structures and their capabilities.
    List,
    /// Run a property suite against a structure.
    Check {
        /// Registry key, e.g. Q, Z[1/2], Z(X). Overrides the config file.
        structure: Option<String>,
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        /// Replacement epsilon grid entry as a term (e.g. 1/X^3); repeat for more.
        #[arg(long, action = clap::ArgAction::Append, allow_hyphen_values = true)]
        grid: Option<Vec<String>>,
        #[arg(long)]
        horizon: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// JSON run configuration; command-line options take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Run a convergence test on the series sum of x_n for n >= 1.
    Series {
        /// Term in n, e.g. "1/2^n" or "pow(2/3, n)".
        expr: String,
        #[arg(long)]
        structure: String,
        #[arg(long, value_enum)]
        test: SeriesTest,
        #[arg(long, default_value_t = config::DEFAULT_HORIZON)]
        horizon: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the Albert pseudonorm of an algebra given by a JSON table.
    Algebra {
        table: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgebraSuite::Albert)]
        suite: AlgebraSuite,
        #[arg(long, default_value_t = config::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also check associativity on basis triples.
        #[arg(long)]
        associativity: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraSuite {
    Albert,
}

/// Run the CLI on `args` (program name first) and return the exit status:
/// 0 all pass, 1 a violation, 2 usage or parse error, 3 unverifiable.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "ordalab: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::List => {
            let _ = out.write_all(list().as_bytes());
            Ok(0)
        }
        Command::Check {
            structure,
            suite,
            grid,
            horizon,
            seed,
            format,
            config,
        } => {
            let mut cfg = match (config, &structure) {
                (Some(path), _) => RunConfig::load(&path)?,
                (None, Some(key)) => RunConfig::new(key.clone(), Suite::All),
                (None, None) => return Err(Error::InvalidArgument("check needs a structure or --config".into())),
            };
            if let Some(key) = structure {
                cfg.structure = key;
            }
            if let Some(s) = suite {
                cfg.suite = s;
            }
            if grid.is_some() {
                cfg.grid = grid;
            }
            cfg.horizon = horizon.unwrap_or(cfg.horizon);
            cfg.seed = seed.unwrap_or(cfg.seed);
            cfg.format = format.unwrap_or(cfg.format);
            let records = suites::run_check(&cfg)?;
            let _ = out.write_all(render(&records, cfg.format).as_bytes());
            Ok(exit_code(&records))
        }
        Command::Series {
            expr,
            structure,
            test,
            horizon,
            format,
        } => {
            let records = suites::run_series(&expr, &structure, test, horizon)?;
            let _ = out.write_all(render(&records, format).as_bytes());
            Ok(exit_code(&records))
        }
        Command::Algebra {
            table,
            suite: AlgebraSuite::Albert,
            seed,
            format,
            associativity,
        } => {
            let src = std::fs::read_to_string(&table)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", table.display())))?;
            let t: AlgebraTable = serde_json::from_str(&src)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", table.display())))?;
            let records = suites::run_algebra(&t, seed, associativity)?;
            let _ = out.write_all(render(&records, format).as_bytes());
            Ok(exit_code(&records))
        }
    }
}

fn list() -> String {
    let mut out = String::new();
    for s in registry() {
        let caps = s.capabilities();
        let flags = s.flags();
        let mut tags = Vec::new();
        for (on, name) in [
            (flags.field, "field"),
            (flags.ring && !flags.field, "ring"),
            (flags.semiring && !flags.ring, "semiring"),
            (flags.group && !flags.ring, "group"),
            (flags.total_order, "total"),
            (caps.density, "density"),
            (caps.shrink, "shrink"),
            (caps.archimedean, "archimedean"),
            (caps.join, "join"),
        ] {
            if on {
                tags.push(name);
            }
        }
        out.push_str(&format!("{:<8} {:<44} {}\n", s.key(), tags.join(","), s.description()));
    }
    out
}
