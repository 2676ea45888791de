//! `tlcell`: multiplicity tables, Gram matrices, projectors and the
//! verification suites from the command line.

mod commands;
mod output;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tlcell_core::SpecializationParams;

#[derive(Debug, Parser)]
#[command(name = "tlcell", version, about = "Exact Temperley-Lieb cellular and tilting computations")]
struct Cli {
    /// Worker threads for `verify`.
    #[arg(long, global = true, env = "TLCELL_THREADS", default_value_t = 1)]
    threads: usize,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Shape {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    d: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
}

#[derive(Debug, Args)]
struct Root {
    /// Order of `q^2`; picks `v` of order `4 ell`.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    ell: Option<u32>,
    /// Multiplicative order of `v`; overrides `--ell`.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    order: Option<u32>,
}

impl Root {
    fn params(&self) -> Result<Option<SpecializationParams>, CliError> {
        let p = match (self.order, self.ell) {
            (Some(n), _) => SpecializationParams::new(n)?,
            (None, Some(ell)) => SpecializationParams::from_ell(ell)?,
            (None, None) => return Ok(None),
        };
        Ok(Some(p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Formula,
    Recursive,
    Weights,
    Gram,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Arith,
    Diagrams,
    Jw,
    Cellular,
    Tilting,
    Oracle,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tilting multiplicities mu(d, r; t) with every requested route.
    MultTable {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        root: Root,
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Gram matrix of the cell module W(t) and its rank.
    Gram {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        root: Root,
    },
    /// Terms of the Jones-Wenzl projector p_d.
    Jw {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        d: u32,
    },
    /// Cell sizes b(d, r; t) and the basis size.
    Count {
        #[command(flatten)]
        shape: Shape,
    },
    /// Commutant of the quantum group action on the tensor power.
    Oracle {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        root: Root,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print per-check wall-clock time to stderr.
        #[arg(long)]
        timing: bool,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] tlcell_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// What a command produced, and whether its checks passed.
pub struct Rendered {
    pub text: String,
    pub passed: bool,
}

fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let ok = |text| Ok(Rendered { text, passed: true });
    match &cli.command {
        Command::MultTable { shape, root, route, format } => {
            let params = root.params()?.ok_or_else(|| CliError::Usage("mult-table needs --ell or --order".into()))?;
            let routes = commands::selected_routes(*route);
            let table = commands::mult_table(shape.d as usize, shape.r as usize, &params, &routes)?;
            let text = match format {
                Format::Json => commands::to_json(&table),
                Format::Csv => commands::table_csv(&table),
            };
            Ok(Rendered { text, passed: table.agree && table.decomposition.consistent })
        }
        Command::Gram { shape, t, root } => ok(commands::gram(shape.d as usize, shape.r as usize, *t, root.params()?.as_ref())?),
        Command::Jw { d } => ok(commands::jw(*d as usize)),
        Command::Count { shape } => ok(commands::count(shape.d as usize, shape.r as usize)),
        Command::Oracle { shape, root } => ok(commands::oracle(shape.d as usize, shape.r as usize, root.params()?.as_ref())?),
        Command::Verify { suite, seed, timing, inject_failure } => {
            if cli.threads == 0 {
                return Err(CliError::Usage("--threads must be at least 1".into()));
            }
            let report = verify::run(*suite, *seed, cli.threads, *inject_failure, *timing);
            Ok(Rendered { text: commands::to_json(&report), passed: report.passed })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &rendered.text),
        None => std::io::stdout().lock().write_all(rendered.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {}", CliError::Io(e));
        return ExitCode::from(2);
    }
    if rendered.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
