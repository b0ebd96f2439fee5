use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use t0kit_cli::commands::{self, Ctx, ExportSource, Route};
use t0kit_cli::error::{CliError, CliResult};
use t0kit_cli::report::Format;

/// Finite T0 spaces: property checks, constructions, enumeration and the
/// symbolic example corpus.
#[derive(Parser)]
#[command(name = "t0kit", version)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Add wall-clock timings to the report.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide properties of every space in a `.space` file.
    Check {
        file: PathBuf,
        /// One of sober, cosober, strongd, kbsober, owf, t0, t1, or all.
        #[arg(long, default_value = "all")]
        property: String,
        /// Only check the space with this name.
        #[arg(long)]
        space: Option<String>,
    },
    /// Build a space from others. Inputs are `FILE` or `FILE:SPACE`.
    #[command(subcommand)]
    Construct(Construct),
    /// The fixed example corpus.
    #[command(subcommand)]
    Corpus(Corpus),
    /// List all spaces of a size up to homeomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Boolean filter over property names, e.g. `!t1 & sober`.
        #[arg(long = "where")]
        filter: Option<String>,
    },
    /// Print a space as a DOT Hasse diagram or as `.space` text.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum Construct {
    Product {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Also write the result as a `.space` file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    Subspace {
        input: String,
        #[arg(long, num_args = 0.., required = true)]
        points: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    Sobrify {
        input: String,
        #[arg(long, value_enum, default_value_t = Route::Both)]
        route: Route,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    Bclosure {
        input: String,
        #[arg(long, num_args = 0.., required = true)]
        points: Vec<String>,
    },
    Reflect {
        input: String,
        #[arg(long, num_args = 1.., required = true)]
        points: Vec<String>,
        /// A registered class predicate.
        #[arg(long, default_value = "sober")]
        class: String,
        /// Test the universal property against all spaces up to this size.
        #[arg(long, default_value_t = 3)]
        targets: usize,
    },
}

#[derive(Subcommand)]
enum Corpus {
    Run {
        /// Search bound for claims decided only up to a bound.
        #[arg(long, default_value_t = 30)]
        bound: u64,
    },
}

#[derive(Args)]
struct ExportArgs {
    #[arg(required_unless_present_any = ["catalog", "johnstone"])]
    file: Option<PathBuf>,
    /// Emit DOT (the default).
    #[arg(long, conflicts_with = "space_text")]
    dot: bool,
    /// Emit `.space` text instead of DOT.
    #[arg(long = "space-text")]
    space_text: bool,
    /// Which space of FILE.
    #[arg(long)]
    space: Option<String>,
    /// Truncate a catalog space instead of reading a file.
    #[arg(long, conflicts_with_all = ["file", "johnstone"], requires = "bound")]
    catalog: Option<String>,
    /// Catalog parameters, e.g. `--param 3` for `scott_xn`.
    #[arg(long = "param", allow_negative_numbers = true)]
    params: Vec<i64>,
    /// Number of catalog points kept.
    #[arg(long)]
    bound: Option<u64>,
    /// Johnstone grid `COLUMNSxHEIGHT`, e.g. `3x3`.
    #[arg(long, conflicts_with = "file")]
    johnstone: Option<String>,
}

fn grid(arg: &str) -> CliResult<(u64, u64)> {
    arg.split_once('x')
        .and_then(|(c, h)| Some((c.parse().ok()?, h.parse().ok()?)))
        .ok_or_else(|| CliError::Usage(format!("--johnstone expects COLUMNSxHEIGHT, got `{arg}`")))
}

fn run(cli: Cli) -> CliResult<(String, i32)> {
    let mut ctx = Ctx::new(cli.format, cli.timings);
    match cli.command {
        Command::Check { file, property, space } => commands::check(&mut ctx, &file, &property, space.as_deref()),
        Command::Construct(c) => match c {
            Construct::Product { inputs, output } => commands::construct_product(&mut ctx, &inputs, output.as_ref()),
            Construct::Subspace { input, points, output } => {
                commands::construct_subspace(&mut ctx, &input, &points, output.as_ref())
            }
            Construct::Sobrify { input, route, output } => {
                commands::construct_sobrify(&mut ctx, &input, route, output.as_ref())
            }
            Construct::Bclosure { input, points } => commands::construct_bclosure(&mut ctx, &input, &points),
            Construct::Reflect {
                input,
                points,
                class,
                targets,
            } => commands::construct_reflect(&mut ctx, &input, &points, &class, targets),
        },
        Command::Corpus(Corpus::Run { bound }) => commands::corpus_run(&mut ctx, bound),
        Command::Enumerate { size, filter } => commands::enumerate(&mut ctx, size, filter.as_deref()),
        Command::Export(a) => {
            let source = if let Some(name) = &a.catalog {
                ExportSource::Catalog {
                    name,
                    params: &a.params,
                    bound: a.bound.expect("clap requires --bound"),
                }
            } else if let Some(g) = &a.johnstone {
                let (columns, height) = grid(g)?;
                ExportSource::Johnstone { columns, height }
            } else {
                ExportSource::File {
                    path: a.file.as_deref().expect("clap requires FILE"),
                    space: a.space.as_deref(),
                }
            };
            Ok((commands::export(source, !a.space_text)?, commands::EXIT_OK))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(value) = std::env::var("T0KIT_CAP") {
        if let Err(e) = t0kit::caps::Caps::parse(&value) {
            eprintln!("error: T0KIT_CAP: {e}");
            return ExitCode::from(64);
        }
    }
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
