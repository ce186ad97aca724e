//! `softclass`: soft-set algebra, soft images and law checking from the
//! command line.
//!
//! Exit status: 0 on success, 1 when `check` finds law violations, 2 on
//! usage errors, 3 on invalid documents or values, 4 on I/O failures.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use softclass::codec::{self, Canonical, ContextRegistry, DocumentError};
use softclass::oracle::{self, Bounds, LawId, Report};
use softclass::{demo, ClassMapping, MapMode, ResultMode, SoftSet};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "softclass",
    version,
    about = "Soft sets and mappings between soft classes"
)]
struct Cli {
    /// Named context for documents that refer to one by string, as
    /// NAME=PATH or PATH (named after the file stem). Repeatable.
    #[arg(long = "context", global = true, value_name = "[NAME=]PATH")]
    contexts: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Soft union of two soft sets.
    Union(Pair),
    /// Soft intersection of two soft sets (parameter sets must overlap).
    Intersect(Pair),
    /// Whether LEFT is a soft subset of RIGHT.
    Subset(Pair),
    /// Soft image of a soft set under a mapping.
    Image(Push),
    /// Soft inverse image of a soft set under a mapping.
    Preimage(Push),
    /// Exhaustively check laws over all strict mappings between contexts of
    /// the given sizes.
    Check(Check),
    /// Built-in demonstrations.
    Demo {
        #[arg(value_enum)]
        which: DemoName,
        /// Require a total attribute map.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args)]
struct Pair {
    left: PathBuf,
    right: PathBuf,
}

#[derive(Args)]
struct Push {
    /// Mapping document.
    #[arg(long = "map", value_name = "PATH")]
    mapping: PathBuf,
    /// Soft set document.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    /// Keep the literal domain of the result.
    #[arg(long, conflicts_with = "full")]
    raw: bool,
    /// Pad the result to the whole attribute space (default).
    #[arg(long)]
    full: bool,
}

#[derive(Args)]
struct Check {
    /// |X|, size of the source universe.
    #[arg(long = "x")]
    universe: usize,
    /// |Y|, size of the target universe.
    #[arg(long = "y")]
    target_universe: usize,
    /// |E|, size of the source attribute space.
    #[arg(long = "e")]
    attributes: usize,
    /// |E'|, size of the target attribute space.
    #[arg(long = "ep")]
    target_attributes: usize,
    /// Laws to check (default L1..L10).
    #[arg(long, value_delimiter = ',', value_parser = parse_law)]
    laws: Vec<LawId>,
    /// Also check every smaller size, and sample the family forms of L3, L4,
    /// L8, L9 on triples.
    #[arg(long)]
    deep: bool,
    /// Search for a counterexample to N1 or N2 instead of checking laws.
    #[arg(long, value_parser = parse_law, conflicts_with = "laws")]
    find: Option<LawId>,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Medical,
}

fn parse_law(s: &str) -> Result<LawId, String> {
    s.parse()
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{}: {source}", .path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {source}", .path.display())]
    Document {
        path: PathBuf,
        source: DocumentError,
    },
    #[error(transparent)]
    Invalid(#[from] softclass::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Document { .. } | CliError::Invalid(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

const VIOLATIONS_FOUND: u8 = 1;
const FAMILY_SAMPLES: usize = 1000;

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(io_err)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(io_err)
    }
}

fn registry(specs: &[String]) -> Result<ContextRegistry, CliError> {
    let mut registry = ContextRegistry::new();
    for spec in specs {
        let (name, path) = match spec.split_once('=') {
            Some((name, path)) => (name.to_owned(), PathBuf::from(path)),
            None => {
                let path = PathBuf::from(spec);
                let stem = path
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .ok_or_else(|| CliError::Usage(format!("cannot name context `{spec}`")))?
                    .to_owned();
                (stem, path)
            }
        };
        let context = codec::parse_context(&read(&path)?)
            .map_err(|source| CliError::Document { path, source })?;
        registry.insert(name, context);
    }
    Ok(registry)
}

struct Inputs {
    registry: ContextRegistry,
}

impl Inputs {
    fn soft_set(&self, path: &Path) -> Result<SoftSet, CliError> {
        codec::parse_soft_set(&read(path)?, &self.registry).map_err(|source| CliError::Document {
            path: path.to_owned(),
            source,
        })
    }

    fn mapping(&self, path: &Path) -> Result<ClassMapping, CliError> {
        codec::parse_mapping(&read(path)?, &self.registry).map_err(|source| CliError::Document {
            path: path.to_owned(),
            source,
        })
    }
}

fn summarize(report: &Report) {
    for law in &report.laws {
        eprintln!(
            "{:<10} {:>10} instances {:>10} skipped {:>6} violations",
            law.label(),
            law.instances,
            law.skipped,
            law.violations.len()
        );
    }
}

fn check(args: &Check) -> Result<u8, CliError> {
    let bounds = Bounds {
        universe: args.universe,
        target_universe: args.target_universe,
        attributes: args.attributes,
        target_attributes: args.target_attributes,
    };
    let (source, target) = bounds.contexts()?;

    if let Some(law) = args.find {
        let found = if args.deep {
            oracle::search_within(law, bounds)?.map(|(_, w)| w)
        } else {
            oracle::search_counterexample(law, &source, &target)?
        };
        match found {
            Some(w) => println!("{}", w.to_canonical()),
            None => println!("null"),
        }
        return Ok(0);
    }

    let laws: Vec<LawId> = if args.laws.is_empty() {
        LawId::THEOREMS.to_vec()
    } else {
        args.laws.clone()
    };
    let mut report = if args.deep {
        oracle::sweep_exhaustive(bounds, &laws)?
    } else {
        oracle::run_exhaustive(&source, &target, &laws)?
    };
    if args.deep {
        report.merge(oracle::sample_family_laws(
            &source,
            &target,
            &laws,
            3,
            FAMILY_SAMPLES,
            0,
        )?);
    }
    println!("{}", report.to_canonical());
    summarize(&report);
    Ok(if report.violation_count() > 0 {
        VIOLATIONS_FOUND
    } else {
        0
    })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let inputs = Inputs {
        registry: registry(&cli.contexts)?,
    };
    match cli.command {
        Command::Union(pair) => {
            let (l, r) = (inputs.soft_set(&pair.left)?, inputs.soft_set(&pair.right)?);
            println!("{}", l.union(&r)?.to_canonical());
        }
        Command::Intersect(pair) => {
            let (l, r) = (inputs.soft_set(&pair.left)?, inputs.soft_set(&pair.right)?);
            println!("{}", l.intersection(&r)?.to_canonical());
        }
        Command::Subset(pair) => {
            let (l, r) = (inputs.soft_set(&pair.left)?, inputs.soft_set(&pair.right)?);
            println!("{}", l.is_soft_subset(&r)?);
        }
        Command::Image(push) => {
            let f = inputs.mapping(&push.mapping)?;
            let s = inputs.soft_set(&push.input)?;
            println!("{}", f.image(&s, result_mode(&push))?.to_canonical());
        }
        Command::Preimage(push) => {
            let f = inputs.mapping(&push.mapping)?;
            let s = inputs.soft_set(&push.input)?;
            println!("{}", f.preimage(&s, result_mode(&push))?.to_canonical());
        }
        Command::Check(args) => return check(&args),
        Command::Demo {
            which: DemoName::Medical,
            strict,
        } => {
            let mode = if strict {
                MapMode::Strict
            } else {
                MapMode::Partial
            };
            let diagnosis = demo::medical(mode)?;
            println!("{}", diagnosis.image.to_canonical());
            print!("{}", diagnosis.render());
        }
    }
    Ok(0)
}

fn result_mode(push: &Push) -> ResultMode {
    if push.raw {
        ResultMode::Raw
    } else {
        ResultMode::Full
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
