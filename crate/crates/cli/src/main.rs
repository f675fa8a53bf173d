//! Command line front end. Exit codes are a stable contract: 0 success,
//! 1 verification violation, 2 vacuous-only verification, 3 input that
//! fails to parse or to be associative, 4 usage errors.

mod docs;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use semigroups::enumerate::{enumerate_tables, EnumerationConfig};
use semigroups::table::CayleyTable;
use semigroups::verify::{self, SuiteId};
use semigroups::Error;

#[derive(Parser)]
#[command(
    name = "semigroups",
    version,
    about = "Analyze, enumerate, and verify finite semigroups given by Cayley tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel sweeps; 0 keeps the default pool.
    /// Output bytes do not depend on this.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Write documents into this directory instead of standard output
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full property and structure report for one semigroup
    Analyze {
        /// Path to a table file, "-" for standard input, or an inline table
        input: String,
    },
    /// Quasiorder classes of one element and the fixpoint trace reaching them
    Classes {
        /// Path to a table file, "-" for standard input, or an inline table
        input: String,
        /// Element id, 0-based
        element: usize,
    },
    /// Smallest semilattice quotient of one semigroup
    Reflect {
        /// Path to a table file, "-" for standard input, or an inline table
        input: String,
    },
    /// Stream the corpus of Cayley tables in dump form, one per line
    Enumerate {
        /// Enumerate all orders up to this bound
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        /// Emit one table per isomorphism class instead of all labellings
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Run verification suites over the enumerated corpus
    Verify {
        /// Sweep all orders up to this bound
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        /// Run a single suite instead of all of them
        #[arg(long, value_name = "ID")]
        suite: Option<String>,
    },
}

enum Failure {
    /// Bad table input: unreadable, unparseable, or not associative.
    Input(String),
    /// Bad invocation: flags or arguments outside the supported range.
    Usage(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 3,
            Failure::Usage(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Usage(m) => m,
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let benign = matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if benign { 0 } else { 4 };
        }
    };
    if cli.jobs > 0 {
        // ignored when a global pool already exists (tests set one up once)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::Analyze { input } => {
            let s = load_table(input)?;
            let doc = docs::analyze(&s);
            emit(cli, "analyze", &doc, docs::render_analyze(&doc))?;
            Ok(0)
        }
        Command::Classes { input, element } => {
            let s = load_table(input)?;
            if *element >= s.order() {
                return Err(Failure::Usage(format!(
                    "element {element} is outside the carrier 0..{}",
                    s.order()
                )));
            }
            let doc = docs::classes(&s, *element);
            emit(cli, "classes", &doc, docs::render_classes(&doc))?;
            Ok(0)
        }
        Command::Reflect { input } => {
            let s = load_table(input)?;
            let doc = docs::reflect(&s);
            emit(cli, "reflect", &doc, docs::render_reflect(&doc))?;
            Ok(0)
        }
        Command::Enumerate {
            max_order,
            up_to_iso,
        } => {
            check_order_bound(*max_order, *up_to_iso)?;
            let mut dumps = Vec::new();
            for n in 1..=*max_order {
                let config = EnumerationConfig::new(n, *up_to_iso)
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                dumps.extend(enumerate_tables(&config).map(|s| s.to_dump_string()));
            }
            let doc = EnumerationDocument {
                max_order: *max_order,
                up_to_iso: *up_to_iso,
                count: dumps.len(),
                tables: dumps,
            };
            let text = doc.tables.iter().fold(String::new(), |mut acc, d| {
                acc.push_str(d);
                acc.push('\n');
                acc
            });
            emit(cli, "tables", &doc, text)?;
            Ok(0)
        }
        Command::Verify { max_order, suite } => {
            check_order_bound(*max_order, false)?;
            let reports = match suite {
                Some(id) => {
                    let id: SuiteId = id
                        .parse()
                        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
                    vec![run_suite(id, *max_order)?]
                }
                None => verify::ALL_SUITES
                    .into_iter()
                    .map(|id| run_suite(id, *max_order))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            if let Some(dir) = &cli.out {
                ensure_dir(dir)?;
                for r in &reports {
                    let path = dir.join(format!("{}.json", r.suite));
                    write_file(&path, &to_json(r)?)?;
                }
                print!("{}", docs::render_verify(&reports));
            } else {
                match cli.format {
                    Format::Text => print!("{}", docs::render_verify(&reports)),
                    Format::Json => println!("{}", to_json(&reports)?),
                }
            }
            Ok(verify::exit_code(&reports))
        }
    }
}

#[derive(Serialize)]
struct EnumerationDocument {
    max_order: usize,
    up_to_iso: bool,
    count: usize,
    tables: Vec<String>,
}

/// Rejects an out-of-range sweep bound upfront so the error names the
/// requested order, not the first order the loop failed at.
fn check_order_bound(max_order: usize, up_to_iso: bool) -> Result<(), Failure> {
    if max_order >= 1 {
        EnumerationConfig::new(max_order, up_to_iso).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run_suite(id: SuiteId, max_order: usize) -> Result<verify::VerificationReport, Failure> {
    verify::run_suite(id, max_order).map_err(|e| match e {
        Error::OrderTooLarge { .. } => Failure::Usage(e.to_string()),
        other => Failure::Usage(other.to_string()),
    })
}

/// Reads the table from a file, standard input, or the argument itself.
fn load_table(input: &str) -> Result<CayleyTable, Failure> {
    let content = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        buf
    } else if Path::new(input).is_file() {
        fs::read_to_string(input)
            .map_err(|e| Failure::Input(format!("cannot read {input}: {e}")))?
    } else {
        input.to_string()
    };
    parse_content(&content).map_err(|e| {
        if input != "-" && !Path::new(input).is_file() && !input.contains([':', '\n'])
        {
            Failure::Input(format!("no file named {input:?} and it does not parse as a table: {e}"))
        } else {
            Failure::Input(e.to_string())
        }
    })
}

/// Dump form on one line, JSON when braced, row text otherwise.
fn parse_content(src: &str) -> semigroups::Result<CayleyTable> {
    let trimmed = src.trim();
    if trimmed.starts_with('{') {
        CayleyTable::parse_json(src)
    } else if !trimmed.contains('\n') && trimmed.contains(':') {
        CayleyTable::parse_dump(trimmed)
    } else {
        CayleyTable::parse_text(src)
    }
}

fn emit<T: Serialize>(cli: &Cli, stem: &str, doc: &T, text: String) -> Result<(), Failure> {
    let (body, ext) = match cli.format {
        Format::Text => (text, "txt"),
        Format::Json => (format!("{}\n", to_json(doc)?), "json"),
    };
    match &cli.out {
        Some(dir) => {
            ensure_dir(dir)?;
            let path = dir.join(format!("{stem}.{ext}"));
            write_file(&path, &body)?;
            println!("wrote {}", path.display());
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(doc: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(doc)
        .map_err(|e| Failure::Usage(format!("cannot serialize report: {e}")))
}

fn ensure_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .map_err(|e| Failure::Input(format!("cannot create {}: {e}", dir.display())))
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}
