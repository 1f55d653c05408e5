use std::path::PathBuf;
use std::process::ExitCode;

use alg_cli::dsl::{self, Document};
use alg_cli::exec::execute;
use alg_cli::report::{render_text, WireQuery, WireReport};
use alg_cli::caps_from_env;
use alg_core::verify::{
    property_description, property_names, run_suite, run_suite_parallel, search_separation,
    InstanceFamily, SearchTarget,
};
use clap::{Args, Parser, Subcommand};

/// Classify submodules of finite modules, run the property suites, and
/// search for separating instances.
#[derive(Parser)]
#[command(name = "alg", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the declarations and queries of an input file.
    Classify(ClassifyArgs),
    /// Parse and resolve an input file without executing it.
    Check { file: PathBuf },
    /// Run one registered property suite.
    Suite(SuiteArgs),
    /// Search for the first instance matching a separation target.
    Search(SearchArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    file: PathBuf,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Evaluate suite queries on a single thread.
    #[arg(long)]
    serial: bool,
}

#[derive(Args)]
struct SuiteArgs {
    /// Registered property name.
    #[arg(long, required_unless_present = "list")]
    property: Option<String>,
    /// List the registered properties and exit.
    #[arg(long)]
    list: bool,
    /// Largest base ring cardinality of the family.
    #[arg(long = "max-ring")]
    max_ring: Option<usize>,
    /// Largest module cardinality of the family.
    #[arg(long = "max-module")]
    max_module: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Evaluate on a single thread.
    #[arg(long)]
    serial: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// One of: s-primary-not-primary, s-primary-not-s-prime,
    /// converse-4c-failure.
    #[arg(long)]
    target: String,
    /// Largest base ring cardinality to examine.
    #[arg(long = "max-ring", default_value = "8")]
    max_ring: usize,
    #[arg(long)]
    json: bool,
}

const EXIT_SUITE_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn load(file: &PathBuf) -> Result<Document, String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    dsl::parse(&text).map_err(|e| e.to_string())
}

/// Print a line, tolerating a closed pipe on the other end.
fn out(line: &str) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let _ = writeln!(stdout.lock(), "{line}");
}

fn emit(report: &WireReport, json: bool) {
    if json {
        out(&serde_json::to_string(report).expect("reports serialize"));
    } else {
        for query in &report.queries {
            out(&render_text(query));
        }
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    let caps = caps_from_env()?;
    match cli.command {
        Command::Check { file } => {
            load(&file)?;
            out("ok");
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify(args) => {
            let doc = load(&args.file)?;
            let execution = execute(&doc, &caps, !args.serial).map_err(|e| e.to_string())?;
            emit(&execution.report, args.json);
            Ok(if execution.any_suite_failure {
                ExitCode::from(EXIT_SUITE_FAILURE)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Suite(args) => {
            if args.list {
                for name in property_names() {
                    out(&format!("{name:32} {}", property_description(name).unwrap_or("")));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let property = args.property.expect("clap enforces presence");
            let mut family = InstanceFamily::default_for(&property);
            if let Some(n) = args.max_ring {
                family = family.with_max_ring(n);
            }
            if let Some(n) = args.max_module {
                family = family.with_max_module(n);
            }
            let result = if args.serial {
                run_suite(&property, &family, &caps)
            } else {
                run_suite_parallel(&property, &family, &caps)
            }
            .map_err(|e| e.to_string())?;
            let failed = !result.passed();
            let elapsed = result.elapsed;
            let wire = WireReport {
                queries: vec![WireQuery::Suite {
                    property: result.property,
                    instances: result.instances_checked,
                    skipped: result.skipped,
                    failures: result.failures,
                }],
            };
            emit(&wire, args.json);
            if !args.json {
                out(&format!("elapsed: {elapsed:?}"));
            }
            Ok(if failed {
                ExitCode::from(EXIT_SUITE_FAILURE)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Search(args) => {
            let target = SearchTarget::parse(&args.target).map_err(|e| e.to_string())?;
            let result =
                search_separation(target, args.max_ring, &caps).map_err(|e| e.to_string())?;
            let wire = WireReport {
                queries: vec![WireQuery::Search {
                    target: result.target,
                    examined: result.instances_examined,
                    found: result.found,
                    exhausted: result.exhausted,
                }],
            };
            emit(&wire, args.json);
            Ok(ExitCode::SUCCESS)
        }
    }
}
