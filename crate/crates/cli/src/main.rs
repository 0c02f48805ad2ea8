//! Command-line surface: validate, betti, induced, apply, complement,
//! closure, realize. All reports are UTF-8 JSON with stable ordering, so
//! identical inputs produce byte-identical output.
//!
//! Exit codes: 0 success, 1 parse error, 2 declared-kind mismatch,
//! 3 closure violation, 4 grade-parity violation.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use cosimplex_cli::{commands, CliError};

#[derive(Parser)]
#[command(
    name = "cosimplex",
    version,
    about = "Exact discrete calculus and generalized (co)homology on finite hypergraphs"
)]
struct Cli {
    /// Where to write the JSON report; "-" is stdout
    #[arg(long, global = true, default_value = "-")]
    output: String,

    /// Fractional digits used when rendering decimals
    #[arg(long, global = true, default_value_t = 12)]
    decimal_precision: usize,

    /// Cap on the number of vertices accepted from input files
    #[arg(long, global = true, default_value_t = 24)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a complex file and report its per-dimension profile
    Validate { complex: PathBuf },

    /// Betti numbers of a complex under an odd-grade operator
    Betti {
        complex: PathBuf,
        operator: PathBuf,
        /// Inclusive absolute-degree range "a..b" (default 0..top)
        #[arg(long, allow_hyphen_values = true)]
        degrees: Option<String>,
        /// Base degree m, combined with --n-range
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        /// Inclusive range of n "a..b" (default 0..top)
        #[arg(long = "n-range", allow_hyphen_values = true)]
        n_range: Option<String>,
        /// homology | cohomology; inferred from the operator when omitted
        #[arg(long)]
        side: Option<String>,
    },

    /// Matrix of the map induced on (co)homology by an even-grade operator
    Induced {
        complex: PathBuf,
        operator: PathBuf,
        map_operator: PathBuf,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = 0)]
        n: i64,
    },

    /// Apply an operator to a path literal such as "v0 v1 - 2 v1 v2"
    Apply {
        operator: PathBuf,
        /// Vertex labels and +/- separated terms
        #[arg(required = true)]
        path: Vec<String>,
        /// Complex file supplying the vertex order (default: labels sorted)
        #[arg(long)]
        complex: Option<PathBuf>,
    },

    /// Hyperedges of the ambient complex not in the given one
    Complement {
        complex: PathBuf,
        /// Ambient complex (default: the complete hypergraph)
        #[arg(long)]
        ambient: Option<PathBuf>,
    },

    /// Smallest (co-)simplicial complex containing the input
    Closure {
        complex: PathBuf,
        #[arg(long)]
        simplicial: bool,
        #[arg(long)]
        cosimplicial: bool,
    },

    /// Coordinates of the standard-basis realization
    Realize {
        complex: PathBuf,
        /// Emit decimal coordinates instead of rational strings
        #[arg(long)]
        decimal: bool,
    },
}

fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let max = cli.max_vertices;
    match &cli.command {
        Command::Validate { complex } => {
            let (report, matches) = commands::validate(complex, max)?;
            Ok((report, if matches { 0 } else { 2 }))
        }
        Command::Betti {
            complex,
            operator,
            degrees,
            m,
            n_range,
            side,
        } => commands::betti(
            commands::BettiArgs {
                complex,
                operator,
                degrees: degrees.clone(),
                m: *m,
                n_range: n_range.clone(),
                side: side.clone(),
            },
            max,
        )
        .map(|r| (r, 0)),
        Command::Induced {
            complex,
            operator,
            map_operator,
            m,
            n,
        } => commands::induced(complex, operator, map_operator, *m, *n, max).map(|r| (r, 0)),
        Command::Apply {
            operator,
            path,
            complex,
        } => commands::apply(operator, path, complex.as_deref(), max).map(|r| (r, 0)),
        Command::Complement { complex, ambient } => {
            commands::complement(complex, ambient.as_deref(), max).map(|r| (r, 0))
        }
        Command::Closure {
            complex,
            simplicial,
            cosimplicial,
        } => commands::closure(complex, *simplicial, *cosimplicial, max).map(|r| (r, 0)),
        Command::Realize { complex, decimal } => {
            commands::realize(complex, *decimal, cli.decimal_precision, max).map(|r| (r, 0))
        }
    }
}

fn write_report(target: &str, report: &str) -> std::io::Result<()> {
    if target == "-" {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        lock.write_all(report.as_bytes())?;
        lock.flush()
    } else {
        std::fs::write(target, report)
    }
}

fn main() {
    // clap's own usage errors would exit with 2, which this tool reserves
    // for declared-kind mismatches; remap them onto the parse-error code.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            e.exit()
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(&cli) {
        Ok((report, code)) => {
            if let Err(e) = write_report(&cli.output, &report) {
                eprintln!("error: cannot write output: {e}");
                std::process::exit(1);
            }
            std::process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}
