//! `syt`: count standard Young tableaux, dump generating functions, draw the
//! Young lattice and cross-check every counting method.
//!
//! Exit codes: 0 success, 1 disagreement between methods, 2 usage error.

mod bench;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use syt::dft_a2::{DftConfig, DftMode};
use syt::oracle::{enumerate_tableaux, DEFAULT_CAP};
use syt::verify::{applicable, count_by, CountOptions, VerifyConfig};
use syt::young_graph::young_graph_dot;
use syt::{genfun, partitions_of, verify, Method, Partition};

use report::{CountReport, DftReport, TableRow};

const TABLE_MAX_N: usize = 40;
const GENFUN_MAX_N: usize = 60;
const GENFUN_MAX_R: usize = 6;

#[derive(Parser)]
#[command(name = "syt", version, about = "Standard Young tableaux by five counting methods")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliMethod {
    Auto,
    Dp,
    Genfun,
    Closed,
    Tworow,
    Dft,
    Oracle,
}

impl CliMethod {
    fn resolve(self) -> Method {
        match self {
            CliMethod::Auto | CliMethod::Closed => Method::Closed,
            CliMethod::Dp => Method::Dp,
            CliMethod::Genfun => Method::Genfun,
            CliMethod::Tworow => Method::TwoRow,
            CliMethod::Dft => Method::Dft,
            CliMethod::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliDftMode {
    Derived,
    Verbatim,
}

impl From<CliDftMode> for DftMode {
    fn from(m: CliDftMode) -> Self {
        match m {
            CliDftMode::Derived => DftMode::Derived,
            CliDftMode::Verbatim => DftMode::Verbatim,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
}

#[derive(clap::Args, Clone, Copy)]
struct DftArgs {
    /// Initial-state construction for the Fourier formula.
    #[arg(long, value_enum, default_value_t = CliDftMode::Derived)]
    dft_mode: CliDftMode,
    /// Accept the rounded Fourier sum only when its residual is below this.
    #[arg(long, default_value_t = 0.25)]
    dft_tolerance: f64,
}

impl DftArgs {
    fn options(self) -> CountOptions {
        CountOptions {
            dft: DftConfig {
                mode: self.dft_mode.into(),
                tolerance: self.dft_tolerance,
                ..DftConfig::default()
            },
            oracle_cap: DEFAULT_CAP,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count f^λ for one shape.
    Count {
        /// Comma-separated parts, e.g. 5,2,1.
        #[arg(long)]
        shape: Partition,
        /// Number of rows to work in (defaults to the shape's height).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = CliMethod::Auto)]
        method: CliMethod,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        dft: DftArgs,
    },
    /// Tabulate f^λ for every λ ⊢ n with at most max-r rows.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the generating function F_{n,r}.
    Genfun {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Emit the Young lattice with path counts as a DOT digraph.
    Graph {
        #[arg(long)]
        r: usize,
        /// Largest part shown.
        #[arg(long, default_value_t = 4)]
        max_coordinate: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run every applicable method on every small shape and report disagreements.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_r: usize,
        #[arg(long, default_value_t = 12)]
        dft_max_n: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        dft: DftArgs,
    },
    /// Time each method over all shapes of each size, as CSV.
    Bench {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Rows allowed per shape.
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// Comma-separated subset of dp,genfun,closed,tworow,dft,oracle.
        #[arg(long, value_delimiter = ',', default_value = "dp,genfun,closed,tworow,dft,oracle")]
        methods: Vec<Method>,
    },
    /// List every standard tableau of a shape.
    Enumerate {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Disagreement,
}

impl From<syt::Error> for Failure {
    fn from(e: syt::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Disagreement) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable report")
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Count {
            shape,
            r,
            method,
            json,
            dft,
        } => {
            let method = method.resolve();
            let r = r.unwrap_or(shape.height().max(1));
            let opts = dft.options();
            let start = Instant::now();
            let counted = count_by(method, &shape, r, &opts)?;
            let elapsed = start.elapsed();
            let report = CountReport {
                shape: shape.to_string(),
                n: shape.size(),
                r,
                method,
                count: counted.value.to_string(),
                elapsed_us: elapsed.as_secs_f64() * 1e6,
                dft: counted.dft.map(DftReport::from),
            };
            if json {
                println!("{}", to_json(&report));
            } else {
                println!("{}", report.render());
            }
            Ok(())
        }
        Command::Table { n, max_r, json } => {
            if n > TABLE_MAX_N {
                return Err(Failure::Usage(format!("table needs n <= {TABLE_MAX_N}")));
            }
            if max_r == 0 {
                return Err(Failure::Usage("max-r must be at least 1".into()));
            }
            let rows = table_rows(n, max_r)?;
            if json {
                println!("{}", to_json(&rows));
            } else {
                for row in &rows {
                    println!("{}", row.render());
                }
            }
            if rows.iter().all(|r| r.agree) {
                Ok(())
            } else {
                Err(Failure::Disagreement)
            }
        }
        Command::Genfun { n, r, format } => {
            if n > GENFUN_MAX_N || r == 0 || r > GENFUN_MAX_R {
                return Err(Failure::Usage(format!(
                    "genfun needs n <= {GENFUN_MAX_N} and 1 <= r <= {GENFUN_MAX_R}"
                )));
            }
            let f = genfun(n, r)?;
            match format {
                PolyFormat::Text => println!("{f}"),
                PolyFormat::Json => println!("{}", to_json(&f.to_records())),
            }
            Ok(())
        }
        Command::Graph {
            r,
            max_coordinate,
            format: GraphFormat::Dot,
        } => {
            print!("{}", young_graph_dot(r, max_coordinate)?);
            Ok(())
        }
        Command::Verify {
            max_n,
            max_r,
            dft_max_n,
            json,
            dft,
        } => {
            let config = VerifyConfig {
                max_n,
                max_r,
                dft_max_n,
                options: dft.options(),
            };
            let report = verify(&config)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", report::render_verify(&report));
            }
            if report.is_ok() {
                Ok(())
            } else {
                Err(Failure::Disagreement)
            }
        }
        Command::Bench { max_n, r, methods } => {
            if r == 0 {
                return Err(Failure::Usage("r must be at least 1".into()));
            }
            print!("{}", bench::run(max_n, r, &methods));
            Ok(())
        }
        Command::Enumerate { shape, json } => {
            let tableaux = enumerate_tableaux(&shape, DEFAULT_CAP)?;
            if json {
                let rows: Vec<_> = tableaux.iter().map(|t| &t.rows).collect();
                println!("{}", to_json(&rows));
            } else {
                let blocks: Vec<String> = tableaux.iter().map(|t| t.render()).collect();
                println!("{}", blocks.join("\n\n"));
            }
            Ok(())
        }
    }
}

fn table_rows(n: usize, max_r: usize) -> Result<Vec<TableRow>, Failure> {
    let opts = CountOptions::default();
    let f = genfun(n, max_r)?;
    let mut rows = Vec::new();
    for shape in partitions_of(n, max_r) {
        let closed = count_by(Method::Closed, &shape, max_r, &opts)?.value;
        let mut agree = true;
        for method in [Method::Dp, Method::Oracle] {
            if applicable(method, &shape, max_r, &opts) {
                agree &= count_by(method, &shape, max_r, &opts)?.value == closed;
            }
        }
        let exps: Vec<i64> = shape.padded(max_r)?.into_iter().map(|p| p as i64).collect();
        agree &= f.coefficient(&exps)? == closed;
        rows.push(TableRow {
            shape: shape.to_string(),
            count: closed.to_string(),
            agree,
        });
    }
    Ok(rows)
}
