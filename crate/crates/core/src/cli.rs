//! The `spectral-bounds` command-line interface.
//!
//! Exit codes: 0 on success (or a passing campaign), 1 when a campaign finds
//! a violation, 2 on usage or input errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};

use crate::bounds::full_report;
use crate::graph::{self, graph6::from_graph6, Graph};
use crate::harness::{run_campaign, CampaignConfig, Check, GraphSource, VerificationRecord};
use crate::spectra::{spectral_radius, turan_spectral_radius};

const EXIT_OK: i32 = 0;
const EXIT_VIOLATION: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spectral-bounds", version, about = "Spectral radius bounds for simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the spectral radius of a graph.
    Mu(GraphInput),
    /// Print every bound for a graph as JSON.
    Report {
        #[command(flatten)]
        input: GraphInput,
        /// Clique parameter: the graph is tested as K_{r+1}-free.
        #[arg(long)]
        r: Option<usize>,
        /// Book parameter: no B_{k+1}.
        #[arg(long)]
        k: Option<usize>,
        /// Biclique parameter: no K_{2,l+1}.
        #[arg(long)]
        l: Option<usize>,
    },
    /// Print μ(T_r(n)) from the characteristic equation and from the eigensolver.
    Turan {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print a generated graph in graph6.
    Gen(GenArgs),
    /// Run a verification campaign and print its JSON record.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(required_unless_present = "edges", conflicts_with = "edges")]
    graph6: Option<String>,
    /// Read the graph from an edge-list file instead.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, String> {
        match (&self.graph6, &self.edges) {
            (Some(text), _) => from_graph6(text).map_err(|e| format!("invalid graph6 {text:?}: {e}")),
            (None, Some(path)) => graph::read_edge_list_file(path).map_err(|e| format!("{}: {e}", path.display())),
            (None, None) => Err("no graph given".into()),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
    Star,
    Wheel,
    Friendship,
    Bipartite,
    Turan,
    CompleteMinusEdge,
    MatchingComplement,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Order (complete, path, cycle, star, turan, complete-minus-edge,
    /// matching-complement) or rim length (wheel).
    #[arg(long)]
    n: Option<usize>,
    /// Number of triangles (friendship).
    #[arg(long)]
    t: Option<usize>,
    /// Part sizes (bipartite).
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Number of parts (turan).
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    Polyn,
    Classical,
    Counting,
    Interlacing,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    /// Clique parameters for `--theorem 1` and `polyn`; one record per value.
    #[arg(long, value_delimiter = ',')]
    r: Vec<usize>,
    /// Book parameter for `--theorem 3` and `counting`.
    #[arg(long)]
    k: Option<usize>,
    /// Biclique parameter for `--theorem 3` and `counting`.
    #[arg(long)]
    l: Option<usize>,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long)]
    n_max: Option<usize>,
    /// Read graphs from a graph6 file instead of the built-in enumeration.
    #[arg(long, value_name = "FILE")]
    graph6: Option<PathBuf>,
    #[arg(long, default_value_t = crate::bounds::DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    threads: Option<usize>,
    /// Write the JSON to this path instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl VerifyArgs {
    fn checks(&self) -> Result<Vec<Check>, String> {
        let kl = || match (self.k, self.l) {
            (Some(k), Some(l)) => Ok((k, l)),
            _ => Err("this theorem needs --k and --l".to_string()),
        };
        let rs = || {
            if self.r.is_empty() {
                Err("this theorem needs --r".to_string())
            } else {
                Ok(self.r.clone())
            }
        };
        Ok(match self.theorem {
            Theorem::One => rs()?.into_iter().map(|r| Check::Turan { r }).collect(),
            Theorem::Polyn => rs()?.into_iter().map(|r| Check::CliquePolynomial { r }).collect(),
            Theorem::Two => vec![Check::Irregularity],
            Theorem::Classical => vec![Check::Classical],
            Theorem::Interlacing => vec![Check::Interlacing],
            Theorem::Three => {
                let (k, l) = kl()?;
                vec![Check::BookBiclique { k, l }]
            }
            Theorem::Counting => {
                let (k, l) = kl()?;
                vec![Check::RowSums { k, l }]
            }
        })
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command) -> Result<i32, String> {
    match command {
        Command::Mu(input) => {
            println!("{:.12}", spectral_radius(&input.load()?));
        }
        Command::Report { input, r, k, l } => {
            let report = full_report(&input.load()?, r, k, l);
            println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
        }
        Command::Turan { r, n } => {
            let root = turan_spectral_radius(r, n).map_err(|e| e.to_string())?;
            let g = graph::turan_graph(r, n).map_err(|e| e.to_string())?;
            println!("{root:.12}");
            println!("{:.12}", spectral_radius(&g));
        }
        Command::Gen(args) => println!("{}", generate(&args)?),
        Command::Verify(args) => return verify(&args),
    }
    Ok(EXIT_OK)
}

fn generate(args: &GenArgs) -> Result<Graph, String> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| format!("this family needs --{flag}"));
    let g = match args.family {
        Family::Complete => graph::complete(need(args.n, "n")?),
        Family::Path => graph::path(need(args.n, "n")?),
        Family::Cycle => graph::cycle(need(args.n, "n")?),
        Family::Star => graph::star(need(args.n, "n")?),
        Family::Wheel => graph::wheel(need(args.n, "n")?),
        Family::Friendship => graph::friendship(need(args.t, "t")?),
        Family::Bipartite => graph::complete_bipartite(need(args.a, "a")?, need(args.b, "b")?),
        Family::Turan => graph::turan_graph(need(args.r, "r")?, need(args.n, "n")?),
        Family::CompleteMinusEdge => graph::complete_minus_edge(need(args.n, "n")?),
        Family::MatchingComplement => graph::matching_complement(need(args.n, "n")?),
    };
    g.map_err(|e| e.to_string())
}

fn verify(args: &VerifyArgs) -> Result<i32, String> {
    let checks = args.checks()?;
    let source = match &args.graph6 {
        Some(path) => GraphSource::Graph6File(path.clone()),
        None => GraphSource::Builtin,
    };
    let n_max = match (args.n_max, &source) {
        (Some(n), _) => n,
        (None, GraphSource::Builtin) => crate::harness::MAX_ENUMERATION_ORDER,
        (None, GraphSource::Graph6File(_)) => usize::MAX,
    };
    let mut records: Vec<VerificationRecord> = Vec::new();
    for check in checks {
        let config = CampaignConfig {
            check,
            n_min: args.n_min,
            n_max,
            source: source.clone(),
            tolerance: args.tol,
            threads: args.threads,
        };
        records.push(run_campaign(&config).map_err(|e| e.to_string())?);
    }
    let json = if records.len() == 1 {
        serde_json::to_string_pretty(&records[0])
    } else {
        serde_json::to_string_pretty(&records)
    }
    .expect("records serialize");
    match &args.out {
        Some(path) => std::fs::write(path, json + "\n").map_err(|e| format!("{}: {e}", path.display()))?,
        None => println!("{json}"),
    }
    Ok(if records.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_VIOLATION })
}
