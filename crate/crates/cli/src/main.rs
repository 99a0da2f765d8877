//! `hamcomp`: generators, constructions, verifiers and oracles for
//! competition numbers of Hamming graphs.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hamming_competition::bounds::{self, BruteForceOutcome, CountingVerdict};
use hamming_competition::clique::{self, CliqueFamily};
use hamming_competition::competition::{verify_realization, Realization, Verdict};
use hamming_competition::constructions;
use hamming_competition::graph::{box_graph, hamming_graph_with_limit, Graph, DEFAULT_VERTEX_LIMIT};
use hamming_competition::{io as docs, Error};

const EXIT_FAIL: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "hamcomp", version, about = "Competition numbers of Hamming graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a Hamming or box graph
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Build one of the explicit digraph realizations
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Verify a realization against a graph
    Verify(VerifyArgs),
    /// Run an exact oracle on a graph
    Compute {
        #[command(subcommand)]
        what: ComputeCommand,
    },
    /// Check a counting inequality on a realization
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Look up closed-form values
    Table {
        #[command(subcommand)]
        what: TableCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenCommand {
    Hamming {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        max_vertices: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    Box {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Realization of H(2,q) with two extra vertices
    H2q {
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        opts: ConstructArgs,
    },
    /// Recursive realization of K_q1 □ K_q2 □ K_q3 with six extra vertices
    Box {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<u32>,
        #[command(flatten)]
        opts: ConstructArgs,
    },
    /// The H(3,2) base case with six extra vertices
    H32Base {
        #[command(flatten)]
        opts: ConstructArgs,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    out: OutputArgs,
    /// Verify the result; exit nonzero on failure
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    realization: PathBuf,
    /// Graph document; defaults to the box graph given by the realization's dims
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Number of extra vertices; defaults to the count in the realization
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum ComputeCommand {
    /// Exact competition number
    K {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, default_value_t = bounds::BRUTE_FORCE_LIMIT)]
        max_vertices: usize,
        /// Also write the witness realization here
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Lower bound min_v θ_V(N(v))
    Opsut {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = clique::THETA_LIMIT)]
        max_vertices: usize,
    },
    /// Edge clique cover number
    ThetaE {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = clique::THETA_LIMIT)]
        max_vertices: usize,
    },
    /// Vertex clique cover number
    ThetaV {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = clique::THETA_LIMIT)]
        max_vertices: usize,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Prefix counting inequality against the canonical family (or --family)
    Counting {
        #[arg(long)]
        realization: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        family: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    /// Known competition number of H(n,q)
    Known {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
}

enum Failure {
    Lib(Error),
    Io(PathBuf, io::Error),
    Verdict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Io(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource { .. } => EXIT_RESOURCE,
                Error::Parse(_) => EXIT_PARSE,
                Error::Domain(_) => 1,
            })
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Gen { what } => gen(what),
        Command::Construct { what } => construct(what),
        Command::Verify(args) => verify(args),
        Command::Compute { what } => compute(what),
        Command::Check { what } => check(what),
        Command::Table { what } => table(what),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write_out(out: &Option<PathBuf>, text: &str) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(path.clone(), e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(docs::graph_from_json(&read(path)?)?)
}

fn read_realization(path: &Path) -> Result<Realization, Failure> {
    Ok(docs::realization_from_json(&read(path)?)?)
}

fn gen(what: GenCommand) -> CmdResult {
    let (g, out) = match what {
        GenCommand::Hamming {
            n,
            q,
            max_vertices,
            out,
        } => (hamming_graph_with_limit(n, q, max_vertices)?, out),
        GenCommand::Box { dims, out } => (box_graph(&dims)?, out),
    };
    let text = match out.emit {
        Emit::Json => docs::graph_to_json(&g),
        Emit::Dot => docs::graph_to_dot(&g),
    };
    write_out(&out.output, &text)
}

fn construct(what: ConstructCommand) -> CmdResult {
    let (r, host, k, opts) = match what {
        ConstructCommand::H2q { q, opts } => {
            let r = constructions::build_d_h2q(q)?;
            (r, hamming_graph_with_limit(2, q, DEFAULT_VERTEX_LIMIT)?, 2, opts)
        }
        ConstructCommand::Box { dims, opts } => {
            let r = constructions::build_d_box(&dims)?;
            (r, box_graph(&dims)?, 6, opts)
        }
        ConstructCommand::H32Base { opts } => {
            let r = constructions::build_d_h32()?;
            (r, box_graph(&[2, 2, 2])?, 6, opts)
        }
    };
    let text = match opts.out.emit {
        Emit::Json => docs::realization_to_json(&r),
        Emit::Dot => docs::digraph_to_dot(r.digraph()),
    };
    write_out(&opts.out.output, &text)?;
    if opts.verify {
        let verdict = verify_realization(r.digraph(), &host, k)?;
        report(&verdict, opts.out.output.is_some())?;
    }
    Ok(())
}

/// Prints the verdict line (stdout when it does not share the stream with a document).
fn report(verdict: &Verdict, to_stdout: bool) -> CmdResult {
    if to_stdout {
        println!("{verdict}");
    } else {
        eprintln!("{verdict}");
    }
    if verdict.is_pass() {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn host_from_dims(r: &Realization) -> Result<Graph, Failure> {
    let dims = r.digraph().dims().ok_or_else(|| {
        Error::Domain("realization has no dims; pass --graph".into())
    })?;
    Ok(box_graph(dims).or_else(|_| hamming_graph_with_limit(dims.len(), dims[0], DEFAULT_VERTEX_LIMIT))?)
}

fn verify(args: VerifyArgs) -> CmdResult {
    let r = read_realization(&args.realization)?;
    let g = match &args.graph {
        Some(path) => read_graph(path)?,
        None => host_from_dims(&r)?,
    };
    let k = args.k.unwrap_or_else(|| r.k());
    let verdict = verify_realization(r.digraph(), &g, k)?;
    report(&verdict, true)
}

fn compute(what: ComputeCommand) -> CmdResult {
    match what {
        ComputeCommand::K {
            input,
            k_max,
            max_vertices,
            witness,
        } => {
            let g = read_graph(&input)?;
            match bounds::competition_number_bruteforce_with_limit(&g, k_max, max_vertices)? {
                BruteForceOutcome::Exact { k, witness: w } => {
                    if let Some(path) = witness {
                        let text = docs::realization_to_json(&w);
                        fs::write(&path, text).map_err(|e| Failure::Io(path, e))?;
                    }
                    println!("{k}");
                }
                BruteForceOutcome::ExceedsKMax => {
                    println!("EXCEEDS {}", k_max.unwrap_or(g.edge_count()));
                }
            }
        }
        ComputeCommand::Opsut { input, max_vertices } => {
            let g = read_graph(&input)?;
            println!("{}", bounds::opsut_lower_bound_with_limit(&g, max_vertices)?);
        }
        ComputeCommand::ThetaE { input, max_vertices } => {
            let g = read_graph(&input)?;
            println!("{}", clique::theta_e_bruteforce_with_limit(&g, max_vertices)?);
        }
        ComputeCommand::ThetaV { input, max_vertices } => {
            let g = read_graph(&input)?;
            println!("{}", clique::theta_v_bruteforce_with_limit(&g, max_vertices)?);
        }
    }
    Ok(())
}

fn check(what: CheckCommand) -> CmdResult {
    let CheckCommand::Counting {
        realization,
        k,
        family,
    } = what;
    let r = read_realization(&realization)?;
    let f: CliqueFamily = match family {
        Some(path) => docs::clique_family_from_json(&read(&path)?)?,
        None => clique::canonical_family(&host_from_dims(&r)?)?,
    };
    let verdict = bounds::check_counting_inequality(&r, &f, k)?;
    println!("{verdict}");
    match verdict {
        CountingVerdict::Pass => Ok(()),
        CountingVerdict::Fail { .. } => Err(Failure::Verdict),
    }
}

fn table(what: TableCommand) -> CmdResult {
    let TableCommand::Known { n, q } = what;
    match bounds::known_competition_number(n, q) {
        Some(k) => println!("{k}"),
        None => println!("unknown"),
    }
    Ok(())
}
