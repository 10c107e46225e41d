//! `hookpoly`: hook immanantal polynomials, identity checks and deck
//! reconstruction from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 identity violated,
//! 3 inconsistent deck.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hookpoly::identities::{
    hook_poly_all_with, make_deck_with, resolve_sign_convention_with, theorem1_all_k, theorem2_all_k,
    verify_theorem2_with_kind,
};
use hookpoly::{
    hook_immanant, immanant_bruteforce, parse_graph, reconstruct_from_deck, verify_matrix_lemma, Deck, Error,
    ExactMatrix, Execution, GraphFormat, GraphSpec, HookLabel, IdentityId, IntPolynomial, MatrixKind, SignConvention,
    VerificationReport,
};
use serde::Serialize;

const LARGE_ORDER: usize = 18;

#[derive(Parser)]
#[command(name = "hookpoly", version, about = "Exact hook immanantal polynomials of graphs and digraphs")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Φ_k for one k or all k.
    Compute {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "A")]
        matrix: MatrixKind,
        #[arg(long, required_unless_present = "all_k")]
        k: Option<usize>,
        #[arg(long)]
        all_k: bool,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        out: Output,
    },
    /// Print the polynomial deck of a graph as JSON.
    Deck {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "A")]
        matrix: MatrixKind,
        #[arg(long)]
        k: usize,
    },
    /// Check one identity; exits 2 if any residual is nonzero.
    Verify {
        /// thm1, thm2, lem2.1, lem2.3, lem2.4, lem2.5, lem3.1, lem3.2 or lem3.3.
        #[arg(long)]
        identity: IdentityId,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        format: Option<GraphFormat>,
        /// Integer matrix as JSON, for the lemmas.
        #[arg(long)]
        matrix_file: Option<PathBuf>,
        #[arg(long, default_value = "A")]
        matrix: MatrixKind,
        /// Defaults to every k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "statement")]
        signs: SignConvention,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        out: Output,
    },
    /// Rebuild Φ_k from a deck file; exits 3 if the deck is inconsistent.
    Reconstruct {
        #[arg(long)]
        deck: PathBuf,
    },
    /// Compare the brute-force immanant with the recursive one.
    Oracle {
        #[arg(long)]
        matrix_file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Decide the rim-hook signs on every graph file in a directory.
    ResolveSigns {
        #[arg(long)]
        corpus: PathBuf,
    },
    /// Check an identity on every labeled (di)graph of order n.
    EnumerateCheck {
        #[arg(long)]
        n: usize,
        /// thm1 or thm2.
        #[arg(long)]
        identity: IdentityId,
        #[arg(long, default_value = "A")]
        matrix: MatrixKind,
        #[arg(long, default_value = "statement")]
        signs: SignConvention,
    },
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    graph: PathBuf,
    /// g6, d6, json or edges; inferred from the extension when omitted.
    #[arg(long)]
    format: Option<GraphFormat>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Serialize)]
struct PolyOut<'a> {
    k: usize,
    kind: MatrixKind,
    coeffs: Vec<String>,
    #[serde(skip)]
    poly: &'a IntPolynomial,
}

#[derive(Serialize)]
struct OracleOut {
    k: usize,
    bruteforce: String,
    recursive: String,
    agree: bool,
}

#[derive(Serialize)]
struct SweepOut {
    identity: IdentityId,
    n: usize,
    graphs: usize,
    checks: usize,
    failures: usize,
    first_failures: Vec<VerificationReport>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let inconsistent = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::InconsistentDeck(_))));
            ExitCode::from(if inconsistent { 3 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
    }
    let exec = Execution::default();
    match cli.command {
        Command::Compute { graph, matrix, k, all_k, out } => {
            let g = read_graph(&graph.graph, graph.format)?;
            warn_if_large(g.order());
            let all = hook_poly_all_with(&g, matrix, exec)?;
            let ks: Vec<usize> = if all_k { (1..=g.order()).collect() } else { vec![check_k(k.unwrap(), g.order())?] };
            let polys: Vec<PolyOut> = ks
                .iter()
                .map(|&k| PolyOut {
                    k,
                    kind: matrix,
                    coeffs: all[k - 1].coeffs().iter().map(ToString::to_string).collect(),
                    poly: &all[k - 1],
                })
                .collect();
            match out {
                Output::Json if all_k => print_json(&polys)?,
                Output::Json => print_json(&polys[0])?,
                Output::Text => {
                    for p in &polys {
                        println!("k={:<3} {}", p.k, p.poly);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Deck { graph, matrix, k } => {
            let g = read_graph(&graph.graph, graph.format)?;
            warn_if_large(g.order());
            print_json(&make_deck_with(&g, matrix, k, exec)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { identity, graph, format, matrix_file, matrix, k, signs, out } => {
            let reports = match identity {
                IdentityId::Theorem1 | IdentityId::Theorem2 => {
                    let path = graph.ok_or_else(|| anyhow!("--graph is required for {identity}"))?;
                    let g = read_graph(&path, format)?;
                    warn_if_large(g.order());
                    let mut all = graph_reports(&g, identity, matrix, signs, exec)?;
                    if let Some(k) = k {
                        check_k(k, g.order())?;
                        all = vec![all.swap_remove(k - 1)];
                    }
                    all
                }
                _ => {
                    let path = matrix_file.ok_or_else(|| anyhow!("--matrix-file is required for {identity}"))?;
                    let b = read_matrix(&path)?;
                    let ks: Vec<usize> = match (identity, k) {
                        (IdentityId::Lemma2_1, _) => vec![0],
                        (_, Some(k)) => vec![k],
                        (_, None) => (1..=b.order()).collect(),
                    };
                    ks.into_iter().map(|k| verify_matrix_lemma(identity, &b, k)).collect::<Result<_, _>>()?
                }
            };
            match out {
                Output::Json if reports.len() == 1 => print_json(&reports[0])?,
                Output::Json => print_json(&reports)?,
                Output::Text => reports.iter().for_each(print_report_line),
            }
            Ok(exit_for(&reports))
        }
        Command::Reconstruct { deck } => {
            let text = fs::read_to_string(&deck).with_context(|| format!("reading {}", deck.display()))?;
            let deck: Deck = serde_json::from_str(&text).context("parsing deck JSON")?;
            print_json(&reconstruct_from_deck(&deck)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { matrix_file, k } => {
            let b = read_matrix(&matrix_file)?;
            let brute = immanant_bruteforce(&b, HookLabel::for_k(check_k(k, b.order())?, b.order()))?;
            let recursive = hook_immanant(&b, k)?;
            let agree = brute == recursive;
            print_json(&OracleOut { k, bruteforce: brute.to_string(), recursive: recursive.to_string(), agree })?;
            Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::ResolveSigns { corpus } => {
            let graphs = read_corpus(&corpus)?;
            match resolve_sign_convention_with(&graphs, exec) {
                Ok(res) => {
                    print_json(&res)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::Indecisive(msg)) => {
                    eprintln!("error: {msg}");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::EnumerateCheck { n, identity, matrix, signs } => {
            if !matches!(identity, IdentityId::Theorem1 | IdentityId::Theorem2) {
                bail!("enumerate-check supports thm1 and thm2, not {identity}");
            }
            let directed = identity == IdentityId::Theorem1;
            let pairs = if directed { n * n.saturating_sub(1) } else { n * n.saturating_sub(1) / 2 };
            if pairs > 20 {
                eprintln!("warning: {} labeled graphs to check", 1u128 << pairs.min(127));
            }
            let graphs: Vec<GraphSpec> = GraphSpec::all_labeled(directed, n).collect();
            let per_graph =
                exec.map_slice(&graphs, |g| graph_reports(g, identity, matrix, signs, Execution::Sequential));
            let mut out =
                SweepOut { identity, n, graphs: graphs.len(), checks: 0, failures: 0, first_failures: Vec::new() };
            for reports in per_graph {
                for r in reports? {
                    out.checks += 1;
                    if !r.passed {
                        out.failures += 1;
                        if out.first_failures.len() < 10 {
                            out.first_failures.push(r);
                        }
                    }
                }
            }
            print_json(&out)?;
            Ok(if out.failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
    }
}

fn graph_reports(
    g: &GraphSpec,
    identity: IdentityId,
    kind: MatrixKind,
    signs: SignConvention,
    exec: Execution,
) -> hookpoly::Result<Vec<VerificationReport>> {
    match identity {
        IdentityId::Theorem1 => theorem1_all_k(g, kind, exec),
        _ if kind == MatrixKind::A => theorem2_all_k(g, signs, exec),
        _ => (1..=g.order()).map(|k| verify_theorem2_with_kind(g, kind, k, signs)).collect(),
    }
}

fn check_k(k: usize, n: usize) -> hookpoly::Result<usize> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(k)
}

fn exit_for(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn warn_if_large(n: usize) {
    if n > LARGE_ORDER {
        eprintln!("warning: n = {n} needs 2^{n} subsets per evaluation; expect a long run");
    }
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut stdout = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, value)?;
    writeln!(stdout)?;
    Ok(())
}

fn print_report_line(r: &VerificationReport) {
    let mut params = Vec::new();
    if let Some(k) = r.k {
        params.push(format!("k={k}"));
    }
    if let Some(kind) = r.kind {
        params.push(kind.to_string());
    }
    if let Some(signs) = r.signs {
        params.push(signs.to_string());
    }
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    println!("{:<7} {:<24} {verdict}  residual: {}", r.identity.as_str(), params.join(" "), r.residual_text);
    if let Some(printed) = &r.printed_form_residual {
        println!("{:<7} {:<24} printed form residual: {printed}", "", "");
    }
}

fn read_graph(path: &Path, format: Option<GraphFormat>) -> anyhow::Result<GraphSpec> {
    let format = match format {
        Some(f) => f,
        None => path
            .extension()
            .and_then(|e| e.to_str())
            .and_then(GraphFormat::from_extension)
            .ok_or_else(|| anyhow!("cannot infer the format of {}; pass --format", path.display()))?,
    };
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&bytes, format).with_context(|| format!("parsing {}", path.display()))
}

/// Accepts `{"n": .., "entries": [["1","2"],..]}` or a bare array of integer rows.
fn read_matrix(path: &Path) -> anyhow::Result<ExactMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if let Ok(m) = serde_json::from_str::<ExactMatrix>(&text) {
        return Ok(m);
    }
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(&text).with_context(|| format!("parsing matrix in {}", path.display()))?;
    Ok(ExactMatrix::from_rows(&rows)?)
}

fn read_corpus(dir: &Path) -> anyhow::Result<Vec<GraphSpec>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.sort();
    let mut graphs = Vec::new();
    for path in paths {
        let format = path.extension().and_then(|e| e.to_str()).and_then(GraphFormat::from_extension);
        if let (true, Some(format)) = (path.is_file(), format) {
            graphs.push(read_graph(&path, Some(format))?);
        }
    }
    if graphs.is_empty() {
        bail!("no graph files in {}", dir.display());
    }
    Ok(graphs)
}
