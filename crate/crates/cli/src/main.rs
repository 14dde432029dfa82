use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cubestar::{
    contains_double_star, edge_count, exhaustive_turan, export_dimacs, extremal_pair,
    is_balanced_free_general, min_edge_dominating, normalize_min_degree, turan_formula,
    verify_certificate, CubeSubgraph, DeletionCertificate, DoubleStarPattern, EmbeddingWitness,
    RepairStepKind, SubgraphDocument, CLAIMED_FREE_KEY, CLAIMED_OPTIMAL_KEY,
};

/// Extremal double-star-free subgraphs of hypercubes: construction,
/// freeness checking, exact search, and certificate files.
#[derive(Parser)]
#[command(name = "cubestar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the maximum edge count of a subgraph of Q_n avoiding the
    /// balanced double star S_{n-1,n-1}.
    Formula {
        #[arg(long)]
        n: usize,
    },
    /// Build an extremal free subgraph of Q_n and write it, with its
    /// certificate claims, as a JSON document.
    Construct {
        #[arg(long)]
        n: usize,
        /// Emit the partner graph of the pair instead (same edge count,
        /// disjoint full-degree set).
        #[arg(long)]
        prime: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a subgraph document for double stars and audit any
    /// certificate claims it carries.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        /// Leaf counts "k,l" of the pattern to search for; defaults to
        /// the balanced S_{n-1,n-1}.
        #[arg(long, value_parser = parse_pattern)]
        pattern: Option<DoubleStarPattern>,
        /// After a successful balanced check, raise the minimum degree to
        /// n-1 and print the repaired document on stdout.
        #[arg(long)]
        repair: bool,
    },
    /// Recompute the extremal edge count by search and optionally write
    /// the deletion certificate.
    Solve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mode: Mode,
        /// Node budget for branch-and-bound; on exhaustion the best set
        /// found is reported with an incomplete-proof flag.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Convert a subgraph document to an external graph format on stdout.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Enumerate deletion sets by increasing size (n <= 3).
    Exhaustive,
    /// Branch-and-bound over minimum edge dominating sets (3 <= n <= 5).
    Bnb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
}

fn parse_pattern(s: &str) -> Result<DoubleStarPattern, String> {
    let (k, l) = s
        .split_once(',')
        .ok_or("expected two comma-separated leaf counts, e.g. 2,2")?;
    let k = k.trim().parse::<usize>().map_err(|_| format!("invalid leaf count {k:?}"))?;
    let l = l.trim().parse::<usize>().map_err(|_| format!("invalid leaf count {l:?}"))?;
    DoubleStarPattern::new(k, l).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

const REFUTED: u8 = 1;

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Formula { n } => {
            println!("{}", turan_formula(n).map_err(|e| e.to_string())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { n, prime, out } => construct(n, prime, &out),
        Command::Check { input, pattern, repair } => check(&input, pattern, repair),
        Command::Solve { n, mode, budget, cert } => solve(n, mode, budget, cert.as_deref()),
        Command::Export { input, format } => {
            let g = load_subgraph(&input)?.1;
            match format {
                Format::Dimacs => print!("{}", export_dimacs(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_subgraph(path: &std::path::Path) -> Result<(SubgraphDocument, CubeSubgraph), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let doc = SubgraphDocument::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let g = doc.to_subgraph().map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((doc, g))
}

fn construct(n: usize, prime: bool, out: &std::path::Path) -> Result<ExitCode, String> {
    let pair = extremal_pair(n).map_err(|e| e.to_string())?;
    let g = if prime { pair.g_prime } else { pair.g };
    let cert = DeletionCertificate::from_subgraph(&g);
    let doc = SubgraphDocument::from_certificate(&cert).map_err(|e| e.to_string())?;
    fs::write(out, doc.to_json()).map_err(|e| format!("{}: {e}", out.display()))?;
    println!(
        "Q_{n} subgraph with {} edges ({} deleted) written to {}",
        g.edge_count(),
        cert.deleted.len(),
        out.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn check(
    input: &std::path::Path,
    pattern: Option<DoubleStarPattern>,
    repair: bool,
) -> Result<ExitCode, String> {
    let (doc, g) = load_subgraph(input)?;
    let n = g.n();
    if let (Some(p), true) = (pattern, repair) {
        if n < 2 || (p.k(), p.l()) != (n - 1, n - 1) {
            return Err("--repair applies only to the balanced pattern".to_owned());
        }
    }

    let witness = match pattern {
        Some(p) => contains_double_star(&g, p),
        None if is_balanced_free_general(&g) => None,
        // The n=1 balanced pattern is a bare edge; a nonempty Q_1 subgraph
        // contains it without a representable witness.
        None => DoubleStarPattern::balanced(n)
            .ok()
            .and_then(|p| contains_double_star(&g, p)),
    };
    let free = match pattern {
        Some(_) => witness.is_none(),
        None => is_balanced_free_general(&g),
    };
    let pattern_text = match pattern {
        Some(p) => format!("S_{{{},{}}}", p.k(), p.l()),
        None => format!("S_{{{0},{0}}}", n.saturating_sub(1)),
    };

    // With --repair, stdout carries only the repaired document; all
    // human-readable lines move to stderr.
    let say = |line: String| {
        if repair {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    };

    let total = edge_count(n).map_err(|e| e.to_string())?;
    if free {
        say(format!(
            "{}: free of {pattern_text} ({} of {total} edges present)",
            input.display(),
            g.edge_count()
        ));
    } else {
        say(format!("{}: contains {pattern_text}", input.display()));
        if let Some(w) = &witness {
            say(describe_witness(w, n));
        }
    }

    let mut refuted = !free;
    let has_claims = doc.metadata.contains_key(CLAIMED_FREE_KEY)
        || doc.metadata.contains_key(CLAIMED_OPTIMAL_KEY);
    if pattern.is_none() && has_claims {
        let cert = doc.to_certificate().map_err(|e| format!("{}: {e}", input.display()))?;
        let verified = verify_certificate(&cert);
        say(format!(
            "certificate (claimed_free={}, claimed_optimal={}): {}",
            cert.claimed_free,
            cert.claimed_optimal,
            if verified { "verified" } else { "refuted" }
        ));
        refuted = refuted || !verified;
    }

    if refuted {
        return Ok(ExitCode::from(REFUTED));
    }
    if repair {
        let (repaired, report) = normalize_min_degree(&g).map_err(|e| e.to_string())?;
        let swaps = report
            .steps
            .iter()
            .filter(|s| s.kind == RepairStepKind::Swap)
            .count();
        eprintln!(
            "repair: {} steps ({} swaps, {} additions), edges {} -> {}, min degree {} -> {}",
            report.steps.len(),
            swaps,
            report.edge_delta,
            g.edge_count(),
            repaired.edge_count(),
            g.min_degree(),
            repaired.min_degree()
        );
        let cert = DeletionCertificate::from_subgraph(&repaired);
        let doc = SubgraphDocument::from_certificate(&cert).map_err(|e| e.to_string())?;
        print!("{}", doc.to_json());
    }
    Ok(ExitCode::SUCCESS)
}

fn describe_witness(w: &EmbeddingWitness, n: usize) -> String {
    let list = |vs: &[cubestar::CubeVertex]| {
        vs.iter().map(|v| v.bitstring(n)).collect::<Vec<_>>().join(" ")
    };
    let mut out = String::new();
    let _ = write!(
        out,
        "  centers {} {}\n  leaves at {}: {}\n  leaves at {}: {}",
        w.center_u.bitstring(n),
        w.center_v.bitstring(n),
        w.center_u.bitstring(n),
        list(&w.leaves_u),
        w.center_v.bitstring(n),
        list(&w.leaves_v)
    );
    out
}

fn solve(
    n: usize,
    mode: Mode,
    budget: Option<u64>,
    cert_path: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let result = match mode {
        Mode::Exhaustive => {
            if budget.is_some() {
                return Err("--budget applies only to --mode bnb".to_owned());
            }
            let p = DoubleStarPattern::balanced(n).map_err(|e| e.to_string())?;
            exhaustive_turan(n, p).map_err(|e| e.to_string())?
        }
        Mode::Bnb => min_edge_dominating(n, budget).map_err(|e| e.to_string())?,
    };

    let total = edge_count(n).map_err(|e| e.to_string())?;
    let deleted = result.deletions.deleted.len();
    if result.proof_complete {
        println!(
            "optimum: {} edges ({deleted} of {total} deleted)",
            result.optimum_edges
        );
    } else {
        println!(
            "best found: {} edges ({deleted} of {total} deleted); proof incomplete, node budget exhausted",
            result.optimum_edges
        );
    }
    println!("nodes explored: {}", result.nodes_explored);

    if let Some(path) = cert_path {
        let doc = SubgraphDocument::from_certificate(&result.deletions).map_err(|e| e.to_string())?;
        fs::write(path, doc.to_json()).map_err(|e| format!("{}: {e}", path.display()))?;
        println!("certificate written to {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}
