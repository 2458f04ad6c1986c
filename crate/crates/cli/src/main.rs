//! `d2graph`: command-line front end.
//!
//! Exit codes: 0 success, 1 counterexample or claim mismatch (the report is
//! still written), 2 usage or input error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use d2graph::audit::{audit_claims, audit_csv};
use d2graph::io::{census_csv, graph6, report_json, to_dot, write_edge_list, write_metrics_csv};
use d2graph::par::{default_workers, map_ordered};
use d2graph::search::{run_campaign, Campaign, CampaignConfig, ENUM_MAX_ORDER};
use d2graph::{
    d2_metrics, distance_power_graph, enumerate_connected, make_family, random_connected, scan_conjecture,
    spectrum_census, theorem_sweep, vertex_names, DistanceOracle, FamilyName, FamilySpec, Graph,
};

/// Graphs per parallel batch when streaming graph6 input.
const STREAM_BATCH: usize = 4096;

#[derive(Parser)]
#[command(name = "d2graph", version, about = "2-distance graphs, diameter bounds and small-graph campaigns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family.
    Family {
        /// path, cycle, complete, complete-bipartite, complement-path, house,
        /// g3, c5-pendant, corollary-graph or gadget-chain
        #[arg(long)]
        name: String,
        /// Vertex count for path, cycle, complete and complement-path.
        #[arg(long)]
        size: Option<usize>,
        /// Left side of complete-bipartite.
        #[arg(long)]
        m: Option<usize>,
        /// Right side of complete-bipartite.
        #[arg(long)]
        n: Option<usize>,
        /// Number of gadgets in gadget-chain.
        #[arg(long)]
        t: Option<usize>,
        /// Pendant count (0..=3) in gadget-chain.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
    /// Read graph6 lines on stdin, write graph6 of D_k for each.
    D2 {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Read graph6 lines on stdin, write one CSV metrics row per graph.
    Metrics,
    /// Audit the recorded diameter claims for the named families.
    Verify {
        #[arg(long, required = true)]
        paper_claims: bool,
    },
    /// List connected graphs on N vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Sample connected G(n, p) graphs, as graph6.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of graphs; graph j uses seed + j.
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Run a scan campaign and write its JSON report.
    Scan {
        #[arg(long, value_enum)]
        campaign: ScanKind,
        #[arg(long, required_unless_present = "input")]
        max_n: Option<usize>,
        /// graph6 file (`-` for stdin) replacing the built-in enumeration.
        #[arg(long, conflicts_with = "max_n")]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Oracle::Bfs)]
        oracle: Oracle,
    },
    /// Tally (diam, diam(D_2)) over connected graphs.
    Census {
        #[arg(long, required_unless_present = "input")]
        max_n: Option<usize>,
        /// Restrict the tally to one diameter.
        #[arg(long)]
        diam: Option<u32>,
        #[arg(long, conflicts_with = "max_n")]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long, value_enum, default_value_t = Oracle::Bfs)]
        oracle: Oracle,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    Conjecture31,
    TheoremSweep,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Bfs,
    Matrix,
}

impl From<Oracle> for DistanceOracle {
    fn from(o: Oracle) -> Self {
        match o {
            Oracle::Bfs => DistanceOracle::Bfs,
            Oracle::Matrix => DistanceOracle::MatrixPower,
        }
    }
}

fn family_spec(
    name: &str,
    size: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    t: Option<usize>,
    i: Option<usize>,
) -> Result<FamilySpec> {
    let family: FamilyName = name.parse()?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("family {family} needs --{flag}"));
    Ok(match family {
        FamilyName::Path => FamilySpec::Path { order: need(size, "size")? },
        FamilyName::Cycle => FamilySpec::Cycle { order: need(size, "size")? },
        FamilyName::Complete => FamilySpec::Complete { order: need(size, "size")? },
        FamilyName::ComplementPath => FamilySpec::ComplementPath { order: need(size, "size")? },
        FamilyName::CompleteBipartite => FamilySpec::CompleteBipartite { left: need(m, "m")?, right: need(n, "n")? },
        FamilyName::House => FamilySpec::House,
        FamilyName::G3 => FamilySpec::G3,
        FamilyName::C5Pendant => FamilySpec::C5Pendant,
        FamilyName::CorollaryGraph => FamilySpec::CorollaryGraph,
        FamilyName::GadgetChain => FamilySpec::GadgetChain { t: need(t, "t")?, i: need(i, "i")? },
    })
}

/// Reads graph6 records, one per line, skipping blank lines. Errors carry
/// 1-based line numbers.
fn read_graph6<R: BufRead>(input: R) -> impl Iterator<Item = Result<Graph>> {
    input.lines().enumerate().filter_map(|(idx, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(anyhow!(e).context(format!("line {}", idx + 1)))),
        };
        if line.trim().is_empty() {
            return None;
        }
        Some(graph6::parse(line.trim()).with_context(|| format!("line {}", idx + 1)))
    })
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    Ok(if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(File::open(path).with_context(|| format!("cannot open {path}"))?))
    })
}

/// Applies `f` to every graph on stdin in order-preserving parallel batches.
fn stream<T, F, W>(out: &mut W, f: F, mut emit: impl FnMut(&mut W, Vec<T>) -> Result<()>) -> Result<()>
where
    T: Send,
    F: Fn(&Graph) -> T + Sync + Send,
{
    let workers = default_workers();
    let stdin = io::stdin();
    let mut graphs = read_graph6(stdin.lock());
    loop {
        let batch: Vec<Graph> = graphs.by_ref().take(STREAM_BATCH).collect::<Result<_>>()?;
        if batch.is_empty() {
            return Ok(());
        }
        emit(out, map_ordered(&batch, workers, &f))?;
    }
}

fn config(oracle: Oracle) -> CampaignConfig {
    CampaignConfig { workers: default_workers(), oracle: oracle.into() }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut code = ExitCode::SUCCESS;
    match cli.command {
        Command::Family { name, size, m, n, t, i, format } => {
            let spec = family_spec(&name, size, m, n, t, i)?;
            let g = make_family(&spec)?;
            match format {
                Format::G6 => writeln!(out, "{}", graph6::encode(&g)?)?,
                Format::Edges => write!(out, "{}", write_edge_list(&g))?,
                Format::Dot => {
                    let labels = match spec.name() {
                        FamilyName::G3 | FamilyName::CorollaryGraph | FamilyName::GadgetChain => {
                            Some(vertex_names(&spec)?)
                        }
                        _ => None,
                    };
                    write!(out, "{}", to_dot(&g, labels.as_deref()))?
                }
            }
        }
        Command::D2 { k } => {
            stream(&mut out, |g| graph6::encode(&distance_power_graph(g, k)), |out, batch| {
                for line in batch {
                    writeln!(out, "{}", line?)?;
                }
                Ok(())
            })?;
        }
        Command::Metrics => {
            let mut header = true;
            stream(&mut out, d2_metrics, |out, batch| {
                write_metrics_csv(&mut *out, &batch, std::mem::take(&mut header))?;
                Ok(())
            })?;
            if header {
                write_metrics_csv(&mut out, &[], true)?;
            }
        }
        Command::Verify { .. } => {
            let checks = audit_claims();
            write!(out, "{}", audit_csv(&checks))?;
            if !checks.iter().all(|c| c.holds()) {
                code = ExitCode::from(1);
            }
        }
        Command::Enumerate { n } => {
            for g in enumerate_connected(n)? {
                writeln!(out, "{}", graph6::encode(&g)?)?;
            }
        }
        Command::Random { n, p, seed, count } => {
            for j in 0..count {
                let g = random_connected(n, p, seed.wrapping_add(j))?;
                writeln!(out, "{}", graph6::encode(&g)?)?;
            }
        }
        Command::Scan { campaign, max_n, input, oracle } => {
            let cfg = config(oracle);
            let report = match (input, campaign) {
                (Some(path), kind) => {
                    let graphs = read_graph6(open_input(&path)?).collect::<Result<Vec<_>>>()?;
                    let kind = match kind {
                        ScanKind::Conjecture31 => Campaign::DiameterGap,
                        ScanKind::TheoremSweep => Campaign::TheoremSweep,
                    };
                    run_campaign(kind, &graphs, None, &cfg)
                }
                (None, ScanKind::Conjecture31) => scan_conjecture(checked_max_n(max_n)?, &cfg)?,
                (None, ScanKind::TheoremSweep) => theorem_sweep(checked_max_n(max_n)?, &cfg)?,
            };
            write!(out, "{}", report_json(&report))?;
            if !report.findings.is_empty() {
                code = ExitCode::from(1);
            }
        }
        Command::Census { max_n, diam, input, format, oracle } => {
            let cfg = config(oracle);
            let report = match input {
                Some(path) => {
                    let graphs = read_graph6(open_input(&path)?).collect::<Result<Vec<_>>>()?;
                    run_campaign(Campaign::Census, &graphs, diam, &cfg)
                }
                None => spectrum_census(checked_max_n(max_n)?, diam, &cfg)?,
            };
            match format {
                ReportFormat::Json => write!(out, "{}", report_json(&report))?,
                ReportFormat::Csv => write!(out, "{}", census_csv(&report))?,
            }
        }
    }
    out.flush()?;
    Ok(code)
}

fn checked_max_n(max_n: Option<usize>) -> Result<usize> {
    match max_n {
        Some(n) if n > ENUM_MAX_ORDER => bail!("--max-n {n} exceeds the enumeration cap of {ENUM_MAX_ORDER}"),
        Some(n) => Ok(n),
        None => bail!("--max-n is required without --input"),
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
