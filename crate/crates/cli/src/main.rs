use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evenlab::even_factor::{check_yan_kano_condition, has_even_factor, FactorStatus, SearchCaps};
use evenlab::graph::{build_family, extremal, FamilySpec, Graph};
use evenlab::graph6::write_graph6;
use evenlab::harness::{
    lemma_merge_sweep, soundness_sweep, subgraph_monotonicity_sweep, tightness_report,
    HarnessError, SweepOptions, SweepReport,
};
use evenlab::identities::identity_grid;
use evenlab::io::{read_graph, write_edge_list};
use evenlab::spectral::{spectral_radius, SpectralError, DEFAULT_MAX_ITER, DEFAULT_TOL};
use evenlab::thresholds::{edge_threshold, spectral_threshold, verdict_with_delta, Which};

#[derive(Parser)]
#[command(
    name = "evenlab",
    version,
    about = "Even-factor thresholds: graphs, oracles, identities and sweeps"
)]
struct Cli {
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a constructed graph.
    #[command(subcommand)]
    Gen(Gen),
    /// Decide even-factor existence or the odd-component condition.
    #[command(subcommand)]
    Check(Check),
    /// Spectral radius by power iteration.
    Spectral {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Size and spectral thresholds.
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        edges: bool,
        #[arg(long)]
        rho: bool,
    },
    /// What the threshold theorems say about a graph.
    Verdict {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = WhichArg::Both)]
        which: WhichArg,
        /// Instantiate the theorems at this minimum degree instead of the graph's.
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Check the proof identities or the partition-merging inequalities
    #[command(subcommand)]
    Verify(Verify),
    /// Seeded sampling campaigns written as CSV
    #[command(subcommand)]
    Sweep(Sweep),
    /// Reports on the extremal graph
    #[command(subcommand)]
    Report(Report),
}

#[derive(Subcommand)]
enum Gen {
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// `K_s` joined to disjoint cliques of the given sizes.
    Family {
        #[arg(long)]
        s: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Check {
    EvenFactor {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = SearchCaps::default().max_dim)]
        max_dim: usize,
        #[arg(long, default_value_t = SearchCaps::default().max_candidates)]
        max_candidates: u64,
    },
    Condition {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Proof identities and sign claims as JSON lines.
    Identities {
        #[arg(long, default_value_t = 8)]
        delta_max: usize,
        #[arg(long, default_value_t = 20)]
        n_extra: usize,
    },
    /// Partition-merging inequalities for size and spectral radius.
    Lemmas {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_s: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        p: Vec<usize>,
        #[command(flatten)]
        out: SweepOutput,
    },
}

#[derive(Subcommand)]
enum Sweep {
    /// Random graphs above a threshold, checked by the exact oracle.
    Soundness {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = WhichArg::Edges)]
        which: WhichArg,
        #[arg(long, default_value_t = SearchCaps::default().max_dim)]
        max_dim: usize,
        #[command(flatten)]
        out: SweepOutput,
    },
    /// Spectral radius under single-edge additions.
    Monotonicity {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[command(flatten)]
        out: SweepOutput,
    },
}

#[derive(Subcommand)]
enum Report {
    /// Equality and sharpness checks at the extremal graph.
    Tightness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphInput {
    #[arg(long, conflicts_with = "file")]
    graph6: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct SweepOutput {
    #[arg(long)]
    out: Option<PathBuf>,
    /// Fill the elapsed_ms column.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Edges,
    Spectral,
    Both,
}

impl From<WhichArg> for Which {
    fn from(w: WhichArg) -> Self {
        match w {
            WhichArg::Edges => Which::Edges,
            WhichArg::Spectral => Which::Spectral,
            WhichArg::Both => Which::Both,
        }
    }
}

struct Failure {
    kind: &'static str,
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            kind: "usage",
            code: 2,
            message: message.to_string(),
        }
    }

    fn parse(message: impl ToString) -> Self {
        Failure {
            kind: "parse",
            code: 3,
            message: message.to_string(),
        }
    }

    fn cap(message: impl ToString) -> Self {
        Failure {
            kind: "cap",
            code: 4,
            message: message.to_string(),
        }
    }

    fn verification(message: impl ToString) -> Self {
        Failure {
            kind: "verification",
            code: 1,
            message: message.to_string(),
        }
    }

    fn io(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure {
                kind: "pipe",
                code: BROKEN_PIPE,
                message: String::new(),
            };
        }
        Failure {
            kind: "io",
            code: 3,
            message: e.to_string(),
        }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        Failure::usage(e)
    }
}

type Outcome = Result<(), Failure>;

/// Reader closed stdout early; exit quietly with the shell's SIGPIPE status.
const BROKEN_PIPE: u8 = 141;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let text = e.to_string();
            let line = text
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("error[usage]: {line}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = io::stdout().lock();
    match run(cli, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.code == BROKEN_PIPE => ExitCode::from(f.code),
        Err(f) => {
            let _ = stdout.flush();
            eprintln!("error[{}]: {}", f.kind, f.message.replace('\n', " "));
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let opts = SweepOptions {
        jobs: cli.jobs,
        ..SweepOptions::default()
    };
    match cli.command {
        Command::Gen(Gen::Extremal { n, delta, format }) => {
            let g = extremal(n, delta).map_err(Failure::usage)?;
            print_graph(out, &g, format)
        }
        Command::Gen(Gen::Family { s, parts, format }) => {
            let spec = FamilySpec::new(s, parts).map_err(Failure::usage)?;
            print_graph(out, &build_family(&spec), format)
        }
        Command::Check(Check::EvenFactor {
            input,
            max_dim,
            max_candidates,
        }) => {
            let g = load(&input)?;
            let result = has_even_factor(
                &g,
                SearchCaps {
                    max_dim,
                    max_candidates,
                },
            );
            emit_json(out, &result)?;
            if result.status == FactorStatus::Unknown {
                return Err(Failure::cap(format!(
                    "search cap reached after {} nodes",
                    result.search_cost
                )));
            }
            Ok(())
        }
        Command::Check(Check::Condition { input }) => {
            let g = load(&input)?;
            let report = check_yan_kano_condition(&g).map_err(Failure::cap)?;
            emit_json(out, &report)
        }
        Command::Spectral {
            input,
            tol,
            max_iter,
        } => {
            let g = load(&input)?;
            match spectral_radius(&g, tol, max_iter) {
                Ok(r) => emit_json(out, &r),
                Err(e @ SpectralError::NoConvergence { .. }) => Err(Failure::cap(e)),
                Err(e) => Err(Failure::usage(e)),
            }
        }
        Command::Threshold {
            n,
            delta,
            edges,
            rho,
        } => threshold(out, n, delta, edges, rho),
        Command::Verdict {
            input,
            which,
            delta,
        } => {
            let g = load(&input)?;
            emit_json(out, &verdict_with_delta(&g, which.into(), delta))
        }
        Command::Verify(Verify::Identities { delta_max, n_extra }) => {
            if delta_max < 2 {
                return Err(Failure::usage("--delta-max must be at least 2"));
            }
            let checks = identity_grid(delta_max, n_extra);
            for c in &checks {
                emit_json(out, c)?;
            }
            let failed = checks.iter().filter(|c| c.failed()).count();
            if failed > 0 {
                return Err(Failure::verification(format!(
                    "{failed} of {} identity checks failed",
                    checks.len()
                )));
            }
            Ok(())
        }
        Command::Verify(Verify::Lemmas {
            max_n,
            max_s,
            p,
            out: dest,
        }) => {
            let report = lemma_merge_sweep(
                max_n,
                max_s,
                &p,
                &SweepOptions {
                    timings: dest.timings,
                    ..opts
                },
            )?;
            finish_sweep(out, &report, &dest)
        }
        Command::Sweep(Sweep::Soundness {
            n,
            delta,
            samples,
            seed,
            which,
            max_dim,
            out: dest,
        }) => {
            let caps = SearchCaps {
                max_dim,
                ..SearchCaps::default()
            };
            let sweep_opts = SweepOptions {
                timings: dest.timings,
                caps,
                ..opts
            };
            let report = soundness_sweep(&n, delta, samples, seed, which.into(), &sweep_opts)?;
            finish_sweep(out, &report, &dest)?;
            if report.unknown > 0 {
                return Err(Failure::cap(format!(
                    "{} oracle runs hit a cap",
                    report.unknown
                )));
            }
            Ok(())
        }
        Command::Sweep(Sweep::Monotonicity {
            samples,
            seed,
            out: dest,
        }) => {
            let report = subgraph_monotonicity_sweep(
                samples,
                seed,
                &SweepOptions {
                    timings: dest.timings,
                    ..opts
                },
            )?;
            finish_sweep(out, &report, &dest)
        }
        Command::Report(Report::Tightness {
            n,
            delta,
            out: dest,
        }) => {
            let report = tightness_report(n, delta, &opts)?;
            let text = serde_json::to_string_pretty(&report).expect("report serialises");
            match dest {
                Some(path) => fs::write(path, text + "\n").map_err(Failure::io)?,
                None => writeln!(out, "{text}").map_err(Failure::io)?,
            }
            if !report.pass {
                return Err(Failure::verification("tightness checks failed"));
            }
            if report.sweep.unknown > 0 {
                return Err(Failure::cap(format!(
                    "{} oracle runs hit a cap",
                    report.sweep.unknown
                )));
            }
            Ok(())
        }
    }
}

fn threshold(out: &mut impl Write, n: usize, delta: usize, edges: bool, rho: bool) -> Outcome {
    match (edges, rho) {
        (true, false) => {
            let t = edge_threshold(n, delta).map_err(Failure::usage)?;
            writeln!(out, "{t}").map_err(Failure::io)
        }
        (false, true) => {
            let t = spectral_threshold(n, delta).map_err(Failure::usage)?;
            writeln!(out, "{t:.12}").map_err(Failure::io)
        }
        _ => {
            let e = edge_threshold(n, delta).map_err(Failure::usage)?;
            let r = spectral_threshold(n, delta).map_err(Failure::usage)?;
            emit_json(
                out,
                &serde_json::json!({ "edge_threshold": e, "spectral_threshold": r }),
            )
        }
    }
}

fn load(input: &GraphInput) -> Result<Graph, Failure> {
    let text = match (&input.graph6, &input.file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => fs::read_to_string(path).map_err(Failure::io)?,
        (None, None) => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(Failure::io)?;
            buf
        }
    };
    read_graph(&text).map_err(Failure::parse)
}

fn print_graph(out: &mut impl Write, g: &Graph, format: Format) -> Outcome {
    let text = match format {
        Format::Graph6 => format!("{}\n", write_graph6(g)),
        Format::Edgelist => write_edge_list(g),
    };
    out.write_all(text.as_bytes()).map_err(Failure::io)
}

fn emit_json<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Outcome {
    let line = serde_json::to_string(value).expect("value serialises");
    writeln!(out, "{line}").map_err(Failure::io)
}

fn finish_sweep(out: &mut impl Write, report: &SweepReport, dest: &SweepOutput) -> Outcome {
    let written = match &dest.out {
        Some(path) => fs::File::create(path).map_err(Failure::io).and_then(|f| {
            report
                .write_csv(io::BufWriter::new(f))
                .map_err(|e| Failure::io(io::Error::other(e)))
        }),
        None => report
            .write_csv(&mut *out)
            .map_err(|e| Failure::io(io::Error::other(e))),
    };
    written?;
    if let Some(first) = report.counterexamples.first() {
        return Err(Failure::verification(format!(
            "{} counterexamples in {}; first at row {}: {}",
            report.counterexamples.len(),
            report.campaign,
            first.row_id,
            first.reason
        )));
    }
    Ok(())
}
