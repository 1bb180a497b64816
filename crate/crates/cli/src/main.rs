mod input;
mod output;

use clap::{Args, Parser, Subcommand};
use input::{read_graphs, InputArgs};
use output::{Sink, Table};
use reedcheck_core::audit::{audit_graph, audit_instance, replay, AuditContext, AuditFinding, AuditReport, Status};
use reedcheck_core::color::policy_colorings;
use reedcheck_core::corpus::{sweep, sweep_graphs, SweepConfig, SweepReport, MAX_ENUMERATION_ORDER};
use reedcheck_core::graph::graph_to_graph6;
use reedcheck_core::invariants::{invariant_bundle, InvariantBundle};
use reedcheck_core::patterns::{in_family, is_member, FamilySpec, FamilyViolation, NamedFamily, Pattern};
use serde::Serialize;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "reedcheck",
    version,
    about = "Exhaustive checks of χ ≤ ⌈(Δ+ω+1)/2⌉ on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, Δ, ω, χ, α, the Reed bound and slack per graph.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Test family membership, with a forbidden-subgraph witness if any.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the bound over every graph up to --n-max vertices, or over a
    /// graph6 file.
    Sweep {
        /// Largest order to enumerate; with --source, larger graphs are skipped.
        #[arg(long)]
        n_max: Option<usize>,
        /// graph6 file to sweep instead of internal enumeration ("-" for stdin).
        #[arg(long)]
        source: Option<PathBuf>,
        /// Also audit each member's proof statements.
        #[arg(long)]
        audit: bool,
        #[arg(long, conflicts_with = "lenient")]
        strict: bool,
        #[arg(long)]
        lenient: bool,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "REED_WORKERS", default_value_t = 0)]
        workers: usize,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Audit the proof statements for every vertex and policy colouring.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// Write every finding as an NDJSON certificate to this file.
        #[arg(long)]
        certificates: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-run certificates written by `audit --certificates`.
    Replay {
        /// Certificate file ("-" for stdin).
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the built-in forbidden patterns.
    Patterns {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Named family: p5-flagc, p5-c4, 3k1, p3k1 or 2k2-c4 (default p5-flagc).
    #[arg(long, conflicts_with = "forbid")]
    family: Option<NamedFamily>,
    /// Forbidden induced subgraph as graph6; repeat or comma-separate.
    #[arg(long, value_delimiter = ',')]
    forbid: Vec<String>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<FamilySpec, Failure> {
        if self.forbid.is_empty() {
            Ok(self.family.unwrap_or(NamedFamily::P5FlagC).spec())
        } else {
            FamilySpec::from_graph6(&self.forbid).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Human-readable tables instead of NDJSON.
    #[arg(long)]
    pretty: bool,
}

impl OutputArgs {
    fn sink(&self) -> Result<Sink, Failure> {
        Sink::open(self.out.as_deref(), self.pretty)
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Input(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Outcome of a command that ran to completion.
#[derive(PartialEq, Eq)]
enum Verdict {
    Clean,
    Violations,
}

#[derive(Serialize)]
struct InvariantLine {
    graph6: String,
    #[serde(flatten)]
    bundle: InvariantBundle,
}

fn cmd_invariants(input: &InputArgs, output: &OutputArgs) -> Result<Verdict, Failure> {
    let graphs = read_graphs(input)?;
    let mut sink = output.sink()?;
    let mut table = Table::new(&["graph6", "n", "m", "Δ", "ω", "χ", "α", "reed", "slack"]);
    for (_, g) in &graphs.graphs {
        let line = InvariantLine {
            graph6: graph_to_graph6(g).expect("decoded graphs fit"),
            bundle: invariant_bundle(g),
        };
        if sink.pretty() {
            let b = &line.bundle;
            table.row([
                line.graph6.clone(),
                b.n.to_string(),
                b.m.to_string(),
                b.delta.to_string(),
                b.omega.to_string(),
                b.chi.to_string(),
                b.alpha.to_string(),
                b.reed_bound.to_string(),
                b.slack.to_string(),
            ]);
        } else {
            sink.json(&line)?;
        }
    }
    sink.table(&table)?;
    Ok(Verdict::Clean)
}

#[derive(Serialize)]
struct ClassifyLine {
    graph6: String,
    family: String,
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<FamilyViolation>,
}

fn cmd_classify(input: &InputArgs, family: &FamilyArgs, output: &OutputArgs) -> Result<Verdict, Failure> {
    let spec = family.resolve()?;
    let graphs = read_graphs(input)?;
    let mut sink = output.sink()?;
    let mut table = Table::new(&["graph6", "family", "member", "witness"]);
    for (_, g) in &graphs.graphs {
        let witness = in_family(g, &spec).err();
        let line = ClassifyLine {
            graph6: graph_to_graph6(g).expect("decoded graphs fit"),
            family: spec.name.clone(),
            member: witness.is_none(),
            witness,
        };
        if sink.pretty() {
            let w = line
                .witness
                .as_ref()
                .map_or(String::new(), |w| format!("{} at {:?}", w.pattern, w.vertices));
            table.row([line.graph6.clone(), line.family.clone(), line.member.to_string(), w]);
        } else {
            sink.json(&line)?;
        }
    }
    sink.table(&table)?;
    Ok(Verdict::Clean)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    n_max: Option<usize>,
    source: Option<&PathBuf>,
    audit: bool,
    lenient: bool,
    workers: usize,
    family: &FamilyArgs,
    output: &OutputArgs,
) -> Result<Verdict, Failure> {
    let spec = family.resolve()?;
    let report = match source {
        None => {
            let n_max = n_max.ok_or_else(|| Failure::Usage("sweep needs --n-max or --source".into()))?;
            if n_max > MAX_ENUMERATION_ORDER {
                return Err(Failure::Usage(format!(
                    "--n-max {n_max} exceeds the internal enumeration limit of {MAX_ENUMERATION_ORDER}; pass --source with a graph6 file"
                )));
            }
            sweep(&spec, &SweepConfig { n_max, audit, workers }).map_err(|e| Failure::Input(e.to_string()))?
        }
        Some(path) => {
            let input = InputArgs::from_source(path.clone(), lenient);
            let batch = read_graphs(&input)?;
            let graphs: Vec<_> = batch
                .graphs
                .into_iter()
                .map(|(_, g)| g)
                .filter(|g| n_max.is_none_or(|n| g.order() <= n))
                .collect();
            let mut r = sweep_graphs(&spec, &graphs, audit, workers, &format!("file:{}", path.display()))
                .map_err(|e| Failure::Input(e.to_string()))?;
            r.skipped_lines = batch.skipped.len();
            r
        }
    };
    let mut sink = output.sink()?;
    if sink.pretty() {
        sink.text(&sweep_summary(&report))?;
    } else {
        sink.json(&report)?;
    }
    let audit_violations = report.audit.as_ref().map_or(0, |a| a.counters.total_violated());
    Ok(if report.reed_violations.is_empty() && audit_violations == 0 {
        Verdict::Clean
    } else {
        Verdict::Violations
    })
}

fn sweep_summary(r: &SweepReport) -> String {
    let mut t = Table::new(&["n", "examined", "members", "tight", "violations"]);
    for o in &r.per_order {
        t.row([o.n, o.examined, o.members, o.tight, o.violations].map(|x| x.to_string()));
    }
    let mut s = format!("family {} {:?}, source {}\n", r.family, r.forbidden, r.source);
    s.push_str(&t.render());
    s.push_str(&format!(
        "total: {} examined, {} members, {} tight, {} violations, {} ms\n",
        r.examined,
        r.members,
        r.tight,
        r.reed_violations.len(),
        r.wall_time_ms
    ));
    if let Some(a) = &r.audit {
        s.push_str(&format!(
            "audit: {} graphs, {} instances, {} violated findings, {} gate passers\n",
            a.graphs,
            a.instances,
            a.counters.total_violated(),
            a.gate_passers.len()
        ));
    }
    s
}

#[derive(Serialize)]
struct AuditLine {
    family: String,
    member: bool,
    #[serde(flatten)]
    report: AuditReport,
}

fn cmd_audit(
    input: &InputArgs,
    family: &FamilyArgs,
    certificates: Option<&PathBuf>,
    output: &OutputArgs,
) -> Result<Verdict, Failure> {
    let spec = family.resolve()?;
    let graphs = read_graphs(input)?;
    let mut sink = output.sink()?;
    let mut certs = certificates.map(|p| Sink::open(Some(p), false)).transpose()?;
    let mut table = Table::new(&[
        "graph6",
        "member",
        "colorings",
        "instances",
        "holds",
        "violated",
        "gate everywhere",
    ]);
    let mut verdict = Verdict::Clean;
    for (_, g) in &graphs.graphs {
        let report = audit_graph(g).map_err(|e| Failure::Input(e.to_string()))?;
        let member = is_member(g, &spec);
        if member && !report.violations.is_empty() {
            verdict = Verdict::Violations;
        }
        if let Some(certs) = certs.as_mut() {
            let ctx = AuditContext::new(g.clone()).map_err(|e| Failure::Input(e.to_string()))?;
            for c in &policy_colorings(g).colorings {
                for u in 0..g.order() {
                    for f in audit_instance(&ctx, c, u).map_err(|e| Failure::Input(e.to_string()))? {
                        certs.json(&f)?;
                    }
                }
            }
        }
        if sink.pretty() {
            let holds: usize = report.counters.0.iter().map(|s| s.counts.holds).sum();
            table.row([
                report.graph6.clone(),
                member.to_string(),
                report.colorings.to_string(),
                report.instances.to_string(),
                holds.to_string(),
                report.counters.total_violated().to_string(),
                report.gate_passed_everywhere.to_string(),
            ]);
        } else {
            sink.json(&AuditLine {
                family: spec.name.clone(),
                member,
                report,
            })?;
        }
    }
    sink.table(&table)?;
    if let Some(certs) = certs {
        certs.finish()?;
    }
    Ok(verdict)
}

#[derive(Serialize)]
struct ReplayLine {
    line: usize,
    statement: reedcheck_core::audit::Statement,
    graph6: String,
    u: usize,
    recorded: Status,
    replayed: Status,
    matches: bool,
}

fn cmd_replay(file: &PathBuf, output: &OutputArgs) -> Result<Verdict, Failure> {
    let reader: Box<dyn BufRead> = if file.as_os_str() == "-" {
        Box::new(BufReader::new(std::io::stdin()))
    } else {
        let f = std::fs::File::open(file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
        Box::new(BufReader::new(f))
    };
    let mut sink = output.sink()?;
    let mut table = Table::new(&["line", "statement", "graph6", "u", "recorded", "replayed"]);
    let mut verdict = Verdict::Clean;
    for (i, text) in reader.lines().enumerate() {
        let text = text?;
        if text.trim().is_empty() {
            continue;
        }
        let line = i + 1;
        let cert: AuditFinding =
            serde_json::from_str(&text).map_err(|e| Failure::Input(format!("line {line}: not a certificate: {e}")))?;
        let replayed = replay(&cert).map_err(|e| Failure::Input(format!("line {line}: {e}")))?;
        let out = ReplayLine {
            line,
            statement: cert.statement,
            graph6: cert.graph6.clone(),
            u: cert.u,
            recorded: cert.status,
            replayed,
            matches: replayed == cert.status,
        };
        if !out.matches || replayed == Status::Violated {
            verdict = Verdict::Violations;
        }
        if sink.pretty() {
            table.row([
                line.to_string(),
                serde_plain(&out.statement),
                out.graph6.clone(),
                out.u.to_string(),
                serde_plain(&out.recorded),
                serde_plain(&out.replayed),
            ]);
        } else {
            sink.json(&out)?;
        }
    }
    sink.table(&table)?;
    Ok(verdict)
}

fn serde_plain<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

#[derive(Serialize)]
struct PatternLine {
    name: &'static str,
    graph6: String,
    n: usize,
    m: usize,
}

fn cmd_patterns(output: &OutputArgs) -> Result<Verdict, Failure> {
    let mut sink = output.sink()?;
    let mut table = Table::new(&["name", "graph6", "n", "m"]);
    for p in Pattern::ALL {
        let g = p.graph();
        let line = PatternLine {
            name: p.name(),
            graph6: graph_to_graph6(&g).expect("small"),
            n: g.order(),
            m: g.edge_count(),
        };
        if sink.pretty() {
            table.row([
                line.name.to_string(),
                line.graph6.clone(),
                line.n.to_string(),
                line.m.to_string(),
            ]);
        } else {
            sink.json(&line)?;
        }
    }
    sink.table(&table)?;
    Ok(Verdict::Clean)
}

fn run(cli: Cli) -> Result<Verdict, Failure> {
    match &cli.command {
        Command::Invariants { input, output } => cmd_invariants(input, output),
        Command::Classify { input, family, output } => cmd_classify(input, family, output),
        Command::Sweep {
            n_max,
            source,
            audit,
            strict: _,
            lenient,
            workers,
            family,
            output,
        } => cmd_sweep(*n_max, source.as_ref(), *audit, *lenient, *workers, family, output),
        Command::Audit {
            input,
            family,
            certificates,
            output,
        } => cmd_audit(input, family, certificates.as_ref(), output),
        Command::Replay { file, output } => cmd_replay(file, output),
        Command::Patterns { output } => cmd_patterns(output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Verdict::Clean) => ExitCode::SUCCESS,
        Ok(Verdict::Violations) => ExitCode::from(1),
        Err(Failure::Usage(msg)) | Err(Failure::Input(msg)) => {
            eprintln!("reedcheck: {msg}");
            ExitCode::from(2)
        }
    }
}
