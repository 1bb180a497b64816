//! Exhaustive small-graph generation, graph6 stream input and family sweeps.

use crate::audit::{audit_graph, AuditCounters, AuditError, AuditFinding};
use crate::graph::{canonical_pair, graph_from_graph6, graph_to_graph6, CanonicalCode, Graph, Graph6Error, VertexSet};
use crate::invariants::{invariant_bundle, InvariantBundle};
use crate::patterns::{is_member, FamilySpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::BufRead;
use std::time::Instant;
use thiserror::Error;

/// Largest order generated internally.
pub const MAX_ENUMERATION_ORDER: usize = 9;

/// Number of unlabelled graphs on `n` vertices for `n = 0..=9` (OEIS A000088).
pub const PUBLISHED_GRAPH_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("internal enumeration supports n ≤ {MAX_ENUMERATION_ORDER}, got {0}; supply a graph6 stream instead")]
    UnsupportedOrder(usize),
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error("audit failed: {0}")]
    Audit(#[from] AuditError),
    #[error("could not build worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

fn extend_by_one(prev: &[Graph]) -> Vec<Graph> {
    let Some(first) = prev.first() else {
        return Vec::new();
    };
    let m = first.order();
    let classes = prev
        .par_iter()
        .fold(BTreeMap::<CanonicalCode, Graph>::new, |mut acc, g| {
            for mask in 0u64..1u64 << m {
                let (code, canon) = canonical_pair(&g.with_vertex(VertexSet(mask)));
                acc.entry(code).or_insert(canon);
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });
    classes.into_values().collect()
}

/// One canonical representative per isomorphism class for every order
/// `0..=n_max`; entry `n` is sorted by canonical code.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>, CorpusError> {
    if n_max > MAX_ENUMERATION_ORDER {
        return Err(CorpusError::UnsupportedOrder(n_max));
    }
    let mut levels = vec![vec![Graph::empty(0)]];
    for _ in 0..n_max {
        let next = extend_by_one(levels.last().expect("non-empty"));
        levels.push(next);
    }
    Ok(levels)
}

/// Every `n`-vertex graph up to isomorphism, in canonical-code order. Each
/// class of order `n` is reached by adding a vertex to a representative of
/// order `n − 1` in all `2^(n−1)` ways; duplicates collapse on their code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, CorpusError> {
    Ok(enumerate_up_to(n)?.pop().expect("level n exists"))
}

#[derive(Debug, Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("read error after line {line}: {source}")]
    Io { line: usize, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StreamPolicy {
    /// Abort on the first bad line.
    #[default]
    Strict,
    /// Skip bad lines and record them.
    Lenient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedLine {
    pub line: usize,
    pub error: String,
}

/// Decoded graphs, each with its 1-based line number.
#[derive(Debug, Clone, Default)]
pub struct GraphBatch {
    pub graphs: Vec<(usize, Graph)>,
    pub skipped: Vec<SkippedLine>,
}

/// Lazily decodes graph6 lines. Lines starting with `>>` that are only a
/// header and blank lines are skipped; a `>>graph6<<` prefix on a data line
/// is accepted.
pub struct Graph6Lines<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R) -> Self {
        Graph6Lines {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<(usize, Graph), StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => self.line += 1,
                Err(source) => {
                    return Some(Err(StreamError::Io {
                        line: self.line,
                        source,
                    }))
                }
            }
            let text = self.buf.trim_end_matches(['\n', '\r']);
            if text.is_empty() || text == ">>graph6<<" {
                continue;
            }
            if text.starts_with(">>") && !text.starts_with(">>graph6<<") {
                continue;
            }
            let line = self.line;
            return Some(
                graph_from_graph6(text)
                    .map(|g| (line, g))
                    .map_err(|source| StreamError::Parse { line, source }),
            );
        }
    }
}

pub fn read_graph6_stream<R: BufRead>(reader: R, policy: StreamPolicy) -> Result<GraphBatch, StreamError> {
    let mut batch = GraphBatch::default();
    for item in Graph6Lines::new(reader) {
        match item {
            Ok(g) => batch.graphs.push(g),
            Err(e @ StreamError::Io { .. }) => return Err(e),
            Err(e) if policy == StreamPolicy::Strict => return Err(e),
            Err(e) => {
                let line = match &e {
                    StreamError::Parse { line, .. } | StreamError::Io { line, .. } => *line,
                };
                batch.skipped.push(SkippedLine {
                    line,
                    error: e.to_string(),
                });
            }
        }
    }
    Ok(batch)
}

/// Cap on tight-graph exemplars and audit certificates kept in a report.
pub const EXEMPLAR_CAP: usize = 20;
pub const CERTIFICATE_CAP: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n_max: usize,
    pub audit: bool,
    /// Worker threads; 0 picks the number of available cores.
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReedViolation {
    pub graph6: String,
    pub invariants: InvariantBundle,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub n: usize,
    pub examined: usize,
    pub members: usize,
    pub tight: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub graphs: usize,
    pub instances: usize,
    pub truncated_colorings: usize,
    pub counters: AuditCounters,
    /// Members in which every vertex passes gate I under some colouring.
    pub gate_passers: Vec<String>,
    /// Violated findings, first [`CERTIFICATE_CAP`] in corpus order.
    pub violations: Vec<AuditFinding>,
}

impl AuditSummary {
    fn merge(&mut self, o: AuditSummary) {
        self.graphs += o.graphs;
        self.instances += o.instances;
        self.truncated_colorings += o.truncated_colorings;
        self.counters.merge(&o.counters);
        self.gate_passers.extend(o.gate_passers);
        let room = CERTIFICATE_CAP.saturating_sub(self.violations.len());
        self.violations.extend(o.violations.into_iter().take(room));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub forbidden: Vec<String>,
    pub source: String,
    pub examined: usize,
    pub members: usize,
    pub per_order: Vec<OrderSummary>,
    pub reed_violations: Vec<ReedViolation>,
    pub tight: usize,
    /// First tight members (slack 0) in corpus order.
    pub tight_exemplars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditSummary>,
    pub skipped_lines: usize,
    pub wall_time_ms: u64,
}

impl SweepReport {
    /// The report with timing removed, for comparing runs.
    pub fn without_timing(&self) -> SweepReport {
        SweepReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}

#[derive(Default)]
struct Partial {
    per_order: BTreeMap<usize, OrderSummary>,
    reed_violations: Vec<ReedViolation>,
    tight_exemplars: Vec<String>,
    audit: Option<AuditSummary>,
}

impl Partial {
    fn merge(&mut self, o: Partial) {
        for (n, s) in o.per_order {
            let e = self.per_order.entry(n).or_insert(OrderSummary {
                n,
                ..Default::default()
            });
            e.examined += s.examined;
            e.members += s.members;
            e.tight += s.tight;
            e.violations += s.violations;
        }
        self.reed_violations.extend(o.reed_violations);
        let room = EXEMPLAR_CAP.saturating_sub(self.tight_exemplars.len());
        self.tight_exemplars.extend(o.tight_exemplars.into_iter().take(room));
        match (&mut self.audit, o.audit) {
            (Some(a), Some(b)) => a.merge(b),
            (None, Some(b)) => self.audit = Some(b),
            _ => {}
        }
    }
}

fn examine(family: &FamilySpec, g: &Graph, audit: bool) -> Result<Partial, AuditError> {
    let n = g.order();
    let mut p = Partial::default();
    let mut summary = OrderSummary {
        n,
        examined: 1,
        ..Default::default()
    };
    if audit {
        p.audit = Some(AuditSummary::default());
    }
    if is_member(g, family) {
        summary.members = 1;
        let bundle = invariant_bundle(g);
        let g6 = graph_to_graph6(g).map_err(|e| AuditError::TooLarge(e.0))?;
        if bundle.slack < 0 {
            summary.violations = 1;
            p.reed_violations.push(ReedViolation {
                graph6: g6.clone(),
                invariants: bundle,
            });
        } else if bundle.slack == 0 {
            summary.tight = 1;
            p.tight_exemplars.push(g6.clone());
        }
        if audit {
            let r = audit_graph(g)?;
            let a = p.audit.as_mut().expect("initialised above");
            a.graphs = 1;
            a.instances = r.instances;
            a.truncated_colorings = usize::from(r.colorings_truncated);
            a.counters = r.counters;
            if r.gate_passed_everywhere {
                a.gate_passers.push(g6);
            }
            a.violations = r.violations.into_iter().take(CERTIFICATE_CAP).collect();
        }
    }
    p.per_order.insert(n, summary);
    Ok(p)
}

const CHUNK: usize = 64;

/// Sweeps an explicit list of graphs. Work is split into contiguous chunks
/// and merged in input order, so the report does not depend on `workers`.
pub fn sweep_graphs(
    family: &FamilySpec,
    graphs: &[Graph],
    audit: bool,
    workers: usize,
    source: &str,
) -> Result<SweepReport, CorpusError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
    let partials: Vec<Result<Partial, AuditError>> = pool.install(|| {
        graphs
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut acc = Partial::default();
                for g in chunk {
                    acc.merge(examine(family, g, audit)?);
                }
                Ok(acc)
            })
            .collect()
    });
    let mut total = Partial {
        audit: audit.then(AuditSummary::default),
        ..Default::default()
    };
    for p in partials {
        total.merge(p?);
    }
    let per_order: Vec<OrderSummary> = total.per_order.into_values().collect();
    Ok(SweepReport {
        family: family.name.clone(),
        forbidden: family.pattern_names(),
        source: source.to_string(),
        examined: per_order.iter().map(|s| s.examined).sum(),
        members: per_order.iter().map(|s| s.members).sum(),
        tight: per_order.iter().map(|s| s.tight).sum(),
        per_order,
        reed_violations: total.reed_violations,
        tight_exemplars: total.tight_exemplars,
        audit: total.audit,
        skipped_lines: 0,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Sweeps every graph of order `0..=n_max` from internal enumeration.
pub fn sweep(family: &FamilySpec, cfg: &SweepConfig) -> Result<SweepReport, CorpusError> {
    let start = Instant::now();
    let levels = enumerate_up_to(cfg.n_max)?;
    let graphs: Vec<Graph> = levels.into_iter().flatten().collect();
    let mut report = sweep_graphs(
        family,
        &graphs,
        cfg.audit,
        cfg.workers,
        &format!("enumeration:0..={}", cfg.n_max),
    )?;
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::NamedFamily;
    use std::io::Cursor;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(0).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(5).unwrap().len(), 34);
        assert!(matches!(enumerate_graphs(10), Err(CorpusError::UnsupportedOrder(10))));
    }

    #[test]
    fn enumeration_is_sorted_and_canonical() {
        let gs = enumerate_graphs(5).unwrap();
        let codes: Vec<_> = gs.iter().map(|g| canonical_pair(g).0).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
        for g in &gs {
            assert_eq!(&canonical_pair(g).1, g);
        }
    }

    #[test]
    fn stream_strict_and_lenient() {
        let text = ">>graph6<<\nA_\nbad\n\nDhc\n";
        let e = read_graph6_stream(Cursor::new(text), StreamPolicy::Strict).unwrap_err();
        assert!(matches!(e, StreamError::Parse { line: 3, .. }));
        assert!(e.to_string().starts_with("line 3"));
        let b = read_graph6_stream(Cursor::new(text), StreamPolicy::Lenient).unwrap();
        assert_eq!(b.graphs.len(), 2);
        assert_eq!(b.graphs[1], (5, Graph::cycle(5)));
        assert_eq!(b.skipped.len(), 1);
        assert_eq!(b.skipped[0].line, 3);
    }

    #[test]
    fn stream_three_lines() {
        let b = read_graph6_stream(Cursor::new("A_\n@\n?"), StreamPolicy::Strict).unwrap();
        assert_eq!(b.graphs.len(), 3);
        assert_eq!(b.graphs[2].1, Graph::empty(0));
    }

    #[test]
    fn stream_second_line_malformed() {
        let text = "A_\nA_x\nDhc\n";
        let b = read_graph6_stream(Cursor::new(text), StreamPolicy::Lenient).unwrap();
        assert_eq!((b.graphs.len(), b.skipped.len()), (2, 1));
        let e = read_graph6_stream(Cursor::new(text), StreamPolicy::Strict).unwrap_err();
        assert!(matches!(e, StreamError::Parse { line: 2, .. }));
    }

    #[test]
    fn small_sweep_is_clean_and_worker_independent() {
        let f = NamedFamily::P5FlagC.spec();
        let one = sweep(
            &f,
            &SweepConfig {
                n_max: 6,
                audit: true,
                workers: 1,
            },
        )
        .unwrap();
        let many = sweep(
            &f,
            &SweepConfig {
                n_max: 6,
                audit: true,
                workers: 3,
            },
        )
        .unwrap();
        assert_eq!(one.without_timing(), many.without_timing());
        assert_eq!(one.examined, 1 + 1 + 2 + 4 + 11 + 34 + 156);
        assert!(one.reed_violations.is_empty());
        assert!(one.members < one.examined);
        let a = one.audit.as_ref().unwrap();
        assert_eq!(a.graphs, one.members);
        assert_eq!(a.counters.total_violated(), 0);
    }

    #[test]
    fn exemplars_capped() {
        let r = sweep(
            &FamilySpec::unrestricted(),
            &SweepConfig {
                n_max: 7,
                audit: false,
                workers: 2,
            },
        )
        .unwrap();
        assert_eq!(r.members, r.examined);
        assert!(r.tight > EXEMPLAR_CAP);
        assert_eq!(r.tight_exemplars.len(), EXEMPLAR_CAP);
        assert!(r.audit.is_none());
    }
}
