//! Per-instance checks of the steps of the Reed-bound argument for
//! `{P5, FlagC}`-free graphs.
//!
//! An instance is a graph `G`, a proper colouring `C` and an apex `u`.
//! Every check reports `hypotheses-unmet` (naming the hypothesis that
//! failed), `holds` or `violated`; the degree gate reports `gate-failed`
//! instead of `violated`, since failing it is the normal outcome for any
//! graph that is not a minimal counterexample.

use crate::color::{
    find_bicolor_path4, is_proper, policy_colorings, sequence_from, unique_color_neighbors, Coloring, ColoringError,
    ColoringSet, SequenceDecomposition, UniqueColorDecomposition,
};
use crate::graph::{graph_from_graph6, graph_to_graph6, Graph, Graph6Error, VertexSet};
use crate::invariants::{chromatic_number, clique_number, max_degree, reed_bound};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Statement {
    /// `deg u ≥ |R| + 2(⌈(Δ+ω+1)/2⌉ − |R|)` and `|R| ≥ ω + 1`.
    #[serde(rename = "I")]
    GateI,
    /// `|T| ≥ 2`, or `T = ∅` with `⟨R⟩ ⊇ K_{ω+1}`.
    S1,
    /// Non-adjacent `t, t′ ∈ T` joined by a 4-vertex alternating path each
    /// have a unique neighbour in the other's colour.
    S2,
    /// `t` with non-neighbours `t′, t″ ∈ T`: the unique `color(t)`-neighbours
    /// of `t′` and `t″` coincide.
    S3,
    /// `⟨S_1′ ∪ T′⟩` is complete.
    S4,
    /// Every vertex of `W` is adjacent to every `S_l′` vertex.
    #[serde(rename = "II")]
    ConstructionII,
    /// `⟨W ∪ ⋃ S_l′⟩` is complete and carries every colour of `R`.
    #[serde(rename = "CLAIM")]
    Claim,
    /// `⟨W ∪ ⋃ S_l′⟩ ⊇ K_{ω+1}`.
    #[serde(rename = "FINAL")]
    Final,
}

impl Statement {
    pub const ALL: [Statement; 8] = [
        Statement::GateI,
        Statement::S1,
        Statement::S2,
        Statement::S3,
        Statement::S4,
        Statement::ConstructionII,
        Statement::Claim,
        Statement::Final,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    HypothesesUnmet,
    Holds,
    Violated,
    GateFailed,
}

/// The hypothesis whose failure made a finding vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    #[serde(rename = "gate-I")]
    GateI,
    BicolorPath,
    UniqueVertices,
    #[serde(rename = "nonempty-T-prime")]
    NonEmptyTPrime,
    Claim,
}

/// One check outcome with everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub statement: Statement,
    pub status: Status,
    pub graph6: String,
    pub u: usize,
    pub colors: Vec<usize>,
    pub tuple: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<Hypothesis>,
    /// Completeness sub-check evaluated regardless of hypotheses.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub informational: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("colouring uses {used} colours but χ = {chi}")]
    NonOptimal { used: usize, chi: usize },
    #[error("colouring is not proper")]
    Improper,
    #[error("vertex {u} out of range for n = {n}")]
    VertexOutOfRange { u: usize, n: usize },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("graph has {0} vertices; audits support at most 62")]
    TooLarge(usize),
    #[error("certificate tuple {0:?} does not name a checked configuration")]
    NoSuchConfiguration(Vec<usize>),
}

/// Graph-level quantities shared by every instance of one graph.
#[derive(Debug, Clone)]
pub struct AuditContext {
    pub graph: Graph,
    pub graph6: String,
    pub delta: usize,
    pub omega: usize,
    pub chi: usize,
    pub reed: usize,
}

impl AuditContext {
    pub fn new(graph: Graph) -> Result<Self, AuditError> {
        let graph6 = graph_to_graph6(&graph).map_err(|e| AuditError::TooLarge(e.0))?;
        let delta = max_degree(&graph);
        let omega = clique_number(&graph);
        Ok(AuditContext {
            graph6,
            delta,
            omega,
            chi: chromatic_number(&graph),
            reed: reed_bound(delta, omega),
            graph,
        })
    }

    fn check_instance(&self, c: &Coloring, u: usize) -> Result<(), AuditError> {
        let n = self.graph.order();
        if c.len() != n {
            return Err(ColoringError::LengthMismatch {
                expected: n,
                found: c.len(),
            }
            .into());
        }
        if u >= n {
            return Err(AuditError::VertexOutOfRange { u, n });
        }
        if !is_proper(&self.graph, c) {
            return Err(AuditError::Improper);
        }
        Ok(())
    }

    fn check_optimal(&self, c: &Coloring, u: usize) -> Result<(), AuditError> {
        self.check_instance(c, u)?;
        if c.color_count() != self.chi {
            return Err(AuditError::NonOptimal {
                used: c.color_count(),
                chi: self.chi,
            });
        }
        Ok(())
    }

    fn finding(&self, statement: Statement, c: &Coloring, u: usize) -> AuditFinding {
        AuditFinding {
            statement,
            status: Status::Holds,
            graph6: self.graph6.clone(),
            u,
            colors: c.colors().to_vec(),
            tuple: Vec::new(),
            hypothesis: None,
            informational: None,
        }
    }

    fn gate(&self, d: &UniqueColorDecomposition) -> bool {
        let r = d.r.len() as i64;
        let deg = self.graph.degree(d.u) as i64;
        deg >= r + 2 * (self.reed as i64 - r) && d.r.len() > self.omega
    }
}

fn verdict(f: &mut AuditFinding, unmet: Option<Hypothesis>, conclusion: impl FnOnce() -> bool) {
    f.status = match unmet {
        Some(h) => {
            f.hypothesis = Some(h);
            Status::HypothesesUnmet
        }
        None if conclusion() => Status::Holds,
        None => Status::Violated,
    };
}

/// Everything derived from one `(G, C, u)`.
struct Instance<'a> {
    ctx: &'a AuditContext,
    c: &'a Coloring,
    u: usize,
    d: UniqueColorDecomposition,
    seq: SequenceDecomposition,
    gate: bool,
}

impl<'a> Instance<'a> {
    fn new(ctx: &'a AuditContext, c: &'a Coloring, u: usize) -> Self {
        let d = unique_color_neighbors(&ctx.graph, c, u);
        let seq = sequence_from(&ctx.graph, c, &d);
        let gate = ctx.gate(&d);
        Instance {
            ctx,
            c,
            u,
            d,
            seq,
            gate,
        }
    }

    fn g(&self) -> &Graph {
        &self.ctx.graph
    }

    fn gate_unmet(&self) -> Option<Hypothesis> {
        (!self.gate).then_some(Hypothesis::GateI)
    }

    fn gate_i(&self) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::GateI, self.c, self.u);
        f.tuple = self.d.r.to_vec();
        f.status = if self.gate { Status::Holds } else { Status::GateFailed };
        f
    }

    fn statement_1(&self) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::S1, self.c, self.u);
        f.tuple = self.d.t.to_vec();
        let (t, r) = (self.d.t, self.d.r);
        verdict(&mut f, self.gate_unmet(), || {
            t.len() >= 2 || (t.is_empty() && self.g().is_clique(r) && r.len() > self.ctx.omega)
        });
        f
    }

    /// Neighbours of `v` coloured `color`.
    fn colored_neighbors(&self, v: usize, color: usize) -> VertexSet {
        self.g().neighbors(v).intersection(self.c.class(color))
    }

    fn statement_2_pair(&self, t: usize, tp: usize) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::S2, self.c, self.u);
        match find_bicolor_path4(self.g(), self.c, t, tp) {
            None => {
                f.tuple = vec![t, tp];
                f.status = Status::HypothesesUnmet;
                f.hypothesis = Some(Hypothesis::BicolorPath);
            }
            Some(p) => {
                f.tuple = p.vertices.to_vec();
                let (j, i) = p.colors;
                verdict(&mut f, None, || {
                    self.colored_neighbors(t, i).len() == 1 && self.colored_neighbors(tp, j).len() == 1
                });
            }
        }
        f
    }

    fn non_adjacent_t_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let t = self.d.t;
        t.iter()
            .flat_map(move |a| t.difference(self.g().closed_neighbors(a)).iter().map(move |b| (a, b)))
    }

    fn statement_2(&self) -> Vec<AuditFinding> {
        self.non_adjacent_t_pairs()
            .map(|(a, b)| self.statement_2_pair(a, b))
            .collect()
    }

    fn statement_3_triple(&self, t: usize, t1: usize, t2: usize) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::S3, self.c, self.u);
        f.tuple = vec![t, t1, t2];
        let first = self.statement_2_pair(t, t1);
        let second = self.statement_2_pair(t, t2);
        let unmet = if first.hypothesis.is_some() || second.hypothesis.is_some() {
            Some(Hypothesis::BicolorPath)
        } else if first.status != Status::Holds || second.status != Status::Holds {
            Some(Hypothesis::UniqueVertices)
        } else {
            None
        };
        let i = self.c.color(t);
        if unmet.is_none() {
            let a = self.colored_neighbors(t1, i).first().expect("unique vertex exists");
            let b = self.colored_neighbors(t2, i).first().expect("unique vertex exists");
            f.tuple.extend([a, b]);
        }
        let tuple = f.tuple.clone();
        verdict(&mut f, unmet, || tuple[3] == tuple[4]);
        f
    }

    fn statement_3(&self) -> Vec<AuditFinding> {
        let t = self.d.t;
        let mut out = Vec::new();
        for a in t {
            let far = t.difference(self.g().closed_neighbors(a));
            for b in far {
                for c in far.iter().filter(|&c| c > b) {
                    out.push(self.statement_3_triple(a, b, c));
                }
            }
        }
        out
    }

    fn statement_4(&self) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::S4, self.c, self.u);
        let t_prime = self.seq.levels[0].s_prime;
        let set = t_prime.union(self.seq.level_one_substitutes());
        f.tuple = set.to_vec();
        let complete = self.g().is_clique(set);
        f.informational = Some(complete);
        let unmet = self
            .gate_unmet()
            .or((t_prime.is_empty()).then_some(Hypothesis::NonEmptyTPrime));
        verdict(&mut f, unmet, || complete);
        f
    }

    fn construction_ii(&self) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::ConstructionII, self.c, self.u);
        let subs = self.seq.substitutes();
        f.tuple = self.seq.w.to_vec();
        let joined = self.seq.w.iter().all(|x| subs.is_subset(self.g().neighbors(x)));
        f.informational = Some(joined);
        verdict(&mut f, self.gate_unmet(), || joined);
        f
    }

    fn claim_set(&self) -> VertexSet {
        self.seq.w.union(self.seq.substitutes())
    }

    fn claim_parts(&self) -> (bool, bool) {
        let set = self.claim_set();
        let complete = self.g().is_clique(set);
        let r_colors = self.c.palette_of(self.d.r);
        let covered = r_colors & !self.c.palette_of(set) == 0;
        (complete, covered)
    }

    fn claim(&self) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::Claim, self.c, self.u);
        f.tuple = self.claim_set().to_vec();
        let (complete, covered) = self.claim_parts();
        f.informational = Some(complete);
        verdict(&mut f, self.gate_unmet(), || complete && covered);
        f
    }

    fn final_step(&self) -> AuditFinding {
        let mut f = self.ctx.finding(Statement::Final, self.c, self.u);
        let set = self.claim_set();
        f.tuple = set.to_vec();
        let unmet = self.gate_unmet().or_else(|| {
            let (complete, covered) = self.claim_parts();
            (!(complete && covered)).then_some(Hypothesis::Claim)
        });
        verdict(&mut f, unmet, || {
            clique_number(&self.g().induced_subgraph(set)) > self.ctx.omega
        });
        f
    }

    fn all(&self) -> Vec<AuditFinding> {
        let mut out = vec![self.gate_i(), self.statement_1()];
        out.extend(self.statement_2());
        out.extend(self.statement_3());
        out.extend([
            self.statement_4(),
            self.construction_ii(),
            self.claim(),
            self.final_step(),
        ]);
        out
    }
}

pub fn check_gate_i(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<AuditFinding, AuditError> {
    ctx.check_optimal(c, u)?;
    Ok(Instance::new(ctx, c, u).gate_i())
}

pub fn check_statement_1(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<AuditFinding, AuditError> {
    ctx.check_optimal(c, u)?;
    Ok(Instance::new(ctx, c, u).statement_1())
}

/// One finding per ordered pair of non-adjacent `t, t′ ∈ T`.
pub fn check_statement_2(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<Vec<AuditFinding>, AuditError> {
    ctx.check_instance(c, u)?;
    Ok(Instance::new(ctx, c, u).statement_2())
}

/// One finding per `t ∈ T` and unordered pair `t′ < t″` of its
/// non-neighbours in `T`. When the hypotheses hold the tuple is
/// `[t, t′, t″, A, B]` with `A`, `B` the colour-of-`t` neighbours of `t′`, `t″`.
pub fn check_statement_3(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<Vec<AuditFinding>, AuditError> {
    ctx.check_instance(c, u)?;
    Ok(Instance::new(ctx, c, u).statement_3())
}

pub fn check_statement_4(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<AuditFinding, AuditError> {
    ctx.check_optimal(c, u)?;
    Ok(Instance::new(ctx, c, u).statement_4())
}

pub fn check_construction_ii(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<AuditFinding, AuditError> {
    ctx.check_optimal(c, u)?;
    Ok(Instance::new(ctx, c, u).construction_ii())
}

pub fn check_claim(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<AuditFinding, AuditError> {
    ctx.check_optimal(c, u)?;
    Ok(Instance::new(ctx, c, u).claim())
}

pub fn check_final(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<AuditFinding, AuditError> {
    ctx.check_optimal(c, u)?;
    Ok(Instance::new(ctx, c, u).final_step())
}

/// Every finding for one `(C, u)`, in statement order.
pub fn audit_instance(ctx: &AuditContext, c: &Coloring, u: usize) -> Result<Vec<AuditFinding>, AuditError> {
    ctx.check_optimal(c, u)?;
    Ok(Instance::new(ctx, c, u).all())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub findings: usize,
    pub hypotheses_unmet: usize,
    pub holds: usize,
    pub violated: usize,
    pub gate_failed: usize,
    pub informational_true: usize,
    pub informational_false: usize,
}

impl StatusCounts {
    fn record(&mut self, f: &AuditFinding) {
        self.findings += 1;
        match f.status {
            Status::HypothesesUnmet => self.hypotheses_unmet += 1,
            Status::Holds => self.holds += 1,
            Status::Violated => self.violated += 1,
            Status::GateFailed => self.gate_failed += 1,
        }
        match f.informational {
            Some(true) => self.informational_true += 1,
            Some(false) => self.informational_false += 1,
            None => {}
        }
    }

    pub fn merge(&mut self, o: &StatusCounts) {
        self.findings += o.findings;
        self.hypotheses_unmet += o.hypotheses_unmet;
        self.holds += o.holds;
        self.violated += o.violated;
        self.gate_failed += o.gate_failed;
        self.informational_true += o.informational_true;
        self.informational_false += o.informational_false;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementCounts {
    pub statement: Statement,
    #[serde(flatten)]
    pub counts: StatusCounts,
}

/// Counters for every statement, in [`Statement::ALL`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AuditCounters(pub Vec<StatementCounts>);

impl Default for AuditCounters {
    fn default() -> Self {
        AuditCounters(
            Statement::ALL
                .iter()
                .map(|&statement| StatementCounts {
                    statement,
                    counts: StatusCounts::default(),
                })
                .collect(),
        )
    }
}

impl AuditCounters {
    pub fn get(&self, s: Statement) -> &StatusCounts {
        &self.0[Statement::ALL.iter().position(|&x| x == s).expect("known statement")].counts
    }

    fn get_mut(&mut self, s: Statement) -> &mut StatusCounts {
        &mut self.0[Statement::ALL.iter().position(|&x| x == s).expect("known statement")].counts
    }

    pub fn record(&mut self, f: &AuditFinding) {
        self.get_mut(f.statement).record(f);
    }

    pub fn merge(&mut self, other: &AuditCounters) {
        for s in Statement::ALL {
            let o = *other.get(s);
            self.get_mut(s).merge(&o);
        }
    }

    pub fn total_violated(&self) -> usize {
        self.0.iter().map(|s| s.counts.violated).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub graph6: String,
    pub n: usize,
    pub colorings: usize,
    pub colorings_truncated: bool,
    /// `(colouring, apex)` pairs examined.
    pub instances: usize,
    pub counters: AuditCounters,
    /// True when `n ≥ 1` and every vertex passes gate I under at least one
    /// examined colouring.
    pub gate_passed_everywhere: bool,
    pub violations: Vec<AuditFinding>,
}

/// Audits every apex under the colouring policy of
/// [`policy_colorings`].
pub fn audit_graph(g: &Graph) -> Result<AuditReport, AuditError> {
    let colorings = policy_colorings(g);
    audit_graph_with(g, &colorings)
}

/// Audits every apex under each supplied colouring, which must all be
/// optimal.
pub fn audit_graph_with(g: &Graph, colorings: &ColoringSet) -> Result<AuditReport, AuditError> {
    let ctx = AuditContext::new(g.clone())?;
    let n = g.order();
    let mut counters = AuditCounters::default();
    let mut violations = Vec::new();
    let mut gate_ok = vec![false; n];
    let mut instances = 0;
    for c in &colorings.colorings {
        for u in 0..n {
            instances += 1;
            for f in audit_instance(&ctx, c, u)? {
                if f.statement == Statement::GateI && f.status == Status::Holds {
                    gate_ok[u] = true;
                }
                counters.record(&f);
                if f.status == Status::Violated {
                    violations.push(f);
                }
            }
        }
    }
    Ok(AuditReport {
        graph6: ctx.graph6.clone(),
        n,
        colorings: colorings.colorings.len(),
        colorings_truncated: colorings.truncated,
        instances,
        counters,
        gate_passed_everywhere: n > 0 && gate_ok.iter().all(|&b| b),
        violations,
    })
}

/// Re-evaluates a certificate and returns the status it now produces.
pub fn replay(cert: &AuditFinding) -> Result<Status, AuditError> {
    let g = graph_from_graph6(&cert.graph6)?;
    let c = Coloring::new(cert.colors.clone())?;
    let ctx = AuditContext::new(g)?;
    let u = cert.u;
    let single = |f: AuditFinding| Ok(f.status);
    let pick = |fs: Vec<AuditFinding>, key: usize| {
        let prefix = cert
            .tuple
            .get(..key)
            .ok_or_else(|| AuditError::NoSuchConfiguration(cert.tuple.clone()))?;
        fs.into_iter()
            .find(|f| f.tuple.get(..key) == Some(prefix))
            .map(|f| f.status)
            .ok_or_else(|| AuditError::NoSuchConfiguration(cert.tuple.clone()))
    };
    match cert.statement {
        Statement::GateI => single(check_gate_i(&ctx, &c, u)?),
        Statement::S1 => single(check_statement_1(&ctx, &c, u)?),
        Statement::S2 => pick(check_statement_2(&ctx, &c, u)?, 2),
        Statement::S3 => pick(check_statement_3(&ctx, &c, u)?, 3),
        Statement::S4 => single(check_statement_4(&ctx, &c, u)?),
        Statement::ConstructionII => single(check_construction_ii(&ctx, &c, u)?),
        Statement::Claim => single(check_claim(&ctx, &c, u)?),
        Statement::Final => single(check_final(&ctx, &c, u)?),
    }
}
