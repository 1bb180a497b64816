//! Forbidden induced patterns, hereditary families and induced-subgraph
//! search.

use crate::graph::{graph_from_graph6, graph_to_graph6, Graph, Graph6Error, VertexSet};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Built-in pattern graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    P5,
    Flag,
    /// Complement of `Flag`: a 4-cycle `0-1-2-3` with a pendant `4` at `0`
    /// (the banner).
    FlagC,
    C4,
    C5,
    TwoK2,
    ThreeK1,
    P3uK1,
}

impl Pattern {
    pub const ALL: [Pattern; 8] = [
        Pattern::P5,
        Pattern::Flag,
        Pattern::FlagC,
        Pattern::C4,
        Pattern::C5,
        Pattern::TwoK2,
        Pattern::ThreeK1,
        Pattern::P3uK1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P5 => "P5",
            Pattern::Flag => "Flag",
            Pattern::FlagC => "FlagC",
            Pattern::C4 => "C4",
            Pattern::C5 => "C5",
            Pattern::TwoK2 => "2K2",
            Pattern::ThreeK1 => "3K1",
            Pattern::P3uK1 => "P3uK1",
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Pattern::P5 => Graph::path(5),
            Pattern::FlagC => banner(),
            Pattern::Flag => banner().complement(),
            Pattern::C4 => Graph::cycle(4),
            Pattern::C5 => Graph::cycle(5),
            Pattern::TwoK2 => Graph::from_edges(4, [(0, 1), (2, 3)]),
            Pattern::ThreeK1 => Graph::empty(3),
            Pattern::P3uK1 => Graph::from_edges(4, [(0, 1), (1, 2)]),
        }
    }
}

fn banner() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown pattern {name:?}; valid names: {}", valid_pattern_names())]
pub struct UnknownPattern {
    pub name: String,
}

fn valid_pattern_names() -> String {
    Pattern::ALL.map(Pattern::name).join(", ")
}

impl FromStr for Pattern {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, UnknownPattern> {
        let found = match s {
            "TwoK2" => Some(Pattern::TwoK2),
            "ThreeK1" => Some(Pattern::ThreeK1),
            "Flag^C" | "FlagComplement" => Some(Pattern::FlagC),
            _ => Pattern::ALL.into_iter().find(|p| p.name() == s),
        };
        found.ok_or_else(|| UnknownPattern { name: s.to_string() })
    }
}

pub fn builtin_pattern(name: &str) -> Result<Graph, UnknownPattern> {
    name.parse::<Pattern>().map(Pattern::graph)
}

/// Ordered host vertices; pattern vertex `i` maps to `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedWitness {
    pub vertices: Vec<usize>,
}

/// Lexicographically least injective map of `pattern` into `host` that
/// preserves edges and non-edges, if any.
pub fn has_induced(host: &Graph, pattern: &Graph) -> Option<InducedWitness> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    let hn = host.order();
    let host_deg: Vec<usize> = (0..hn).map(|v| host.degree(v)).collect();
    let pat_deg: Vec<usize> = (0..k).map(|v| pattern.degree(v)).collect();

    fn rec(
        host: &Graph,
        pattern: &Graph,
        host_deg: &[usize],
        pat_deg: &[usize],
        map: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        let i = map.len();
        if i == pattern.order() {
            return true;
        }
        let (k, hn) = (pattern.order(), host.order());
        for h in 0..hn {
            if used >> h & 1 == 1 {
                continue;
            }
            if host_deg[h] < pat_deg[i] || hn - 1 - host_deg[h] < k - 1 - pat_deg[i] {
                continue;
            }
            let row = host.row(h);
            let consistent = map
                .iter()
                .enumerate()
                .all(|(j, &hj)| (row >> hj & 1 == 1) == pattern.has_edge(i, j));
            if !consistent {
                continue;
            }
            map.push(h);
            if rec(host, pattern, host_deg, pat_deg, map, used | 1u64 << h) {
                return true;
            }
            map.pop();
        }
        false
    }

    let mut map = Vec::with_capacity(k);
    rec(host, pattern, &host_deg, &pat_deg, &mut map, 0).then_some(InducedWitness { vertices: map })
}

/// A forbidden pattern with the label used in reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenPattern {
    pub name: String,
    pub graph: Graph,
}

/// A hereditary family given by forbidden induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub forbidden: Vec<ForbiddenPattern>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("forbidden pattern must have 1 to 10 vertices, {name} has {order}")]
    PatternOrder { name: String, order: usize },
    #[error("bad forbidden pattern: {0}")]
    Graph6(#[from] Graph6Error),
}

impl FamilySpec {
    pub fn new(name: impl Into<String>, forbidden: Vec<ForbiddenPattern>) -> Result<Self, FamilyError> {
        for p in &forbidden {
            if !(1..=10).contains(&p.graph.order()) {
                return Err(FamilyError::PatternOrder {
                    name: p.name.clone(),
                    order: p.graph.order(),
                });
            }
        }
        Ok(FamilySpec {
            name: name.into(),
            forbidden,
        })
    }

    pub fn from_patterns(name: impl Into<String>, patterns: &[Pattern]) -> Self {
        let forbidden = patterns
            .iter()
            .map(|p| ForbiddenPattern {
                name: p.name().to_string(),
                graph: p.graph(),
            })
            .collect();
        FamilySpec::new(name, forbidden).expect("catalog patterns are small")
    }

    /// Family from user-supplied graph6 patterns; each pattern is labelled
    /// by its graph6 string.
    pub fn from_graph6<S: AsRef<str>>(patterns: &[S]) -> Result<Self, FamilyError> {
        let forbidden = patterns
            .iter()
            .map(|s| {
                let s = s.as_ref();
                let graph = graph_from_graph6(s)?;
                let name = graph_to_graph6(&graph).expect("decoded graphs fit graph6");
                Ok(ForbiddenPattern { name, graph })
            })
            .collect::<Result<Vec<_>, FamilyError>>()?;
        let name = format!(
            "forbid[{}]",
            forbidden.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(",")
        );
        FamilySpec::new(name, forbidden)
    }

    /// All graphs.
    pub fn unrestricted() -> Self {
        FamilySpec {
            name: "all".into(),
            forbidden: Vec::new(),
        }
    }

    pub fn pattern_names(&self) -> Vec<String> {
        self.forbidden.iter().map(|p| p.name.clone()).collect()
    }
}

/// The families of the main theorem and its corollaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    P5FlagC,
    P5C4,
    ThreeK1,
    P3K1,
    TwoK2C4,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 5] = [
        NamedFamily::P5FlagC,
        NamedFamily::P5C4,
        NamedFamily::ThreeK1,
        NamedFamily::P3K1,
        NamedFamily::TwoK2C4,
    ];

    pub fn key(self) -> &'static str {
        match self {
            NamedFamily::P5FlagC => "p5-flagc",
            NamedFamily::P5C4 => "p5-c4",
            NamedFamily::ThreeK1 => "3k1",
            NamedFamily::P3K1 => "p3k1",
            NamedFamily::TwoK2C4 => "2k2-c4",
        }
    }

    pub fn patterns(self) -> &'static [Pattern] {
        match self {
            NamedFamily::P5FlagC => &[Pattern::P5, Pattern::FlagC],
            NamedFamily::P5C4 => &[Pattern::P5, Pattern::C4],
            NamedFamily::ThreeK1 => &[Pattern::ThreeK1],
            NamedFamily::P3K1 => &[Pattern::P3uK1],
            NamedFamily::TwoK2C4 => &[Pattern::TwoK2, Pattern::C4],
        }
    }

    pub fn spec(self) -> FamilySpec {
        FamilySpec::from_patterns(self.key(), self.patterns())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown family {0:?}; valid names: p5-flagc, p5-c4, 3k1, p3k1, 2k2-c4")]
pub struct UnknownFamily(pub String);

impl FromStr for NamedFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, UnknownFamily> {
        NamedFamily::ALL
            .into_iter()
            .find(|f| f.key() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// First forbidden pattern found in a graph, in family order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyViolation {
    pub pattern: String,
    pub vertices: Vec<usize>,
}

pub fn in_family(g: &Graph, f: &FamilySpec) -> Result<(), FamilyViolation> {
    for p in &f.forbidden {
        if let Some(w) = has_induced(g, &p.graph) {
            return Err(FamilyViolation {
                pattern: p.name.clone(),
                vertices: w.vertices,
            });
        }
    }
    Ok(())
}

pub fn is_member(g: &Graph, f: &FamilySpec) -> bool {
    in_family(g, f).is_ok()
}

/// Lengths of all induced cycles of odd length at least 5, ascending, one
/// entry per vertex set. Exhaustive over subsets, so exponential in `n`.
pub fn odd_hole_lengths(g: &Graph) -> Vec<usize> {
    let n = g.order();
    assert!(n <= 24, "odd hole enumeration is exhaustive; n={n} is too large");
    let mut out = Vec::new();
    for mask in 0u64..1u64 << n {
        let k = mask.count_ones() as usize;
        if k < 5 || k.is_multiple_of(2) {
            continue;
        }
        let s = VertexSet(mask);
        if is_induced_cycle(g, s) {
            out.push(k);
        }
    }
    out.sort_unstable();
    out
}

fn is_induced_cycle(g: &Graph, s: VertexSet) -> bool {
    if s.iter().any(|v| g.neighbors(v).intersection(s).len() != 2) {
        return false;
    }
    // 2-regular: a cycle iff connected.
    let start = s.first().expect("non-empty");
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.neighbors(v));
        }
        frontier = next.intersection(s).difference(seen);
        seen = seen.union(frontier);
    }
    seen == s
}
