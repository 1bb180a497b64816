//! The vertex sets built around an apex `u` under a fixed colouring:
//! the uniquely coloured neighbours `R = S ∪ T`, the outside substitutes
//! `T′`, and the levelled sequence `(S_l, S_l′)` with remainder `W`.

use super::Coloring;
use crate::graph::{Graph, VertexSet};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UniqueColorDecomposition {
    pub u: usize,
    /// Neighbours of `u` whose colour occurs exactly once in `N(u)`.
    pub r: VertexSet,
    /// Members of `R` adjacent to all other members of `R`.
    pub s: VertexSet,
    pub t: VertexSet,
}

pub fn unique_color_neighbors(g: &Graph, c: &Coloring, u: usize) -> UniqueColorDecomposition {
    let nbrs = g.neighbors(u);
    let mut counts = vec![0usize; c.color_count()];
    for v in nbrs {
        counts[c.color(v)] += 1;
    }
    let r: VertexSet = nbrs.iter().filter(|&v| counts[c.color(v)] == 1).collect();
    let s: VertexSet = r.iter().filter(|&x| r.without(x).is_subset(g.neighbors(x))).collect();
    UniqueColorDecomposition {
        u,
        r,
        s,
        t: r.difference(s),
    }
}

/// Vertices outside `N̄(u)` adjacent to some `x ∈ T` and sharing the colour
/// of some `y ∈ T` with `xy ∉ E`.
pub fn derive_t_prime(g: &Graph, c: &Coloring, d: &UniqueColorDecomposition) -> VertexSet {
    let outside = g.vertices().difference(g.closed_neighbors(d.u));
    let mut out = VertexSet::EMPTY;
    for x in d.t {
        let reach = outside.intersection(g.neighbors(x));
        for y in d.t.difference(g.closed_neighbors(x)) {
            out = out.union(reach.intersection(c.class(c.color(y))));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequenceLevel {
    pub s: VertexSet,
    pub s_prime: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceDecomposition {
    /// `levels[0] = (T, T′)`; every later level has non-empty `S_l` and
    /// `S_l′`.
    pub levels: Vec<SequenceLevel>,
    /// `S` minus the union of `S_l` for `l ≥ 1`.
    pub w: VertexSet,
}

impl SequenceDecomposition {
    /// Index of the last level.
    pub fn k(&self) -> usize {
        self.levels.len() - 1
    }

    /// Union of all `S_l′`.
    pub fn substitutes(&self) -> VertexSet {
        self.levels.iter().fold(VertexSet::EMPTY, |acc, l| acc.union(l.s_prime))
    }

    /// `S_1′`, empty when there is no level 1.
    pub fn level_one_substitutes(&self) -> VertexSet {
        self.levels.get(1).map_or(VertexSet::EMPTY, |l| l.s_prime)
    }
}

pub fn build_sequence(g: &Graph, c: &Coloring, u: usize) -> SequenceDecomposition {
    let d = unique_color_neighbors(g, c, u);
    sequence_from(g, c, &d)
}

/// Builds levels until `S_l` or `S_l′` comes out empty. For `l ≥ 1`,
/// `S_l` holds the unused members of `S` with a non-neighbour `y` in
/// `S_{l−1}′`, and `S_l′` the vertices outside `N̄(u)` that are adjacent to
/// such a `y` and coloured like the corresponding member of `S_l`.
pub fn sequence_from(g: &Graph, c: &Coloring, d: &UniqueColorDecomposition) -> SequenceDecomposition {
    let outside = g.vertices().difference(g.closed_neighbors(d.u));
    let mut levels = vec![SequenceLevel {
        s: d.t,
        s_prime: derive_t_prime(g, c, d),
    }];
    let mut consumed = VertexSet::EMPTY;
    loop {
        let prev = levels.last().expect("level 0 exists").s_prime;
        if prev.is_empty() {
            break;
        }
        let s_l: VertexSet =
            d.s.difference(consumed)
                .iter()
                .filter(|&x| !prev.is_subset(g.neighbors(x)))
                .collect();
        if s_l.is_empty() {
            break;
        }
        let mut s_prime = VertexSet::EMPTY;
        for x in s_l {
            let same = outside.intersection(c.class(c.color(x)));
            for y in prev.difference(g.neighbors(x)) {
                s_prime = s_prime.union(same.intersection(g.neighbors(y)));
            }
        }
        if s_prime.is_empty() {
            break;
        }
        consumed = consumed.union(s_l);
        levels.push(SequenceLevel { s: s_l, s_prime });
    }
    SequenceDecomposition {
        levels,
        w: d.s.difference(consumed),
    }
}
