//! Exact Δ, ω, χ, α and the Reed bound.

use crate::color::Coloring;
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

pub fn max_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Number of colours used by first-fit over `cand` in ascending order; an
/// upper bound on the clique number of `⟨cand⟩`.
fn greedy_cover_bound(g: &Graph, cand: u64) -> usize {
    let mut uncolored = cand;
    let mut classes = 0;
    while uncolored != 0 {
        classes += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1u64 << v) & !g.row(v);
            uncolored &= !(1u64 << v);
        }
    }
    classes
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
    current: VertexSet,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut cand: u64) {
        if cand == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current;
            }
            return;
        }
        let size = self.current.len();
        if size + greedy_cover_bound(self.g, cand) <= self.best.len() {
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= self.best.len() {
                return;
            }
            let v = VertexSet(cand)
                .iter()
                .max_by_key(|&v| ((self.g.row(v) & cand).count_ones(), std::cmp::Reverse(v)))
                .expect("non-empty candidate set");
            self.current.insert(v);
            self.expand(cand & self.g.row(v));
            self.current.remove(v);
            cand &= !(1u64 << v);
        }
    }
}

/// A maximum clique; among equal sizes the one found first by the
/// highest-degree-first branching.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let mut s = CliqueSearch {
        g,
        best: VertexSet::EMPTY,
        current: VertexSet::EMPTY,
    };
    s.expand(g.vertices().bits());
    s.best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// Decides `k`-colourability. Vertices are coloured in index order and a
/// new colour may only be opened as the next unused index, so colour
/// classes appear ordered by least vertex.
fn try_color(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn rec(g: &Graph, k: usize, v: usize, used: usize, classes: &mut [u64], colors: &mut [usize]) -> bool {
        if v == g.order() {
            return true;
        }
        let row = g.row(v);
        for c in 0..(used + 1).min(k) {
            if classes[c] & row != 0 {
                continue;
            }
            classes[c] |= 1u64 << v;
            colors[v] = c;
            if rec(g, k, v + 1, used.max(c + 1), classes, colors) {
                return true;
            }
            classes[c] &= !(1u64 << v);
        }
        false
    }
    let mut classes = vec![0u64; k];
    let mut colors = vec![0; g.order()];
    rec(g, k, 0, 0, &mut classes, &mut colors).then_some(colors)
}

/// An optimal colouring, found by testing `k = ω, ω+1, ...` in turn.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    let start = clique_number(g).max(usize::from(g.order() > 0));
    (start..=g.order().max(start))
        .find_map(|k| try_color(g, k))
        .map(|colors| Coloring::new(colors).expect("search yields contiguous colours"))
        .expect("every graph is n-colourable")
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).color_count()
}

/// `⌈(Δ + ω + 1) / 2⌉`.
pub fn reed_bound(delta: usize, omega: usize) -> usize {
    (delta + omega + 2) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub omega: usize,
    pub chi: usize,
    pub alpha: usize,
    pub reed_bound: usize,
    /// `reed_bound − chi`; negative only for a counterexample to the bound.
    pub slack: i64,
}

pub fn invariant_bundle(g: &Graph) -> InvariantBundle {
    let delta = max_degree(g);
    let omega = clique_number(g);
    let chi = chromatic_number(g);
    let reed = reed_bound(delta, omega);
    InvariantBundle {
        n: g.order(),
        m: g.edge_count(),
        delta,
        omega,
        chi,
        alpha: independence_number(g),
        reed_bound: reed,
        slack: reed as i64 - chi as i64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(max_degree(&Graph::complete(5)), 4);
        assert_eq!(max_degree(&Graph::cycle(5)), 2);
        assert_eq!(max_degree(&Graph::empty(4)), 0);
        assert_eq!(max_degree(&Graph::empty(0)), 0);
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&Graph::complete(5)), 5);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::path(5)), 2);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(3)), 1);
        let k = maximum_clique(&Graph::complete(7).complement().complement());
        assert_eq!(k.len(), 7);
    }

    #[test]
    fn chromatic() {
        assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
        assert_eq!(chromatic_number(&Graph::complete(5)), 5);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::cycle(6)), 2);
    }

    #[test]
    fn independence() {
        assert_eq!(independence_number(&Graph::cycle(5)), 2);
        assert_eq!(independence_number(&Graph::complete(5)), 1);
        assert_eq!(independence_number(&Graph::empty(4)), 4);
    }

    #[test]
    fn reed_values() {
        assert_eq!(reed_bound(4, 5), 5);
        assert_eq!(reed_bound(2, 2), 3);
        assert_eq!(reed_bound(0, 1), 1);
        assert_eq!(reed_bound(0, 0), 1);
    }

    #[test]
    fn bundles() {
        let c5 = invariant_bundle(&Graph::cycle(5));
        assert_eq!((c5.delta, c5.omega, c5.chi, c5.reed_bound, c5.slack), (2, 2, 3, 3, 0));
        let k5 = invariant_bundle(&Graph::complete(5));
        assert_eq!((k5.delta, k5.omega, k5.chi, k5.reed_bound, k5.slack), (4, 5, 5, 5, 0));
        let p4 = invariant_bundle(&Graph::path(4));
        assert_eq!((p4.delta, p4.omega, p4.chi, p4.reed_bound, p4.slack), (2, 2, 2, 3, 1));
    }

    #[test]
    fn optimal_coloring_is_proper_and_canonical() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (0, 5)]);
        let c = optimal_coloring(&g);
        assert!(crate::color::is_proper(&g, &c));
        assert_eq!(c.color_count(), 3);
        assert_eq!(c.colors()[0], 0);
    }
}
