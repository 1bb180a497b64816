//! Immutable simple graphs on at most 64 vertices, stored as one `u64`
//! adjacency row per vertex.

mod canon;
mod graph6;

pub use canon::{canonical_code, canonical_form, canonical_pair, is_isomorphic, CanonicalCode};
pub use graph6::{graph_from_graph6, graph_to_graph6, Graph6Error, Graph6ErrorKind, UnsupportedOrder};

use std::fmt;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into one word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected simple graph on vertices `0..n`.
///
/// Rows are symmetric, loop-free and carry no bits at or above `n`; every
/// constructor enforces this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let full = VertexSet::full(n).bits();
        Graph {
            n,
            adj: (0..n).map(|v| full & !(1u64 << v)).collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Builds a graph from an edge list. Panics on loops or out-of-range
    /// endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            g.add_edge_mut(a, b);
        }
        g
    }

    /// Builds a graph from raw rows, validating symmetry, loops and range.
    pub fn from_rows(rows: Vec<u64>) -> Option<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return None;
        }
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 || row >> v & 1 == 1 {
                return None;
            }
            for w in VertexSet(row) {
                if rows[w] >> v & 1 == 0 {
                    return None;
                }
            }
        }
        Some(Graph { n, adj: rows })
    }

    fn add_edge_mut(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "edge ({a},{b}) out of range for n={}", self.n);
        assert!(a != b, "loop at vertex {a}");
        self.adj[a] |= 1u64 << b;
        self.adj[b] |= 1u64 << a;
    }

    /// Copy of this graph with the edge `ab` added.
    pub fn with_edge(&self, a: usize, b: usize) -> Self {
        let mut g = self.clone();
        g.add_edge_mut(a, b);
        g
    }

    /// Copy of this graph with one extra vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Self {
        assert!(self.n < MAX_VERTICES);
        assert!(neighbors.is_subset(self.vertices()));
        let v = self.n;
        let mut adj = self.adj.clone();
        for w in neighbors {
            adj[w] |= 1u64 << v;
        }
        adj.push(neighbors.bits());
        Graph { n: v + 1, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            VertexSet(self.adj[a] & !(((1u64 << a) - 1) | (1u64 << a)))
                .iter()
                .map(move |b| (a, b))
        })
    }

    /// True iff every two distinct vertices of `s` are adjacent.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| !self.adj[v] & full & !(1u64 << v)).collect(),
        }
    }

    /// The subgraph induced by `s`, relabelled `0..|s|` in increasing
    /// vertex order. Panics if `s` mentions a vertex outside the graph.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        assert!(
            s.is_subset(self.vertices()),
            "vertex set {s:?} not within graph of order {}",
            self.n
        );
        let members = s.to_vec();
        self.induced_by_order(&members)
    }

    /// The subgraph induced by `order`, vertex `i` of the result being
    /// `order[i]`. Entries must be distinct.
    pub fn induced_by_order(&self, order: &[usize]) -> Graph {
        let mut adj = vec![0u64; order.len()];
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                assert!(a != b, "repeated vertex {a}");
                if self.has_edge(a, b) {
                    adj[i] |= 1u64 << j;
                    adj[j] |= 1u64 << i;
                }
            }
        }
        Graph { n: order.len(), adj }
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        self.induced_by_order(perm)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match graph_to_graph6(self) {
            Ok(s) => write!(f, "Graph({s})"),
            Err(_) => write!(f, "Graph(n={}, m={})", self.n, self.edge_count()),
        }
    }
}

/// Free-function form of [`Graph::complement`].
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Free-function form of [`Graph::induced_subgraph`].
pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Graph {
    g.induced_subgraph(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_triangle_is_edgeless() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
    }

    #[test]
    fn four_consecutive_cycle_vertices_induce_a_path() {
        let c5 = Graph::cycle(5);
        for start in 0..5 {
            let s: VertexSet = (0..4).map(|i| (start + i) % 5).collect();
            let h = c5.induced_subgraph(s);
            assert_eq!(h.edge_count(), 3);
            assert_eq!(h.degree_sequence(), vec![2, 2, 1, 1]);
            assert!(is_isomorphic(&h, &Graph::path(4)));
        }
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced_subgraph(c5.vertices()), c5);
    }

    #[test]
    #[should_panic(expected = "not within graph")]
    fn induced_rejects_out_of_range() {
        Graph::cycle(5).induced_subgraph(VertexSet::singleton(7));
    }

    #[test]
    fn degenerate_orders() {
        let g0 = Graph::empty(0);
        assert_eq!(g0.edge_count(), 0);
        assert_eq!(g0.complement(), g0);
        let g1 = Graph::empty(1);
        assert_eq!(g1.complement(), g1);
        assert!(g1.is_clique(g1.vertices()));
    }

    #[test]
    fn full_word_graph() {
        let g = Graph::complete(64);
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.complement().edge_count(), 0);
    }

    #[test]
    fn from_rows_validates() {
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_some());
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_none());
        assert!(Graph::from_rows(vec![0b01]).is_none());
        assert!(Graph::from_rows(vec![0b100, 0b000]).is_none());
    }

    #[test]
    fn edges_listed_once() {
        let c5 = Graph::cycle(5);
        let e: Vec<_> = c5.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(1));
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.without(3).to_vec(), vec![1, 5]);
        assert!(s.is_subset(VertexSet::full(6)));
        assert!(!s.is_subset(VertexSet::full(5)));
        assert_eq!(format!("{s:?}"), "{1, 3, 5}");
    }
}
