//! Canonical labelling by individualization and refinement.
//!
//! The search tree branches on every vertex of the first non-singleton cell
//! of an equitable ordered partition, except that only one vertex per twin
//! class is tried (swapping twins is an automorphism that fixes the
//! partition). The code is the lexicographically least adjacency string
//! over all leaves, which makes it an exact isomorphism invariant.

use super::Graph;
use std::fmt;

/// Total-order key of an isomorphism class: the order byte followed by the
/// upper triangle of the canonical relabelling in graph6 column order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

fn leaf_code(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(order[j]);
        for &vi in &order[..j] {
            acc = acc << 1 | (row >> vi & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

/// Splits cells by neighbour counts into earlier cells until stable.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1u64 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(g.order());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.row(v);
                    (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    g.row(a) & !(1u64 << b) == g.row(b) & !(1u64 << a)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<Vec<usize>>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = leaf_code(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&w| are_twins(self.g, v, w)) {
                continue;
            }
            let mut branch = Vec::with_capacity(cells.len() + 1);
            branch.extend_from_slice(&cells[..target]);
            branch.push(vec![v]);
            branch.push(cell.iter().copied().filter(|&w| w != v).collect());
            branch.extend_from_slice(&cells[target + 1..]);
            self.run(branch);
            tried.push(v);
        }
    }
}

fn search(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    if g.order() == 0 {
        return (vec![0], Vec::new());
    }
    let mut s = Search { g, best: None };
    s.run(vec![g.vertices().to_vec()]);
    s.best.expect("non-empty graph has at least one leaf")
}

/// Canonical relabelling of `g` together with the permutation used: vertex
/// `i` of the returned graph is vertex `perm[i]` of `g`.
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let (_, perm) = search(g);
    (g.permuted(&perm), perm)
}

/// Code and canonical relabelling from a single search.
pub fn canonical_pair(g: &Graph) -> (CanonicalCode, Graph) {
    let (code, perm) = search(g);
    (CanonicalCode(code), g.permuted(&perm))
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode(search(g).0)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_code(a) == canonical_code(b)
}
