//! Proper colourings, Kempe chains and the unique-colour neighbourhood
//! decomposition around an apex vertex.

mod decomposition;
mod kempe;

pub use decomposition::{
    build_sequence, derive_t_prime, sequence_from, unique_color_neighbors, SequenceDecomposition, SequenceLevel,
    UniqueColorDecomposition,
};
pub use kempe::{find_bicolor_path4, kempe_component, kempe_swap, BicolorPath};

use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number, optimal_coloring};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("colour {0} is skipped; used colours must be 0..k")]
    NonContiguous(usize),
    #[error("colouring has {found} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("swap colours must differ")]
    SameColor,
    #[error("vertex {0} in the swap set is coloured outside the swapped pair")]
    ForeignColor(usize),
    #[error("vertex {inside} has a bi-coloured neighbour {outside} outside the swap set")]
    NotClosed { inside: usize, outside: usize },
}

/// Vertex colouring: `colors[v]` is the colour of `v`, every colour is
/// below `color_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    colors: Vec<usize>,
    color_count: usize,
}

impl Coloring {
    /// Accepts a colour vector whose used colours are exactly `0..k`.
    pub fn new(colors: Vec<usize>) -> Result<Self, ColoringError> {
        let color_count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut seen = vec![false; color_count];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(ColoringError::NonContiguous(missing));
        }
        Ok(Coloring { colors, color_count })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// All vertices coloured `c`.
    pub fn class(&self, c: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }

    /// Distinct colours appearing on `s`, as a bit mask over colour indices.
    pub fn palette_of(&self, s: VertexSet) -> u64 {
        s.iter().fold(0u64, |m, v| m | 1u64 << self.colors[v])
    }

    /// Relabels colours so that classes are numbered in order of their
    /// least vertex. Unused colours are dropped.
    pub fn canonicalized(&self) -> Coloring {
        let mut map = vec![usize::MAX; self.color_count];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        Coloring {
            colors,
            color_count: next,
        }
    }
}

impl TryFrom<Vec<usize>> for Coloring {
    type Error = ColoringError;

    fn try_from(colors: Vec<usize>) -> Result<Self, ColoringError> {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Vec<usize> {
        c.colors
    }
}

/// True iff no edge joins two vertices of the same colour. Panics if the
/// colouring does not cover exactly the vertices of `g`.
pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    assert_eq!(c.len(), g.order(), "colouring length does not match graph order");
    g.edges().all(|(a, b)| c.color(a) != c.color(b))
}

/// First-fit along `order`, which must be a permutation of the vertices.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Coloring {
    assert_eq!(order.len(), g.order(), "order must list every vertex once");
    let mut colors = vec![usize::MAX; g.order()];
    for &v in order {
        assert!(colors[v] == usize::MAX, "vertex {v} repeated in order");
        let mut taken = 0u64;
        for w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                taken |= 1u64 << colors[w];
            }
        }
        colors[v] = (!taken).trailing_zeros() as usize;
    }
    Coloring::new(colors).expect("first-fit opens colours in order")
}

/// A bounded list of colourings and whether the bound cut it short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringSet {
    pub colorings: Vec<Coloring>,
    pub truncated: bool,
}

/// All proper colourings with exactly χ colours, one per colour
/// permutation class (classes numbered by least vertex), in lexicographic
/// order of the colour vector. Stops after `cap` and sets `truncated` if
/// more exist.
pub fn enumerate_optimal_colorings(g: &Graph, cap: usize) -> ColoringSet {
    let k = chromatic_number(g);
    let n = g.order();
    let mut out = ColoringSet {
        colorings: Vec::new(),
        truncated: false,
    };
    if n == 0 {
        out.colorings.push(Coloring {
            colors: Vec::new(),
            color_count: 0,
        });
        return out;
    }

    struct Enum<'a> {
        g: &'a Graph,
        k: usize,
        cap: usize,
        classes: Vec<u64>,
        colors: Vec<usize>,
        out: &'a mut ColoringSet,
    }
    impl Enum<'_> {
        fn rec(&mut self, v: usize, used: usize) -> bool {
            let n = self.g.order();
            // Remaining vertices cannot open the missing colours.
            if self.k - used > n - v {
                return true;
            }
            if v == n {
                if self.out.colorings.len() == self.cap {
                    self.out.truncated = true;
                    return false;
                }
                self.out.colorings.push(Coloring {
                    colors: self.colors.clone(),
                    color_count: self.k,
                });
                return true;
            }
            let row = self.g.row(v);
            for c in 0..(used + 1).min(self.k) {
                if self.classes[c] & row != 0 {
                    continue;
                }
                self.classes[c] |= 1u64 << v;
                self.colors[v] = c;
                let go_on = self.rec(v + 1, used.max(c + 1));
                self.classes[c] &= !(1u64 << v);
                if !go_on {
                    return false;
                }
            }
            true
        }
    }
    let mut e = Enum {
        g,
        k,
        cap,
        classes: vec![0; k],
        colors: vec![0; n],
        out: &mut out,
    };
    e.rec(0, 0);
    out
}

/// Orders above this use greedy colourings rather than full enumeration.
pub const ENUMERATION_MAX_ORDER: usize = 7;
/// Cap on enumerated optimal colourings per graph.
pub const COLORING_CAP: usize = 10_000;

/// Colourings examined by audits: every canonical optimal colouring (capped)
/// up to [`ENUMERATION_MAX_ORDER`] vertices; beyond that, first-fit along
/// each rotation `i, i+1, .., i-1` of the vertex order, keeping only the
/// optimal ones (deduplicated up to colour permutation, first occurrence
/// order). When no rotation is optimal the exact search's colouring is used.
pub fn policy_colorings(g: &Graph) -> ColoringSet {
    let n = g.order();
    if n <= ENUMERATION_MAX_ORDER {
        return enumerate_optimal_colorings(g, COLORING_CAP);
    }
    let chi = chromatic_number(g);
    let mut colorings: Vec<Coloring> = Vec::new();
    for shift in 0..n {
        let order: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
        let c = greedy_coloring(g, &order).canonicalized();
        if c.color_count() == chi && !colorings.contains(&c) {
            colorings.push(c);
        }
    }
    if colorings.is_empty() {
        colorings.push(optimal_coloring(g));
    }
    ColoringSet {
        colorings,
        truncated: false,
    }
}
