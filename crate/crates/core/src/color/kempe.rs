use super::{Coloring, ColoringError};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Connected component of `start` in the subgraph induced by the colour of
/// `start` and `other`.
pub fn kempe_component(g: &Graph, c: &Coloring, start: usize, other: usize) -> VertexSet {
    let own = c.color(start);
    assert!(own != other, "Kempe chain needs two distinct colours");
    let allowed = c.class(own).union(c.class(other));
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.neighbors(v));
        }
        frontier = next.intersection(allowed).difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// Exchanges the colours of `pair` on `component`. The set must be closed
/// under bi-coloured adjacency, otherwise the result could be improper.
pub fn kempe_swap(
    g: &Graph,
    c: &Coloring,
    component: VertexSet,
    pair: (usize, usize),
) -> Result<Coloring, ColoringError> {
    let (a, b) = pair;
    if a == b {
        return Err(ColoringError::SameColor);
    }
    if c.len() != g.order() {
        return Err(ColoringError::LengthMismatch {
            expected: g.order(),
            found: c.len(),
        });
    }
    let bicolored = c.class(a).union(c.class(b));
    for v in component {
        if !bicolored.contains(v) {
            return Err(ColoringError::ForeignColor(v));
        }
        if let Some(w) = g.neighbors(v).intersection(bicolored).difference(component).first() {
            return Err(ColoringError::NotClosed { inside: v, outside: w });
        }
    }
    let mut colors = c.colors().to_vec();
    for v in component {
        colors[v] = if colors[v] == a { b } else { a };
    }
    Ok(Coloring {
        colors,
        color_count: c.color_count().max(a.max(b) + 1),
    })
}

/// Alternating path `t – V – W – t′` where `V` carries the colour of `t′`
/// and `W` the colour of `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicolorPath {
    pub vertices: [usize; 4],
    /// `(colour of t, colour of t′)`.
    pub colors: (usize, usize),
}

/// Least `(V, W)` completing a 4-vertex alternating path between two
/// non-adjacent, differently coloured vertices. `None` when no such path
/// exists or the endpoints do not qualify.
pub fn find_bicolor_path4(g: &Graph, c: &Coloring, t: usize, t_prime: usize) -> Option<BicolorPath> {
    let (j, i) = (c.color(t), c.color(t_prime));
    if t == t_prime || i == j || g.has_edge(t, t_prime) {
        return None;
    }
    let i_class = c.class(i);
    let j_class = c.class(j);
    for v in g.neighbors(t).intersection(i_class) {
        let w = g
            .neighbors(v)
            .intersection(g.neighbors(t_prime))
            .intersection(j_class)
            .first();
        if let Some(w) = w {
            return Some(BicolorPath {
                vertices: [t, v, w, t_prime],
                colors: (j, i),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::is_proper;

    fn col(v: &[usize]) -> Coloring {
        Coloring::new(v.to_vec()).unwrap()
    }

    #[test]
    fn k2_component_and_swap() {
        let g = Graph::complete(2);
        let c = col(&[0, 1]);
        let comp = kempe_component(&g, &c, 0, 1);
        assert_eq!(comp.to_vec(), vec![0, 1]);
        let s = kempe_swap(&g, &c, comp, (0, 1)).unwrap();
        assert_eq!(s.colors(), &[1, 0]);
        assert!(is_proper(&g, &s));
        assert_eq!(kempe_swap(&g, &s, comp, (0, 1)).unwrap(), c);
    }

    #[test]
    fn c5_component_hand_trace() {
        // Colour-{0,2} vertices of C5 under (0,1,0,1,2) are 0, 2, 4; only
        // 4–0 is an edge among them.
        let g = Graph::cycle(5);
        let c = col(&[0, 1, 0, 1, 2]);
        assert_eq!(kempe_component(&g, &c, 4, 0).to_vec(), vec![0, 4]);
        assert_eq!(kempe_component(&g, &c, 2, 2).to_vec(), vec![2]);
    }

    #[test]
    fn isolated_vertex_component() {
        let g = Graph::empty(3);
        let c = col(&[0, 0, 0]);
        assert_eq!(kempe_component(&g, &c, 1, 4).to_vec(), vec![1]);
    }

    #[test]
    fn swap_rejects_open_sets() {
        let g = Graph::path(3);
        let c = col(&[0, 1, 0]);
        assert_eq!(
            kempe_swap(&g, &c, VertexSet::singleton(0), (0, 1)),
            Err(ColoringError::NotClosed { inside: 0, outside: 1 })
        );
        assert_eq!(
            kempe_swap(&g, &c, VertexSet::singleton(0), (1, 2)),
            Err(ColoringError::ForeignColor(0))
        );
        assert_eq!(
            kempe_swap(&g, &c, VertexSet::EMPTY, (1, 1)),
            Err(ColoringError::SameColor)
        );
    }

    #[test]
    fn c5_apex_path() {
        // u=0, t=1, x=2, y=3, t′=4 coloured (0,1,2,1,2).
        let g = Graph::cycle(5);
        let c = col(&[0, 1, 2, 1, 2]);
        let p = find_bicolor_path4(&g, &c, 1, 4).unwrap();
        assert_eq!(p.vertices, [1, 2, 3, 4]);
        assert_eq!(p.colors, (1, 2));
        assert_eq!(find_bicolor_path4(&g, &c, 1, 2), None);
    }

    #[test]
    fn no_path_across_components() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        let c = col(&[0, 1, 1, 0]);
        assert_eq!(find_bicolor_path4(&g, &c, 0, 2), None);
    }
}
