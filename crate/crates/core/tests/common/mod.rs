//! Brute-force oracles shared by the integration tests. None of them use
//! the library's search code, only `Graph` accessors.
#![allow(dead_code)]

use reedcheck_core::graph::Graph;

pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| {
            (0..n)
                .filter(|v| s >> v & 1 == 1)
                .all(|v| g.row(v) & s == s & !(1 << v))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_independence_number(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&s| (0..n).filter(|v| s >> v & 1 == 1).all(|v| g.row(v) & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest `k` such that some map `V → 0..k` is proper, found by counting
/// through all `k^n` maps.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().all(|(a, b)| colors[a] != colors[b]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colours always suffice")
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

/// Upper-triangle bits of the adjacency matrix, row by row.
pub fn edge_word(g: &Graph) -> u64 {
    let n = g.order();
    let mut w = 0u64;
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                w |= 1 << bit;
            }
            bit += 1;
        }
    }
    w
}

pub fn graph_from_word(n: usize, w: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if w >> bit & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Number of isomorphism classes on `n` vertices by Burnside's lemma: the
/// average over all permutations of `2^(orbits on vertex pairs)`.
pub fn burnside_count(n: usize) -> u128 {
    let perms = permutations(n);
    let mut total: u128 = 0;
    for p in &perms {
        let mut seen = vec![false; n * n];
        let mut orbits = 0u32;
        for a in 0..n {
            for b in a + 1..n {
                if seen[a * n + b] {
                    continue;
                }
                orbits += 1;
                let (mut x, mut y) = (a, b);
                loop {
                    let key = if x < y { x * n + y } else { y * n + x };
                    if seen[key] {
                        break;
                    }
                    seen[key] = true;
                    x = p[x];
                    y = p[y];
                }
            }
        }
        total += 1u128 << orbits;
    }
    total / perms.len() as u128
}

/// Classes on `n` vertices, counting the labelled graphs whose edge word is
/// least among all relabellings.
pub fn labelled_class_count(n: usize) -> usize {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut count = 0;
    let mut rows = vec![0u64; n];
    for w in 0u64..1 << pairs {
        rows.iter_mut().for_each(|r| *r = 0);
        let mut bit = 0;
        for a in 0..n {
            for b in a + 1..n {
                if w >> bit & 1 == 1 {
                    rows[a] |= 1 << b;
                    rows[b] |= 1 << a;
                }
                bit += 1;
            }
        }
        let least = perms.iter().all(|p| {
            let mut pw = 0u64;
            let mut bit = 0;
            for a in 0..n {
                for b in a + 1..n {
                    pw |= (rows[p[a]] >> p[b] & 1) << bit;
                    bit += 1;
                }
            }
            pw >= w
        });
        if least {
            count += 1;
        }
    }
    count
}

/// True when some injective map sends `pattern` onto an induced copy in
/// `host`, by trying every ordered vertex tuple.
pub fn brute_has_induced(host: &Graph, pattern: &Graph) -> bool {
    let (n, k) = (host.order(), pattern.order());
    if k > n {
        return false;
    }
    let mut pick = Vec::with_capacity(k);
    fn go(host: &Graph, pattern: &Graph, pick: &mut Vec<usize>) -> bool {
        let i = pick.len();
        if i == pattern.order() {
            return true;
        }
        for v in 0..host.order() {
            if pick.contains(&v) {
                continue;
            }
            if (0..i).all(|j| host.has_edge(pick[j], v) == pattern.has_edge(j, i)) {
                pick.push(v);
                if go(host, pattern, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    go(host, pattern, &mut pick)
}
