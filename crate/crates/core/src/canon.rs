//! Canonical forms by iterated neighborhood refinement and backtracking.
//!
//! The certificate of a graph is its order followed by the
//! lexicographically smallest relabeled upper-triangle bit string over all
//! leaves of an individualization-refinement search tree. Refinement and
//! the choice of the cell to branch on are isomorphism invariant, and the
//! search explores every individualization of the target cell (pruning
//! only branches whose fixed prefix already compares greater than the best
//! string found), so two graphs get equal certificates exactly when they
//! are isomorphic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Canonical certificate: `[order, packed upper-triangle bits…]`.
///
/// Bits are in column-major pair order x(0,1), x(0,2), x(1,2), x(0,3), …
/// packed 8 per byte, so equal certificates occupy equal byte strings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCert {
    bytes: Vec<u8>,
}

impl CanonicalCert {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Order of the underlying graph.
    pub fn order(&self) -> usize {
        self.bytes[0] as usize
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCert(n={}, {:02x?})", self.order(), &self.bytes[1..])
    }
}

/// Pairs (i, j), i < j, in column-major order: all pairs inside a prefix
/// of positions come before any pair that leaves it.
fn pair_bit<F: Fn(usize, usize) -> bool>(bits: &mut Vec<u8>, n: usize, edge: F) {
    for j in 1..n {
        for i in 0..j {
            bits.push(u8::from(edge(i, j)));
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Best full bit string so far (one entry per pair, 0/1).
    best: Option<Vec<u8>>,
}

/// Normalizes arbitrary color keys to 0..k ranks.
fn rank_colors(keys: &[u64]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_unstable_by_key(|&v| keys[v]);
    let mut colors = vec![0u32; keys.len()];
    let mut next = 0u32;
    for w in 0..order.len() {
        if w > 0 && keys[order[w]] != keys[order[w - 1]] {
            next += 1;
        }
        colors[order[w]] = next;
    }
    colors
}

impl<'a> Search<'a> {
    /// Refines colors to a stable partition. Colors are rank-normalized.
    fn refine(&self, colors: &mut Vec<u32>) {
        loop {
            // Key: own color, then the sorted multiset of neighbor colors.
            let mut keys: Vec<Vec<u32>> = Vec::with_capacity(self.n);
            for v in 0..self.n {
                let mut key = Vec::with_capacity(self.g.degree(v) + 1);
                key.push(colors[v]);
                let start = key.len();
                key.extend(self.g.neighbors(v).iter().map(|u| colors[u]));
                key[start..].sort_unstable();
                keys.push(key);
            }
            let mut order: Vec<usize> = (0..self.n).collect();
            order.sort_unstable_by(|&a, &b| keys[a].cmp(&keys[b]));
            let mut new_colors = vec![0u32; self.n];
            let mut next = 0u32;
            for w in 0..order.len() {
                if w > 0 && keys[order[w]] != keys[order[w - 1]] {
                    next += 1;
                }
                new_colors[order[w]] = next;
            }
            if new_colors == *colors {
                return;
            }
            *colors = new_colors;
        }
    }

    /// Splits vertex `v` off its cell, placing it first.
    fn individualize(&self, colors: &[u32], v: usize) -> Vec<u32> {
        let keys: Vec<u64> = (0..self.n)
            .map(|u| (colors[u] as u64) << 1 | u64::from(u != v))
            .collect();
        rank_colors(&keys)
    }

    /// Number of leading singleton cells, i.e. fixed positions.
    fn fixed_prefix(&self, colors: &[u32]) -> usize {
        let mut count = vec![0u32; self.n + 1];
        for &c in colors.iter() {
            count[c as usize] += 1;
        }
        let mut k = 0;
        while k < self.n && count[k] == 1 {
            k += 1;
        }
        k
    }

    /// Bits among the first `k` fixed positions, in pair order.
    fn prefix_bits(&self, colors: &[u32], k: usize) -> Vec<u8> {
        // vertex at position p (< k) is the unique v with colors[v] == p
        let mut at = vec![usize::MAX; k];
        for v in 0..self.n {
            let c = colors[v] as usize;
            if c < k {
                at[c] = v;
            }
        }
        let mut bits = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        pair_bit(&mut bits, k, |i, j| self.g.has_edge(at[i], at[j]));
        bits
    }

    fn descend(&mut self, colors: Vec<u32>) {
        let k = self.fixed_prefix(&colors);
        if let Some(best) = &self.best {
            let bits = self.prefix_bits(&colors, k);
            if bits.as_slice() > &best[..bits.len()] {
                return;
            }
        }
        if k == self.n {
            // Discrete: a complete labeling.
            let bits = self.prefix_bits(&colors, self.n);
            if self.best.as_ref().map_or(true, |b| bits < *b) {
                self.best = Some(bits);
            }
            return;
        }
        // First non-singleton cell (cells are ordered by color rank).
        let target = k as u32;
        for v in 0..self.n {
            if colors[v] == target {
                let mut child = self.individualize(&colors, v);
                self.refine(&mut child);
                self.descend(child);
            }
        }
    }
}

impl Graph {
    /// Canonical certificate, equal for two graphs iff they are isomorphic.
    pub fn canonical_form(&self) -> CanonicalCert {
        let n = self.vertex_count();
        let mut search = Search {
            g: self,
            n,
            best: None,
        };
        let mut colors = vec![0u32; n];
        search.refine(&mut colors);
        search.descend(colors);
        let bits = search.best.unwrap_or_default();
        let mut bytes = Vec::with_capacity(1 + bits.len().div_ceil(8));
        bytes.push(n as u8);
        for chunk in bits.chunks(8) {
            let mut b = 0u8;
            for (i, &bit) in chunk.iter().enumerate() {
                b |= bit << (7 - i);
            }
            bytes.push(b);
        }
        CanonicalCert { bytes }
    }

    /// The canonically labeled copy of this graph.
    pub fn canonical_graph(&self) -> Graph {
        let cert = self.canonical_form();
        let n = cert.order();
        let mut edges = Vec::new();
        let mut idx = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = cert.bytes[1 + idx / 8];
                if byte >> (7 - idx % 8) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::new(n, &edges).expect("certificate encodes a valid graph")
    }

    /// Isomorphism test via certificate equality.
    pub fn is_isomorphic_to(&self, other: &Graph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }
}

/// Degree-sequence invariant, handy as a cheap pre-filter.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn relabeling_invariance_c4() {
        let c4 = cycle(4);
        let base = c4.canonical_form();
        // All 24 permutations of the vertices.
        let perms = [
            [0, 1, 2, 3],
            [0, 1, 3, 2],
            [0, 2, 1, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [0, 3, 2, 1],
            [1, 0, 2, 3],
            [1, 0, 3, 2],
            [1, 2, 0, 3],
            [1, 2, 3, 0],
            [1, 3, 0, 2],
            [1, 3, 2, 0],
            [2, 0, 1, 3],
            [2, 0, 3, 1],
            [2, 1, 0, 3],
            [2, 1, 3, 0],
            [2, 3, 0, 1],
            [2, 3, 1, 0],
            [3, 0, 1, 2],
            [3, 0, 2, 1],
            [3, 1, 0, 2],
            [3, 1, 2, 0],
            [3, 2, 0, 1],
            [3, 2, 1, 0],
        ];
        for p in perms {
            assert_eq!(c4.permuted(&p).canonical_form(), base);
        }
    }

    #[test]
    fn distinguishes_p4_from_star() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(p4.canonical_form(), k13.canonical_form());
        assert!(!p4.is_isomorphic_to(&k13));
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let g = Graph::new(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5)]).unwrap();
        let c = g.canonical_graph();
        assert!(g.is_isomorphic_to(&c));
        assert_eq!(c.canonical_form(), g.canonical_form());
    }

    #[test]
    fn empty_and_tiny_graphs() {
        let k0 = Graph::empty(0).unwrap();
        assert_eq!(k0.canonical_form().order(), 0);
        let e4 = Graph::empty(4).unwrap();
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_ne!(e4.canonical_form(), k4.canonical_form());
        assert!(Graph::empty(5).unwrap().canonical_form() != e4.canonical_form());
    }
}
