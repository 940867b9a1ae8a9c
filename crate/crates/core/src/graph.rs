//! Small dense simple graphs stored as one adjacency bit mask per vertex.
//!
//! The vertex limit of 62 keeps every adjacency row in a single machine
//! word and matches the single-byte size form of the graph6 format. All
//! named graphs handled by this crate fit comfortably (the largest, the
//! Clebsch graph, has 16 vertices).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Maximum number of vertices a [`Graph`] may have.
pub const MAX_VERTICES: usize = 62;

/// A set of vertex indices stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    /// The empty set.
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{v}`.
    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(1 << v)
    }

    /// The set `{0, 1, …, n-1}`.
    pub fn all_below(n: usize) -> VertexSet {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        debug_assert!(v < 64);
        VertexSet(self.0 & !(1 << v))
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within `{0, …, n-1}`.
    pub fn complement_below(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & VertexSet::all_below(n).0)
    }

    /// Iterate over the elements in ascending order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl core::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl core::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl core::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the bits of a mask.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Errors from graph construction and set queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// More than [`MAX_VERTICES`] vertices requested.
    TooManyVertices(usize),
    /// An edge endpoint or set element is not a vertex of the graph.
    VertexOutOfRange { vertex: usize, order: usize },
    /// An edge of the form `(v, v)`.
    LoopEdge(usize),
    /// Two sets that must be disjoint overlap.
    OverlappingSets,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::TooManyVertices(n) => {
                write!(f, "graph order {n} exceeds the limit of {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            GraphError::OverlappingSets => write!(f, "vertex sets overlap"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on at most 62 vertices.
///
/// `adj[i]` has bit `j` set iff vertices `i` and `j` are adjacent. The
/// representation is always symmetric, loop free and has no bits at
/// positions `>= n`; constructors enforce this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds the simple graph with the given edges; duplicates collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                order: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn from_adj_unchecked(adj: Vec<u64>) -> Graph {
        let g = Graph { n: adj.len(), adj };
        g.debug_validate();
        g
    }

    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            let full = VertexSet::all_below(self.n).mask();
            for i in 0..self.n {
                debug_assert_eq!(self.adj[i] & !full, 0, "bits beyond order at row {i}");
                debug_assert_eq!(self.adj[i] >> i & 1, 0, "loop at vertex {i}");
                for j in self.neighbors(i).iter() {
                    debug_assert_ne!(self.adj[j] >> i & 1, 0, "asymmetry at ({i},{j})");
                }
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// The set of all vertices.
    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::all_below(self.n)
    }

    /// Adds one new vertex (index `n`) adjacent to `nbrs`.
    pub fn with_appended_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        if !nbrs.is_subset_of(self.full_vertex_set()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: nbrs.iter().last().unwrap_or(0),
                order: self.n,
            });
        }
        let mut adj = self.adj.clone();
        for u in nbrs.iter() {
            adj[u] |= 1 << self.n;
        }
        adj.push(nbrs.mask());
        Ok(Graph::from_adj_unchecked(adj))
    }

    /// Induced subgraph on `s`, relabeled to `0..|s|` preserving index order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let keep: Vec<usize> = (s & self.full_vertex_set()).iter().collect();
        let mut adj = vec![0u64; keep.len()];
        for (new_u, &old_u) in keep.iter().enumerate() {
            for (new_v, &old_v) in keep.iter().enumerate() {
                if self.has_edge(old_u, old_v) {
                    adj[new_u] |= 1 << new_v;
                }
            }
        }
        Graph::from_adj_unchecked(adj)
    }

    /// The graph with vertex `v` deleted.
    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.full_vertex_set().without(v))
    }

    /// Relabels vertices: old vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph::from_adj_unchecked(adj)
    }

    /// Number of edges with one end in `x` and the other in `y`.
    ///
    /// The sets must be disjoint.
    pub fn edges_between(&self, x: VertexSet, y: VertexSet) -> Result<usize, GraphError> {
        if !x.is_disjoint(y) {
            return Err(GraphError::OverlappingSets);
        }
        let mut count = 0;
        for u in (x & self.full_vertex_set()).iter() {
            count += (self.adj[u] & y.mask()).count_ones() as usize;
        }
        Ok(count)
    }

    /// Vertices reachable from `start` (which must contain valid vertices).
    fn reachable_from(&self, start: u64) -> u64 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True iff the graph has exactly one connected component.
    ///
    /// The 0-vertex graph counts as disconnected; `K1` as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.reachable_from(1) == self.full_vertex_set().mask()
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut remaining = self.full_vertex_set().mask();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reachable_from(1 << v);
            out.push(VertexSet(comp));
            remaining &= !comp;
        }
        out
    }

    /// Shortest distance from `u` to `v` that never traverses the edge
    /// `(u, v)` itself.
    fn distance_avoiding_edge(&self, u: usize, v: usize) -> Option<usize> {
        let mut seen = 1u64 << u;
        // First step: all neighbors of u except v.
        let mut frontier = self.adj[u] & !(1 << v) & !seen;
        let mut dist = 1;
        while frontier != 0 {
            if frontier >> v & 1 == 1 {
                return Some(dist);
            }
            seen |= frontier;
            let mut next = 0;
            for w in VertexSet(frontier).iter() {
                next |= self.adj[w];
            }
            frontier = next & !seen;
            dist += 1;
        }
        None
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            if let Some(d) = self.distance_avoiding_edge(u, v) {
                let cycle = d + 1;
                if best.map_or(true, |b| cycle < b) {
                    best = Some(cycle);
                }
                if best == Some(3) {
                    break;
                }
            }
        }
        best
    }

    /// True iff the graph contains no triangle.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                if self.adj[u] & self.adj[v] != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_graph_basic_shapes() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.edge_count(), 0);
        let k33 = Graph::new(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert!(k33.vertices().all(|v| k33.degree(v) == 3));
    }

    #[test]
    fn new_graph_rejects_bad_input() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]).unwrap_err(),
            GraphError::LoopEdge(0)
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            }
        );
        assert_eq!(
            Graph::empty(63).unwrap_err(),
            GraphError::TooManyVertices(63)
        );
        // Duplicate edges collapse.
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p3 = c4.induced_subgraph([0, 1, 2].into_iter().collect());
        assert_eq!(p3.vertex_count(), 3);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));
        assert_eq!(c4.induced_subgraph(c4.full_vertex_set()), c4);
        assert_eq!(c4.induced_subgraph(VertexSet::EMPTY).vertex_count(), 0);
    }

    #[test]
    fn edges_between_counts_cut_edges() {
        let k33 = Graph::new(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let left: VertexSet = [0, 1, 2].into_iter().collect();
        let right: VertexSet = [3, 4, 5].into_iter().collect();
        assert_eq!(k33.edges_between(left, right).unwrap(), 9);
        assert_eq!(
            k33.edges_between(left, left).unwrap_err(),
            GraphError::OverlappingSets
        );
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(
            c4.edges_between(VertexSet::singleton(0), VertexSet::singleton(2))
                .unwrap(),
            0
        );
    }

    #[test]
    fn connectivity_conventions() {
        assert!(!Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(c6.is_connected());
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.connected_components().len(), 2);
    }

    #[test]
    fn girth_of_small_graphs() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.girth(), Some(5));
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(tree.girth(), None);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Some(3));
        assert!(!k4.is_triangle_free());
        let k23 = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(k23.girth(), Some(4));
        assert!(k23.is_triangle_free());
    }

    #[test]
    fn vertex_set_operations() {
        let s: VertexSet = [1, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.complement_below(6).iter().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(s.min_element(), Some(1));
        assert!(VertexSet::EMPTY.min_element().is_none());
    }
}
