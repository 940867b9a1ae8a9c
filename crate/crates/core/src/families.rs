//! Deterministic generators for the named graphs and parametric families
//! used throughout the toolkit.
//!
//! Every generator uses a fixed, documented vertex labeling, so repeated
//! calls produce identical `Graph` values (not merely isomorphic ones).

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError};

/// Errors from family generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    /// A parameter is outside the generator's range.
    InvalidParameter(&'static str),
    /// The requested graph would exceed the vertex limit.
    Graph(GraphError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            FamilyError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FamilyError {}

impl From<GraphError> for FamilyError {
    fn from(e: GraphError) -> FamilyError {
        FamilyError::Graph(e)
    }
}

/// The planar family built from `K_{2,s}`: subdivide the two hub-to-spoke
/// edges `v1 u1` and `v1 u2`, then attach a pendant edge to each remaining
/// spoke `u3, …, us`.
///
/// Labeling: `v1 = 0`, `v2 = 1`, subdividers `a = 2` (on the `u1` side)
/// and `b = 3` (on the `u2` side), spokes `u_i = 3 + i` for `1 <= i <= s`,
/// pendants `p_i = s + 1 + i` for `3 <= i <= s`. Order `2s + 2`,
/// size `3s`; requires `s >= 3`.
pub fn gen_f1(s: usize) -> Result<Graph, FamilyError> {
    if s < 3 {
        return Err(FamilyError::InvalidParameter("f1 requires s >= 3"));
    }
    let u = |i: usize| 3 + i; // u_1 .. u_s
    let p = |i: usize| s + 1 + i; // p_3 .. p_s
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * s);
    edges.push((0, 2)); // v1 - a
    edges.push((2, u(1))); // a - u1
    edges.push((0, 3)); // v1 - b
    edges.push((3, u(2))); // b - u2
    for i in 1..=s {
        edges.push((1, u(i))); // v2 - u_i
    }
    for i in 3..=s {
        edges.push((0, u(i))); // v1 - u_i
        edges.push((u(i), p(i))); // u_i - p_i
    }
    Ok(Graph::new(2 * s + 2, &edges)?)
}

/// The tree family built from the star `K_{1,t}` by attaching a pendant
/// edge to each of the first `k` leaves.
///
/// Labeling: center `0`, leaves `1..=t`, pendant on leaf `i` is `t + i`
/// for `1 <= i <= k`. Order `1 + t + k`; requires `k <= t`.
pub fn gen_f2(t: usize, k: usize) -> Result<Graph, FamilyError> {
    if k > t {
        return Err(FamilyError::InvalidParameter("f2 requires k <= t"));
    }
    let mut edges = Vec::with_capacity(t + k);
    for i in 1..=t {
        edges.push((0, i));
    }
    for i in 1..=k {
        edges.push((i, t + i));
    }
    Ok(Graph::new(1 + t + k, &edges)?)
}

/// `K_{1,3}` with two pendant edges attached to one of its leaves.
///
/// Labeling: center `0`, leaves `1, 2, 3`, pendants `4, 5` on leaf `1`.
pub fn gen_g0() -> Graph {
    Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).expect("fixed graph")
}

/// The path `P_n` on vertices `0..n`; requires `n >= 1`.
pub fn gen_path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::InvalidParameter("path requires n >= 1"));
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges)?)
}

/// The cycle `C_n` on vertices `0..n`; requires `n >= 3`.
pub fn gen_cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParameter("cycle requires n >= 3"));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

/// The star `K_{1,t}` with center `0`.
pub fn gen_star(t: usize) -> Result<Graph, FamilyError> {
    gen_f2(t, 0)
}

/// The complete bipartite graph `K_{s,t}` with sides `0..s` and `s..s+t`.
pub fn gen_complete_bipartite(s: usize, t: usize) -> Result<Graph, FamilyError> {
    let mut edges = Vec::with_capacity(s * t);
    for i in 0..s {
        for j in 0..t {
            edges.push((i, s + j));
        }
    }
    Ok(Graph::new(s + t, &edges)?)
}

/// A triangle with `s_i` pendant edges attached to its `i`-th vertex.
///
/// Labeling: triangle `0, 1, 2`, then the pendants of vertex 0, of
/// vertex 1, and of vertex 2 in order. Order `3 + s1 + s2 + s3`.
pub fn gen_k3_pendants(s1: usize, s2: usize, s3: usize) -> Result<Graph, FamilyError> {
    let mut edges = alloc::vec![(0, 1), (1, 2), (2, 0)];
    let mut next = 3;
    for (v, count) in [(0, s1), (1, s2), (2, s3)] {
        for _ in 0..count {
            edges.push((v, next));
            next += 1;
        }
    }
    Ok(Graph::new(next, &edges)?)
}

/// A triangle with `t` pendant paths of length 2 attached to vertex 0.
///
/// Labeling: triangle `0, 1, 2`; the `j`-th path is `0 - (3+2j) - (4+2j)`.
/// Order `3 + 2t`.
pub fn gen_u_cal(t: usize) -> Result<Graph, FamilyError> {
    let mut edges = alloc::vec![(0, 1), (1, 2), (2, 0)];
    for j in 0..t {
        let mid = 3 + 2 * j;
        edges.push((0, mid));
        edges.push((mid, mid + 1));
    }
    Ok(Graph::new(3 + 2 * t, &edges)?)
}

/// `C5` on `0..5` with pendant `5` at vertex 3 and pendant `6` at vertex 2.
pub fn gen_u1() -> Graph {
    Graph::new(
        7,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5), (2, 6)],
    )
    .expect("fixed graph")
}

/// `C4` on `0..4` with three pendants `4, 5, 6` at vertex 2.
pub fn gen_u2() -> Graph {
    Graph::new(
        7,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (2, 5), (2, 6)],
    )
    .expect("fixed graph")
}

/// `C4` on `0..4` with pendants `4, 6` at vertex 2, `5` at vertex 3 and
/// `7` at vertex 1.
pub fn gen_u3() -> Graph {
    Graph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (2, 4),
            (3, 5),
            (2, 6),
            (1, 7),
        ],
    )
    .expect("fixed graph")
}

/// `C4` on `0..4` with one pendant at every cycle vertex:
/// `4` at 2, `5` at 3, `6` at 0, `7` at 1.
pub fn gen_u4() -> Graph {
    Graph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (2, 4),
            (3, 5),
            (0, 6),
            (1, 7),
        ],
    )
    .expect("fixed graph")
}

/// The Petersen graph as the Kneser graph on 2-subsets of `{0..5}`:
/// vertices are the pairs in lexicographic order, adjacency is disjointness.
pub fn gen_petersen() -> Graph {
    let mut pairs = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            pairs.push((a, b));
        }
    }
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(10, &edges).expect("fixed graph")
}

/// The Clebsch graph as the folded 5-cube: vertices are 4-bit words,
/// adjacent iff their XOR has weight 1 or is 1111.
pub fn gen_clebsch() -> Graph {
    let mut edges = Vec::new();
    for i in 0..16u32 {
        for j in i + 1..16 {
            let x = i ^ j;
            if x.count_ones() == 1 || x == 0b1111 {
                edges.push((i as usize, j as usize));
            }
        }
    }
    Graph::new(16, &edges).expect("fixed graph")
}

/// A generalized theta graph: two poles joined by internally disjoint
/// paths with the given edge lengths.
///
/// Labeling: poles `u = 0`, `v = 1`; internal vertices of each path are
/// numbered consecutively starting at 2, path by path. Requires at least
/// two paths, every length at least 1, and at most one length-1 path
/// (a second one would create a parallel edge).
pub fn gen_theta(lengths: &[usize]) -> Result<Graph, FamilyError> {
    if lengths.len() < 2 {
        return Err(FamilyError::InvalidParameter("theta requires t >= 2 paths"));
    }
    if lengths.iter().any(|&l| l == 0) {
        return Err(FamilyError::InvalidParameter("theta path lengths must be >= 1"));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(FamilyError::InvalidParameter(
            "theta admits at most one length-1 path",
        ));
    }
    let n = 2 + lengths.iter().map(|&l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(Graph::new(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_order_size_and_degrees() {
        for s in 3..=10 {
            let g = gen_f1(s).unwrap();
            assert_eq!(g.vertex_count(), 2 * s + 2);
            assert_eq!(g.edge_count(), 3 * s);
            assert!(g.is_connected());
            assert!(g.is_triangle_free());
            // Both hubs keep degree s.
            assert_eq!(g.degree(0), s);
            assert_eq!(g.degree(1), s);
        }
        assert_eq!(gen_f1(3).unwrap().girth(), Some(5));
        assert_eq!(gen_f1(4).unwrap().girth(), Some(4));
        assert!(gen_f1(2).is_err());
    }

    #[test]
    fn f2_and_g0_shapes() {
        let star = gen_f2(3, 0).unwrap();
        assert_eq!(star.vertex_count(), 4);
        assert_eq!(star.degree(0), 3);
        let g = gen_f2(4, 2).unwrap();
        assert_eq!(g.vertex_count(), 7);
        let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, [4, 2, 2, 1, 1, 1, 1]);
        assert!(gen_f2(2, 3).is_err());
        let g0 = gen_g0();
        assert_eq!((g0.vertex_count(), g0.edge_count()), (6, 5));
        assert_eq!(g0.girth(), None);
    }

    #[test]
    fn standard_families() {
        assert_eq!(gen_path(6).unwrap().edge_count(), 5);
        let c6 = gen_cycle(6).unwrap();
        assert!(c6.vertices().all(|v| c6.degree(v) == 2));
        assert!(gen_cycle(2).is_err());
        assert_eq!(gen_complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert_eq!(gen_star(0).unwrap().vertex_count(), 1);
    }

    #[test]
    fn triangle_families() {
        let g = gen_k3_pendants(3, 1, 1).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(gen_k3_pendants(0, 0, 0).unwrap().edge_count(), 3);
        let g = gen_k3_pendants(2, 2, 2).unwrap();
        assert!( [0, 1, 2].iter().all(|&v| g.degree(v) == 4));
        let u = gen_u_cal(3).unwrap();
        assert_eq!(u.vertex_count(), 9);
        assert_eq!(u.degree(0), 5);
        assert_eq!(gen_u_cal(0).unwrap().vertex_count(), 3);
        assert_eq!(gen_u_cal(1).unwrap().vertex_count(), 5);
    }

    #[test]
    fn unicyclic_u_graphs() {
        let u1 = gen_u1();
        assert_eq!(u1.girth(), Some(5));
        let u2 = gen_u2();
        assert_eq!(u2.vertices().map(|v| u2.degree(v)).max(), Some(5));
        let u4 = gen_u4();
        assert_eq!(u4.vertex_count(), 8);
        for v in 0..4 {
            assert_eq!(u4.degree(v), 3);
        }
        for v in 4..8 {
            assert_eq!(u4.degree(v), 1);
        }
        let u3 = gen_u3();
        assert_eq!(u3.edge_count(), u3.vertex_count());
    }

    #[test]
    fn petersen_and_clebsch() {
        let p = gen_petersen();
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert_eq!(p.girth(), Some(5));
        let c = gen_clebsch();
        assert!(c.vertices().all(|v| c.degree(v) == 5));
        assert!(c.is_triangle_free());
        // Non-adjacent pairs have exactly two common neighbors.
        for u in c.vertices() {
            for v in u + 1..c.vertex_count() {
                if !c.has_edge(u, v) {
                    assert_eq!((c.neighbors(u) & c.neighbors(v)).len(), 2);
                }
            }
        }
    }

    #[test]
    fn theta_graphs() {
        let c4 = gen_theta(&[2, 2]).unwrap();
        assert!(c4.is_isomorphic_to(&gen_cycle(4).unwrap()));
        let k23 = gen_theta(&[2, 2, 2]).unwrap();
        assert!(k23.is_isomorphic_to(&gen_complete_bipartite(2, 3).unwrap()));
        let t333 = gen_theta(&[3, 3, 3]).unwrap();
        assert_eq!(t333.vertex_count(), 8);
        assert_eq!(t333.girth(), Some(6));
        assert!(gen_theta(&[1, 1]).is_err());
        assert!(gen_theta(&[2]).is_err());
        assert!(gen_theta(&[1, 2]).is_ok());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(gen_f1(5).unwrap(), gen_f1(5).unwrap());
        assert_eq!(gen_petersen(), gen_petersen());
        assert_eq!(gen_clebsch(), gen_clebsch());
        assert_eq!(gen_theta(&[2, 3, 4]).unwrap(), gen_theta(&[2, 3, 4]).unwrap());
    }
}
