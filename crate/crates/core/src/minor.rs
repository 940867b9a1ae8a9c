//! Minor containment with branch-set witnesses, and planarity via the
//! forbidden minors `K5` and `K3,3`.
//!
//! A minor model assigns every target vertex a branch set: pairwise
//! disjoint host vertex sets, each inducing a connected subgraph, with at
//! least one host edge between the branch sets of every target edge. The
//! search places branch sets one target vertex at a time (in a BFS order
//! of the target, so each new set must attach to an already placed one)
//! and enumerates candidate sets as connected subsets of the free
//! vertices, each exactly once via the usual banned-seed scheme. For the
//! vertex-transitive targets used by the planarity test, branch sets are
//! additionally forced to have increasing minima along symmetry orbits,
//! which cuts the exhaustive (planar) case by the automorphism count.
//!
//! Cheap necessary conditions run first: minors can never gain vertices,
//! edges, or cycle rank, and planar graphs obey the Euler bounds
//! `e <= 3n - 6` (and `e <= 2n - 4` when triangle-free).

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// Branch sets of a minor model, indexed by target vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    pub fn branch_sets(&self) -> &[VertexSet] {
        &self.branch_sets
    }

    /// Re-checks the model from scratch: disjoint nonempty connected
    /// branch sets inside the host, linked along every target edge.
    pub fn verify(&self, host: &Graph, target: &Graph) -> bool {
        if self.branch_sets.len() != target.vertex_count() {
            return false;
        }
        let full = host.full_vertex_set();
        let mut seen = VertexSet::EMPTY;
        for &b in &self.branch_sets {
            if b.is_empty() || !b.is_subset_of(full) || !seen.is_disjoint(b) {
                return false;
            }
            if !host.induced_subgraph(b).is_connected() {
                return false;
            }
            seen = seen | b;
        }
        for (i, j) in target.edges() {
            match host.edges_between(self.branch_sets[i], self.branch_sets[j]) {
                Ok(c) if c >= 1 => {}
                _ => return false,
            }
        }
        true
    }
}

/// `K5` on vertices `0..5`.
pub fn k5() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            edges.push((i, j));
        }
    }
    Graph::new(5, &edges).expect("fixed graph")
}

/// `K3,3` with sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    crate::families::gen_complete_bipartite(3, 3).expect("fixed graph")
}

/// Cycle rank (first Betti number) of the largest host component.
fn max_component_cycle_rank(g: &Graph) -> usize {
    g.connected_components()
        .into_iter()
        .map(|c| {
            let sub = g.induced_subgraph(c);
            sub.edge_count() + 1 - sub.vertex_count()
        })
        .max()
        .unwrap_or(0)
}

struct MinorSearch<'a> {
    host: &'a Graph,
    /// Earlier positions each position must link to.
    required: Vec<Vec<usize>>,
    /// Position whose branch-set minimum bounds this one from below.
    floors: Vec<Option<usize>>,
    sets: Vec<u64>,
    mins: Vec<usize>,
    t: usize,
}

impl<'a> MinorSearch<'a> {
    fn place(&mut self, i: usize, free: u64) -> bool {
        if i == self.t {
            return true;
        }
        let avail = match self.floors[i] {
            Some(j) => free & !VertexSet::all_below(self.mins[j] + 1).mask(),
            None => free,
        };
        // Later branch sets draw from `free` (their own floors may sit
        // below this one), so the size budget comes from `free`.
        let later_needs = self.t - i - 1;
        let budget = (free.count_ones() as usize).saturating_sub(later_needs);
        if budget == 0 || avail == 0 {
            return false;
        }
        let seed_pool = if self.required[i].is_empty() {
            avail
        } else {
            let j0 = self.required[i][0];
            let mut nbr = 0u64;
            for v in VertexSet::from_mask(self.sets[j0]).iter() {
                nbr |= self.host.neighbors(v).mask();
            }
            nbr & avail
        };
        let mut banned = 0u64;
        for s in VertexSet::from_mask(seed_pool).iter() {
            let cur = 1u64 << s;
            let nbr = self.host.neighbors(s).mask();
            if self.grow(i, free, avail & !banned, cur, nbr, budget) {
                return true;
            }
            banned |= cur;
        }
        false
    }

    /// Extends branch set `cur` (with host neighborhood `nbr`) by every
    /// admissible superset, trying each completed candidate.
    fn grow(&mut self, i: usize, free: u64, avail: u64, cur: u64, nbr: u64, budget: usize) -> bool {
        if self.linked(i, cur) {
            self.sets[i] = cur;
            self.mins[i] = cur.trailing_zeros() as usize;
            if self.place(i + 1, free & !cur) {
                return true;
            }
        }
        if (cur.count_ones() as usize) >= budget {
            return false;
        }
        let cand = nbr & avail & !cur;
        let mut banned = 0u64;
        for v in VertexSet::from_mask(cand).iter() {
            let bit = 1u64 << v;
            if self.grow(
                i,
                free,
                avail & !banned,
                cur | bit,
                nbr | self.host.neighbors(v).mask(),
                budget,
            ) {
                return true;
            }
            banned |= bit;
        }
        false
    }

    fn linked(&self, i: usize, cur: u64) -> bool {
        self.required[i].iter().all(|&j| {
            let other = self.sets[j];
            VertexSet::from_mask(cur)
                .iter()
                .any(|v| self.host.neighbors(v).mask() & other != 0)
        })
    }
}

/// BFS order of the target from vertex 0 (falls back to index order for
/// vertices unreachable from 0).
fn bfs_order(target: &Graph) -> Vec<usize> {
    let n = target.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = alloc::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in target.neighbors(v).iter() {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

fn search_with_floors(
    host: &Graph,
    target: &Graph,
    floors: Vec<Option<usize>>,
) -> Option<MinorWitness> {
    let t = target.vertex_count();
    if t == 0 {
        return Some(MinorWitness {
            branch_sets: Vec::new(),
        });
    }
    if t > host.vertex_count() || target.edge_count() > host.edge_count() {
        return None;
    }
    if target.is_connected()
        && target.edge_count() + 1 - t > max_component_cycle_rank(host)
    {
        return None;
    }
    let order = bfs_order(target);
    let required: Vec<Vec<usize>> = (0..t)
        .map(|i| {
            (0..i)
                .filter(|&j| target.has_edge(order[i], order[j]))
                .collect()
        })
        .collect();
    let mut search = MinorSearch {
        host,
        required,
        floors,
        sets: vec![0; t],
        mins: vec![0; t],
        t,
    };
    if search.place(0, host.full_vertex_set().mask()) {
        let mut branch_sets = vec![VertexSet::EMPTY; t];
        for (pi, &v) in order.iter().enumerate() {
            branch_sets[v] = VertexSet::from_mask(search.sets[pi]);
        }
        let w = MinorWitness { branch_sets };
        debug_assert!(w.verify(host, target));
        Some(w)
    } else {
        None
    }
}

/// Tests whether `target` is a minor of `host`; returns branch sets on
/// success. Intended for small fixed targets; arbitrary targets work but
/// only desk-scale performance is promised.
pub fn has_minor(host: &Graph, target: &Graph) -> Option<MinorWitness> {
    let floors = vec![None; target.vertex_count()];
    search_with_floors(host, target, floors)
}

/// Which forbidden minor witnesses non-planarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenMinor {
    K5,
    K33,
}

/// Planarity result; non-planar graphs carry a forbidden-minor witness.
#[derive(Clone, Debug)]
pub enum Planarity {
    Planar,
    NonPlanar {
        kind: ForbiddenMinor,
        witness: MinorWitness,
    },
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar)
    }
}

/// Floors for K5 under BFS order: complete symmetry, so branch-set
/// minima increase along the order.
fn k5_floors() -> Vec<Option<usize>> {
    vec![None, Some(0), Some(1), Some(2), Some(3)]
}

/// Host reduced for searches whose targets have minimum degree 3:
/// vertices of degree at most 1 are deleted and degree-2 vertices are
/// suppressed, neither of which can change the existence of a `K5` or
/// `K3,3` model. `lift[v]` is the set of original vertices merged into
/// the reduced vertex `v`, so witnesses translate back exactly.
struct ReducedHost {
    graph: Graph,
    lift: Vec<VertexSet>,
}

fn reduce_for_cubic_targets(g: &Graph) -> ReducedHost {
    let n = g.vertex_count();
    let mut adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).mask()).collect();
    let mut lift: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    let mut alive = VertexSet::all_below(n).mask();
    loop {
        let mut changed = false;
        for v in VertexSet::from_mask(alive).iter() {
            let deg = (adj[v] & alive).count_ones();
            if deg <= 1 {
                for u in VertexSet::from_mask(adj[v] & alive).iter() {
                    adj[u] &= !(1 << v);
                }
                alive &= !(1 << v);
                changed = true;
            } else if deg == 2 {
                let mut nbrs = VertexSet::from_mask(adj[v] & alive).iter();
                let a = nbrs.next().expect("degree 2");
                let b = nbrs.next().expect("degree 2");
                adj[a] &= !(1 << v);
                adj[b] &= !(1 << v);
                alive &= !(1 << v);
                if adj[a] >> b & 1 == 0 {
                    // Suppress: contract v into a, creating the edge ab.
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    lift[a] |= lift[v];
                }
                // If a and b were already adjacent the 2-path through v
                // is parallel to the edge ab and v is simply dropped.
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let kept: Vec<usize> = VertexSet::from_mask(alive).iter().collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for &v in &kept {
        for u in VertexSet::from_mask(adj[v] & alive).iter() {
            if u > v {
                edges.push((index[v], index[u]));
            }
        }
    }
    ReducedHost {
        graph: Graph::new(kept.len(), &edges).expect("reduction keeps a valid graph"),
        lift: kept
            .iter()
            .map(|&v| VertexSet::from_mask(lift[v]))
            .collect(),
    }
}

fn lift_witness(w: MinorWitness, reduced: &ReducedHost) -> MinorWitness {
    let branch_sets = w
        .branch_sets
        .iter()
        .map(|b| {
            b.iter()
                .fold(VertexSet::EMPTY, |acc, v| acc | reduced.lift[v])
        })
        .collect();
    MinorWitness { branch_sets }
}

/// Floors for K3,3 with our labeling (sides {0,1,2} / {3,4,5}).
///
/// BFS from 0 visits 0, then 3, 4, 5, then 1, 2. The stabilizer of the
/// first branch set permutes {3,4,5} and {1,2} freely, and the whole
/// graph is vertex-transitive, so position 0 holds the global minimum.
fn k33_floors() -> Vec<Option<usize>> {
    vec![None, Some(0), Some(1), Some(2), Some(0), Some(4)]
}

/// Euler-count necessary conditions for planarity, per component.
fn euler_bounds_ok(g: &Graph) -> bool {
    for c in g.connected_components() {
        let sub = g.induced_subgraph(c);
        let n = sub.vertex_count();
        let e = sub.edge_count();
        if n >= 3 {
            if e > 3 * n - 6 {
                return false;
            }
            if sub.is_triangle_free() && e > 2 * n - 4 {
                return false;
            }
        }
    }
    true
}

/// Decides planarity by searching for `K5` and `K3,3` minors; always
/// produces a witness on the non-planar side.
pub fn check_planarity(g: &Graph) -> Planarity {
    let reduced = reduce_for_cubic_targets(g);
    if let Some(witness) = search_with_floors(&reduced.graph, &k5(), k5_floors()) {
        let witness = lift_witness(witness, &reduced);
        debug_assert!(witness.verify(g, &k5()));
        return Planarity::NonPlanar {
            kind: ForbiddenMinor::K5,
            witness,
        };
    }
    if let Some(witness) = search_with_floors(&reduced.graph, &k33(), k33_floors()) {
        let witness = lift_witness(witness, &reduced);
        debug_assert!(witness.verify(g, &k33()));
        return Planarity::NonPlanar {
            kind: ForbiddenMinor::K33,
            witness,
        };
    }
    Planarity::Planar
}

/// True iff `g` has neither a `K5` nor a `K3,3` minor.
pub fn is_planar(g: &Graph) -> bool {
    if !euler_bounds_ok(g) {
        return false;
    }
    check_planarity(g).is_planar()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        gen_clebsch, gen_cycle, gen_f1, gen_f2, gen_g0, gen_petersen, gen_u1, gen_u2, gen_u3,
        gen_u4,
    };

    #[test]
    fn identity_and_trivial_cases() {
        let k33 = k33();
        let w = has_minor(&k33, &k33).expect("identity model");
        assert!(w.verify(&k33, &k33));
        assert!(w.branch_sets().iter().all(|b| b.len() == 1));
        let c6 = gen_cycle(6).unwrap();
        assert!(has_minor(&c6, &k33).is_none());
        let k0 = Graph::empty(0).unwrap();
        assert!(has_minor(&c6, &k0).is_some());
    }

    #[test]
    fn petersen_has_k5_minor() {
        let p = gen_petersen();
        let w = has_minor(&p, &k5()).expect("contract the spokes");
        assert!(w.verify(&p, &k5()));
        assert!(!is_planar(&p));
    }

    #[test]
    fn planarity_spot_checks() {
        assert!(!is_planar(&k5()));
        assert!(!is_planar(&k33()));
        assert!(!is_planar(&gen_clebsch()));
        for s in 3..=10 {
            assert!(is_planar(&gen_f1(s).unwrap()));
        }
        assert!(is_planar(&gen_g0()));
        assert!(is_planar(&gen_f2(5, 3).unwrap()));
        for u in [gen_u1(), gen_u2(), gen_u3(), gen_u4()] {
            assert!(is_planar(&u));
        }
        match check_planarity(&k5()) {
            Planarity::NonPlanar { kind, witness } => {
                assert_eq!(kind, ForbiddenMinor::K5);
                assert!(witness.verify(&k5(), &k5()));
            }
            Planarity::Planar => panic!("K5 is not planar"),
        }
    }

    #[test]
    fn minor_is_edge_monotone() {
        // C6 plus a long chord has no K4 minor; adding more edges only
        // ever adds minors.
        let host = gen_cycle(6).unwrap();
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(has_minor(&host, &k4).is_none());
        let mut edges = host.edges();
        edges.push((0, 3));
        edges.push((1, 4));
        edges.push((2, 5));
        let dense = Graph::new(6, &edges).unwrap();
        assert!(has_minor(&dense, &k4).is_some()); // K3,3 actually
        assert!(!is_planar(&dense));
    }
}
