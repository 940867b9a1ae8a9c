//! Decomposition of a graph around a chosen shortest cycle.
//!
//! Vertices outside the base cycle are classified by their attachment
//! set, the set of base vertices they are adjacent to. A shortest cycle
//! is always induced (a chord would close a shorter cycle), so a cycle is
//! identified by its vertex set, and ties between shortest cycles break
//! to the lexicographically least sorted vertex sequence.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::CatalogError;
use crate::graph::{Graph, VertexSet};

/// A base cycle plus the attachment classification of all other vertices.
#[derive(Clone, Debug)]
pub struct BaseCycleDecomposition {
    base: Vec<usize>,
    t0: VertexSet,
    t1: VertexSet,
    t2: VertexSet,
    ts_map: BTreeMap<VertexSet, VertexSet>,
}

impl BaseCycleDecomposition {
    /// Decomposes around the lexicographically first shortest cycle.
    pub fn compute(g: &Graph) -> Result<BaseCycleDecomposition, CatalogError> {
        let cycles = all_shortest_cycles(g).ok_or(CatalogError::AcyclicInput)?;
        Ok(BaseCycleDecomposition::around_cycle(g, &cycles[0]))
    }

    /// Decomposes around a specific base cycle (ordered vertex list).
    pub fn around_cycle(g: &Graph, cycle: &[usize]) -> BaseCycleDecomposition {
        let base_set: VertexSet = cycle.iter().copied().collect();
        let mut ts_map: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
        let mut by_count = [VertexSet::EMPTY; 3];
        for v in g.vertices() {
            if base_set.contains(v) {
                continue;
            }
            let attach = g.neighbors(v) & base_set;
            ts_map
                .entry(attach)
                .and_modify(|s| *s = s.with(v))
                .or_insert_with(|| VertexSet::singleton(v));
            if attach.len() <= 2 {
                by_count[attach.len()] = by_count[attach.len()].with(v);
            }
        }
        BaseCycleDecomposition {
            base: cycle.to_vec(),
            t0: by_count[0],
            t1: by_count[1],
            t2: by_count[2],
            ts_map,
        }
    }

    /// The base cycle in traversal order.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn base_set(&self) -> VertexSet {
        self.base.iter().copied().collect()
    }

    /// Outside vertices adjacent to no base vertex.
    pub fn t0(&self) -> VertexSet {
        self.t0
    }

    /// Outside vertices adjacent to exactly one base vertex.
    pub fn t1(&self) -> VertexSet {
        self.t1
    }

    /// Outside vertices adjacent to exactly two base vertices.
    pub fn t2(&self) -> VertexSet {
        self.t2
    }

    /// Outside vertices adjacent to three or more base vertices.
    pub fn higher_attachment(&self, g: &Graph) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in g.vertices() {
            if self.base_set().contains(v) {
                continue;
            }
            if (g.neighbors(v) & self.base_set()).len() >= 3 {
                out = out.with(v);
            }
        }
        out
    }

    /// Vertices with attachment set exactly `s` (a set of base vertices).
    pub fn t_s(&self, s: VertexSet) -> VertexSet {
        self.ts_map.get(&s).copied().unwrap_or(VertexSet::EMPTY)
    }

    /// Vertices attached exactly to the single base vertex at `pos`.
    pub fn t_x(&self, pos: usize) -> VertexSet {
        self.t_s(VertexSet::singleton(self.base[pos % self.base.len()]))
    }

    /// All attachment patterns that actually occur.
    pub fn ts_map(&self) -> &BTreeMap<VertexSet, VertexSet> {
        &self.ts_map
    }
}

/// All shortest cycles, each an ordered vertex list starting at its least
/// vertex and proceeding toward its smaller neighbor; the list is sorted
/// by sorted vertex sequence, so the first entry is the canonical base.
/// `None` for forests.
pub fn all_shortest_cycles(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let girth = g.girth()?;
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    // Anchored DFS: enumerate cycles whose least vertex is the anchor.
    for anchor in g.vertices() {
        let mut path = alloc::vec![anchor];
        let mut on_path = VertexSet::singleton(anchor);
        dfs_cycles(g, anchor, girth, &mut path, &mut on_path, &mut found);
    }
    let mut sets: Vec<VertexSet> = found.into_iter().collect();
    sets.sort_by_key(|s| s.iter().collect::<Vec<usize>>());
    let cycles: Vec<Vec<usize>> = sets.into_iter().map(|s| order_cycle(g, s)).collect();
    if cycles.is_empty() {
        None
    } else {
        Some(cycles)
    }
}

fn dfs_cycles(
    g: &Graph,
    anchor: usize,
    girth: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    found: &mut BTreeSet<VertexSet>,
) {
    let last = *path.last().expect("path nonempty");
    if path.len() == girth {
        if g.has_edge(last, anchor) {
            found.insert(*on_path);
        }
        return;
    }
    for next in g.neighbors(last).iter() {
        if next <= anchor || on_path.contains(next) {
            continue;
        }
        path.push(next);
        *on_path = on_path.with(next);
        dfs_cycles(g, anchor, girth, path, on_path, found);
        path.pop();
        *on_path = on_path.without(next);
    }
}

/// Orders a (shortest, hence induced) cycle's vertex set deterministically.
fn order_cycle(g: &Graph, set: VertexSet) -> Vec<usize> {
    let start = set.min_element().expect("cycle is nonempty");
    let mut order = alloc::vec![start];
    let mut used = VertexSet::singleton(start);
    let first = (g.neighbors(start) & set)
        .iter()
        .next()
        .expect("cycle vertex has two neighbors in the cycle");
    order.push(first);
    used = used.with(first);
    loop {
        let here = *order.last().expect("nonempty");
        let next = (g.neighbors(here) & set) - used;
        match next.min_element() {
            Some(v) => {
                order.push(v);
                used = used.with(v);
            }
            None => break,
        }
    }
    debug_assert_eq!(order.len(), set.len());
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_complete_bipartite, gen_cycle, gen_f1, gen_path};

    #[test]
    fn c4_has_empty_outside() {
        let c4 = gen_cycle(4).unwrap();
        let d = BaseCycleDecomposition::compute(&c4).unwrap();
        assert_eq!(d.base(), &[0, 1, 2, 3]);
        assert!(d.t0().is_empty() && d.t1().is_empty() && d.t2().is_empty());
    }

    #[test]
    fn k23_outside_is_one_t2_vertex() {
        let k23 = gen_complete_bipartite(2, 3).unwrap();
        let d = BaseCycleDecomposition::compute(&k23).unwrap();
        assert_eq!(d.base().len(), 4);
        assert_eq!(d.t2().len(), 1);
        assert!(d.t0().is_empty() && d.t1().is_empty());
    }

    #[test]
    fn f1_decompositions() {
        // s = 4: the only 4-cycle is v1-u3-v2-u4; everything else attaches
        // to at most one base vertex.
        let f14 = gen_f1(4).unwrap();
        let d = BaseCycleDecomposition::compute(&f14).unwrap();
        assert_eq!(d.base().len(), 4);
        assert!(d.t2().is_empty());
        assert_eq!(d.t1().len(), 6);
        assert!(d.t0().is_empty());
        // s = 5: the fifth spoke lands in T2, its pendant in T0.
        let f15 = gen_f1(5).unwrap();
        let d = BaseCycleDecomposition::compute(&f15).unwrap();
        assert_eq!(d.t2().len(), 1);
        assert_eq!(d.t0().len(), 1);
        assert!(d.higher_attachment(&f15).is_empty());
    }

    #[test]
    fn acyclic_input_is_an_error() {
        let p4 = gen_path(4).unwrap();
        assert_eq!(
            BaseCycleDecomposition::compute(&p4).unwrap_err(),
            CatalogError::AcyclicInput
        );
    }

    #[test]
    fn shortest_cycle_enumeration() {
        // K_{2,3} has three 4-cycles.
        let k23 = gen_complete_bipartite(2, 3).unwrap();
        let cycles = all_shortest_cycles(&k23).unwrap();
        assert_eq!(cycles.len(), 3);
        // The canonical base is the lexicographically least vertex set.
        assert_eq!(
            cycles[0].iter().copied().collect::<alloc::collections::BTreeSet<_>>(),
            [0, 1, 2, 3].into_iter().collect()
        );
    }
}
