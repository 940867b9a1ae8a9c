//! Isomorph-free exhaustive generation of connected graphs in hereditary
//! classes.
//!
//! Level-wise augmentation: every connected graph on `n + 1` vertices has
//! a non-cut vertex, and removing it leaves a connected graph that still
//! satisfies every vertex-hereditary constraint, so attaching one new
//! vertex to every member of level `n` in every admissible way reaches
//! every member of level `n + 1`. Duplicates are removed with canonical
//! certificates; output levels are sorted by certificate, which makes the
//! result deterministic.
//!
//! The triangle-free, planarity and eigenvalue constraints are hereditary
//! and prune during generation (in increasing cost order: bit tests,
//! Euler counts, minor search, exact eigenvalue count). Tree and
//! unicyclic membership are final filters, but their edge-count
//! relaxations `e <= n - 1` and `e <= n` are hereditary and prune too.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::minor::is_planar;
use crate::spectral::lambda2_at_most_one;

/// Composable membership flags for the enumerated class.
///
/// `require_triangle_free`, `require_planar` and `require_lambda2_le_one`
/// are hereditary and used for ancestor pruning. `require_tree` and
/// `require_unicyclic` are final filters; their edge budgets prune.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassPredicate {
    pub require_triangle_free: bool,
    pub require_planar: bool,
    pub require_lambda2_le_one: bool,
    pub require_tree: bool,
    pub require_unicyclic: bool,
}

impl ClassPredicate {
    /// All connected graphs.
    pub fn connected() -> ClassPredicate {
        ClassPredicate::default()
    }

    pub fn triangle_free() -> ClassPredicate {
        ClassPredicate {
            require_triangle_free: true,
            ..ClassPredicate::default()
        }
    }

    pub fn triangle_free_planar() -> ClassPredicate {
        ClassPredicate {
            require_triangle_free: true,
            require_planar: true,
            ..ClassPredicate::default()
        }
    }

    /// Connected triangle-free planar graphs with λ2 ≤ 1.
    pub fn triangle_free_planar_lambda2() -> ClassPredicate {
        ClassPredicate {
            require_triangle_free: true,
            require_planar: true,
            require_lambda2_le_one: true,
            ..ClassPredicate::default()
        }
    }

    pub fn trees() -> ClassPredicate {
        ClassPredicate {
            require_tree: true,
            ..ClassPredicate::default()
        }
    }

    pub fn unicyclic() -> ClassPredicate {
        ClassPredicate {
            require_unicyclic: true,
            ..ClassPredicate::default()
        }
    }

    /// Extra edges allowed over a tree, as a hereditary ancestor bound;
    /// `None` when unconstrained.
    fn edge_slack(&self) -> Option<usize> {
        if self.require_tree {
            Some(0)
        } else if self.require_unicyclic {
            Some(1)
        } else {
            None
        }
    }

    /// Hereditary part of the predicate (connectivity handled separately).
    fn hereditary_ok(&self, g: &Graph) -> bool {
        if let Some(slack) = self.edge_slack() {
            if g.edge_count() + 1 > g.vertex_count() + slack {
                return false;
            }
        }
        if self.require_triangle_free && !g.is_triangle_free() {
            return false;
        }
        if self.require_planar {
            let n = g.vertex_count();
            let e = g.edge_count();
            if n >= 3 && e > 3 * n - 6 {
                return false;
            }
            if self.require_triangle_free && n >= 3 && e > 2 * n - 4 {
                return false;
            }
            if !is_planar(g) {
                return false;
            }
        }
        if self.require_lambda2_le_one && !lambda2_at_most_one(g) {
            return false;
        }
        true
    }

    /// Full membership test for a connected graph.
    pub fn accepts(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let e = g.edge_count();
        if self.require_tree && e + 1 != n {
            return false;
        }
        if self.require_unicyclic && e != n {
            return false;
        }
        self.hereditary_ok(g)
    }
}

/// Enumeration parameters. `worker_count` is a parallelism hint carried
/// for callers; the reference engine is sequential, so results never
/// depend on it.
#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub n_max: usize,
    pub predicate: ClassPredicate,
    pub worker_count: usize,
}

impl EnumerationConfig {
    pub fn new(n_max: usize, predicate: ClassPredicate) -> EnumerationConfig {
        EnumerationConfig {
            n_max,
            predicate,
            worker_count: 1,
        }
    }
}

/// Hard cap on graphs kept per level.
pub const LEVEL_LIMIT: usize = 10_000_000;

/// Errors from enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    /// A level exceeded [`LEVEL_LIMIT`] graphs.
    LevelOverflow { n: usize },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EnumerateError::LevelOverflow { n } => {
                write!(f, "level {n} exceeded {LEVEL_LIMIT} graphs")
            }
        }
    }
}

impl core::error::Error for EnumerateError {}

/// Neighbor masks for the new vertex that keep the cheap hereditary
/// constraints satisfied, in ascending mask order.
fn admissible_masks(g: &Graph, pred: &ClassPredicate) -> Vec<u64> {
    let n = g.vertex_count();
    let e = g.edge_count();
    let mut max_degree = n;
    if let Some(slack) = pred.edge_slack() {
        max_degree = (n + 1 + slack).saturating_sub(e + 1);
    }
    if max_degree == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        if mask.count_ones() as usize > max_degree {
            continue;
        }
        if pred.require_triangle_free {
            // The new vertex may not close a triangle: its neighborhood
            // must be independent.
            let mut independent = true;
            for v in VertexSet::from_mask(mask).iter() {
                if g.neighbors(v).mask() & mask != 0 {
                    independent = false;
                    break;
                }
            }
            if !independent {
                continue;
            }
        }
        out.push(mask);
    }
    out
}

/// All pairwise non-isomorphic connected one-vertex extensions of `g`
/// that satisfy the predicate's hereditary constraints.
///
/// `g` itself must be connected and satisfy them.
pub fn extend_by_one_vertex(g: &Graph, pred: &ClassPredicate) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for mask in admissible_masks(g, pred) {
        let child = g
            .with_appended_vertex(VertexSet::from_mask(mask))
            .expect("mask within range");
        if !pred.hereditary_ok(&child) {
            continue;
        }
        seen.entry(child.canonical_form()).or_insert(child);
    }
    seen.into_values().collect()
}

/// Per-order lists of all connected graphs satisfying the predicate, one
/// representative per isomorphism class, each level sorted by certificate.
///
/// `out[k]` holds the graphs on `k + 1` vertices.
pub fn enumerate_connected(config: &EnumerationConfig) -> Result<Vec<Vec<Graph>>, EnumerateError> {
    let mut output: Vec<Vec<Graph>> = Vec::new();
    if config.n_max == 0 {
        return Ok(output);
    }
    let pred = &config.predicate;
    let k1 = Graph::new(1, &[]).expect("K1");
    let mut frontier: Vec<Graph> = if pred.hereditary_ok(&k1) {
        alloc::vec![k1]
    } else {
        Vec::new()
    };
    output.push(frontier.iter().filter(|g| pred.accepts(g)).cloned().collect());
    for n in 2..=config.n_max {
        // Cheap masks first, certificate dedup, then the expensive
        // hereditary filters once per isomorphism class.
        let mut level: BTreeMap<crate::canon::CanonicalCert, Graph> = BTreeMap::new();
        for parent in &frontier {
            for mask in admissible_masks(parent, pred) {
                let child = parent
                    .with_appended_vertex(VertexSet::from_mask(mask))
                    .expect("mask within range");
                if level.len() >= LEVEL_LIMIT {
                    return Err(EnumerateError::LevelOverflow { n });
                }
                level.entry(child.canonical_form()).or_insert(child);
            }
        }
        let survivors: Vec<Graph> = level
            .into_values()
            .filter(|g| pred.hereditary_ok(g))
            .collect();
        output.push(survivors.iter().filter(|g| pred.accepts(g)).cloned().collect());
        frontier = survivors;
    }
    Ok(output)
}

/// All trees, one per isomorphism class, per order.
pub fn enumerate_trees(n_max: usize) -> Result<Vec<Vec<Graph>>, EnumerateError> {
    enumerate_connected(&EnumerationConfig::new(n_max, ClassPredicate::trees()))
}

/// All unicyclic graphs (connected, `e = n`), one per isomorphism class,
/// per order.
pub fn enumerate_unicyclic(n_max: usize) -> Result<Vec<Vec<Graph>>, EnumerateError> {
    enumerate_connected(&EnumerationConfig::new(n_max, ClassPredicate::unicyclic()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_complete_bipartite, gen_cycle};

    #[test]
    fn single_vertex_extensions() {
        let k1 = Graph::new(1, &[]).unwrap();
        let ext = extend_by_one_vertex(&k1, &ClassPredicate::triangle_free());
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0].edge_count(), 1);
        let k2 = &ext[0];
        let ext2 = extend_by_one_vertex(k2, &ClassPredicate::triangle_free());
        // K3 is filtered out, P3 remains.
        assert_eq!(ext2.len(), 1);
        assert_eq!(ext2[0].edge_count(), 2);
        let unrestricted = extend_by_one_vertex(k2, &ClassPredicate::connected());
        assert_eq!(unrestricted.len(), 2);
    }

    #[test]
    fn c4_extensions_contain_banner_and_k23() {
        let c4 = gen_cycle(4).unwrap();
        let ext = extend_by_one_vertex(&c4, &ClassPredicate::triangle_free_planar_lambda2());
        let k23 = gen_complete_bipartite(2, 3).unwrap();
        assert!(ext.iter().any(|g| g.is_isomorphic_to(&k23)));
        let banner = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert!(ext.iter().any(|g| g.is_isomorphic_to(&banner)));
        assert!(ext.iter().all(|g| g.is_triangle_free()));
    }

    #[test]
    fn census_of_target_class_up_to_4() {
        let config = EnumerationConfig::new(4, ClassPredicate::triangle_free_planar_lambda2());
        let levels = enumerate_connected(&config).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 1, 1, 3]);
    }

    #[test]
    fn contradictory_predicate_is_empty() {
        let pred = ClassPredicate {
            require_tree: true,
            require_unicyclic: true,
            ..ClassPredicate::default()
        };
        let levels = enumerate_connected(&EnumerationConfig::new(5, pred)).unwrap();
        assert!(levels.iter().all(Vec::is_empty));
    }

    #[test]
    fn tree_and_unicyclic_counts() {
        let trees = enumerate_trees(6).unwrap();
        let counts: Vec<usize> = trees.iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6]);
        let uni = enumerate_unicyclic(5).unwrap();
        let counts: Vec<usize> = uni.iter().map(Vec::len).collect();
        assert_eq!(counts, [0, 0, 1, 2, 5]);
    }

    #[test]
    fn zero_levels() {
        let levels =
            enumerate_connected(&EnumerationConfig::new(0, ClassPredicate::connected())).unwrap();
        assert!(levels.is_empty());
    }
}
