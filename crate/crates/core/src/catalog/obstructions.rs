//! Mining of minimal spectral obstructions: connected graphs in a
//! hereditary base class with λ2 > 1 all of whose proper induced
//! subgraphs satisfy λ2 <= 1.
//!
//! Because λ2 <= 1 is closed under induced subgraphs, checking the n
//! one-vertex-deleted subgraphs (which may be disconnected — the
//! multiplicity-aware eigenvalue count handles that) is equivalent to
//! checking every proper induced subgraph. Tests re-verify reported
//! obstructions against the full subset enumeration anyway.

use alloc::vec::Vec;

use crate::enumerate::{enumerate_connected, ClassPredicate, EnumerateError, EnumerationConfig};
use crate::graph::Graph;
use crate::spectral::count_eigenvalues_greater_than;

/// One minimal obstruction with its eigenvalue certificate.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub graph: Graph,
    /// Number of eigenvalues above 1 (at least 2 by construction).
    pub eigenvalues_above_one: usize,
}

/// All minimal obstructions up to `n_max` vertices, ordered by order and
/// then canonical certificate.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub n_max: usize,
    pub base: ClassPredicate,
    pub obstructions: Vec<Obstruction>,
}

impl ObstructionReport {
    /// Obstructions on exactly `n` vertices.
    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &Obstruction> {
        self.obstructions
            .iter()
            .filter(move |o| o.graph.vertex_count() == n)
    }
}

/// Mines the minimal obstructions for the triangle-free (optionally
/// planar) class. The λ2 flag and the final filters of `base` are
/// ignored: the point is to search outside the eigenvalue bound.
pub fn minimal_spectral_obstructions(
    n_max: usize,
    base: &ClassPredicate,
) -> Result<ObstructionReport, EnumerateError> {
    let pred = ClassPredicate {
        require_triangle_free: base.require_triangle_free,
        require_planar: base.require_planar,
        ..ClassPredicate::default()
    };
    let levels = enumerate_connected(&EnumerationConfig::new(n_max, pred))?;
    let mut obstructions = Vec::new();
    for level in &levels {
        for g in level {
            let above = count_eigenvalues_greater_than(g, 1);
            if above <= 1 {
                continue;
            }
            let minimal = g
                .vertices()
                .all(|v| count_eigenvalues_greater_than(&g.without_vertex(v), 1) <= 1);
            if minimal {
                obstructions.push(Obstruction {
                    graph: g.clone(),
                    eigenvalues_above_one: above,
                });
            }
        }
    }
    Ok(ObstructionReport {
        n_max,
        base: pred,
        obstructions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_path;

    #[test]
    fn p6_is_a_minimal_obstruction() {
        let report = minimal_spectral_obstructions(6, &ClassPredicate::triangle_free()).unwrap();
        let p6 = gen_path(6).unwrap();
        assert!(report
            .obstructions
            .iter()
            .any(|o| o.graph.is_isomorphic_to(&p6)));
        // Nothing smaller qualifies.
        for n in 1..=5 {
            assert_eq!(report.of_order(n).count(), 0, "order {n}");
        }
    }
}
