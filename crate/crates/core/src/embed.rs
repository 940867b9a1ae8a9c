//! Induced-subgraph embedding with verifiable witnesses.
//!
//! The search is a straightforward backtracking over pattern vertices in
//! index order with bit-mask candidate filtering: every already-mapped
//! pattern vertex constrains the candidates of the next one through both
//! its adjacencies and its non-adjacencies (the induced condition), so
//! candidate sets shrink to near nothing after a few assignments. The
//! first witness in lexicographic order is returned, which makes reports
//! reproducible.

use alloc::vec;
use alloc::vec::Vec;

use crate::families::gen_f1;
use crate::graph::{Graph, VertexSet};

/// An injective map from pattern vertices to host vertices such that
/// pattern vertices are adjacent exactly when their images are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingWitness {
    map: Vec<usize>,
}

impl EmbeddingWitness {
    /// `map()[p]` is the host vertex carrying pattern vertex `p`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Re-checks the witness from scratch: injectivity, range, and the
    /// induced condition for every pattern pair.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.vertex_count() {
            return false;
        }
        let mut used = VertexSet::EMPTY;
        for &h in &self.map {
            if h >= host.vertex_count() || used.contains(h) {
                return false;
            }
            used = used.with(h);
        }
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if pattern.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds an induced embedding of `pattern` into `host`, if one exists.
///
/// Patterns on 0 or 1 vertices embed into any host of sufficient order.
pub fn induced_embeds(pattern: &Graph, host: &Graph) -> Option<EmbeddingWitness> {
    let np = pattern.vertex_count();
    let nh = host.vertex_count();
    if np > nh {
        return None;
    }
    let host_full = host.full_vertex_set().mask();
    let mut map = vec![usize::MAX; np];
    let mut used = 0u64;

    fn descend(
        pattern: &Graph,
        host: &Graph,
        host_full: u64,
        map: &mut Vec<usize>,
        used: &mut u64,
        k: usize,
    ) -> bool {
        if k == map.len() {
            return true;
        }
        let mut cand = host_full & !*used;
        for q in 0..k {
            let row = host.neighbors(map[q]).mask();
            if pattern.has_edge(k, q) {
                cand &= row;
            } else {
                cand &= !row;
            }
            if cand == 0 {
                return false;
            }
        }
        let need = pattern.degree(k);
        for h in VertexSet::from_mask(cand).iter() {
            if host.degree(h) < need {
                continue;
            }
            map[k] = h;
            *used |= 1 << h;
            if descend(pattern, host, host_full, map, used, k + 1) {
                return true;
            }
            *used &= !(1 << h);
            map[k] = usize::MAX;
        }
        false
    }

    if descend(pattern, host, host_full, &mut map, &mut used, 0) {
        let w = EmbeddingWitness { map };
        debug_assert!(w.verify(pattern, host));
        Some(w)
    } else {
        None
    }
}

/// Smallest `s >= 3` such that `g` embeds induced into the `K_{2,s}`-based
/// planar family member, together with a witness.
///
/// Searching `s` up to the order of `g` is enough: an embedding uses at
/// most `n(g)` spokes, and dropping an unused spoke together with its
/// pendant turns the family member for `s + 1` into the one for `s`.
pub fn is_f1_embeddable(g: &Graph) -> Option<(usize, EmbeddingWitness)> {
    let n = g.vertex_count();
    let s_max = n.max(3);
    for s in 3..=s_max {
        if 2 * s + 2 < n {
            continue;
        }
        let host = gen_f1(s).expect("s >= 3");
        if let Some(w) = induced_embeds(g, &host) {
            return Some((s, w));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_cycle, gen_f2, gen_g0, gen_path, gen_star};

    #[test]
    fn small_positive_and_negative_cases() {
        let p3 = gen_path(3).unwrap();
        let c4 = gen_cycle(4).unwrap();
        assert!(induced_embeds(&p3, &c4).is_some());
        // C4 never embeds into a tree.
        let tree = gen_f2(4, 3).unwrap();
        assert!(induced_embeds(&c4, &tree).is_none());
        // P4 is an induced path of C6 but P6 is not.
        let c6 = gen_cycle(6).unwrap();
        assert!(induced_embeds(&gen_path(4).unwrap(), &c6).is_some());
        assert!(induced_embeds(&gen_path(6).unwrap(), &c6).is_none());
    }

    #[test]
    fn degenerate_patterns_embed() {
        let host = gen_cycle(5).unwrap();
        let k0 = Graph::empty(0).unwrap();
        let k1 = Graph::new(1, &[]).unwrap();
        assert!(induced_embeds(&k0, &host).is_some());
        assert!(induced_embeds(&k1, &host).is_some());
        assert!(induced_embeds(&k1, &k0).is_none());
    }

    #[test]
    fn witness_is_lexicographically_first_and_valid() {
        let p2 = gen_path(2).unwrap();
        let c4 = gen_cycle(4).unwrap();
        let w = induced_embeds(&p2, &c4).unwrap();
        assert_eq!(w.map(), &[0, 1]);
        assert!(w.verify(&p2, &c4));
        assert!(!w.verify(&gen_path(3).unwrap(), &c4));
    }

    #[test]
    fn c6_and_g0_embed_into_f1() {
        let c6 = gen_cycle(6).unwrap();
        let (s, w) = is_f1_embeddable(&c6).expect("C6 embeds");
        assert_eq!(s, 3);
        assert!(w.verify(&c6, &gen_f1(3).unwrap()));
        let g0 = gen_g0();
        assert!(is_f1_embeddable(&g0).is_some());
        let c5 = gen_cycle(5).unwrap();
        let (s, _) = is_f1_embeddable(&c5).expect("C5 embeds");
        assert_eq!(s, 3);
    }

    #[test]
    fn long_induced_paths_block_f1_membership() {
        // A spider containing an induced P6.
        let spider = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6)],
        )
        .unwrap();
        assert!(induced_embeds(&gen_path(6).unwrap(), &spider).is_some());
        assert!(is_f1_embeddable(&spider).is_none());
        // Plain stars always embed.
        assert!(is_f1_embeddable(&gen_star(4).unwrap()).is_some());
    }
}
