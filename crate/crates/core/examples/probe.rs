//! Scratch probe for pipeline timing and derived quantities.

use std::time::Instant;

use spectra_core::catalog::{
    derive_maximal_sporadics, minimal_spectral_obstructions, verify_main_characterization,
    verify_tree_characterization, verify_unicyclic_characterization,
};
use spectra_core::enumerate::ClassPredicate;
use spectra_core::graph6;

fn main() {
    let t = Instant::now();
    let obs = minimal_spectral_obstructions(7, &ClassPredicate::triangle_free()).unwrap();
    println!(
        "obstructions tf n<=7: {} found in {:?}",
        obs.obstructions.len(),
        t.elapsed()
    );
    for o in &obs.obstructions {
        println!(
            "  n={} g6={} above={}",
            o.graph.vertex_count(),
            graph6::encode(&o.graph),
            o.eigenvalues_above_one
        );
    }

    let t = Instant::now();
    let trees = verify_tree_characterization(12).unwrap();
    println!(
        "trees n<=12: members={:?} findings={} in {:?}",
        trees.members_per_n,
        trees.findings.len(),
        t.elapsed()
    );

    let t = Instant::now();
    let uni = verify_unicyclic_characterization(10).unwrap();
    println!(
        "unicyclic n<=10: members={:?} findings={} in {:?}",
        uni.members_per_n,
        uni.findings.len(),
        t.elapsed()
    );
    for f in uni.findings.iter().take(10) {
        println!("  finding {} {} {}", f.graph6, f.kind.as_str(), f.details);
    }

    for cap in [10, 12, 14] {
        let t = Instant::now();
        let cat = derive_maximal_sporadics(cap).unwrap();
        println!(
            "catalog cap {cap}: members={:?} sporadics={} stabilized={} findings={} in {:?}",
            cat.members_per_n,
            cat.derived_sporadic_count,
            cat.stabilized,
            cat.findings.len(),
            t.elapsed()
        );
        for (id, g) in cat.sporadics() {
            println!(
                "  sporadic {id}: n={} girth={:?} g6={}",
                g.vertex_count(),
                g.girth(),
                graph6::encode(g)
            );
        }
        if cap == 14 {
            let t = Instant::now();
            let main = verify_main_characterization(10, &cat).unwrap();
            println!(
                "main n<=10: examined={:?} class={:?} findings={} in {:?}",
                main.members_per_n,
                main.class_members_per_n,
                main.findings.len(),
                t.elapsed()
            );
            for f in main.findings.iter().take(10) {
                println!("  finding {} {} {}", f.graph6, f.kind.as_str(), f.details);
            }
        }
    }
}
