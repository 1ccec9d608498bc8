//! Indicators across all four cohomology classes of k^(Z/4)_w: the
//! self-dual simple k_2 flips sign with the parity of the class, while the
//! non-self-dual simples stay at zero.
//!
//!     cargo run --example twisted_duals

use quasifs::builders::{build_twisted_dual, cyclic_cocycle, dual_group_simples, GroupTable};
use quasifs::indicator::{analyze, module_report};

fn main() {
    let table = GroupTable::cyclic(4);
    println!(
        "{:<7} {:>14} {:>24}",
        "class", "pivotal g", "indicators (k_0..k_3)"
    );
    for q in 0..4 {
        let cocycle = cyclic_cocycle(4, q);
        let h = build_twisted_dual(&table, &cocycle).expect("admissible representative");
        let modules = dual_group_simples(&table, h.field());
        let analysis = analyze(&h).expect("semisimple");
        let indicators: Vec<String> = modules
            .iter()
            .map(|m| {
                let r = module_report(&h, &analysis, m).expect("report");
                assert!(r.agree);
                r.mu.expect("simple").to_string()
            })
            .collect();
        println!(
            "q = {q}   {:>14} {:>24}",
            h.format_element(&analysis.pivotal.g),
            indicators.join(", ")
        );
    }
}
