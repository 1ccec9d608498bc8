//! The full indicator pipeline for one bundle file: analyze the algebra,
//! then print nu_V (both t-choices), the trace of E_VV, the oracle verdict
//! and the agreement flag for every module.
//!
//!     cargo run --example indicators_table [path/to/bundle.json]
//!
//! Defaults to the checked-in Q8 bundle.

use std::path::PathBuf;

use quasifs::bundle::load_bundle;
use quasifs::indicator::{analyze, module_report};

fn main() {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../bundles/q8.bundle.json")
    });
    let bundle = load_bundle(&path).expect("load bundle");
    println!(
        "{} (dim {}, conductor {})",
        path.display(),
        bundle.algebra.dim(),
        bundle.algebra.field().conductor()
    );
    if let Some(provenance) = &bundle.provenance {
        println!("{provenance}");
    }

    let analysis = analyze(&bundle.algebra).expect("semisimple input");
    println!(
        "pivotal g = {} (method {})",
        bundle.algebra.format_element(&analysis.pivotal.g),
        analysis.pivotal.method.label()
    );
    println!(
        "{:<12} {:>3} {:>6} {:>6} {:>8} {:>4} {:>6}",
        "module", "dim", "nu_pl", "nu_pr", "trace_E", "mu", "agree"
    );
    for module in &bundle.modules {
        let r = module_report(&bundle.algebra, &analysis, module).expect("module report");
        println!(
            "{:<12} {:>3} {:>6} {:>6} {:>8} {:>4} {:>6}",
            r.module,
            r.dim,
            r.nu_pl.to_string(),
            r.nu_pr.to_string(),
            r.trace_e.to_string(),
            r.mu.map(|m| m.to_string()).unwrap_or_else(|| "-".into()),
            if r.agree { "yes" } else { "NO" }
        );
    }
}
