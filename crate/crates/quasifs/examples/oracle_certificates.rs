//! The bilinear-form oracle: for a self-dual simple it produces a
//! nondegenerate form sigma with adjoint S and the sign mu in
//! sigma(v, w) = mu sigma(w, g v); the certificate is printed.
//!
//!     cargo run --example oracle_certificates

use quasifs::builders::catalog;
use quasifs::indicator::{analyze, categorical_trace, oracle_classify, pivotal_morphism};

fn main() {
    for (name, module_name) in [("s3", "standard2"), ("q8", "spin2"), ("c2w1", "k_g1")] {
        let bundle = catalog::build(name).unwrap();
        let h = &bundle.algebra;
        let module = bundle
            .modules
            .iter()
            .find(|m| m.name == module_name)
            .unwrap();
        let analysis = analyze(h).unwrap();
        let verdict = oracle_classify(h, module, &analysis.pivotal).unwrap();
        println!("{name}/{module_name}: mu = {}", verdict.mu);
        if let Some(form) = &verdict.certificate {
            for r in 0..form.rows() {
                let row: Vec<String> = (0..form.cols()).map(|c| form.at(r, c).to_string()).collect();
                println!("  [{}]", row.join(", "));
            }
            let kind = if form == &form.transpose() {
                "symmetric"
            } else if *form == form.transpose().scale(&h.field().integer(-1)) {
                "skew-symmetric"
            } else {
                "g-twisted"
            };
            println!("  form is {kind}");
        }
        // The pivotal normalization for the same module, for context.
        let tr = categorical_trace(h, module, &pivotal_morphism(h, &analysis.pivotal, module))
            .unwrap();
        println!("  catr(piv) = {tr} = dim V");
    }
}
