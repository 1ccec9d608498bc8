//! The normalized integral, the four Hausser-Nill elements, and the central
//! element nu_H whose character values are the indicators.
//!
//!     cargo run --example integral_and_elements

use quasifs::builders::catalog;
use quasifs::linalg::Tensor;
use quasifs::qha::{QuasiHopfAlgebra, TChoice};

fn print_tensor2(h: &QuasiHopfAlgebra, label: &str, t: &Tensor) {
    println!("{label}:");
    for (idx, v) in t.nonzero() {
        println!(
            "  {} (x) {} -> {v}",
            h.basis_names()[idx[0]],
            h.basis_names()[idx[1]]
        );
    }
}

fn main() {
    for name in ["q8", "c2w1"] {
        let bundle = catalog::build(name).unwrap();
        let h = &bundle.algebra;
        println!("== {name} ==");
        let integral = h.normalized_integral().unwrap();
        println!("Lambda = {}", h.format_element(integral.lambda()));

        let hn = h.hausser_nill().unwrap();
        print_tensor2(h, "q_R", &hn.q_r);
        print_tensor2(h, "p_R", &hn.p_r);
        print_tensor2(h, "q_L", &hn.q_l);
        print_tensor2(h, "p_L", &hn.p_l);

        // S(t^1) alpha t^2 = 1 is what makes p_L and p_R usable as t.
        assert!(h.hn_normalization_holds(&hn.p_l));
        assert!(h.hn_normalization_holds(&hn.p_r));

        for t in [TChoice::Pl, TChoice::Pr] {
            let nu = h.nu_element(&hn, &integral, t);
            println!("nu_H (t = {}) = {}", t.label(), h.format_element(&nu));
        }
        println!();
    }
}
