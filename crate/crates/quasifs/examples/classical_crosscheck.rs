//! Regression of the quasi-Hopf indicator against the classical
//! Frobenius-Schur formula (1/|G|) sum chi(g^2) on every group-algebra
//! bundle in the corpus.
//!
//!     cargo run --example classical_crosscheck

use std::path::PathBuf;

use quasifs::builders::group_table_from_algebra;
use quasifs::bundle::load_bundle;
use quasifs::indicator::{classical_group_indicator, fs_indicator};
use quasifs::qha::TChoice;
use quasifs::rep::Character;

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../bundles");
    for name in ["z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "q8", "d4"] {
        let bundle = load_bundle(dir.join(format!("{name}.bundle.json"))).expect("load");
        let h = &bundle.algebra;
        // The group table is read back from the structure constants, so the
        // classical side never touches the builders.
        let table = group_table_from_algebra(h).expect("group algebra");
        let integral = h.normalized_integral().unwrap();
        let hn = h.hausser_nill().unwrap();
        print!("{name:<4}");
        for module in &bundle.modules {
            let chi = Character::of(module);
            let classical = classical_group_indicator(&table, chi.values());
            let categorical = fs_indicator(h, &hn, &integral, module, TChoice::Pl);
            assert_eq!(classical, categorical, "{name}/{}", module.name);
            print!(" {categorical}");
        }
        println!("   (classical formula agrees)");
    }
}
