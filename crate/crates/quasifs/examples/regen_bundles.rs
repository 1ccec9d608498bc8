//! Regenerates the checked-in bundle corpus under `bundles/`, including the
//! deliberately corrupted bundles under `bundles/broken/` used by the
//! negative-path tests.
//!
//!     cargo run --example regen_bundles

use std::path::PathBuf;

use quasifs::builders::catalog;
use quasifs::bundle::Bundle;

fn bundles_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../bundles")
}

fn main() {
    let dir = bundles_dir();
    std::fs::create_dir_all(dir.join("broken")).expect("create bundles directory");

    for name in catalog::corpus_names() {
        let bundle: Bundle = catalog::build(name).expect("catalog entry").into();
        let path = dir.join(format!("{name}.bundle.json"));
        bundle.save(&path).expect("write bundle");
        println!("wrote {}", path.display());
    }

    // Each broken bundle corrupts exactly one axiom; the file name says which.
    let mut z4 = catalog::build("z4").map(Bundle::from).unwrap().to_file();
    z4.provenance = Some("k[Z/4] with a corrupted counit value".into());
    z4.algebra.counit[1] = "2".into();
    write_file(&dir, "broken/z4_counit.bundle.json", &z4);

    let mut s3 = catalog::build("s3").map(Bundle::from).unwrap().to_file();
    s3.provenance = Some("k[S3] with one multiplication entry redirected".into());
    for entry in &mut s3.algebra.mult {
        if entry.0 == 1 && entry.1 == 2 {
            entry.2 = (entry.2 + 1) % 6;
            break;
        }
    }
    write_file(&dir, "broken/s3_assoc.bundle.json", &s3);

    let mut c4 = catalog::build("c4w1").map(Bundle::from).unwrap().to_file();
    c4.provenance = Some("k^(Z/4)_w1 with one associator value twisted off-cocycle".into());
    set_tensor_entry(&mut c4.algebra.phi, (1, 1, 1), "z");
    set_tensor_entry(c4.algebra.phi_inv.as_mut().unwrap(), (1, 1, 1), "-z");
    write_file(&dir, "broken/c4w1_pentagon.bundle.json", &c4);

    let mut q8 = catalog::build("q8").map(Bundle::from).unwrap().to_file();
    q8.provenance = Some("k[Q8] with the antipode sending i to j".into());
    q8.algebra.antipode.retain(|(r, c, _)| !(*r == 3 && *c == 2));
    q8.algebra.antipode.push((4, 2, "1".into()));
    q8.algebra.antipode.sort();
    write_file(&dir, "broken/q8_antipode.bundle.json", &q8);
}

fn set_tensor_entry(
    entries: &mut Vec<(usize, usize, usize, String)>,
    at: (usize, usize, usize),
    value: &str,
) {
    for entry in entries.iter_mut() {
        if (entry.0, entry.1, entry.2) == at {
            entry.3 = value.to_string();
            return;
        }
    }
    entries.push((at.0, at.1, at.2, value.to_string()));
}

fn write_file(dir: &std::path::Path, rel: &str, file: &quasifs::bundle::BundleFile) {
    let mut text = serde_json::to_string_pretty(file).expect("serialize");
    text.push('\n');
    let path = dir.join(rel);
    std::fs::write(&path, text).expect("write broken bundle");
    println!("wrote {}", path.display());
}
