//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! All comparisons are exact field equalities; there are no tolerances
//! anywhere.
//!
//! The corpus is the set of checked-in bundle files under `bundles/`:
//! k[Z/n] for n <= 8, k[S3], k[Q8], k[D4], and the twisted duals
//! k^(Z/2)_w (both classes) and k^(Z/4)_w (all four classes).

use std::path::PathBuf;
use std::process::Command;

use quasifs::builders::group_table_from_algebra;
use quasifs::bundle::{load_bundle, Bundle};
use quasifs::field::CycloField;
use quasifs::indicator::{
    analyze, categorical_trace, classical_group_indicator, fs_indicator,
    lemma_element_identity_holds, lemma_tensor_identity_holds, module_report, pivotal_morphism,
    t_map, AlgebraAnalysis,
};
use quasifs::linalg::Matrix;
use quasifs::qha::{TChoice, ValidationLevel};
use quasifs::rep::{
    adjunction_a, adjunction_a_inv, dual_module, hom_space, invariant_subspace, tensor_module,
    Character, DualSide, InvariantMethod,
};

const CORPUS: [&str; 17] = [
    "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "q8", "d4", "c2w0", "c2w1", "c4w0",
    "c4w1", "c4w2", "c4w3",
];

const GROUP_BUNDLES: [&str; 11] = [
    "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "q8", "d4",
];

fn bundles_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../bundles")
}

fn load(name: &str) -> Bundle {
    load_bundle(bundles_dir().join(format!("{name}.bundle.json")))
        .unwrap_or_else(|e| panic!("loading {name}: {e}"))
}

fn analyzed(name: &str) -> (Bundle, AlgebraAnalysis) {
    let bundle = load(name);
    let analysis = analyze(&bundle.algebra).unwrap_or_else(|e| panic!("analyzing {name}: {e}"));
    (bundle, analysis)
}

/// Runs one criterion and prints its pass/fail line.
fn criterion(number: u32, name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let result = std::panic::catch_unwind(body);
    match &result {
        Ok(()) => println!("ACCEPTANCE {number} ({name}): PASS"),
        Err(_) => println!("ACCEPTANCE {number} ({name}): FAIL"),
    }
    if let Err(payload) = result {
        std::panic::resume_unwind(payload);
    }
}

#[test]
fn criterion_1_grand_agreement() {
    criterion(1, "grand agreement nu_PL = nu_PR = tr E = mu", || {
        let mut simples = 0usize;
        for name in CORPUS {
            let (bundle, analysis) = analyzed(name);
            let h = &bundle.algebra;
            for module in &bundle.modules {
                let report = module_report(h, &analysis, module)
                    .unwrap_or_else(|e| panic!("{name}/{}: {e}", module.name));
                assert!(
                    report.absolutely_simple,
                    "{name}/{} is not absolutely simple",
                    module.name
                );
                let mu = report.mu.expect("simple modules get a verdict");
                assert!(
                    (-1..=1).contains(&mu),
                    "{name}/{}: mu = {mu} outside {{0, +1, -1}}",
                    module.name
                );
                let mu_field = h.field().integer(mu as i64);
                assert_eq!(report.nu_pl, report.nu_pr, "{name}/{}", module.name);
                assert_eq!(report.nu_pl, report.trace_e, "{name}/{}", module.name);
                assert_eq!(report.nu_pl, mu_field, "{name}/{}", module.name);
                assert!(report.agree, "{name}/{}", module.name);
                simples += 1;
            }
        }
        assert!(simples >= 40, "corpus should have many simples, saw {simples}");
    });
}

#[test]
fn criterion_2_classical_regression() {
    criterion(2, "Hopf case matches (1/|G|) sum chi(g^2)", || {
        for name in GROUP_BUNDLES {
            let bundle = load(name);
            let h = &bundle.algebra;
            let table = group_table_from_algebra(h)
                .unwrap_or_else(|e| panic!("{name} is not a group algebra: {e}"));
            let integral = h.normalized_integral().unwrap();
            let hn = h.hausser_nill().unwrap();
            for module in &bundle.modules {
                let chi = Character::of(module);
                let classical = classical_group_indicator(&table, chi.values());
                for t in [TChoice::Pl, TChoice::Pr] {
                    let nu = fs_indicator(h, &hn, &integral, module, t);
                    assert_eq!(
                        nu, classical,
                        "{name}/{}: indicator disagrees with the classical formula",
                        module.name
                    );
                }
            }
        }
        // Frozen golden values, first produced by the brute-force oracle.
        let q8 = load("q8");
        let table = group_table_from_algebra(&q8.algebra).unwrap();
        let mut q8_values: Vec<i64> = q8
            .modules
            .iter()
            .map(|m| as_small_int(&classical_group_indicator(&table, Character::of(m).values())))
            .collect();
        q8_values.sort();
        assert_eq!(q8_values, vec![-1, 1, 1, 1, 1]);

        let z4 = load("z4");
        let table = group_table_from_algebra(&z4.algebra).unwrap();
        let z4_values: Vec<i64> = z4
            .modules
            .iter()
            .map(|m| as_small_int(&classical_group_indicator(&table, Character::of(m).values())))
            .collect();
        assert_eq!(z4_values, vec![1, 0, 1, 0]);
    });
}

fn as_small_int(v: &quasifs::field::FieldElement) -> i64 {
    for candidate in -2i64..=2 {
        if *v == v.field().integer(candidate) {
            return candidate;
        }
    }
    panic!("value {v} is not a small integer");
}

#[test]
fn criterion_3_lemma_suite() {
    criterion(3, "both Lemma formulas, both t, every module", || {
        for name in CORPUS {
            let (bundle, analysis) = analyzed(name);
            let h = &bundle.algebra;
            for t in [TChoice::Pl, TChoice::Pr] {
                assert!(
                    lemma_element_identity_holds(
                        h,
                        &analysis.pivotal,
                        &analysis.integral,
                        &analysis.hn,
                        t
                    ),
                    "{name}: element identity fails for t = {}",
                    t.label()
                );
                for module in &bundle.modules {
                    assert!(
                        lemma_tensor_identity_holds(
                            h,
                            &analysis.pivotal,
                            &analysis.integral,
                            &analysis.hn,
                            t,
                            module
                        ),
                        "{name}/{}: tensor identity fails for t = {}",
                        module.name,
                        t.label()
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_4_pivotal_normalization() {
    criterion(4, "catr(piv_V) = dim V by literal ev/db composition", || {
        for name in CORPUS {
            let (bundle, analysis) = analyzed(name);
            let h = &bundle.algebra;
            for module in &bundle.modules {
                let piv_matrix = pivotal_morphism(h, &analysis.pivotal, module);
                let trace = categorical_trace(h, module, &piv_matrix)
                    .unwrap_or_else(|e| panic!("{name}/{}: {e}", module.name));
                assert_eq!(
                    trace,
                    h.field().integer(module.dim() as i64),
                    "{name}/{}",
                    module.name
                );
            }
        }
    });
}

#[test]
fn criterion_5_structural_suite() {
    criterion(5, "validation, integral forms, invariants, A and T", || {
        for name in CORPUS {
            let (bundle, analysis) = analyzed(name);
            let h = &bundle.algebra;

            // Strict validation passes on every builder output.
            let report = h.validate(ValidationLevel::Strict);
            assert!(
                report.passed(),
                "{name}: {:?}",
                report.failures().collect::<Vec<_>>()
            );

            // Normalized integral matches the closed forms.
            let lambda = analysis.integral.lambda();
            if name.starts_with('c') {
                // Twisted dual: Lambda = delta_e, and the identity is index 0.
                for (i, c) in lambda.coeffs().iter().enumerate() {
                    let expected = if i == 0 { h.field().one() } else { h.field().zero() };
                    assert_eq!(*c, expected, "{name}: Lambda != delta_e");
                }
            } else {
                let inv_order = h
                    .field()
                    .one()
                    .checked_div(&h.field().integer(h.dim() as i64))
                    .unwrap();
                for c in lambda.coeffs() {
                    assert_eq!(*c, inv_order, "{name}: Lambda != group average");
                }
            }

            // Kernel-method and projector-method invariants coincide, on the
            // modules themselves and on tensor squares.
            for module in &bundle.modules {
                let kernel = invariant_subspace(h, module, InvariantMethod::Kernel).unwrap();
                let image = invariant_subspace(h, module, InvariantMethod::Projector).unwrap();
                assert_eq!(kernel, image, "{name}/{}", module.name);
                let square = tensor_module(h, module, module);
                let kernel = invariant_subspace(h, &square, InvariantMethod::Kernel).unwrap();
                let image = invariant_subspace(h, &square, InvariantMethod::Projector).unwrap();
                assert_eq!(kernel, image, "{name}/{} squared", module.name);
            }

            // A and A^-1 are mutually inverse on every (V (x) W)^H instance,
            // and T_WV T_VW = id on every hom space.
            for v in &bundle.modules {
                for w in &bundle.modules {
                    let vw = tensor_module(h, v, w);
                    let basis = invariant_subspace(h, &vw, InvariantMethod::Kernel).unwrap();
                    for xi in &basis {
                        let f = adjunction_a(h, &analysis.hn.q_l, v, w, xi).unwrap();
                        let back = adjunction_a_inv(h, v, w, &f).unwrap();
                        assert_eq!(&back, xi, "{name}: A^-1 A != id on ({}, {})", v.name, w.name);
                    }
                    let dual_v = dual_module(h, v, DualSide::Left).unwrap();
                    let homs = hom_space(h, &dual_v, w);
                    // Bijectivity of A at the level of dimensions.
                    assert_eq!(
                        basis.len(),
                        homs.len(),
                        "{name}: dim (V(x)W)^H != dim Hom(*V, W) on ({}, {})",
                        v.name,
                        w.name
                    );
                    for f in homs {
                        let xi = adjunction_a_inv(h, v, w, &f).unwrap();
                        let again = adjunction_a(h, &analysis.hn.q_l, v, w, &xi).unwrap();
                        assert_eq!(again, f, "{name}: A A^-1 != id on ({}, {})", v.name, w.name);
                        let tf = t_map(h, &analysis.pivotal, v, w, &f).unwrap();
                        let ttf = t_map(h, &analysis.pivotal, w, v, &tf).unwrap();
                        assert_eq!(ttf, f, "{name}: T T != id on ({}, {})", v.name, w.name);
                    }
                }
            }
        }
    });
}

#[test]
fn criterion_6_twist_trick_property() {
    criterion(6, "tr((f1 x f2) tau (f3 x f4)) = tr(f3 f1 f4 f2)", || {
        // Deterministic pseudo-random exact matrices over Q(zeta_4).
        let field = CycloField::new(4);
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut random_matrix = |dim: usize| {
            Matrix::from_fn(&field, dim, dim, |_, _| {
                let num = (next() % 11) as i64 - 5;
                let den = (next() % 4) as i64 + 1;
                let zpow = (next() % 4) as i64;
                field.zeta_pow(zpow).scale(&quasifs::field::Rational::new(
                    num.into(),
                    den.into(),
                ))
            })
        };
        let mut checked = 0usize;
        for case in 0..104usize {
            let dim = case % 4 + 1;
            let f1 = random_matrix(dim);
            let f2 = random_matrix(dim);
            let f3 = random_matrix(dim);
            let f4 = random_matrix(dim);
            // tau as a matrix on V (x) V.
            let mut tau = Matrix::zero(&field, dim * dim, dim * dim);
            for a in 0..dim {
                for b in 0..dim {
                    *tau.at_mut(b * dim + a, a * dim + b) = field.one();
                }
            }
            let lhs = f1
                .kronecker(&f2)
                .mul(&tau)
                .mul(&f3.kronecker(&f4))
                .trace();
            let rhs = f3.mul(&f1).mul(&f4).mul(&f2).trace();
            assert_eq!(lhs, rhs, "case {case} (dim {dim})");
            checked += 1;
        }
        assert!(checked >= 100);
    });
}

#[test]
fn criterion_7_negative_path() {
    criterion(7, "mutated bundles exit 1 naming the axiom; exit 4 never", || {
        let broken = [
            ("z4_counit", "counit-algebra-map"),
            ("s3_assoc", "mult-associative"),
            ("c4w1_pentagon", "pentagon"),
            ("q8_antipode", "antipode-anti-multiplicative"),
        ];
        for (file, axiom) in broken {
            let path = bundles_dir().join(format!("broken/{file}.bundle.json"));
            let output = Command::new(env!("CARGO_BIN_EXE_quasifs"))
                .arg("validate")
                .arg(&path)
                .arg("--strict")
                .output()
                .expect("run quasifs validate");
            assert_eq!(
                output.status.code(),
                Some(1),
                "{file}: expected exit 1, got {:?}\n{}",
                output.status.code(),
                String::from_utf8_lossy(&output.stderr)
            );
            let stdout = String::from_utf8_lossy(&output.stdout);
            let stderr = String::from_utf8_lossy(&output.stderr);
            assert!(
                stdout.contains(axiom) && stderr.contains(axiom),
                "{file}: output does not name {axiom}\nstdout: {stdout}\nstderr: {stderr}"
            );
        }
        // Crosscheck must exit 0 on every valid corpus bundle; in particular
        // the internal-inconsistency exit 4 never fires.
        for name in CORPUS {
            let path = bundles_dir().join(format!("{name}.bundle.json"));
            let output = Command::new(env!("CARGO_BIN_EXE_quasifs"))
                .arg("crosscheck")
                .arg(&path)
                .output()
                .expect("run quasifs crosscheck");
            assert_eq!(
                output.status.code(),
                Some(0),
                "{name}: crosscheck failed\n{}",
                String::from_utf8_lossy(&output.stderr)
            );
        }
    });
}
