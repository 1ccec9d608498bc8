//! Named corpus algebras: cyclic group algebras k[Z/n] for n <= 8, k[S3],
//! k[Q8], k[D4], and the twisted duals k^{Z/2}_w (both classes) and
//! k^{Z/4}_w (all four classes), each with its irreducible modules.
//!
//! These back the `gen` subcommand; the checked-in bundle files under
//! `bundles/` are their serialized form.

use crate::field::CycloField;
use crate::linalg::Matrix;
use crate::qha::QuasiHopfAlgebra;
use crate::rep::HModule;

use super::{
    build_group_algebra, build_twisted_dual, cyclic_cocycle, dual_group_simples, BuilderError,
    GroupTable,
};

#[derive(Debug, Clone)]
pub struct CorpusBundle {
    pub name: String,
    pub algebra: QuasiHopfAlgebra,
    pub modules: Vec<HModule>,
    pub provenance: String,
}

/// Every named algebra the corpus ships.
pub fn corpus_names() -> Vec<&'static str> {
    vec![
        "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "q8", "d4", "c2w0", "c2w1",
        "c4w0", "c4w1", "c4w2", "c4w3",
    ]
}

/// Builds a corpus algebra by name; `None` for unknown names.
pub fn build(name: &str) -> Option<CorpusBundle> {
    let built = match name {
        "s3" => symmetric3_bundle(),
        "q8" => quaternion8_bundle(),
        "d4" => dihedral4_bundle(),
        _ => {
            if let Some(n) = name.strip_prefix('z').and_then(|s| s.parse::<usize>().ok()) {
                if (1..=8).contains(&n) {
                    cyclic_bundle(n)
                } else {
                    return None;
                }
            } else {
                let rest = name.strip_prefix('c')?;
                let (m, q) = rest.split_once('w')?;
                let m: usize = m.parse().ok()?;
                let q: usize = q.parse().ok()?;
                if q >= m {
                    return None;
                }
                twisted_dual_bundle(m, q)
            }
        }
    };
    Some(built.expect("catalog entries always build"))
}

/// The 1-dimensional module of `k[Z/n]` with character `zeta_n^(j a)`.
pub fn cyclic_character(h: &QuasiHopfAlgebra, j: usize) -> HModule {
    let n = h.dim();
    let conductor = h.field().conductor() as usize;
    assert!(
        conductor % n == 0,
        "field must contain the n-th roots of unity"
    );
    let step = (conductor / n) as i64;
    let action = (0..n)
        .map(|a| {
            Matrix::new(
                h.field().clone(),
                1,
                1,
                vec![h.field().zeta_pow(step * (j * a) as i64)],
            )
        })
        .collect();
    HModule::new(format!("chi{j}"), action)
}

fn cyclic_bundle(n: usize) -> Result<CorpusBundle, BuilderError> {
    let table = GroupTable::cyclic(n);
    let field = CycloField::new(n as u32);
    let algebra = build_group_algebra(&table, &field)?;
    let modules = (0..n).map(|j| cyclic_character(&algebra, j)).collect();
    Ok(CorpusBundle {
        name: format!("z{n}"),
        algebra,
        modules,
        provenance: format!("group algebra k[Z/{n}] over Q(zeta_{n}) with its {n} characters"),
    })
}

fn one_dim(field: &CycloField, values: Vec<i64>, name: &str) -> HModule {
    let action = values
        .into_iter()
        .map(|v| Matrix::new(field.clone(), 1, 1, vec![field.integer(v)]))
        .collect();
    HModule::new(name, action)
}

fn two_dim(matrices: Vec<Matrix>, name: &str) -> HModule {
    HModule::new(name, matrices)
}

fn symmetric3_bundle() -> Result<CorpusBundle, BuilderError> {
    let table = GroupTable::symmetric3();
    let field = CycloField::new(1);
    let algebra = build_group_algebra(&table, &field)?;
    let trivial = one_dim(&field, vec![1; 6], "trivial");
    // Element order: e, r, r2, s, rs, r2s; the reflections are odd.
    let sign = one_dim(&field, vec![1, 1, 1, -1, -1, -1], "sign");
    let r = Matrix::from_fn(&field, 2, 2, |i, j| match (i, j) {
        (0, 0) => field.zero(),
        (0, 1) => field.integer(-1),
        (1, 0) => field.one(),
        _ => field.integer(-1),
    });
    let s = Matrix::from_fn(&field, 2, 2, |i, j| match (i, j) {
        (0, 0) => field.integer(-1),
        (0, 1) => field.one(),
        (1, 0) => field.zero(),
        _ => field.one(),
    });
    // index a (0..3) is r^a, index 3+a is r^a s.
    let mut mats = Vec::with_capacity(6);
    let mut r_pow = Matrix::identity(&field, 2);
    for _ in 0..3 {
        mats.push(r_pow.clone());
        r_pow = r.mul(&r_pow);
    }
    for a in 0..3 {
        mats.push(mats[a].mul(&s));
    }
    let standard = two_dim(mats, "standard2");
    Ok(CorpusBundle {
        name: "s3".into(),
        algebra,
        modules: vec![trivial, sign, standard],
        provenance: "group algebra k[S3] over Q with its 3 irreducible modules".into(),
    })
}

fn quaternion8_bundle() -> Result<CorpusBundle, BuilderError> {
    let table = GroupTable::quaternion8();
    let field = CycloField::new(4);
    let algebra = build_group_algebra(&table, &field)?;
    // Element order: 1, -1, i, -i, j, -j, k, -k (index 2*axis + sign).
    let per_axis = |vals: [i64; 4], name: &str| {
        let values = (0..8).map(|idx| vals[idx / 2]).collect();
        one_dim(&field, values, name)
    };
    let trivial = per_axis([1, 1, 1, 1], "trivial");
    let chi_i = per_axis([1, 1, -1, -1], "chi_i");
    let chi_j = per_axis([1, -1, 1, -1], "chi_j");
    let chi_k = per_axis([1, -1, -1, 1], "chi_k");
    let mi = Matrix::from_fn(&field, 2, 2, |r, c| match (r, c) {
        (0, 0) => field.zeta(),
        (1, 1) => -field.zeta(),
        _ => field.zero(),
    });
    let mj = Matrix::from_fn(&field, 2, 2, |r, c| match (r, c) {
        (0, 1) => field.integer(-1),
        (1, 0) => field.one(),
        _ => field.zero(),
    });
    let axis_mats = [Matrix::identity(&field, 2), mi.clone(), mj.clone(), mi.mul(&mj)];
    let mats = (0..8)
        .map(|idx| {
            let m = &axis_mats[idx / 2];
            if idx % 2 == 0 {
                m.clone()
            } else {
                m.scale(&field.integer(-1))
            }
        })
        .collect();
    let spin = two_dim(mats, "spin2");
    Ok(CorpusBundle {
        name: "q8".into(),
        algebra,
        modules: vec![trivial, chi_i, chi_j, chi_k, spin],
        provenance: "group algebra k[Q8] over Q(zeta_4) with its 5 irreducible modules".into(),
    })
}

fn dihedral4_bundle() -> Result<CorpusBundle, BuilderError> {
    let table = GroupTable::dihedral4();
    let field = CycloField::new(1);
    let algebra = build_group_algebra(&table, &field)?;
    // Element order: r^a s^b at index a + 4b.
    let character = |x: i64, y: i64, name: &str| {
        let values = (0..8)
            .map(|idx| x.pow((idx % 4) as u32) * y.pow((idx / 4) as u32))
            .collect();
        one_dim(&field, values, name)
    };
    let trivial = character(1, 1, "trivial");
    let sign_s = character(1, -1, "sign_s");
    let sign_r = character(-1, 1, "sign_r");
    let sign_rs = character(-1, -1, "sign_rs");
    let r = Matrix::from_fn(&field, 2, 2, |i, j| match (i, j) {
        (0, 1) => field.integer(-1),
        (1, 0) => field.one(),
        _ => field.zero(),
    });
    let s = Matrix::from_fn(&field, 2, 2, |i, j| match (i, j) {
        (0, 0) => field.one(),
        (1, 1) => field.integer(-1),
        _ => field.zero(),
    });
    let mats = (0..8)
        .map(|idx| {
            let mut m = Matrix::identity(&field, 2);
            for _ in 0..idx % 4 {
                m = r.mul(&m);
            }
            if idx / 4 == 1 {
                m = m.mul(&s);
            }
            m
        })
        .collect();
    let standard = two_dim(mats, "standard2");
    Ok(CorpusBundle {
        name: "d4".into(),
        algebra,
        modules: vec![trivial, sign_s, sign_r, sign_rs, standard],
        provenance: "group algebra k[D4] over Q with its 5 irreducible modules".into(),
    })
}

fn twisted_dual_bundle(m: usize, q: usize) -> Result<CorpusBundle, BuilderError> {
    let table = GroupTable::cyclic(m);
    let cocycle = cyclic_cocycle(m, q);
    let algebra = build_twisted_dual(&table, &cocycle)?;
    let modules = dual_group_simples(&table, algebra.field());
    Ok(CorpusBundle {
        name: format!("c{m}w{q}"),
        algebra,
        modules,
        provenance: format!(
            "twisted dual k^(Z/{m})_w for the class-{q} 3-cocycle, over Q(zeta_{m})"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qha::ValidationLevel;
    use crate::rep::check_module;

    #[test]
    fn every_corpus_entry_builds_and_validates() {
        for name in corpus_names() {
            let bundle = build(name).unwrap_or_else(|| panic!("missing corpus entry {name}"));
            let report = bundle.algebra.validate(ValidationLevel::Strict);
            assert!(
                report.passed(),
                "{name} fails strict validation: {:?}",
                report.failures().collect::<Vec<_>>()
            );
            for module in &bundle.modules {
                let mr = check_module(&bundle.algebra, module);
                assert!(mr.is_module, "{name}/{} is not a module", module.name);
                assert!(
                    mr.absolutely_simple,
                    "{name}/{} has end_dim {}",
                    module.name, mr.end_dim
                );
            }
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        for bad in ["z0", "z9", "c3", "c4w4", "frobenius", ""] {
            assert!(build(bad).is_none(), "{bad:?} should not resolve");
        }
    }

    #[test]
    fn q8_spin_representation_is_faithful_quaternions() {
        let bundle = build("q8").unwrap();
        let spin = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        // rho(i)^2 = rho(j)^2 = rho(-1) and rho(i)rho(j) = rho(k).
        let rho = |g: usize| spin.action_of(g).clone();
        assert_eq!(rho(2).mul(&rho(2)), rho(1));
        assert_eq!(rho(4).mul(&rho(4)), rho(1));
        assert_eq!(rho(2).mul(&rho(4)), rho(6));
    }
}
