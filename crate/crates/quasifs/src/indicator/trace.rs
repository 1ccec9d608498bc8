//! The categorical trace, the duality bijection `T`, and the endomorphism
//! `E_VW` of the invariant subspace whose trace is the indicator.
//!
//! Everything here is built as a literal composite of previously defined
//! morphisms (`ev`, `db`, `A`, `A^-1`, flips, actions). The known closed
//! forms are computed separately and compared against the composites, so a
//! sign or convention drift in any ingredient surfaces as a hard error
//! instead of silently producing a plausible number.

use crate::field::FieldElement;
use crate::linalg::{Matrix, Tensor};
use crate::qha::{HausserNillElements, Integral, QuasiHopfAlgebra, TChoice};
use crate::rep::{
    adjunction_a, adjunction_a_inv, dual_module, ev_coev, flip_matrix, invariant_subspace,
    is_intertwiner, pair_action, tensor_module, Character, DualSide, HModule, InvariantMethod,
};

use super::{IndicatorError, PivotalData};

/// The categorical trace of `f: V -> **V`, composed literally as
/// `ev_{*V} . (f (x) id) . db_V`. No closed-form shortcut.
pub fn categorical_trace(
    h: &QuasiHopfAlgebra,
    v: &HModule,
    f: &Matrix,
) -> Result<FieldElement, IndicatorError> {
    let dual = dual_module(h, v, DualSide::Left)?;
    let db_v = ev_coev(h, v).db;
    let ev_dual = ev_coev(h, &dual).ev;
    let mapped = db_v
        .apply_to_leg(f, 0)
        .expect("db has the dimension of the module");
    let paired = mapped
        .contract(&Tensor::from_matrix(&ev_dual), &[(0, 0), (1, 1)])
        .expect("pairing legs match");
    Ok(paired.scalar_value())
}

/// The pivotal isomorphism `piv_V = iota . (g .)` as a matrix `V -> **V` in
/// the standard coordinate identification.
pub fn pivotal_morphism(h: &QuasiHopfAlgebra, piv: &PivotalData, v: &HModule) -> Matrix {
    v.rho(h, &piv.g)
}

/// The bijection `T: Hom(*V, W) -> Hom(*W, V)`, `T(f) = piv_V^-1 . *f`.
/// The result is verified to intertwine.
pub fn t_map(
    h: &QuasiHopfAlgebra,
    piv: &PivotalData,
    v: &HModule,
    w: &HModule,
    f: &Matrix,
) -> Result<Matrix, IndicatorError> {
    let dual_v = dual_module(h, v, DualSide::Left)?;
    let dual_w = dual_module(h, w, DualSide::Left)?;
    if !is_intertwiner(h, &dual_v, w, f) {
        return Err(IndicatorError::NotIntertwiner);
    }
    let result = v.rho(h, &piv.g_inv).mul(&f.transpose());
    if !is_intertwiner(h, &dual_w, v, &result) {
        return Err(IndicatorError::ConstructionMismatch(
            "T(f) fails to intertwine *W -> V".into(),
        ));
    }
    Ok(result)
}

/// Both constructions of `E_VW: (V (x) W)^H -> (W (x) V)^H` and, when
/// `V = W`, its trace cross-checked against the full-space closed form and
/// the character value of `nu_H`.
#[derive(Debug, Clone)]
pub struct EMap {
    /// Matrix of `E` in the canonical invariant bases.
    pub matrix: Matrix,
    /// Trace of `E_VV`; `None` when the modules differ.
    pub trace: Option<FieldElement>,
}

pub fn e_map(
    h: &QuasiHopfAlgebra,
    integral: &Integral,
    hn: &HausserNillElements,
    piv: &PivotalData,
    v: &HModule,
    w: &HModule,
    t_choice: TChoice,
) -> Result<EMap, IndicatorError> {
    let vw = tensor_module(h, v, w);
    let wv = tensor_module(h, w, v);
    let basis_vw = invariant_subspace(h, &vw, InvariantMethod::Kernel)?;
    let basis_wv = invariant_subspace(h, &wv, InvariantMethod::Kernel)?;
    let same_module = v == w;
    let k_in = basis_vw.len();
    let k_out = basis_wv.len();

    // Route (i): A^-1 . T . A, one invariant basis vector at a time.
    let mut via_adjunction = Matrix::zero(h.field(), k_out, k_in);
    for (r, xi) in basis_vw.iter().enumerate() {
        let f = adjunction_a(h, &hn.q_l, v, w, xi)?;
        let tf = t_map(h, piv, v, w, &f)?;
        let eta = adjunction_a_inv(h, w, v, &tf)?;
        let coords = coords_in_basis(h, &basis_wv, &eta)?;
        for (s, c) in coords.into_iter().enumerate() {
            *via_adjunction.at_mut(s, r) = c;
        }
    }

    // Route (ii): the explicit composite pi . (t .) . tau . (q_L .).
    let q_l_action = pair_action(h, &hn.q_l, v, w);
    let tau = flip_matrix(h, v.dim(), w.dim());
    let t_action = pair_action(h, hn.t(t_choice), w, v);
    let projector = wv.rho(h, integral.lambda());
    let composite = projector.mul(&t_action).mul(&tau).mul(&q_l_action);
    let mut via_projection = Matrix::zero(h.field(), k_out, k_in);
    for (r, xi) in basis_vw.iter().enumerate() {
        let y = composite.apply(xi);
        let coords = coords_in_basis(h, &basis_wv, &y)?;
        for (s, c) in coords.into_iter().enumerate() {
            *via_projection.at_mut(s, r) = c;
        }
    }

    if via_adjunction != via_projection {
        return Err(IndicatorError::ConstructionMismatch(
            "adjunction route and projection route for E disagree".into(),
        ));
    }

    let trace = if same_module {
        let trace_e = via_adjunction.trace();
        // Full-space closed form E' = (t .) . tau . (q_L Delta(Lambda) .).
        let q_l_dl = h.tensor_mul(&hn.q_l, &h.delta(integral.lambda()));
        let eprime = t_action.mul(&tau).mul(&pair_action(h, &q_l_dl, v, v));
        let eprime_trace = eprime.trace();
        let nu = h.nu_element(hn, integral, t_choice);
        let chi_nu = Character::of(v).eval(h, &nu);
        if trace_e != eprime_trace || trace_e != chi_nu {
            return Err(IndicatorError::ConstructionMismatch(format!(
                "trace identities fail on {}: tr E = {trace_e}, tr E' = {eprime_trace}, chi(nu_H) = {chi_nu}",
                v.name
            )));
        }
        Some(trace_e)
    } else {
        None
    };

    Ok(EMap {
        matrix: via_adjunction,
        trace,
    })
}

/// Coordinates of a vector in a canonical echelon basis.
fn coords_in_basis(
    h: &QuasiHopfAlgebra,
    basis: &[Vec<FieldElement>],
    vector: &[FieldElement],
) -> Result<Vec<FieldElement>, IndicatorError> {
    if basis.is_empty() {
        if vector.iter().all(|e| e.is_zero()) {
            return Ok(Vec::new());
        }
        return Err(IndicatorError::ConstructionMismatch(
            "vector outside the invariant subspace".into(),
        ));
    }
    let width = vector.len();
    let cols = basis.len();
    let m = Matrix::from_fn(h.field(), width, cols, |r, c| basis[c][r].clone());
    let sol = m.solve(vector).map_err(|_| {
        IndicatorError::ConstructionMismatch("vector outside the invariant subspace".into())
    })?;
    debug_assert!(sol.kernel.is_empty(), "canonical bases are independent");
    Ok(sol.particular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::catalog;
    use crate::indicator::pivotal_g;
    use crate::rep::trivial_module;

    struct Ctx {
        h: QuasiHopfAlgebra,
        modules: Vec<HModule>,
        integral: Integral,
        hn: HausserNillElements,
        piv: PivotalData,
    }

    fn setup(name: &str) -> Ctx {
        let bundle = catalog::build(name).unwrap();
        let h = bundle.algebra;
        let integral = h.normalized_integral().unwrap();
        let hn = h.hausser_nill().unwrap();
        let piv = pivotal_g(&h, &integral, &hn, TChoice::Pl).unwrap();
        Ctx {
            h,
            modules: bundle.modules,
            integral,
            hn,
            piv,
        }
    }

    #[test]
    fn trace_of_identity_on_trivial_module_is_one() {
        let ctx = setup("z2");
        let triv = trivial_module(&ctx.h);
        let f = Matrix::identity(ctx.h.field(), 1);
        assert!(categorical_trace(&ctx.h, &triv, &f).unwrap().is_one());
    }

    #[test]
    fn categorical_trace_is_linear() {
        let ctx = setup("q8");
        let spin = ctx.modules.iter().find(|m| m.dim() == 2).unwrap();
        let f = pivotal_morphism(&ctx.h, &ctx.piv, spin);
        let two_f = f.scale(&ctx.h.field().integer(2));
        let t1 = categorical_trace(&ctx.h, spin, &f).unwrap();
        let t2 = categorical_trace(&ctx.h, spin, &two_f).unwrap();
        assert_eq!(t2, &ctx.h.field().integer(2) * &t1);
    }

    #[test]
    fn pivotal_normalization_on_catalog_simples() {
        for name in ["s3", "q8", "c2w1", "c4w1"] {
            let ctx = setup(name);
            for module in &ctx.modules {
                let f = pivotal_morphism(&ctx.h, &ctx.piv, module);
                let tr = categorical_trace(&ctx.h, module, &f).unwrap();
                assert_eq!(
                    tr,
                    ctx.h.field().integer(module.dim() as i64),
                    "catr(piv) != dim for {name}/{}",
                    module.name
                );
            }
        }
    }

    #[test]
    fn t_map_is_an_involution_across_hom_spaces() {
        let ctx = setup("q8");
        let spin = ctx.modules.iter().find(|m| m.dim() == 2).unwrap();
        let dual = dual_module(&ctx.h, spin, DualSide::Left).unwrap();
        let hom = crate::rep::hom_space(&ctx.h, &dual, spin);
        assert_eq!(hom.len(), 1);
        for f in &hom {
            let tf = t_map(&ctx.h, &ctx.piv, spin, spin, f).unwrap();
            let ttf = t_map(&ctx.h, &ctx.piv, spin, spin, &tf).unwrap();
            assert_eq!(&ttf, f);
        }
    }

    #[test]
    fn t_vv_scalar_matches_the_oracle_sign() {
        // On a self-dual simple, T_VV is multiplication by mu in {+1, -1},
        // and that mu is exactly the bilinear-form verdict.
        for (name, module_name) in [("s3", "standard2"), ("q8", "spin2"), ("c2w1", "k_g1"), ("c4w1", "k_g2")] {
            let ctx = setup(name);
            let v = ctx.modules.iter().find(|m| m.name == module_name).unwrap();
            let dual = dual_module(&ctx.h, v, DualSide::Left).unwrap();
            let hom = crate::rep::hom_space(&ctx.h, &dual, v);
            assert_eq!(hom.len(), 1, "{name}/{module_name}");
            let f = &hom[0];
            let tf = t_map(&ctx.h, &ctx.piv, v, v, f).unwrap();
            let verdict = crate::indicator::oracle_classify(&ctx.h, v, &ctx.piv).unwrap();
            let mu = ctx.h.field().integer(verdict.mu as i64);
            assert_eq!(tf, f.scale(&mu), "{name}/{module_name}");
        }
    }

    #[test]
    fn e_map_on_trivial_module_is_identity() {
        let ctx = setup("z3");
        let triv = trivial_module(&ctx.h);
        let e = e_map(
            &ctx.h,
            &ctx.integral,
            &ctx.hn,
            &ctx.piv,
            &triv,
            &triv,
            TChoice::Pl,
        )
        .unwrap();
        assert!(e.matrix.is_identity());
        assert!(e.trace.unwrap().is_one());
    }

    #[test]
    fn e_map_trace_is_zero_for_non_self_dual_simple() {
        let ctx = setup("z3");
        // chi1 of Z/3 is not self-dual.
        let chi1 = &ctx.modules[1];
        let e = e_map(
            &ctx.h,
            &ctx.integral,
            &ctx.hn,
            &ctx.piv,
            chi1,
            chi1,
            TChoice::Pl,
        )
        .unwrap();
        assert_eq!(e.matrix.rows(), 0);
        assert!(e.trace.unwrap().is_zero());
    }

    #[test]
    fn e_map_dimension_matches_hom_space_dimension() {
        // dim (V (x) W)^H = dim Hom(*V, W): the bijectivity of A, as counts.
        let ctx = setup("s3");
        let std2 = ctx.modules.iter().find(|m| m.dim() == 2).unwrap();
        for w in &ctx.modules {
            let vw = tensor_module(&ctx.h, std2, w);
            let inv = invariant_subspace(&ctx.h, &vw, InvariantMethod::Kernel).unwrap();
            let dual = dual_module(&ctx.h, std2, DualSide::Left).unwrap();
            let hom = crate::rep::hom_space(&ctx.h, &dual, w);
            assert_eq!(inv.len(), hom.len(), "pair ({}, {})", std2.name, w.name);
        }
    }
}
