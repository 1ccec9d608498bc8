//! Invariant subspaces and hom spaces, with canonical echelon bases.
//!
//! The invariant subspace `M^H = { m | hm = eps(h)m }` can be computed two
//! ways: as the joint kernel of `rho(e_i) - eps(e_i) I`, or as the image of
//! `rho(Lambda)` for the normalized integral. The two must span the same
//! subspace on every valid input; returning both in the same canonical form
//! makes that comparison a literal equality.

use crate::field::{CycloField, FieldElement};
use crate::linalg::Matrix;
use crate::qha::QuasiHopfAlgebra;

use super::{HModule, RepError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantMethod {
    /// Joint kernel of `rho(e_i) - eps(e_i) I`.
    Kernel,
    /// Column space of `rho(Lambda)`; requires the normalized integral.
    Projector,
}

/// Canonicalizes a spanning set: the nonzero rows of the reduced row echelon
/// form of the stacked vectors. Two spanning sets of the same subspace give
/// byte-identical output.
pub fn canonical_span(
    field: &CycloField,
    vectors: Vec<Vec<FieldElement>>,
) -> Vec<Vec<FieldElement>> {
    let Some(width) = vectors.first().map(|v| v.len()) else {
        return Vec::new();
    };
    let rows = vectors.len();
    let entries: Vec<FieldElement> = vectors.into_iter().flatten().collect();
    Matrix::new(field.clone(), rows, width, entries).row_space_basis()
}

/// Basis of `M^H` in canonical echelon form.
pub fn invariant_subspace(
    h: &QuasiHopfAlgebra,
    m: &HModule,
    method: InvariantMethod,
) -> Result<Vec<Vec<FieldElement>>, RepError> {
    match method {
        InvariantMethod::Kernel => {
            let d = m.dim();
            let blocks: Vec<Matrix> = (0..h.dim())
                .map(|i| {
                    let mut b = m.action_of(i).clone();
                    let eps_i = h.eps(&h.basis_element(i));
                    for k in 0..d {
                        *b.at_mut(k, k) -= &eps_i;
                    }
                    b
                })
                .collect();
            let stacked = Matrix::vstack(h.field(), &blocks.iter().collect::<Vec<_>>());
            Ok(canonical_span(h.field(), stacked.kernel_basis()))
        }
        InvariantMethod::Projector => {
            let integral = h.normalized_integral()?;
            let p = m.rho(h, integral.lambda());
            // Column space of the projector, canonicalized like the kernel.
            let cols: Vec<Vec<FieldElement>> = (0..p.cols()).map(|c| p.col_vec(c)).collect();
            Ok(canonical_span(h.field(), cols))
        }
    }
}

/// Basis of `Hom_H(V, W)` as matrices, from the intertwining linear system,
/// in a deterministic echelon form.
pub fn hom_space(h: &QuasiHopfAlgebra, v: &HModule, w: &HModule) -> Vec<Matrix> {
    let (dv, dw) = (v.dim(), w.dim());
    let unknowns = dw * dv;
    let mut blocks = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        // Row (r, c): (F rho_V(e_i) - rho_W(e_i) F)[r, c] = 0.
        let mut block = Matrix::zero(h.field(), unknowns, unknowns);
        let av = v.action_of(i);
        let aw = w.action_of(i);
        for r in 0..dw {
            for c in 0..dv {
                let row = r * dv + c;
                for s in 0..dv {
                    *block.at_mut(row, r * dv + s) += av.at(s, c);
                }
                for s in 0..dw {
                    *block.at_mut(row, s * dv + c) -= aw.at(r, s);
                }
            }
        }
        blocks.push(block);
    }
    let stacked = Matrix::vstack(h.field(), &blocks.iter().collect::<Vec<_>>());
    let basis = canonical_span(h.field(), stacked.kernel_basis());
    basis
        .into_iter()
        .map(|flat| Matrix::new(h.field().clone(), dw, dv, flat))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::catalog;
    use crate::rep::{check_module, dual_module, is_intertwiner, tensor_module, DualSide};

    #[test]
    fn schur_one_dimensional_endomorphisms() {
        let bundle = catalog::build("s3").unwrap();
        let h = &bundle.algebra;
        let std2 = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let basis = hom_space(h, std2, std2);
        assert_eq!(basis.len(), 1);
        // The canonical generator is normalized with leading entry 1.
        assert!(basis[0].at(0, 0).is_one());
    }

    #[test]
    fn non_isomorphic_simples_have_zero_hom() {
        let bundle = catalog::build("s3").unwrap();
        let h = &bundle.algebra;
        let sign = &bundle.modules[1];
        let std2 = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        assert!(hom_space(h, sign, std2).is_empty());
        assert!(hom_space(h, std2, sign).is_empty());
    }

    #[test]
    fn q8_two_dim_simple_is_self_dual() {
        let bundle = catalog::build("q8").unwrap();
        let h = &bundle.algebra;
        let spin = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let dual = dual_module(h, spin, DualSide::Left).unwrap();
        let basis = hom_space(h, spin, &dual);
        assert_eq!(basis.len(), 1);
        assert!(is_intertwiner(h, spin, &dual, &basis[0]));
    }

    #[test]
    fn invariants_of_trivial_module_are_everything() {
        let bundle = catalog::build("z4").unwrap();
        let h = &bundle.algebra;
        let triv = crate::rep::trivial_module(h);
        let basis = invariant_subspace(h, &triv, InvariantMethod::Kernel).unwrap();
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn kernel_and_projector_agree_on_v_tensor_dual() {
        let bundle = catalog::build("s3").unwrap();
        let h = &bundle.algebra;
        let std2 = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let dual = dual_module(h, std2, DualSide::Left).unwrap();
        let vw = tensor_module(h, std2, &dual);
        assert!(check_module(h, &vw).is_module);
        let a = invariant_subspace(h, &vw, InvariantMethod::Kernel).unwrap();
        let b = invariant_subspace(h, &vw, InvariantMethod::Projector).unwrap();
        assert_eq!(a, b);
        // Schur: Hom(k, V (x) *V) is one-dimensional for an absolutely simple V.
        assert_eq!(a.len(), 1);
    }
}
