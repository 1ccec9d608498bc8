//! Evaluation, coevaluation, and the adjunction `A` between invariants of
//! `V (x) W` and intertwiners `*V -> W`.
//!
//! With the standard coordinate bases, `ev(phi (x) v) = phi(rho(alpha) v)`
//! makes the evaluation pairing literally the matrix `rho_V(alpha)`, and the
//! coevaluation element `beta v_i (x) v^i` the tensor `rho_V(beta)`. The
//! adjunction and its inverse are
//!
//! ```text
//!   A(v (x) w)(phi) = phi(q_L^1 v) . q_L^2 w,    A^-1(g) = beta v_i (x) g(v^i)
//! ```
//!
//! and both directions verify their defining properties on the way out.

use crate::field::FieldElement;
use crate::linalg::{Matrix, Tensor};
use crate::qha::QuasiHopfAlgebra;

use super::{dual_module, is_intertwiner, is_invariant, tensor_module, DualSide, HModule, RepError};

/// Evaluation pairing and coevaluation element of a module.
#[derive(Debug, Clone)]
pub struct EvCoev {
    /// Pairing matrix: `ev(v^j (x) v_i) = ev[j, i]`; equals `rho_V(alpha)`.
    pub ev: Matrix,
    /// Element of `V (x) *V`: `db[k, i]` is the coefficient of `v_k (x) v^i`;
    /// equals `rho_V(beta)`.
    pub db: Tensor,
}

pub fn ev_coev(h: &QuasiHopfAlgebra, v: &HModule) -> EvCoev {
    EvCoev {
        ev: v.rho(h, &h.alpha()),
        db: Tensor::from_matrix(&v.rho(h, &h.beta())),
    }
}

/// `A: (V (x) W)^H -> Hom_H(*V, W)`. The invariance of `xi` and the
/// intertwiner property of the result are both verified.
pub fn adjunction_a(
    h: &QuasiHopfAlgebra,
    q_l: &Tensor,
    v: &HModule,
    w: &HModule,
    xi: &[FieldElement],
) -> Result<Matrix, RepError> {
    let (dv, dw) = (v.dim(), w.dim());
    assert_eq!(xi.len(), dv * dw, "invariant vector has wrong length");
    let vw = tensor_module(h, v, w);
    if !is_invariant(h, &vw, xi) {
        return Err(RepError::NotInvariant);
    }
    // M[c, j] = sum q_L[p,q] rho_V(e_p)[j,a] xi[a,b] rho_W(e_q)[c,b]
    let xi_matrix = Matrix::new(h.field().clone(), dv, dw, xi.to_vec());
    let mut m = Matrix::zero(h.field(), dw, dv);
    for (idx, c) in q_l.nonzero() {
        let term = w
            .action_of(idx[1])
            .mul(&xi_matrix.transpose())
            .mul(&v.action_of(idx[0]).transpose());
        m = m.add(&term.scale(c));
    }
    let dual_v = dual_module(h, v, DualSide::Left)?;
    if !is_intertwiner(h, &dual_v, w, &m) {
        return Err(RepError::NotIntertwiner);
    }
    Ok(m)
}

/// `A^-1(f) = beta v_i (x) f(v^i)`, verified invariant.
pub fn adjunction_a_inv(
    h: &QuasiHopfAlgebra,
    v: &HModule,
    w: &HModule,
    f: &Matrix,
) -> Result<Vec<FieldElement>, RepError> {
    let dual_v = dual_module(h, v, DualSide::Left)?;
    if !is_intertwiner(h, &dual_v, w, f) {
        return Err(RepError::NotIntertwiner);
    }
    let xi_matrix = v.rho(h, &h.beta()).mul(&f.transpose());
    let xi: Vec<FieldElement> = xi_matrix.entries().to_vec();
    let vw = tensor_module(h, v, w);
    if !is_invariant(h, &vw, &xi) {
        return Err(RepError::NotInvariant);
    }
    Ok(xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::catalog;
    use crate::rep::{invariant_subspace, trivial_module, InvariantMethod};

    #[test]
    fn hopf_ev_is_plain_evaluation_and_db_canonical() {
        let bundle = catalog::build("s3").unwrap();
        let h = &bundle.algebra;
        let std2 = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let pieces = ev_coev(h, std2);
        assert!(pieces.ev.is_identity());
        assert_eq!(pieces.db, Tensor::from_matrix(&Matrix::identity(h.field(), 2)));
    }

    #[test]
    fn ev_is_h_linear_on_dual_tensor_module() {
        let bundle = catalog::build("q8").unwrap();
        let h = &bundle.algebra;
        let spin = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let dual = dual_module(h, spin, DualSide::Left).unwrap();
        let pairing = ev_coev(h, spin).ev;
        // ev as a covector on *V (x) V, with index (j, i) flattened.
        let flat: Vec<_> = pairing.entries().to_vec();
        let dv_v = tensor_module(h, &dual, spin);
        for i in 0..h.dim() {
            let eps_i = h.eps(&h.basis_element(i));
            let acted = dv_v.action_of(i).transpose().apply(&flat);
            for (a, x) in acted.iter().zip(&flat) {
                assert_eq!(*a, &eps_i * x);
            }
        }
    }

    #[test]
    fn evaluation_is_constant_on_integral_orbits() {
        // ev(Lambda xi) = ev(xi): evaluation is H-linear and eps(Lambda) = 1.
        let bundle = catalog::build("c4w3").unwrap();
        let h = &bundle.algebra;
        let lambda = h.normalized_integral().unwrap();
        let spin = &bundle.modules[2];
        let dual = dual_module(h, spin, DualSide::Left).unwrap();
        let pairing = ev_coev(h, spin).ev;
        let flat: Vec<_> = pairing.entries().to_vec();
        let dv_v = tensor_module(h, &dual, spin);
        let act = dv_v.rho(h, lambda.lambda());
        for probe in 0..dv_v.dim() {
            let mut xi = vec![h.field().zero(); dv_v.dim()];
            xi[probe] = h.field().integer(3);
            if probe + 1 < dv_v.dim() {
                xi[probe + 1] = h.field().zeta();
            }
            let moved = act.apply(&xi);
            let ev_of = |v: &[crate::field::FieldElement]| {
                let mut s = h.field().zero();
                for (a, b) in flat.iter().zip(v) {
                    s += &(a * b);
                }
                s
            };
            assert_eq!(ev_of(&moved), ev_of(&xi));
        }
    }

    #[test]
    fn adjunction_round_trips_on_trivial_pair() {
        let bundle = catalog::build("z2").unwrap();
        let h = &bundle.algebra;
        let hn = h.hausser_nill().unwrap();
        let triv = trivial_module(h);
        let xi = vec![h.field().one()];
        let f = adjunction_a(h, &hn.q_l, &triv, &triv, &xi).unwrap();
        assert!(f.is_identity());
        let back = adjunction_a_inv(h, &triv, &triv, &f).unwrap();
        assert_eq!(back, xi);
    }

    #[test]
    fn adjunction_is_a_bijection_on_invariants() {
        let bundle = catalog::build("q8").unwrap();
        let h = &bundle.algebra;
        let hn = h.hausser_nill().unwrap();
        let spin = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let vv = tensor_module(h, spin, spin);
        let basis = invariant_subspace(h, &vv, InvariantMethod::Kernel).unwrap();
        assert_eq!(basis.len(), 1);
        for xi in &basis {
            let f = adjunction_a(h, &hn.q_l, spin, spin, xi).unwrap();
            let back = adjunction_a_inv(h, spin, spin, &f).unwrap();
            assert_eq!(&back, xi);
        }
    }

    #[test]
    fn rejects_non_invariant_input() {
        let bundle = catalog::build("q8").unwrap();
        let h = &bundle.algebra;
        let hn = h.hausser_nill().unwrap();
        let spin = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let mut xi = vec![h.field().zero(); 4];
        xi[0] = h.field().one();
        assert!(matches!(
            adjunction_a(h, &hn.q_l, spin, spin, &xi),
            Err(RepError::NotInvariant)
        ));
    }

    #[test]
    fn canonical_element_identity_for_a() {
        // v_i (x) A(xi)(v^i) = q_L . xi as elements of V (x) W.
        let bundle = catalog::build("q8").unwrap();
        let h = &bundle.algebra;
        let hn = h.hausser_nill().unwrap();
        let spin = bundle.modules.iter().find(|m| m.dim() == 2).unwrap();
        let vv = tensor_module(h, spin, spin);
        let basis = invariant_subspace(h, &vv, InvariantMethod::Kernel).unwrap();
        let q_l_action = crate::rep::pair_action(h, &hn.q_l, spin, spin);
        for xi in &basis {
            let f = adjunction_a(h, &hn.q_l, spin, spin, xi).unwrap();
            let lhs: Vec<_> = f.transpose().entries().to_vec();
            let rhs = q_l_action.apply(xi);
            assert_eq!(lhs, rhs);
        }
    }
}
