//! The pivotal element `g`: the unique invertible element with
//! `piv_V(v) = iota(g v)` realizing the canonical pivotal structure on the
//! module category of a semisimple quasi-Hopf algebra.
//!
//! Two computation routes, which must agree whenever both apply:
//!
//! * `beta_invertible`: `g^-1 S(beta) = S(Lambda_(1) t^1) Lambda_(2) t^2`
//!   solved by right-multiplying with `S(beta)^-1`;
//! * `linear_system`: the same identity read on the regular module through
//!   the dual-action convention, `rho(g^-1) rho(S(beta)) =
//!   sum u[p,q] rho(e_q) rho(S(e_p))` with `u = Delta(Lambda) t`, giving an
//!   exact linear system for `g^-1` that must have a unique solution.

use crate::linalg::{Matrix, Tensor};
use crate::qha::{AlgebraElement, HausserNillElements, Integral, QuasiHopfAlgebra, TChoice};

use super::IndicatorError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotalMethod {
    BetaInvertible,
    LinearSystem,
}

impl PivotalMethod {
    pub fn label(self) -> &'static str {
        match self {
            PivotalMethod::BetaInvertible => "beta_invertible",
            PivotalMethod::LinearSystem => "linear_system",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PivotalData {
    pub g: AlgebraElement,
    pub g_inv: AlgebraElement,
    pub method: PivotalMethod,
}

/// `u = Delta(Lambda) . t` in `H (x) H`.
pub(super) fn lambda_t(
    h: &QuasiHopfAlgebra,
    integral: &Integral,
    hn: &HausserNillElements,
    t_choice: TChoice,
) -> Tensor {
    h.tensor_mul(&h.delta(integral.lambda()), hn.t(t_choice))
}

/// `S(Lambda_(1) t^1) Lambda_(2) t^2` as displayed in the Lemma.
pub(super) fn lemma_rhs_element(h: &QuasiHopfAlgebra, u: &Tensor) -> AlgebraElement {
    let mapped = h.map_leg(u, 0, h.antipode_matrix());
    let folded = h.mul_legs(&mapped, 0, 1);
    h.element(folded.entries().to_vec())
}

/// Computes the pivotal element, preferring the explicit formula when
/// `S(beta)` is invertible and falling back to the linear system.
pub fn pivotal_g(
    h: &QuasiHopfAlgebra,
    integral: &Integral,
    hn: &HausserNillElements,
    t_choice: TChoice,
) -> Result<PivotalData, IndicatorError> {
    match pivotal_g_with_method(h, integral, hn, t_choice, PivotalMethod::BetaInvertible) {
        Ok(data) => Ok(data),
        Err(IndicatorError::NoUniqueSolution) => {
            pivotal_g_with_method(h, integral, hn, t_choice, PivotalMethod::LinearSystem)
        }
        Err(e) => Err(e),
    }
}

pub fn pivotal_g_with_method(
    h: &QuasiHopfAlgebra,
    integral: &Integral,
    hn: &HausserNillElements,
    t_choice: TChoice,
    method: PivotalMethod,
) -> Result<PivotalData, IndicatorError> {
    let u = lambda_t(h, integral, hn, t_choice);
    let g_inv = match method {
        PivotalMethod::BetaInvertible => {
            let s_beta = h.apply_antipode(&h.beta());
            let s_beta_inv = h
                .invert_element(&s_beta)
                .map_err(|_| IndicatorError::NoUniqueSolution)?;
            let rhs = lemma_rhs_element(h, &u);
            h.mul_elements(&rhs, &s_beta_inv)
        }
        PivotalMethod::LinearSystem => {
            let n = h.dim();
            let field = h.field().clone();
            // K = sum u[p,q] L(e_q) L(S(e_p)) on the regular module.
            let mut k = Matrix::zero(&field, n, n);
            for (idx, c) in u.nonzero() {
                let s_ep = h.apply_antipode(&h.basis_element(idx[0]));
                let term = h
                    .left_mult_matrix(&h.basis_element(idx[1]))
                    .mul(&h.left_mult_matrix(&s_ep));
                k = k.add(&term.scale(c));
            }
            let l_s_beta = h.left_mult_matrix(&h.apply_antipode(&h.beta()));
            // Column i of the system: vec(L(e_i) . L(S(beta))).
            let mut system = Matrix::zero(&field, n * n, n);
            for i in 0..n {
                let col = h.left_mult_matrix(&h.basis_element(i)).mul(&l_s_beta);
                for r in 0..n {
                    for c in 0..n {
                        *system.at_mut(r * n + c, i) = col.at(r, c).clone();
                    }
                }
            }
            let rhs: Vec<_> = k.entries().to_vec();
            let sol = system
                .solve(&rhs)
                .map_err(|_| IndicatorError::NoUniqueSolution)?;
            if !sol.kernel.is_empty() {
                return Err(IndicatorError::NoUniqueSolution);
            }
            AlgebraElement::new(sol.particular)
        }
    };
    let g = h
        .invert_element(&g_inv)
        .map_err(|_| IndicatorError::Singular)?;
    Ok(PivotalData { g, g_inv, method })
}

/// The Lemma's element identity `g^-1 S(beta) = S(Lambda_(1) t^1) Lambda_(2) t^2`.
pub fn lemma_element_identity_holds(
    h: &QuasiHopfAlgebra,
    piv: &PivotalData,
    integral: &Integral,
    hn: &HausserNillElements,
    t_choice: TChoice,
) -> bool {
    let u = lambda_t(h, integral, hn, t_choice);
    let lhs = h.mul_elements(&piv.g_inv, &h.apply_antipode(&h.beta()));
    lhs == lemma_rhs_element(h, &u)
}

/// The Lemma's tensor identity in `*V (x) V`, transcribed through the dual
/// action: `rho(g^-1) rho(S(beta)) = sum u[p,q] rho(e_q) rho(S(e_p))`.
pub fn lemma_tensor_identity_holds(
    h: &QuasiHopfAlgebra,
    piv: &PivotalData,
    integral: &Integral,
    hn: &HausserNillElements,
    t_choice: TChoice,
    module: &crate::rep::HModule,
) -> bool {
    let u = lambda_t(h, integral, hn, t_choice);
    let lhs = module
        .rho(h, &piv.g_inv)
        .mul(&module.rho(h, &h.apply_antipode(&h.beta())));
    let mut rhs = Matrix::zero(h.field(), module.dim(), module.dim());
    for (idx, c) in u.nonzero() {
        let s_ep = h.apply_antipode(&h.basis_element(idx[0]));
        let term = module
            .rho(h, &h.basis_element(idx[1]))
            .mul(&module.rho(h, &s_ep));
        rhs = rhs.add(&term.scale(c));
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::catalog;

    fn setup(name: &str) -> (QuasiHopfAlgebra, Integral, HausserNillElements) {
        let bundle = catalog::build(name).unwrap();
        let h = bundle.algebra;
        let integral = h.normalized_integral().unwrap();
        let hn = h.hausser_nill().unwrap();
        (h, integral, hn)
    }

    #[test]
    fn group_algebra_pivotal_element_is_one() {
        for name in ["z4", "s3", "q8", "d4"] {
            let (h, integral, hn) = setup(name);
            let piv = pivotal_g(&h, &integral, &hn, TChoice::Pl).unwrap();
            assert_eq!(piv.g, h.unit_element(), "{name} should have g = 1");
            assert_eq!(piv.g_inv, h.unit_element());
        }
    }

    #[test]
    fn both_methods_agree_when_beta_is_invertible() {
        for name in ["q8", "c2w1", "c4w1", "c4w3"] {
            let (h, integral, hn) = setup(name);
            for t in [TChoice::Pl, TChoice::Pr] {
                let a =
                    pivotal_g_with_method(&h, &integral, &hn, t, PivotalMethod::BetaInvertible)
                        .unwrap();
                let b =
                    pivotal_g_with_method(&h, &integral, &hn, t, PivotalMethod::LinearSystem)
                        .unwrap();
                assert_eq!(a.g, b.g, "{name} methods disagree");
                assert_eq!(a.g_inv, b.g_inv);
            }
        }
    }

    #[test]
    fn pivotal_element_is_independent_of_t() {
        for name in ["c2w1", "c4w1"] {
            let (h, integral, hn) = setup(name);
            let pl = pivotal_g(&h, &integral, &hn, TChoice::Pl).unwrap();
            let pr = pivotal_g(&h, &integral, &hn, TChoice::Pr).unwrap();
            assert_eq!(pl.g, pr.g);
        }
    }

    #[test]
    fn semion_pivotal_element_is_nontrivial() {
        let (h, integral, hn) = setup("c2w1");
        let piv = pivotal_g(&h, &integral, &hn, TChoice::Pl).unwrap();
        assert_ne!(piv.g, h.unit_element());
        assert_eq!(h.mul_elements(&piv.g, &piv.g_inv), h.unit_element());
    }

    #[test]
    fn lemma_identities_hold_on_twisted_duals() {
        let bundle = catalog::build("c4w3").unwrap();
        let h = &bundle.algebra;
        let integral = h.normalized_integral().unwrap();
        let hn = h.hausser_nill().unwrap();
        let piv = pivotal_g(h, &integral, &hn, TChoice::Pl).unwrap();
        for t in [TChoice::Pl, TChoice::Pr] {
            assert!(lemma_element_identity_holds(h, &piv, &integral, &hn, t));
            for module in &bundle.modules {
                assert!(lemma_tensor_identity_holds(
                    h, &piv, &integral, &hn, t, module
                ));
            }
        }
    }
}
