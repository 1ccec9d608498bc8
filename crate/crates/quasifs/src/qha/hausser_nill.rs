//! The Hausser-Nill elements of `H (x) H` and the central element `nu_H`.
//!
//! The four elements correct the duality formulas in the quasi setting:
//!
//! ```text
//!   q_R = phi^1        (x) S^-1(alpha phi^3) phi^2
//!   p_R = phi^-1       (x) phi^-2 beta S(phi^-3)
//!   q_L = S(phi^-1) alpha phi^-2 (x) phi^-3
//!   p_L = phi^2 S^-1(phi^1 beta) (x) phi^3
//! ```
//!
//! and `nu_H = nabla(q_L Delta(Lambda) t)` with `t` either `p_L` or `p_R`.
//! For an ordinary Hopf algebra (`phi = 1 (x) 1 (x) 1`, `alpha = beta = 1`)
//! all four collapse to `1 (x) 1` and `nu_H = Lambda_(1) Lambda_(2)`.

use crate::linalg::Tensor;

use super::{AlgebraElement, AlgebraError, Integral, QuasiHopfAlgebra, TChoice};

#[derive(Debug, Clone, PartialEq)]
pub struct HausserNillElements {
    pub q_r: Tensor,
    pub p_r: Tensor,
    pub q_l: Tensor,
    pub p_l: Tensor,
}

impl HausserNillElements {
    pub fn t(&self, choice: TChoice) -> &Tensor {
        match choice {
            TChoice::Pl => &self.p_l,
            TChoice::Pr => &self.p_r,
        }
    }
}

impl QuasiHopfAlgebra {
    /// Computes the four Hausser-Nill elements from the displayed formulas.
    pub fn hausser_nill(&self) -> Result<HausserNillElements, AlgebraError> {
        let s = self.antipode_matrix().clone();
        let s_inv = self.antipode_inverse()?.clone();
        let alpha = self.alpha();
        let beta = self.beta();

        // q_R = phi^1 (x) S^-1(alpha phi^3) phi^2
        let q_r = {
            let t = self.lmul_leg(self.phi(), 2, &alpha);
            let t = self.map_leg(&t, 2, &s_inv);
            self.mul_legs(&t, 2, 1)
        };

        // p_R = phi^-1 (x) phi^-2 beta S(phi^-3)
        let p_r = {
            let t = self.map_leg(self.phi_inv(), 2, &s);
            let t = self.rmul_leg(&t, 1, &beta);
            self.mul_legs(&t, 1, 2)
        };

        // q_L = S(phi^-1) alpha phi^-2 (x) phi^-3
        let q_l = {
            let t = self.map_leg(self.phi_inv(), 0, &s);
            let t = self.lmul_leg(&t, 1, &alpha);
            self.mul_legs(&t, 0, 1)
        };

        // p_L = phi^2 S^-1(phi^1 beta) (x) phi^3
        let p_l = {
            let t = self.rmul_leg(self.phi(), 0, &beta);
            let t = self.map_leg(&t, 0, &s_inv);
            self.mul_legs(&t, 1, 0)
        };

        Ok(HausserNillElements { q_r, p_r, q_l, p_l })
    }

    /// Checks `S(t^1) alpha t^2 = 1` for a 2-leg tensor `t`; holds for both
    /// `p_L` and `p_R` of any valid algebra and is what makes them usable as
    /// the `t` of the indicator formula.
    pub fn hn_normalization_holds(&self, t: &Tensor) -> bool {
        let alpha = self.alpha();
        let x = self.map_leg(t, 0, self.antipode_matrix());
        let x = self.lmul_leg(&x, 1, &alpha);
        let folded = self.mul_legs(&x, 0, 1);
        self.element(folded.entries().to_vec()) == self.unit_element()
    }

    /// `nu_H = nabla(q_L . Delta(Lambda) . t)`, the element whose character
    /// values are the Frobenius-Schur indicators.
    pub fn nu_element(
        &self,
        hn: &HausserNillElements,
        integral: &Integral,
        t_choice: TChoice,
    ) -> AlgebraElement {
        let dl = self.delta(integral.lambda());
        let product = self.tensor_mul(&self.tensor_mul(&hn.q_l, &dl), hn.t(t_choice));
        self.nabla(&product)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_group_algebra, GroupTable};
    use crate::field::CycloField;

    #[test]
    fn hopf_case_collapses_to_unit_tensors() {
        let g = GroupTable::quaternion8();
        let h = build_group_algebra(&g, &CycloField::new(4)).unwrap();
        let hn = h.hausser_nill().unwrap();
        let unit2 = h.tensor_unit(2);
        assert_eq!(hn.q_r, unit2);
        assert_eq!(hn.p_r, unit2);
        assert_eq!(hn.q_l, unit2);
        assert_eq!(hn.p_l, unit2);
    }

    #[test]
    fn nu_for_group_algebra_is_average_of_squares() {
        let g = GroupTable::cyclic(4);
        let h = build_group_algebra(&g, &CycloField::new(4)).unwrap();
        let hn = h.hausser_nill().unwrap();
        let lambda = h.normalized_integral().unwrap();
        let nu = h.nu_element(&hn, &lambda, TChoice::Pl);
        // (1/4) sum_g g^2 = (1/4)(2*e0 + 2*e2) in k[Z/4].
        let f = h.field();
        let expected = h.element(vec![f.ratio(1, 2), f.zero(), f.ratio(1, 2), f.zero()]);
        assert_eq!(nu, expected);
        assert_eq!(h.nu_element(&hn, &lambda, TChoice::Pr), expected);
    }

    #[test]
    fn hopf_with_arbitrary_beta_gives_displaced_p_elements() {
        // With phi = 1(x)1(x)1 and alpha = 1 the formulas collapse to
        // p_R = 1 (x) beta and p_L = S^-1(beta) (x) 1, whatever beta is.
        let g = GroupTable::cyclic(3);
        let h = build_group_algebra(&g, &CycloField::new(3)).unwrap();
        let beta = vec![h.field().integer(2), h.field().zeta(), h.field().one()];
        let data = crate::qha::AlgebraData {
            field: h.field().clone(),
            basis_names: h.basis_names().to_vec(),
            unit: h.unit_vec().to_vec(),
            mult: h.mult().clone(),
            comult: h.comult().clone(),
            counit: h.counit_vec().to_vec(),
            phi: h.phi().clone(),
            phi_inv: Some(h.phi_inv().clone()),
            antipode: h.antipode_matrix().clone(),
            alpha: h.unit_vec().to_vec(),
            beta: beta.clone(),
        };
        let skewed = QuasiHopfAlgebra::from_data(data).unwrap();
        let hn = skewed.hausser_nill().unwrap();
        let beta_elem = skewed.beta();
        let expected_p_r = skewed.lmul_leg(&skewed.tensor_unit(2), 1, &beta_elem);
        assert_eq!(hn.p_r, expected_p_r);
        let s_inv_beta = skewed.apply_antipode_inv(&beta_elem).unwrap();
        let expected_p_l = skewed.lmul_leg(&skewed.tensor_unit(2), 0, &s_inv_beta);
        assert_eq!(hn.p_l, expected_p_l);
    }

    #[test]
    fn hn_normalization_across_the_corpus() {
        // S(t^1) alpha t^2 = 1 for t in {p_L, p_R} on every corpus algebra.
        for name in crate::builders::catalog::corpus_names() {
            let bundle = crate::builders::catalog::build(name).unwrap();
            let h = &bundle.algebra;
            let hn = h.hausser_nill().unwrap();
            assert!(h.hn_normalization_holds(&hn.p_l), "{name} p_L");
            assert!(h.hn_normalization_holds(&hn.p_r), "{name} p_R");
        }
    }

    #[test]
    fn hopf_nu_is_nabla_of_delta_lambda() {
        let g = GroupTable::symmetric3();
        let h = build_group_algebra(&g, &CycloField::new(1)).unwrap();
        let hn = h.hausser_nill().unwrap();
        let lambda = h.normalized_integral().unwrap();
        let nu = h.nu_element(&hn, &lambda, TChoice::Pl);
        assert_eq!(nu, h.nabla(&h.delta(lambda.lambda())));
    }

    #[test]
    fn counit_of_nu_is_one() {
        let g = GroupTable::dihedral4();
        let h = build_group_algebra(&g, &CycloField::new(1)).unwrap();
        let hn = h.hausser_nill().unwrap();
        let lambda = h.normalized_integral().unwrap();
        for t in [TChoice::Pl, TChoice::Pr] {
            let nu = h.nu_element(&hn, &lambda, t);
            assert!(h.eps(&nu).is_one());
        }
    }
}
