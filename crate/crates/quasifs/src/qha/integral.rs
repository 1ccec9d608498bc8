//! The normalized integral: the element `Lambda` with `h Lambda = eps(h)
//! Lambda` for all `h` and `eps(Lambda) = 1`. It exists exactly when the
//! algebra is semisimple, and then it is unique; a solution space of higher
//! dimension is an error rather than a choice, because downstream verdicts
//! would silently depend on the pick.

use thiserror::Error;

use crate::linalg::Matrix;

use super::{AlgebraElement, QuasiHopfAlgebra};

#[derive(Debug, Error)]
pub enum IntegralError {
    #[error("no nonzero integral: the space of solutions of h*x = eps(h)*x is zero")]
    NoIntegral,
    #[error("integral space is not normalizable: eps vanishes on it (H is not semisimple)")]
    NotNormalizable,
    #[error("integral space has dimension {0} > 1; refusing to choose")]
    Ambiguous(usize),
}

/// A normalized integral.
#[derive(Debug, Clone, PartialEq)]
pub struct Integral {
    lambda: AlgebraElement,
}

impl Integral {
    pub fn lambda(&self) -> &AlgebraElement {
        &self.lambda
    }
}

impl QuasiHopfAlgebra {
    /// Solves `rho_left(e_i) x = eps(e_i) x` for all `i` jointly and
    /// normalizes by the counit.
    pub fn normalized_integral(&self) -> Result<Integral, IntegralError> {
        let n = self.dim();
        let field = self.field().clone();
        let mut blocks = Vec::with_capacity(n);
        for i in 0..n {
            let mut block = self.left_mult_matrix(&self.basis_element(i));
            let eps_i = self.eps(&self.basis_element(i));
            for d in 0..n {
                *block.at_mut(d, d) -= &eps_i;
            }
            blocks.push(block);
        }
        let stacked = Matrix::vstack(&field, &blocks.iter().collect::<Vec<_>>());
        let kernel = stacked.kernel_basis();
        match kernel.len() {
            0 => Err(IntegralError::NoIntegral),
            1 => {
                let v = AlgebraElement::new(kernel.into_iter().next().unwrap());
                let e = self.eps(&v);
                if e.is_zero() {
                    return Err(IntegralError::NotNormalizable);
                }
                let inv = e.inverse().expect("nonzero by the check above");
                let lambda =
                    AlgebraElement::new(v.coeffs().iter().map(|c| c * &inv).collect());
                debug_assert!(self.eps(&lambda).is_one());
                Ok(Integral { lambda })
            }
            d => Err(IntegralError::Ambiguous(d)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_group_algebra, GroupTable};
    use crate::field::CycloField;

    #[test]
    fn group_algebra_integral_is_the_average() {
        let g = GroupTable::symmetric3();
        let h = build_group_algebra(&g, &CycloField::new(1)).unwrap();
        let lambda = h.normalized_integral().unwrap();
        let sixth = h.field().ratio(1, 6);
        assert!(lambda
            .lambda()
            .coeffs()
            .iter()
            .all(|c| *c == sixth));
    }

    #[test]
    fn null_algebra_has_no_normalized_integral() {
        // k[Z/2] with the non-unit part of the multiplication zeroed out:
        // e1*e1 = 0 instead of e0. The integral space degenerates.
        let g = GroupTable::cyclic(2);
        let h = build_group_algebra(&g, &CycloField::new(2)).unwrap();
        let mut mult = h.mult().clone();
        mult.set(&[1, 1, 0], h.field().zero());
        let data = crate::qha::AlgebraData {
            field: h.field().clone(),
            basis_names: h.basis_names().to_vec(),
            unit: h.unit_vec().to_vec(),
            mult,
            comult: h.comult().clone(),
            counit: h.counit_vec().to_vec(),
            phi: h.phi().clone(),
            phi_inv: Some(h.phi_inv().clone()),
            antipode: h.antipode_matrix().clone(),
            alpha: h.alpha().coeffs().to_vec(),
            beta: h.beta().coeffs().to_vec(),
        };
        let broken = QuasiHopfAlgebra::from_data(data).unwrap();
        assert!(matches!(
            broken.normalized_integral(),
            Err(IntegralError::NoIntegral) | Err(IntegralError::NotNormalizable)
        ));
    }

    #[test]
    fn integral_absorbs_left_multiplication() {
        let g = GroupTable::cyclic(4);
        let h = build_group_algebra(&g, &CycloField::new(4)).unwrap();
        let lambda = h.normalized_integral().unwrap();
        for i in 0..h.dim() {
            let prod = h.mul_elements(&h.basis_element(i), lambda.lambda());
            let eps_i = h.eps(&h.basis_element(i));
            let scaled = AlgebraElement::new(
                lambda.lambda().coeffs().iter().map(|c| c * &eps_i).collect(),
            );
            assert_eq!(prod, scaled);
        }
    }
}
