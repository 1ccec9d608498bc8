//! Independent classification oracles.
//!
//! [`oracle_classify`] decides the trichotomy directly from bilinear forms:
//! it computes `Hom_H(V, *V)` (no indicator formula involved), takes the
//! generator as a form `sigma(v, w) = f(v)(w)`, verifies nondegeneracy and
//! the adjoint property, and extracts the sign `mu` from
//! `sigma(v, w) = mu sigma(w, g v)`. The only thing it shares with the
//! indicator path is the exact linear algebra and the pivotal element.
//!
//! [`classical_group_indicator`] is the brute-force group-theoretic formula
//! `(1/|G|) sum_g chi(g^2)`, used to regression-test the Hopf case.

use crate::builders::GroupTable;
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::qha::QuasiHopfAlgebra;
use crate::rep::{dual_module, hom_space, DualSide, HModule};

use super::{IndicatorError, PivotalData};

/// The trichotomy verdict: `mu = 0` (not self-dual), `+1` (symmetric-type
/// invariant form), or `-1` (skew-type), with the certifying form when one
/// exists.
#[derive(Debug, Clone)]
pub struct OracleVerdict {
    pub mu: i8,
    /// Matrix of the nondegenerate form with adjoint `S`, when `mu != 0`.
    pub certificate: Option<Matrix>,
}

pub fn oracle_classify(
    h: &QuasiHopfAlgebra,
    v: &HModule,
    piv: &PivotalData,
) -> Result<OracleVerdict, IndicatorError> {
    let dual = dual_module(h, v, DualSide::Left)?;
    let hom = hom_space(h, v, &dual);
    if hom.is_empty() {
        return Ok(OracleVerdict {
            mu: 0,
            certificate: None,
        });
    }
    if hom.len() > 1 {
        return Err(IndicatorError::OracleInconsistent(format!(
            "Hom(V, *V) has dimension {} on {}; module is not absolutely simple",
            hom.len(),
            v.name
        )));
    }
    // sigma(v_a, v_b) = f(v_a)(v_b), so the form matrix is F^T.
    let sigma = hom[0].transpose();
    if sigma.invert().is_err() {
        return Err(IndicatorError::OracleInconsistent(format!(
            "invariant form on {} is degenerate",
            v.name
        )));
    }
    // Adjoint property sigma(h v, w) = sigma(v, S(h) w).
    for i in 0..h.dim() {
        let lhs = v.action_of(i).transpose().mul(&sigma);
        let s_ei = h.apply_antipode(&h.basis_element(i));
        let rhs = sigma.mul(&v.rho(h, &s_ei));
        if lhs != rhs {
            return Err(IndicatorError::OracleInconsistent(format!(
                "form on {} does not have adjoint S (basis index {i})",
                v.name
            )));
        }
    }
    // sigma'(v, w) = sigma(w, g v).
    let sigma_prime = sigma.mul(&v.rho(h, &piv.g)).transpose();
    let d = v.dim();
    let mut mu_value: Option<FieldElement> = None;
    'find: for a in 0..d {
        for b in 0..d {
            if !sigma_prime.at(a, b).is_zero() {
                mu_value = Some(
                    sigma
                        .at(a, b)
                        .checked_div(sigma_prime.at(a, b))
                        .expect("entry is nonzero"),
                );
                break 'find;
            }
        }
    }
    let mu_value = mu_value.ok_or_else(|| {
        IndicatorError::OracleInconsistent(format!("sigma' vanishes identically on {}", v.name))
    })?;
    // The scalar found at one entry must work globally.
    if sigma != sigma_prime.scale(&mu_value) {
        return Err(IndicatorError::OracleInconsistent(format!(
            "sigma != mu sigma' on {}",
            v.name
        )));
    }
    let one = h.field().one();
    let mu = if mu_value == one {
        1i8
    } else if mu_value == -&one {
        -1i8
    } else {
        return Err(IndicatorError::OracleInconsistent(format!(
            "mu = {mu_value} is not a sign on {}",
            v.name
        )));
    };
    Ok(OracleVerdict {
        mu,
        certificate: Some(sigma),
    })
}

/// `(1/|G|) sum_g chi(g^2)`, evaluated exactly from a character table row.
pub fn classical_group_indicator(table: &GroupTable, chi: &[FieldElement]) -> FieldElement {
    assert_eq!(chi.len(), table.order(), "character length mismatch");
    let field = chi[0].field().clone();
    let mut sum = field.zero();
    for g in 0..table.order() {
        sum += &chi[table.mul(g, g)];
    }
    let order = field.integer(table.order() as i64);
    sum.checked_div(&order).expect("group order is nonzero")
}
