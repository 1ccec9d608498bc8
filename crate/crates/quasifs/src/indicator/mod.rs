//! Frobenius-Schur indicators and their cross-checks.
//!
//! For each supplied simple module `V` this module computes:
//!
//! * `nu_V = chi_V(nu_H)` for both choices of `t` (the indicator formula),
//! * the trace of the endomorphism `E_VV` of `(V (x) V)^H`, built two ways,
//! * the brute-force trichotomy verdict `mu_V` from invariant bilinear forms,
//!
//! and reports whether all of them coincide in `{0, +1, -1}`. The indicator
//! path and the oracle path share no code beyond the exact linear algebra;
//! the oracle never touches `q_L`, `Lambda`, or `nu_H`.

use serde::Serialize;
use thiserror::Error;

use crate::field::FieldElement;
use crate::qha::{
    AlgebraElement, AlgebraError, HausserNillElements, Integral, IntegralError, QuasiHopfAlgebra,
    TChoice,
};
use crate::rep::{check_module, dual_module, hom_space, Character, DualSide, HModule, RepError};

mod oracle;
mod pivotal;
mod trace;

pub use oracle::{classical_group_indicator, oracle_classify, OracleVerdict};
pub use pivotal::{
    lemma_element_identity_holds, lemma_tensor_identity_holds, pivotal_g, pivotal_g_with_method,
    PivotalData, PivotalMethod,
};
pub use trace::{categorical_trace, e_map, pivotal_morphism, t_map, EMap};

#[derive(Debug, Error)]
pub enum IndicatorError {
    #[error("linear system for the pivotal element has no unique solution")]
    NoUniqueSolution,
    #[error("pivotal candidate is not invertible")]
    Singular,
    #[error("input is not an intertwiner")]
    NotIntertwiner,
    #[error("module fails the module axioms: {0}")]
    InvalidModule(String),
    #[error("oracle inconsistency: {0}")]
    OracleInconsistent(String),
    #[error("internal construction mismatch: {0}")]
    ConstructionMismatch(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Integral(#[from] IntegralError),
}

/// `nu_V = chi_V(nu_H)` for the given `t`-choice.
pub fn fs_indicator(
    h: &QuasiHopfAlgebra,
    hn: &HausserNillElements,
    integral: &Integral,
    v: &HModule,
    t_choice: TChoice,
) -> FieldElement {
    let nu_h = h.nu_element(hn, integral, t_choice);
    Character::of(v).eval(h, &nu_h)
}

/// Everything computed once per algebra and shared across module reports.
#[derive(Debug, Clone)]
pub struct AlgebraAnalysis {
    pub integral: Integral,
    pub hn: HausserNillElements,
    pub pivotal: PivotalData,
    pub nu_pl: AlgebraElement,
    pub nu_pr: AlgebraElement,
}

/// Runs the per-algebra pipeline: integral, Hausser-Nill elements, pivotal
/// element (verifying that both computation methods agree when both apply),
/// and `nu_H` for both `t`-choices.
pub fn analyze(h: &QuasiHopfAlgebra) -> Result<AlgebraAnalysis, IndicatorError> {
    let integral = h.normalized_integral()?;
    let hn = h.hausser_nill()?;
    let pivotal = pivotal_g(h, &integral, &hn, TChoice::Pl)?;
    if pivotal.method == PivotalMethod::BetaInvertible {
        let other =
            pivotal_g_with_method(h, &integral, &hn, TChoice::Pl, PivotalMethod::LinearSystem)?;
        if other.g != pivotal.g {
            return Err(IndicatorError::ConstructionMismatch(
                "pivotal element methods disagree".into(),
            ));
        }
    }
    let pivotal_pr = pivotal_g(h, &integral, &hn, TChoice::Pr)?;
    if pivotal_pr.g != pivotal.g {
        return Err(IndicatorError::ConstructionMismatch(
            "pivotal element depends on the t-choice".into(),
        ));
    }
    let nu_pl = h.nu_element(&hn, &integral, TChoice::Pl);
    let nu_pr = h.nu_element(&hn, &integral, TChoice::Pr);
    Ok(AlgebraAnalysis {
        integral,
        hn,
        pivotal,
        nu_pl,
        nu_pr,
    })
}

/// Per-module record: the indicator under both `t`-choices, the trace of
/// `E_VV`, the oracle verdict, and the agreement flag.
#[derive(Debug, Clone, Serialize)]
pub struct IndicatorReport {
    pub module: String,
    pub dim: usize,
    pub end_dim: usize,
    pub absolutely_simple: bool,
    pub self_dual: bool,
    pub nu_pl: FieldElement,
    pub nu_pr: FieldElement,
    pub trace_e: FieldElement,
    /// Oracle verdict; suppressed (None) when the module is not absolutely
    /// simple, since the trichotomy only covers simples.
    pub mu: Option<i8>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Computes the full indicator record for one module.
pub fn module_report(
    h: &QuasiHopfAlgebra,
    analysis: &AlgebraAnalysis,
    v: &HModule,
) -> Result<IndicatorReport, IndicatorError> {
    let mr = check_module(h, v);
    if !mr.is_module {
        return Err(IndicatorError::InvalidModule(format!(
            "{} (witness {:?})",
            v.name, mr.witness
        )));
    }
    let chi = Character::of(v);
    let nu_pl = chi.eval(h, &analysis.nu_pl);
    let nu_pr = chi.eval(h, &analysis.nu_pr);
    let dual = dual_module(h, v, DualSide::Left)?;
    let self_dual = !hom_space(h, v, &dual).is_empty();

    let e_pl = e_map(
        h,
        &analysis.integral,
        &analysis.hn,
        &analysis.pivotal,
        v,
        v,
        TChoice::Pl,
    )?;
    let e_pr = e_map(
        h,
        &analysis.integral,
        &analysis.hn,
        &analysis.pivotal,
        v,
        v,
        TChoice::Pr,
    )?;
    let trace_pl = e_pl.trace.expect("same-module e_map always has a trace");
    let trace_pr = e_pr.trace.expect("same-module e_map always has a trace");
    if trace_pl != trace_pr {
        return Err(IndicatorError::ConstructionMismatch(format!(
            "trace of E_VV depends on t on module {}",
            v.name
        )));
    }

    let (mu, note) = if mr.absolutely_simple {
        let verdict = oracle_classify(h, v, &analysis.pivotal)?;
        (Some(verdict.mu), None)
    } else {
        (
            None,
            Some(format!(
                "end_dim = {}; not absolutely simple, classification suppressed",
                mr.end_dim
            )),
        )
    };

    let field = h.field();
    let mut agree = nu_pl == nu_pr && nu_pl == trace_pl;
    if let Some(m) = mu {
        agree = agree && nu_pl == field.integer(m as i64);
    }

    Ok(IndicatorReport {
        module: v.name.clone(),
        dim: v.dim(),
        end_dim: mr.end_dim,
        absolutely_simple: mr.absolutely_simple,
        self_dual,
        nu_pl,
        nu_pr,
        trace_e: trace_pl,
        mu,
        agree,
        note,
    })
}
