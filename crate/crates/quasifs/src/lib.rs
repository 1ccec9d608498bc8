//! quasifs: exact Frobenius-Schur indicators for semisimple quasi-Hopf
//! algebras.
//!
//! A quasi-Hopf algebra is supplied by structure constants over a cyclotomic
//! field Q(zeta_N). The crate validates the defining axioms, computes the
//! normalized integral, the Hausser-Nill elements, the pivotal element and
//! the indicator `nu_V = chi_V(nabla(q_L Delta(Lambda) t))` for each supplied
//! simple module, and cross-checks every indicator against an independent
//! bilinear-form oracle that classifies self-duality directly.
//!
//! Library layout:
//! - [`field`]: exact arithmetic in Q(zeta_N),
//! - [`linalg`]: dense matrices and tensors over the field,
//! - [`qha`]: the quasi-Hopf algebra type, validator, integral and
//!   Hausser-Nill elements,
//! - [`rep`]: modules, duals, tensor products, invariants, hom spaces and
//!   the adjunction between invariants and intertwiners,
//! - [`indicator`]: pivotal element, categorical trace, indicators and the
//!   brute-force classification oracle,
//! - [`builders`]: group algebras, twisted dual group algebras from
//!   3-cocycles, and their simple modules,
//! - [`bundle`]: the JSON bundle file format,
//! - [`cli`]: the `quasifs` command-line surface.
//!
//! The `examples/` directory has one runnable example per capability; the
//! `quasifs` binary is a thin wrapper over [`cli`].

pub mod builders;
pub mod bundle;
pub mod cli;
pub mod field;
pub mod indicator;
pub mod linalg;
pub mod qha;
pub mod rep;

pub use field::{CycloField, FieldElement, Rational};
pub use linalg::{Matrix, Tensor};
pub use qha::{AlgebraElement, HausserNillElements, Integral, QuasiHopfAlgebra};
pub use rep::HModule;
