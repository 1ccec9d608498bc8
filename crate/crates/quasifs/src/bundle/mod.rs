//! The bundle file format: a single JSON document carrying one quasi-Hopf
//! algebra and its named modules.
//!
//! Tensors serialize as sparse entry lists `[i, j, k, "coeff"]` with 0-based
//! indices, matrices as `[row, col, "coeff"]`, vectors as dense arrays of
//! coefficient strings in the exact-field grammar. `phi_inv` may be omitted,
//! in which case it is computed on load. Loading parses and dimension-checks
//! but does not run axiom validation; that is the `validate` command's job.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{CycloField, FieldElement, FieldError};
use crate::linalg::{Matrix, Tensor};
use crate::qha::{AlgebraData, AlgebraError, QuasiHopfAlgebra};
use crate::rep::HModule;

pub const BUNDLE_FORMAT: &str = "quasifs-bundle";
pub const BUNDLE_VERSION: u32 = 1;
pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("cannot read bundle: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse bundle: {0}")]
    Parse(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("algebra dimension {dim} exceeds QUASIFS_MAX_DIM = {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("bad coefficient: {0}")]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldSection {
    pub conductor: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSection {
    pub dimension: usize,
    pub basis_names: Vec<String>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub phi: Vec<(usize, usize, usize, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_inv: Option<Vec<(usize, usize, usize, String)>>,
    pub antipode: Vec<(usize, usize, String)>,
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleSection {
    pub name: String,
    pub dimension: usize,
    /// One sparse matrix per basis element of the algebra.
    pub action: Vec<Vec<(usize, usize, String)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BundleFile {
    pub format: String,
    pub version: u32,
    pub field: FieldSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    pub algebra: AlgebraSection,
    pub modules: Vec<ModuleSection>,
}

/// A parsed bundle: the algebra plus its named modules.
#[derive(Debug, Clone, PartialEq)]
pub struct Bundle {
    pub algebra: QuasiHopfAlgebra,
    pub modules: Vec<HModule>,
    pub provenance: Option<String>,
}

fn max_dim() -> usize {
    std::env::var("QUASIFS_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn parse_vector(
    field: &CycloField,
    values: &[String],
    n: usize,
    what: &str,
) -> Result<Vec<FieldElement>, BundleError> {
    if values.len() != n {
        return Err(BundleError::Dimension(format!(
            "{what} has {} entries, expected {n}",
            values.len()
        )));
    }
    values.iter().map(|s| Ok(field.parse(s)?)).collect()
}

fn parse_tensor3(
    field: &CycloField,
    entries: &[(usize, usize, usize, String)],
    n: usize,
    what: &str,
) -> Result<Tensor, BundleError> {
    let mut t = Tensor::zero(field, vec![n, n, n]);
    for (i, j, k, coeff) in entries {
        if *i >= n || *j >= n || *k >= n {
            return Err(BundleError::Dimension(format!(
                "{what} entry ({i}, {j}, {k}) out of range for dimension {n}"
            )));
        }
        t.add_assign_at(&[*i, *j, *k], &field.parse(coeff)?);
    }
    Ok(t)
}

fn parse_matrix(
    field: &CycloField,
    entries: &[(usize, usize, String)],
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<Matrix, BundleError> {
    let mut m = Matrix::zero(field, rows, cols);
    for (r, c, coeff) in entries {
        if *r >= rows || *c >= cols {
            return Err(BundleError::Dimension(format!(
                "{what} entry ({r}, {c}) out of range for shape {rows}x{cols}"
            )));
        }
        *m.at_mut(*r, *c) += &field.parse(coeff)?;
    }
    Ok(m)
}

impl BundleFile {
    pub fn from_json(text: &str) -> Result<BundleFile, BundleError> {
        let file: BundleFile =
            serde_json::from_str(text).map_err(|e| BundleError::Parse(e.to_string()))?;
        if file.format != BUNDLE_FORMAT {
            return Err(BundleError::Parse(format!(
                "unknown format {:?}, expected {BUNDLE_FORMAT:?}",
                file.format
            )));
        }
        if file.version != BUNDLE_VERSION {
            return Err(BundleError::Parse(format!(
                "unsupported version {}, expected {BUNDLE_VERSION}",
                file.version
            )));
        }
        Ok(file)
    }

    /// Builds the in-memory bundle: field construction, coefficient parsing,
    /// dimension checks.
    pub fn into_bundle(self) -> Result<Bundle, BundleError> {
        if self.field.conductor == 0 {
            return Err(BundleError::Dimension("conductor must be positive".into()));
        }
        let n = self.algebra.dimension;
        let cap = max_dim();
        if n > cap {
            return Err(BundleError::TooLarge { dim: n, max: cap });
        }
        if n == 0 {
            return Err(BundleError::Dimension("algebra dimension is zero".into()));
        }
        if self.algebra.basis_names.len() != n {
            return Err(BundleError::Dimension(format!(
                "{} basis names for dimension {n}",
                self.algebra.basis_names.len()
            )));
        }
        let field = CycloField::new(self.field.conductor);
        let algebra = QuasiHopfAlgebra::from_data(AlgebraData {
            field: field.clone(),
            basis_names: self.algebra.basis_names.clone(),
            unit: parse_vector(&field, &self.algebra.unit, n, "unit")?,
            mult: parse_tensor3(&field, &self.algebra.mult, n, "mult")?,
            comult: parse_tensor3(&field, &self.algebra.comult, n, "comult")?,
            counit: parse_vector(&field, &self.algebra.counit, n, "counit")?,
            phi: parse_tensor3(&field, &self.algebra.phi, n, "phi")?,
            phi_inv: self
                .algebra
                .phi_inv
                .as_ref()
                .map(|entries| parse_tensor3(&field, entries, n, "phi_inv"))
                .transpose()?,
            antipode: parse_matrix(&field, &self.algebra.antipode, n, n, "antipode")?,
            alpha: parse_vector(&field, &self.algebra.alpha, n, "alpha")?,
            beta: parse_vector(&field, &self.algebra.beta, n, "beta")?,
        })?;
        let mut modules = Vec::with_capacity(self.modules.len());
        for section in &self.modules {
            let d = section.dimension;
            if d == 0 {
                return Err(BundleError::Dimension(format!(
                    "module {:?} has dimension zero",
                    section.name
                )));
            }
            if section.action.len() != n {
                return Err(BundleError::Dimension(format!(
                    "module {:?} has {} action matrices, expected {n}",
                    section.name,
                    section.action.len()
                )));
            }
            let action: Vec<Matrix> = section
                .action
                .iter()
                .enumerate()
                .map(|(i, entries)| {
                    parse_matrix(
                        &field,
                        entries,
                        d,
                        d,
                        &format!("module {:?} action {i}", section.name),
                    )
                })
                .collect::<Result<_, _>>()?;
            modules.push(HModule::new(section.name.clone(), action));
        }
        Ok(Bundle {
            algebra,
            modules,
            provenance: self.provenance,
        })
    }
}

impl Bundle {
    /// Serializes back to the file representation with canonical sparse
    /// entry order (lexicographic) and canonical coefficient strings.
    pub fn to_file(&self) -> BundleFile {
        let h = &self.algebra;
        let tensor_entries = |t: &Tensor| -> Vec<(usize, usize, usize, String)> {
            t.nonzero()
                .into_iter()
                .map(|(idx, v)| (idx[0], idx[1], idx[2], v.to_string()))
                .collect()
        };
        let matrix_entries = |m: &Matrix| -> Vec<(usize, usize, String)> {
            let mut out = Vec::new();
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if !m.at(r, c).is_zero() {
                        out.push((r, c, m.at(r, c).to_string()));
                    }
                }
            }
            out
        };
        let vector_strings =
            |v: &[FieldElement]| -> Vec<String> { v.iter().map(|e| e.to_string()).collect() };
        BundleFile {
            format: BUNDLE_FORMAT.to_string(),
            version: BUNDLE_VERSION,
            field: FieldSection {
                conductor: h.field().conductor(),
            },
            provenance: self.provenance.clone(),
            algebra: AlgebraSection {
                dimension: h.dim(),
                basis_names: h.basis_names().to_vec(),
                unit: vector_strings(h.unit_vec()),
                counit: vector_strings(h.counit_vec()),
                mult: tensor_entries(h.mult()),
                comult: tensor_entries(h.comult()),
                phi: tensor_entries(h.phi()),
                phi_inv: Some(tensor_entries(h.phi_inv())),
                antipode: matrix_entries(h.antipode_matrix()),
                alpha: vector_strings(h.alpha().coeffs()),
                beta: vector_strings(h.beta().coeffs()),
            },
            modules: self
                .modules
                .iter()
                .map(|m| ModuleSection {
                    name: m.name.clone(),
                    dimension: m.dim(),
                    action: m.action().iter().map(matrix_entries).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_file()).expect("bundle serializes");
        text.push('\n');
        text
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), BundleError> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// Loads and parses a bundle file.
pub fn load_bundle(path: impl AsRef<Path>) -> Result<Bundle, BundleError> {
    let text = std::fs::read_to_string(path)?;
    BundleFile::from_json(&text)?.into_bundle()
}

impl From<crate::builders::catalog::CorpusBundle> for Bundle {
    fn from(corpus: crate::builders::catalog::CorpusBundle) -> Bundle {
        Bundle {
            algebra: corpus.algebra,
            modules: corpus.modules,
            provenance: Some(corpus.provenance),
        }
    }
}
