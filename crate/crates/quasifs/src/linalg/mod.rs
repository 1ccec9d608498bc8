//! Exact dense matrices and multi-leg tensors over a cyclotomic field.
//!
//! This is the computational substrate for every structure equation in the
//! crate: module actions, structure-constant contractions, and the linear
//! systems behind integrals, hom spaces and invariant subspaces. All
//! elimination is plain rational Gaussian elimination with a deterministic
//! pivot rule (first nonzero entry, pivots normalized to 1), so kernel bases
//! and echelon forms are reproducible byte for byte.

use std::fmt;

use thiserror::Error;

use crate::field::{CycloField, FieldElement};

mod solve;
mod tensor;

pub use solve::{LinearSolution, RrefForm};
pub use tensor::Tensor;

#[derive(Debug, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("leg mismatch: {0}")]
    LegMismatch(String),
    #[error("inconsistent linear system")]
    NoSolution,
    #[error("singular matrix")]
    Singular,
}

/// Row-major dense matrix over a fixed cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: CycloField,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(field: CycloField, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(field: &CycloField, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &CycloField, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_fn(
        field: &CycloField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix::new(field.clone(), rows, cols, entries)
    }

    /// Column vector from a coefficient slice.
    pub fn column(field: &CycloField, v: &[FieldElement]) -> Self {
        Matrix::new(field.clone(), v.len(), 1, v.to_vec())
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut FieldElement {
        &mut self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col_vec(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.at(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn scale(&self, s: &FieldElement) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(&self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    *out.at_mut(r, c) += &t;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "matrix apply shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                let t = a * &v[c];
                out[r] += &t;
            }
        }
        out
    }

    pub fn trace(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Kronecker product with the tensor-basis ordering (a, b) -> a*cols(B)+b.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zero(&self.field, rows, cols);
        for ra in 0..self.rows {
            for ca in 0..self.cols {
                let a = self.at(ra, ca);
                if a.is_zero() {
                    continue;
                }
                for rb in 0..rhs.rows {
                    for cb in 0..rhs.cols {
                        let b = rhs.at(rb, cb);
                        if b.is_zero() {
                            continue;
                        }
                        *out.at_mut(ra * rhs.rows + rb, ca * rhs.cols + cb) = a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact inverse; `Err(Singular)` signals invalid structure data.
    pub fn invert(&self) -> Result<Matrix, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::Shape("inverse of a non-square matrix".into()));
        }
        solve::invert(self)
    }

    /// Reduced row echelon form with deterministic pivoting.
    pub fn rref(&self) -> RrefForm {
        solve::rref(self)
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Deterministic kernel basis (one special solution per free column).
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        solve::kernel_basis(self)
    }

    /// Solves `self * x = b` for a column vector `b`.
    pub fn solve(&self, b: &[FieldElement]) -> Result<LinearSolution, LinAlgError> {
        solve::solve(self, b)
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> Vec<Vec<FieldElement>> {
        let r = self.rref();
        (0..r.pivots.len())
            .map(|i| r.matrix.row(i).to_vec())
            .collect()
    }

    /// Stacks matrices vertically.
    pub fn vstack(field: &CycloField, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |m| m.cols);
        let rows = blocks.iter().map(|m| m.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for m in blocks {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            entries.extend_from_slice(&m.entries);
        }
        Matrix::new(field.clone(), rows, cols, entries)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn f4() -> CycloField {
        CycloField::new(4)
    }

    #[test]
    fn invert_identity() {
        let f = f4();
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn invert_round_trip() {
        let f = f4();
        let m = Matrix::from_fn(&f, 2, 2, |r, c| match (r, c) {
            (0, 0) => f.zeta(),
            (0, 1) => f.one(),
            (1, 0) => f.integer(2),
            _ => -f.zeta(),
        });
        let inv = m.invert().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn singular_matrix_detected() {
        let f = f4();
        let m = Matrix::from_fn(&f, 2, 2, |_, _| f.one());
        assert!(matches!(m.invert(), Err(LinAlgError::Singular)));
    }

    #[test]
    fn trace_of_zeta_diagonal_vanishes() {
        let f = f4();
        let m = Matrix::from_fn(&f, 2, 2, |r, c| {
            if r == c {
                if r == 0 {
                    f.zeta()
                } else {
                    -f.zeta()
                }
            } else {
                f.zero()
            }
        });
        assert!(m.trace().is_zero());
    }

    #[test]
    fn trace_is_cyclic() {
        let f = f4();
        let a = Matrix::from_fn(&f, 3, 3, |r, c| f.integer((2 * r + 3 * c + 1) as i64));
        let b = Matrix::from_fn(&f, 3, 3, |r, c| {
            if (r + c) % 2 == 0 {
                f.zeta()
            } else {
                f.ratio(1, 3)
            }
        });
        assert_eq!(a.mul(&b).trace(), b.mul(&a).trace());
    }

    #[test]
    fn double_inverse_is_identity_map() {
        let f = CycloField::new(3);
        // A handful of deterministic invertible matrices up to dim 6.
        for dim in 1..=6usize {
            let m = Matrix::from_fn(&f, dim, dim, |r, c| {
                if r == c {
                    f.integer(2)
                } else if c == r + 1 {
                    f.zeta()
                } else if r == dim - 1 && c == 0 {
                    f.ratio(1, 2)
                } else {
                    f.zero()
                }
            });
            let inv = m.invert().unwrap();
            assert_eq!(inv.invert().unwrap(), m);
        }
    }

    #[test]
    fn kronecker_spot_check() {
        let f = f4();
        let a = Matrix::from_fn(&f, 2, 2, |r, c| f.integer((r * 2 + c) as i64));
        let b = Matrix::identity(&f, 2);
        let k = a.kronecker(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.at(0, 2), *a.at(0, 1));
        assert_eq!(*k.at(1, 3), *a.at(0, 1));
        assert!(k.at(0, 1).is_zero());
    }

    #[test]
    fn scale_by_rational() {
        let f = f4();
        let m = Matrix::identity(&f, 2).scale(&f.ratio(1, 2));
        assert_eq!(*m.at(0, 0), f.from_rational(Rational::new(1.into(), 2.into())));
    }
}
