//! Rational Gaussian elimination with a fixed pivot convention.

use crate::field::FieldElement;

use super::{LinAlgError, Matrix};

/// Reduced row echelon form plus the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct RrefForm {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Particular solution of an inhomogeneous system together with a
/// deterministic kernel basis.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: Vec<FieldElement>,
    pub kernel: Vec<Vec<FieldElement>>,
}

pub(super) fn rref(m: &Matrix) -> RrefForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        // First nonzero pivot in column order keeps the form deterministic.
        let Some(found) = (pivot_row..rows).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        if found != pivot_row {
            for c in 0..cols {
                let tmp = a.at(found, c).clone();
                *a.at_mut(found, c) = a.at(pivot_row, c).clone();
                *a.at_mut(pivot_row, c) = tmp;
            }
        }
        let inv = a
            .at(pivot_row, col)
            .inverse()
            .expect("pivot is nonzero by construction");
        for c in col..cols {
            let v = a.at(pivot_row, c) * &inv;
            *a.at_mut(pivot_row, c) = v;
        }
        for r in 0..rows {
            if r == pivot_row || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for c in col..cols {
                let t = &(a.at(pivot_row, c) * &factor);
                *a.at_mut(r, c) -= t;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    RrefForm { matrix: a, pivots }
}

pub(super) fn kernel_basis(m: &Matrix) -> Vec<Vec<FieldElement>> {
    let field = m.field().clone();
    let RrefForm { matrix, pivots } = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        // Special solution: 1 at the free column, back-filled pivot entries.
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -matrix.at(row, free);
        }
        basis.push(v);
    }
    basis
}

pub(super) fn solve(a: &Matrix, b: &[FieldElement]) -> Result<LinearSolution, LinAlgError> {
    if a.rows() != b.len() {
        return Err(LinAlgError::Shape(format!(
            "system has {} rows but rhs has {} entries",
            a.rows(),
            b.len()
        )));
    }
    let field = a.field().clone();
    let cols = a.cols();
    let mut augmented = Matrix::zero(&field, a.rows(), cols + 1);
    for r in 0..a.rows() {
        for c in 0..cols {
            *augmented.at_mut(r, c) = a.at(r, c).clone();
        }
        *augmented.at_mut(r, cols) = b[r].clone();
    }
    let RrefForm { matrix, pivots } = rref(&augmented);
    if pivots.contains(&cols) {
        return Err(LinAlgError::NoSolution);
    }
    // Particular solution with all free variables set to zero.
    let mut particular = vec![field.zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = matrix.at(row, cols).clone();
    }
    Ok(LinearSolution {
        particular,
        kernel: kernel_basis(a),
    })
}

pub(super) fn invert(m: &Matrix) -> Result<Matrix, LinAlgError> {
    let field = m.field().clone();
    let n = m.rows();
    let mut augmented = Matrix::zero(&field, n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            *augmented.at_mut(r, c) = m.at(r, c).clone();
        }
        *augmented.at_mut(r, n + r) = field.one();
    }
    let RrefForm { matrix, pivots } = rref(&augmented);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(LinAlgError::Singular);
    }
    Ok(Matrix::from_fn(&field, n, n, |r, c| {
        matrix.at(r, n + c).clone()
    }))
}
