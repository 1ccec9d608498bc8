//! Dense tensors with an arbitrary number of legs, entries in lexicographic
//! index order (last leg fastest). Contraction iterates over nonzero entries
//! only, so the sparse structure-constant tensors of the algebra layer stay
//! cheap even when their dense shape is large.

use std::collections::HashMap;
use std::fmt;

use crate::field::{CycloField, FieldElement};

use super::{LinAlgError, Matrix};

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    field: CycloField,
    legs: Vec<usize>,
    entries: Vec<FieldElement>,
}

impl Tensor {
    pub fn zero(field: &CycloField, legs: Vec<usize>) -> Self {
        let size = legs.iter().product::<usize>();
        Tensor {
            field: field.clone(),
            legs,
            entries: vec![field.zero(); size],
        }
    }

    pub fn new(field: CycloField, legs: Vec<usize>, entries: Vec<FieldElement>) -> Self {
        assert_eq!(
            entries.len(),
            legs.iter().product::<usize>(),
            "entry count must match leg dimensions"
        );
        Tensor {
            field,
            legs,
            entries,
        }
    }

    pub fn from_fn(
        field: &CycloField,
        legs: Vec<usize>,
        mut f: impl FnMut(&[usize]) -> FieldElement,
    ) -> Self {
        let mut t = Tensor::zero(field, legs);
        let mut idx = vec![0usize; t.legs.len()];
        for flat in 0..t.entries.len() {
            t.unflatten(flat, &mut idx);
            t.entries[flat] = f(&idx);
        }
        t
    }

    pub fn from_matrix(m: &Matrix) -> Tensor {
        Tensor {
            field: m.field().clone(),
            legs: vec![m.rows(), m.cols()],
            entries: m.entries().to_vec(),
        }
    }

    /// Reinterprets the tensor as a matrix, first `row_legs` legs as rows.
    pub fn to_matrix(&self, row_legs: usize) -> Matrix {
        let rows: usize = self.legs[..row_legs].iter().product();
        let cols: usize = self.legs[row_legs..].iter().product();
        Matrix::new(self.field.clone(), rows, cols, self.entries.clone())
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.legs.len());
        let mut flat = 0;
        for (i, &d) in self.legs.iter().enumerate() {
            debug_assert!(idx[i] < d);
            flat = flat * d + idx[i];
        }
        flat
    }

    fn unflatten(&self, mut flat: usize, idx: &mut [usize]) {
        for (i, &d) in self.legs.iter().enumerate().rev() {
            idx[i] = flat % d;
            flat /= d;
        }
    }

    pub fn get(&self, idx: &[usize]) -> &FieldElement {
        &self.entries[self.flatten(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: FieldElement) {
        let flat = self.flatten(idx);
        self.entries[flat] = value;
    }

    pub fn add_assign_at(&mut self, idx: &[usize], value: &FieldElement) {
        let flat = self.flatten(idx);
        self.entries[flat] += value;
    }

    /// The value of a 0-leg tensor.
    pub fn scalar_value(&self) -> FieldElement {
        assert!(self.legs.is_empty(), "not a scalar tensor");
        self.entries[0].clone()
    }

    pub fn add(&self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.legs, rhs.legs, "tensor shape mismatch");
        Tensor {
            field: self.field.clone(),
            legs: self.legs.clone(),
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.legs, rhs.legs, "tensor shape mismatch");
        Tensor {
            field: self.field.clone(),
            legs: self.legs.clone(),
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &FieldElement) -> Tensor {
        Tensor {
            field: self.field.clone(),
            legs: self.legs.clone(),
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Nonzero entries as (multi-index, value) pairs.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, &FieldElement)> {
        let mut out = Vec::new();
        let mut idx = vec![0usize; self.legs.len()];
        for flat in 0..self.entries.len() {
            if self.entries[flat].is_zero() {
                continue;
            }
            self.unflatten(flat, &mut idx);
            out.push((idx.clone(), &self.entries[flat]));
        }
        out
    }

    /// Reorders legs: output leg `i` is input leg `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.legs.len(), "permutation arity mismatch");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(!seen[p], "not a permutation");
            seen[p] = true;
        }
        let legs: Vec<usize> = perm.iter().map(|&p| self.legs[p]).collect();
        let mut out = Tensor::zero(&self.field, legs);
        let mut in_idx = vec![0usize; perm.len()];
        let mut out_idx = vec![0usize; perm.len()];
        for flat in 0..self.entries.len() {
            if self.entries[flat].is_zero() {
                continue;
            }
            self.unflatten(flat, &mut in_idx);
            for (a, &p) in perm.iter().enumerate() {
                out_idx[a] = in_idx[p];
            }
            let oflat = out.flatten(&out_idx);
            out.entries[oflat] = self.entries[flat].clone();
        }
        out
    }

    /// Contracts paired legs with `other`: sums products over each pair
    /// `(self_leg, other_leg)`. Output legs are the unpaired legs of `self`
    /// followed by the unpaired legs of `other`; an empty pairing is the
    /// outer (Kronecker) product.
    pub fn contract(&self, other: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor, LinAlgError> {
        for &(a, b) in pairs {
            if a >= self.legs.len() || b >= other.legs.len() {
                return Err(LinAlgError::LegMismatch(format!(
                    "pair ({a},{b}) out of range for shapes {:?} and {:?}",
                    self.legs, other.legs
                )));
            }
            if self.legs[a] != other.legs[b] {
                return Err(LinAlgError::LegMismatch(format!(
                    "leg {a} (dim {}) cannot contract with leg {b} (dim {})",
                    self.legs[a], other.legs[b]
                )));
            }
        }
        let mut self_paired = vec![None; self.legs.len()];
        let mut other_paired = vec![None; other.legs.len()];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if self_paired[a].is_some() || other_paired[b].is_some() {
                return Err(LinAlgError::LegMismatch("leg paired twice".into()));
            }
            self_paired[a] = Some(k);
            other_paired[b] = Some(k);
        }
        let self_free: Vec<usize> = (0..self.legs.len())
            .filter(|&i| self_paired[i].is_none())
            .collect();
        let other_free: Vec<usize> = (0..other.legs.len())
            .filter(|&i| other_paired[i].is_none())
            .collect();
        let out_legs: Vec<usize> = self_free
            .iter()
            .map(|&i| self.legs[i])
            .chain(other_free.iter().map(|&i| other.legs[i]))
            .collect();
        let mut out = Tensor::zero(&self.field, out_legs);

        // Bucket the nonzeros of `other` by their paired-index key.
        let mut buckets: HashMap<Vec<usize>, Vec<(Vec<usize>, &FieldElement)>> = HashMap::new();
        for (idx, v) in other.nonzero() {
            let key: Vec<usize> = pairs.iter().map(|&(_, b)| idx[b]).collect();
            let free: Vec<usize> = other_free.iter().map(|&i| idx[i]).collect();
            buckets.entry(key).or_default().push((free, v));
        }

        let mut out_idx = vec![0usize; out.legs.len()];
        for (idx, v) in self.nonzero() {
            let key: Vec<usize> = pairs.iter().map(|&(a, _)| idx[a]).collect();
            let Some(matches) = buckets.get(&key) else {
                continue;
            };
            for (i, &leg) in self_free.iter().enumerate() {
                out_idx[i] = idx[leg];
            }
            for (ofree, w) in matches {
                out_idx[self_free.len()..].copy_from_slice(ofree);
                let prod = v * *w;
                out.add_assign_at(&out_idx, &prod);
            }
        }
        Ok(out)
    }

    /// Applies a linear map to one leg: the leg's dimension becomes the
    /// matrix row count and the new index is `sum_j m[i,j] * t[..., j, ...]`.
    pub fn apply_to_leg(&self, m: &Matrix, leg: usize) -> Result<Tensor, LinAlgError> {
        if m.cols() != self.legs[leg] {
            return Err(LinAlgError::LegMismatch(format!(
                "matrix with {} columns applied to leg of dimension {}",
                m.cols(),
                self.legs[leg]
            )));
        }
        let contracted = Tensor::from_matrix(m).contract(self, &[(1, leg)])?;
        // The mapped leg comes out first; rotate it back into place.
        let arity = self.legs.len();
        let mut perm = Vec::with_capacity(arity);
        for i in 0..arity {
            use std::cmp::Ordering::*;
            match i.cmp(&leg) {
                Less => perm.push(i + 1),
                Equal => perm.push(0),
                Greater => perm.push(i),
            }
        }
        Ok(contracted.permute(&perm))
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tensor {:?} [", self.legs)?;
        for (idx, v) in self.nonzero() {
            writeln!(f, "  {idx:?} -> {v}")?;
        }
        write!(f, "]")
    }
}
