//! The quasi-Hopf algebra data type and element-level operations.
//!
//! An algebra of dimension `n` is given entirely by structure constants over
//! a cyclotomic field: a multiplication tensor `mult[i,j,k]` with
//! `e_i e_j = sum_k mult[i,j,k] e_k`, a comultiplication tensor
//! `comult[i,j,k]` with `Delta(e_i) = sum_{j,k} comult[i,j,k] e_j (x) e_k`,
//! the counit, the associator `phi` and its inverse in `H (x) H (x) H`, the
//! antipode matrix `S` (column `j` holds the coefficients of `S(e_j)`), and
//! the quasi-antipode elements `alpha`, `beta`.
//!
//! Nothing is assumed: the axioms are checked by [`QuasiHopfAlgebra::validate`]
//! and every downstream quantity (integral, Hausser-Nill elements, `nu_H`) is
//! computed from the constants by exact contractions.

use std::fmt;

use thiserror::Error;

use crate::field::{CycloField, FieldElement};
use crate::linalg::{LinAlgError, Matrix, Tensor};

mod hausser_nill;
mod integral;
mod validate;

pub use hausser_nill::HausserNillElements;
pub use integral::{Integral, IntegralError};
pub use validate::{AxiomCheck, ValidationLevel, ValidationReport};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("malformed algebra data: {0}")]
    Shape(String),
    #[error("antipode matrix is singular; not a valid quasi-Hopf algebra")]
    Singular,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("phi is not invertible in H^(x)3")]
    PhiNotInvertible,
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Which Hausser-Nill element plays the role of `t` in the indicator formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TChoice {
    Pl,
    Pr,
}

impl TChoice {
    pub fn label(self) -> &'static str {
        match self {
            TChoice::Pl => "pl",
            TChoice::Pr => "pr",
        }
    }
}

/// An element of the algebra: its coefficient vector in the structure basis.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: Vec<FieldElement>,
}

impl AlgebraElement {
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Raw constructor input for [`QuasiHopfAlgebra`]. `phi_inv` may be omitted;
/// it is then computed by solving `phi * x = 1 (x) 1 (x) 1` and cross-checked
/// on the other side.
pub struct AlgebraData {
    pub field: CycloField,
    pub basis_names: Vec<String>,
    pub unit: Vec<FieldElement>,
    pub mult: Tensor,
    pub comult: Tensor,
    pub counit: Vec<FieldElement>,
    pub phi: Tensor,
    pub phi_inv: Option<Tensor>,
    pub antipode: Matrix,
    pub alpha: Vec<FieldElement>,
    pub beta: Vec<FieldElement>,
}

/// A finite-dimensional quasi-Hopf algebra given by structure constants.
/// Immutable after construction; all operations are pure.
#[derive(Clone, PartialEq)]
pub struct QuasiHopfAlgebra {
    field: CycloField,
    n: usize,
    basis_names: Vec<String>,
    unit: Vec<FieldElement>,
    mult: Tensor,
    comult: Tensor,
    counit: Vec<FieldElement>,
    phi: Tensor,
    phi_inv: Tensor,
    antipode: Matrix,
    antipode_inv: Option<Matrix>,
    alpha: Vec<FieldElement>,
    beta: Vec<FieldElement>,
}

impl QuasiHopfAlgebra {
    pub fn from_data(data: AlgebraData) -> Result<Self, AlgebraError> {
        let n = data.basis_names.len();
        let field = data.field.clone();
        let dims = |t: &Tensor, name: &str| -> Result<(), AlgebraError> {
            if t.legs() != [n, n, n] {
                return Err(AlgebraError::Shape(format!(
                    "{name} tensor has legs {:?}, expected [{n}, {n}, {n}]",
                    t.legs()
                )));
            }
            Ok(())
        };
        dims(&data.mult, "mult")?;
        dims(&data.comult, "comult")?;
        dims(&data.phi, "phi")?;
        if let Some(pi) = &data.phi_inv {
            dims(pi, "phi_inv")?;
        }
        for (v, name) in [
            (&data.unit, "unit"),
            (&data.counit, "counit"),
            (&data.alpha, "alpha"),
            (&data.beta, "beta"),
        ] {
            if v.len() != n {
                return Err(AlgebraError::Shape(format!(
                    "{name} vector has length {}, expected {n}",
                    v.len()
                )));
            }
        }
        if data.antipode.rows() != n || data.antipode.cols() != n {
            return Err(AlgebraError::Shape(format!(
                "antipode matrix is {}x{}, expected {n}x{n}",
                data.antipode.rows(),
                data.antipode.cols()
            )));
        }
        let antipode_inv = data.antipode.invert().ok();
        let mut algebra = QuasiHopfAlgebra {
            field,
            n,
            basis_names: data.basis_names,
            unit: data.unit,
            mult: data.mult,
            comult: data.comult,
            counit: data.counit,
            phi: data.phi.clone(),
            phi_inv: data.phi.clone(), // placeholder until resolved below
            antipode: data.antipode,
            antipode_inv,
            alpha: data.alpha,
            beta: data.beta,
        };
        algebra.phi_inv = match data.phi_inv {
            Some(pi) => pi,
            None => algebra.solve_phi_inverse()?,
        };
        Ok(algebra)
    }

    fn solve_phi_inverse(&self) -> Result<Tensor, AlgebraError> {
        let one3 = self.tensor_unit(3);
        if self.phi == one3 {
            return Ok(one3);
        }
        // Solve phi * x = 1(x)1(x)1 in H^(x)3, then cross-check x * phi.
        let size = self.n * self.n * self.n;
        let mut system = Matrix::zero(&self.field, size, size);
        for (i_idx, v) in self.phi.nonzero() {
            for col in 0..size {
                let j_idx = [
                    col / (self.n * self.n),
                    (col / self.n) % self.n,
                    col % self.n,
                ];
                for (out_idx, c) in self.structure_product(&i_idx, &j_idx) {
                    let row = (out_idx[0] * self.n + out_idx[1]) * self.n + out_idx[2];
                    let t = v * &c;
                    *system.at_mut(row, col) += &t;
                }
            }
        }
        let sol = system
            .solve(one3.entries())
            .map_err(|_| AlgebraError::PhiNotInvertible)?;
        if !sol.kernel.is_empty() {
            return Err(AlgebraError::PhiNotInvertible);
        }
        let candidate = Tensor::new(
            self.field.clone(),
            vec![self.n, self.n, self.n],
            sol.particular,
        );
        if self.tensor_mul(&candidate, &self.phi) != one3 {
            return Err(AlgebraError::PhiNotInvertible);
        }
        Ok(candidate)
    }

    /// Expands `e_{i} * e_{j}` in `H^(x)m` for multi-indices: the support of
    /// the product of basis tensors, as (index, coefficient) pairs.
    fn structure_product(&self, i: &[usize], j: &[usize]) -> Vec<(Vec<usize>, FieldElement)> {
        let mut partial: Vec<(Vec<usize>, FieldElement)> = vec![(Vec::new(), self.field.one())];
        for leg in 0..i.len() {
            let mut next = Vec::new();
            for (prefix, coeff) in &partial {
                for k in 0..self.n {
                    let s = self.mult.get(&[i[leg], j[leg], k]);
                    if s.is_zero() {
                        continue;
                    }
                    let mut idx = prefix.clone();
                    idx.push(k);
                    next.push((idx, coeff * s));
                }
            }
            partial = next;
        }
        partial
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mult(&self) -> &Tensor {
        &self.mult
    }

    pub fn comult(&self) -> &Tensor {
        &self.comult
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn phi_inv(&self) -> &Tensor {
        &self.phi_inv
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// Exact inverse of the antipode matrix. `S` is bijective for every valid
    /// finite-dimensional quasi-Hopf algebra, so a singular matrix here means
    /// the input data is invalid.
    pub fn antipode_inverse(&self) -> Result<&Matrix, AlgebraError> {
        self.antipode_inv.as_ref().ok_or(AlgebraError::Singular)
    }

    pub fn unit_vec(&self) -> &[FieldElement] {
        &self.unit
    }

    pub fn counit_vec(&self) -> &[FieldElement] {
        &self.counit
    }

    pub fn alpha(&self) -> AlgebraElement {
        AlgebraElement::new(self.alpha.clone())
    }

    pub fn beta(&self) -> AlgebraElement {
        AlgebraElement::new(self.beta.clone())
    }

    pub fn element(&self, coeffs: Vec<FieldElement>) -> AlgebraElement {
        assert_eq!(coeffs.len(), self.n, "element coefficient length mismatch");
        AlgebraElement::new(coeffs)
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement::new(vec![self.field.zero(); self.n])
    }

    pub fn unit_element(&self) -> AlgebraElement {
        AlgebraElement::new(self.unit.clone())
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coeffs = vec![self.field.zero(); self.n];
        coeffs[i] = self.field.one();
        AlgebraElement::new(coeffs)
    }

    /// The counit evaluated on an element.
    pub fn eps(&self, a: &AlgebraElement) -> FieldElement {
        let mut out = self.field.zero();
        for (ai, ei) in a.coeffs.iter().zip(&self.counit) {
            if ai.is_zero() || ei.is_zero() {
                continue;
            }
            out += &(ai * ei);
        }
        out
    }

    /// Product of two elements via the structure constants.
    pub fn mul_elements(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = vec![self.field.zero(); self.n];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for k in 0..self.n {
                    let s = self.mult.get(&[i, j, k]);
                    if s.is_zero() {
                        continue;
                    }
                    out[k] += &(&ab * s);
                }
            }
        }
        AlgebraElement::new(out)
    }

    /// `Delta(a)` as a 2-leg tensor in `H (x) H`.
    pub fn delta(&self, a: &AlgebraElement) -> Tensor {
        let mut out = Tensor::zero(&self.field, vec![self.n, self.n]);
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..self.n {
                for k in 0..self.n {
                    let c = self.comult.get(&[i, j, k]);
                    if c.is_zero() {
                        continue;
                    }
                    out.add_assign_at(&[j, k], &(ai * c));
                }
            }
        }
        out
    }

    pub fn apply_antipode(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.antipode.apply(&a.coeffs))
    }

    pub fn apply_antipode_inv(&self, a: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        Ok(AlgebraElement::new(self.antipode_inverse()?.apply(&a.coeffs)))
    }

    /// Matrix of left multiplication by `a` (the regular representation).
    pub fn left_mult_matrix(&self, a: &AlgebraElement) -> Matrix {
        let mut m = Matrix::zero(&self.field, self.n, self.n);
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..self.n {
                for k in 0..self.n {
                    let s = self.mult.get(&[i, j, k]);
                    if s.is_zero() {
                        continue;
                    }
                    *m.at_mut(k, j) += &(ai * s);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mult_matrix(&self, a: &AlgebraElement) -> Matrix {
        let mut m = Matrix::zero(&self.field, self.n, self.n);
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..self.n {
                for k in 0..self.n {
                    let s = self.mult.get(&[j, i, k]);
                    if s.is_zero() {
                        continue;
                    }
                    *m.at_mut(k, j) += &(ai * s);
                }
            }
        }
        m
    }

    /// Two-sided inverse of an element, if it exists.
    pub fn invert_element(&self, a: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let l = self.left_mult_matrix(a);
        let sol = l
            .solve(&self.unit)
            .map_err(|_| AlgebraError::NotInvertible)?;
        if !sol.kernel.is_empty() {
            return Err(AlgebraError::NotInvertible);
        }
        let candidate = AlgebraElement::new(sol.particular);
        // A left inverse in a finite-dimensional algebra is two-sided; verify anyway.
        if self.mul_elements(&candidate, a).coeffs != self.unit {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(candidate)
    }

    /// `1 (x) ... (x) 1` with `arity` legs.
    pub fn tensor_unit(&self, arity: usize) -> Tensor {
        let mut t = Tensor::zero(&self.field, vec![self.n; arity]);
        let unit_support: Vec<(usize, &FieldElement)> = self
            .unit
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut stack: Vec<(Vec<usize>, FieldElement)> = vec![(Vec::new(), self.field.one())];
        for _ in 0..arity {
            let mut next = Vec::new();
            for (prefix, coeff) in &stack {
                for &(i, c) in &unit_support {
                    let mut idx = prefix.clone();
                    idx.push(i);
                    next.push((idx, coeff * c));
                }
            }
            stack = next;
        }
        for (idx, coeff) in stack {
            t.add_assign_at(&idx, &coeff);
        }
        t
    }

    /// An element viewed as a 1-leg tensor.
    pub fn element_tensor(&self, a: &AlgebraElement) -> Tensor {
        Tensor::new(self.field.clone(), vec![self.n], a.coeffs.clone())
    }

    /// Componentwise product in `H^(x)m`: both operands must have the same
    /// number of legs, all of dimension `n`.
    pub fn tensor_mul(&self, x: &Tensor, y: &Tensor) -> Tensor {
        assert_eq!(x.legs(), y.legs(), "tensor algebra arity mismatch");
        let mut out = Tensor::zero(&self.field, x.legs().to_vec());
        let ny = y.nonzero();
        for (i_idx, v) in x.nonzero() {
            for (j_idx, w) in &ny {
                let vw = v * *w;
                for (out_idx, c) in self.structure_product(&i_idx, j_idx) {
                    out.add_assign_at(&out_idx, &(&vw * &c));
                }
            }
        }
        out
    }

    /// Applies a linear map (e.g. `S`) to one leg of a tensor.
    pub fn map_leg(&self, t: &Tensor, leg: usize, m: &Matrix) -> Tensor {
        t.apply_to_leg(m, leg).expect("leg dimensions fixed by n")
    }

    /// Left-multiplies one leg by an element.
    pub fn lmul_leg(&self, t: &Tensor, leg: usize, a: &AlgebraElement) -> Tensor {
        self.map_leg(t, leg, &self.left_mult_matrix(a))
    }

    /// Right-multiplies one leg by an element.
    pub fn rmul_leg(&self, t: &Tensor, leg: usize, a: &AlgebraElement) -> Tensor {
        self.map_leg(t, leg, &self.right_mult_matrix(a))
    }

    /// Multiplies leg `a` by leg `b` (in that order) inside the algebra; the
    /// product leg sits at position `min(a, b)` and the other leg disappears.
    pub fn mul_legs(&self, t: &Tensor, a: usize, b: usize) -> Tensor {
        assert_ne!(a, b, "cannot multiply a leg with itself");
        let keep = a.min(b);
        let drop = a.max(b);
        let mut out_legs = t.legs().to_vec();
        out_legs.remove(drop);
        let mut out = Tensor::zero(&self.field, out_legs);
        let mut out_idx = vec![0usize; t.legs().len() - 1];
        for (idx, v) in t.nonzero() {
            let (i, j) = (idx[a], idx[b]);
            for k in 0..self.n {
                let s = self.mult.get(&[i, j, k]);
                if s.is_zero() {
                    continue;
                }
                let mut pos = 0;
                for (leg, &val) in idx.iter().enumerate() {
                    if leg == drop {
                        continue;
                    }
                    out_idx[pos] = if leg == keep { k } else { val };
                    pos += 1;
                }
                out.add_assign_at(&out_idx, &(v * s));
            }
        }
        out
    }

    /// Applies the counit to one leg, contracting it away.
    pub fn counit_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let eps = Tensor::new(self.field.clone(), vec![self.n], self.counit.clone());
        eps.contract(t, &[(0, leg)]).expect("shape fixed by n")
    }

    /// Applies `Delta` to one leg, replacing it with two adjacent legs.
    pub fn delta_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let mut out_legs = t.legs().to_vec();
        out_legs[leg] = self.n;
        out_legs.insert(leg + 1, self.n);
        let mut out = Tensor::zero(&self.field, out_legs);
        let mut out_idx = vec![0usize; t.legs().len() + 1];
        for (idx, v) in t.nonzero() {
            let i = idx[leg];
            for j in 0..self.n {
                for k in 0..self.n {
                    let c = self.comult.get(&[i, j, k]);
                    if c.is_zero() {
                        continue;
                    }
                    for (pos, &val) in idx.iter().enumerate() {
                        use std::cmp::Ordering::*;
                        match pos.cmp(&leg) {
                            Less => out_idx[pos] = val,
                            Equal => {
                                out_idx[pos] = j;
                                out_idx[pos + 1] = k;
                            }
                            Greater => out_idx[pos + 1] = val,
                        }
                    }
                    out.add_assign_at(&out_idx, &(v * c));
                }
            }
        }
        out
    }

    /// Multiplies the two legs of an `H (x) H` tensor together (the map
    /// `nabla`), returning the resulting element.
    pub fn nabla(&self, t: &Tensor) -> AlgebraElement {
        assert_eq!(t.legs(), [self.n, self.n], "nabla needs a 2-leg tensor");
        let folded = self.mul_legs(t, 0, 1);
        AlgebraElement::new(folded.entries().to_vec())
    }

    /// The element `phi^1 beta S(phi^2) alpha phi^3` for candidate
    /// quasi-antipode elements; equals 1 on a valid quasi-Hopf algebra.
    pub fn phi_normalization_one(
        &self,
        alpha: &AlgebraElement,
        beta: &AlgebraElement,
    ) -> AlgebraElement {
        let mut t = self.rmul_leg(self.phi(), 0, beta);
        t = self.map_leg(&t, 1, self.antipode_matrix());
        t = self.lmul_leg(&t, 2, alpha);
        t = self.mul_legs(&t, 0, 1);
        t = self.mul_legs(&t, 0, 1);
        self.element(t.entries().to_vec())
    }

    /// The element `S(phi^-1) alpha phi^-2 beta phi^-3`; equals 1 on a valid
    /// quasi-Hopf algebra.
    pub fn phi_normalization_two(
        &self,
        alpha: &AlgebraElement,
        beta: &AlgebraElement,
    ) -> AlgebraElement {
        let mut t = self.map_leg(self.phi_inv(), 0, self.antipode_matrix());
        t = self.lmul_leg(&t, 1, alpha);
        t = self.lmul_leg(&t, 2, beta);
        t = self.mul_legs(&t, 0, 1);
        t = self.mul_legs(&t, 0, 1);
        self.element(t.entries().to_vec())
    }

    /// First basis index where `S(h_(1)) alpha h_(2) = eps(h) alpha` fails.
    pub fn alpha_equation_witness(&self, alpha: &AlgebraElement) -> Option<usize> {
        (0..self.n).find(|&i| {
            let mut t = self.delta(&self.basis_element(i));
            t = self.map_leg(&t, 0, self.antipode_matrix());
            t = self.lmul_leg(&t, 1, alpha);
            let folded = self.mul_legs(&t, 0, 1);
            let lhs = self.element(folded.entries().to_vec());
            let eps_i = self.eps(&self.basis_element(i));
            let rhs = self.element(alpha.coeffs().iter().map(|c| c * &eps_i).collect());
            lhs != rhs
        })
    }

    /// First basis index where `h_(1) beta S(h_(2)) = eps(h) beta` fails.
    pub fn beta_equation_witness(&self, beta: &AlgebraElement) -> Option<usize> {
        (0..self.n).find(|&i| {
            let mut t = self.delta(&self.basis_element(i));
            t = self.rmul_leg(&t, 0, beta);
            t = self.map_leg(&t, 1, self.antipode_matrix());
            let folded = self.mul_legs(&t, 0, 1);
            let lhs = self.element(folded.entries().to_vec());
            let eps_i = self.eps(&self.basis_element(i));
            let rhs = self.element(beta.coeffs().iter().map(|c| c * &eps_i).collect());
            lhs != rhs
        })
    }

    /// Renders an element against the basis names, e.g. `"e + 2*r"`.
    pub fn format_element(&self, a: &AlgebraElement) -> String {
        let mut parts = Vec::new();
        for (c, name) in a.coeffs.iter().zip(&self.basis_names) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("({})*{}", c, name));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for QuasiHopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QuasiHopfAlgebra(dim {}, Q(zeta_{}))",
            self.n,
            self.field.conductor()
        )
    }
}
