//! Constructors for the verification corpus: group algebras, twisted dual
//! group algebras built from normalized 3-cocycles, their simple modules,
//! and a quasi-antipode completion solver.
//!
//! Twisted duals are the standard source of genuinely quasi (non-Hopf)
//! examples: the pentagon axiom for their associator is literally the
//! 3-cocycle identity, so builder and validator cross-verify each other. The
//! elements `alpha` and `beta` are always solved for rather than transcribed
//! from the literature, which makes the construction immune to convention
//! mismatches in published formulas.

use thiserror::Error;

use crate::field::{CycloField, FieldElement};
use crate::linalg::{Matrix, Tensor};
use crate::qha::{AlgebraData, AlgebraElement, AlgebraError, QuasiHopfAlgebra};
use crate::rep::HModule;

pub mod catalog;

#[derive(Debug, Error)]
pub enum BuilderError {
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid 3-cocycle: {0}")]
    InvalidCocycle(String),
    #[error("no quasi-antipode completion exists for the supplied antipode")]
    CompletionFailed,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A finite group as a multiplication table over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    names: Vec<String>,
}

impl GroupTable {
    /// Builds and validates a table from `mult[i][j] = index of g_i g_j`.
    pub fn new(mult: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self, BuilderError> {
        let order = mult.len();
        if order == 0 {
            return Err(BuilderError::InvalidGroup("empty table".into()));
        }
        if names.len() != order {
            return Err(BuilderError::InvalidGroup("name count mismatch".into()));
        }
        for row in &mult {
            if row.len() != order || row.iter().any(|&k| k >= order) {
                return Err(BuilderError::InvalidGroup(
                    "table entries out of range".into(),
                ));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| BuilderError::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; order];
        for g in 0..order {
            inverse[g] = (0..order)
                .find(|&h| mult[g][h] == identity && mult[h][g] == identity)
                .ok_or_else(|| {
                    BuilderError::InvalidGroup(format!("element {g} has no inverse"))
                })?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(BuilderError::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(GroupTable {
            order,
            mult,
            inverse,
            identity,
            names,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The cyclic group Z/n with elements `g0 .. g{n-1}`.
    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1);
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n).map(|a| format!("g{a}")).collect();
        GroupTable::new(mult, names).expect("cyclic table is a group")
    }

    /// The symmetric group S3, generated as permutations of three points.
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2], // e
            [1, 2, 0], // r
            [2, 0, 1], // r^2
            [1, 0, 2], // s
            [2, 1, 0], // rs  (r after s)
            [0, 2, 1], // r2s
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let index_of = |p: &[usize; 3]| perms.iter().position(|x| x == p).unwrap();
        let mult = perms
            .iter()
            .map(|p| perms.iter().map(|q| index_of(&compose(p, q))).collect())
            .collect();
        let names = ["e", "r", "r2", "s", "rs", "r2s"]
            .map(String::from)
            .to_vec();
        GroupTable::new(mult, names).expect("S3 table is a group")
    }

    /// The quaternion group Q8 = {1, -1, i, -i, j, -j, k, -k}.
    pub fn quaternion8() -> GroupTable {
        // Element index = 2*axis + sign with axes (1, i, j, k).
        let axis_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) => (0, x),
                (x, 0) => (0, x),
                (x, y) if x == y => (1, 0),
                (1, 2) => (0, 3),
                (2, 3) => (0, 1),
                (3, 1) => (0, 2),
                (2, 1) => (1, 3),
                (3, 2) => (1, 1),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let mut mult = vec![vec![0usize; 8]; 8];
        for a in 0..4 {
            for sa in 0..2 {
                for b in 0..4 {
                    for sb in 0..2 {
                        let (sign, axis) = axis_mul(a, b);
                        let s = (sa + sb + sign) % 2;
                        mult[2 * a + sa][2 * b + sb] = 2 * axis + s;
                    }
                }
            }
        }
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .map(String::from)
            .to_vec();
        GroupTable::new(mult, names).expect("Q8 table is a group")
    }

    /// The dihedral group D4 of order 8, elements `r^a s^b`.
    pub fn dihedral4() -> GroupTable {
        // Index = a + 4*b for r^a s^b; s r = r^-1 s.
        let mut mult = vec![vec![0usize; 8]; 8];
        for a in 0..4usize {
            for b in 0..2usize {
                for c in 0..4usize {
                    for d in 0..2usize {
                        let exp = if b == 0 { a + c } else { a + 4 - c };
                        mult[a + 4 * b][c + 4 * d] = (exp % 4) + 4 * ((b + d) % 2);
                    }
                }
            }
        }
        let names = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"]
            .map(String::from)
            .to_vec();
        GroupTable::new(mult, names).expect("D4 table is a group")
    }
}

/// Extracts a group table from a group-algebra bundle: each `e_i e_j` must be
/// a single basis element with coefficient 1. Used by the classical-indicator
/// cross-checks, independently of how the bundle was produced.
pub fn group_table_from_algebra(h: &QuasiHopfAlgebra) -> Result<GroupTable, BuilderError> {
    let n = h.dim();
    let mut mult = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut target = None;
            for k in 0..n {
                let c = h.mult().get(&[i, j, k]);
                if c.is_zero() {
                    continue;
                }
                if !c.is_one() || target.is_some() {
                    return Err(BuilderError::InvalidGroup(
                        "multiplication is not a permutation action of basis elements".into(),
                    ));
                }
                target = Some(k);
            }
            mult[i][j] = target.ok_or_else(|| {
                BuilderError::InvalidGroup("basis product vanished; not a group algebra".into())
            })?;
        }
    }
    GroupTable::new(mult, h.basis_names().to_vec())
}

/// The group algebra k[G]: grouplike comultiplication, trivial associator,
/// `S(g) = g^-1`, `alpha = beta = 1`.
pub fn build_group_algebra(
    table: &GroupTable,
    field: &CycloField,
) -> Result<QuasiHopfAlgebra, BuilderError> {
    let n = table.order();
    let e = table.identity();
    let mut mult = Tensor::zero(field, vec![n, n, n]);
    let mut comult = Tensor::zero(field, vec![n, n, n]);
    let mut phi = Tensor::zero(field, vec![n, n, n]);
    let mut antipode = Matrix::zero(field, n, n);
    let mut unit = vec![field.zero(); n];
    for i in 0..n {
        for j in 0..n {
            mult.set(&[i, j, table.mul(i, j)], field.one());
        }
        comult.set(&[i, i, i], field.one());
        *antipode.at_mut(table.inv(i), i) = field.one();
    }
    phi.set(&[e, e, e], field.one());
    unit[e] = field.one();
    let counit = vec![field.one(); n];
    let algebra = QuasiHopfAlgebra::from_data(AlgebraData {
        field: field.clone(),
        basis_names: table.names().to_vec(),
        unit: unit.clone(),
        mult,
        comult,
        counit,
        phi: phi.clone(),
        phi_inv: Some(phi),
        antipode,
        alpha: unit.clone(),
        beta: unit,
    })?;
    Ok(algebra)
}

/// A normalized 3-cocycle on a group, with values `zeta_N^exponents[a][b][c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    order: usize,
    conductor: u32,
    exponents: Vec<u32>,
}

impl CocycleTable {
    pub fn new(order: usize, conductor: u32, exponents: Vec<u32>) -> Self {
        assert_eq!(exponents.len(), order * order * order);
        let exponents = exponents.into_iter().map(|e| e % conductor).collect();
        CocycleTable {
            order,
            conductor,
            exponents,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn exponent(&self, a: usize, b: usize, c: usize) -> u32 {
        self.exponents[(a * self.order + b) * self.order + c]
    }

    pub fn value(&self, field: &CycloField, a: usize, b: usize, c: usize) -> FieldElement {
        field.zeta_pow(self.exponent(a, b, c) as i64)
    }
}

#[derive(Debug, Clone)]
pub struct CocycleReport {
    pub normalized: bool,
    pub normalization_witness: Option<Vec<usize>>,
    pub cocycle_identity: bool,
    pub identity_witness: Option<Vec<usize>>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.normalized && self.cocycle_identity
    }
}

/// Exhaustively checks normalization and the 3-cocycle identity
/// `w(b,c,d) w(a,bc,d) w(a,b,c) = w(ab,c,d) w(a,b,cd)` over all quadruples.
pub fn validate_cocycle(table: &GroupTable, cocycle: &CocycleTable) -> CocycleReport {
    let m = table.order();
    let n = cocycle.conductor();
    let mut report = CocycleReport {
        normalized: true,
        normalization_witness: None,
        cocycle_identity: true,
        identity_witness: None,
    };
    if cocycle.order() != m {
        report.normalized = false;
        report.normalization_witness = Some(vec![]);
        return report;
    }
    let e = table.identity();
    'norm: for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if (a == e || b == e || c == e) && cocycle.exponent(a, b, c) % n != 0 {
                    report.normalized = false;
                    report.normalization_witness = Some(vec![a, b, c]);
                    break 'norm;
                }
            }
        }
    }
    'cocycle: for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let lhs = cocycle.exponent(b, c, d)
                        + cocycle.exponent(a, table.mul(b, c), d)
                        + cocycle.exponent(a, b, c);
                    let rhs = cocycle.exponent(table.mul(a, b), c, d)
                        + cocycle.exponent(a, b, table.mul(c, d));
                    if lhs % n != rhs % n {
                        report.cocycle_identity = false;
                        report.identity_witness = Some(vec![a, b, c, d]);
                        break 'cocycle;
                    }
                }
            }
        }
    }
    report
}

/// A representative of class `q` in `H^3(Z/m, k^x) = Z/m`, with values in the
/// `m`-th roots of unity.
///
/// The carry cocycle `zeta_m^{q a floor((b+c)/m)}` is corrected by an
/// explicit normalized coboundary so that `w(x, x^-1, x) w(x^-1, x, x) = 1`
/// for every `x`. That identity is what makes the twisted dual `k^G_w` admit
/// a quasi-antipode at all, and the bare carry representative violates it for
/// some classes (already for m = 4, q = 1). Multiplying by a coboundary keeps
/// the cohomology class, so `q = 0` stays trivial and the m = 2 table is
/// untouched.
pub fn cyclic_cocycle(m: usize, q: usize) -> CocycleTable {
    assert!(m >= 1 && q < m, "need 0 <= q < m");
    let n = m as u32;
    let modm = |v: i64| -> u32 { v.rem_euclid(m as i64) as u32 };

    // Normalized 2-cochain exponents k[a][b] fixing the admissibility defect
    // r(x) = -q*x for 0 < x < m/2 (and 0 otherwise) at the slot (-x, 2x).
    let mut k = vec![vec![0i64; m]; m];
    let r = |x: usize| -> i64 {
        if x > 0 && 2 * x < m {
            -((q * x) as i64)
        } else {
            0
        }
    };
    if m % 3 == 0 && m >= 3 {
        // The slots of x = m/3 and x = 2m/3 overlap; solve the pair jointly.
        let p = m / 3;
        k[p][p] = r(p);
        k[2 * p][p] = r(p) - r(2 * p);
    }
    for x in 1..m {
        if 3 * x % m == 0 {
            continue;
        }
        if r(x) != 0 {
            k[(m - x) % m][(2 * x) % m] = r(x);
        }
    }

    let mut exponents = Vec::with_capacity(m * m * m);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let carry = ((b + c) / m) as i64;
                let base = (q * a) as i64 * carry;
                let ab = (a + b) % m;
                let bc = (b + c) % m;
                let coboundary = k[b][c] - k[ab][c] + k[a][bc] - k[a][b];
                exponents.push(modm(base + coboundary));
            }
        }
    }
    CocycleTable::new(m, n, exponents)
}

/// The twisted dual group algebra `k^G_w`: functions on `G` with the
/// associator built from `w`, `S(d_g) = d_{g^-1}`, and `alpha`, `beta`
/// completed by [`quasi_antipode_complete`].
pub fn build_twisted_dual(
    table: &GroupTable,
    cocycle: &CocycleTable,
) -> Result<QuasiHopfAlgebra, BuilderError> {
    let report = validate_cocycle(table, cocycle);
    if !report.passed() {
        return Err(BuilderError::InvalidCocycle(format!(
            "normalization witness {:?}, identity witness {:?}",
            report.normalization_witness, report.identity_witness
        )));
    }
    let field = CycloField::new(cocycle.conductor());
    let n = table.order();
    let mut mult = Tensor::zero(&field, vec![n, n, n]);
    let mut comult = Tensor::zero(&field, vec![n, n, n]);
    let mut phi = Tensor::zero(&field, vec![n, n, n]);
    let mut phi_inv = Tensor::zero(&field, vec![n, n, n]);
    let mut antipode = Matrix::zero(&field, n, n);
    for g in 0..n {
        mult.set(&[g, g, g], field.one());
        *antipode.at_mut(table.inv(g), g) = field.one();
    }
    for x in 0..n {
        for y in 0..n {
            comult.set(&[table.mul(x, y), x, y], field.one());
            for z in 0..n {
                let e = cocycle.exponent(x, y, z) as i64;
                phi.set(&[x, y, z], field.zeta_pow(e));
                phi_inv.set(&[x, y, z], field.zeta_pow(-e));
            }
        }
    }
    let unit = vec![field.one(); n];
    let mut counit = vec![field.zero(); n];
    counit[table.identity()] = field.one();
    let names = table
        .names()
        .iter()
        .map(|s| format!("d_{s}"))
        .collect::<Vec<_>>();
    let provisional = QuasiHopfAlgebra::from_data(AlgebraData {
        field: field.clone(),
        basis_names: names.clone(),
        unit: unit.clone(),
        mult: mult.clone(),
        comult: comult.clone(),
        counit: counit.clone(),
        phi: phi.clone(),
        phi_inv: Some(phi_inv.clone()),
        antipode: antipode.clone(),
        alpha: unit.clone(),
        beta: unit.clone(),
    })?;
    let (alpha, beta) = quasi_antipode_complete(&provisional)?;
    Ok(QuasiHopfAlgebra::from_data(AlgebraData {
        field,
        basis_names: names,
        unit,
        mult,
        comult,
        counit,
        phi,
        phi_inv: Some(phi_inv),
        antipode,
        alpha: alpha.coeffs().to_vec(),
        beta: beta.coeffs().to_vec(),
    })?)
}

/// Solves for a quasi-antipode completion `(alpha, beta)` of an algebra whose
/// `S` is already fixed; the `alpha`/`beta` stored in the input are ignored.
///
/// The two linear equations cut out solution spaces for `alpha` and `beta`
/// separately. Candidate pairs are then rescaled by the inverse of the first
/// normalization element (when it is invertible) and kept only if both
/// normalizations verify exactly.
pub fn quasi_antipode_complete(
    h: &QuasiHopfAlgebra,
) -> Result<(AlgebraElement, AlgebraElement), BuilderError> {
    let n = h.dim();
    let field = h.field().clone();

    // alpha-space: for each basis h, sum comult[h,j,k] L_{S(e_j)} R_{e_k} - eps(h) I.
    let s_left: Vec<Matrix> = (0..n)
        .map(|j| h.left_mult_matrix(&h.apply_antipode(&h.basis_element(j))))
        .collect();
    let left: Vec<Matrix> = (0..n)
        .map(|j| h.left_mult_matrix(&h.basis_element(j)))
        .collect();
    let right: Vec<Matrix> = (0..n)
        .map(|k| h.right_mult_matrix(&h.basis_element(k)))
        .collect();
    let s_right: Vec<Matrix> = (0..n)
        .map(|k| h.right_mult_matrix(&h.apply_antipode(&h.basis_element(k))))
        .collect();

    let mut alpha_blocks = Vec::with_capacity(n);
    let mut beta_blocks = Vec::with_capacity(n);
    for i in 0..n {
        let mut ma = Matrix::zero(&field, n, n);
        let mut mb = Matrix::zero(&field, n, n);
        for (idx, c) in h.delta(&h.basis_element(i)).nonzero() {
            let (j, k) = (idx[0], idx[1]);
            ma = ma.add(&s_left[j].mul(&right[k]).scale(c));
            mb = mb.add(&left[j].mul(&s_right[k]).scale(c));
        }
        let eps_i = h.eps(&h.basis_element(i));
        for d in 0..n {
            *ma.at_mut(d, d) -= &eps_i;
            *mb.at_mut(d, d) -= &eps_i;
        }
        alpha_blocks.push(ma);
        beta_blocks.push(mb);
    }
    let alpha_space = Matrix::vstack(&field, &alpha_blocks.iter().collect::<Vec<_>>())
        .kernel_basis();
    let beta_space =
        Matrix::vstack(&field, &beta_blocks.iter().collect::<Vec<_>>()).kernel_basis();
    if alpha_space.is_empty() || beta_space.is_empty() {
        return Err(BuilderError::CompletionFailed);
    }

    let mut alpha_candidates: Vec<AlgebraElement> = Vec::new();
    let unit = h.unit_element();
    if h.alpha_equation_witness(&unit).is_none() {
        alpha_candidates.push(unit.clone());
    }
    alpha_candidates.extend(alpha_space.iter().cloned().map(AlgebraElement::new));
    if alpha_space.len() > 1 {
        let sum = alpha_space.iter().fold(vec![field.zero(); n], |mut acc, v| {
            for (a, b) in acc.iter_mut().zip(v) {
                *a += b;
            }
            acc
        });
        alpha_candidates.push(AlgebraElement::new(sum));
    }
    let mut beta_candidates: Vec<AlgebraElement> = Vec::new();
    if h.beta_equation_witness(&unit).is_none() {
        beta_candidates.push(unit.clone());
    }
    beta_candidates.extend(beta_space.iter().cloned().map(AlgebraElement::new));
    if beta_space.len() > 1 {
        let sum = beta_space.iter().fold(vec![field.zero(); n], |mut acc, v| {
            for (a, b) in acc.iter_mut().zip(v) {
                *a += b;
            }
            acc
        });
        beta_candidates.push(AlgebraElement::new(sum));
    }

    let accept = |alpha: &AlgebraElement, beta: &AlgebraElement| -> bool {
        h.alpha_equation_witness(alpha).is_none()
            && h.beta_equation_witness(beta).is_none()
            && h.phi_normalization_one(alpha, beta) == unit
            && h.phi_normalization_two(alpha, beta) == unit
    };

    for alpha in &alpha_candidates {
        for beta0 in &beta_candidates {
            if accept(alpha, beta0) {
                return Ok((alpha.clone(), beta0.clone()));
            }
            let u = h.phi_normalization_one(alpha, beta0);
            let Ok(u_inv) = h.invert_element(&u) else {
                continue;
            };
            // Absorb the defect into beta; exact verification decides.
            for beta in [
                h.mul_elements(beta0, &u_inv),
                h.mul_elements(&u_inv, beta0),
            ] {
                if accept(alpha, &beta) {
                    return Ok((alpha.clone(), beta));
                }
            }
        }
    }
    Err(BuilderError::CompletionFailed)
}

/// The one-dimensional modules `k_g` of a twisted dual: `d_h` acts on `k_g`
/// by `[h = g]`.
pub fn dual_group_simples(table: &GroupTable, field: &CycloField) -> Vec<HModule> {
    (0..table.order())
        .map(|g| {
            let action = (0..table.order())
                .map(|i| {
                    let v = if i == g { field.one() } else { field.zero() };
                    Matrix::new(field.clone(), 1, 1, vec![v])
                })
                .collect();
            HModule::new(format!("k_{}", table.names()[g]), action)
        })
        .collect()
}
