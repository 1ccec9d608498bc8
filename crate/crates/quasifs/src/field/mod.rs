//! Exact arithmetic in the cyclotomic field Q(zeta_N).
//!
//! Every scalar in this crate is a [`FieldElement`]: a polynomial in the
//! primitive `N`-th root of unity `z`, with arbitrary-precision rational
//! coefficients, reduced modulo the `N`-th cyclotomic polynomial. There is no
//! floating-point representation anywhere; equality of scalars is decidable
//! and all verdicts derived from them are exact.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub mod grammar;
pub(crate) mod poly;

/// Arbitrary-precision rational number; always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: Q(zeta_{0}) vs Q(zeta_{1})")]
    FieldMismatch(u32, u32),
    #[error("cannot parse field element: {0}")]
    Parse(String),
}

#[derive(Debug)]
struct FieldInner {
    conductor: u32,
    /// Monic cyclotomic polynomial Phi_N, constant coefficient first.
    min_poly: Vec<Rational>,
}

/// The cyclotomic field Q(zeta_N). Cheap to clone; elements hold a handle to
/// their parent field.
#[derive(Clone, Debug)]
pub struct CycloField(Arc<FieldInner>);

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.conductor == other.0.conductor
    }
}

impl Eq for CycloField {}

impl CycloField {
    /// Constructs Q(zeta_N). `conductor` must be at least 1; `N = 1` gives
    /// the plain rationals.
    pub fn new(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let min_poly = poly::cyclotomic(conductor);
        CycloField(Arc::new(FieldInner {
            conductor,
            min_poly,
        }))
    }

    pub fn conductor(&self) -> u32 {
        self.0.conductor
    }

    /// Degree of Phi_N, i.e. Euler's totient of the conductor.
    pub fn degree(&self) -> usize {
        self.0.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.0.min_poly
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn integer(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from(num_bigint::BigInt::from(n)))
    }

    pub fn ratio(&self, num: i64, den: i64) -> FieldElement {
        assert!(den != 0, "zero denominator");
        self.from_rational(Rational::new(
            num_bigint::BigInt::from(num),
            num_bigint::BigInt::from(den),
        ))
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = r;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Builds an element from a raw coefficient vector of length `degree()`.
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> FieldElement {
        assert_eq!(coeffs.len(), self.degree(), "coefficient length mismatch");
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Reduces an arbitrary polynomial in `z` modulo Phi_N.
    pub fn from_poly(&self, p: &[Rational]) -> FieldElement {
        let (_, rem) = poly::divrem(p, &self.0.min_poly);
        let mut coeffs = rem;
        coeffs.resize(self.degree(), Rational::zero());
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// The generator zeta_N.
    pub fn zeta(&self) -> FieldElement {
        self.zeta_pow(1)
    }

    /// zeta_N^k, with `k` reduced modulo N.
    pub fn zeta_pow(&self, k: i64) -> FieldElement {
        let n = self.conductor() as i64;
        let k = k.rem_euclid(n) as usize;
        let mut p = vec![Rational::zero(); k + 1];
        p[k] = Rational::one();
        self.from_poly(&p)
    }

    /// Parses the coefficient-string grammar, e.g. `-1/2*z^3 + z + 2/7`.
    pub fn parse(&self, input: &str) -> Result<FieldElement, FieldError> {
        grammar::parse_element(self, input)
    }
}

/// An element of Q(zeta_N): coefficients of 1, z, ..., z^(deg-1) after
/// reduction modulo Phi_N. Immutable value type.
#[derive(Clone)]
pub struct FieldElement {
    field: CycloField,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the rational value if the element is a constant polynomial.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field mismatch: Q(zeta_{}) vs Q(zeta_{})",
            self.field.conductor(),
            other.field.conductor()
        );
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via extended Euclid modulo Phi_N.
    pub fn inverse(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let a = poly::trim(self.coeffs.clone());
        let (g, u, _) = poly::xgcd(&a, self.field.min_poly());
        // Phi_N is irreducible over Q, so the gcd with any nonzero residue is 1.
        debug_assert_eq!(g, vec![Rational::one()]);
        Ok(self.field.from_poly(&u))
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_field(rhs);
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> FieldElement {
        let mut acc = self.field.one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

/// Serializes as the coefficient-string grammar; used by report output.
impl serde::Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&grammar::format_element(self))
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", grammar::format_element(self))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", grammar::format_element(self))
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        let product = poly::mul(
            &poly::trim(self.coeffs.clone()),
            &poly::trim(rhs.coeffs.clone()),
        );
        self.field.from_poly(&product)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl std::ops::AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl std::ops::SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

/// Formats a rational in the canonical `p` / `p/q` form used by bundles.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading sign; rejects a zero
/// denominator.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let s = s.trim();
    let err = || FieldError::Parse(format!("bad rational {s:?}"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: num_bigint::BigInt = num_str.parse().map_err(|_| err())?;
    let denom: num_bigint::BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| err())?,
        None => num_bigint::BigInt::one(),
    };
    if denom.is_zero() {
        return Err(FieldError::Parse(format!("zero denominator in {s:?}")));
    }
    let mut r = Rational::new(numer, denom);
    if r.denom().is_negative() {
        r = Rational::new(-r.numer().clone(), -r.denom().clone());
    }
    Ok(r)
}
