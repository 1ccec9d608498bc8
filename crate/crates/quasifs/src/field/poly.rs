//! Dense polynomial arithmetic over `Rational`, used to realize cyclotomic
//! fields. Coefficients are stored constant-first; the zero polynomial is the
//! empty vector.

use num_traits::{One, Zero};

use super::Rational;

pub fn trim(mut coeffs: Vec<Rational>) -> Vec<Rational> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`. Panics on `b = 0`.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let factor = rem.last().unwrap() / &lead;
        quot[dr - db] = factor.clone();
        for (i, cb) in b.iter().enumerate() {
            let t = &factor * cb;
            rem[dr - db + i] -= t;
        }
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (trim(quot), rem)
}

/// Exact division; panics if the remainder is nonzero.
pub fn div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (q, r) = divrem(a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Extended Euclid: returns `(g, u, v)` with `u*a + v*b = g`, `g = gcd(a, b)`
/// normalized monic.
pub fn xgcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut u0 = vec![Rational::one()];
    let mut u1: Vec<Rational> = Vec::new();
    let mut v0: Vec<Rational> = Vec::new();
    let mut v1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let nu = sub(&u0, &mul(&q, &u1));
        let nv = sub(&v0, &mul(&q, &v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = Rational::one() / lead;
        for c in r0.iter_mut().chain(u0.iter_mut()).chain(v0.iter_mut()) {
            *c *= &inv;
        }
    }
    (r0, u0, v0)
}

/// `x^n - 1` as a coefficient vector.
pub fn x_pow_minus_one(n: usize) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); n + 1];
    p[0] = -Rational::one();
    p[n] = Rational::one();
    p
}

/// The `n`-th cyclotomic polynomial, by exact division of `x^n - 1` by the
/// product of all proper-divisor cyclotomic polynomials.
pub fn cyclotomic(n: u32) -> Vec<Rational> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(n as usize);
    for m in 1..=n {
        let mut divisor_product = vec![Rational::one()];
        for d in 1..m {
            if m % d == 0 {
                divisor_product = mul(&divisor_product, &table[(d - 1) as usize]);
            }
        }
        let phi_m = div_exact(&x_pow_minus_one(m as usize), &divisor_product);
        table.push(phi_m);
    }
    table.pop().unwrap()
}
