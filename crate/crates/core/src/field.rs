//! Finite fields GF(p^m) with q = p^m ≤ 2^16.
//!
//! Elements are stored as an integer index `Σ c_i p^i`, where `c_i` is the
//! coefficient of `x^i` in the canonical (fully reduced) representative
//! modulo the defining polynomial. Multiplication goes through exp/log tables
//! built once per field, so a [`FiniteField`] is cheap to clone and share.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field cardinality.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Field sizes for which the defining polynomial is fixed by a built-in table.
/// Coefficients are ascending and include the leading 1.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),                   // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),                // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]),             // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]),          // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),       // x^6 + x^4 + x^3 + x + 1
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),    // x^7 + x + 1
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]), // x^8 + x^4 + x^3 + x^2 + 1
    (3, 2, &[2, 2, 1]),                   // x^2 + 2x + 2
    (3, 3, &[1, 2, 0, 1]),                // x^3 + 2x + 1
    (3, 4, &[2, 0, 0, 2, 1]),             // x^4 + 2x^3 + 2
    (3, 5, &[1, 2, 0, 0, 0, 1]),          // x^5 + 2x + 1
    (5, 2, &[2, 4, 1]),                   // x^2 + 4x + 2
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("NonPrime: characteristic {0} is not prime")]
    NonPrime(u32),
    #[error("ReducibleModulus: the defining polynomial factors over GF({0})")]
    ReducibleModulus(u32),
    #[error("UnsupportedSize: field of size {0} exceeds 2^16")]
    UnsupportedSize(u64),
    #[error("InvalidModulus: {0}")]
    InvalidModulus(String),
    #[error("MixedFields: operands belong to different fields")]
    MixedFields,
    #[error("ZeroInverse: zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("InvalidElement: {0}")]
    InvalidElement(String),
}

/// Serializable description of a field: `{"p": 2, "m": 2, "modulus": [1, 1, 1]}`.
///
/// `modulus` lists ascending coefficients of the monic defining polynomial
/// (length `m + 1`); it is empty for prime fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default)]
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }
}

/// An element of a [`FiniteField`]. Carries a fingerprint of its field so
/// that mixing elements of different fields is detected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: u64,
    value: u32,
}

impl FieldElement {
    /// Integer index `Σ c_i p^i` of the element.
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    id: u64,
    primitive: u32,
    /// exp[i] = g^i for 0 ≤ i < 2(q-1).
    exp: Vec<u32>,
    /// log[a] for a ≠ 0; log[0] unused.
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// The finite field GF(p^m). Immutable; clones share the same tables.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}", self.0.q)?;
        if self.0.spec.m > 1 {
            write!(f, "; modulus {:?}", self.0.spec.modulus)?;
        }
        write!(f, ")")
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds GF(p^m). When `modulus` is `None` and `m > 1`, the built-in table
/// supplies the defining polynomial; sizes outside the table fall back to the
/// lexicographically first monic irreducible polynomial of degree `m`.
pub fn make_field(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<FiniteField, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NonPrime(p));
    }
    if m == 0 {
        return Err(FieldError::InvalidModulus("exponent m must be at least 1".into()));
    }
    let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
    if q > MAX_FIELD_SIZE {
        return Err(FieldError::UnsupportedSize(q));
    }
    let modulus = if m == 1 {
        match modulus {
            Some(c) if !c.is_empty() && c != [0, 1] => {
                return Err(FieldError::InvalidModulus(
                    "prime fields take an empty modulus".into(),
                ))
            }
            _ => Vec::new(),
        }
    } else {
        match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 {
                    return Err(FieldError::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        m + 1,
                        c.len()
                    )));
                }
                if c.iter().any(|&x| x >= p) {
                    return Err(FieldError::InvalidModulus(format!(
                        "coefficients must lie in [0, {p})"
                    )));
                }
                if c[m as usize] != 1 {
                    return Err(FieldError::InvalidModulus("modulus must be monic".into()));
                }
                if !is_irreducible(c, p) {
                    return Err(FieldError::ReducibleModulus(p));
                }
                c.to_vec()
            }
            None => default_modulus(p, m),
        }
    };
    Ok(FiniteField::build(FieldSpec { p, m, modulus }))
}

/// GF(q) with the default modulus, for a prime power `q`.
pub fn field_of_size(q: u64) -> Result<FiniteField, FieldError> {
    if !(2..=MAX_FIELD_SIZE).contains(&q) {
        return Err(FieldError::UnsupportedSize(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2") as u32;
    let (mut rest, mut m) = (q, 0u32);
    while rest % p as u64 == 0 {
        rest /= p as u64;
        m += 1;
    }
    if rest != 1 {
        return Err(FieldError::UnsupportedSize(q));
    }
    make_field(p, m, None)
}

/// Builds a field from its JSON description; an empty modulus with `m > 1`
/// selects the built-in default.
pub fn field_from_spec(spec: &FieldSpec) -> Result<FiniteField, FieldError> {
    let modulus = if spec.modulus.is_empty() {
        None
    } else {
        Some(spec.modulus.as_slice())
    };
    make_field(spec.p, spec.m, modulus)
}

fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    if let Some((_, _, c)) = BUILTIN_MODULI.iter().find(|(pp, mm, _)| *pp == p && *mm == m) {
        return c.to_vec();
    }
    // Lexicographic search over monic degree-m polynomials with nonzero constant term.
    let count = (p as u64).pow(m);
    for idx in 0..count {
        let mut c = digits(idx, p, m as usize);
        if c[0] == 0 {
            continue;
        }
        c.push(1);
        if is_irreducible(&c, p) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((v % p as u64) as u32);
        v /= p as u64;
    }
    out
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Remainder of `a` modulo `b` over GF(p); `b` must be nonzero.
fn poly_rem_mod_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p) as u64;
    let p64 = p as u64;
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr] as u64 * lead_inv % p64;
        let shift = dr - db;
        for (i, &bi) in b.iter().enumerate() {
            let sub = f * bi as u64 % p64;
            r[shift + i] = ((r[shift + i] as u64 + p64 - sub) % p64) as u32;
        }
        r = trim(r);
    }
    r
}

/// Irreducibility over GF(p) by trial division with every monic polynomial of
/// degree at most `deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let poly = trim(poly.to_vec());
    if poly.len() < 2 {
        return false;
    }
    let deg = poly.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = digits(idx, p, d);
            divisor.push(1);
            if poly_rem_mod_p(&poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    fn build(spec: FieldSpec) -> Self {
        let p = spec.p;
        let m = spec.m as usize;
        let q = p.pow(spec.m);
        let id = fingerprint(&spec);

        let slow_mul = |a: u32, b: u32| -> u32 {
            if m == 1 {
                return ((a as u64 * b as u64) % p as u64) as u32;
            }
            let da = digits(a as u64, p, m);
            let db = digits(b as u64, p, m);
            let mut prod = vec![0u64; 2 * m - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] += x as u64 * y as u64;
                }
            }
            let prod: Vec<u32> = prod.iter().map(|&c| (c % p as u64) as u32).collect();
            let r = poly_rem_mod_p(&prod, &spec.modulus, p);
            r.iter().rev().fold(0u32, |acc, &c| acc * p + c)
        };

        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let mut primitive = 1;
        if q == 2 {
            exp[0] = 1;
            exp[1] = 1;
        } else {
            'search: for g in 2..q {
                let mut x = 1u32;
                for i in 0..(q - 1) as usize {
                    exp[i] = x;
                    x = slow_mul(x, g);
                    if x == 1 && i + 2 < q as usize {
                        continue 'search;
                    }
                }
                primitive = g;
                break;
            }
            let order = (q - 1) as usize;
            for i in 0..order {
                exp[i + order] = exp[i];
            }
        }
        for i in 0..(q - 1) as usize {
            log[exp[i] as usize] = i as u32;
        }

        let digit_add = |a: u32, b: u32| -> u32 {
            if p == 2 {
                return a ^ b;
            }
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..m {
                let s = (a % p + b % p) % p;
                out += s * place;
                place *= p;
                a /= p;
                b /= p;
            }
            out
        };
        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let mut a = a;
                let mut out = 0u32;
                let mut place = 1u32;
                for _ in 0..m {
                    let c = a % p;
                    out += ((p - c) % p) * place;
                    place *= p;
                    a /= p;
                }
                out
            })
            .collect();
        let add = if q <= 256 && p != 2 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b);
                }
            }
            Some(t)
        } else {
            None
        };

        FiniteField(Arc::new(Inner {
            spec,
            q,
            id,
            primitive,
            exp,
            log,
            neg,
            add,
        }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn p(&self) -> u32 {
        self.0.spec.p
    }

    pub fn m(&self) -> u32 {
        self.0.spec.m
    }

    /// Cardinality q = p^m.
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.wrap(self.0.primitive)
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement {
            field: self.0.id,
            value,
        }
    }

    /// Element with integer index `value` (must be below q).
    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if value >= self.0.q {
            return Err(FieldError::InvalidElement(format!(
                "index {value} out of range for GF({})",
                self.0.q
            )));
        }
        Ok(self.wrap(value))
    }

    /// Element from its coefficient vector over GF(p) (ascending, at most m entries).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        let p = self.p();
        if coeffs.len() > self.m() as usize {
            return Err(FieldError::InvalidElement(format!(
                "{} coefficients given for an extension of degree {}",
                coeffs.len(),
                self.m()
            )));
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= p) {
            return Err(FieldError::InvalidElement(format!(
                "coefficient {bad} not reduced mod {p}"
            )));
        }
        Ok(self.wrap(coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)))
    }

    /// Coefficient vector (length m) of an element.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.value as u64, self.p(), self.m() as usize)
    }

    /// Image of an integer under Z → GF(p) ⊂ GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.wrap(n.rem_euclid(self.p() as i64) as u32)
    }

    /// Iterator over all field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| self.wrap(v))
    }

    fn check(&self, a: FieldElement) -> Result<u32, FieldError> {
        if a.field != self.0.id {
            return Err(FieldError::MixedFields);
        }
        Ok(a.value)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.wrap(self.add_idx(self.check(a)?, self.check(b)?)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.wrap(self.sub_idx(self.check(a)?, self.check(b)?)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.wrap(self.mul_idx(self.check(a)?, self.check(b)?)))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.wrap(self.neg_idx(self.check(a)?)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let v = self.check(a)?;
        if v == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.wrap(self.inv_idx(v)))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        let b = self.inv(b)?;
        self.mul(a, b)
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement, FieldError> {
        let v = self.check(a)?;
        if v == 0 {
            return Ok(self.wrap(if e == 0 { 1 } else { 0 }));
        }
        let order = (self.0.q - 1) as u64;
        let l = self.0.log[v as usize] as u64 * (e % order) % order;
        Ok(self.wrap(self.0.exp[l as usize]))
    }

    // Unchecked index arithmetic used by the enumeration hot loops.

    #[inline]
    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.spec.p == 2 {
            return a ^ b;
        }
        if inner.spec.m == 1 {
            let s = a + b;
            return if s >= inner.q { s - inner.q } else { s };
        }
        if let Some(t) = &inner.add {
            return t[(a * inner.q + b) as usize];
        }
        let p = inner.spec.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..inner.spec.m {
            out += ((a % p + b % p) % p) * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    #[inline]
    pub(crate) fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg_idx(b))
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
    }

    #[inline]
    pub(crate) fn inv_idx(&self, a: u32) -> u32 {
        let inner = &*self.0;
        let order = inner.q - 1;
        inner.exp[((order - inner.log[a as usize]) % order) as usize]
    }
}

fn fingerprint(spec: &FieldSpec) -> u64 {
    // FNV-1a over (p, m, modulus).
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |x: u32| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    feed(spec.p);
    feed(spec.m);
    for &c in &spec.modulus {
        feed(c);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_gf2() {
        let f = make_field(2, 1, None).unwrap();
        assert_eq!(f.q(), 2);
        let one = f.one();
        assert_eq!(f.add(one, one).unwrap(), f.zero());
    }

    #[test]
    fn gf4_reduction() {
        let f = make_field(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f.q(), 4);
        let x = f.from_coeffs(&[0, 1]).unwrap();
        let xx = f.mul(x, x).unwrap();
        assert_eq!(f.coeffs(xx), vec![1, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(
            make_field(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            FieldError::ReducibleModulus(2)
        );
    }

    #[test]
    fn gf3_inverse() {
        let f = make_field(3, 1, None).unwrap();
        let two = f.element(2).unwrap();
        assert_eq!(f.inv(two).unwrap(), two);
        assert_eq!(f.inv(f.zero()).unwrap_err(), FieldError::ZeroInverse);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(4, 1, None).unwrap_err(), FieldError::NonPrime(4));
        assert_eq!(make_field(1, 1, None).unwrap_err(), FieldError::NonPrime(1));
        assert_eq!(
            make_field(2, 17, None).unwrap_err(),
            FieldError::UnsupportedSize(1 << 17)
        );
        assert!(matches!(
            make_field(2, 2, Some(&[1, 1])),
            Err(FieldError::InvalidModulus(_))
        ));
    }

    #[test]
    fn mixed_fields_detected() {
        let f = make_field(2, 2, None).unwrap();
        let g = make_field(3, 1, None).unwrap();
        assert_eq!(f.add(f.one(), g.one()).unwrap_err(), FieldError::MixedFields);
    }

    #[test]
    fn deterministic_default_modulus() {
        let a = make_field(7, 2, None).unwrap();
        let b = make_field(7, 2, None).unwrap();
        assert_eq!(a.spec(), b.spec());
        assert!(is_irreducible(&a.spec().modulus, 7));
    }

    #[test]
    fn builtin_table_is_irreducible() {
        for (p, m, c) in BUILTIN_MODULI {
            assert!(is_irreducible(c, *p), "GF({p}^{m})");
            assert_eq!(c.len(), *m as usize + 1);
        }
    }

    #[test]
    fn pow_and_primitive() {
        let f = make_field(2, 4, None).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.pow(g, 15).unwrap(), f.one());
        assert_ne!(f.pow(g, 5).unwrap(), f.one());
        assert_ne!(f.pow(g, 3).unwrap(), f.one());
    }

    #[test]
    fn large_field_builds() {
        let f = make_field(2, 16, None).unwrap();
        let g = f.primitive_element();
        let h = f.inv(g).unwrap();
        assert_eq!(f.mul(g, h).unwrap(), f.one());
    }
}
