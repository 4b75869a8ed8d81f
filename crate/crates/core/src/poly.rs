//! Dense univariate polynomials and truncated power series over Q.
//!
//! Coefficients are stored in ascending order with trailing zeros trimmed, so
//! the zero polynomial is the empty vector. Everything is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("InexactDivision: nonzero remainder")]
    InexactDivision,
    #[error("DivisionByZero: division by the zero polynomial")]
    DivisionByZero,
    #[error("DegreeOverflow: degree {degree} exceeds bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("ZeroPolynomial: operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("NonUnitDenominator: denominator has zero constant term")]
    NonUnitDenominator,
    #[error("InvalidInterval: lower end exceeds upper end")]
    InvalidInterval,
    #[error("ParseError: {0}")]
    Parse(String),
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Formats a rational as `"num/den"` (integers as `"n/1"`).
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer string.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let parse_int =
        |t: &str| t.trim().parse::<BigInt>().map_err(|e| PolyError::Parse(format!("{t:?}: {e}")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(PolyError::Parse(format!("{s:?}: zero denominator")));
            }
            Ok(Rational::new(parse_int(n)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Serde adapters storing rationals as `"num/den"` strings.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let strings: Vec<String> = v.iter().map(rational_to_string).collect();
            strings.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let strings = Vec::<String>::deserialize(d)?;
            strings
                .iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

/// A polynomial with exact rational coefficients.
///
/// JSON form: `{"coeffs": ["1/5", "2/5", "2/5"]}`, ascending.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RationalPoly {
    #[serde(with = "serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "·" } else { "" })?,
                _ => write!(f, "{}t^{i}", if show_coeff { "·" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| int(x)).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().cloned().map(Rational::from_integer).collect())
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `(1 - t)(1 - q t)`.
    pub fn euler_factor(q: u64) -> Self {
        let q = int(q);
        Self::new(vec![Rational::one(), -(&q + Rational::one()), q])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `P(c t)`.
    pub fn compose_scaled(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::new(out)
    }

    /// `P(-t)`.
    pub fn reflect(&self) -> Self {
        self.compose_scaled(&-Rational::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Long division: `self = quotient · divisor + remainder`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let db = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let f = &rem[k + db] / lead;
            if !f.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &f * b;
                }
            }
            quot[k] = f;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `P / gcd(P, P')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// `t^{total} · q^{shift} · P(1/(q t))`, the transform underlying both the
    /// MacWilliams identity and the functional equations. Requires
    /// `deg P ≤ total`.
    pub fn q_reciprocal(&self, q: u64, shift: u32, total: usize) -> Result<Self, PolyError> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if deg > total {
            return Err(PolyError::DegreeOverflow { degree: deg, bound: total });
        }
        // Coefficient a_i t^{-i} q^{-i} q^{shift} t^{total} lands at t^{total - i}.
        let qb = BigInt::from(q);
        let mut out = vec![Rational::zero(); total + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            let e = shift as i64 - i as i64;
            let factor = if e >= 0 {
                Rational::from_integer(num_traits::pow(qb.clone(), e as usize))
            } else {
                Rational::new(BigInt::one(), num_traits::pow(qb.clone(), (-e) as usize))
            };
            out[total - i] = a * factor;
        }
        Ok(Self::new(out))
    }
}

/// Convenience wrapper matching the transform signature
/// `(P, q, (g, g_total)) ↦ t^{g_total} q^g P(1/(q t))`.
pub fn q_reciprocal_transform(
    p: &RationalPoly,
    q: u64,
    exponents: (u32, usize),
) -> Result<RationalPoly, PolyError> {
    p.q_reciprocal(q, exponents.0, exponents.1)
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a scaled ratio for huge numerators/denominators.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Power series truncated at order N (coefficients of `t^0..=t^N`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn from_poly(p: &RationalPoly, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Series quotient; the divisor needs a nonzero constant term.
    pub fn div(&self, den: &TruncatedSeries) -> Result<TruncatedSeries, PolyError> {
        let n = self.order().min(den.order());
        let d0 = &den.coeffs[0];
        if d0.is_zero() {
            return Err(PolyError::NonUnitDenominator);
        }
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                let dj = &den.coeffs[j];
                if !dj.is_zero() {
                    acc -= dj * &out[i - j];
                }
            }
            out.push(acc / d0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

/// Coefficients of `num / den` through `t^order`.
pub fn series_div(
    num: &RationalPoly,
    den: &RationalPoly,
    order: usize,
) -> Result<TruncatedSeries, PolyError> {
    if den.coeff(0).is_zero() {
        return Err(PolyError::NonUnitDenominator);
    }
    TruncatedSeries::from_poly(num, order).div(&TruncatedSeries::from_poly(den, order))
}

/// Endpoint of a root-counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl Bound {
    fn rank(&self) -> u8 {
        match self {
            Bound::NegInfinity => 0,
            Bound::Finite(_) => 1,
            Bound::PosInfinity => 2,
        }
    }

    fn le(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a <= b,
            _ => self.rank() <= other.rank(),
        }
    }
}

/// The Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<RationalPoly>,
}

impl SturmChain {
    /// Builds the chain of the squarefree part of `p`.
    pub fn new(p: &RationalPoly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let p0 = p.squarefree_part();
        let mut chain = vec![p0.clone(), p0.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            // Positive rescaling keeps signs and tames coefficient growth.
            let l = r.leading().unwrap().abs();
            chain.push(-&r.scale(&l.recip()));
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[RationalPoly] {
        &self.chain
    }

    fn sign_at(p: &RationalPoly, at: &Bound) -> i8 {
        let s = match at {
            Bound::Finite(x) => {
                let v = p.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Bound::PosInfinity => match p.leading() {
                None => 0,
                Some(l) => {
                    if l.is_positive() {
                        1
                    } else {
                        -1
                    }
                }
            },
            Bound::NegInfinity => match p.leading() {
                None => 0,
                Some(l) => {
                    let s = if l.is_positive() { 1 } else { -1 };
                    if p.degree().unwrap() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }
            },
        };
        s
    }

    /// Sign variations at `at`, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = Self::sign_at(p, at);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
        if !lo.le(hi) {
            return Err(PolyError::InvalidInterval);
        }
        if lo == hi {
            return Ok(0);
        }
        let vl = self.variations(lo);
        let vh = self.variations(hi);
        // A root exactly at lo contributes to neither count: V is
        // right-continuous at roots of a squarefree chain head.
        Ok(vl.saturating_sub(vh))
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &RationalPoly, lo: &Bound, hi: &Bound) -> Result<usize, PolyError> {
    SturmChain::new(p)?.count(lo, hi)
}

/// Number of distinct real roots of `p`.
pub fn real_root_count(p: &RationalPoly) -> Result<usize, PolyError> {
    sturm_count(p, &Bound::NegInfinity, &Bound::PosInfinity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: i64, d: i64) -> Bound {
        Bound::Finite(rat(n, d))
    }

    #[test]
    fn product_of_linear_factors() {
        let a = RationalPoly::from_ints(&[1, -1]);
        let b = RationalPoly::from_ints(&[1, -2]);
        assert_eq!(&a * &b, RationalPoly::from_ints(&[1, -3, 2]));
    }

    #[test]
    fn hamming_normalization_at_one() {
        let p = RationalPoly::from_ints(&[1, 2, 2]).scale(&rat(1, 5));
        assert_eq!(p.eval(&int(1)), int(1));
    }

    #[test]
    fn exact_division() {
        let p = RationalPoly::from_ints(&[1, -3, 2]);
        let d = RationalPoly::from_ints(&[1, -1]);
        assert_eq!(p.exact_div(&d).unwrap(), RationalPoly::from_ints(&[1, -2]));
        let bad = RationalPoly::from_ints(&[1, 0, 1]);
        assert_eq!(bad.exact_div(&d).unwrap_err(), PolyError::InexactDivision);
    }

    #[test]
    fn q_reciprocal_examples() {
        let h = RationalPoly::from_ints(&[1, 2, 2]).scale(&rat(1, 5));
        assert_eq!(q_reciprocal_transform(&h, 2, (1, 2)).unwrap(), h);
        let one = RationalPoly::one();
        assert_eq!(q_reciprocal_transform(&one, 7, (0, 0)).unwrap(), one);
        for q in [2u64, 3, 5] {
            for g in 0..4usize {
                let m = RationalPoly::monomial(int(1), g);
                assert_eq!(q_reciprocal_transform(&m, q, (g as u32, 2 * g)).unwrap(), m);
            }
        }
        assert!(matches!(
            q_reciprocal_transform(&RationalPoly::from_ints(&[0, 0, 1]), 2, (0, 1)),
            Err(PolyError::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn sturm_examples() {
        let p = RationalPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(sturm_count(&p, &fin(-2, 1), &fin(2, 1)).unwrap(), 2);
        let p = RationalPoly::from_ints(&[1, 0, 1]);
        assert_eq!(sturm_count(&p, &fin(-10, 1), &fin(10, 1)).unwrap(), 0);
        // Roots 4 ± 2√2.
        let p = RationalPoly::from_ints(&[8, -8, 1]);
        assert_eq!(sturm_count(&p, &fin(0, 1), &fin(8, 1)).unwrap(), 2);
        assert_eq!(sturm_count(&p, &fin(0, 1), &fin(4, 1)).unwrap(), 1);
        assert_eq!(
            sturm_count(&RationalPoly::zero(), &fin(0, 1), &fin(1, 1)).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn sturm_half_open_endpoints() {
        // (t-1)(t-2)(t-3)
        let p = RationalPoly::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(sturm_count(&p, &fin(1, 1), &fin(3, 1)).unwrap(), 2);
        assert_eq!(sturm_count(&p, &fin(0, 1), &fin(1, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &fin(1, 1), &fin(2, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &fin(3, 1), &Bound::PosInfinity).unwrap(), 0);
        assert_eq!(real_root_count(&p).unwrap(), 3);
    }

    #[test]
    fn sturm_ignores_multiplicity() {
        // (t-1)^3 (t+2)^2
        let a = RationalPoly::from_ints(&[-1, 1]).pow(3);
        let b = RationalPoly::from_ints(&[2, 1]).pow(2);
        assert_eq!(real_root_count(&(&a * &b)).unwrap(), 2);
    }

    #[test]
    fn series_examples() {
        let e = RationalPoly::euler_factor(2);
        let s = series_div(&RationalPoly::one(), &e, 3).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(3), int(7), int(15)]);
        let s = series_div(&RationalPoly::from_ints(&[1, 0, 4, 0, 4]), &e, 1).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(3)]);
        let s = series_div(&RationalPoly::from_ints(&[1, 3, 2]), &e, 2).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(6), int(18)]);
        assert_eq!(
            series_div(&RationalPoly::one(), &RationalPoly::from_ints(&[0, 1]), 2).unwrap_err(),
            PolyError::NonUnitDenominator
        );
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(rational_to_string(&int(4)), "4/1");
        assert!(parse_rational("1/0").is_err());
        let p = RationalPoly::new(vec![rat(1, 5), rat(-2, 3)]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"coeffs":["1/5","-2/3"]}"#);
        assert_eq!(serde_json::from_str::<RationalPoly>(&js).unwrap(), p);
    }

    #[test]
    fn display() {
        let p = RationalPoly::new(vec![rat(1, 5), int(-1), rat(2, 5)]);
        assert_eq!(p.to_string(), "1/5 - t + 2/5·t^2");
    }
}
