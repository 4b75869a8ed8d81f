//! Function fields over GF(q) through their L-polynomials: effective divisor
//! counts, the reduced polynomial `D_F`, virtual class numbers, the `B_i`
//! sequence and its relations, class-number bounds, and the genus-zero
//! Reed–Solomon identity.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{weight_distribution_via_smaller, CodeError, CodeProfile, DEFAULT_BUDGET};
use crate::combin::pow_int;
use crate::field::{field_of_size, FieldError, FiniteField};
use crate::fixtures::reed_solomon_code;
use crate::poly::{int, series_div, PolyError, Rational, RationalPoly};
use crate::rha::QuadRingElement;
use crate::zeta::{ZetaError, ZetaProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("OddDegree: L-polynomial has odd degree {0}")]
    OddDegree(usize),
    #[error("BadConstantTerm: L(0) = {0}, expected 1")]
    BadConstantTerm(String),
    #[error("FunctionalEquationViolation: L(t) != q^g t^(2g) L(1/(qt))")]
    FunctionalEquationViolation,
    #[error("GenusZero: the L-polynomial must have positive degree")]
    GenusZero,
    #[error("NonPositiveClassNumber: h = L(1) = {0}")]
    NonPositiveClassNumber(String),
    #[error("InconsistentCounts: {0}")]
    InconsistentCounts(String),
    #[error("ConsistencyFailure: {0}")]
    ConsistencyFailure(String),
    #[error("InexactDivision: L - L(1) t^g is not divisible by (1 - t)(1 - q t)")]
    InexactDivision,
    #[error("Overflow: {0}")]
    Overflow(String),
    #[error("SingularCurve: discriminant vanishes")]
    SingularCurve,
    #[error("ConstructionFailure: {0}")]
    ConstructionFailure(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

fn to_i128(r: &Rational, what: &str) -> Result<i128, FfError> {
    if !r.is_integer() {
        return Err(FfError::ConsistencyFailure(format!("{what} = {r} is not an integer")));
    }
    r.to_integer()
        .to_i128()
        .ok_or_else(|| FfError::Overflow(format!("{what} exceeds 128 bits")))
}

fn ints(p: &RationalPoly, len: usize, what: &str) -> Result<Vec<i128>, FfError> {
    (0..len).map(|i| to_i128(&p.coeff(i), what)).collect()
}

/// `(q^e - 1)/(q - 1)`.
fn geometric(q: u64, e: i64) -> BigInt {
    if e <= 0 {
        return BigInt::zero();
    }
    (pow_int(q, e as u64) - 1) / BigInt::from(q - 1)
}

/// `q^e` for `e ≥ 0`, as a rational.
fn qpow(q: u64, e: i64) -> Rational {
    int(pow_int(q, e as u64))
}

/// Everything derived from the L-polynomial of a genus-g function field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionFieldProfile {
    pub q: u64,
    pub g: usize,
    #[serde(rename = "L")]
    pub l: Vec<i128>,
    /// `A_0..A_{g-1}`.
    #[serde(rename = "A")]
    pub a: Vec<i128>,
    pub h: i128,
    #[serde(rename = "D_F")]
    pub d_f: Vec<i128>,
    /// `h_0..h_g`.
    #[serde(with = "crate::poly::serde_rational::vec")]
    pub h_seq: Vec<Rational>,
    /// Whether every `A_i` is nonnegative (always true for actual curves).
    pub a_nonnegative: bool,
}

impl FunctionFieldProfile {
    pub fn l_poly(&self) -> RationalPoly {
        RationalPoly::new(self.l.iter().map(|&c| int(c)).collect())
    }

    pub fn d_poly(&self) -> RationalPoly {
        RationalPoly::new(self.d_f.iter().map(|&c| int(c)).collect())
    }

    /// `D_F(1)`.
    pub fn d_at_one(&self) -> BigInt {
        self.d_f.iter().map(|&c| BigInt::from(c)).sum()
    }

    /// Recomputes the profile from `L` and compares.
    pub fn validate(&self) -> Result<(), FfError> {
        let fresh = profile_from_lpoly(&self.l, self.q)?;
        if &fresh != self {
            return Err(FfError::ConsistencyFailure("profile disagrees with its L-polynomial".into()));
        }
        Ok(())
    }
}

/// `L(t) = q^g t^{2g} L(1/(q t))`.
pub fn satisfies_functional_equation(l: &RationalPoly, q: u64, g: usize) -> bool {
    l.q_reciprocal(q, g as u32, 2 * g).is_ok_and(|t| &t == l)
}

/// Analyses an integer L-polynomial of even degree `2g ≥ 2` with `L(0) = 1`.
pub fn profile_from_lpoly(l: &[i128], q: u64) -> Result<FunctionFieldProfile, FfError> {
    let lp = RationalPoly::new(l.iter().map(|&c| int(c)).collect());
    let deg = lp.degree().unwrap_or(0);
    if deg % 2 == 1 {
        return Err(FfError::OddDegree(deg));
    }
    if !lp.coeff(0).is_one() {
        return Err(FfError::BadConstantTerm(lp.coeff(0).to_string()));
    }
    let g = deg / 2;
    if g == 0 {
        return Err(FfError::GenusZero);
    }
    if !satisfies_functional_equation(&lp, q, g) {
        return Err(FfError::FunctionalEquationViolation);
    }
    let h = lp.eval(&Rational::one());
    if !h.is_positive() {
        return Err(FfError::NonPositiveClassNumber(h.to_string()));
    }
    let a_series = series_div(&lp, &RationalPoly::euler_factor(q), g - 1)?;
    let a: Vec<i128> = (0..g)
        .map(|i| to_i128(&a_series.coeff(i), "A_i"))
        .collect::<Result<_, _>>()?;
    let d_f = duursma_reduced_ff(&a, q, g);
    let reduced = reduce_genus(&lp, q, g)?;
    if reduced != d_f {
        return Err(FfError::ConsistencyFailure(format!(
            "reduced polynomial {reduced} differs from the divisor-count form {d_f}"
        )));
    }
    let h_seq = h_decomposition(&lp, q, g)?;
    Ok(FunctionFieldProfile {
        q,
        g,
        l: ints(&lp, 2 * g + 1, "L coefficient")?,
        a_nonnegative: a.iter().all(|&x| x >= 0),
        a,
        h: to_i128(&h, "h")?,
        d_f: ints(&d_f, 2 * g - 1, "D_F coefficient")?,
        h_seq,
    })
}

/// L-polynomial from the point counts `N_1..N_g` over GF(q^s), using the
/// functional equation for the upper half.
pub fn lpoly_from_point_counts(n: &[i128], q: u64) -> Result<Vec<i128>, FfError> {
    let g = n.len();
    if g == 0 {
        return Err(FfError::GenusZero);
    }
    // S_s = N_s - 1 - q^s are the power sums of the log expansion.
    let s: Vec<Rational> = n
        .iter()
        .enumerate()
        .map(|(i, &ns)| int(ns) - Rational::one() - qpow(q, i as i64 + 1))
        .collect();
    let mut b: Vec<Rational> = vec![Rational::one()];
    for i in 1..=g {
        let acc: Rational = (1..=i).map(|j| &s[j - 1] * &b[i - j]).sum();
        let bi = acc / int(i as u64);
        if !bi.is_integer() {
            return Err(FfError::InconsistentCounts(format!("coefficient b_{i} = {bi} is not an integer")));
        }
        b.push(bi);
    }
    let mut full = vec![Rational::zero(); 2 * g + 1];
    for i in 0..=g {
        full[i] = b[i].clone();
        full[2 * g - i] = &b[i] * qpow(q, (g - i) as i64);
    }
    full.iter()
        .map(|c| to_i128(c, "L coefficient"))
        .collect()
}

/// Profile from the point counts `N_1..N_g`.
pub fn profile_from_point_counts(n: &[i128], q: u64) -> Result<FunctionFieldProfile, FfError> {
    let l = lpoly_from_point_counts(n, q)?;
    profile_from_lpoly(&l, q).map_err(|e| match e {
        FfError::Overflow(_) => e,
        other => FfError::InconsistentCounts(other.to_string()),
    })
}

/// `(L(t) - L(1) t^g) / ((1 - t)(1 - q t))`, of genus `g - 1`.
pub fn reduce_genus(l: &RationalPoly, q: u64, g: usize) -> Result<RationalPoly, FfError> {
    let h = l.eval(&Rational::one());
    let num = l - &RationalPoly::monomial(h, g);
    num.exact_div(&RationalPoly::euler_factor(q)).map_err(|e| match e {
        PolyError::InexactDivision => FfError::InexactDivision,
        other => other.into(),
    })
}

/// `h_0..h_g` with `L = Σ h_i t^i ((1 - t)(1 - q t))^{g-i}`.
pub fn h_decomposition(l: &RationalPoly, q: u64, g: usize) -> Result<Vec<Rational>, FfError> {
    let mut out = vec![Rational::zero(); g + 1];
    let mut cur = l.clone();
    for i in (0..=g).rev() {
        out[i] = cur.eval(&Rational::one());
        if i > 0 {
            cur = reduce_genus(&cur, q, i)?;
        }
    }
    Ok(out)
}

/// `Σ h_i t^i ((1 - t)(1 - q t))^{g-i}`.
pub fn h_recompose(h: &[Rational], q: u64) -> RationalPoly {
    let g = h.len().saturating_sub(1);
    let e = RationalPoly::euler_factor(q);
    h.iter().enumerate().fold(RationalPoly::zero(), |acc, (i, hi)| {
        &acc + &(&RationalPoly::monomial(hi.clone(), i) * &e.pow((g - i) as u32))
    })
}

/// `D_F = Σ_{i=0}^{g-2} A_i (t^i + q^{g-1-i} t^{2g-2-i}) + A_{g-1} t^{g-1}`.
pub fn duursma_reduced_ff(a: &[i128], q: u64, g: usize) -> RationalPoly {
    if g == 0 {
        return RationalPoly::zero();
    }
    let mut c = vec![Rational::zero(); 2 * g - 1];
    for i in 0..g - 1 {
        c[i] += int(a[i]);
        c[2 * g - 2 - i] += int(a[i]) * qpow(q, (g - 1 - i) as i64);
    }
    c[g - 1] += int(a[g - 1]);
    RationalPoly::new(c)
}

/// Piecewise closed forms for `B_i`; each applicable clause is returned.
fn b_closed_forms(p: &FunctionFieldProfile, i: usize) -> Vec<BigInt> {
    let (q, g) = (p.q, p.g as i64);
    let a = |j: i64| BigInt::from(p.a[j as usize]);
    let i = i as i64;
    let mut out = Vec::new();
    if i < g {
        out.push((0..=i).map(|j| a(j) * geometric(q, i - j + 1)).sum());
    }
    if g <= i && i <= 2 * g - 3 {
        let low: BigInt = (0..g).map(|j| a(j) * geometric(q, i - j + 1)).sum();
        let high: BigInt = (g..=i)
            .map(|j| {
                a(2 * g - 2 - j) * (pow_int(q, (i - g + 2) as u64) - pow_int(q, (j - g + 1) as u64))
                    / BigInt::from(q - 1)
            })
            .sum();
        out.push(low + high);
    }
    if i >= 2 * g - 2 {
        out.push(p.d_at_one() * geometric(q, i - g + 2));
    }
    out
}

/// `B_0..B_N`, the series coefficients of `D_F / ((1 - t)(1 - q t))`,
/// cross-checked against the piecewise closed forms.
pub fn b_sequence(p: &FunctionFieldProfile, n: usize) -> Result<Vec<BigInt>, FfError> {
    let series = series_div(&p.d_poly(), &RationalPoly::euler_factor(p.q), n)?;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let c = series.coeff(i);
        if !c.is_integer() {
            return Err(FfError::ConsistencyFailure(format!("B_{i} = {c} is not an integer")));
        }
        let b = c.to_integer();
        for closed in b_closed_forms(p, i) {
            if closed != b {
                return Err(FfError::ConsistencyFailure(format!(
                    "closed form gives B_{i} = {closed}, series gives {b}"
                )));
            }
        }
        out.push(b);
    }
    Ok(out)
}

/// The four recurrences linking divisor counts across the canonical
/// reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `B_i = q^{i-g+2} B_{2g-4-i} + D_F(1)(q^{i-g+2}-1)/(q-1)`, `g-1 ≤ i ≤ 2g-4`.
    ReducedSpecial,
    /// `B_i = D_F(1)(q^{i-g+2}-1)/(q-1)`, `i ≥ 2g-3`.
    ReducedNonSpecial,
    /// `A_j = q^{j-g+1} A_{2g-2-j} + h(q^{j-g+1}-1)/(q-1)`, `g ≤ j ≤ 2g-2`.
    Special,
    /// `A_j = h(q^{j-g+1}-1)/(q-1)`, `j ≥ 2g-1`.
    NonSpecial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub relation: Relation,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsReport {
    pub holds: bool,
    pub failures: Vec<RelationFailure>,
    pub checked: usize,
}

/// Checks the `B`-level relations on an explicit sequence `B_0..B_N`.
pub fn check_b_relations(b: &[BigInt], d_at_one: &BigInt, q: u64, g: usize) -> Vec<RelationFailure> {
    let g = g as i64;
    let mut failures = Vec::new();
    for (i, bi) in b.iter().enumerate() {
        let ii = i as i64;
        let tail = d_at_one * geometric(q, ii - g + 2);
        if g - 1 <= ii && ii <= 2 * g - 4 {
            let mirror = &b[(2 * g - 4 - ii) as usize];
            if *bi != pow_int(q, (ii - g + 2) as u64) * mirror + &tail {
                failures.push(RelationFailure { relation: Relation::ReducedSpecial, index: i });
            }
        }
        if ii >= 2 * g - 3 && *bi != tail {
            failures.push(RelationFailure { relation: Relation::ReducedNonSpecial, index: i });
        }
    }
    failures
}

/// Checks the `A`-level relations on an explicit sequence `A_0..A_N`.
pub fn check_a_relations(a: &[BigInt], h: &BigInt, q: u64, g: usize) -> Vec<RelationFailure> {
    let g = g as i64;
    let mut failures = Vec::new();
    for (j, aj) in a.iter().enumerate() {
        let jj = j as i64;
        let tail = h * geometric(q, jj - g + 1);
        if g <= jj && jj <= 2 * g - 2 {
            let mirror = &a[(2 * g - 2 - jj) as usize];
            if *aj != pow_int(q, (jj - g + 1) as u64) * mirror + &tail {
                failures.push(RelationFailure { relation: Relation::Special, index: j });
            }
        }
        if jj >= 2 * g - 1 && *aj != tail {
            failures.push(RelationFailure { relation: Relation::NonSpecial, index: j });
        }
    }
    failures
}

/// All four relations on the first `N + 1` terms of both series.
pub fn b_relations_check(p: &FunctionFieldProfile, n: usize) -> Result<RelationsReport, FfError> {
    let b = b_sequence(p, n)?;
    let a_series = series_div(&p.l_poly(), &RationalPoly::euler_factor(p.q), n)?;
    let a: Vec<BigInt> = a_series
        .coeffs()
        .iter()
        .map(|c| c.to_integer())
        .collect();
    let mut failures = check_b_relations(&b, &p.d_at_one(), p.q, p.g);
    failures.extend(check_a_relations(&a, &BigInt::from(p.h), p.q, p.g));
    Ok(RelationsReport {
        holds: failures.is_empty(),
        failures,
        checked: n + 1,
    })
}

/// `(√q - 1)^{2g} ≤ h ≤ (√q + 1)^{2g}`, decided exactly.
pub fn class_number_bounds_for(h: &BigInt, q: u64, g: usize) -> bool {
    let one = QuadRingElement::rational(Rational::one(), q);
    let s = QuadRingElement::sqrt_q(q);
    let lower = (&s - &one).pow(2 * g as u32);
    let upper = (&s + &one).pow(2 * g as u32);
    let hq = QuadRingElement::rational(int(h.clone()), q);
    (&hq - &lower).is_nonnegative() && (&upper - &hq).is_nonnegative()
}

pub fn class_number_bounds(p: &FunctionFieldProfile) -> bool {
    class_number_bounds_for(&BigInt::from(p.h), p.q, p.g)
}

/// For the rational function field (genus 0, `L_F = 1`), the Reed–Solomon
/// code `[n, m+1, n-m]` obtained by evaluating at `n` distinct points has
/// zeta polynomial `P_C = 1 = L_F`. Verified through exhaustive enumeration.
pub fn genus0_ag_identity(q: u64, n: usize, m: usize) -> Result<bool, FfError> {
    if m >= n {
        return Err(FfError::ConstructionFailure(format!("need m < n, got m={m}, n={n}")));
    }
    if n as u64 > q {
        return Err(FfError::ConstructionFailure(format!(
            "length {n} exceeds the {q} points of the projective line minus infinity"
        )));
    }
    let field = field_of_size(q)?;
    let code = reed_solomon_code(&field, n, m + 1)?;
    let w = weight_distribution_via_smaller(&code, DEFAULT_BUDGET)?;
    let profile = CodeProfile::from_distribution(&w)?;
    let zeta = ZetaProfile::from_distribution(&w, &profile)?;
    Ok(profile.g == 0 && profile.d == n - m && zeta.p == RationalPoly::one())
}

/// Weierstrass coefficients `[a1, a2, a3, a4, a6]` of
/// `y² + a1 xy + a3 y = x³ + a2 x² + a4 x + a6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weierstrass {
    pub a: [u32; 5],
}

impl Weierstrass {
    fn elems(&self, f: &FiniteField) -> Result<[crate::field::FieldElement; 5], FfError> {
        let mut out = [f.zero(); 5];
        for (o, &v) in out.iter_mut().zip(&self.a) {
            *o = f.element(v)?;
        }
        Ok(out)
    }

    /// The discriminant `Δ = -b2² b8 - 8 b4³ - 27 b6² + 9 b2 b4 b6`.
    pub fn discriminant(&self, f: &FiniteField) -> Result<crate::field::FieldElement, FfError> {
        let [a1, a2, a3, a4, a6] = self.elems(f)?;
        let c = |n: i64| f.from_int(n);
        let m = |x, y| f.mul(x, y).expect("same field");
        let ad = |x, y| f.add(x, y).expect("same field");
        let sb = |x, y| f.sub(x, y).expect("same field");
        let b2 = ad(m(a1, a1), m(c(4), a2));
        let b4 = ad(m(c(2), a4), m(a1, a3));
        let b6 = ad(m(a3, a3), m(c(4), a6));
        let b8 = sb(
            ad(ad(m(m(a1, a1), a6), m(m(c(4), a2), a6)), m(m(a2, a3), a3)),
            ad(m(m(a1, a3), a4), m(a4, a4)),
        );
        let t1 = m(m(b2, b2), b8);
        let t2 = m(c(8), m(m(b4, b4), b4));
        let t3 = m(c(27), m(b6, b6));
        let t4 = m(c(9), m(m(b2, b4), b6));
        Ok(ad(sb(sb(f.neg(t1)?, t2), t3), t4))
    }

    /// Number of GF(q)-rational points, including the point at infinity,
    /// by brute force over all `(x, y)`.
    pub fn count_points(&self, f: &FiniteField) -> Result<u64, FfError> {
        if self.discriminant(f)?.is_zero() {
            return Err(FfError::SingularCurve);
        }
        let [a1, a2, a3, a4, a6] = self.elems(f)?;
        let mut count = 1u64;
        for x in f.elements() {
            let x2 = f.mul(x, x)?;
            let rhs = f.add(f.add(f.add(f.mul(x2, x)?, f.mul(a2, x2)?)?, f.mul(a4, x)?)?, a6)?;
            for y in f.elements() {
                let lhs = f.add(f.add(f.mul(y, y)?, f.mul(f.mul(a1, x)?, y)?)?, f.mul(a3, y)?)?;
                if lhs == rhs {
                    count += 1;
                }
            }
        }
        Ok(count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn elliptic_profile() {
        let p = profile_from_lpoly(&[1, 0, 2], 2).unwrap();
        assert_eq!((p.g, p.h), (1, 3));
        assert_eq!(p.a, vec![1]);
        assert_eq!(p.d_f, vec![1]);
        assert_eq!(p.h_seq, vec![int(1), int(3)]);
        let b = b_sequence(&p, 10).unwrap();
        for (i, bi) in b.iter().enumerate() {
            assert_eq!(*bi, BigInt::from((1i64 << (i + 1)) - 1));
        }
        assert!(b_relations_check(&p, 3).unwrap().holds);
        assert!(class_number_bounds(&p));
    }

    #[test]
    fn genus_two_profile() {
        let p = profile_from_lpoly(&[1, 0, 4, 0, 4], 2).unwrap();
        assert_eq!((p.g, p.h), (2, 9));
        assert_eq!(p.a, vec![1, 3]);
        assert_eq!(p.d_f, vec![1, 3, 2]);
        assert_eq!(p.h_seq, vec![int(1), int(6), int(9)]);
        let b = b_sequence(&p, 3).unwrap();
        assert_eq!(b, [1, 6, 18, 42].map(BigInt::from).to_vec());
        assert!(b_relations_check(&p, 6).unwrap().holds);
        assert!(class_number_bounds(&p));
        assert!(!class_number_bounds_for(&BigInt::from(40), 2, 2));
    }

    #[test]
    fn lpoly_errors() {
        assert_eq!(profile_from_lpoly(&[1, 1], 2).unwrap_err(), FfError::OddDegree(1));
        assert!(matches!(profile_from_lpoly(&[2, 0, 4], 2), Err(FfError::BadConstantTerm(_))));
        assert_eq!(
            profile_from_lpoly(&[1, 1, 1], 2).unwrap_err(),
            FfError::FunctionalEquationViolation
        );
    }

    #[test]
    fn point_counts() {
        assert_eq!(lpoly_from_point_counts(&[3], 2).unwrap(), vec![1, 0, 2]);
        assert_eq!(lpoly_from_point_counts(&[1], 2).unwrap(), vec![1, -2, 2]);
        assert!(matches!(profile_from_point_counts(&[0], 2), Err(FfError::InconsistentCounts(_))));
        // (1 + 2t²)²: S_2 = 2 b_2 = 8, so N_2 = 8 + 1 + 4.
        let p = profile_from_point_counts(&[3, 13], 2).unwrap();
        assert_eq!(p.l, vec![1, 0, 4, 0, 4]);
    }

    #[test]
    fn reduce_and_decompose() {
        let l = RationalPoly::from_ints(&[1, 0, 4, 0, 4]);
        assert_eq!(reduce_genus(&l, 2, 2).unwrap(), RationalPoly::from_ints(&[1, 3, 2]));
        assert_eq!(reduce_genus(&RationalPoly::from_ints(&[1, 0, 2]), 2, 1).unwrap(), RationalPoly::one());
        let l1 = &RationalPoly::euler_factor(3) + &RationalPoly::from_ints(&[0, 1]);
        assert_eq!(reduce_genus(&l1, 3, 1).unwrap(), RationalPoly::one());
        let h = h_decomposition(&l, 2, 2).unwrap();
        assert_eq!(h_recompose(&h, 2), l);
        let e3 = RationalPoly::euler_factor(5).pow(3);
        assert_eq!(h_decomposition(&e3, 5, 3).unwrap(), vec![int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn virtual_profile_d_form() {
        let d = duursma_reduced_ff(&[1, 0], 2, 2);
        assert_eq!(d, RationalPoly::from_ints(&[1, 0, 2]));
        let l = &(&RationalPoly::euler_factor(2) * &d) + &RationalPoly::monomial(int(1), 2);
        let p = profile_from_lpoly(&ints(&l, 5, "L").unwrap(), 2).unwrap();
        assert_eq!(p.a, vec![1, 0]);
    }

    #[test]
    fn perturbed_b_sequence_fails() {
        let p = profile_from_lpoly(&[1, 0, 4, 0, 4], 2).unwrap();
        let mut b = b_sequence(&p, 6).unwrap();
        b[2] += 1;
        let failures = check_b_relations(&b, &p.d_at_one(), 2, 2);
        assert_eq!(failures, vec![RelationFailure { relation: Relation::ReducedNonSpecial, index: 2 }]);
    }

    #[test]
    fn weierstrass_counts() {
        let f2 = make_field(2, 1, None).unwrap();
        let e = Weierstrass { a: [0, 0, 1, 0, 0] };
        assert_eq!(e.count_points(&f2).unwrap(), 3);
        let f3 = make_field(3, 1, None).unwrap();
        let e = Weierstrass { a: [0, 0, 0, 2, 0] }; // y² = x³ - x
        assert_eq!(e.count_points(&f3).unwrap(), 4);
        let singular = Weierstrass { a: [0, 0, 0, 0, 0] };
        assert_eq!(singular.count_points(&f3).unwrap_err(), FfError::SingularCurve);
    }

    #[test]
    fn genus_zero_identity() {
        assert!(genus0_ag_identity(5, 5, 2).unwrap());
        assert!(genus0_ag_identity(4, 4, 1).unwrap());
        assert!(genus0_ag_identity(2, 3, 1).is_err());
    }
}
