//! Riemann hypothesis analogue: deciding exactly whether every root of a
//! zeta polynomial lies on `|t| = 1/√q`, closed-form criteria in degrees 2
//! and 4, the field-size bound, and logarithmic-coefficient diagnostics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combin::{binomial, pow_int};
use crate::poly::{int, real_root_count, serde_rational, sturm_count, to_f64, Bound, PolyError, Rational, RationalPoly};

/// Tolerance on `|root|·√q - 1` for roots reported on the circle.
pub const ON_CIRCLE_TOL: f64 = 1e-9;
/// Minimum residual expected from some root when the verdict is negative.
pub const OFF_CIRCLE_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RhaError {
    #[error("ZeroPolynomial: the zero polynomial has no root structure")]
    ZeroPolynomial,
    #[error("HypothesisViolation: {0}")]
    HypothesisViolation(String),
    #[error("GenusZero: the bound is undefined for MDS codes")]
    GenusZero,
    #[error("DivisibilityViolation: {0}")]
    DivisibilityViolation(String),
    #[error("ZeroConstantTerm: P(0) = 0")]
    ZeroConstantTerm,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `a + b√q` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadRingElement {
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    pub q: u64,
}

fn rat_sign(x: &Rational) -> Ordering {
    x.cmp(&Rational::zero())
}

impl QuadRingElement {
    pub fn new(a: Rational, b: Rational, q: u64) -> Self {
        QuadRingElement { a, b, q }
    }

    pub fn rational(a: Rational, q: u64) -> Self {
        Self::new(a, Rational::zero(), q)
    }

    /// `√q` itself.
    pub fn sqrt_q(q: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), q)
    }

    /// Sign of `a + b√q`, decided exactly.
    pub fn signum(&self) -> Ordering {
        let (sa, sb) = (rat_sign(&self.a), rat_sign(&self.b));
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // Opposite signs: compare a² with b²q.
        let a2 = &self.a * &self.a;
        let b2q = &self.b * &self.b * int(self.q);
        match a2.cmp(&b2q) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Greater => sa,
            Ordering::Less => sb,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::rational(Rational::one(), self.q);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        // (a + b√q)^{-1} = (a - b√q) / (a² - b²q)
        let norm = &self.a * &self.a - &self.b * &self.b * int(self.q);
        if norm.is_zero() {
            return None;
        }
        Some(Self::new(&self.a / &norm, -&self.b / &norm, self.q))
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * (self.q as f64).sqrt()
    }
}

impl PartialOrd for QuadRingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.q == other.q).then(|| (self - other).signum())
    }
}

impl fmt::Display for QuadRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√{}", self.a, self.b, self.q)
    }
}

impl Add for &QuadRingElement {
    type Output = QuadRingElement;
    fn add(self, o: &QuadRingElement) -> QuadRingElement {
        assert_eq!(self.q, o.q, "mixed quadratic rings");
        QuadRingElement::new(&self.a + &o.a, &self.b + &o.b, self.q)
    }
}

impl Sub for &QuadRingElement {
    type Output = QuadRingElement;
    fn sub(self, o: &QuadRingElement) -> QuadRingElement {
        assert_eq!(self.q, o.q, "mixed quadratic rings");
        QuadRingElement::new(&self.a - &o.a, &self.b - &o.b, self.q)
    }
}

impl Mul for &QuadRingElement {
    type Output = QuadRingElement;
    fn mul(self, o: &QuadRingElement) -> QuadRingElement {
        assert_eq!(self.q, o.q, "mixed quadratic rings");
        let q = int(self.q);
        QuadRingElement::new(
            &self.a * &o.a + &self.b * &o.b * q,
            &self.a * &o.b + &self.b * &o.a,
            self.q,
        )
    }
}

impl Neg for &QuadRingElement {
    type Output = QuadRingElement;
    fn neg(self) -> QuadRingElement {
        QuadRingElement::new(-&self.a, -&self.b, self.q)
    }
}

impl Mul<&Rational> for &QuadRingElement {
    type Output = QuadRingElement;
    fn mul(self, c: &Rational) -> QuadRingElement {
        QuadRingElement::new(&self.a * c, &self.b * c, self.q)
    }
}

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RhaMethod {
    OddDegreeReject,
    ReciprocityReject,
    ExactSturm,
    ClosedFormDeg2,
    ClosedFormDeg4,
    Degenerate,
}

/// A numerically located root and its distance from the critical circle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootDiagnostic {
    pub re: f64,
    pub im: f64,
    /// `|root|·√q - 1`.
    pub residual: f64,
}

/// The auxiliary real polynomials of the exact decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhaCertificate {
    /// `G(u)` with `P(t) = t^m G(1/t + q t)`.
    pub g: RationalPoly,
    /// `G₂(s)` with `G₂(u²) = G(u) G(-u)`.
    pub g2: RationalPoly,
    /// Distinct real roots of `G`.
    pub real_roots: usize,
    /// Distinct roots of the squarefree part of `G`.
    pub distinct_roots: usize,
    /// Distinct roots of `G₂` in `(4q, ∞)`.
    pub roots_beyond_4q: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RhaVerdict {
    pub holds: bool,
    pub method: RhaMethod,
    pub degree: usize,
    pub q: u64,
    pub root_diagnostics: Vec<RootDiagnostic>,
    pub exact_certificate: Option<RhaCertificate>,
}

impl RhaVerdict {
    /// Largest `| |root|·√q - 1 |` over all located roots.
    pub fn max_residual(&self) -> f64 {
        self.root_diagnostics
            .iter()
            .map(|r| r.residual.abs())
            .fold(0.0, f64::max)
    }

    /// Whether the numerical diagnostics agree with the exact verdict at the
    /// standard tolerances.
    pub fn diagnostics_agree(&self) -> bool {
        if self.holds {
            self.max_residual() < ON_CIRCLE_TOL
        } else {
            self.max_residual() > OFF_CIRCLE_TOL
        }
    }
}

/// `a_{2m-i} = q^{m-i} a_i` for all `i`.
pub fn is_self_q_reciprocal(p: &RationalPoly, q: u64) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    if deg % 2 == 1 {
        return false;
    }
    let m = deg / 2;
    (0..m).all(|i| p.coeff(deg - i) == p.coeff(i) * int(pow_int(q, (m - i) as u64)))
}

/// `G(u) = a_m + Σ_{j=1}^{m} a_{m-j} v_j(u)` where `v_0 = 2`, `v_1 = u`,
/// `v_{j+1} = u v_j - q v_{j-1}` (so `v_j = t^{-j} + q^j t^j`).
fn reduce_to_u(p: &RationalPoly, q: u64) -> RationalPoly {
    let m = p.degree().unwrap_or(0) / 2;
    let u = RationalPoly::from_ints(&[0, 1]);
    let qr = int(q);
    let mut v_prev = RationalPoly::from_ints(&[2]);
    let mut v = u.clone();
    let mut g = RationalPoly::constant(p.coeff(m));
    for j in 1..=m {
        g = &g + &v.scale(&p.coeff(m - j));
        let next = &(&u * &v) - &v_prev.scale(&qr);
        v_prev = std::mem::replace(&mut v, next);
    }
    g
}

/// `G₂(s)` from the even part of `G(u) G(-u)`.
fn square_roots_poly(g: &RationalPoly) -> RationalPoly {
    let neg = RationalPoly::new(
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    let prod = g * &neg;
    RationalPoly::new(prod.coeffs().iter().step_by(2).cloned().collect())
}

fn complex_eval(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a polynomial with simple roots, by Aberth–Ehrlich
/// iteration followed by Newton polishing.
pub fn numeric_roots(p: &RationalPoly) -> Vec<Complex64> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let lead = to_f64(p.leading().expect("nonzero"));
    let coeffs: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| Complex64::new(to_f64(c) / lead, 0.0))
        .collect();
    // Cauchy bound for the initial circle.
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * (i as f64 + 0.25) / deg as f64 + 0.4;
            Complex64::from_polar(radius * 0.5, angle)
        })
        .collect();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..deg {
            let (pv, dpv) = complex_eval(&coeffs, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for root in z.iter_mut() {
        for _ in 0..5 {
            let (pv, dpv) = complex_eval(&coeffs, *root);
            if dpv.norm() == 0.0 {
                break;
            }
            let step = pv / dpv;
            if !step.is_finite() {
                break;
            }
            *root -= step;
        }
    }
    z
}

fn diagnostics(p: &RationalPoly, q: u64) -> Vec<RootDiagnostic> {
    let sq = (q as f64).sqrt();
    numeric_roots(&p.squarefree_part())
        .into_iter()
        .map(|z| RootDiagnostic {
            re: z.re,
            im: z.im,
            residual: z.norm() * sq - 1.0,
        })
        .collect()
}

/// Exact decision whether every root of `P` lies on `|t| = 1/√q`.
pub fn rha_check(p: &RationalPoly, q: u64) -> Result<RhaVerdict, RhaError> {
    let deg = p.degree().ok_or(RhaError::ZeroPolynomial)?;
    let verdict = |holds, method, cert| RhaVerdict {
        holds,
        method,
        degree: deg,
        q,
        root_diagnostics: diagnostics(p, q),
        exact_certificate: cert,
    };
    if deg % 2 == 1 {
        return Ok(verdict(false, RhaMethod::OddDegreeReject, None));
    }
    if deg == 0 {
        return Ok(verdict(true, RhaMethod::Degenerate, None));
    }
    if !is_self_q_reciprocal(p, q) {
        return Ok(verdict(false, RhaMethod::ReciprocityReject, None));
    }
    let g = reduce_to_u(p, q);
    let g2 = square_roots_poly(&g);
    let sf = g.squarefree_part();
    let distinct_roots = sf.degree().unwrap_or(0);
    let real_roots = real_root_count(&sf)?;
    let roots_beyond_4q = sturm_count(&g2, &Bound::Finite(int(4 * q)), &Bound::PosInfinity)?;
    let holds = real_roots == distinct_roots && roots_beyond_4q == 0;
    let cert = RhaCertificate {
        g,
        g2,
        real_roots,
        distinct_roots,
        roots_beyond_4q,
    };
    Ok(verdict(holds, RhaMethod::ExactSturm, Some(cert)))
}

/// `(q + 1 ∓ 2√q) / (q - 1)²`, i.e. `1/(√q ± 1)²`.
fn inv_sq_sqrt_q_pm_one(q: u64, plus: bool) -> QuadRingElement {
    let den = int((q - 1) * (q - 1));
    let b = if plus { int(-2) } else { int(2) };
    QuadRingElement::new(int(q + 1) / &den, b / &den, q)
}

/// Near-MDS criterion `1/(√q+1)² ≤ c_0 ≤ 1/(√q-1)²`, decided exactly.
pub fn rha_deg2(c0: &Rational, q: u64) -> Result<bool, RhaError> {
    if !c0.is_positive() {
        return Err(RhaError::HypothesisViolation(format!("c_0 = {c0} must be positive")));
    }
    let c = QuadRingElement::rational(c0.clone(), q);
    let lower = inv_sq_sqrt_q_pm_one(q, true);
    let upper = inv_sq_sqrt_q_pm_one(q, false);
    Ok((&c - &lower).is_nonnegative() && (&upper - &c).is_nonnegative())
}

/// Criterion for `D = c_0 + c_1 t + q c_0 t²` with `0 < c_0 < 1`:
/// `[(q+1)c_0 + c_1]² ≥ 4c_0`,
/// `q - 4√q + 1 ≤ c_1/c_0 ≤ q + 4√q + 1` and
/// `c_1 ≤ min(1/(√q-1)² - 2√q c_0, 1/(√q+1)² + 2√q c_0)`.
pub fn rha_deg4(c0: &Rational, c1: &Rational, q: u64) -> Result<bool, RhaError> {
    if !(c0.is_positive() && c0 < &Rational::one()) {
        return Err(RhaError::HypothesisViolation(format!("c_0 = {c0} must lie in (0, 1)")));
    }
    let disc = {
        let s = int(q + 1) * c0 + c1;
        &s * &s - int(4) * c0
    };
    if disc.is_negative() {
        return Ok(false);
    }
    let ratio = QuadRingElement::rational(c1 / c0, q);
    let four_sqrt = QuadRingElement::new(Rational::zero(), int(4), q);
    let base = QuadRingElement::rational(int(q + 1), q);
    if !(&ratio - &(&base - &four_sqrt)).is_nonnegative()
        || !(&(&base + &four_sqrt) - &ratio).is_nonnegative()
    {
        return Ok(false);
    }
    let c1q = QuadRingElement::rational(c1.clone(), q);
    let two_sqrt_c0 = QuadRingElement::new(Rational::zero(), int(2) * c0, q);
    let end1 = &inv_sq_sqrt_q_pm_one(q, false) - &two_sqrt_c0;
    let end2 = &inv_sq_sqrt_q_pm_one(q, true) + &two_sqrt_c0;
    Ok((&end1 - &c1q).is_nonnegative() && (&end2 - &c1q).is_nonnegative())
}

/// Result of the field-size bound `ν (√q - 1)^{2g} ≤ C(2k, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldBound {
    pub bound_holds: bool,
    pub nu: u128,
}

/// Field-size bound for a formally self-dual code satisfying the RHA:
/// `q ≤ (C(2k,d)/ν)^{1/(2g)} + 1)²`, tested as `ν (√q-1)^{2g} ≤ C(2k,d)`.
pub fn field_bound(k: usize, d: usize, g: usize, w_d: u128, q: u64) -> Result<FieldBound, RhaError> {
    if g == 0 {
        return Err(RhaError::GenusZero);
    }
    let unit = (q - 1) as u128;
    if !w_d.is_multiple_of(unit) {
        return Err(RhaError::DivisibilityViolation(format!(
            "W_d = {w_d} is not divisible by q - 1 = {unit}"
        )));
    }
    let nu = w_d / unit;
    let base = &QuadRingElement::sqrt_q(q) - &QuadRingElement::rational(Rational::one(), q);
    let lhs = &base.pow(2 * g as u32) * &int(nu);
    let rhs = QuadRingElement::rational(int(binomial(2 * k as i64, d as i64)), q);
    Ok(FieldBound {
        bound_holds: (&rhs - &lhs).is_nonnegative(),
        nu,
    })
}

/// `S_1..S_N` with `log(P(t)/P(0)) = Σ S_ν t^ν / ν`.
pub fn log_coefficients(p: &RationalPoly, n: usize) -> Result<Vec<Rational>, RhaError> {
    let p0 = p.coeff(0);
    if p0.is_zero() {
        return Err(RhaError::ZeroConstantTerm);
    }
    let b: Vec<Rational> = (0..=n).map(|i| p.coeff(i) / &p0).collect();
    let mut s: Vec<Rational> = Vec::with_capacity(n);
    for nu in 1..=n {
        let mut acc = int(nu as u64) * &b[nu];
        for i in 1..nu {
            acc -= &s[i - 1] * &b[nu - i];
        }
        s.push(acc);
    }
    Ok(s)
}

/// Finite-window diagnostic on the log coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogDiagnostic {
    #[serde(with = "crate::poly::serde_rational::vec")]
    pub s: Vec<Rational>,
    /// `max_ν |S_ν| q^{-ν/2}`.
    pub max_normalized: f64,
    /// Whether `S_ν² ≤ deg(P)² q^ν` for every ν in the window, exactly.
    pub within_degree_bound: bool,
}

pub fn log_diagnostic(p: &RationalPoly, q: u64, n: usize) -> Result<LogDiagnostic, RhaError> {
    let s = log_coefficients(p, n)?;
    let deg = p.degree().unwrap_or(0) as u64;
    let mut max_normalized: f64 = 0.0;
    let mut within = true;
    for (i, sv) in s.iter().enumerate() {
        let nu = (i + 1) as u64;
        max_normalized = max_normalized.max(to_f64(sv).abs() / (q as f64).powf(nu as f64 / 2.0));
        if sv * sv > int(BigInt::from(deg * deg) * pow_int(q, nu)) {
            within = false;
        }
    }
    Ok(LogDiagnostic {
        s,
        max_normalized,
        within_degree_bound: within,
    })
}
