//! Conversions between weight distributions, the zeta polynomial `P_C` and
//! the reduced polynomial `D_C`, together with MDS enumerators.
//!
//! Homogeneous enumerators are represented by their coefficient vectors:
//! entry `w` is the coefficient of `x^{n-w} y^w`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, CodeProfile, WeightDistribution};
use crate::combin::{binomial, pow_int, sign};
use crate::poly::{int, series_div, PolyError, Rational, RationalPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZetaError {
    #[error("RangeError: {0}")]
    RangeError(String),
    #[error("InconsistentProfile: {0}")]
    InconsistentProfile(String),
    #[error("NonIntegerWeight: non-integer count at weight {0}")]
    NonIntegerWeight(usize),
    #[error("NegativeWeight: negative count at weight {0}")]
    NegativeWeight(usize),
    #[error("NormalizationFailure: P(1) = {0}, expected 1")]
    NormalizationFailure(String),
    #[error("SingularSystem: zero pivot at weight {0}")]
    SingularSystem(usize),
    #[error("InexactDivision: P - t^g is not divisible by (1 - t)(1 - q t)")]
    InexactDivision,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Coefficient `M_{n,s}^{(w)}` of the MDS enumerator of length n and
/// minimum distance s over GF(q). Zero for `w < s`.
pub fn mds_weight(n: usize, s: usize, q: u64, w: usize) -> Result<BigInt, ZetaError> {
    if s == 0 || s > n || w > n {
        return Err(ZetaError::RangeError(format!(
            "need 1 <= s <= n and w <= n, got n={n}, s={s}, w={w}"
        )));
    }
    if w < s {
        return Ok(BigInt::zero());
    }
    let (n, s, w) = (n as i64, s as i64, w as i64);
    let sum: BigInt = (0..=w - s)
        .map(|i| sign(i) * binomial(w, i) * (pow_int(q, (w + 1 - s - i) as u64) - 1))
        .sum();
    Ok(binomial(n, w) * sum)
}

/// Full MDS enumerator `M_{n,s}` as a coefficient vector (entry 0 is 1).
pub fn mds_enumerator(n: usize, s: usize, q: u64) -> Result<Vec<BigInt>, ZetaError> {
    let mut v = (0..=n)
        .map(|w| mds_weight(n, s, q, w))
        .collect::<Result<Vec<_>, _>>()?;
    v[0] = BigInt::one();
    Ok(v)
}

/// Coefficient vector of `(x - y)^{n-s} y^s`.
fn kernel_term(n: usize, s: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|w| {
            if w < s {
                BigInt::zero()
            } else {
                binomial((n - s) as i64, (w - s) as i64) * sign((w - s) as i64)
            }
        })
        .collect()
}

fn axpy(acc: &mut [BigInt], c: &BigInt, v: &[BigInt]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

fn to_distribution(
    counts: &[BigInt],
    profile: &CodeProfile,
) -> Result<WeightDistribution, ZetaError> {
    let mut out = Vec::with_capacity(counts.len());
    for (w, c) in counts.iter().enumerate() {
        if c.is_negative() {
            return Err(ZetaError::NegativeWeight(w));
        }
        out.push(
            c.to_u128()
                .ok_or_else(|| ZetaError::RangeError(format!("count at weight {w} overflows")))?,
        );
    }
    let wd = WeightDistribution {
        n: profile.n,
        k: profile.k,
        q: profile.q,
        counts: out,
    };
    wd.validate()
        .map_err(|e| ZetaError::InconsistentProfile(e.to_string()))?;
    Ok(wd)
}

fn rational_counts(counts: &[Rational]) -> Result<Vec<BigInt>, ZetaError> {
    counts
        .iter()
        .enumerate()
        .map(|(w, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(ZetaError::NonIntegerWeight(w))
            }
        })
        .collect()
}

fn check_consistent(w: &WeightDistribution, p: &CodeProfile) -> Result<(), ZetaError> {
    if w.n != p.n || w.k != p.k || w.q != p.q {
        return Err(ZetaError::InconsistentProfile(format!(
            "distribution [n={}, k={}, q={}] vs profile [n={}, k={}, q={}]",
            w.n, w.k, w.q, p.n, p.k, p.q
        )));
    }
    if w.min_distance() != Some(p.d) {
        return Err(ZetaError::InconsistentProfile(format!(
            "distribution has minimum distance {:?}, profile says {}",
            w.min_distance(),
            p.d
        )));
    }
    Ok(())
}

/// Reduced polynomial `D_C` from a weight distribution; zero for MDS codes.
pub fn dc_from_weights(
    w: &WeightDistribution,
    profile: &CodeProfile,
) -> Result<RationalPoly, ZetaError> {
    check_consistent(w, profile)?;
    let CodeProfile { n, d, g, q, .. } = *profile;
    if g == 0 {
        return Ok(RationalPoly::zero());
    }
    let r = profile.r();
    let s = d + g;
    let v: Vec<BigInt> = (0..=n)
        .map(|wt| {
            let c = BigInt::from(w.count(wt));
            if wt >= s {
                Ok(c - mds_weight(n, s, q, wt)?)
            } else {
                Ok(c)
            }
        })
        .collect::<Result<_, ZetaError>>()?;
    let n_i = n as i64;
    let coeffs = (0..=r - 2)
        .map(|i| {
            let num: BigInt = (d..=(d + i).min(n))
                .map(|wt| binomial(n_i - wt as i64, (n - d - i) as i64) * &v[wt])
                .sum();
            let den = BigInt::from(q - 1) * binomial(n_i, (d + i) as i64);
            Rational::new(num, den)
        })
        .collect();
    Ok(RationalPoly::new(coeffs))
}

/// Weight distribution from `D_C` and the code parameters.
pub fn weights_from_dc(
    dpoly: &RationalPoly,
    profile: &CodeProfile,
) -> Result<WeightDistribution, ZetaError> {
    let CodeProfile { n, d, g, q, .. } = *profile;
    let r = profile.r();
    let max_deg = r.checked_sub(2);
    if let Some(deg) = dpoly.degree() {
        if max_deg.is_none_or(|m| deg > m) {
            return Err(ZetaError::Poly(PolyError::DegreeOverflow {
                degree: deg,
                bound: max_deg.unwrap_or(0),
            }));
        }
    }
    let s = d + g;
    let mut counts = vec![Rational::zero(); n + 1];
    counts[0] = Rational::one();
    let qm1 = int(q - 1);
    for (wt, slot) in counts.iter_mut().enumerate().skip(d) {
        let mut acc = Rational::zero();
        if let Some(m) = max_deg {
            for i in 0..=(wt - d).min(m) {
                let c = dpoly.coeff(i);
                if c.is_zero() {
                    continue;
                }
                let b = int(sign((wt - d - i) as i64) * binomial(wt as i64, (d + i) as i64));
                acc += b * c;
            }
        }
        acc = acc * &qm1 * int(binomial(n as i64, wt as i64));
        if wt >= s {
            acc += int(mds_weight(n, s, q, wt)?);
        }
        *slot = acc;
    }
    to_distribution(&rational_counts(&counts)?, profile)
}

/// `P = (1 - t)(1 - q t) D + t^g`.
pub fn zeta_from_dc(dpoly: &RationalPoly, g: usize, q: u64) -> Result<RationalPoly, ZetaError> {
    let p = &(&RationalPoly::euler_factor(q) * dpoly) + &RationalPoly::monomial(Rational::one(), g);
    let at_one = p.eval(&Rational::one());
    if !at_one.is_one() {
        return Err(ZetaError::NormalizationFailure(at_one.to_string()));
    }
    Ok(p)
}

/// `D = (P - t^g) / ((1 - t)(1 - q t))`, exactly.
pub fn dc_from_zeta(p: &RationalPoly, g: usize, q: u64) -> Result<RationalPoly, ZetaError> {
    let num = p - &RationalPoly::monomial(Rational::one(), g);
    num.exact_div(&RationalPoly::euler_factor(q))
        .map_err(|e| match e {
            PolyError::InexactDivision => ZetaError::InexactDivision,
            other => other.into(),
        })
}

/// Weight distribution from `P` through the generating function
/// `W^(s) / (q - 1) = C(n, s) · [t^{s-d}] (1 - t)^{s-1} P(t) / (1 - q t)`.
pub fn weights_from_zeta_gf(
    p: &RationalPoly,
    profile: &CodeProfile,
) -> Result<WeightDistribution, ZetaError> {
    let CodeProfile { n, d, q, .. } = *profile;
    let r = profile.r();
    if let Some(deg) = p.degree() {
        if deg > r {
            return Err(ZetaError::Poly(PolyError::DegreeOverflow { degree: deg, bound: r }));
        }
    }
    let order = n - d;
    let denom = RationalPoly::new(vec![Rational::one(), -int(q)]);
    let base = series_div(p, &denom, order)?;
    let one_minus_t = RationalPoly::from_ints(&[1, -1]);
    let qm1 = int(q - 1);
    let mut counts = vec![Rational::zero(); n + 1];
    counts[0] = Rational::one();
    for s in d..=n {
        let e = s - d;
        let f = one_minus_t.pow((s - 1) as u32);
        let coeff: Rational = (0..=e).map(|j| f.coeff(j) * base.coeff(e - j)).sum();
        counts[s] = coeff * &qm1 * int(binomial(n as i64, s as i64));
    }
    to_distribution(&rational_counts(&counts)?, profile)
}

/// Coefficients `a_0..a_r` with `W = Σ a_i M_{n,d+i}`, by forward
/// substitution on the triangular system at weights `d..d+r`.
pub fn mds_decomposition(
    w: &WeightDistribution,
    profile: &CodeProfile,
) -> Result<Vec<Rational>, ZetaError> {
    check_consistent(w, profile)?;
    let CodeProfile { n, d, q, .. } = *profile;
    let r = profile.r();
    if d + r > n {
        return Err(ZetaError::InconsistentProfile(format!(
            "d + r = {} exceeds n = {n}",
            d + r
        )));
    }
    let enums: Vec<Vec<BigInt>> = (0..=r)
        .map(|i| mds_enumerator(n, d + i, q))
        .collect::<Result<_, _>>()?;
    let mut a: Vec<Rational> = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let wt = d + i;
        let known: Rational = (0..i).map(|j| &a[j] * int(enums[j][wt].clone())).sum();
        let pivot = &enums[i][wt];
        if pivot.is_zero() {
            return Err(ZetaError::SingularSystem(wt));
        }
        a.push((int(w.count(wt)) - known) / int(pivot.clone()));
    }
    let total: Rational = a.iter().sum();
    if !total.is_one() {
        return Err(ZetaError::NormalizationFailure(total.to_string()));
    }
    // The remaining weights are overdetermined; they must match too.
    for wt in 0..=n {
        let v: Rational = a
            .iter()
            .zip(&enums)
            .map(|(ai, m)| ai * int(m[wt].clone()))
            .sum();
        if v != int(w.count(wt)) {
            return Err(ZetaError::InconsistentProfile(format!(
                "decomposition misses weight {wt}"
            )));
        }
    }
    Ok(a)
}

/// Full distribution from `W^(d)..W^(d+r-2)` via the kernels
/// `λ_w = Σ_{s=w}^{d+r-2} C(n-w, n-s) (x-y)^{n-s} y^s` and the explicit term
/// `Λ = M_{n,d+g} - Σ_{w=d+g}^{d+r-2} M_{n,d+g}^{(w)} λ_w`.
pub fn reconstruct_general(
    low: &[BigInt],
    profile: &CodeProfile,
) -> Result<WeightDistribution, ZetaError> {
    let CodeProfile { n, d, g, q, .. } = *profile;
    let r = profile.r();
    let expected = r.saturating_sub(1);
    if low.len() != expected {
        return Err(ZetaError::RangeError(format!(
            "expected {expected} low weights W^({d})..W^({}), got {}",
            d + expected,
            low.len()
        )));
    }
    let s = d + g;
    let top = d + expected; // exclusive end of the input range
    let lambda = |wt: usize| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n + 1];
        for sidx in wt..top {
            axpy(&mut v, &binomial((n - wt) as i64, (n - sidx) as i64), &kernel_term(n, sidx));
        }
        v
    };
    let mut total = mds_enumerator(n, s, q)?;
    for wt in s..top {
        let m = mds_weight(n, s, q, wt)?;
        axpy(&mut total, &-m, &lambda(wt));
    }
    for (i, wd) in low.iter().enumerate() {
        axpy(&mut total, wd, &lambda(d + i));
    }
    to_distribution(&total, profile)
}

/// Zeta data of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaProfile {
    pub profile: CodeProfile,
    #[serde(rename = "P")]
    pub p: RationalPoly,
    #[serde(rename = "D")]
    pub d: RationalPoly,
    /// `a_0..a_r`, the coefficients of `P` padded to length `r + 1`.
    #[serde(with = "crate::poly::serde_rational::vec")]
    pub a: Vec<Rational>,
    /// `c_0..c_{r-2}`, the coefficients of `D` (empty for MDS codes).
    #[serde(with = "crate::poly::serde_rational::vec")]
    pub c: Vec<Rational>,
    pub r: usize,
    pub mds: bool,
}

impl ZetaProfile {
    pub fn from_distribution(
        w: &WeightDistribution,
        profile: &CodeProfile,
    ) -> Result<Self, ZetaError> {
        let dpoly = dc_from_weights(w, profile)?;
        let p = zeta_from_dc(&dpoly, profile.g, profile.q)?;
        let r = profile.r();
        Ok(ZetaProfile {
            profile: profile.clone(),
            a: (0..=r).map(|i| p.coeff(i)).collect(),
            c: (0..r.saturating_sub(1)).map(|i| dpoly.coeff(i)).collect(),
            p,
            d: dpoly,
            r,
            mds: profile.g == 0,
        })
    }

    /// Checks the structural invariants: normalization, the defining
    /// identity, degree bounds, integrality and `0 < c_0 < 1`.
    pub fn validate(&self) -> Result<(), ZetaError> {
        let CodeProfile { n, d, g, q, .. } = self.profile;
        let r = self.r;
        if r != self.profile.r() {
            return Err(ZetaError::InconsistentProfile("r != g + g_dual".into()));
        }
        let at_one = self.p.eval(&Rational::one());
        if !at_one.is_one() {
            return Err(ZetaError::NormalizationFailure(at_one.to_string()));
        }
        if zeta_from_dc(&self.d, g, q)? != self.p {
            return Err(ZetaError::InconsistentProfile("P != (1-t)(1-qt)D + t^g".into()));
        }
        if self.p.degree().unwrap_or(0) > r {
            return Err(ZetaError::InconsistentProfile("deg P > r".into()));
        }
        if self.a != (0..=r).map(|i| self.p.coeff(i)).collect::<Vec<_>>()
            || self.c != (0..r.saturating_sub(1)).map(|i| self.d.coeff(i)).collect::<Vec<_>>()
        {
            return Err(ZetaError::InconsistentProfile("coefficient vectors disagree".into()));
        }
        if g == 0 {
            if !self.d.is_zero() {
                return Err(ZetaError::InconsistentProfile("MDS code with nonzero D".into()));
            }
            return Ok(());
        }
        if self.d.degree().unwrap_or(0) > r - 2 {
            return Err(ZetaError::InconsistentProfile("deg D > r - 2".into()));
        }
        for (i, c) in self.c.iter().enumerate() {
            let scaled = c * int(BigInt::from(q - 1) * binomial(n as i64, (d + i) as i64));
            if !scaled.is_integer() {
                return Err(ZetaError::NonIntegerWeight(d + i));
            }
        }
        let c0 = &self.c[0];
        if !(c0.is_positive() && c0 < &Rational::one()) {
            return Err(ZetaError::InconsistentProfile(format!("c_0 = {c0} outside (0, 1)")));
        }
        Ok(())
    }
}
