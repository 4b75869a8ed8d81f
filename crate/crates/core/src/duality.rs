//! Formal self-duality: the weight-level definition, the zeta and `D`
//! functional equations, the coefficient relations and the two
//! reconstruction formulas valid for `n = 2k`, `d = d⊥`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeProfile, WeightDistribution};
use crate::combin::{binomial, pow_int, sign};
use crate::poly::{int, Rational, RationalPoly};
use crate::zeta::{mds_enumerator, ZetaError, ZetaProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualityError {
    #[error("LengthMismatch: lengths {0} and {1} differ")]
    LengthMismatch(usize, usize),
    #[error("PreconditionViolation: {0}")]
    PreconditionViolation(String),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

/// `W_C = W_{C⊥}` componentwise.
pub fn check_fsd_definition(
    wc: &WeightDistribution,
    wdual: &WeightDistribution,
) -> Result<bool, DualityError> {
    if wc.n != wdual.n {
        return Err(DualityError::LengthMismatch(wc.n, wdual.n));
    }
    Ok(wc.counts == wdual.counts)
}

/// `P(t) = q^g t^{2g} P(1/(q t))`.
pub fn check_zeta_functional(p: &RationalPoly, q: u64, g: usize) -> bool {
    p.q_reciprocal(q, g as u32, 2 * g)
        .is_ok_and(|t| &t == p)
}

/// `D(t) = q^{g-1} t^{2g-2} D(1/(q t))`; for `g = 0` only `D = 0` passes.
pub fn check_d_functional(dpoly: &RationalPoly, q: u64, g: usize) -> bool {
    if g == 0 {
        return dpoly.is_zero();
    }
    dpoly
        .q_reciprocal(q, (g - 1) as u32, 2 * g - 2)
        .is_ok_and(|t| &t == dpoly)
}

/// `c_{g-1+i} = q^i c_{g-1-i}` for `1 ≤ i ≤ g-1`, with `deg D ≤ 2g - 2`.
pub fn check_coeff_relations(dpoly: &RationalPoly, q: u64, g: usize) -> bool {
    if g == 0 {
        return dpoly.is_zero();
    }
    if dpoly.degree().is_some_and(|deg| deg > 2 * g - 2) {
        return false;
    }
    (1..g).all(|i| {
        dpoly.coeff(g - 1 + i) == dpoly.coeff(g - 1 - i) * int(pow_int(q, i as u64))
    })
}

fn check_preconditions(profile: &CodeProfile) -> Result<usize, DualityError> {
    if profile.n != 2 * profile.k || profile.d != profile.d_dual {
        return Err(DualityError::PreconditionViolation(format!(
            "need n = 2k and d = d_dual, got n={}, k={}, d={}, d_dual={}",
            profile.n, profile.k, profile.d, profile.d_dual
        )));
    }
    Ok(profile.k)
}

/// Coefficient vector of `(x - y)^a y^b` with `a + b = n`.
fn term(n: usize, b: usize) -> Vec<Rational> {
    let a = n - b;
    (0..=n)
        .map(|w| {
            if w < b {
                Rational::zero()
            } else {
                int(binomial(a as i64, (w - b) as i64) * sign((w - b) as i64))
            }
        })
        .collect()
}

fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

fn finish(acc: Vec<Rational>, profile: &CodeProfile) -> Result<WeightDistribution, DualityError> {
    let mut counts = Vec::with_capacity(acc.len());
    for (w, c) in acc.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(ZetaError::NonIntegerWeight(w).into());
        }
        let c = c.to_integer();
        if c < BigInt::zero() {
            return Err(ZetaError::NegativeWeight(w).into());
        }
        counts.push(u128::try_from(c).map_err(|_| {
            ZetaError::RangeError(format!("count at weight {w} overflows"))
        })?);
    }
    let wd = WeightDistribution {
        n: profile.n,
        k: profile.k,
        q: profile.q,
        counts,
    };
    wd.validate()
        .map_err(|e| ZetaError::InconsistentProfile(e.to_string()))?;
    Ok(wd)
}

fn mds_half(k: usize, q: u64) -> Result<Vec<Rational>, DualityError> {
    Ok(mds_enumerator(2 * k, k + 1, q)?
        .into_iter()
        .map(int)
        .collect())
}

/// Distribution of a formally self-dual code from `c_0..c_{g-1}`:
/// `W = M_{2k,k+1} + Σ_j c_{g-1-j} w_j`.
pub fn fsd_reconstruct_from_half(
    c_low: &[Rational],
    profile: &CodeProfile,
) -> Result<WeightDistribution, DualityError> {
    let k = check_preconditions(profile)?;
    let (n, g, q) = (profile.n, profile.g, profile.q);
    if c_low.len() != g {
        return Err(DualityError::PreconditionViolation(format!(
            "expected {g} coefficients c_0..c_{{g-1}}, got {}",
            c_low.len()
        )));
    }
    let mut acc = mds_half(k, q)?;
    for j in 0..g {
        let c = &c_low[g - 1 - j];
        let scale = c * int(BigInt::from(q - 1) * binomial(n as i64, (k + j) as i64));
        if j == 0 {
            add_scaled(&mut acc, &scale, &term(n, k));
        } else {
            add_scaled(&mut acc, &scale, &term(n, k - j));
            add_scaled(&mut acc, &(&scale * int(pow_int(q, j as u64))), &term(n, k + j));
        }
    }
    finish(acc, profile)
}

/// Distribution of a formally self-dual code from `W^(d)..W^(k)`:
/// `W = M_{2k,k+1} + Σ_{w=d}^{k-1} W^(w) φ_w + W^(k) (x-y)^k y^k`.
pub fn fsd_reconstruct_from_low_weights(
    low: &[BigInt],
    profile: &CodeProfile,
) -> Result<WeightDistribution, DualityError> {
    if profile.n != 2 * profile.k {
        return Err(DualityError::PreconditionViolation(format!(
            "need n = 2k, got n={}, k={}",
            profile.n, profile.k
        )));
    }
    let (k, d, q, n) = (profile.k, profile.d, profile.q, profile.n);
    if d > k {
        return Err(DualityError::PreconditionViolation(format!(
            "empty weight range: d = {d} exceeds k = {k}"
        )));
    }
    if low.len() != k - d + 1 {
        return Err(DualityError::PreconditionViolation(format!(
            "expected {} weights W^({d})..W^({k}), got {}",
            k - d + 1,
            low.len()
        )));
    }
    let mut acc = mds_half(k, q)?;
    for w in d..k {
        let mut phi = vec![Rational::zero(); n + 1];
        for s in w..k {
            let b = int(binomial((n - w) as i64, (s - w) as i64));
            add_scaled(&mut phi, &b, &term(n, s));
            add_scaled(&mut phi, &(&b * int(pow_int(q, (k - s) as u64))), &term(n, n - s));
        }
        add_scaled(&mut phi, &int(binomial((n - w) as i64, k as i64)), &term(n, k));
        add_scaled(&mut acc, &int(low[w - d].clone()), &phi);
    }
    add_scaled(&mut acc, &int(low[k - d].clone()), &term(n, k));
    finish(acc, profile)
}

/// Each self-duality condition reported separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FsdReport {
    pub weight_equal: bool,
    pub zeta_fixed: bool,
    pub d_fixed: bool,
    pub coeff_relations: bool,
    pub reconstruction_from_half: bool,
    pub reconstruction_from_low_weights: bool,
    pub parameter_preconditions: bool,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_dual: usize,
    pub g: usize,
    pub g_dual: usize,
    pub q: u64,
}

impl FsdReport {
    pub fn all_true(&self) -> bool {
        self.weight_equal
            && self.zeta_fixed
            && self.d_fixed
            && self.coeff_relations
            && self.reconstruction_from_half
            && self.reconstruction_from_low_weights
            && self.parameter_preconditions
    }
}

/// Runs every condition on a code's distribution, its dual's distribution
/// and its zeta data.
pub fn fsd_report(
    w: &WeightDistribution,
    wdual: &WeightDistribution,
    zeta: &ZetaProfile,
) -> Result<FsdReport, DualityError> {
    let p = &zeta.profile;
    let weight_equal = check_fsd_definition(w, wdual)?;
    let parameter_preconditions = p.n == 2 * p.k && p.d == p.d_dual && p.g == p.g_dual;
    let (reconstruction_from_half, reconstruction_from_low_weights) = if parameter_preconditions {
        let half: Vec<Rational> = (0..p.g).map(|i| zeta.d.coeff(i)).collect();
        let from_half = fsd_reconstruct_from_half(&half, p).is_ok_and(|r| &r == w);
        let low: Vec<BigInt> = (p.d..=p.k).map(|i| BigInt::from(w.count(i))).collect();
        let from_low = fsd_reconstruct_from_low_weights(&low, p).is_ok_and(|r| &r == w);
        (from_half, from_low)
    } else {
        (false, false)
    };
    Ok(FsdReport {
        weight_equal,
        zeta_fixed: check_zeta_functional(&zeta.p, p.q, p.g),
        d_fixed: check_d_functional(&zeta.d, p.q, p.g),
        coeff_relations: check_coeff_relations(&zeta.d, p.q, p.g),
        reconstruction_from_half,
        reconstruction_from_low_weights,
        parameter_preconditions,
        n: p.n,
        k: p.k,
        d: p.d,
        d_dual: p.d_dual,
        g: p.g,
        g_dual: p.g_dual,
        q: p.q,
    })
}

/// `t^{r} q^{g} P(1/(q t))`, the zeta polynomial of the dual code.
pub fn dual_zeta(p: &RationalPoly, profile: &CodeProfile) -> Result<RationalPoly, DualityError> {
    Ok(p
        .q_reciprocal(profile.q, profile.g as u32, profile.r())
        .map_err(ZetaError::from)?)
}
