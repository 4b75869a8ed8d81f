//! Independent oracles used by the integration tests.
#![allow(dead_code)]

use codezeta::code::{CodeDescription, LinearCode};
use codezeta::field::{make_field, FiniteField};
use codezeta::poly::{rat, Rational, RationalPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

pub fn binom_i(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binom(n as u64, k as u64) as i128
    }
}

/// Codeword weights by running over every message vector and multiplying
/// it into the stored generator rows with plain field operations.
pub fn brute_weights(code: &LinearCode) -> Vec<u128> {
    let f = code.field();
    let (n, k, q) = (code.n(), code.k(), f.q());
    let rows = code.generator();
    let mut counts = vec![0u128; n + 1];
    let total = (q as u64).pow(k as u32);
    for idx in 0..total {
        let mut msg = Vec::with_capacity(k);
        let mut x = idx;
        for _ in 0..k {
            msg.push(f.element((x % q as u64) as u32).unwrap());
            x /= q as u64;
        }
        let mut wt = 0;
        for j in 0..n {
            let mut acc = f.zero();
            for (i, m) in msg.iter().enumerate() {
                let g = f.element(rows[i][j]).unwrap();
                acc = f.add(acc, f.mul(*m, g).unwrap()).unwrap();
            }
            if !acc.is_zero() {
                wt += 1;
            }
        }
        counts[wt] += 1;
    }
    counts
}

/// Weights of the dual by testing every vector of GF(q)^n for
/// orthogonality against the generator rows.
pub fn brute_dual_weights(code: &LinearCode) -> Vec<u128> {
    let f = code.field();
    let (n, q) = (code.n(), f.q() as u64);
    let rows = code.generator();
    let mut counts = vec![0u128; n + 1];
    let mut v = vec![0u32; n];
    for idx in 0..q.pow(n as u32) {
        let mut x = idx;
        for c in v.iter_mut() {
            *c = (x % q) as u32;
            x /= q;
        }
        let orth = rows.iter().all(|r| {
            let mut acc = f.zero();
            for j in 0..n {
                let p = f.mul(f.element(r[j]).unwrap(), f.element(v[j]).unwrap()).unwrap();
                acc = f.add(acc, p).unwrap();
            }
            acc.is_zero()
        });
        if orth {
            counts[v.iter().filter(|&&c| c != 0).count()] += 1;
        }
    }
    counts
}

/// `M_{n,s}^{(w)} = C(n,w) Σ_{j=0}^{w-s} (-1)^j C(w,j) (q^{w-s+1-j} - 1)`
/// for `w ≥ s`, the distribution of an MDS code of minimum distance `s`.
pub fn mds_count(n: usize, s: usize, q: u64, w: usize) -> BigInt {
    if w == 0 {
        return BigInt::from(1);
    }
    if w < s {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for j in 0..=(w - s) {
        let term = BigInt::from(binom(w as u64, j as u64))
            * (BigInt::from(q).pow((w - s + 1 - j) as u32) - 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    BigInt::from(binom(n as u64, w as u64)) * sum
}

/// Naive coefficient-list product.
pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![rat(0, 1); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1 - t)(1 - q t) D + t^g` by direct expansion.
pub fn p_from_d(d: &[Rational], g: usize, q: u64) -> RationalPoly {
    let e = [rat(1, 1), rat(-(q as i64) - 1, 1), rat(q as i64, 1)];
    let mut c = poly_mul(&e, d);
    if c.len() <= g {
        c.resize(g + 1, rat(0, 1));
    }
    c[g] += rat(1, 1);
    RationalPoly::new(c)
}

/// `q^g t^{g+g'} P(1/(q t))` by coefficient reversal.
pub fn dual_from_functional_equation(p: &RationalPoly, q: u64, g: usize, g_dual: usize) -> RationalPoly {
    let r = g + g_dual;
    let mut c = vec![rat(0, 1); r + 1];
    for (i, a) in p.coeffs().iter().enumerate() {
        // a_i t^{-i} q^{-i} q^g t^r
        let scale = Rational::new(BigInt::from(q).pow(g as u32), BigInt::from(q).pow(i as u32));
        c[r - i] += a * scale;
    }
    RationalPoly::new(c)
}

/// Power-series coefficients of `num / ((1 - t)(1 - q t))` up to `t^n`.
pub fn divisor_series(num: &[i128], q: i128, n: usize) -> Vec<i128> {
    // 1/((1-t)(1-qt)) = Σ_i (q^{i+1}-1)/(q-1) t^i
    let geo = |i: usize| (q.pow(i as u32 + 1) - 1) / (q - 1);
    (0..=n)
        .map(|i| {
            num.iter()
                .enumerate()
                .filter(|(j, _)| *j <= i)
                .map(|(j, c)| c * geo(i - j))
                .sum()
        })
        .collect()
}

/// All roots of a real polynomial (ascending coefficients), by
/// Durand–Kerner iteration followed by Newton polishing.
pub fn durand_kerner(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let deval = |z: Complex64| {
        monic
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (i, &c)| acc * z + c * i as f64)
    };
    let radius = 1.0 + monic[..deg].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..deg).map(|i| seed.powu(i as u32) * (radius / 2.0)).collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..5 {
            let d = deval(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    z
}

pub fn to_f64(r: &Rational) -> f64 {
    r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap()
}

/// Classification of a polynomial by the moduli of its distinct roots:
/// `Some(true)` when all lie within `on` of `|t| = 1/√q`, `Some(false)` when
/// one lies further than `off`, `None` in between.
pub fn classify_by_roots(p: &RationalPoly, q: u64, on: f64, off: f64) -> Option<bool> {
    let sf = p.squarefree_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Some(true);
    }
    let c: Vec<f64> = sf.coeffs().iter().map(to_f64).collect();
    let roots = durand_kerner(&c);
    let worst = roots
        .iter()
        .map(|z| (z.norm() * (q as f64).sqrt() - 1.0).abs())
        .fold(0.0, f64::max);
    if worst < on {
        Some(true)
    } else if worst > off {
        Some(false)
    } else {
        None
    }
}

/// Affine solutions of `y² + a1 xy + a3 y = x³ + a2 x² + a4 x + a6` plus the
/// point at infinity, counted over a prime field with integer arithmetic.
pub fn count_prime_field_points(p: i64, a: [i64; 5]) -> i64 {
    let [a1, a2, a3, a4, a6] = a;
    let mut n = 1;
    for x in 0..p {
        for y in 0..p {
            let l = y * y + a1 * x * y + a3 * y;
            let r = x * x * x + a2 * x * x + a4 * x + a6;
            if (l - r).rem_euclid(p) == 0 {
                n += 1;
            }
        }
    }
    n
}

pub fn gf2() -> FiniteField {
    make_field(2, 1, None).unwrap()
}

pub fn build(desc: &CodeDescription) -> LinearCode {
    desc.build().unwrap()
}
