//! Linear codes over GF(q): construction, exhaustive weight enumeration,
//! duals and the MacWilliams transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combin::{binomial, pow_int};
use crate::field::{field_from_spec, FieldElement, FieldError, FieldSpec, FiniteField};

/// Default cap on the number of enumerated codewords.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("EmptyMatrix: generator has no rows or no columns")]
    EmptyMatrix,
    #[error("RaggedMatrix: row {row} has length {len}, expected {expected}")]
    RaggedMatrix { row: usize, len: usize, expected: usize },
    #[error("ZeroColumn: coordinate {0} vanishes on the whole code")]
    ZeroColumn(usize),
    #[error("BudgetExceeded: {size} codewords exceed the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("TrivialDual: the dual of the full space is the zero code")]
    TrivialDual,
    #[error("NonIntegerResult: MacWilliams transform produced a non-integer count at weight {0}")]
    NonIntegerResult(usize),
    #[error("NegativeResult: transform produced a negative count at weight {0}")]
    NegativeResult(usize),
    #[error("DivisibilityViolation: {0}")]
    DivisibilityViolation(String),
    #[error("InvalidDistribution: {0}")]
    InvalidDistribution(String),
    #[error("ConstructionFailure: {0}")]
    ConstructionFailure(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Counts of codewords per Hamming weight, `counts[w]` for `0 ≤ w ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn new(n: usize, k: usize, q: u64, counts: Vec<u128>) -> Result<Self, CodeError> {
        let w = WeightDistribution { n, k, q, counts };
        w.validate()?;
        Ok(w)
    }

    /// Checks the structural invariants: length, `W_0 = 1`, total `q^k`,
    /// and divisibility by `q - 1` away from weight zero.
    pub fn validate(&self) -> Result<(), CodeError> {
        if self.counts.len() != self.n + 1 {
            return Err(CodeError::InvalidDistribution(format!(
                "expected {} counts, got {}",
                self.n + 1,
                self.counts.len()
            )));
        }
        if self.counts[0] != 1 {
            return Err(CodeError::InvalidDistribution("W_0 must be 1".into()));
        }
        let total: BigInt = self.counts.iter().map(|&c| BigInt::from(c)).sum();
        if total != pow_int(self.q, self.k as u64) {
            return Err(CodeError::InvalidDistribution(format!(
                "counts sum to {total}, expected {}^{}",
                self.q, self.k
            )));
        }
        let unit = (self.q - 1) as u128;
        if let Some(w) = (1..=self.n).find(|&w| !self.counts[w].is_multiple_of(unit)) {
            return Err(CodeError::InvalidDistribution(format!(
                "W_{w} = {} is not divisible by q - 1",
                self.counts[w]
            )));
        }
        Ok(())
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        (1..=self.n).find(|&w| self.counts[w] > 0)
    }

    pub fn count(&self, w: usize) -> u128 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().map(|&c| BigInt::from(c)).sum()
    }
}

/// Parameters of a code and of its dual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeProfile {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Genus `n + 1 - k - d`.
    pub g: usize,
    pub k_dual: usize,
    /// Minimum distance of the dual; `n + 1` when the dual is the zero code.
    pub d_dual: usize,
    /// Genus of the dual, `k + 1 - d_dual`.
    pub g_dual: usize,
    pub q: u64,
}

impl CodeProfile {
    /// Derives the profile from a weight distribution, using the MacWilliams
    /// transform for the dual parameters.
    pub fn from_distribution(w: &WeightDistribution) -> Result<Self, CodeError> {
        let d = w
            .min_distance()
            .ok_or_else(|| CodeError::InvalidDistribution("no nonzero codewords".into()))?;
        let d_dual = if w.k == w.n {
            w.n + 1
        } else {
            macwilliams(w)?.min_distance().unwrap_or(w.n + 1)
        };
        Self::from_parameters(w.n, w.k, d, d_dual, w.q)
    }

    pub fn from_parameters(
        n: usize,
        k: usize,
        d: usize,
        d_dual: usize,
        q: u64,
    ) -> Result<Self, CodeError> {
        if k == 0 || k > n || d == 0 || d > n || d_dual == 0 {
            return Err(CodeError::InvalidDistribution(format!(
                "invalid parameters [n={n}, k={k}, d={d}], d_dual = {d_dual}"
            )));
        }
        if d + k > n + 1 || d_dual > k + 1 {
            return Err(CodeError::InvalidDistribution(format!(
                "Singleton bound violated by [n={n}, k={k}, d={d}], d_dual = {d_dual}"
            )));
        }
        Ok(CodeProfile {
            n,
            k,
            d,
            g: n + 1 - k - d,
            k_dual: n - k,
            d_dual,
            g_dual: k + 1 - d_dual,
            q,
        })
    }

    /// `r = g + g_dual`, the degree bound of the zeta polynomial.
    pub fn r(&self) -> usize {
        self.g + self.g_dual
    }

    pub fn is_mds(&self) -> bool {
        self.g == 0
    }

    /// Profile of the dual code.
    pub fn dual(&self) -> CodeProfile {
        CodeProfile {
            n: self.n,
            k: self.k_dual,
            d: self.d_dual,
            g: self.g_dual,
            k_dual: self.k,
            d_dual: self.d,
            g_dual: self.g,
            q: self.q,
        }
    }
}

/// A matrix entry in code JSON: an element index, or a coefficient vector
/// over GF(p) for extension fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Index(u32),
    Coeffs(Vec<u32>),
}

/// Code JSON: `{"field": {...}, "rows": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescription {
    pub field: FieldSpec,
    pub rows: Vec<Vec<Entry>>,
}

impl CodeDescription {
    pub fn build(&self) -> Result<LinearCode, CodeError> {
        let field = field_from_spec(&self.field)?;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::Index(v) => field.element(*v),
                        Entry::Coeffs(c) => field.from_coeffs(c),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        build_code(&field, &rows)
    }

    /// Describes a generator given as element indices.
    pub fn from_indices(field: &FiniteField, rows: &[Vec<u32>]) -> Self {
        let entry = |v: u32| {
            if field.m() == 1 {
                Entry::Index(v)
            } else {
                Entry::Coeffs(field.coeffs(field.element(v).expect("valid index")))
            }
        };
        CodeDescription {
            field: field.spec().clone(),
            rows: rows
                .iter()
                .map(|r| r.iter().map(|&v| entry(v)).collect())
                .collect(),
        }
    }
}

/// A linear code given by a generator in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FiniteField,
    n: usize,
    /// k × n, reduced row echelon form.
    generator: Vec<Vec<u32>>,
    /// Pivot column of each row; these columns carry an identity block.
    pivots: Vec<usize>,
    rank_deficient_input: bool,
}

/// Row-reduces in place; returns the pivot columns. Zero rows are dropped.
fn rref(field: &FiniteField, rows: &mut Vec<Vec<u32>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv_idx(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul_idx(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub_idx(*x, field.mul_idx(f, y));
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Builds a code from generator rows. Redundant rows are dropped (and
/// flagged); a coordinate that is zero on every row is rejected.
pub fn build_code(field: &FiniteField, rows: &[Vec<FieldElement>]) -> Result<LinearCode, CodeError> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(CodeError::EmptyMatrix);
    }
    let n = rows[0].len();
    let mut idx = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CodeError::RaggedMatrix {
                row: i,
                len: row.len(),
                expected: n,
            });
        }
        let mut r = Vec::with_capacity(n);
        for &e in row {
            // Round-trips through the checked API to reject foreign elements.
            r.push(field.add(e, field.zero())?.value());
        }
        idx.push(r);
    }
    LinearCode::from_index_rows(field, idx)
}

impl LinearCode {
    /// Builds a code from rows of element indices.
    pub fn from_index_rows(field: &FiniteField, mut rows: Vec<Vec<u32>>) -> Result<Self, CodeError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(CodeError::EmptyMatrix);
        }
        let n = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CodeError::RaggedMatrix {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= field.q()) {
                return Err(FieldError::InvalidElement(format!("index {bad}")).into());
            }
        }
        if let Some(col) = (0..n).find(|&c| rows.iter().all(|r| r[c] == 0)) {
            return Err(CodeError::ZeroColumn(col));
        }
        let input_rows = rows.len();
        let pivots = rref(field, &mut rows, n);
        Ok(LinearCode {
            field: field.clone(),
            n,
            rank_deficient_input: rows.len() < input_rows,
            generator: rows,
            pivots,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    /// Generator rows (reduced row echelon form) as element indices.
    pub fn generator(&self) -> &[Vec<u32>] {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// True when the input rows were linearly dependent and got reduced.
    pub fn rank_deficient_input(&self) -> bool {
        self.rank_deficient_input
    }

    pub fn size(&self) -> u128 {
        (self.q() as u128).saturating_pow(self.k() as u32)
    }

    pub fn description(&self) -> CodeDescription {
        CodeDescription::from_indices(&self.field, &self.generator)
    }

    /// Rows spanning the dual code (a parity-check matrix).
    pub fn parity_check_rows(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u32; self.n];
                v[fc] = 1;
                for (row, &pc) in self.generator.iter().zip(&self.pivots) {
                    v[pc] = f.neg_idx(row[fc]);
                }
                v
            })
            .collect()
    }

    /// Whether a vector (element indices) lies in the code.
    pub fn contains(&self, word: &[u32]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let f = &self.field;
        self.parity_check_rows().iter().all(|h| {
            h.iter()
                .zip(word)
                .fold(0u32, |acc, (&a, &b)| f.add_idx(acc, f.mul_idx(a, b)))
                == 0
        })
    }

    /// Visits every codeword once. Fails if `q^k` exceeds `budget`.
    pub fn for_each_codeword(
        &self,
        budget: u128,
        mut visit: impl FnMut(&[u32]),
    ) -> Result<(), CodeError> {
        self.check_budget(budget)?;
        let f = &self.field;
        let q = f.q() as usize;
        let k = self.k();
        let n = self.n;
        // scaled[i][c] = c · row_i
        let scaled: Vec<Vec<Vec<u32>>> = self
            .generator
            .iter()
            .map(|row| {
                (0..q as u32)
                    .map(|c| row.iter().map(|&x| f.mul_idx(c, x)).collect())
                    .collect()
            })
            .collect();
        let mut digits = vec![0usize; k];
        let mut word = vec![0u32; n];
        visit(&word);
        loop {
            // Mixed-radix increment with incremental word update.
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                let old = digits[i];
                let new = if old + 1 == q { 0 } else { old + 1 };
                digits[i] = new;
                let (o, nw) = (&scaled[i][old], &scaled[i][new]);
                for j in 0..n {
                    word[j] = f.add_idx(f.sub_idx(word[j], o[j]), nw[j]);
                }
                if new != 0 {
                    break;
                }
                i += 1;
            }
            visit(&word);
        }
    }

    fn check_budget(&self, budget: u128) -> Result<(), CodeError> {
        let size = self.size();
        if size > budget {
            return Err(CodeError::BudgetExceeded { size, budget });
        }
        Ok(())
    }

    fn binary_masks(&self) -> Option<Vec<u64>> {
        if self.field.q() != 2 || self.n > 64 {
            return None;
        }
        Some(
            self.generator
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .fold(0u64, |m, (j, &b)| if b == 1 { m | (1 << j) } else { m })
                })
                .collect(),
        )
    }

    /// Exhaustive weight distribution within `budget` codewords.
    pub fn weight_distribution_with_budget(
        &self,
        budget: u128,
    ) -> Result<WeightDistribution, CodeError> {
        self.check_budget(budget)?;
        let mut counts = vec![0u128; self.n + 1];
        if let Some(masks) = self.binary_masks() {
            // Gray-code walk: each step adds exactly one generator row.
            let mut word = 0u64;
            counts[0] += 1;
            for step in 1u64..(1u64 << masks.len()) {
                word ^= masks[step.trailing_zeros() as usize];
                counts[word.count_ones() as usize] += 1;
            }
        } else {
            self.for_each_codeword(budget, |w| {
                counts[w.iter().filter(|&&x| x != 0).count()] += 1;
            })?;
        }
        Ok(WeightDistribution {
            n: self.n,
            k: self.k(),
            q: self.q(),
            counts,
        })
    }
}

/// Exhaustive weight distribution with the default budget of 2^20 codewords.
pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution, CodeError> {
    code.weight_distribution_with_budget(DEFAULT_BUDGET)
}

/// Enumerates whichever of the code and its dual is smaller, applying the
/// MacWilliams transform when the dual was enumerated.
pub fn weight_distribution_via_smaller(
    code: &LinearCode,
    budget: u128,
) -> Result<WeightDistribution, CodeError> {
    let (n, k) = (code.n(), code.k());
    if k == n {
        // Full space: C(n, w) (q - 1)^w words of weight w.
        let counts = (0..=n)
            .map(|w| {
                (binomial(n as i64, w as i64) * pow_int(code.q() - 1, w as u64))
                    .to_u128()
                    .ok_or_else(|| CodeError::InvalidDistribution("count overflow".into()))
            })
            .collect::<Result<_, _>>()?;
        return Ok(WeightDistribution { n, k, q: code.q(), counts });
    }
    if k * 2 <= n {
        return code.weight_distribution_with_budget(budget);
    }
    let f = &code.field;
    let dual = LinearCode {
        field: f.clone(),
        n: code.n,
        generator: Vec::new(),
        pivots: Vec::new(),
        rank_deficient_input: false,
    };
    // The dual may vanish on a coordinate (weight-one words in the code), so
    // it is assembled directly rather than through the validating builder.
    let mut rows = code.parity_check_rows();
    let pivots = rref(f, &mut rows, code.n);
    let dual = LinearCode {
        generator: rows,
        pivots,
        ..dual
    };
    let wd = dual.weight_distribution_with_budget(budget)?;
    macwilliams(&wd)
}

/// The dual code, generated by the null space of the generator.
pub fn dual_code(code: &LinearCode) -> Result<LinearCode, CodeError> {
    if code.k() == code.n() {
        return Err(CodeError::TrivialDual);
    }
    LinearCode::from_index_rows(&code.field, code.parity_check_rows())
}

/// Minimum distance by exhaustive enumeration.
pub fn min_distance(code: &LinearCode) -> Result<usize, CodeError> {
    let w = weight_distribution(code)?;
    w.min_distance()
        .ok_or_else(|| CodeError::InvalidDistribution("zero code".into()))
}

/// Krawtchouk polynomial `K_j(i)` for length n over GF(q).
pub fn krawtchouk(n: usize, q: u64, j: usize, i: usize) -> BigInt {
    let (n, j, i) = (n as i64, j as i64, i as i64);
    let qm1 = BigInt::from(q - 1);
    (0..=j)
        .map(|s| {
            let term = binomial(i, s) * binomial(n - i, j - s) * num_traits::pow(qm1.clone(), (j - s) as usize);
            if s % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Weight distribution of the dual: `W⊥(x, y) = q^{-k} W(x + (q-1)y, x - y)`.
pub fn macwilliams(w: &WeightDistribution) -> Result<WeightDistribution, CodeError> {
    let n = w.n;
    let scale = pow_int(w.q, w.k as u64);
    let mut counts = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let s: BigInt = (0..=n)
            .filter(|&i| w.counts[i] != 0)
            .map(|i| BigInt::from(w.counts[i]) * krawtchouk(n, w.q, j, i))
            .sum();
        let (quot, rem) = s.div_rem(&scale);
        if !rem.is_zero() {
            return Err(CodeError::NonIntegerResult(j));
        }
        if quot.is_negative() {
            return Err(CodeError::NegativeResult(j));
        }
        counts.push(
            quot.to_u128()
                .ok_or_else(|| CodeError::InvalidDistribution("count overflow".into()))?,
        );
    }
    Ok(WeightDistribution {
        n,
        k: n - w.k,
        q: w.q,
        counts,
    })
}

/// `ν = W_d / (q - 1)`, the number of d-subsets of coordinates supporting a
/// minimum-weight word.
pub fn support_count(w: &WeightDistribution) -> Result<u128, CodeError> {
    let d = w
        .min_distance()
        .ok_or_else(|| CodeError::InvalidDistribution("zero code".into()))?;
    let unit = (w.q - 1) as u128;
    let wd = w.counts[d];
    if !wd.is_multiple_of(unit) {
        return Err(CodeError::DivisibilityViolation(format!(
            "W_{d} = {wd} is not divisible by q - 1 = {unit}"
        )));
    }
    Ok(wd / unit)
}

/// Full profile of a code: enumerates the code and derives the dual
/// parameters through the MacWilliams transform.
pub fn profile(code: &LinearCode) -> Result<(WeightDistribution, CodeProfile), CodeError> {
    let w = weight_distribution(code)?;
    let p = CodeProfile::from_distribution(&w)?;
    Ok((w, p))
}
