//! Built-in generator matrices and seeded random codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{CodeDescription, CodeError, LinearCode};
use crate::field::{make_field, FiniteField};

/// Names accepted by [`by_name`].
pub const FIXTURE_NAMES: [&str; 6] = ["hamming74", "ext_hamming84", "golay24", "simplex73", "rs", "full"];

fn binary(rows: Vec<Vec<u32>>) -> CodeDescription {
    let f = make_field(2, 1, None).expect("GF(2)");
    CodeDescription::from_indices(&f, &rows)
}

fn hamming_rows() -> Vec<Vec<u32>> {
    vec![
        vec![1, 0, 0, 0, 1, 1, 0],
        vec![0, 1, 0, 0, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1, 1],
        vec![0, 0, 0, 1, 1, 0, 1],
    ]
}

fn with_parity(rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    rows.into_iter()
        .map(|mut r| {
            let parity = r.iter().sum::<u32>() % 2;
            r.push(parity);
            r
        })
        .collect()
}

/// Binary Hamming [7,4,3] code in systematic form.
pub fn hamming74() -> CodeDescription {
    binary(hamming_rows())
}

/// Extended binary Hamming [8,4,4] code (self-dual).
pub fn ext_hamming84() -> CodeDescription {
    binary(with_parity(hamming_rows()))
}

/// Binary simplex [7,3,4] code: columns are the nonzero vectors of GF(2)^3.
pub fn simplex73() -> CodeDescription {
    let rows = (0..3)
        .map(|bit| (1u32..8).map(|c| (c >> bit) & 1).collect())
        .collect();
    binary(rows)
}

/// Extended binary Golay [24,12,8] code, from the cyclic [23,12] code with
/// generator `1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11`.
pub fn golay24() -> CodeDescription {
    let g = [1u32, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];
    let rows = (0..12)
        .map(|shift| {
            let mut r = vec![0u32; 23];
            r[shift..shift + 12].copy_from_slice(&g);
            r
        })
        .collect();
    binary(with_parity(rows))
}

/// Full space GF(q)^n.
pub fn full(field: &FiniteField, n: usize) -> Result<LinearCode, CodeError> {
    let rows = (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect();
    LinearCode::from_index_rows(field, rows)
}

/// Reed–Solomon code of dimension k: evaluations of polynomials of degree
/// below k at the first n field elements.
pub fn reed_solomon_code(field: &FiniteField, n: usize, k: usize) -> Result<LinearCode, CodeError> {
    if n > field.q() as usize {
        return Err(CodeError::ConstructionFailure(format!(
            "length {n} exceeds the {} points of GF({})",
            field.q(),
            field.q()
        )));
    }
    if k == 0 || k > n {
        return Err(CodeError::ConstructionFailure(format!(
            "dimension {k} outside 1..={n}"
        )));
    }
    let rows = (0..k as u64)
        .map(|i| {
            (0..n as u32)
                .map(|x| {
                    let e = field.element(x).expect("point in field");
                    field.pow(e, i).expect("same field").value()
                })
                .collect()
        })
        .collect();
    LinearCode::from_index_rows(field, rows)
}

/// Seeded uniformly random generator of full rank k with no zero column.
pub fn random_code(field: &FiniteField, n: usize, k: usize, seed: u64) -> Result<LinearCode, CodeError> {
    if k == 0 || k > n {
        return Err(CodeError::ConstructionFailure(format!(
            "dimension {k} outside 1..={n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.q();
    for _ in 0..1000 {
        // Columns drawn uniformly from the nonzero vectors of GF(q)^k.
        let mut rows = vec![vec![0u32; n]; k];
        for j in 0..n {
            loop {
                for row in rows.iter_mut() {
                    row[j] = rng.gen_range(0..q);
                }
                if rows.iter().any(|r| r[j] != 0) {
                    break;
                }
            }
        }
        match LinearCode::from_index_rows(field, rows) {
            Ok(c) if c.k() == k => return Ok(c),
            Ok(_) | Err(CodeError::ZeroColumn(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(CodeError::ConstructionFailure(format!(
        "no full-rank [{n},{k}] generator found for seed {seed}"
    )))
}

/// Looks up a fixture by name; `rs` and `full` take their parameters from
/// `q`, `n`, `k`.
pub fn by_name(
    name: &str,
    q: Option<u64>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<CodeDescription, CodeError> {
    let param = |v: Option<usize>, what: &str| {
        v.ok_or_else(|| CodeError::ConstructionFailure(format!("fixture {name} needs --{what}")))
    };
    let field = || -> Result<FiniteField, CodeError> {
        let q = q.ok_or_else(|| CodeError::ConstructionFailure(format!("fixture {name} needs --q")))?;
        Ok(crate::field::field_of_size(q)?)
    };
    match name {
        "hamming74" => Ok(hamming74()),
        "ext_hamming84" => Ok(ext_hamming84()),
        "golay24" => Ok(golay24()),
        "simplex73" => Ok(simplex73()),
        "rs" => Ok(reed_solomon_code(&field()?, param(n, "n")?, param(k, "k")?)?.description()),
        "full" => Ok(full(&field()?, param(n, "n")?)?.description()),
        other => Err(CodeError::ConstructionFailure(format!(
            "unknown fixture {other:?}; expected one of {}",
            FIXTURE_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{min_distance, weight_distribution};

    #[test]
    fn named_fixtures_have_expected_parameters() {
        let cases = [
            (hamming74(), 7, 4, 3),
            (ext_hamming84(), 8, 4, 4),
            (simplex73(), 7, 3, 4),
            (golay24(), 24, 12, 8),
        ];
        for (desc, n, k, d) in cases {
            let c = desc.build().unwrap();
            assert_eq!((c.n(), c.k(), min_distance(&c).unwrap()), (n, k, d));
        }
    }

    #[test]
    fn golay_distribution() {
        let w = weight_distribution(&golay24().build().unwrap()).unwrap();
        let mut expected = vec![0u128; 25];
        for (wt, c) in [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)] {
            expected[wt] = c;
        }
        assert_eq!(w.counts, expected);
    }

    #[test]
    fn rs_is_mds() {
        let f = make_field(5, 1, None).unwrap();
        let c = reed_solomon_code(&f, 5, 3).unwrap();
        assert_eq!(min_distance(&c).unwrap(), 3);
        let f4 = make_field(2, 2, None).unwrap();
        let c = reed_solomon_code(&f4, 4, 2).unwrap();
        assert_eq!(min_distance(&c).unwrap(), 3);
        assert!(reed_solomon_code(&make_field(2, 1, None).unwrap(), 3, 1).is_err());
    }

    #[test]
    fn random_code_is_reproducible() {
        let f = make_field(2, 1, None).unwrap();
        let a = random_code(&f, 10, 4, 42).unwrap();
        let b = random_code(&f, 10, 4, 42).unwrap();
        assert_eq!(a.generator(), b.generator());
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(random_code(&f3, 8, 3, 7).unwrap().k(), 3);
        assert!(random_code(&f, 4, 5, 1).is_err());
    }

    #[test]
    fn unknown_fixture_rejected() {
        assert!(by_name("nope", None, None, None).is_err());
        assert!(by_name("rs", Some(5), Some(5), Some(3)).is_ok());
    }
}
