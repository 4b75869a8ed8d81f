mod common;

use codezeta::code::{weight_distribution, CodeProfile, WeightDistribution};
use codezeta::duality::{
    check_coeff_relations, check_d_functional, check_fsd_definition, check_zeta_functional,
    dual_zeta, fsd_reconstruct_from_half, fsd_reconstruct_from_low_weights, DualityError,
};
use codezeta::field::field_of_size;
use codezeta::fixtures::{ext_hamming84, golay24, hamming74, reed_solomon_code, simplex73};
use codezeta::poly::{int, rat, Rational, RationalPoly};
use codezeta::zeta::{
    dc_from_weights, dc_from_zeta, mds_decomposition, mds_enumerator, mds_weight, reconstruct_general,
    weights_from_dc, weights_from_zeta_gf, zeta_from_dc, ZetaError, ZetaProfile,
};
use common::*;
use num_bigint::BigInt;
use num_traits::Zero;

fn dist(desc: &codezeta::code::CodeDescription) -> (WeightDistribution, CodeProfile) {
    let w = weight_distribution(&build(desc)).unwrap();
    let p = CodeProfile::from_distribution(&w).unwrap();
    (w, p)
}

fn rs322() -> (WeightDistribution, CodeProfile) {
    let f = field_of_size(3).unwrap();
    let w = weight_distribution(&reed_solomon_code(&f, 3, 2).unwrap()).unwrap();
    let p = CodeProfile::from_distribution(&w).unwrap();
    (w, p)
}

#[test]
fn mds_weights_match_formula_and_enumeration() {
    assert_eq!(mds_weight(3, 2, 3, 2).unwrap(), BigInt::from(6));
    for (n, s, q) in [(7usize, 4usize, 2u64), (5, 3, 5), (8, 3, 8), (12, 5, 7)] {
        for w in 0..=n {
            let expected = mds_count(n, s, q, w);
            assert_eq!(mds_weight(n, s, q, w).unwrap(), if w == 0 { BigInt::zero() } else { expected.clone() });
            assert_eq!(mds_enumerator(n, s, q).unwrap()[w], expected);
        }
        assert_eq!(
            mds_weight(n, s, q, s).unwrap(),
            BigInt::from(binom(n as u64, s as u64)) * (q - 1)
        );
    }
    // No binary [7,4,4] MDS code exists; the formal count at w = 7 is negative.
    assert_eq!(mds_weight(7, 4, 2, 7).unwrap(), BigInt::from(-6));
    let (w, _) = rs322();
    assert_eq!(w.counts, vec![1, 0, 6, 2]);
    let m: Vec<u128> = mds_enumerator(3, 2, 3).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
    assert_eq!(m, w.counts);
}

#[test]
fn reduced_polynomial_examples() {
    let (w, p) = dist(&hamming74());
    let d = dc_from_weights(&w, &p).unwrap();
    assert_eq!(d, RationalPoly::constant(rat(7, 35)));
    assert_eq!(weights_from_dc(&d, &p).unwrap(), w);

    let (gw, gp) = dist(&golay24());
    let gd = dc_from_weights(&gw, &gp).unwrap();
    assert_eq!(gd.coeff(0), rat(759, 735471));
    assert_eq!(gd.degree(), Some(8));
    assert_eq!(weights_from_dc(&gd, &gp).unwrap(), gw);

    let (rw, rp) = rs322();
    assert!(dc_from_weights(&rw, &rp).unwrap().is_zero());
    assert_eq!(weights_from_dc(&RationalPoly::zero(), &rp).unwrap(), rw);
    assert_eq!(weights_from_zeta_gf(&RationalPoly::one(), &rp).unwrap(), rw);
}

#[test]
fn zeta_examples() {
    let p = zeta_from_dc(&RationalPoly::constant(rat(1, 5)), 1, 2).unwrap();
    assert_eq!(p, RationalPoly::new(vec![rat(1, 5), rat(2, 5), rat(2, 5)]));
    assert_eq!(zeta_from_dc(&RationalPoly::zero(), 0, 2).unwrap(), RationalPoly::one());
    let d = RationalPoly::from_ints(&[1, 3, 2]);
    let p2 = zeta_from_dc(&d, 2, 2).unwrap();
    assert_eq!(p2, p_from_d(d.coeffs(), 2, 2));
    assert_eq!(p2, RationalPoly::from_ints(&[1, 0, -4, 0, 4]));
    // Adding h t^g instead of t^g recovers (1 + 2t²)².
    let l = &(&RationalPoly::euler_factor(2) * &d) + &RationalPoly::monomial(int(9), 2);
    assert_eq!(l, RationalPoly::from_ints(&[1, 0, 4, 0, 4]));
    assert_eq!(dc_from_zeta(&p2, 2, 2).unwrap(), d);
    assert!(matches!(dc_from_zeta(&RationalPoly::from_ints(&[1, 1]), 1, 2), Err(ZetaError::InexactDivision)));
}

#[test]
fn decomposition_and_reconstruction() {
    let (w, p) = dist(&hamming74());
    let third = vec![rat(1, 5), rat(2, 5), rat(2, 5)];
    assert_eq!(mds_decomposition(&w, &p).unwrap(), third);
    let (ew, ep) = dist(&ext_hamming84());
    assert_eq!(mds_decomposition(&ew, &ep).unwrap(), third);
    let (rw, rp) = rs322();
    assert_eq!(mds_decomposition(&rw, &rp).unwrap(), vec![int(1)]);

    assert_eq!(reconstruct_general(&[BigInt::from(7)], &p).unwrap(), w);
    let (gw, gp) = dist(&golay24());
    let low: Vec<BigInt> = (8..=16).map(|i| BigInt::from(gw.count(i))).collect();
    assert_eq!(reconstruct_general(&low, &gp).unwrap(), gw);
    assert_eq!(reconstruct_general(&[], &rp).unwrap(), rw);
    assert!(reconstruct_general(&[BigInt::from(7), BigInt::from(7)], &p).is_err());
}

#[test]
fn zeta_profile_round_trip() {
    let (w, p) = dist(&golay24());
    let z = ZetaProfile::from_distribution(&w, &p).unwrap();
    z.validate().unwrap();
    let json = serde_json::to_string(&z).unwrap();
    assert!(json.contains("\"P\"") && json.contains("\"1/969\""));
    let back: ZetaProfile = serde_json::from_str(&json).unwrap();
    assert_eq!(back, z);
}

#[test]
fn functional_equations() {
    let (w, p) = dist(&hamming74());
    let (sw, _) = dist(&simplex73());
    let z = ZetaProfile::from_distribution(&w, &p).unwrap();
    assert!(check_zeta_functional(&z.p, 2, 1));
    // t is fixed by the genus-1 transform 2t² · 1/(2t) but not by the others.
    let t = RationalPoly::from_ints(&[0, 1]);
    assert!(check_zeta_functional(&t, 2, 1));
    assert!(!check_zeta_functional(&t, 2, 0) && !check_zeta_functional(&t, 2, 2));
    assert!(check_zeta_functional(&RationalPoly::one(), 2, 0));
    assert!(check_d_functional(&z.d, 2, 1));
    assert!(!check_fsd_definition(&w, &sw).unwrap());
    assert!(check_fsd_definition(&w, &w).unwrap());
    assert!(check_fsd_definition(&w, &dist(&golay24()).0).is_err());

    // Hamming and simplex share a zeta polynomial up to the duality map.
    let sp = CodeProfile::from_distribution(&sw).unwrap();
    let zs = ZetaProfile::from_distribution(&sw, &sp).unwrap();
    assert_eq!(dual_zeta(&z.p, &p).unwrap(), zs.p);
    assert_eq!(dual_from_functional_equation(&z.p, 2, 1, 1), zs.p);

    let (gw, gp) = dist(&golay24());
    let gz = ZetaProfile::from_distribution(&gw, &gp).unwrap();
    assert!(check_d_functional(&gz.d, 2, 5));
    assert!(check_coeff_relations(&gz.d, 2, 5));
    assert!(check_coeff_relations(&RationalPoly::constant(rat(1, 5)), 2, 1));
    assert!(check_coeff_relations(&RationalPoly::from_ints(&[1, 1, 2]), 2, 2));
    assert!(!check_coeff_relations(&RationalPoly::from_ints(&[1, 1, 3]), 2, 2));
}

#[test]
fn fsd_reconstructions() {
    let (ew, ep) = dist(&ext_hamming84());
    assert_eq!(fsd_reconstruct_from_half(&[rat(1, 5)], &ep).unwrap(), ew);
    assert_eq!(fsd_reconstruct_from_low_weights(&[BigInt::from(14)], &ep).unwrap(), ew);

    let (gw, gp) = dist(&golay24());
    let gz = ZetaProfile::from_distribution(&gw, &gp).unwrap();
    let half: Vec<Rational> = gz.c[..5].to_vec();
    assert_eq!(fsd_reconstruct_from_half(&half, &gp).unwrap(), gw);
    let low: Vec<BigInt> = [759, 0, 0, 0, 2576].into_iter().map(BigInt::from).collect();
    assert_eq!(fsd_reconstruct_from_low_weights(&low, &gp).unwrap(), gw);

    // c_0 = 0 leaves the MDS enumerator M_{8,5}, which has no valid code
    // behind it; the reconstruction reports that instead of returning it.
    assert!(fsd_reconstruct_from_half(&[Rational::zero()], &ep).is_err());

    let wide = CodeProfile::from_parameters(8, 4, 5, 5, 2).unwrap();
    assert!(matches!(
        fsd_reconstruct_from_low_weights(&[], &wide),
        Err(DualityError::PreconditionViolation(_))
    ));
    let (hw, hp) = dist(&hamming74());
    assert!(matches!(
        fsd_reconstruct_from_low_weights(&[BigInt::from(hw.count(3))], &hp),
        Err(DualityError::PreconditionViolation(_))
    ));
}
