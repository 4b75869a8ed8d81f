//! Exact root-location decisions for zeta polynomials and the closed-form
//! criteria in degrees 2 and 4.

use codezeta::poly::{rat, RationalPoly};
use codezeta::rha::{log_diagnostic, rha_check, rha_deg2, rha_deg4};
use codezeta::zeta::zeta_from_dc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = 3;
    let samples = [
        ("on circle", RationalPoly::from_ints(&[1, 1, 3]).pow(2)),
        ("real roots", RationalPoly::from_ints(&[1, -5, 3])),
        ("not reciprocal", RationalPoly::from_ints(&[1, 2, 5])),
        ("odd degree", RationalPoly::from_ints(&[1, 1])),
    ];
    for (label, p) in &samples {
        let v = rha_check(p, q)?;
        println!("{label:>15}: {p}  -> {} via {:?}", v.holds, v.method);
        if let Some(c) = &v.exact_certificate {
            println!("{:>17}G(u) = {}, real roots {}/{}, G2 roots beyond 4q {}", "", c.g, c.real_roots, c.distinct_roots, c.roots_beyond_4q);
        }
    }

    println!("\ngenus 1, q = 2: c_0 -> RHA");
    for c0 in [rat(1, 10), rat(1, 5), rat(1, 2), rat(5, 1), rat(6, 1)] {
        println!("  {c0:>5}: {}", rha_deg2(&c0, 2)?);
    }

    println!("\ngenus 2, q = 5: (c_0, c_1) -> closed form / Sturm");
    for (c0, c1) in [(rat(1, 10), rat(1, 2)), (rat(1, 10), rat(1, 10)), (rat(1, 4), rat(1, 1)), (rat(1, 20), rat(2, 5))] {
        let d = RationalPoly::new(vec![c0.clone(), c1.clone(), &c0 * rat(5, 1)]);
        let p = zeta_from_dc(&d, 2, 5)?;
        println!("  ({c0}, {c1}): {} / {}", rha_deg4(&c0, &c1, 5)?, rha_check(&p, 5)?.holds);
    }

    let hamming = RationalPoly::new(vec![rat(1, 5), rat(2, 5), rat(2, 5)]);
    let diag = log_diagnostic(&hamming, 2, 12)?;
    let s: Vec<String> = diag.s.iter().map(|x| x.to_string()).collect();
    println!("\nlog coefficients of the Hamming zeta polynomial: {}", s.join(", "));
    println!("max |S_v| 2^(-v/2) = {:.4}", diag.max_normalized);
    Ok(())
}
