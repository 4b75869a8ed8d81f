//! Self-duality checks and reconstructions on the extended Golay code.

use codezeta::code::{macwilliams, weight_distribution, CodeProfile};
use codezeta::duality::{fsd_reconstruct_from_half, fsd_reconstruct_from_low_weights, fsd_report};
use codezeta::fixtures::golay24;
use codezeta::poly::Rational;
use codezeta::rha::{field_bound, rha_check};
use codezeta::zeta::ZetaProfile;
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = golay24().build()?;
    let w = weight_distribution(&code)?;
    let profile = CodeProfile::from_distribution(&w)?;
    let zeta = ZetaProfile::from_distribution(&w, &profile)?;
    println!("[24,12,8] genus {}, D(t) has degree {:?}", profile.g, zeta.d.degree());
    for (i, c) in zeta.c.iter().enumerate() {
        println!("  c_{i} = {c}");
    }

    let report = fsd_report(&w, &macwilliams(&w)?, &zeta)?;
    println!("{report:#?}");

    let half: Vec<Rational> = zeta.c[..profile.g].to_vec();
    let from_half = fsd_reconstruct_from_half(&half, &profile)?;
    let low: Vec<BigInt> = (profile.d..=profile.k).map(|i| BigInt::from(w.count(i))).collect();
    let from_low = fsd_reconstruct_from_low_weights(&low, &profile)?;
    println!("rebuilt from c_0..c_4:     {}", from_half == w);
    println!("rebuilt from W_8..W_12:    {}", from_low == w);

    let rha = rha_check(&zeta.p, 2)?;
    let bound = field_bound(profile.k, profile.d, profile.g, w.count(profile.d), 2)?;
    println!("RHA {}, field-size bound {} (nu = {})", rha.holds, bound.bound_holds, bound.nu);
    Ok(())
}
