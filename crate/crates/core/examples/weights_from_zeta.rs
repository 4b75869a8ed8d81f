//! A weight distribution is determined by its zeta data: rebuild codes'
//! distributions from D, from P, and from the first r - 1 nonzero weights.

use codezeta::code::{weight_distribution, CodeProfile};
use codezeta::fixtures::simplex73;
use codezeta::poly::{rat, RationalPoly};
use codezeta::zeta::{mds_decomposition, reconstruct_general, weights_from_dc, weights_from_zeta_gf};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Hamming parameters from D = 1/5 alone.
    let hamming = CodeProfile::from_parameters(7, 4, 3, 4, 2)?;
    let w = weights_from_dc(&RationalPoly::constant(rat(1, 5)), &hamming)?;
    println!("D = 1/5 on [7,4,3] -> {:?}", w.counts);

    // The same distribution through the generating-function route.
    let p = RationalPoly::new(vec![rat(1, 5), rat(2, 5), rat(2, 5)]);
    println!("P = {p} -> {:?}", weights_from_zeta_gf(&p, &hamming)?.counts);

    // Simplex [7,3,4]: decompose into MDS enumerators, then rebuild from W_4.
    let simplex = weight_distribution(&simplex73().build()?)?;
    let profile = CodeProfile::from_distribution(&simplex)?;
    let a: Vec<String> = mds_decomposition(&simplex, &profile)?.iter().map(|x| x.to_string()).collect();
    println!("simplex = Σ a_i M_(7,{}+i) with a = ({})", profile.d, a.join(", "));
    let low = [BigInt::from(simplex.count(4))];
    println!("from W_4 = 7 -> {:?}", reconstruct_general(&low, &profile)?.counts);
    Ok(())
}
