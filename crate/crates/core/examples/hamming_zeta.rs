//! Zeta polynomial of the binary Hamming [7,4,3] code, end to end.

use codezeta::code::{dual_code, macwilliams, weight_distribution, CodeProfile};
use codezeta::fixtures::hamming74;
use codezeta::rha::rha_check;
use codezeta::zeta::{dc_from_weights, weights_from_dc, zeta_from_dc};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = hamming74().build()?;
    let w = weight_distribution(&code)?;
    println!("weights      {:?}", w.counts);

    let profile = CodeProfile::from_distribution(&w)?;
    println!("parameters   [n={}, k={}, d={}]  genus {}  dual genus {}", profile.n, profile.k, profile.d, profile.g, profile.g_dual);

    let d = dc_from_weights(&w, &profile)?;
    let p = zeta_from_dc(&d, profile.g, profile.q)?;
    println!("D(t)         {d}");
    println!("P(t)         {p}");
    assert_eq!(weights_from_dc(&d, &profile)?, w);

    let verdict = rha_check(&p, profile.q)?;
    println!("RHA          {} ({:?})", verdict.holds, verdict.method);
    for r in &verdict.root_diagnostics {
        println!("  root {:+.6} {:+.6}i   |t|√q - 1 = {:.1e}", r.re, r.im, r.residual);
    }

    let dual = macwilliams(&w)?;
    let enumerated = weight_distribution(&dual_code(&code)?)?;
    println!("dual         {:?} (MacWilliams), {:?} (enumerated)", dual.counts, enumerated.counts);
    Ok(())
}
