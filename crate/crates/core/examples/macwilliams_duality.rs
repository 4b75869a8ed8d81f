//! MacWilliams transform versus an enumerated dual, and the matching
//! functional equation on zeta polynomials, for random codes over GF(4).

use codezeta::code::{dual_code, macwilliams, weight_distribution, CodeProfile};
use codezeta::duality::dual_zeta;
use codezeta::field::field_of_size;
use codezeta::fixtures::random_code;
use codezeta::zeta::ZetaProfile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = field_of_size(4)?;
    for seed in 0..6 {
        let code = random_code(&field, 8, 3, seed)?;
        let w = weight_distribution(&code)?;
        if w.min_distance() == Some(1) {
            println!("seed {seed}: d = 1, dual has a zero coordinate; skipped");
            continue;
        }
        let transformed = macwilliams(&w)?;
        let enumerated = weight_distribution(&dual_code(&code)?)?;

        let profile = CodeProfile::from_distribution(&w)?;
        let p = ZetaProfile::from_distribution(&w, &profile)?.p;
        let dprofile = CodeProfile::from_distribution(&enumerated)?;
        let pd = ZetaProfile::from_distribution(&enumerated, &dprofile)?.p;
        println!(
            "seed {seed}: [8,3,{}] dual [8,5,{}]  MacWilliams ok: {}  functional equation ok: {}",
            profile.d,
            dprofile.d,
            transformed == enumerated,
            dual_zeta(&p, &profile)? == pd
        );
    }
    Ok(())
}
