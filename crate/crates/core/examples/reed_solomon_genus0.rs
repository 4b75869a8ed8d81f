//! Reed–Solomon codes are MDS: genus 0, reduced polynomial 0 and zeta
//! polynomial 1, matching the trivial L-polynomial of the projective line.

use codezeta::code::{weight_distribution_via_smaller, CodeProfile, DEFAULT_BUDGET};
use codezeta::field::field_of_size;
use codezeta::fixtures::reed_solomon_code;
use codezeta::funcfield::genus0_ag_identity;
use codezeta::zeta::{mds_enumerator, ZetaProfile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = 8;
    let field = field_of_size(q)?;
    for k in 1..=7 {
        let code = reed_solomon_code(&field, 8, k)?;
        let w = weight_distribution_via_smaller(&code, DEFAULT_BUDGET)?;
        let profile = CodeProfile::from_distribution(&w)?;
        let zeta = ZetaProfile::from_distribution(&w, &profile)?;
        let mds: Vec<String> = mds_enumerator(8, profile.d, q)?.iter().map(|x| x.to_string()).collect();
        println!(
            "[8,{k},{}] over GF(8): genus {}, P = {}, matches M_(8,{}) = [{}]: {}",
            profile.d,
            profile.g,
            zeta.p,
            profile.d,
            mds.join(", "),
            w.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>() == mds
        );
    }
    let mut all = true;
    for q in [4u64, 5, 7, 8] {
        for n in 1..=q as usize {
            for m in 0..n {
                all &= genus0_ag_identity(q, n, m)?;
            }
        }
    }
    println!("P = 1 = L for every evaluation code over GF(4), GF(5), GF(7), GF(8): {all}");
    Ok(())
}
