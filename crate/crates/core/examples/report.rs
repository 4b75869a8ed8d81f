//! Full analysis reports for a batch of random codes, in parallel, with one
//! report printed as JSON.

use codezeta::cli::analyze_code;
use codezeta::code::DEFAULT_BUDGET;
use codezeta::field::field_of_size;
use codezeta::fixtures::random_code;
use rayon::prelude::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = field_of_size(3)?;
    let codes: Vec<_> = (0..24u64)
        .map(|seed| random_code(&field, 10, 5, seed).map(|c| c.description()))
        .collect::<Result<_, _>>()?;
    let reports: Vec<_> = codes.par_iter().map(|c| analyze_code(c, DEFAULT_BUDGET)).collect();

    println!("{:>4} {:>3} {:>3} {:>4} {:>6} {:>5}", "seed", "d", "g", "rha", "fsd", "ms");
    for (seed, r) in reports.iter().enumerate() {
        match r {
            Ok(r) => println!(
                "{seed:>4} {:>3} {:>3} {:>4} {:>6} {:>5.1}",
                r.zeta.profile.d, r.zeta.profile.g, r.rha.holds, r.fsd.weight_equal, r.timing_ms
            ),
            Err(e) => println!("{seed:>4} {}", e.to_json()),
        }
    }
    if let Some(Ok(r)) = reports.first() {
        r.validate()?;
        println!("{}", serde_json::to_string_pretty(&r.zeta)?);
    }
    Ok(())
}
