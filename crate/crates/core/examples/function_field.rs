//! From an elliptic curve over GF(2) to its L-polynomial, reduced
//! polynomial, divisor counts and class-number bounds; then a genus-2 example.

use codezeta::field::make_field;
use codezeta::funcfield::{
    b_relations_check, b_sequence, class_number_bounds, profile_from_lpoly,
    profile_from_point_counts, Weierstrass,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = make_field(2, 1, None)?;
    let curve = Weierstrass { a: [0, 0, 1, 0, 0] }; // y² + y = x³
    let n1 = curve.count_points(&f)?;
    let e = profile_from_point_counts(&[n1 as i128], 2)?;
    println!("y² + y = x³ over GF(2): N_1 = {n1}, L = {:?}, h = {}", e.l, e.h);
    println!("  D_F = {:?}, B_0..B_6 = {:?}", e.d_f, b_sequence(&e, 6)?);

    let p = profile_from_lpoly(&[1, 0, 4, 0, 4], 2)?;
    let h: Vec<String> = p.h_seq.iter().map(|x| x.to_string()).collect();
    println!("\nL = (1 + 2t²)²: g = {}, h = {}, A = {:?}", p.g, p.h, p.a);
    println!("  h_0..h_g = {}", h.join(", "));
    println!("  D_F = {:?}", p.d_f);
    println!("  B_0..B_8 = {:?}", b_sequence(&p, 8)?);
    let rel = b_relations_check(&p, 8)?;
    println!("  relations hold on {} terms: {}", rel.checked, rel.holds);
    println!("  class-number bounds: {}", class_number_bounds(&p));
    println!("\n{}", serde_json::to_string_pretty(&p)?);
    Ok(())
}
