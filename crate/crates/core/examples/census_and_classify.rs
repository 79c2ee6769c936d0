//! The 2^n construction points, and what each even-weight point of PG(5,2)
//! means for the pair.
//!
//!     cargo run --example census_and_classify

use mobius_pauli::fflinalg::{FpVector, Modulus};
use mobius_pauli::moebius::{classify_gf2_point, point_census};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, p) in [(3, 2), (5, 2), (7, 2), (5, 3), (7, 5)] {
        let census = point_census(n, p)?;
        println!(
            "PG({n},{p}): {} construction points, {} distinct, expected {}",
            census.points.len(),
            census.distinct,
            census.expected()
        );
    }

    let two = Modulus::new(2)?;
    for mask in 1u32..64 {
        if mask.count_ones() % 2 == 0 {
            let v = FpVector::new(two, (0..6).map(|j| mask >> j & 1));
            println!("{:?}: {:?}", v.entries(), classify_gf2_point(&v)?);
        }
    }
    Ok(())
}
