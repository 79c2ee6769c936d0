//! Meets of faces of the standard simplex with their polar subspaces.
//! Odd-dimensional faces miss their polar; even-dimensional ones meet it in
//! a single point, the alternating sum of the vertices.
//!
//!     cargo run --example polar_faces -- 5 2

use mobius_pauli::moebius::{build_a, intersection_point, polar_meet_of_face};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(5), |s| s.parse())?;
    let p: u32 = args.next().map_or(Ok(2), |s| s.parse())?;
    let pol = build_a(n, p)?;

    for mask in 1u32..1 << (n + 1) {
        let idx: Vec<usize> = (0..=n).filter(|&j| mask >> j & 1 == 1).collect();
        if idx.len() < 2 || idx.len() > 4 {
            continue;
        }
        let meet = polar_meet_of_face(&pol, &idx)?;
        match meet.as_point() {
            Some(x) => {
                let expected = intersection_point(&idx, n, p)?.point;
                println!(
                    "{idx:?}: point {:?} (matches sum: {})",
                    x.coords().entries(),
                    x == expected
                );
            }
            None => println!("{idx:?}: dimension {}", meet.dim()),
        }
    }
    Ok(())
}
