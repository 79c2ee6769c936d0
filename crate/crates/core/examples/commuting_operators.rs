//! Lifts a pair to generalized Pauli operators on N qudits of prime
//! dimension and checks the commutation pattern by brute force.
//!
//!     cargo run --example commuting_operators -- 3 3

use mobius_pauli::moebius::build_moebius_pair;
use mobius_pauli::pauli::{
    commutes, find_symplectic_to_a, lift_pair_to_operators, verify_theorem2,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(3), |s| s.parse())?;
    let p: u32 = args.next().map_or(Ok(3), |s| s.parse())?;

    let pair = build_moebius_pair(n, p)?;
    let t = find_symplectic_to_a(n, p)?;
    println!("T = {:?}", t.to_rows());
    let (xs, ys) = lift_pair_to_operators(&pair, &t)?;
    for (i, (x, y)) in xs.iter().zip(&ys).enumerate() {
        println!(
            "X_{i} = {:?}   Y_{i} = {:?}",
            x.sympvec().entries(),
            y.sympvec().entries()
        );
    }
    for x in &xs {
        let row: Vec<u8> = ys
            .iter()
            .map(|y| commutes(x, y).map(u8::from))
            .collect::<Result<_, _>>()?;
        println!("  {row:?}");
    }
    let report = verify_theorem2(&xs, &ys)?;
    println!("{report:#?}");
    Ok(())
}
