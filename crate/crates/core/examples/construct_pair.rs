//! Builds the Möbius pair of PG(n,p) and prints its incidence structure.
//!
//!     cargo run --example construct_pair -- 5 3

use mobius_pauli::moebius::{build_moebius_pair, dual_basis_check, verify_moebius_pair};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(5), |s| s.parse())?;
    let p: u32 = args.next().map_or(Ok(3), |s| s.parse())?;

    let pair = build_moebius_pair(n, p)?;
    println!("A over GF({p}):");
    for row in pair.polarity.form().to_rows() {
        println!("  {row:?}");
    }
    for (j, (x, y)) in pair
        .first
        .vertices()
        .iter()
        .zip(pair.second.vertices())
        .enumerate()
    {
        println!(
            "P_{j} = {:?}   Q_{j} = {:?}",
            x.coords().entries(),
            y.coords().entries()
        );
    }

    let report = verify_moebius_pair(&pair)?;
    println!("P_i on face of Q_j:");
    for row in &report.first_on_second {
        println!("  {row:?}");
    }
    println!("Q_i on face of P_j:");
    for row in &report.second_on_first {
        println!("  {row:?}");
    }
    println!("valid: {}", report.is_valid());
    println!(
        "Q_j is the pole of the opposite face: {}",
        report.polarity_consistent
    );
    println!("dual basis congruence: {}", dual_basis_check(&pair)?);
    Ok(())
}
