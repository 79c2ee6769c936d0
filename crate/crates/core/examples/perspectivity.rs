//! The two simplices are in perspective from the all-ones point exactly
//! when p = 2.
//!
//!     cargo run --example perspectivity

use mobius_pauli::moebius::{adjacent_lines_meet, build_moebius_pair, perspectivity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [3usize, 5, 7] {
        for p in [2u32, 3, 5, 7] {
            let pair = build_moebius_pair(n, p)?;
            let persp = perspectivity(&pair)?;
            match &persp.center {
                Some(c) => println!(
                    "n={n} p={p}: center {:?}, on {} of {} lines",
                    c.coords().entries(),
                    persp.lines_through_center,
                    n + 1
                ),
                None => println!(
                    "n={n} p={p}: no center; P0Q0 ∩ P1Q1 = {:?}, P2Q2 ∩ P3Q3 = {:?}",
                    adjacent_lines_meet(0, n, p)?.entries(),
                    adjacent_lines_meet(2, n, p)?.entries()
                ),
            }
        }
    }
    Ok(())
}
