//! Symplectic bookkeeping against explicit Pauli matrices.
//!
//!     cargo run --example pauli_oracle

use mobius_pauli::pauli::{commutes, kron_oracle, multiply, oracle_commutes, PauliElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let labels = ["xz", "zx", "yy", "xx", "0z"];
    for a in labels {
        for b in labels {
            let (ea, eb) = (
                PauliElement::from_label(&a.parse()?),
                PauliElement::from_label(&b.parse()?),
            );
            let prod = multiply(&ea, &eb)?;
            let exact = kron_oracle(&ea)?.matmul(&kron_oracle(&eb)?);
            println!(
                "{a}·{b} = i^{} {}   matrices agree: {}   commute: {} / {}",
                prod.phase_exp(),
                prod.label()?,
                kron_oracle(&prod)? == exact,
                commutes(&ea, &eb)?,
                oracle_commutes(&ea, &eb)?
            );
        }
    }
    Ok(())
}
