//! The pair in PG(5,2) read as three-qubit Pauli operators.
//!
//!     cargo run --example three_qubits

use mobius_pauli::pauli::three_qubit_demo;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = three_qubit_demo()?;
    println!("vertices (P above, Q below):");
    print!("{}", r.pq_table_text());
    println!("center of perspectivity: {}", r.center);
    println!("points P_ijk:");
    print!("{}", r.triple_points_text());
    println!("group elements over the 12 vertices: {}", r.element_count);
    println!(
        "commute iff different row and column: {}",
        r.row_column_rule_holds
    );
    for row in &r.commutation {
        println!(
            "  {}",
            row.iter().map(u8::to_string).collect::<Vec<_>>().join("")
        );
    }
    println!("nested pairs of tetrahedra:");
    for t in &r.nested {
        println!(
            "  {:?}: {} | {} | center {}",
            t.indices,
            t.first.join(" "),
            t.second.join(" "),
            t.center
        );
    }
    println!(
        "construction points = complement of the polar of zzz: {}",
        r.off_center_polar
    );
    println!("commutation clauses hold: {}", r.theorem2.all_hold());
    Ok(())
}
