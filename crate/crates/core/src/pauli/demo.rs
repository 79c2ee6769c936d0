//! The three-qubit case n = 5, p = 2 carried through end to end.

use std::collections::HashSet;

use crate::fflinalg::FpVector;
use crate::moebius::{self, build_moebius_pair};
use crate::projgeom::ProjectivePoint;

use super::theorem::{basis_change_t, lift_pair_to_operators, verify_theorem2, Theorem2Report};
use super::{commutes, label_to_vector, representatives, vector_to_label, PauliElement, Result};

/// A nested pair of tetrahedra in label notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedTetrahedra {
    pub indices: Vec<usize>,
    pub first: Vec<String>,
    pub second: Vec<String>,
    pub center: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemoReport {
    pub t_matrix: Vec<Vec<u32>>,
    /// Row 0: the vertices P_0..P_5, row 1: Q_0..Q_5.
    pub pq_table: [Vec<String>; 2],
    /// P_{012}, P_{013}, …, P_{345}.
    pub triple_points: Vec<String>,
    pub nested: Vec<NestedTetrahedra>,
    pub center: String,
    /// Distinct group elements representing the twelve vertices.
    pub element_count: usize,
    /// `[i][j] = 1` iff the vertices i and j (0..6 from P, 6..12 from Q) are
    /// distinct and their elements commute.
    pub commutation: Vec<Vec<u8>>,
    /// Over all 66 unordered vertex pairs: commuting iff different row and
    /// different column of the table.
    pub row_column_rule_holds: bool,
    /// The 32 construction points are exactly the points off the polar
    /// hyperplane of the center.
    pub off_center_polar: bool,
    pub theorem2: Theorem2Report,
}

impl DemoReport {
    /// The vertex table as two lines of space-separated labels.
    pub fn pq_table_text(&self) -> String {
        self.pq_table.iter().map(|r| r.join(" ") + "\n").collect()
    }

    /// The twenty points of the planes of P as two lines of ten.
    pub fn triple_points_text(&self) -> String {
        self.triple_points
            .chunks(10)
            .map(|r| r.join(" ") + "\n")
            .collect()
    }
}

fn label_of(t: &crate::fflinalg::FpMatrix, v: &FpVector) -> Result<String> {
    Ok(vector_to_label(&t.mul_vec(v)?)?.to_string())
}

pub fn three_qubit_demo() -> Result<DemoReport> {
    let (n, p) = (5, 2);
    let pair = build_moebius_pair(n, p)?;
    let t = basis_change_t();
    let (xs, ys) = lift_pair_to_operators(&pair, &t)?;
    let labels = |fam: &[PauliElement]| -> Result<Vec<String>> {
        fam.iter().map(|a| Ok(a.label()?.to_string())).collect()
    };
    let pq_table = [labels(&xs)?, labels(&ys)?];

    let census = moebius::point_census(n, p)?;
    let triple_points = census
        .points
        .iter()
        .filter(|(set, _)| set.len() == 3)
        .map(|(_, x)| label_of(&t, x.coords()))
        .collect::<Result<Vec<_>>>()?;

    let center_point =
        moebius::perspectivity_center(&pair)?.ok_or(moebius::MoebiusError::NotASimplex(6))?;
    let center = label_of(&t, center_point.coords())?;

    let mut nested = Vec::new();
    for mask in 0u32..64 {
        if mask.count_ones() != 4 {
            continue;
        }
        let indices: Vec<usize> = (0..6).filter(|&j| mask >> j & 1 == 1).collect();
        let np = moebius::nested_pair(&pair, &indices)?;
        let c = moebius::perspectivity_center(&np.pair)?
            .ok_or(moebius::MoebiusError::NotASimplex(4))?;
        nested.push(NestedTetrahedra {
            first: np
                .ambient_first
                .iter()
                .map(|x| label_of(&t, x.coords()))
                .collect::<Result<_>>()?,
            second: np
                .ambient_second
                .iter()
                .map(|x| label_of(&t, x.coords()))
                .collect::<Result<_>>()?,
            center: label_of(&t, &np.embed(c.coords()))?,
            indices,
        });
    }
    nested.sort_by(|a, b| a.indices.cmp(&b.indices));

    let vertices: Vec<&PauliElement> = xs.iter().chain(&ys).collect();
    let mut elements = HashSet::new();
    for a in &vertices {
        elements.extend(representatives(&super::to_point(a)?)?);
    }

    let mut commutation = vec![vec![0u8; 12]; 12];
    let mut rule = true;
    for i in 0..12 {
        for j in 0..12 {
            if i == j {
                continue;
            }
            let c = commutes(vertices[i], vertices[j])?;
            commutation[i][j] = u8::from(c);
            let (ri, ci, rj, cj) = (i / 6, i % 6, j / 6, j % 6);
            if c != (ri != rj && ci != cj) {
                rule = false;
            }
        }
    }

    // every construction point pairs to 1 with the center, and there are 2^n of them
    let zzz = PauliElement::from_label(&"zzz".parse()?);
    let construction: HashSet<String> = pq_table
        .iter()
        .flatten()
        .chain(&triple_points)
        .cloned()
        .collect();
    let off_polar: HashSet<String> = crate::projgeom::all_points(pair.modulus(), n)
        .map(|x| PauliElement::canonical(x.into_coords()))
        .filter(|a| a.as_ref().is_ok_and(|a| !commutes(a, &zzz).unwrap_or(true)))
        .map(|a| Ok(a?.label()?.to_string()))
        .collect::<Result<_>>()?;
    let off_center_polar = construction.len() == 32 && construction == off_polar;

    Ok(DemoReport {
        t_matrix: t.to_rows(),
        pq_table,
        triple_points,
        nested,
        center,
        element_count: elements.len(),
        commutation,
        row_column_rule_holds: rule,
        off_center_polar,
        theorem2: verify_theorem2(&xs, &ys)?,
    })
}

/// The point of PG(5,2) with the given three-qubit label, in the
/// coordinates of the construction (i.e. after undoing T).
pub fn point_of_label(label: &str) -> Result<ProjectivePoint> {
    let v = label_to_vector(&label.parse()?);
    let t_inv = basis_change_t().inverse()?;
    Ok(ProjectivePoint::new(t_inv.mul_vec(&v)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_examples() {
        let r = three_qubit_demo().unwrap();
        assert_eq!(r.pq_table[0].join(" "), "x00 y00 zx0 zy0 zzx zzy");
        assert_eq!(&r.triple_points[..5], ["0x0", "0y0", "0zx", "0zy", "xz0"]);
        assert_eq!(r.center, "zzz");
        assert_eq!(r.element_count, 48);
        assert_eq!(r.nested.len(), 15);
        assert!(r.row_column_rule_holds);
        assert!(r.off_center_polar);
        assert!(r.theorem2.all_hold());
    }

    #[test]
    fn sum_of_three_vertices() {
        // x00 + y00 + zx0 = 0x0, using x + y + z = 0
        let sum = ["x00", "y00", "zx0"]
            .iter()
            .map(|l| label_to_vector(&l.parse().unwrap()))
            .reduce(|a, b| a.add(&b).unwrap())
            .unwrap();
        assert_eq!(vector_to_label(&sum).unwrap().as_str(), "0x0");
        assert_eq!(
            point_of_label("0x0").unwrap(),
            moebius::intersection_point(&[0, 1, 2], 5, 2).unwrap().point
        );
    }
}
