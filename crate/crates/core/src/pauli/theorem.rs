//! From Möbius pairs to operator families: the coordinate change into the
//! symplectic basis, simplex families of operators and the commutation
//! pattern of a lifted pair.

use crate::fflinalg::{FpMatrix, FpVector, Modulus};
use crate::moebius::{self, MoebiusPair};
use crate::projgeom::{self, ProjectivePoint};

use super::{
    commutes, symplectic_form, symplectic_matrix, to_point, PauliElement, PauliError, Result,
};

/// The basis change `T = ((I,J,J),(0,I,J),(0,0,I))` over GF(2), with
/// `Tᵀ · diag(K,K,K) · T = A` for n = 5.
pub fn basis_change_t() -> FpMatrix {
    let two = Modulus::new(2).expect("2 is prime");
    let blocks = [[1u8, 2, 2], [0, 1, 2], [0, 0, 1]];
    let mut t = FpMatrix::zeros(two, 6, 6);
    for (bi, row) in blocks.iter().enumerate() {
        for (bj, &kind) in row.iter().enumerate() {
            for r in 0..2 {
                for c in 0..2 {
                    let v = match kind {
                        1 => u32::from(r == c),
                        2 => 1,
                        _ => 0,
                    };
                    t.set(2 * bi + r, 2 * bj + c, v);
                }
            }
        }
    }
    t
}

/// Some T with `Tᵀ · diag(K,…,K) · T = A(n,p)`.
///
/// Builds a symplectic basis for A by pairing off vectors greedily (each
/// chosen pair is split off the rest by projecting along it), then inverts
/// it. The identity is checked before returning.
pub fn find_symplectic_to_a(n: usize, p: u32) -> Result<FpMatrix> {
    let a = moebius::build_a(n, p)?;
    let m = a.modulus();
    let f = |x: &FpVector, y: &FpVector| a.pairing(x, y).expect("same length");
    let mut rest: Vec<FpVector> = (0..=n).map(|i| FpVector::unit(m, n + 1, i)).collect();
    let mut cols = Vec::with_capacity(n + 1);
    while !rest.is_empty() {
        let u = rest.remove(0);
        let j = rest
            .iter()
            .position(|w| f(&u, w) != 0)
            .ok_or_else(|| PauliError::FinderFailed(format!("no partner for {u}")))?;
        let w = rest.remove(j);
        // f(u, v) = -1, matching the (0,-1) entry of K
        let v = w.scale(m.neg(m.inv(f(&u, &w))));
        for x in rest.iter_mut() {
            let beta = f(&u, x);
            let alpha = m.neg(f(&v, x));
            *x = x.add(&u.scale(alpha))?.add(&v.scale(beta))?;
        }
        cols.push(u);
        cols.push(v);
    }
    let s = FpMatrix::from_column_vectors(m, n + 1, &cols)?;
    let omega = symplectic_matrix(n.div_ceil(2), m);
    let t = s.inverse()?;
    if &omega.congruence_transform(&t)? != a.form() {
        return Err(PauliError::FinderFailed(format!(
            "congruence fails for n={n}, p={p}"
        )));
    }
    Ok(t)
}

/// Maps the vertices of both simplices through `t` and takes the phase-0
/// element over each resulting vector.
pub fn lift_pair_to_operators(
    pair: &MoebiusPair,
    t: &FpMatrix,
) -> Result<(Vec<PauliElement>, Vec<PauliElement>)> {
    let size = pair.n() + 1;
    if t.shape() != (size, size) {
        return Err(PauliError::QuditMismatch(t.rows() / 2, size / 2));
    }
    if t.modulus() != pair.modulus() {
        return Err(PauliError::DimensionMismatch(
            t.modulus().get(),
            pair.modulus().get(),
        ));
    }
    let lift = |xs: &[ProjectivePoint]| {
        xs.iter()
            .map(|x| PauliElement::canonical(t.mul_vec(x.coords())?))
            .collect::<Result<Vec<_>>>()
    };
    Ok((lift(pair.first.vertices())?, lift(pair.second.vertices())?))
}

fn check_family(family: &[PauliElement]) -> Result<()> {
    let first = family.first().ok_or(PauliError::EmptyFamily)?;
    for a in family {
        if a.is_central() {
            return Err(PauliError::Central);
        }
        if a.d() != first.d() {
            return Err(PauliError::DimensionMismatch(first.d().get(), a.d().get()));
        }
        if a.qudits() != first.qudits() {
            return Err(PauliError::QuditMismatch(first.qudits(), a.qudits()));
        }
    }
    Ok(())
}

fn common_witness<'a>(
    d: Modulus,
    qudits: usize,
    family: impl Iterator<Item = &'a PauliElement> + Clone,
) -> Option<ProjectivePoint> {
    projgeom::all_points(d, 2 * qudits - 1).find(|x| {
        family
            .clone()
            .all(|a| symplectic_form(x.coords(), a.sympvec()).expect("same shape") == 0)
    })
}

/// Searches all of PG(2N-1, d) for a point conjugate to every member, i.e.
/// a non-central element commuting with the whole family.
pub fn has_common_commuting_element(family: &[PauliElement]) -> Result<Option<ProjectivePoint>> {
    check_family(family)?;
    let (d, q) = (family[0].d(), family[0].qudits());
    Ok(common_witness(d, q, family.iter()))
}

/// No non-central element commutes with the whole family, but one does for
/// every proper subfamily.
///
/// Having a common commuting element passes down to subfamilies, so only
/// the subfamilies missing a single member need a search.
pub fn is_simplex_family(family: &[PauliElement]) -> Result<bool> {
    check_family(family)?;
    let (d, q) = (family[0].d(), family[0].qudits());
    if common_witness(d, q, family.iter()).is_some() {
        return Ok(false);
    }
    Ok((0..family.len()).all(|skip| {
        let sub = family
            .iter()
            .enumerate()
            .filter(move |&(i, _)| i != skip)
            .map(|(_, a)| a);
        common_witness(d, q, sub).is_some()
    }))
}

/// The corresponding points are 2N independent points spanning the space.
pub fn geometric_simplex_check(family: &[PauliElement]) -> Result<bool> {
    check_family(family)?;
    let dim = family[0].sympvec().len();
    if family.len() != dim {
        return Ok(false);
    }
    let pts = family.iter().map(to_point).collect::<Result<Vec<_>>>()?;
    Ok(projgeom::span(&pts)?.dim() + 1 == dim as isize)
}

/// Clauses (a), (b), (c) for one family against the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseReport {
    /// No non-central element commutes with every member of the family.
    pub a: bool,
    /// Distinct members never commute.
    pub b: bool,
    /// `c[i]`: member i commutes with every element of the other family except
    /// the one with the same index, and not with that one.
    pub c: Vec<bool>,
}

impl ClauseReport {
    pub fn c_all(&self) -> bool {
        self.c.iter().all(|&x| x)
    }

    /// Clause (c) restricted to i = 1..=n.
    pub fn c_from_one(&self) -> bool {
        self.c.iter().skip(1).all(|&x| x)
    }

    pub fn all_hold(&self) -> bool {
        self.a && self.b && self.c_all()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Report {
    pub x_family: ClauseReport,
    /// The same clauses with the roles of the families exchanged.
    pub y_family: ClauseReport,
}

impl Theorem2Report {
    pub fn all_hold(&self) -> bool {
        self.x_family.all_hold() && self.y_family.all_hold()
    }
}

fn clauses(own: &[PauliElement], other: &[PauliElement]) -> Result<ClauseReport> {
    let a = has_common_commuting_element(own)?.is_none();
    let mut b = true;
    for i in 0..own.len() {
        for j in i + 1..own.len() {
            if commutes(&own[i], &own[j])? {
                b = false;
            }
        }
    }
    let c = own
        .iter()
        .enumerate()
        .map(|(i, x)| {
            other
                .iter()
                .enumerate()
                .map(|(j, y)| Ok(commutes(x, y)? == (i != j)))
                .collect::<Result<Vec<bool>>>()
                .map(|v| v.into_iter().all(|ok| ok))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClauseReport { a, b, c })
}

/// Brute-force check of the commutation pattern of two operator families.
pub fn verify_theorem2(xfam: &[PauliElement], yfam: &[PauliElement]) -> Result<Theorem2Report> {
    if xfam.len() != yfam.len() {
        return Err(PauliError::FamilySizes(xfam.len(), yfam.len()));
    }
    check_family(xfam)?;
    check_family(yfam)?;
    Ok(Theorem2Report {
        x_family: clauses(xfam, yfam)?,
        y_family: clauses(yfam, xfam)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::build_moebius_pair;

    fn el(label: &str) -> PauliElement {
        PauliElement::from_label(&label.parse().unwrap())
    }

    fn labels(fam: &[PauliElement]) -> Vec<String> {
        fam.iter().map(|a| a.label().unwrap().to_string()).collect()
    }

    #[test]
    fn paper_t_transforms_form() {
        let two = Modulus::new(2).unwrap();
        let t = basis_change_t();
        let a = moebius::build_a(5, 2).unwrap();
        assert_eq!(
            &symplectic_matrix(3, two).congruence_transform(&t).unwrap(),
            a.form()
        );
    }

    #[test]
    fn finder_produces_valid_t() {
        for (n, p) in [(1, 2), (3, 3), (3, 2), (5, 2), (5, 5), (7, 3), (9, 7)] {
            let t = find_symplectic_to_a(n, p).unwrap();
            let m = Modulus::new(p).unwrap();
            let a = moebius::build_a(n, p).unwrap();
            assert_eq!(
                &symplectic_matrix(n.div_ceil(2), m)
                    .congruence_transform(&t)
                    .unwrap(),
                a.form(),
                "n={n} p={p}"
            );
        }
        // A(1,2) = K mod 2, so the identity already works
        let k = symplectic_matrix(1, Modulus::new(2).unwrap());
        assert_eq!(
            k.congruence_transform(&FpMatrix::identity(k.modulus(), 2))
                .unwrap(),
            k
        );
    }

    #[test]
    fn lift_gives_table_rows() {
        let pair = build_moebius_pair(5, 2).unwrap();
        let (x, y) = lift_pair_to_operators(&pair, &basis_change_t()).unwrap();
        assert_eq!(labels(&x), ["x00", "y00", "zx0", "zy0", "zzx", "zzy"]);
        assert_eq!(labels(&y), ["yzz", "xzz", "0yz", "0xz", "00y", "00x"]);
        let zzz = el("zzz");
        for (a, b) in x.iter().zip(&y) {
            assert_eq!(&a.sympvec().add(zzz.sympvec()).unwrap(), b.sympvec());
        }
        let wrong = find_symplectic_to_a(3, 2).unwrap();
        assert!(lift_pair_to_operators(&pair, &wrong).is_err());
    }

    #[test]
    fn common_commuting_examples() {
        let pair = build_moebius_pair(5, 2).unwrap();
        let (x, _) = lift_pair_to_operators(&pair, &basis_change_t()).unwrap();
        assert_eq!(has_common_commuting_element(&x).unwrap(), None);
        for skip in 0..6 {
            let sub: Vec<_> = x
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, a)| a.clone())
                .collect();
            let w = has_common_commuting_element(&sub).unwrap().unwrap();
            let w = PauliElement::canonical(w.into_coords()).unwrap();
            assert!(sub.iter().all(|a| commutes(a, &w).unwrap()));
        }
        let single = el("xyz");
        assert!(has_common_commuting_element(&[single]).unwrap().is_some());
        assert_eq!(
            has_common_commuting_element(&[el("000")]),
            Err(PauliError::Central)
        );
        assert_eq!(
            has_common_commuting_element(&[]),
            Err(PauliError::EmptyFamily)
        );
    }

    #[test]
    fn simplex_family_examples() {
        let pair = build_moebius_pair(5, 2).unwrap();
        let (x, _) = lift_pair_to_operators(&pair, &basis_change_t()).unwrap();
        assert!(is_simplex_family(&x).unwrap());
        assert!(geometric_simplex_check(&x).unwrap());

        let mut repeated = x.clone();
        repeated[5] = repeated[0].clone();
        assert!(!is_simplex_family(&repeated).unwrap());
        assert!(!geometric_simplex_check(&repeated).unwrap());

        let basis: Vec<_> = ["x00", "y00", "0x0", "0y0", "00x", "00y"]
            .iter()
            .map(|l| el(l))
            .collect();
        assert!(is_simplex_family(&basis).unwrap());
    }

    #[test]
    fn theorem2_examples() {
        let pair = build_moebius_pair(5, 2).unwrap();
        let (x, y) = lift_pair_to_operators(&pair, &basis_change_t()).unwrap();
        let r = verify_theorem2(&x, &y).unwrap();
        assert!(r.all_hold());

        let r = verify_theorem2(&x, &x).unwrap();
        assert!(!r.x_family.c_all());
        assert!(!r.x_family.c_from_one());
        assert!(r.x_family.a && r.x_family.b);

        assert_eq!(
            verify_theorem2(&x, &y[..5]),
            Err(PauliError::FamilySizes(6, 5))
        );
    }

    #[test]
    fn theorem2_odd_characteristic() {
        let pair = build_moebius_pair(3, 3).unwrap();
        let t = find_symplectic_to_a(3, 3).unwrap();
        let (x, y) = lift_pair_to_operators(&pair, &t).unwrap();
        assert!(verify_theorem2(&x, &y).unwrap().all_hold());
    }
}
