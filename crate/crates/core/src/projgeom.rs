//! Points and subspaces of PG(n,p), null polarities and conjugacy.
//!
//! A point is stored as its canonical coordinate vector (first nonzero
//! coordinate equal to 1), so equality of points is equality of vectors. A
//! subspace is stored by a reduced row-echelon basis, which is likewise
//! canonical; the empty subspace has an empty basis and dimension -1.

use std::fmt;

use thiserror::Error;

use crate::fflinalg::{FpMatrix, FpVector, LinalgError, Modulus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the zero vector does not represent a point")]
    ZeroVector,
    #[error("ambient dimension mismatch: PG({0}) vs PG({1})")]
    AmbientMismatch(usize, usize),
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("form is not alternating")]
    NotAlternating,
    #[error("form is degenerate (rank {rank} of {size})")]
    Degenerate { rank: usize, size: usize },
    #[error("a null polarity needs odd n (got n = {0})")]
    EvenDimension(usize),
    #[error("{count} points is too many for a general-position test in PG({n})")]
    TooManyPoints { count: usize, n: usize },
    #[error("empty point set")]
    NoPoints,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

/// A point of PG(n,p) with its canonical coordinate vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: FpVector,
}

impl ProjectivePoint {
    /// Normalizes `v` so that its first nonzero coordinate is 1.
    pub fn new(v: FpVector) -> Result<Self> {
        let lead = v.first_nonzero().ok_or(GeometryError::ZeroVector)?;
        let inv = v.modulus().inv(v.get(lead));
        Ok(ProjectivePoint {
            coords: v.scale(inv),
        })
    }

    /// The point F·e_i of PG(n,p).
    pub fn basis(modulus: Modulus, n: usize, i: usize) -> Self {
        ProjectivePoint {
            coords: FpVector::unit(modulus, n + 1, i),
        }
    }

    pub fn coords(&self) -> &FpVector {
        &self.coords
    }

    pub fn into_coords(self) -> FpVector {
        self.coords
    }

    /// Projective dimension n of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn modulus(&self) -> Modulus {
        self.coords.modulus()
    }

    /// True iff `v` is a nonzero multiple of this point's vector.
    pub fn represented_by(&self, v: &FpVector) -> bool {
        ProjectivePoint::new(v.clone()).is_ok_and(|q| &q == self)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}

fn check_same(a: (usize, Modulus), b: (usize, Modulus)) -> Result<()> {
    if a.1 != b.1 {
        return Err(GeometryError::FieldMismatch(a.1.get(), b.1.get()));
    }
    if a.0 != b.0 {
        return Err(GeometryError::AmbientMismatch(a.0, b.0));
    }
    Ok(())
}

/// All points of PG(n,p), canonical vectors in lexicographic order of the
/// position of the leading 1 and then of the remaining coordinates.
pub fn all_points(modulus: Modulus, n: usize) -> impl Iterator<Item = ProjectivePoint> {
    let p = modulus.get();
    let len = n + 1;
    (0..len).rev().flat_map(move |lead| {
        // leading 1 at position `lead`, free coordinates after it
        let free = len - lead - 1;
        let total = (p as u64).pow(free as u32);
        (0..total).map(move |mut code| {
            let mut v = FpVector::zeros(modulus, len);
            v.set(lead, 1);
            for j in (lead + 1..len).rev() {
                v.set(j, (code % p as u64) as u32);
                code /= p as u64;
            }
            ProjectivePoint { coords: v }
        })
    })
}

/// Number of points of PG(n,p): (p^(n+1) - 1) / (p - 1).
pub fn point_count(p: u32, n: usize) -> u64 {
    ((p as u64).pow(n as u32 + 1) - 1) / (p as u64 - 1)
}

/// A projective subspace given by an echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    modulus: Modulus,
    n: usize,
    basis: Vec<FpVector>,
}

impl Subspace {
    fn from_rows(modulus: Modulus, n: usize, rows: &[FpVector]) -> Result<Self> {
        let m = FpMatrix::from_row_vectors(modulus, n + 1, rows)?;
        let (red, pivots) = m.rref();
        Ok(Subspace {
            modulus,
            n,
            basis: (0..pivots.len()).map(|i| red.row(i)).collect(),
        })
    }

    /// Span of arbitrary (possibly zero or dependent) vectors of length n+1.
    pub fn from_vectors(modulus: Modulus, n: usize, vectors: &[FpVector]) -> Result<Self> {
        for v in vectors {
            check_same((v.len() - 1, v.modulus()), (n, modulus))?;
        }
        Self::from_rows(modulus, n, vectors)
    }

    pub fn empty(modulus: Modulus, n: usize) -> Self {
        Subspace {
            modulus,
            n,
            basis: Vec::new(),
        }
    }

    pub fn whole(modulus: Modulus, n: usize) -> Self {
        Subspace {
            modulus,
            n,
            basis: (0..=n).map(|i| FpVector::unit(modulus, n + 1, i)).collect(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[FpVector] {
        &self.basis
    }

    /// Projective dimension; -1 for the empty subspace.
    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The single point of a 0-dimensional subspace.
    pub fn as_point(&self) -> Option<ProjectivePoint> {
        match self.basis.as_slice() {
            [v] => ProjectivePoint::new(v.clone()).ok(),
            _ => None,
        }
    }

    pub fn contains_vector(&self, v: &FpVector) -> bool {
        if v.is_zero() {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.clone());
        FpMatrix::from_row_vectors(self.modulus, self.n + 1, &rows)
            .map(|m| m.rank() == self.basis.len())
            .unwrap_or(false)
    }

    pub fn contains(&self, x: &ProjectivePoint) -> bool {
        self.contains_vector(x.coords())
    }

    /// Coefficient vectors of a system of linear equations cutting out this
    /// subspace (a basis of its annihilator).
    pub fn equations(&self) -> Vec<FpVector> {
        FpMatrix::from_row_vectors(self.modulus, self.n + 1, &self.basis)
            .expect("basis vectors have ambient length")
            .kernel()
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        check_same((self.n, self.modulus), (other.n, other.modulus))?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_rows(self.modulus, self.n, &rows)
    }
}

/// Smallest subspace containing all the points.
pub fn span(points: &[ProjectivePoint]) -> Result<Subspace> {
    let first = points.first().ok_or(GeometryError::NoPoints)?;
    let (n, m) = (first.ambient_dim(), first.modulus());
    let vectors: Vec<FpVector> = points.iter().map(|x| x.coords().clone()).collect();
    Subspace::from_vectors(m, n, &vectors)
}

/// Intersection of two subspaces, computed as the common solutions of both
/// systems of equations.
pub fn meet(s1: &Subspace, s2: &Subspace) -> Result<Subspace> {
    check_same((s1.n, s1.modulus), (s2.n, s2.modulus))?;
    let mut eqs = s1.equations();
    eqs.extend(s2.equations());
    let sys = FpMatrix::from_row_vectors(s1.modulus, s1.n + 1, &eqs)?;
    Subspace::from_rows(s1.modulus, s1.n, &sys.kernel())
}

/// A null polarity of PG(n,p), given by an invertible alternating matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullPolarity {
    form: FpMatrix,
}

impl NullPolarity {
    pub fn new(form: FpMatrix) -> Result<Self> {
        if !form.is_alternating() {
            return Err(GeometryError::NotAlternating);
        }
        let size = form.rows();
        if size % 2 == 1 {
            return Err(GeometryError::EvenDimension(size - 1));
        }
        let rank = form.rank();
        if rank < size {
            return Err(GeometryError::Degenerate { rank, size });
        }
        Ok(NullPolarity { form })
    }

    pub fn form(&self) -> &FpMatrix {
        &self.form
    }

    pub fn ambient_dim(&self) -> usize {
        self.form.rows() - 1
    }

    pub fn modulus(&self) -> Modulus {
        self.form.modulus()
    }

    fn check_point(&self, x: &ProjectivePoint) -> Result<()> {
        check_same(
            (x.ambient_dim(), x.modulus()),
            (self.ambient_dim(), self.modulus()),
        )
    }

    /// xᵀ·A·y as a field element.
    pub fn pairing(&self, x: &FpVector, y: &FpVector) -> Result<u32> {
        Ok(self.form.bilinear(x, y)?)
    }

    /// True iff y lies on the polar hyperplane of x.
    pub fn conjugate(&self, x: &ProjectivePoint, y: &ProjectivePoint) -> Result<bool> {
        self.check_point(x)?;
        self.check_point(y)?;
        Ok(self.pairing(x.coords(), y.coords())? == 0)
    }

    /// All points conjugate to every point of `s`.
    pub fn polar_image(&self, s: &Subspace) -> Result<Subspace> {
        check_same((s.n, s.modulus), (self.ambient_dim(), self.modulus()))?;
        // rows: sᵀ·A for each basis vector s
        let at = self.form.transpose();
        let rows: Vec<FpVector> = s
            .basis()
            .iter()
            .map(|v| at.mul_vec(v))
            .collect::<std::result::Result<_, _>>()?;
        let sys = FpMatrix::from_row_vectors(self.modulus(), s.n + 1, &rows)?;
        Subspace::from_rows(self.modulus(), s.n, &sys.kernel())
    }

    pub fn polar_hyperplane(&self, x: &ProjectivePoint) -> Result<Subspace> {
        self.check_point(x)?;
        self.polar_image(&span(std::slice::from_ref(x))?)
    }
}

fn independent(points: &[&ProjectivePoint]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let rows: Vec<FpVector> = points.iter().map(|x| x.coords().clone()).collect();
    FpMatrix::from_row_vectors(first.modulus(), first.ambient_dim() + 1, &rows)
        .map(|m| m.rank() == points.len())
        .unwrap_or(false)
}

/// Every subfamily of at most `limit` points is independent.
fn every_subfamily_independent(points: &[ProjectivePoint], limit: usize) -> bool {
    let size = points.len().min(limit);
    // independence is inherited by subsets, so maximal subfamilies suffice
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let sub: Vec<&ProjectivePoint> = idx.iter().map(|&i| &points[i]).collect();
        if !independent(&sub) {
            return false;
        }
        // next combination of `size` out of points.len()
        let len = points.len();
        let mut i = size;
        while i > 0 && idx[i - 1] == len - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// General position in the ambient PG(n,p): every subfamily of at most n+1
/// of the points is projectively independent.
pub fn in_general_position(points: &[ProjectivePoint]) -> Result<bool> {
    let first = points.first().ok_or(GeometryError::NoPoints)?;
    let n = first.ambient_dim();
    for x in points {
        check_same((x.ambient_dim(), x.modulus()), (n, first.modulus()))?;
    }
    if points.len() > n + 2 {
        return Err(GeometryError::TooManyPoints {
            count: points.len(),
            n,
        });
    }
    Ok(every_subfamily_independent(points, n + 1))
}

/// General position inside the subspace `s`: all points lie in `s` and every
/// subfamily of at most dim(s)+1 of them is independent.
pub fn in_general_position_within(s: &Subspace, points: &[ProjectivePoint]) -> Result<bool> {
    for x in points {
        check_same((x.ambient_dim(), x.modulus()), (s.n, s.modulus))?;
    }
    let k = s.basis.len();
    if k == 0 {
        return Ok(points.is_empty());
    }
    if points.len() > k + 1 {
        return Err(GeometryError::TooManyPoints {
            count: points.len(),
            n: k - 1,
        });
    }
    Ok(points.iter().all(|x| s.contains(x)) && every_subfamily_independent(points, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Modulus {
        Modulus::new(p).unwrap()
    }

    fn pt(p: u32, v: &[i64]) -> ProjectivePoint {
        ProjectivePoint::new(FpVector::from_signed(gf(p), v)).unwrap()
    }

    fn form_a(n: usize, p: u32) -> NullPolarity {
        let m = gf(p);
        let mut a = FpMatrix::zeros(m, n + 1, n + 1);
        for i in 0..=n {
            for j in 0..=n {
                if j > i {
                    a.set(i, j, m.neg(1));
                } else if j < i {
                    a.set(i, j, 1);
                }
            }
        }
        NullPolarity::new(a).unwrap()
    }

    #[test]
    fn points_are_normalized() {
        let x = pt(5, &[0, 3, 1]);
        assert_eq!(x.coords().entries(), &[0, 1, 2]);
        assert_eq!(x, pt(5, &[0, 1, 2]));
        assert_eq!(
            ProjectivePoint::new(FpVector::zeros(gf(5), 3)),
            Err(GeometryError::ZeroVector)
        );
        assert!(x.represented_by(&FpVector::from_signed(gf(5), &[0, 4, 3])));
    }

    #[test]
    fn point_enumeration() {
        for (p, n) in [(2u32, 3usize), (3, 3), (2, 5), (5, 2)] {
            let pts: Vec<_> = all_points(gf(p), n).collect();
            assert_eq!(pts.len() as u64, point_count(p, n));
            let set: std::collections::HashSet<_> = pts.iter().collect();
            assert_eq!(set.len(), pts.len());
            for x in &pts {
                assert_eq!(ProjectivePoint::new(x.coords().clone()).unwrap(), *x);
            }
        }
    }

    #[test]
    fn span_examples() {
        let s = span(&[ProjectivePoint::basis(gf(2), 5, 0)]).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s.basis(), &[FpVector::unit(gf(2), 6, 0)]);

        let all: Vec<_> = (0..6)
            .map(|i| ProjectivePoint::basis(gf(2), 5, i))
            .collect();
        assert_eq!(span(&all).unwrap(), Subspace::whole(gf(2), 5));

        let plane = span(&all_basis(3, 3)[..3]).unwrap();
        assert_eq!(plane.dim(), 2);
        assert_eq!(plane.equations(), vec![FpVector::unit(gf(3), 4, 3)]);

        let mixed = [
            ProjectivePoint::basis(gf(2), 3, 0),
            ProjectivePoint::basis(gf(2), 5, 0),
        ];
        assert_eq!(span(&mixed), Err(GeometryError::AmbientMismatch(5, 3)));
    }

    fn all_basis(n: usize, p: u32) -> Vec<ProjectivePoint> {
        (0..=n)
            .map(|i| ProjectivePoint::basis(gf(p), n, i))
            .collect()
    }

    #[test]
    fn meet_examples() {
        let pol = form_a(3, 5);
        let p = all_basis(3, 5);
        let line = span(&p[..2]).unwrap();
        assert_eq!(meet(&Subspace::whole(gf(5), 3), &line).unwrap(), line);

        let polar_line = pol.polar_image(&line).unwrap();
        assert!(meet(&line, &polar_line).unwrap().is_empty());

        let plane = span(&p[..3]).unwrap();
        let m = meet(&plane, &pol.polar_image(&plane).unwrap()).unwrap();
        assert_eq!(m.as_point().unwrap(), pt(5, &[4, 1, 4, 0]));
        assert_eq!(m.as_point().unwrap().coords().entries(), &[1, 4, 1, 0]);
    }

    #[test]
    fn polar_image_examples() {
        let pol = form_a(3, 3);
        let h = pol
            .polar_hyperplane(&ProjectivePoint::basis(gf(3), 3, 0))
            .unwrap();
        assert_eq!(h.dim(), 2);
        let eq = h.equations();
        assert_eq!(eq.len(), 1);
        assert!(ProjectivePoint::new(eq[0].clone())
            .unwrap()
            .represented_by(&pol.form().row(0)));

        assert!(pol
            .polar_image(&Subspace::whole(gf(3), 3))
            .unwrap()
            .is_empty());
        assert_eq!(
            pol.polar_image(&Subspace::empty(gf(3), 3)).unwrap(),
            Subspace::whole(gf(3), 3)
        );

        let pol2 = form_a(5, 2);
        let c = pt(2, &[1, 1, 1, 1, 1, 1]);
        let h = pol2.polar_hyperplane(&c).unwrap();
        assert_eq!(h.equations(), vec![FpVector::new(gf(2), [1; 6])]);
    }

    #[test]
    fn conjugacy_examples() {
        let pol = form_a(5, 2);
        let p0 = ProjectivePoint::basis(gf(2), 5, 0);
        let p1 = ProjectivePoint::basis(gf(2), 5, 1);
        assert!(pol.conjugate(&p0, &p0).unwrap());
        assert!(!pol.conjugate(&p0, &p1).unwrap());
        // Q_1 = column 1 of the inverse: (1,0,1,1,1,1) over GF(2)
        let q1 = pt(2, &[1, 0, 1, 1, 1, 1]);
        assert!(pol.conjugate(&p0, &q1).unwrap());
        let other = ProjectivePoint::basis(gf(2), 3, 0);
        assert!(pol.conjugate(&p0, &other).is_err());
    }

    #[test]
    fn general_position_examples() {
        assert!(in_general_position(&all_basis(4, 3)).unwrap());
        let collinear = [
            ProjectivePoint::basis(gf(3), 4, 0),
            ProjectivePoint::basis(gf(3), 4, 1),
            pt(3, &[1, 1, 0, 0, 0]),
        ];
        assert!(!in_general_position(&collinear).unwrap());

        let p = all_basis(3, 5);
        let mut four = p[..3].to_vec();
        four.push(pt(5, &[-1, 1, -1, 0]));
        let plane = span(&p[..3]).unwrap();
        assert!(in_general_position_within(&plane, &four).unwrap());
        // the same four points are coplanar, hence not in general position in PG(3,5)
        assert!(!in_general_position(&four).unwrap());

        let too_many: Vec<_> = all_points(gf(2), 2).collect();
        assert!(matches!(
            in_general_position(&too_many),
            Err(GeometryError::TooManyPoints { .. })
        ));
        // a point on an edge is not in general position with the triangle
        let mut bad = p[..3].to_vec();
        bad.push(pt(5, &[1, 1, 0, 0]));
        assert!(!in_general_position_within(&plane, &bad).unwrap());
    }

    #[test]
    fn polarity_validation() {
        let m = gf(3);
        let sym = FpMatrix::from_signed_rows(m, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(NullPolarity::new(sym), Err(GeometryError::NotAlternating));
        let zero = FpMatrix::zeros(m, 2, 2);
        assert_eq!(
            NullPolarity::new(zero),
            Err(GeometryError::Degenerate { rank: 0, size: 2 })
        );
        let odd = FpMatrix::from_signed_rows(m, &[&[0, 1, 1], &[-1, 0, 1], &[-1, -1, 0]]).unwrap();
        assert_eq!(NullPolarity::new(odd), Err(GeometryError::EvenDimension(2)));
    }

    #[test]
    fn polar_properties_exhaustive_small() {
        // dimension formula, involution, symmetry of conjugacy on PG(3,3)
        let pol = form_a(3, 3);
        let pts: Vec<_> = all_points(gf(3), 3).collect();
        for x in &pts {
            for y in pts.iter().step_by(7) {
                assert_eq!(pol.conjugate(x, y).unwrap(), pol.conjugate(y, x).unwrap());
            }
            assert!(pol.conjugate(x, x).unwrap());
        }
        for i in 0..pts.len() {
            for j in (i + 1..pts.len()).step_by(5) {
                let s = span(&[pts[i].clone(), pts[j].clone()]).unwrap();
                let ps = pol.polar_image(&s).unwrap();
                assert_eq!(ps.dim(), 3 - 1 - s.dim());
                assert_eq!(pol.polar_image(&ps).unwrap(), s);
            }
        }
    }
}
