//! The null-polarity construction of non-degenerate Möbius pairs of
//! n-simplices in PG(n,p), n odd.
//!
//! The polarity is given by the alternating matrix `A` with zero diagonal,
//! -1 above and +1 below it. The first simplex is the standard simplex
//! `P_j = F e_j`; the second has the columns `q_m` of `A⁻¹` as vertices, so
//! that vertex `Q_m` is the pole of the face of `P` opposite `P_m`.
//!
//! Every sign (-1)^i is evaluated inside GF(p), so p = 2 needs no special
//! treatment.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::fflinalg::{FpMatrix, FpVector, LinalgError, Modulus};
use crate::projgeom::{self, GeometryError, NullPolarity, ProjectivePoint, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoebiusError {
    #[error("n must be odd (got {0})")]
    EvenDimension(usize),
    #[error("n must be at least 1")]
    ZeroDimension,
    #[error("n = 1 only gives the degenerate pair; n must be at least 3")]
    DegeneratePair,
    #[error("indices must be strictly increasing and at most {n}: {indices:?}")]
    BadIndices { indices: Vec<usize>, n: usize },
    #[error("index {index} out of range 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{0} indices given; an intersection point needs an odd number, at least 3")]
    IntersectionParity(usize),
    #[error("{0} indices given; a nested pair needs an even number of vertices")]
    NestedParity(usize),
    #[error("two vertices only span a line: the nested pair is degenerate")]
    DegenerateNested,
    #[error("{0} points do not form a simplex")]
    NotASimplex(usize),
    #[error("simplices and polarity live in different spaces")]
    ShapeMismatch,
    #[error("the first simplex is not the standard simplex")]
    NotStandard,
    #[error("classification needs p = 2 (got {0})")]
    NotBinary(u32),
    #[error("the zero vector is not a point")]
    ZeroVector,
    #[error("vector length {0} is odd; n must be odd")]
    OddLength(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T> = std::result::Result<T, MoebiusError>;

fn check_params(n: usize, p: u32) -> Result<Modulus> {
    if n == 0 {
        return Err(MoebiusError::ZeroDimension);
    }
    if n.is_multiple_of(2) {
        return Err(MoebiusError::EvenDimension(n));
    }
    Ok(Modulus::new(p)?)
}

fn check_indices(indices: &[usize], n: usize) -> Result<()> {
    if let Some(&bad) = indices.iter().find(|&&i| i > n) {
        return Err(MoebiusError::IndexOutOfRange { index: bad, n });
    }
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(MoebiusError::BadIndices {
            indices: indices.to_vec(),
            n,
        });
    }
    Ok(())
}

/// The 2x2 building blocks K, J, L and I over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrices {
    pub k: FpMatrix,
    pub j: FpMatrix,
    pub l: FpMatrix,
    pub i: FpMatrix,
}

impl BlockMatrices {
    pub fn new(modulus: Modulus) -> Self {
        let m = |rows: &[&[i64]]| FpMatrix::from_signed_rows(modulus, rows).expect("2x2 literal");
        BlockMatrices {
            k: m(&[&[0, -1], &[1, 0]]),
            j: m(&[&[1, 1], &[1, 1]]),
            l: m(&[&[1, -1], &[-1, 1]]),
            i: FpMatrix::identity(modulus, 2),
        }
    }

    /// -K² = I, JK - KL = 0 and JL = 0.
    pub fn identities_hold(&self) -> bool {
        let zero = FpMatrix::zeros(self.k.modulus(), 2, 2);
        let kk = self.k.mul(&self.k).unwrap();
        let jk = self.j.mul(&self.k).unwrap();
        let kl = self.k.mul(&self.l).unwrap();
        kk.neg() == self.i
            && jk.add(&kl.neg()).unwrap() == zero
            && self.j.mul(&self.l).unwrap() == zero
    }
}

fn from_blocks(modulus: Modulus, n: usize, block: impl Fn(usize, usize) -> FpMatrix) -> FpMatrix {
    let mut out = FpMatrix::zeros(modulus, n + 1, n + 1);
    let blocks = n.div_ceil(2);
    for bi in 0..blocks {
        for bj in 0..blocks {
            let b = block(bi, bj);
            for r in 0..2 {
                for c in 0..2 {
                    out.set(2 * bi + r, 2 * bj + c, b.get(r, c));
                }
            }
        }
    }
    out
}

/// The alternating matrix A of the polarity: 0 on the diagonal, -1 above, 1 below.
pub fn build_a(n: usize, p: u32) -> Result<NullPolarity> {
    let m = check_params(n, p)?;
    let b = BlockMatrices::new(m);
    let minus_j = b.j.neg();
    let a = from_blocks(m, n, |bi, bj| match bi.cmp(&bj) {
        std::cmp::Ordering::Equal => b.k.clone(),
        std::cmp::Ordering::Less => minus_j.clone(),
        std::cmp::Ordering::Greater => b.j.clone(),
    });
    Ok(NullPolarity::new(a)?)
}

/// A⁻¹ assembled from blocks: -K on the diagonal, -L above, L below.
pub fn build_a_inverse(n: usize, p: u32) -> Result<FpMatrix> {
    let m = check_params(n, p)?;
    let b = BlockMatrices::new(m);
    let (minus_k, minus_l) = (b.k.neg(), b.l.neg());
    Ok(from_blocks(m, n, |bi, bj| match bi.cmp(&bj) {
        std::cmp::Ordering::Equal => minus_k.clone(),
        std::cmp::Ordering::Less => minus_l.clone(),
        std::cmp::Ordering::Greater => b.l.clone(),
    }))
}

/// An ordered n-simplex: n+1 points spanning PG(n,p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    vertices: Vec<ProjectivePoint>,
}

impl Simplex {
    pub fn new(vertices: Vec<ProjectivePoint>) -> Result<Self> {
        let s = Self::unchecked(vertices);
        if s.is_simplex() {
            Ok(s)
        } else {
            Err(MoebiusError::NotASimplex(s.vertices.len()))
        }
    }

    /// Keeps the points as given, for verification of external data.
    pub fn unchecked(vertices: Vec<ProjectivePoint>) -> Self {
        Simplex { vertices }
    }

    pub fn is_simplex(&self) -> bool {
        let Some(first) = self.vertices.first() else {
            return false;
        };
        self.vertices.len() == first.ambient_dim() + 1
            && projgeom::span(&self.vertices).is_ok_and(|s| s.dim() as usize == first.ambient_dim())
    }

    pub fn vertices(&self) -> &[ProjectivePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The face opposite vertex `i`: the span of all other vertices.
    pub fn face(&self, i: usize) -> Result<Subspace> {
        let others: Vec<_> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, x)| x.clone())
            .collect();
        Ok(projgeom::span(&others)?)
    }
}

/// The standard simplex P_j = F e_j.
pub fn standard_simplex(n: usize, p: u32) -> Result<Simplex> {
    let m = check_params(n, p)?;
    Ok(Simplex {
        vertices: (0..=n).map(|j| ProjectivePoint::basis(m, n, j)).collect(),
    })
}

/// The meet of the face spanned by `{P_j : j ∈ indices}` with its polar.
pub fn polar_meet_of_face(pol: &NullPolarity, indices: &[usize]) -> Result<Subspace> {
    let n = pol.ambient_dim();
    check_indices(indices, n)?;
    let s = Subspace::from_vectors(
        pol.modulus(),
        n,
        &indices
            .iter()
            .map(|&j| FpVector::unit(pol.modulus(), n + 1, j))
            .collect::<Vec<_>>(),
    )?;
    Ok(projgeom::meet(&s, &pol.polar_image(&s)?)?)
}

/// A construction point `P_{j0…jk}` for an even k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub indices: Vec<usize>,
    pub point: ProjectivePoint,
}

/// Σ (-1)^(i+1) e_{j_i} for strictly increasing indices; no range checks.
fn alternating_sum(m: Modulus, n: usize, indices: &[usize]) -> FpVector {
    let mut v = FpVector::zeros(m, n + 1);
    for (i, &j) in indices.iter().enumerate() {
        v.set(j, m.sign(i + 1));
    }
    v
}

/// The point of `span{P_j} ∩ π(span{P_j})` for an odd number (at least 3) of indices.
pub fn intersection_point(indices: &[usize], n: usize, p: u32) -> Result<IntersectionPoint> {
    let m = check_params(n, p)?;
    check_indices(indices, n)?;
    if indices.len() < 3 || indices.len().is_multiple_of(2) {
        return Err(MoebiusError::IntersectionParity(indices.len()));
    }
    Ok(IntersectionPoint {
        indices: indices.to_vec(),
        point: ProjectivePoint::new(alternating_sum(m, n, indices))?,
    })
}

/// Column m of A⁻¹, written out by its closed form.
pub fn q_vector(m_idx: usize, n: usize, p: u32) -> Result<FpVector> {
    let m = check_params(n, p)?;
    if m_idx > n {
        return Err(MoebiusError::IndexOutOfRange { index: m_idx, n });
    }
    let mut q = FpVector::zeros(m, n + 1);
    for i in 0..m_idx {
        q.set(i, m.sign(i + m_idx + 1));
    }
    for k in m_idx + 1..=n {
        q.set(k, m.sign(k + m_idx));
    }
    Ok(q)
}

/// Two simplices and the polarity linking them.
///
/// The constructor only checks that everything lives in the same space;
/// incidence is the job of [`verify_moebius_pair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusPair {
    pub first: Simplex,
    pub second: Simplex,
    pub polarity: NullPolarity,
}

impl MoebiusPair {
    pub fn new(first: Simplex, second: Simplex, polarity: NullPolarity) -> Result<Self> {
        let n = polarity.ambient_dim();
        let m = polarity.modulus();
        let fits = |s: &Simplex| {
            s.len() == n + 1
                && s.vertices()
                    .iter()
                    .all(|x| x.ambient_dim() == n && x.modulus() == m)
        };
        if !fits(&first) || !fits(&second) {
            return Err(MoebiusError::ShapeMismatch);
        }
        Ok(MoebiusPair {
            first,
            second,
            polarity,
        })
    }

    pub fn n(&self) -> usize {
        self.polarity.ambient_dim()
    }

    pub fn modulus(&self) -> Modulus {
        self.polarity.modulus()
    }
}

/// The pair (P, Q) of the construction for odd n ≥ 3.
pub fn build_moebius_pair(n: usize, p: u32) -> Result<MoebiusPair> {
    check_params(n, p)?;
    if n == 1 {
        return Err(MoebiusError::DegeneratePair);
    }
    let polarity = build_a(n, p)?;
    let first = standard_simplex(n, p)?;
    let second = (0..=n)
        .map(|m| Ok(ProjectivePoint::new(q_vector(m, n, p)?)?))
        .collect::<Result<Vec<_>>>()?;
    MoebiusPair::new(first, Simplex::new(second)?, polarity)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Which matrix of an [`IncidenceReport`] a failure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncidenceMatrix {
    FirstOnSecond,
    SecondOnFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IncidenceFailure {
    NotASimplex(Side),
    /// Face `index` carries `count` vertices instead of one.
    Row {
        matrix: IncidenceMatrix,
        index: usize,
        count: usize,
    },
    /// Vertex `index` lies on `count` faces instead of one.
    Column {
        matrix: IncidenceMatrix,
        index: usize,
        count: usize,
    },
}

/// Incidences between the vertices of one simplex and the faces of the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceReport {
    /// `[i][j] = 1` iff vertex j of `first` lies on the face of `second` opposite vertex i.
    pub first_on_second: Vec<Vec<u8>>,
    /// `[i][j] = 1` iff vertex j of `second` lies on the face of `first` opposite vertex i.
    pub second_on_first: Vec<Vec<u8>>,
    pub failures: Vec<IncidenceFailure>,
    /// Face i of each simplex is the polar hyperplane of vertex i of the other.
    pub polarity_consistent: bool,
}

impl IncidenceReport {
    /// Non-degenerate Möbius pair: every vertex on exactly one face of the other simplex.
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

fn incidence(vertices: &Simplex, faces: &Simplex) -> Result<Vec<Vec<u8>>> {
    (0..faces.len())
        .map(|i| {
            let face = faces.face(i)?;
            Ok(vertices
                .vertices()
                .iter()
                .map(|x| face.contains(x) as u8)
                .collect())
        })
        .collect()
}

fn exactly_one(matrix: &[Vec<u8>], which: IncidenceMatrix, out: &mut Vec<IncidenceFailure>) {
    for (i, row) in matrix.iter().enumerate() {
        let count = row.iter().filter(|&&b| b == 1).count();
        if count != 1 {
            out.push(IncidenceFailure::Row {
                matrix: which,
                index: i,
                count,
            });
        }
    }
    for j in 0..matrix.first().map_or(0, Vec::len) {
        let count = matrix.iter().filter(|r| r[j] == 1).count();
        if count != 1 {
            out.push(IncidenceFailure::Column {
                matrix: which,
                index: j,
                count,
            });
        }
    }
}

/// Checks mutual inscription with exactly one incidence per vertex and face.
pub fn verify_moebius_pair(pair: &MoebiusPair) -> Result<IncidenceReport> {
    let mut failures = Vec::new();
    if !pair.first.is_simplex() {
        failures.push(IncidenceFailure::NotASimplex(Side::First));
    }
    if !pair.second.is_simplex() {
        failures.push(IncidenceFailure::NotASimplex(Side::Second));
    }
    let first_on_second = incidence(&pair.first, &pair.second)?;
    let second_on_first = incidence(&pair.second, &pair.first)?;
    exactly_one(
        &first_on_second,
        IncidenceMatrix::FirstOnSecond,
        &mut failures,
    );
    exactly_one(
        &second_on_first,
        IncidenceMatrix::SecondOnFirst,
        &mut failures,
    );

    let mut polarity_consistent = true;
    for i in 0..=pair.n() {
        let a = pair.polarity.polar_hyperplane(&pair.first.vertices()[i])?;
        let b = pair.polarity.polar_hyperplane(&pair.second.vertices()[i])?;
        if a != pair.second.face(i)? || b != pair.first.face(i)? {
            polarity_consistent = false;
        }
    }
    Ok(IncidenceReport {
        first_on_second,
        second_on_first,
        failures,
        polarity_consistent,
    })
}

/// The change of basis b_i = (-1)^i q_i swaps the roles of the two simplices:
/// Bᵀ A B is a matrix of the same polarity, and the columns of B⁻¹ (the
/// vertices of P in the new basis) agree with the columns of A⁻¹ up to sign.
///
/// Bᵀ A B comes out as -A (equal to A only in characteristic 2), which
/// induces the same polarity; see [`congruence_factor`].
pub fn dual_basis_check(pair: &MoebiusPair) -> Result<bool> {
    let (n, m) = (pair.n(), pair.modulus());
    let p = m.get();
    let q: Vec<FpVector> = (0..=n).map(|i| q_vector(i, n, p)).collect::<Result<_>>()?;
    if q.iter()
        .zip(pair.second.vertices())
        .any(|(qi, x)| !x.represented_by(qi))
    {
        return Ok(false);
    }
    let b = dual_basis(n, p)?;
    let a = pair.polarity.form();
    if congruence_factor(&a.congruence_transform(&b)?, a).is_none() {
        return Ok(false);
    }
    let Ok(b_inv) = b.inverse() else {
        return Ok(false);
    };
    let a_inv = a.inverse()?;
    Ok((0..=n).all(|j| {
        let col = b_inv.column(j);
        let target = a_inv.column(j);
        // same point as Q_j in the old chart, and equal to ± the column of A⁻¹
        pair.second.vertices()[j].represented_by(&col)
            && (col == target || col == target.scale(m.neg(1)))
    }))
}

/// The matrix B with columns b_i = (-1)^i q_i.
pub fn dual_basis(n: usize, p: u32) -> Result<FpMatrix> {
    let m = check_params(n, p)?;
    let cols = (0..=n)
        .map(|i| Ok(q_vector(i, n, p)?.scale(m.sign(i))))
        .collect::<Result<Vec<_>>>()?;
    Ok(FpMatrix::from_column_vectors(m, n + 1, &cols)?)
}

/// The nonzero λ with `m = λ·a`, if there is one.
pub fn congruence_factor(m: &FpMatrix, a: &FpMatrix) -> Option<u32> {
    if m.shape() != a.shape() || m.modulus() != a.modulus() {
        return None;
    }
    let f = a.modulus();
    let (i, j) = (0..a.rows())
        .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| a.get(i, j) != 0)?;
    let lambda = f.mul(m.get(i, j), f.inv(a.get(i, j)));
    let scaled = FpMatrix::new(
        f,
        a.rows(),
        a.cols(),
        a.to_rows()
            .into_iter()
            .flatten()
            .map(|e| f.mul(e, lambda))
            .collect(),
    )
    .ok()?;
    (lambda != 0 && &scaled == m).then_some(lambda)
}

/// Outcome of the perspectivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perspectivity {
    /// The common point of all lines P_k Q_k, if there is one.
    pub center: Option<ProjectivePoint>,
    /// How many of the lines P_k Q_k pass through `center`.
    pub lines_through_center: usize,
    /// -e_0 + q_0 and -e_2 + q_2 are linearly independent.
    pub witness_independent: bool,
}

/// The point where P_j Q_j and P_{j+1} Q_{j+1} meet, for even j: -e_j + q_j.
pub fn adjacent_lines_meet(j: usize, n: usize, p: u32) -> Result<FpVector> {
    let m = check_params(n, p)?;
    if j > n {
        return Err(MoebiusError::IndexOutOfRange { index: j, n });
    }
    Ok(q_vector(j, n, p)?.sub(&FpVector::unit(m, n + 1, j))?)
}

pub fn perspectivity(pair: &MoebiusPair) -> Result<Perspectivity> {
    let (n, m) = (pair.n(), pair.modulus());
    let lines = pair
        .first
        .vertices()
        .iter()
        .zip(pair.second.vertices())
        .map(|(x, y)| projgeom::span(&[x.clone(), y.clone()]))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut common = Subspace::whole(m, n);
    for l in &lines {
        common = projgeom::meet(&common, l)?;
    }
    let center = common.as_point();
    let lines_through_center = center
        .as_ref()
        .map_or(0, |c| lines.iter().filter(|l| l.contains(c)).count());
    let w0 = adjacent_lines_meet(0, n, m.get())?;
    let w2 = adjacent_lines_meet(2 % (n + 1), n, m.get())?;
    let witness_independent = FpMatrix::from_row_vectors(m, n + 1, &[w0, w2])?.rank() == 2;
    Ok(Perspectivity {
        center,
        lines_through_center,
        witness_independent,
    })
}

/// Center of perspectivity of the two simplices, if they are in perspective.
pub fn perspectivity_center(pair: &MoebiusPair) -> Result<Option<ProjectivePoint>> {
    Ok(perspectivity(pair)?.center)
}

/// A Möbius pair induced inside the span of some vertices of the first simplex.
///
/// `pair` is expressed in restricted coordinates (only the coordinates in
/// `indices`, which are the only nonzero ones on the span), with the
/// restricted polarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedPair {
    pub indices: Vec<usize>,
    pub ambient_n: usize,
    pub pair: MoebiusPair,
    pub ambient_first: Vec<ProjectivePoint>,
    pub ambient_second: Vec<ProjectivePoint>,
}

impl NestedPair {
    /// Embeds a restricted coordinate vector back into the ambient space.
    pub fn embed(&self, v: &FpVector) -> FpVector {
        let mut out = FpVector::zeros(v.modulus(), self.ambient_n + 1);
        for (a, &j) in self.indices.iter().enumerate() {
            out.set(j, v.get(a));
        }
        out
    }
}

/// The nested pair spanned by `{P_j : j ∈ indices}`, `indices.len() = k + 1` with k odd, k ≥ 3.
///
/// Its second simplex is found geometrically: the vertex opposite `P_{j_i}`
/// is the pole, under the polarity induced on the span S, of the face of
/// `{P_j}` opposite `P_{j_i}`, i.e. `π(face) ∩ S`.
pub fn nested_pair(pair: &MoebiusPair, indices: &[usize]) -> Result<NestedPair> {
    let (n, m) = (pair.n(), pair.modulus());
    check_indices(indices, n)?;
    if indices.len() % 2 == 1 || indices.is_empty() {
        return Err(MoebiusError::NestedParity(indices.len()));
    }
    if indices.len() == 2 {
        return Err(MoebiusError::DegenerateNested);
    }
    let ambient_first: Vec<ProjectivePoint> = indices
        .iter()
        .map(|&j| pair.first.vertices()[j].clone())
        .collect();
    if ambient_first
        .iter()
        .zip(indices)
        .any(|(x, &j)| *x != ProjectivePoint::basis(m, n, j))
    {
        return Err(MoebiusError::NotStandard);
    }
    let s = projgeom::span(&ambient_first)?;
    let ambient_second = (0..indices.len())
        .map(|i| {
            let face: Vec<_> = ambient_first
                .iter()
                .enumerate()
                .filter(|&(a, _)| a != i)
                .map(|(_, x)| x.clone())
                .collect();
            let pole = projgeom::meet(&pair.polarity.polar_image(&projgeom::span(&face)?)?, &s)?;
            pole.as_point()
                .ok_or(MoebiusError::NotASimplex(indices.len()))
        })
        .collect::<Result<Vec<_>>>()?;

    let k = indices.len() - 1;
    let restrict = |x: &ProjectivePoint| ProjectivePoint::new(x.coords().restrict(indices));
    let first = Simplex::new((0..=k).map(|a| ProjectivePoint::basis(m, k, a)).collect())?;
    let second = Simplex::new(
        ambient_second
            .iter()
            .map(restrict)
            .collect::<std::result::Result<Vec<_>, _>>()?,
    )?;
    let polarity = NullPolarity::new(pair.polarity.form().principal_submatrix(indices))?;
    Ok(NestedPair {
        indices: indices.to_vec(),
        ambient_n: n,
        pair: MoebiusPair::new(first, second, polarity)?,
        ambient_first,
        ambient_second,
    })
}

/// All construction points `P_J` for odd-size index sets J (singletons
/// included), checked for pairwise distinctness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub p: u32,
    /// Index sets ordered by size, then lexicographically.
    pub points: Vec<(Vec<usize>, ProjectivePoint)>,
    pub distinct: usize,
}

impl CensusReport {
    pub fn expected(&self) -> u64 {
        1u64 << self.n
    }

    pub fn all_distinct(&self) -> bool {
        self.distinct == self.points.len()
    }

    pub fn is_complete(&self) -> bool {
        self.all_distinct() && self.points.len() as u64 == self.expected()
    }
}

/// Odd-size subsets of 0..=n, by size and then lexicographically.
pub fn odd_index_sets(n: usize) -> Vec<Vec<usize>> {
    let mut sets: Vec<Vec<usize>> = (1u64..1u64 << (n + 1))
        .filter(|mask| mask.count_ones() % 2 == 1)
        .map(|mask| (0..=n).filter(|&j| mask >> j & 1 == 1).collect())
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets
}

pub fn point_census(n: usize, p: u32) -> Result<CensusReport> {
    let m = check_params(n, p)?;
    if n >= 63 {
        return Err(MoebiusError::IndexOutOfRange { index: n, n: 62 });
    }
    let points = odd_index_sets(n)
        .into_iter()
        .map(|set| {
            let x = if set.len() == 1 {
                ProjectivePoint::basis(m, n, set[0])
            } else {
                intersection_point(&set, n, p)?.point
            };
            Ok((set, x))
        })
        .collect::<Result<Vec<_>>>()?;
    let distinct = points.iter().map(|(_, x)| x).collect::<BTreeSet<_>>().len();
    Ok(CensusReport {
        n,
        p,
        points,
        distinct,
    })
}

/// Meaning of a point of PG(n,2) with respect to the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// The construction point `P_J` with J the support.
    OddWeight { indices: Vec<usize> },
    /// The perspectivity center of the nested pair on the support (weight ≥ 4).
    EvenWeightCenter { weight: usize, indices: Vec<usize> },
    /// Where the edge `P_i P_j` meets the polar hyperplane of the all-ones point.
    EdgePoint { vertices: (usize, usize) },
}

/// Classifies a nonzero vector of GF(2)^(n+1) by its weight, checking the
/// claimed role geometrically.
pub fn classify_gf2_point(v: &FpVector) -> Result<Classification> {
    let p = v.modulus().get();
    if p != 2 {
        return Err(MoebiusError::NotBinary(p));
    }
    if v.len() % 2 == 1 {
        return Err(MoebiusError::OddLength(v.len()));
    }
    if v.is_zero() {
        return Err(MoebiusError::ZeroVector);
    }
    let n = v.len() - 1;
    let support: Vec<usize> = (0..=n).filter(|&j| v.get(j) == 1).collect();
    let w = support.len();
    let point = ProjectivePoint::new(v.clone())?;
    let mismatch = || MoebiusError::NotASimplex(w);

    if w % 2 == 1 {
        let expected = if w == 1 {
            ProjectivePoint::basis(v.modulus(), n, support[0])
        } else {
            intersection_point(&support, n, 2)?.point
        };
        if expected != point {
            return Err(mismatch());
        }
        return Ok(Classification::OddWeight { indices: support });
    }
    if w == 2 {
        let pol = build_a(n, 2)?;
        let c = ProjectivePoint::new(FpVector::new(v.modulus(), vec![1; n + 1]))?;
        let edge = projgeom::span(&[
            ProjectivePoint::basis(v.modulus(), n, support[0]),
            ProjectivePoint::basis(v.modulus(), n, support[1]),
        ])?;
        let on_edge = projgeom::meet(&edge, &pol.polar_hyperplane(&c)?)?;
        if on_edge.as_point() != Some(point) {
            return Err(mismatch());
        }
        return Ok(Classification::EdgePoint {
            vertices: (support[0], support[1]),
        });
    }
    let full = build_moebius_pair(n, 2)?;
    let nested = nested_pair(&full, &support)?;
    let center = perspectivity_center(&nested.pair)?.ok_or_else(mismatch)?;
    if ProjectivePoint::new(nested.embed(center.coords()))? != point {
        return Err(mismatch());
    }
    Ok(Classification::EvenWeightCenter {
        weight: w,
        indices: support,
    })
}
