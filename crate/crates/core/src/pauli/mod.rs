//! Generalized Pauli groups on N qudits of prime dimension d.
//!
//! An element is a phase exponent together with a symplectic vector in
//! GF(d)^(2N), laid out as N blocks `(x_i, z_i)`. The group modulo its
//! center is the vector space of symplectic vectors, and two elements
//! commute exactly when their vectors are orthogonal for the alternating
//! form `diag(K, …, K)`.
//!
//! For d = 2 the block `(a, b)` stands for the single-qubit matrix
//! `σ(1,0) = σ_x`, `σ(0,1) = σ_y`, `σ(1,1) = σ_z`, and the phase is a power
//! of i (center of order 4). For odd d the block stands for `X^a Z^b` with
//! `Z X = ω X Z`, and the phase is a power of ω (center of order d).

mod demo;
mod oracle;
mod theorem;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fflinalg::{FpMatrix, FpVector, LinalgError, Modulus};
use crate::moebius::MoebiusError;
use crate::projgeom::{GeometryError, ProjectivePoint};

pub use demo::{point_of_label, three_qubit_demo, DemoReport, NestedTetrahedra};
pub use oracle::{kron_oracle, oracle_commutes, GaussianInt, GaussianMatrix};
pub use theorem::{
    basis_change_t, find_symplectic_to_a, geometric_simplex_check, has_common_commuting_element,
    is_simplex_family, lift_pair_to_operators, verify_theorem2, ClauseReport, Theorem2Report,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("shape mismatch: {0} vs {1} qudits")]
    QuditMismatch(usize, usize),
    #[error("dimension mismatch: d = {0} vs d = {1}")]
    DimensionMismatch(u32, u32),
    #[error("symplectic vector length {0} is odd")]
    OddLength(usize),
    #[error("invalid Pauli symbol {0:?}; expected one of 0, x, y, z")]
    InvalidSymbol(char),
    #[error("label notation needs d = 2 (got {0})")]
    NotQubit(u32),
    #[error("central elements do not represent a point")]
    Central,
    #[error("family is empty")]
    EmptyFamily,
    #[error("families have different sizes: {0} vs {1}")]
    FamilySizes(usize, usize),
    #[error("matrix oracle supports at most {max} qubits (got {got})")]
    TooManyQubits { got: usize, max: usize },
    #[error("could not find a symplectic basis change: {0}")]
    FinderFailed(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Moebius(#[from] MoebiusError),
}

pub type Result<T> = std::result::Result<T, PauliError>;

/// Order of the center: 4 for qubits, d otherwise.
pub fn phase_modulus(d: Modulus) -> u32 {
    if d.get() == 2 {
        4
    } else {
        d.get()
    }
}

/// An element of the generalized Pauli group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliElement {
    phase_exp: u32,
    sympvec: FpVector,
}

impl PauliElement {
    pub fn new(phase_exp: u32, sympvec: FpVector) -> Result<Self> {
        if sympvec.len() % 2 == 1 {
            return Err(PauliError::OddLength(sympvec.len()));
        }
        let pm = phase_modulus(sympvec.modulus());
        Ok(PauliElement {
            phase_exp: phase_exp % pm,
            sympvec,
        })
    }

    /// The element with phase 0 over the given vector.
    pub fn canonical(sympvec: FpVector) -> Result<Self> {
        Self::new(0, sympvec)
    }

    pub fn identity(d: Modulus, qudits: usize) -> Self {
        PauliElement {
            phase_exp: 0,
            sympvec: FpVector::zeros(d, 2 * qudits),
        }
    }

    pub fn from_label(label: &PauliLabel) -> Self {
        PauliElement {
            phase_exp: 0,
            sympvec: label_to_vector(label),
        }
    }

    pub fn phase_exp(&self) -> u32 {
        self.phase_exp
    }

    pub fn sympvec(&self) -> &FpVector {
        &self.sympvec
    }

    pub fn d(&self) -> Modulus {
        self.sympvec.modulus()
    }

    pub fn qudits(&self) -> usize {
        self.sympvec.len() / 2
    }

    pub fn is_central(&self) -> bool {
        self.sympvec.is_zero()
    }

    /// Label notation, for qubits only.
    pub fn label(&self) -> Result<PauliLabel> {
        vector_to_label(&self.sympvec)
    }

    fn check(&self, other: &PauliElement) -> Result<()> {
        if self.d() != other.d() {
            return Err(PauliError::DimensionMismatch(
                self.d().get(),
                other.d().get(),
            ));
        }
        if self.qudits() != other.qudits() {
            return Err(PauliError::QuditMismatch(self.qudits(), other.qudits()));
        }
        Ok(())
    }
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label() {
            Ok(l) => write!(f, "i^{} {}", self.phase_exp, l),
            Err(_) => write!(f, "w^{} {}", self.phase_exp, self.sympvec),
        }
    }
}

/// Single-qubit index: 0 = σ_0, 1 = σ_x, 2 = σ_y, 3 = σ_z.
fn qubit_index(a: u32, b: u32) -> u8 {
    match (a, b) {
        (0, 0) => 0,
        (1, 0) => 1,
        (0, 1) => 2,
        _ => 3,
    }
}

/// Exponent c with σ_u σ_v = i^c σ_{u+v}.
fn qubit_product_phase(u: u8, v: u8) -> u32 {
    if u == 0 || v == 0 || u == v {
        0
    } else if (u % 3) + 1 == v {
        // x·y, y·z, z·x
        1
    } else {
        3
    }
}

/// Group product; phases follow the matrix representation exactly.
pub fn multiply(a: &PauliElement, b: &PauliElement) -> Result<PauliElement> {
    a.check(b)?;
    let d = a.d();
    let pm = phase_modulus(d);
    let (va, vb) = (a.sympvec.entries(), b.sympvec.entries());
    let mut phase = (a.phase_exp + b.phase_exp) % pm;
    for q in 0..a.qudits() {
        let (xa, za, xb, zb) = (va[2 * q], va[2 * q + 1], vb[2 * q], vb[2 * q + 1]);
        let c = if d.get() == 2 {
            qubit_product_phase(qubit_index(xa, za), qubit_index(xb, zb))
        } else {
            // Z^za X^xb = ω^(za·xb) X^xb Z^za
            d.mul(za, xb)
        };
        phase = (phase + c) % pm;
    }
    PauliElement::new(phase, a.sympvec.add(&b.sympvec)?)
}

pub fn inverse(a: &PauliElement) -> PauliElement {
    let d = a.d();
    let pm = phase_modulus(d);
    let v = a.sympvec.entries();
    let extra = if d.get() == 2 {
        0
    } else {
        // (X^x Z^z)⁻¹ = Z^-z X^-x = ω^(xz) X^-x Z^-z
        (0..a.qudits()).fold(0, |acc, q| d.add(acc, d.mul(v[2 * q], v[2 * q + 1])))
    };
    PauliElement {
        phase_exp: ((pm - a.phase_exp) % pm + extra) % pm,
        sympvec: a.sympvec.scale(d.neg(1)),
    }
}

/// The group commutator `a b a⁻¹ b⁻¹`, always central.
pub fn group_commutator(a: &PauliElement, b: &PauliElement) -> Result<PauliElement> {
    let ab = multiply(a, b)?;
    let ab_ainv = multiply(&ab, &inverse(a))?;
    multiply(&ab_ainv, &inverse(b))
}

/// ψ_g of a central element: the exponent m with element = g^m, where g = -1
/// for qubits and g = ω for odd d.
pub fn central_exponent(z: &PauliElement) -> Option<u32> {
    if !z.is_central() {
        return None;
    }
    if z.d().get() == 2 {
        match z.phase_exp {
            0 => Some(0),
            2 => Some(1),
            _ => None,
        }
    } else {
        Some(z.phase_exp)
    }
}

/// `diag(K, …, K)` on `qudits` blocks over GF(d).
pub fn symplectic_matrix(qudits: usize, d: Modulus) -> FpMatrix {
    let k = FpMatrix::from_signed_rows(d, &[&[0, -1], &[1, 0]]).expect("2x2 literal");
    FpMatrix::block_diag(d, &vec![k; qudits]).expect("blocks share the field")
}

/// The symplectic form of two vectors in GF(d)^(2N).
pub fn symplectic_form(u: &FpVector, v: &FpVector) -> Result<u32> {
    if u.len() % 2 == 1 {
        return Err(PauliError::OddLength(u.len()));
    }
    if u.len() != v.len() {
        return Err(PauliError::QuditMismatch(u.len() / 2, v.len() / 2));
    }
    let d = u.modulus();
    let (a, b) = (u.entries(), v.entries());
    Ok((0..u.len() / 2).fold(0, |acc, q| {
        // (x, z) K (x', z')ᵀ = -x z' + z x'
        let term = d.sub(d.mul(a[2 * q + 1], b[2 * q]), d.mul(a[2 * q], b[2 * q + 1]));
        d.add(acc, term)
    }))
}

/// ψ_g([a, b]) read off the symplectic vectors; zero iff a and b commute.
pub fn commutator_exponent(a: &PauliElement, b: &PauliElement) -> Result<u32> {
    a.check(b)?;
    symplectic_form(&a.sympvec, &b.sympvec)
}

pub fn commutes(a: &PauliElement, b: &PauliElement) -> Result<bool> {
    Ok(commutator_exponent(a, b)? == 0)
}

/// Label notation for qubit operators modulo phases, e.g. `x0z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliLabel(String);

impl PauliLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn qubits(&self) -> usize {
        self.0.len()
    }
}

impl FromStr for PauliLabel {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(c) = s.chars().find(|c| !matches!(c, '0' | 'x' | 'y' | 'z')) {
            return Err(PauliError::InvalidSymbol(c));
        }
        Ok(PauliLabel(s.to_owned()))
    }
}

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `0 ↦ (0,0)`, `x ↦ (1,0)`, `y ↦ (0,1)`, `z ↦ (1,1)`, concatenated.
pub fn label_to_vector(label: &PauliLabel) -> FpVector {
    let two = Modulus::new(2).expect("2 is prime");
    FpVector::new(
        two,
        label.0.chars().flat_map(|c| match c {
            'x' => [1, 0],
            'y' => [0, 1],
            'z' => [1, 1],
            _ => [0, 0],
        }),
    )
}

pub fn vector_to_label(v: &FpVector) -> Result<PauliLabel> {
    if v.modulus().get() != 2 {
        return Err(PauliError::NotQubit(v.modulus().get()));
    }
    if v.len() % 2 == 1 {
        return Err(PauliError::OddLength(v.len()));
    }
    Ok(PauliLabel(
        v.entries()
            .chunks(2)
            .map(|b| match qubit_index(b[0], b[1]) {
                0 => '0',
                1 => 'x',
                2 => 'y',
                _ => 'z',
            })
            .collect(),
    ))
}

/// The point of PG(2N-1, d) an element represents.
pub fn to_point(a: &PauliElement) -> Result<ProjectivePoint> {
    if a.is_central() {
        return Err(PauliError::Central);
    }
    Ok(ProjectivePoint::new(a.sympvec.clone())?)
}

/// Every group element representing the point `x`: all nonzero multiples of
/// its vector, each with every central phase.
pub fn representatives(x: &ProjectivePoint) -> Result<Vec<PauliElement>> {
    let d = x.modulus();
    if x.coords().len() % 2 == 1 {
        return Err(PauliError::OddLength(x.coords().len()));
    }
    let pm = phase_modulus(d);
    let mut out = Vec::with_capacity(((d.get() - 1) * pm) as usize);
    for k in 1..d.get() {
        let v = x.coords().scale(k);
        for phase in 0..pm {
            out.push(PauliElement::new(phase, v.clone())?);
        }
    }
    Ok(out)
}
