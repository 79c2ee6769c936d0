//! Exact matrix model of qubit Pauli operators, with Gaussian-integer
//! entries. Used as an independent check on `multiply` and on the
//! symplectic commutation test.

use std::ops::{Add, Mul};

use super::{qubit_index, PauliElement, PauliError, Result};

/// Largest qubit count the dense oracle accepts (16x16 matrices).
pub const MAX_ORACLE_QUBITS: usize = 4;

/// a + b·i with integer parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    /// i^k
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: GaussianInt) -> GaussianInt {
        GaussianInt::new(self.re + o.re, self.im + o.im)
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: GaussianInt) -> GaussianInt {
        GaussianInt::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

/// Square matrix of Gaussian integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianMatrix {
    dim: usize,
    entries: Vec<GaussianInt>,
}

impl GaussianMatrix {
    pub fn from_rows(rows: &[&[GaussianInt]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        GaussianMatrix {
            dim,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![GaussianInt::ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = GaussianInt::ONE;
        }
        GaussianMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> GaussianInt {
        self.entries[i * self.dim + j]
    }

    pub fn scale(&self, c: GaussianInt) -> Self {
        GaussianMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|&e| e * c).collect(),
        }
    }

    pub fn matmul(&self, o: &GaussianMatrix) -> Self {
        assert_eq!(self.dim, o.dim);
        let n = self.dim;
        let mut entries = vec![GaussianInt::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == GaussianInt::ZERO {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j] + a * o.get(k, j);
                }
            }
        }
        GaussianMatrix { dim: n, entries }
    }

    pub fn kron(&self, o: &GaussianMatrix) -> Self {
        let (n, m) = (self.dim, o.dim);
        let dim = n * m;
        let mut entries = vec![GaussianInt::ZERO; dim * dim];
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                for k in 0..m {
                    for l in 0..m {
                        entries[(i * m + k) * dim + j * m + l] = a * o.get(k, l);
                    }
                }
            }
        }
        GaussianMatrix { dim, entries }
    }
}

/// σ_0, σ_x, σ_y, σ_z by index 0..4.
pub fn sigma(index: u8) -> GaussianMatrix {
    let (o, l, i) = (GaussianInt::ZERO, GaussianInt::ONE, GaussianInt::I);
    let m = GaussianInt::new(-1, 0);
    let mi = GaussianInt::new(0, -1);
    match index {
        0 => GaussianMatrix::from_rows(&[&[l, o], &[o, l]]),
        1 => GaussianMatrix::from_rows(&[&[o, l], &[l, o]]),
        2 => GaussianMatrix::from_rows(&[&[o, mi], &[i, o]]),
        _ => GaussianMatrix::from_rows(&[&[l, o], &[o, m]]),
    }
}

/// `i^phase · σ(x_1,z_1) ⊗ … ⊗ σ(x_N,z_N)` as an exact 2^N x 2^N matrix.
pub fn kron_oracle(a: &PauliElement) -> Result<GaussianMatrix> {
    if a.d().get() != 2 {
        return Err(PauliError::NotQubit(a.d().get()));
    }
    if a.qudits() > MAX_ORACLE_QUBITS {
        return Err(PauliError::TooManyQubits {
            got: a.qudits(),
            max: MAX_ORACLE_QUBITS,
        });
    }
    let v = a.sympvec().entries();
    let m = (0..a.qudits()).fold(GaussianMatrix::identity(1), |acc, q| {
        acc.kron(&sigma(qubit_index(v[2 * q], v[2 * q + 1])))
    });
    Ok(m.scale(GaussianInt::i_pow(a.phase_exp())))
}

/// Compares `AB` with `BA` as exact matrices.
pub fn oracle_commutes(a: &PauliElement, b: &PauliElement) -> Result<bool> {
    let (ma, mb) = (kron_oracle(a)?, kron_oracle(b)?);
    Ok(ma.matmul(&mb) == mb.matmul(&ma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflinalg::{FpVector, Modulus};
    use crate::pauli::{commutes, multiply};

    fn el(label: &str) -> PauliElement {
        PauliElement::from_label(&label.parse().unwrap())
    }

    #[test]
    fn sigma_y_matrix() {
        let y = kron_oracle(&el("y")).unwrap();
        assert_eq!(y.get(0, 0), GaussianInt::ZERO);
        assert_eq!(y.get(0, 1), GaussianInt::new(0, -1));
        assert_eq!(y.get(1, 0), GaussianInt::new(0, 1));
        assert_eq!(y.get(1, 1), GaussianInt::ZERO);
    }

    #[test]
    fn paulis_square_to_identity() {
        for s in 0..4 {
            assert_eq!(sigma(s).matmul(&sigma(s)), GaussianMatrix::identity(2));
        }
        // σ_x σ_y = i σ_z
        assert_eq!(sigma(1).matmul(&sigma(2)), sigma(3).scale(GaussianInt::I));
    }

    #[test]
    fn oracle_guards() {
        let three = Modulus::new(3).unwrap();
        let a = PauliElement::identity(three, 1);
        assert_eq!(kron_oracle(&a), Err(PauliError::NotQubit(3)));
        let big = PauliElement::canonical(FpVector::zeros(Modulus::new(2).unwrap(), 10)).unwrap();
        assert!(matches!(
            kron_oracle(&big),
            Err(PauliError::TooManyQubits { .. })
        ));
    }

    #[test]
    fn two_qubit_homomorphism_and_commutation() {
        let labels: Vec<String> = ["0", "x", "y", "z"]
            .iter()
            .flat_map(|a| ["0", "x", "y", "z"].map(|b| format!("{a}{b}")))
            .collect();
        for la in &labels {
            for lb in &labels {
                for phase in 0..4 {
                    let a = PauliElement::new(phase, el(la).sympvec().clone()).unwrap();
                    let b = el(lb);
                    let prod = kron_oracle(&a).unwrap().matmul(&kron_oracle(&b).unwrap());
                    assert_eq!(kron_oracle(&multiply(&a, &b).unwrap()).unwrap(), prod);
                    assert_eq!(oracle_commutes(&a, &b).unwrap(), commutes(&a, &b).unwrap());
                }
            }
        }
    }
}
