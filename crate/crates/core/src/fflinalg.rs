//! Exact linear algebra over prime fields GF(p).
//!
//! Residues are kept as canonical least non-negative representatives in a
//! `u32`; the modulus is a prime below 2^16, so any product of two residues
//! fits comfortably in a `u64` accumulator before reduction.
//!
//! Elimination uses the first nonzero entry of a column as pivot. Over an
//! exact field there is no conditioning to worry about, and the fixed rule
//! makes every output (echelon forms, kernel bases) reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("p must be prime (got {0})")]
    NotPrime(u32),
    #[error("p must be below 65536 (got {0})")]
    ModulusTooLarge(u32),
    #[error("modulus mismatch: GF({0}) vs GF({1})")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular: rank {rank} of {size}")]
    Singular { rank: usize, size: usize },
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, LinalgError>;

/// Trial division; the moduli handled here are at most 16 bits.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A validated prime modulus p < 2^16.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(p: u32) -> Result<Self> {
        if p > u16::MAX as u32 {
            return Err(LinalgError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Modulus(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(
            !a.is_multiple_of(self.0),
            "zero has no inverse in GF({})",
            self.0
        );
        let (mut r0, mut r1) = (self.0 as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        self.reduce(t0)
    }

    pub fn pow(self, base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        let mut b = base % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// (-1)^e as a field element: `p - 1` for odd `e`, 1 otherwise.
    #[inline]
    pub fn sign(self, e: usize) -> u32 {
        if e.is_multiple_of(2) {
            1
        } else {
            self.neg(1)
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

/// A single element of GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    modulus: Modulus,
}

impl FpScalar {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        FpScalar {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| FpScalar {
            value: self.modulus.inv(self.value),
            modulus: self.modulus,
        })
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.modulus, rhs.modulus);
        FpScalar {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.modulus, rhs.modulus);
        FpScalar {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.modulus, rhs.modulus);
        FpScalar {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A column vector over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector {
    modulus: Modulus,
    entries: Vec<u32>,
}

impl FpVector {
    /// Entries are reduced mod p.
    pub fn new(modulus: Modulus, entries: impl IntoIterator<Item = u32>) -> Self {
        let p = modulus.get();
        FpVector {
            modulus,
            entries: entries.into_iter().map(|e| e % p).collect(),
        }
    }

    /// Builds a vector from signed integers, e.g. `[-1, 1, -1]`.
    pub fn from_signed(modulus: Modulus, entries: &[i64]) -> Self {
        FpVector {
            modulus,
            entries: entries.iter().map(|&e| modulus.reduce(e)).collect(),
        }
    }

    pub fn zeros(modulus: Modulus, len: usize) -> Self {
        FpVector {
            modulus,
            entries: vec![0; len],
        }
    }

    /// Standard basis vector e_i of length `len`.
    pub fn unit(modulus: Modulus, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(modulus, len);
        v.entries[i] = 1;
        v
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn scalar(&self, i: usize) -> FpScalar {
        FpScalar {
            value: self.entries[i],
            modulus: self.modulus,
        }
    }

    pub fn set(&mut self, i: usize, value: u32) {
        self.entries[i] = value % self.modulus.get();
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.entries.iter().position(|&e| e != 0)
    }

    fn check(&self, other: &FpVector, op: &'static str) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(LinalgError::ModulusMismatch(
                self.modulus.get(),
                other.modulus.get(),
            ));
        }
        if self.len() != other.len() {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: (self.len(), 1),
                right: (other.len(), 1),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &FpVector) -> Result<u32> {
        self.check(other, "dot")?;
        let p = self.modulus.get() as u64;
        let s = self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
        Ok(s as u32)
    }

    pub fn add(&self, other: &FpVector) -> Result<FpVector> {
        self.check(other, "add")?;
        let m = self.modulus;
        Ok(FpVector {
            modulus: m,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| m.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &FpVector) -> Result<FpVector> {
        self.check(other, "sub")?;
        let m = self.modulus;
        Ok(FpVector {
            modulus: m,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| m.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: u32) -> FpVector {
        let m = self.modulus;
        FpVector {
            modulus: m,
            entries: self.entries.iter().map(|&a| m.mul(a, c)).collect(),
        }
    }

    /// Coordinates at the given positions, in the given order.
    pub fn restrict(&self, positions: &[usize]) -> FpVector {
        FpVector {
            modulus: self.modulus,
            entries: positions.iter().map(|&i| self.entries[i]).collect(),
        }
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    modulus: Modulus,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl FpMatrix {
    pub fn new(modulus: Modulus, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        let p = modulus.get();
        Ok(FpMatrix {
            modulus,
            rows,
            cols,
            entries: entries.into_iter().map(|e| e % p).collect(),
        })
    }

    pub fn zeros(modulus: Modulus, rows: usize, cols: usize) -> Self {
        FpMatrix {
            modulus,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(modulus: Modulus, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows. All rows must have equal length.
    pub fn from_signed_rows(modulus: Modulus, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::EntryCount {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r.iter().map(|&e| modulus.reduce(e)));
        }
        Ok(FpMatrix {
            modulus,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Stacks vectors as rows. `width` is used when `rows` is empty.
    pub fn from_row_vectors(modulus: Modulus, width: usize, rows: &[FpVector]) -> Result<Self> {
        let mut m = Self::zeros(modulus, rows.len(), width);
        for (i, r) in rows.iter().enumerate() {
            if r.modulus() != modulus {
                return Err(LinalgError::ModulusMismatch(
                    modulus.get(),
                    r.modulus().get(),
                ));
            }
            if r.len() != width {
                return Err(LinalgError::DimensionMismatch {
                    op: "from_row_vectors",
                    left: (rows.len(), width),
                    right: (1, r.len()),
                });
            }
            m.entries[i * width..(i + 1) * width].copy_from_slice(r.entries());
        }
        Ok(m)
    }

    /// Places vectors as columns. `height` is used when `cols` is empty.
    pub fn from_column_vectors(modulus: Modulus, height: usize, cols: &[FpVector]) -> Result<Self> {
        Ok(Self::from_row_vectors(modulus, height, cols)?.transpose())
    }

    /// Block-diagonal matrix built from square or rectangular blocks.
    pub fn block_diag(modulus: Modulus, blocks: &[FpMatrix]) -> Result<Self> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(modulus, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            if b.modulus != modulus {
                return Err(LinalgError::ModulusMismatch(modulus.get(), b.modulus.get()));
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(m)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[i * self.cols + j] = value % self.modulus.get();
    }

    pub fn row(&self, i: usize) -> FpVector {
        FpVector {
            modulus: self.modulus,
            entries: self.entries[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> FpVector {
        FpVector {
            modulus: self.modulus,
            entries: (0..self.rows).map(|i| self.get(i, j)).collect(),
        }
    }

    /// Rows as plain residue vectors, for display and serialization.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.modulus, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn neg(&self) -> FpMatrix {
        let m = self.modulus;
        FpMatrix {
            entries: self.entries.iter().map(|&e| m.neg(e)).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let m = self.modulus;
        Ok(FpMatrix {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| m.add(a, b))
                .collect(),
            ..self.clone()
        })
    }

    /// Principal submatrix on the given (row = column) indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> FpMatrix {
        let k = indices.len();
        let mut s = Self::zeros(self.modulus, k, k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                s.entries[a * k + b] = self.get(i, j);
            }
        }
        s
    }

    fn same_field(&self, other: &FpMatrix) -> Result<()> {
        if self.modulus != other.modulus {
            Err(LinalgError::ModulusMismatch(
                self.modulus.get(),
                other.modulus.get(),
            ))
        } else {
            Ok(())
        }
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let p = self.modulus.get() as u64;
        let mut out = Self::zeros(self.modulus, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                    // at most 2^32 per term; reduce well before overflow
                    if k & 0xff == 0xff {
                        acc %= p;
                    }
                }
                out.entries[i * other.cols + j] = (acc % p) as u32;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &FpVector) -> Result<FpVector> {
        if self.modulus != v.modulus() {
            return Err(LinalgError::ModulusMismatch(
                self.modulus.get(),
                v.modulus().get(),
            ));
        }
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let p = self.modulus.get() as u64;
        let entries = (0..self.rows)
            .map(|i| {
                let acc = (0..self.cols).fold(0u64, |acc, k| {
                    (acc + self.get(i, k) as u64 * v.get(k) as u64) % p
                });
                acc as u32
            })
            .collect();
        Ok(FpVector {
            modulus: self.modulus,
            entries,
        })
    }

    /// The bilinear form `xᵀ · self · y`.
    pub fn bilinear(&self, x: &FpVector, y: &FpVector) -> Result<u32> {
        x.dot(&self.mul_vec(y)?)
    }

    /// Reduced row echelon form and the pivot columns, in order.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let m = self.modulus;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..a.cols {
                    a.entries.swap(pr * a.cols + j, r * a.cols + j);
                }
            }
            let inv = m.inv(a.get(r, c));
            for j in c..a.cols {
                let v = m.mul(a.get(r, j), inv);
                a.entries[r * a.cols + j] = v;
            }
            for i in 0..a.rows {
                if i == r {
                    continue;
                }
                let f = a.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in c..a.cols {
                    let v = m.sub(a.get(i, j), m.mul(f, a.get(r, j)));
                    a.entries[i * a.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact inverse; a singular matrix reports the rank it has.
    pub fn inverse(&self) -> Result<FpMatrix> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.modulus, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.entries[i * 2 * n + j] = self.get(i, j);
            }
            aug.entries[i * 2 * n + n + i] = 1;
        }
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().take_while(|&&c| c < n).count();
        if rank < n {
            return Err(LinalgError::Singular { rank, size: n });
        }
        let mut inv = Self::zeros(self.modulus, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.entries[i * n + j] = red.get(i, n + j);
            }
        }
        Ok(inv)
    }

    /// Basis of the right null space.
    ///
    /// One vector per free column, in increasing column order; each has a 1
    /// at its own free column and 0 at every other free column.
    pub fn kernel(&self) -> Vec<FpVector> {
        let m = self.modulus;
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = FpVector::zeros(m, self.cols);
                v.entries[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v.entries[pc] = m.neg(red.get(r, f));
                }
                v
            })
            .collect()
    }

    /// `tᵀ · self · t`.
    pub fn congruence_transform(&self, t: &FpMatrix) -> Result<FpMatrix> {
        if !self.is_square() || t.rows != self.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "congruence_transform",
                left: self.shape(),
                right: t.shape(),
            });
        }
        t.transpose().mul(self)?.mul(t)
    }

    /// Skew-symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let m = self.modulus;
        (0..self.rows)
            .all(|i| self.get(i, i) == 0 && (0..i).all(|j| self.get(i, j) == m.neg(self.get(j, i))))
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
