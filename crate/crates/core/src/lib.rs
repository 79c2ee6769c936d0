//! Möbius pairs of simplices in PG(n,p) and the commutation structure of
//! generalized Pauli operators, computed exactly over prime fields.
//!
//! The crate is organized bottom-up:
//!
//! - [`fflinalg`]: matrices and vectors over GF(p), elimination, inverses and kernels.
//! - [`projgeom`]: points, subspaces, null polarities and conjugacy in PG(n,p).
//! - [`moebius`]: the null-polarity construction of a non-degenerate Möbius pair
//!   of n-simplices for odd n, its verification, nested pairs, the census of
//!   construction points and the classification of points of PG(n,2).
//! - [`pauli`]: generalized Pauli groups in symplectic form, simplex families of
//!   operators, the commutation pattern of a lifted pair, and the three-qubit case.
//! - [`cli`]: the `mobius-pauli` command-line tool.
//!
//! ```
//! use mobius_pauli::moebius::{build_moebius_pair, verify_moebius_pair};
//!
//! let pair = build_moebius_pair(5, 2).unwrap();
//! assert!(verify_moebius_pair(&pair).unwrap().is_valid());
//! ```

pub mod cli;
pub mod fflinalg;
pub mod moebius;
pub mod pauli;
pub mod projgeom;
