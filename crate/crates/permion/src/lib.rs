//! Exact-arithmetic toolkit for the symmetric group and identical particles.
//!
//! The crate is organized around five layers:
//!
//! * [`perm`] — permutations in cycle notation, group enumeration,
//!   multiplication tables, and conjugacy classes of `S_n`.
//! * [`linalg`] — dense matrices over exact rationals.
//! * [`repr`] — the trivial, alternating, natural, regular, and standard
//!   representations, with exhaustive homomorphism verification, characters,
//!   symmetrizer images, and a floating-point Schur-Weyl commutation check.
//! * [`young`] — partitions, standard Young tableaux, the rational group
//!   algebra, and Young operators with idempotency verification.
//! * [`first_quant`] / [`second_quant`] — N-particle tensors with
//!   (anti)symmetrization, and occupation-number Fock spaces with sparse
//!   ladder operators satisfying the canonical (anti)commutation relations.
//!
//! Composition is right-to-left throughout: `(a * b)(i) = a(b(i))`, the right
//! factor acts first. All group-theoretic arithmetic is exact; floating point
//! appears only in bosonic ladder operators, the Schur-Weyl check, and the
//! Slater bridge back to first quantization.

pub mod caps;
pub mod cli;
pub mod first_quant;
pub mod linalg;
pub mod perm;
pub mod repr;
pub mod second_quant;
pub mod young;

pub use linalg::{Matrix, Rational};
pub use perm::Permutation;
