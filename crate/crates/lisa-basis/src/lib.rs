//! Hermitian LISA tensor operator basis for one to three qubits.
//!
//! Operators are grouped by label ℓ′ (subsystem, trilinear permutation class τ
//! and point parity) and indexed by rank `j` and order `m`. The basis is
//! orthonormal under `Tr(T_a T_b)` and complete, so any Hermitian operator
//! decomposes into real coefficients and is rebuilt exactly from them.

pub mod basis;
pub mod error;
pub mod label;
pub mod operators;

pub use basis::{
    decompose, label_catalog, lisa_operator, reconstruct, BasisKey, CoefficientRecord, LabelInfo,
    LisaBasis, LisaDecomposition, LisaOperator,
};
pub use error::{LisaError, Result};
pub use label::{BeadLabel, Parity, Tau};
