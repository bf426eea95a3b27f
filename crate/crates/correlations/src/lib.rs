//! Correlation functions of 1–3 qubit states and their Ursell separation.
//!
//! For pure states the total correlation `T` of local spin measurements splits
//! into a connected part `E`, which is nonzero only with entanglement, and a
//! compound part `C` built from products of lower-order terms. Removing `C`
//! from every Pauli coefficient of `ρ` gives the modified operator `ρ̃`, whose
//! beads are the E-Beads.

pub mod error;
pub mod operator;
pub mod ursell;

pub use error::{CorrelationError, Result};
pub use operator::{
    connected_operator, correlation_beads, operator_from_connected, entanglement_norm, CorrelationDecomposition, EntanglementNorm,
    OMIT_THRESHOLD,
};
pub use ursell::{compound_corr, connected_corr, total_corr, PURITY_TOL};
