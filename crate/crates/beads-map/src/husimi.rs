//! Husimi function on spin-coherent product states.

use lisa_basis::{BeadLabel, Parity, Tau};
use quantum_core::{DensityOperator, PureState};

use crate::beads::BeadSet;
use crate::direction::SphericalDirection;
use crate::error::Result;
use crate::scaling::ScalingMode;

/// `|r⟩^⊗N` with every qubit pointing along `dir`.
pub fn coherent_state(n: usize, dir: SphericalDirection) -> Result<PureState> {
    let one = PureState::spin_up(dir.to_vector())?;
    let factors = vec![one; n];
    Ok(PureState::product(&factors)?)
}

/// `H(θ, φ) = ⟨s|ρ|s⟩`, without the historical `1/π` normalization.
pub fn husimi(rho: &DensityOperator, dir: SphericalDirection) -> Result<f64> {
    let s = coherent_state(rho.qubit_count(), dir)?;
    Ok(rho.fidelity_with(&s))
}

/// Fully symmetric label for a subset of qubits.
pub fn symmetric_label(subset: &[usize]) -> Option<BeadLabel> {
    match subset.len() {
        0 => Some(BeadLabel::identity()),
        1 => Some(BeadLabel::single(subset[0])),
        2 => Some(BeadLabel::pair(subset[0], subset[1], Parity::Even)),
        3 => BeadLabel::triple(Tau::T1, Parity::Odd).ok(),
        _ => None,
    }
}

/// `2^{-N} Σ_G b_G(θ, φ)` over every subset `G` of qubits, using the fully
/// symmetric bead of each subset.
pub fn husimi_from_beads(beads: &BeadSet, dir: SphericalDirection) -> Result<f64> {
    let beads = beads.rescaled(ScalingMode::Beads)?;
    let n = beads.qubit_count;
    let mut total = 0.0;
    for mask in 0usize..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|q| mask & (1 << q) != 0).collect();
        let label = symmetric_label(&subset).expect("subset of at most three qubits");
        total += beads.value(&label, dir)?;
    }
    Ok(total / (1 << n) as f64)
}
