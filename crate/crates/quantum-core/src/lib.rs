//! Dense simulation of one to three qubits: states, a generator-based gate
//! catalog with fractional propagators, projective measurement with branch
//! tracking, branch mixing, reduced states and expectation values.

pub mod circuit;
pub mod error;
pub mod gate;
pub mod linalg;
pub mod measure;
pub mod observe;
pub mod pauli;
pub mod state;

pub use circuit::{BitCondition, Circuit, Snapshot, Step};
pub use error::{CoreError, Result};
pub use gate::{apply_gate, apply_gate_fraction, hamiltonian_evolution, GateKind, GateSpec};
pub use linalg::{CMatrix, CVector, C64};
pub use measure::{
    measure_density, measure_qubit, mix_branches, sample_outcomes, MeasurementBranch, Outcome,
};
pub use observe::{bloch_vector, expectation, partial_trace, spin_correlation};
pub use pauli::{pauli_str, pauli_string, sigma_dir, Pauli};
pub use state::{DensityOperator, PureState, QuantumState, MAX_QUBITS};

/// Unit vector for polar angle `theta` (from +z) and azimuth `phi` (from +x toward +y).
pub fn direction(theta: f64, phi: f64) -> [f64; 3] {
    [
        theta.sin() * phi.cos(),
        theta.sin() * phi.sin(),
        theta.cos(),
    ]
}

/// Frequently used states.
pub mod states {
    use std::f64::consts::FRAC_1_SQRT_2;

    use crate::linalg::C64;
    use crate::state::PureState;

    fn from(amps: &[(usize, C64)], n: usize) -> PureState {
        let mut v = crate::linalg::CVector::zeros(1 << n);
        for &(i, a) in amps {
            v[i] = a;
        }
        PureState::normalized(v).expect("literal state")
    }

    fn r(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    /// `(|00⟩ + |11⟩)/√2`.
    pub fn phi_plus() -> PureState {
        from(&[(0, r(FRAC_1_SQRT_2)), (3, r(FRAC_1_SQRT_2))], 2)
    }
    /// `(|00⟩ − |11⟩)/√2`.
    pub fn phi_minus() -> PureState {
        from(&[(0, r(FRAC_1_SQRT_2)), (3, r(-FRAC_1_SQRT_2))], 2)
    }
    /// `(|01⟩ + |10⟩)/√2`.
    pub fn psi_plus() -> PureState {
        from(&[(1, r(FRAC_1_SQRT_2)), (2, r(FRAC_1_SQRT_2))], 2)
    }
    /// Singlet `(|01⟩ − |10⟩)/√2`.
    pub fn singlet() -> PureState {
        from(&[(1, r(FRAC_1_SQRT_2)), (2, r(-FRAC_1_SQRT_2))], 2)
    }
    /// `(|000⟩ + |111⟩)/√2`.
    pub fn ghz() -> PureState {
        from(&[(0, r(FRAC_1_SQRT_2)), (7, r(FRAC_1_SQRT_2))], 3)
    }
    /// `(|001⟩ + |010⟩ + |100⟩)/√3`.
    pub fn w() -> PureState {
        from(&[(1, r(1.0)), (2, r(1.0)), (4, r(1.0))], 3)
    }
    /// `cos(θ/2)|00⟩ + sin(θ/2)|11⟩`.
    pub fn schmidt(theta: f64) -> PureState {
        from(&[(0, r((theta / 2.0).cos())), (3, r((theta / 2.0).sin()))], 2)
    }
    /// `(|0⟩ + |1⟩)/√2`.
    pub fn plus() -> PureState {
        from(&[(0, r(1.0)), (1, r(1.0))], 1)
    }
    /// `(|0⟩ − |1⟩)/√2`.
    pub fn minus() -> PureState {
        from(&[(0, r(1.0)), (1, r(-1.0))], 1)
    }
    /// `(|0⟩ + i|1⟩)/√2`.
    pub fn right() -> PureState {
        from(&[(0, r(1.0)), (1, C64::new(0.0, 1.0))], 1)
    }
}
