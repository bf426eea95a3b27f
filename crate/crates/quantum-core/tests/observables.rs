mod common;

use common::*;
use quantum_core::{
    bloch_vector, expectation, partial_trace, pauli_str, spin_correlation, states, DensityOperator, PureState,
};

#[test]
fn bell_state_reduced_states_are_maximally_mixed() {
    let r = partial_trace(&states::phi_plus().density(), &[0]).unwrap();
    let mm = DensityOperator::maximally_mixed(1).unwrap();
    assert!(quantum_core::linalg::max_abs_diff(r.matrix(), mm.matrix()) < 1e-12);
    assert!(partial_trace(&states::phi_plus().density(), &[]).is_err());
}

#[test]
fn w_state_single_qubit_reduction() {
    let r = partial_trace(&states::w().density(), &[0]).unwrap();
    assert!((r.matrix()[(0, 0)].re - 2.0 / 3.0).abs() < 1e-12);
    assert!((r.matrix()[(1, 1)].re - 1.0 / 3.0).abs() < 1e-12);
    let b = bloch_vector(&states::w().density(), 2).unwrap();
    assert!((b[2] - 1.0 / 3.0).abs() < 1e-12);
}

#[test]
fn product_state_reduction_returns_factor() {
    let mut r = rng(2);
    let a = random_state(&mut r, 1);
    let b = random_state(&mut r, 1);
    let red = partial_trace(&a.tensor(&b).unwrap().density(), &[1]).unwrap();
    assert!(quantum_core::linalg::max_abs_diff(red.matrix(), b.density().matrix()) < 1e-12);
}

#[test]
fn partial_trace_preserves_trace_and_order() {
    let psi = random_state(&mut rng(4), 3);
    let rho = psi.density();
    let red = partial_trace(&rho, &[0, 2]).unwrap();
    assert!((red.matrix().trace().re - 1.0).abs() < 1e-12);
    // ⟨Z⊗X⟩ on the kept pair equals ⟨Z I X⟩ on the full state.
    let full = expectation(&rho, &pauli_str("zix")).unwrap();
    let part = expectation(&red, &pauli_str("zx")).unwrap();
    assert!((full - part).abs() < 1e-12);
}

#[test]
fn expectation_examples() {
    assert!((expectation(&states::phi_plus().density(), &pauli_str("zz")).unwrap() - 1.0).abs() < 1e-12);
    assert!((expectation(&states::ghz().density(), &pauli_str("iii")).unwrap() - 1.0).abs() < 1e-12);
    assert!(expectation(&states::ghz().density(), &pauli_str("zzz")).unwrap().abs() < 1e-12);
    let bad = mat(2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    assert!(expectation(&PureState::zero(1).unwrap().density(), &bad).is_err());
}

#[test]
fn bloch_vectors() {
    let z = bloch_vector(&PureState::zero(1).unwrap().density(), 0).unwrap();
    assert_eq!(z, [0.0, 0.0, 1.0]);
    let y = bloch_vector(&states::right().density(), 0).unwrap();
    assert!((y[1] - 1.0).abs() < 1e-12 && y[0].abs() < 1e-12 && y[2].abs() < 1e-12);
    for q in 0..3 {
        let g = bloch_vector(&states::ghz().density(), q).unwrap();
        assert!(g.iter().all(|x| x.abs() < 1e-12));
    }
}

#[test]
fn spin_correlation_of_ghz_along_x() {
    let x = [1.0, 0.0, 0.0];
    let v = spin_correlation(&states::ghz().density(), &[0, 1, 2], &[x, x, x]).unwrap();
    assert!((v - 1.0).abs() < 1e-12);
}

#[test]
fn density_validation() {
    let not_unit_trace = quantum_core::CMatrix::identity(2, 2);
    assert!(DensityOperator::new(not_unit_trace).is_err());
    let negative = mat(2, &[c(1.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)]);
    assert!(DensityOperator::new(negative).is_err());
    assert!(PureState::from_slice(&[c(1.0, 0.0), c(1.0, 0.0)]).is_err());
    assert!(PureState::zero(4).is_err());
}
