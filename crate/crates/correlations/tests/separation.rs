mod common;

use std::f64::consts::PI;

use beads_map::{ScalingMode, SphericalDirection};
use common::*;
use correlations::*;
use lisa_basis::{decompose, BeadLabel, Parity, Tau};
use quantum_core::linalg::max_abs_diff;
use quantum_core::{pauli, states, CMatrix, DensityOperator, Pauli, PureState};

const AXES: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];
const Z: [f64; 3] = [0.0, 0.0, 1.0];

fn sig(n: usize, q: usize, a: Pauli) -> CMatrix {
    pauli::single(n, q, a)
}

fn ex(rho: &DensityOperator, op: &CMatrix) -> f64 {
    quantum_core::expectation(rho, op).unwrap()
}

/// Two-qubit ρ̃ written term by term.
fn two_qubit_oracle(rho: &DensityOperator) -> CMatrix {
    let mut out = rho.matrix().clone();
    for &a in &AXES {
        for &b in &AXES {
            let s1 = sig(2, 0, a);
            let s2 = sig(2, 1, b);
            let w = ex(rho, &s1) * ex(rho, &s2) / 4.0;
            out -= (s1 * s2).scale(w);
        }
    }
    out
}

/// Three-qubit ρ̃ written term by term.
fn three_qubit_oracle(rho: &DensityOperator) -> CMatrix {
    let mut out = rho.matrix().clone();
    let single = |q: usize, a: Pauli| ex(rho, &sig(3, q, a));
    let pair = |q: usize, a: Pauli, r: usize, b: Pauli| ex(rho, &(sig(3, q, a) * sig(3, r, b)));
    for &a in &AXES {
        for &b in &AXES {
            for &c in &AXES {
                let p = sig(3, 0, a) * sig(3, 1, b) * sig(3, 2, c);
                let w = single(0, a) * single(1, b) * single(2, c) / 4.0
                    - (pair(0, a, 1, b) * single(2, c) + pair(0, a, 2, c) * single(1, b) + pair(1, b, 2, c) * single(0, a))
                        / 8.0;
                out += p.scale(w);
            }
        }
    }
    for (q, r) in [(0, 1), (0, 2), (1, 2)] {
        for &a in &AXES {
            for &b in &AXES {
                let w = single(q, a) * single(r, b) / 8.0;
                out -= (sig(3, q, a) * sig(3, r, b)).scale(w);
            }
        }
    }
    out
}

#[test]
fn matches_explicit_two_qubit_formula() {
    let mut rng = rng(1);
    for _ in 0..30 {
        let rho = random_state(&mut rng, 2).density();
        let tilde = connected_operator(&rho).unwrap();
        assert!(max_abs_diff(&tilde, &two_qubit_oracle(&rho)) < 1e-12);
    }
}

#[test]
fn matches_explicit_three_qubit_formula() {
    let mut rng = rng(2);
    for _ in 0..30 {
        let rho = random_state(&mut rng, 3).density();
        let tilde = connected_operator(&rho).unwrap();
        assert!(max_abs_diff(&tilde, &three_qubit_oracle(&rho)) < 1e-12);
    }
}

#[test]
fn trilinear_content_matches_brute_force_ursell() {
    let mut rng = rng(3);
    let cart = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    for _ in 0..10 {
        let rho = random_state(&mut rng, 3).density();
        let tilde = connected_operator(&rho).unwrap();
        let tilde_rho = DensityOperatorLike(tilde);
        for a in cart {
            for b in cart {
                for c in cart {
                    let t = |q: &[usize], d: &[[f64; 3]]| total_corr(&rho, q, d).unwrap();
                    let e12 = t(&[0, 1], &[a, b]) - t(&[0], &[a]) * t(&[1], &[b]);
                    let e13 = t(&[0, 2], &[a, c]) - t(&[0], &[a]) * t(&[2], &[c]);
                    let e23 = t(&[1, 2], &[b, c]) - t(&[1], &[b]) * t(&[2], &[c]);
                    let e123 = t(&[0, 1, 2], &[a, b, c])
                        - t(&[0], &[a]) * e23
                        - t(&[1], &[b]) * e13
                        - t(&[2], &[c]) * e12
                        - t(&[0], &[a]) * t(&[1], &[b]) * t(&[2], &[c]);
                    let from_tilde = tilde_rho.corr(&[0, 1, 2], &[a, b, c]);
                    assert!((from_tilde - e123).abs() < 1e-12);
                    assert!((connected_corr(&rho, &[0, 1, 2], &[a, b, c]).unwrap() - e123).abs() < 1e-12);
                }
            }
        }
    }
}

/// Expectation values against a Hermitian operator that need not be positive.
struct DensityOperatorLike(CMatrix);

impl DensityOperatorLike {
    fn corr(&self, qubits: &[usize], dirs: &[[f64; 3]]) -> f64 {
        let n = (self.0.nrows() as f64).log2() as usize;
        let op = quantum_core::pauli::spin_product(n, qubits, dirs);
        quantum_core::linalg::trace_product(&self.0, &op).re
    }
}

#[test]
fn direction_covariance_via_beads() {
    let mut rng = rng(4);
    for n in 2..=3 {
        for _ in 0..10 {
            let rho = random_state(&mut rng, n).density();
            let dec = correlation_beads(&rho, ScalingMode::Beads).unwrap();
            let d = random_direction(&mut rng);
            let r = d.to_vector();
            for (k, l) in [(0, 1), (0, 2), (1, 2)] {
                if l >= n {
                    continue;
                }
                let e = dec.e_beads.value(&BeadLabel::pair(k, l, Parity::Even), d).unwrap();
                assert!((e - connected_corr(&rho, &[k, l], &[r, r]).unwrap()).abs() < 1e-9);
            }
            if n == 3 {
                let label = BeadLabel::triple(Tau::T1, Parity::Odd).unwrap();
                let e = dec.e_beads.value(&label, d).unwrap();
                assert!((e - connected_corr(&rho, &[0, 1, 2], &[r, r, r]).unwrap()).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn examples_total() {
    assert!((total_corr(&states::phi_plus().density(), &[0, 1], &[Z, Z]).unwrap() - 1.0).abs() < 1e-12);
    assert!((total_corr(&PureState::zero(2).unwrap().density(), &[0, 1], &[Z, Z]).unwrap() - 1.0).abs() < 1e-12);
    let x = [1.0, 0.0, 0.0];
    assert!((total_corr(&states::ghz().density(), &[0, 1, 2], &[x, x, x]).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn examples_connected() {
    let mut rng = rng(5);
    for _ in 0..10 {
        let rho = random_product_state(&mut rng, 3).density();
        let d: Vec<[f64; 3]> = (0..3).map(|_| random_direction(&mut rng).to_vector()).collect();
        assert!(connected_corr(&rho, &[0, 1, 2], &d).unwrap().abs() < 1e-12);
        assert!(connected_corr(&rho, &[0, 2], &[d[0], d[2]]).unwrap().abs() < 1e-12);
    }
    let s = states::schmidt(PI / 4.0).density();
    assert!((connected_corr(&s, &[0, 1], &[Z, Z]).unwrap() - 0.5).abs() < 1e-12);
    assert!((compound_corr(&s, &[0, 1], &[Z, Z]).unwrap() - 0.5).abs() < 1e-12);
    let w = states::w().density();
    assert!((connected_corr(&w, &[0, 1], &[Z, Z]).unwrap() + 4.0 / 9.0).abs() < 1e-12);
}

#[test]
fn schmidt_family() {
    for theta in [0.0, PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, PI / 2.0] {
        let rho = states::schmidt(theta).density();
        let t = total_corr(&rho, &[0, 1], &[Z, Z]).unwrap();
        let e = connected_corr(&rho, &[0, 1], &[Z, Z]).unwrap();
        assert!((t - 1.0).abs() < 1e-12);
        assert!((e - theta.sin().powi(2)).abs() < 1e-12);
    }
    let norms: Vec<f64> = (0..=16)
        .map(|i| entanglement_norm(&states::schmidt(PI / 2.0 * i as f64 / 16.0).density()).unwrap().total)
        .collect();
    assert!(norms[0].abs() < 1e-12);
    for w in norms.windows(2) {
        assert!(w[1] > w[0]);
    }
}

#[test]
fn e_bead_brightness_grows_with_schmidt_angle() {
    let label = BeadLabel::pair(0, 1, Parity::Even);
    let norms: Vec<f64> = [0.0, PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, PI / 2.0]
        .iter()
        .map(|&t| {
            let dec = correlation_beads(&states::schmidt(t).density(), ScalingMode::Beads).unwrap();
            dec.e_beads.norm(&label).unwrap()
        })
        .collect();
    assert!(norms[0] < 1e-12);
    let dec0 = correlation_beads(&states::schmidt(0.0).density(), ScalingMode::Beads).unwrap();
    assert!(dec0.e_omitted(&label));
    assert!(!dec0.e_omitted(&BeadLabel::single(0)));
    for w in norms.windows(2) {
        assert!(w[1] > w[0]);
    }
}

#[test]
fn product_state_operator_has_no_correlations() {
    let d = decompose(&connected_operator(&PureState::zero(2).unwrap().density()).unwrap()).unwrap();
    for (key, v) in d.entries() {
        if key.label.is_multilinear() {
            assert!(v.abs() < 1e-15);
        }
    }
}

#[test]
fn bell_operator_is_unchanged() {
    let rho = states::phi_plus().density();
    assert!(max_abs_diff(&connected_operator(&rho).unwrap(), rho.matrix()) < 1e-15);
    let norm = entanglement_norm(&rho).unwrap();
    assert!((norm.total - 3f64.sqrt() / 2.0).abs() < 1e-12);
    let even = BeadLabel::pair(0, 1, Parity::Even);
    assert!((norm.per_label[&even] - 3f64.sqrt() / 2.0).abs() < 1e-12);
}

#[test]
fn singlet_e_bead_is_uniformly_minus_one() {
    let dec = correlation_beads(&states::singlet().density(), ScalingMode::Beads).unwrap();
    let even = BeadLabel::pair(0, 1, Parity::Even);
    for d in beads_map::fibonacci_directions(1000) {
        assert!((dec.e_beads.value(&even, d).unwrap() + 1.0).abs() < 1e-9);
    }
}

#[test]
fn ghz_pairs_are_connected_along_z() {
    let rho = states::ghz().density();
    let dec = correlation_beads(&rho, ScalingMode::Beads).unwrap();
    for (k, l) in [(0, 1), (0, 2), (1, 2)] {
        let v = dec.e_beads.value(&BeadLabel::pair(k, l, Parity::Even), SphericalDirection::north()).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }
}

#[test]
fn maximally_entangled_states_have_no_compound_part() {
    for psi in [states::phi_plus(), states::phi_minus(), states::psi_plus(), states::singlet(), states::ghz()] {
        let dec = correlation_beads(&psi.density(), ScalingMode::Beads).unwrap();
        for (t, e) in dec.t_beads.beads.iter().zip(&dec.e_beads.beads) {
            for (k, v) in &t.coefficients {
                assert!((v - e.coefficients[k]).abs() < 1e-12);
            }
        }
        for c in &dec.c_beads.beads {
            if c.label.is_multilinear() {
                assert!(c.coefficient_norm() < 1e-12);
                assert!(dec.c_omitted(&c.label));
            }
        }
    }
}

#[test]
fn totals_are_connected_plus_compound() {
    let mut rng = rng(6);
    for i in 0..100 {
        let n = 2 + i % 2;
        let rho = random_state(&mut rng, n).density();
        let dec = correlation_beads(&rho, ScalingMode::Beads).unwrap();
        for ((t, e), c) in dec.t_beads.beads.iter().zip(&dec.e_beads.beads).zip(&dec.c_beads.beads) {
            if !t.label.is_multilinear() {
                assert_eq!(t, e);
                assert_eq!(t, c);
                continue;
            }
            for (k, v) in &t.coefficients {
                assert!((v - e.coefficients[k] - c.coefficients[k]).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn product_states_have_no_connected_content() {
    let mut rng = rng(7);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let n = 2 + i % 2;
        let rho = random_product_state(&mut rng, n).density();
        let d = decompose(&connected_operator(&rho).unwrap()).unwrap();
        for (key, v) in d.entries() {
            if key.label.is_multilinear() {
                worst = worst.max(v.abs());
            }
        }
        assert!(entanglement_norm(&rho).unwrap().total < 1e-10);
    }
    assert!(worst < 1e-10, "{worst}");
}

#[test]
fn mixed_states_rejected() {
    let mixed = DensityOperator::maximally_mixed(2).unwrap();
    assert!(matches!(connected_operator(&mixed), Err(CorrelationError::MixedState(_))));
    assert!(matches!(connected_corr(&mixed, &[0, 1], &[Z, Z]), Err(CorrelationError::MixedState(_))));
    assert!(total_corr(&mixed, &[0, 1], &[Z, Z]).unwrap().abs() < 1e-12);
    let rho = states::ghz().density();
    assert!(matches!(connected_corr(&rho, &[0], &[Z]), Err(CorrelationError::SubsetSize(1))));
    assert!(matches!(total_corr(&rho, &[0, 1], &[Z]), Err(CorrelationError::DirectionCount { .. })));
}
