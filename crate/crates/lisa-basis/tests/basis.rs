mod common;

use common::*;
use lisa_basis::{label_catalog, lisa_operator, BeadLabel, LisaBasis, Parity, Tau};
use quantum_core::linalg::trace_product;
use quantum_core::{pauli_str, CMatrix, Pauli};

#[test]
fn label_counts() {
    assert_eq!(label_catalog(1).unwrap().len(), 2);
    assert_eq!(label_catalog(2).unwrap().len(), 5);
    assert_eq!(label_catalog(3).unwrap().len(), 16);
    assert!(label_catalog(0).is_err());
    assert!(label_catalog(4).is_err());
}

#[test]
fn two_qubit_labels_are_exactly_these() {
    let names: Vec<String> = label_catalog(2).unwrap().iter().map(|l| l.label.to_string()).collect();
    assert_eq!(names, ["{}", "{1}", "{2}", "{1,2}even", "{1,2}odd"]);
    let one: Vec<String> = label_catalog(1).unwrap().iter().map(|l| l.label.to_string()).collect();
    assert_eq!(one, ["{}", "{1}"]);
}

#[test]
fn operator_count_is_four_to_the_n() {
    for n in 1..=3 {
        assert_eq!(LisaBasis::get(n).unwrap().operators().len(), 1 << (2 * n));
    }
}

#[test]
fn orthonormality() {
    for n in 1..=3 {
        let ops = LisaBasis::get(n).unwrap().operators();
        let mut worst: f64 = 0.0;
        for (a, ta) in ops.iter().enumerate() {
            for (b, tb) in ops.iter().enumerate() {
                let g = trace_product(&ta.matrix, &tb.matrix);
                let expect = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((g.re - expect).abs()).max(g.im.abs());
            }
        }
        assert!(worst < 1e-12, "n={n}: {worst}");
    }
}

#[test]
fn operators_are_hermitian() {
    for op in LisaBasis::get(3).unwrap().operators() {
        assert!(quantum_core::linalg::hermitian_residual(&op.matrix) < 1e-15);
    }
}

#[test]
fn rank_parity_matches_label_parity() {
    for n in 1..=3 {
        for op in LisaBasis::get(n).unwrap().operators() {
            assert_eq!(Parity::of_rank(op.j), op.label.parity(), "{}", op.label);
        }
    }
}

#[test]
fn operators_carry_their_rank_under_collective_rotations() {
    // Casimir Σ_a [J_a, [J_a, T]] = j(j+1) T and [J_z, [J_z, T]] = m² T.
    for n in 1..=3 {
        let j: Vec<CMatrix> = Pauli::AXES.iter().map(|&p| total_spin(n, p)).collect();
        for op in LisaBasis::get(n).unwrap().operators() {
            let mut cas = CMatrix::zeros(1 << n, 1 << n);
            for ja in &j {
                cas += commutator(ja, &commutator(ja, &op.matrix));
            }
            let rank = (op.j * (op.j + 1)) as f64;
            assert!(max_diff(&cas, &op.matrix.scale(rank)) < 1e-12, "{} j={} m={}", op.label, op.j, op.m);
            let zz = commutator(&j[2], &commutator(&j[2], &op.matrix));
            let m2 = (op.m * op.m) as f64;
            assert!(max_diff(&zz, &op.matrix.scale(m2)) < 1e-12, "{} j={} m={}", op.label, op.j, op.m);
        }
    }
}

#[test]
fn exchange_symmetry_of_bilinear_labels() {
    for (k, l) in [(0, 1), (0, 2), (1, 2)] {
        let p = swap_matrix(3, k, l);
        for op in LisaBasis::get(3).unwrap().operators() {
            if op.label.subsystem() != [k, l] {
                continue;
            }
            let swapped = &p * &op.matrix * &p;
            let sign = op.label.parity().sign();
            assert!(max_diff(&swapped, &op.matrix.scale(sign)) < 1e-14, "{}", op.label);
        }
    }
}

#[test]
fn trilinear_permutation_classes() {
    let swaps: Vec<CMatrix> = [(0, 1), (1, 2), (0, 2)].iter().map(|&(a, b)| swap_matrix(3, a, b)).collect();
    for op in LisaBasis::get(3).unwrap().operators() {
        let sign = match op.label.tau() {
            Some(Tau::T1) => 1.0,
            Some(Tau::T4) => -1.0,
            _ => continue,
        };
        for p in &swaps {
            assert!(max_diff(&(p * &op.matrix * p), &op.matrix.scale(sign)) < 1e-14);
        }
    }
}

#[test]
fn only_expected_labels_are_fully_symmetric() {
    let sym: Vec<String> = label_catalog(3)
        .unwrap()
        .iter()
        .filter(|l| l.fully_symmetric)
        .map(|l| l.label.to_string())
        .collect();
    assert_eq!(sym, ["{1,2}even", "{1,3}even", "{2,3}even", "{1,2,3 tau1}odd"]);
}

#[test]
fn identity_operator_two_qubits() {
    let op = lisa_operator(2, &BeadLabel::identity(), 0, 0).unwrap();
    assert!(max_diff(&op.matrix, &CMatrix::identity(4, 4).scale(0.5)) < 1e-15);
}

#[test]
fn bilinear_rank_two_axial_operator() {
    let op = lisa_operator(2, &BeadLabel::pair(0, 1, Parity::Even), 2, 0).unwrap();
    let expect = (pauli_str("zz").scale(2.0) - pauli_str("xx") - pauli_str("yy")).scale(1.0 / (2.0 * 6f64.sqrt()));
    assert!(max_diff(&op.matrix, &expect) < 1e-15);
}

#[test]
fn antisymmetric_trilinear_scalar() {
    let op = lisa_operator(3, &BeadLabel::triple(Tau::T4, Parity::Even).unwrap(), 0, 0).unwrap();
    let even = pauli_str("xyz") + pauli_str("yzx") + pauli_str("zxy");
    let odd = pauli_str("xzy") + pauli_str("yxz") + pauli_str("zyx");
    // Unit Frobenius norm fixes the prefactor: six orthogonal strings of norm² 8.
    let expect = (even - odd).scale(1.0 / 48f64.sqrt());
    assert!(max_diff(&op.matrix, &expect) < 1e-15);
}

#[test]
fn single_qubit_operators() {
    let q = BeadLabel::single(1);
    let z = lisa_operator(3, &q, 1, 0).unwrap();
    assert!(max_diff(&z.matrix, &pauli_str("izi").scale(1.0 / 8f64.sqrt())) < 1e-15);
    let y = lisa_operator(3, &q, 1, -1).unwrap();
    assert!(max_diff(&y.matrix, &pauli_str("iyi").scale(1.0 / 8f64.sqrt())) < 1e-15);
}

#[test]
fn symmetric_trilinear_rank_three_axial_operator_commutes_with_jz() {
    let op = lisa_operator(3, &BeadLabel::triple(Tau::T1, Parity::Odd).unwrap(), 3, 0).unwrap();
    let jz = total_spin(3, Pauli::Z);
    assert!(max_diff(&commutator(&jz, &op.matrix), &CMatrix::zeros(8, 8)) < 1e-14);
}

#[test]
fn invalid_components_rejected() {
    assert!(lisa_operator(2, &BeadLabel::pair(0, 1, Parity::Odd), 2, 0).is_err());
    assert!(lisa_operator(2, &BeadLabel::single(0), 1, 2).is_err());
    assert!(lisa_operator(2, &BeadLabel::single(2), 1, 0).is_err());
    assert!(lisa_operator(2, &BeadLabel::triple(Tau::T1, Parity::Odd).unwrap(), 1, 0).is_err());
    assert!(BeadLabel::triple(Tau::T1, Parity::Even).is_err());
    assert!(BeadLabel::triple(Tau::T4, Parity::Odd).is_err());
}

#[test]
fn label_strings_round_trip() {
    for info in label_catalog(3).unwrap() {
        let s = info.label.to_string();
        assert_eq!(s.parse::<BeadLabel>().unwrap(), info.label);
    }
    assert_eq!("{1,2,3 τ2}even".parse::<BeadLabel>().unwrap().to_string(), "{1,2,3 tau2}even");
    assert_eq!("{∅}".parse::<BeadLabel>().unwrap(), BeadLabel::identity());
    for bad in ["{0}", "{1,2}", "{1}odd", "{1,2,3 tau1}even", "1,2", "{1,2}evenx"] {
        assert!(bad.parse::<BeadLabel>().is_err(), "{bad}");
    }
}
