mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use analysis::{grover_circuit, grover_success_prob, GraphState};
use beads_map::{bead_coefficients, gub_labels, ScalingMode};
use quantum_core::{states, CVector, GateKind, GateSpec, PureState, C64};
use service_cli::{
    final_state, list_presets, parse_state, preset, CircuitDocument, CliError, GateRecord, PresetParams, StateFile,
    StepRecord,
};

fn doc(name: &str) -> CircuitDocument {
    preset(name, &PresetParams::default()).unwrap()
}

fn final_pure(d: &CircuitDocument) -> PureState {
    let c = d.to_circuit().unwrap();
    c.after(c.steps().len()).unwrap().pure().unwrap().clone()
}

#[test]
fn every_preset_validates_against_the_circuit_schema() {
    let v = common::validator("circuit.schema.json", "");
    let presets = list_presets();
    assert_eq!(presets.len(), 17);
    for p in &presets {
        let d = doc(&p.name);
        assert_eq!(d.qubit_count, p.qubit_count, "{}", p.name);
        let value: serde_json::Value = serde_json::from_str(&d.to_json()).unwrap();
        common::assert_valid(&v, &value);
        d.to_circuit().unwrap();
    }
}

#[test]
fn schema_rejects_what_the_parser_rejects() {
    let v = common::validator("circuit.schema.json", "");
    let bad = [
        r#"{"version":1,"qubit_count":1,"steps":[{"op":"gate","gate":"rot","targets":[0],"angle":1}]}"#,
        r#"{"version":1,"qubit_count":1,"steps":[{"op":"gate","gate":"h","targets":[0],"angle":1}]}"#,
        r#"{"version":1,"qubit_count":1,"steps":[{"op":"gate","gate":"warp","targets":[0]}]}"#,
        r#"{"version":2,"qubit_count":1,"steps":[]}"#,
        r#"{"version":1,"qubit_count":1,"steps":[{"op":"measure"}]}"#,
        r#"{"version":1,"qubit_count":1,"steps":[{"op":"mix","qubit":0}]}"#,
        r#"{"version":1,"qubit_count":1,"steps":[],"extra":true}"#,
        r#"{"version":1,"qubit_count":2,"steps":[{"op":"gate","gate":"hamiltonian","targets":[0,1]}]}"#,
    ];
    for text in bad {
        let value: serde_json::Value = serde_json::from_str(text).unwrap();
        assert!(!v.is_valid(&value), "schema accepted {text}");
        let parsed = CircuitDocument::from_json(text).and_then(|d| d.to_circuit());
        assert!(parsed.is_err(), "parser accepted {text}");
    }
}

#[test]
fn document_json_round_trips() {
    for p in list_presets() {
        let d = doc(&p.name);
        let back = CircuitDocument::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d, "{}", p.name);
        assert_eq!(back.to_circuit().unwrap(), d.to_circuit().unwrap());
    }
}

#[test]
fn circuits_convert_to_documents_and_back() {
    let g = grover_circuit(3, 5, 2).unwrap();
    let d = CircuitDocument::from_circuit(&g.circuit);
    assert_eq!(d.to_circuit().unwrap(), g.circuit);
    let h = GateSpec::hamiltonian(quantum_core::pauli_str("xy").scale(0.3), vec![0, 1]);
    let r = GateRecord::from_spec(&h);
    assert!(r.matrix.is_some());
    assert_eq!(r.to_spec().unwrap(), h);
}

#[test]
fn parse_errors_carry_line_and_column() {
    let text = "{\n  \"version\": 1,\n  \"qubit_count\": 2,\n  \"steps\": [ {\"op\": \"gate\" \"gate\": \"h\"} ]\n}";
    match CircuitDocument::from_json(text) {
        Err(CliError::Parse { line, column, .. }) => {
            assert_eq!(line, 4);
            assert_eq!(column, 28);
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
    let e = CircuitDocument::from_json("{\"version\": 1, \"qubit_count\": 2, \"steps\": 3}").unwrap_err();
    assert_eq!(e.exit_code(), 2);
    assert!(matches!(e, CliError::Parse { line: 1, .. }));
}

#[test]
fn invalid_circuits_are_input_errors() {
    let cases = [
        CircuitDocument::new(2, vec![StepRecord::Gate(GateRecord::new("cnot", vec![0], vec![0]))]),
        CircuitDocument::new(2, vec![StepRecord::Gate(GateRecord::single("h", 2))]),
        CircuitDocument::new(4, vec![]),
        CircuitDocument::new(1, vec![StepRecord::Mix]),
        CircuitDocument::new(2, vec![StepRecord::Gate(GateRecord::hamiltonian(&[("zzz", 1.0)], vec![0, 1]))]),
        CircuitDocument::new(
            1,
            vec![StepRecord::Measure {
                qubit: 0,
                direction: [0.0, 0.0, 2.0],
            }],
        ),
    ];
    for d in cases {
        let e = d.to_circuit().unwrap_err();
        assert_eq!(e.exit_code(), 2, "{e}");
    }
}

#[test]
fn state_files_accept_vectors_and_matrices() {
    let rho = parse_state(r#"{"amplitudes": [0.7071067811865476, [0, 0.7071067811865476]]}"#).unwrap();
    assert!((rho.fidelity_with(&states::right()) - 1.0).abs() < 1e-12);
    let mixed = parse_state(r#"{"format": "beads-state", "version": 1, "density": [[0.5, 0], [0, 0.5]]}"#).unwrap();
    assert!((mixed.purity() - 0.5).abs() < 1e-12);
    let f = StateFile::from_density(&states::ghz().density());
    let back = parse_state(&serde_json::to_string(&f).unwrap()).unwrap();
    assert_eq!(back, states::ghz().density());
    for bad in [
        r#"{"amplitudes": [1, 1]}"#,
        r#"{"amplitudes": [1, 0, 0]}"#,
        r#"{"density": [[0.5, 0], [0, 0.6]]}"#,
        r#"{"density": [[1.5, 0], [0, -0.5]]}"#,
        r#"{"amplitudes": [1, 0], "density": [[1, 0], [0, 0]]}"#,
        r#"{"amplitudes": [1, 0], "version": 9}"#,
    ] {
        assert_eq!(parse_state(bad).unwrap_err().exit_code(), 2, "{bad}");
    }
}

#[test]
fn bell_presets_prepare_the_four_bell_states() {
    for (name, target) in [
        ("bell-phi-plus", states::phi_plus()),
        ("bell-phi-minus", states::phi_minus()),
        ("bell-psi-plus", states::psi_plus()),
        ("bell-psi-minus", states::singlet()),
    ] {
        assert!((final_pure(&doc(name)).fidelity(&target) - 1.0).abs() < 1e-12, "{name}");
    }
}

#[test]
fn ghz_and_w_presets_prepare_their_states() {
    assert!((final_pure(&doc("ghz")).fidelity(&states::ghz()) - 1.0).abs() < 1e-12);
    assert!((final_pure(&doc("w")).fidelity(&states::w()) - 1.0).abs() < 1e-12);
}

#[test]
fn grover_presets_follow_the_closed_form() {
    for (name, n) in [("grover2", 2usize), ("grover3", 3)] {
        for solution in 0..(1usize << n) {
            let params = PresetParams {
                solution: Some(solution),
                iterations: Some(2),
                ..Default::default()
            };
            let d = preset(name, &params).unwrap();
            let ends: Vec<usize> = d.metadata["iteration_ends"].split(',').map(|s| s.parse().unwrap()).collect();
            let snaps = d.to_circuit().unwrap().run().unwrap();
            for (t, &k) in ends.iter().enumerate() {
                let p = snaps[k].pure().unwrap().amplitudes()[solution].norm_sqr();
                let expected = grover_success_prob(1, 1 << n, t as u32).unwrap();
                assert!((p - expected).abs() < 1e-9, "{name} w={solution} t={t}: {p} vs {expected}");
            }
        }
    }
    let bad = PresetParams {
        solution: Some(9),
        ..Default::default()
    };
    assert_eq!(preset("grover3", &bad).unwrap_err().exit_code(), 2);
}

#[test]
fn nmr_preset_turns_the_input_into_the_singlet() {
    let d = doc("nmr-cnot");
    let psi = final_pure(&d);
    assert!((psi.fidelity(&states::singlet()) - 1.0).abs() < 1e-10);
    // The four pulses together equal e^{-iπ/4}·CNOT.
    let c = d.to_circuit().unwrap();
    let mut u = quantum_core::CMatrix::identity(4, 4);
    for s in &c.steps()[3..] {
        u = s.gate().unwrap().unitary(2).unwrap() * u;
    }
    let target = GateSpec::cnot(0, 1).unitary(2).unwrap();
    let expected = target.scale(1.0) * C64::from_polar(1.0, -FRAC_PI_4);
    assert!(quantum_core::linalg::frobenius_diff(&u, &expected) < 1e-10);
}

#[test]
fn teleportation_presets_move_the_input_to_qubit_two() {
    for (name, input) in [
        ("teleport-1", PureState::from_bits("1").unwrap()),
        ("teleport-plus", states::plus()),
        ("teleport-r", states::right()),
    ] {
        let c = doc(name).to_circuit().unwrap();
        let snaps = c.run().unwrap();
        let before_mix = &snaps[snaps.len() - 2];
        assert_eq!(before_mix.branches.len(), 4);
        let target = quantum_core::bloch_vector(&input.density(), 0).unwrap();
        for b in &before_mix.branches {
            assert!((b.probability - 0.25).abs() < 1e-12, "{name}");
            let got = quantum_core::bloch_vector(&b.post_state.density(), 2).unwrap();
            for a in 0..3 {
                assert!((got[a] - target[a]).abs() < 1e-9, "{name}: {got:?} vs {target:?}");
            }
        }
        let last = snaps.last().unwrap();
        assert!(last.mixed);
        let rho = last.density();
        for q in 0..2 {
            assert!(common::norm3(quantum_core::bloch_vector(&rho, q).unwrap()) < 1e-9);
        }
    }
}

#[test]
fn graph_presets_prepare_graph_states() {
    for (name, n, edges) in [
        ("graph-pair", 2, vec![(0, 1)]),
        ("graph-path", 3, vec![(0, 1), (1, 2)]),
        ("graph-triangle", 3, vec![(0, 1), (1, 2), (0, 2)]),
    ] {
        let expected = GraphState::new(n, &edges).unwrap().state().unwrap();
        assert!((final_pure(&doc(name)).fidelity(&expected) - 1.0).abs() < 1e-12, "{name}");
    }
}

#[test]
fn schmidt_preset_follows_theta() {
    for theta in [0.0, 0.3, FRAC_PI_4, 1.2, PI / 2.0] {
        let params = PresetParams {
            theta: Some(theta),
            ..Default::default()
        };
        let psi = final_pure(&preset("schmidt", &params).unwrap());
        assert!((psi.fidelity(&states::schmidt(theta)) - 1.0).abs() < 1e-12);
    }
    let params = PresetParams {
        theta: Some(f64::NAN),
        ..Default::default()
    };
    assert!(preset("schmidt", &params).is_err());
}

#[test]
fn gub_presets_reach_the_bound_along_z() {
    for label in gub_labels() {
        for positive in [true, false] {
            let params = PresetParams {
                label: Some(label.to_string()),
                positive: Some(positive),
                ..Default::default()
            };
            let rho = final_state(&preset("gub", &params).unwrap()).unwrap();
            let beads = bead_coefficients(rho.matrix(), ScalingMode::Beads).unwrap();
            let v = beads.get(&label).unwrap().value_at([0.0, 0.0, 1.0]);
            let expected = if positive { 1.0 } else { -1.0 };
            assert!((v - expected).abs() < 1e-9, "{label} {positive}: {v}");
        }
    }
    let params = PresetParams {
        label: Some("{1,2}even".into()),
        ..Default::default()
    };
    assert_eq!(preset("gub", &params).unwrap_err().exit_code(), 2);
}

#[test]
fn unknown_presets_are_reported() {
    let e = preset("nope", &PresetParams::default()).unwrap_err();
    assert!(matches!(e, CliError::UnknownPreset(_)));
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn initial_states_are_honoured() {
    let amps = CVector::from_vec(vec![C64::new(FRAC_1_SQRT_2, 0.0), C64::new(0.0, FRAC_1_SQRT_2)]);
    let psi = PureState::new(amps).unwrap();
    let d = CircuitDocument::new(1, vec![StepRecord::Gate(GateRecord::single("h", 0))])
        .with_initial(service_cli::InitialState::from_state(&psi));
    let out = final_pure(&d);
    let h = GateSpec::single(GateKind::H, 0).unitary(1).unwrap();
    assert!((out.fidelity(&psi.evolve(&h).unwrap()) - 1.0).abs() < 1e-12);
    let bits = CircuitDocument::new(2, vec![]).with_initial(service_cli::InitialState::Bits { bits: "10".into() });
    assert_eq!(final_pure(&bits), PureState::from_bits("10").unwrap());
    let wrong = CircuitDocument::new(3, vec![]).with_initial(service_cli::InitialState::Bits { bits: "10".into() });
    assert_eq!(wrong.to_circuit().unwrap_err().exit_code(), 2);
}
