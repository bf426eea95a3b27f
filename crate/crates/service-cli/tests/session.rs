mod common;

use std::f64::consts::FRAC_1_SQRT_2;

use common::{call, error_code, ok};
use serde_json::{json, Value};
use service_cli::{preset, CircuitDocument, PresetParams, Session};

fn loaded(name: &str) -> Session {
    let mut s = Session::new();
    ok(&mut s, "load_circuit", json!({"preset": name}));
    s
}

fn scenes(result: &Value) -> Vec<render_export::SceneSnapshot> {
    serde_json::from_value(result["scenes"].clone()).unwrap()
}

#[test]
fn unknown_methods_and_bad_messages_get_structured_errors() {
    let mut s = Session::new();
    let r = call(&mut s, "frobnicate", json!({}));
    assert_eq!(error_code(&r), "unknown_method");
    assert_eq!(r["id"], 1);
    let garbage: Value = serde_json::from_str(&s.handle_line("{not json")).unwrap();
    assert_eq!(error_code(&garbage), "parse_error");
    assert_eq!(garbage["id"], Value::Null);
    let no_method: Value = serde_json::from_str(&s.handle_line(r#"{"id": "a", "params": {}}"#)).unwrap();
    assert_eq!(error_code(&no_method), "invalid_request");
    assert_eq!(no_method["id"], "a");
    assert_eq!(error_code(&call(&mut s, "snapshot", Value::Null)), "no_circuit");
    assert_eq!(error_code(&call(&mut s, "step_to", json!({"k": "two"}))), "invalid_params");
    assert_eq!(error_code(&call(&mut s, "load_circuit", json!({"preset": "nope"}))), "unknown_preset");
}

#[test]
fn responses_follow_request_order_and_echo_ids() {
    let mut s = Session::new();
    let lines = [
        r#"{"id": 10, "method": "load_circuit", "params": {"preset": "ghz"}}"#,
        r#"{"id": 11, "method": "step_to", "params": {"k": 2}}"#,
        r#"{"id": "x", "method": "nope"}"#,
        r#"{"id": 12, "method": "snapshot"}"#,
    ];
    let out: Vec<Value> = lines.iter().map(|l| serde_json::from_str(&s.handle_line(l)).unwrap()).collect();
    let ids: Vec<Value> = out.iter().map(|r| r["id"].clone()).collect();
    assert_eq!(ids, [json!(10), json!(11), json!("x"), json!(12)]);
    assert_eq!(out[3]["result"]["position"]["step"], 2);
}

#[test]
fn list_presets_names_the_library() {
    let mut s = Session::new();
    let r = ok(&mut s, "list_presets", Value::Null);
    let names: Vec<&str> = r["presets"].as_array().unwrap().iter().map(|p| p["name"].as_str().unwrap()).collect();
    for n in ["bell-phi-plus", "ghz", "w", "grover2", "grover3", "teleport-r", "graph-triangle", "nmr-cnot", "schmidt", "gub"] {
        assert!(names.contains(&n), "{n}");
    }
}

#[test]
fn seek_half_way_through_a_hadamard_rotates_by_ninety_degrees() {
    let mut s = Session::new();
    let doc = CircuitDocument::from_json(r#"{"version": 1, "qubit_count": 1, "steps": [{"op": "gate", "gate": "h", "targets": [0]}]}"#).unwrap();
    ok(&mut s, "load_circuit", json!({"document": doc}));
    ok(&mut s, "seek", json!({"k": 0, "t": 0.5}));
    let snap = ok(&mut s, "snapshot", Value::Null);
    let b = common::scene_bloch(&scenes(&snap)[0], 0);
    let expected = [0.5, -FRAC_1_SQRT_2, 0.5];
    for a in 0..3 {
        assert!((b[a] - expected[a]).abs() < 1e-9, "{b:?}");
    }
    // The component perpendicular to the xz-bisector turned by 90°, the parallel one is kept.
    let n = [FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2];
    let along = b[0] * n[0] + b[2] * n[2];
    assert!((along - FRAC_1_SQRT_2).abs() < 1e-9);
    let perp0 = [-0.5, 0.0, 0.5];
    let perp1 = [b[0] - along * n[0], b[1], b[2] - along * n[2]];
    let dot: f64 = (0..3).map(|a| perp0[a] * perp1[a]).sum();
    assert!(dot.abs() < 1e-9);
    // t = 1 completes the gate.
    ok(&mut s, "seek", json!({"k": 0, "t": 1.0}));
    let b = common::scene_bloch(&scenes(&ok(&mut s, "snapshot", Value::Null))[0], 0);
    assert!((b[0] - 1.0).abs() < 1e-9);
    assert_eq!(error_code(&call(&mut s, "seek", json!({"k": 1, "t": 0.5}))), "out_of_range");
    assert_eq!(error_code(&call(&mut s, "seek", json!({"k": 0, "t": 1.5}))), "out_of_range");
    assert_eq!(error_code(&call(&mut s, "step_to", json!({"k": 2}))), "out_of_range");
}

#[test]
fn select_branch_shows_one_teleportation_column() {
    let mut s = loaded("teleport-r");
    let len = preset("teleport-r", &PresetParams::default()).unwrap().steps.len();
    let summary = ok(&mut s, "step_to", json!({"k": len - 1}));
    assert_eq!(summary["branches"].as_array().unwrap().len(), 4);
    let all = scenes(&ok(&mut s, "snapshot", Value::Null));
    assert_eq!(all.len(), 4);
    for bits in [[0, 0], [0, 1], [1, 0], [1, 1]] {
        ok(&mut s, "select_branch", json!({"bits": bits}));
        let one = scenes(&ok(&mut s, "snapshot", Value::Null));
        assert_eq!(one.len(), 1);
        let branch = one[0].meta.branch.as_ref().unwrap();
        assert_eq!(branch.bits, bits);
        assert!((branch.probability - 0.25).abs() < 1e-12);
        let b = common::scene_bloch(&one[0], 2);
        assert!((b[1] - 1.0).abs() < 1e-9, "{bits:?}: {b:?}");
        assert!(all.contains(&one[0]));
    }
    // Moving back before the second measurement shows the ancestor branch.
    ok(&mut s, "select_branch", json!({"bits": [1, 0]}));
    ok(&mut s, "step_to", json!({"k": len - 4}));
    let ancestor = scenes(&ok(&mut s, "snapshot", Value::Null));
    assert_eq!(ancestor.len(), 1);
    assert_eq!(ancestor[0].meta.branch.as_ref().unwrap().bits, [1]);
    // The mixture ignores the selection.
    ok(&mut s, "step_to", json!({"k": len}));
    let mixed = ok(&mut s, "snapshot", Value::Null);
    assert_eq!(mixed["mixed"], true);
    assert_eq!(scenes(&mixed).len(), 1);
    assert_eq!(error_code(&call(&mut s, "select_branch", json!({"bits": [1]}))), "unknown_branch");
    ok(&mut s, "select_branch", json!({"bits": null}));
}

#[test]
fn variant_h_keeps_only_fully_symmetric_correlation_beads() {
    let mut s = loaded("teleport-plus");
    ok(&mut s, "step_to", json!({"k": 5}));
    let r = ok(&mut s, "set_display", json!({"variant": "H"}));
    assert_eq!(r["display"]["variant"], "H");
    for scene in scenes(&ok(&mut s, "snapshot", Value::Null)) {
        let multilinear: Vec<_> = scene.labels.iter().filter(|l| l.subsystem.len() > 1).collect();
        assert!(!multilinear.is_empty());
        for l in multilinear {
            assert!(l.components.iter().all(|c| c.is_fully_symmetric()), "{}", l.id);
        }
    }
    ok(&mut s, "set_display", json!({"variant": "A"}));
    let a = scenes(&ok(&mut s, "snapshot", Value::Null));
    assert!(a[0].labels.iter().any(|l| l.subsystem.len() > 1 && !l.components[0].is_fully_symmetric()));
}

#[test]
fn set_display_patches_only_given_fields() {
    let mut s = loaded("bell-phi-plus");
    ok(&mut s, "set_display", json!({"scheme": "black-white-high-contrast", "mode": "drops"}));
    let r = ok(&mut s, "set_display", json!({"plot": "norm-radius", "rings": 8, "segments": 16}));
    let d = &r["display"];
    assert_eq!(d["scheme"], "black-white-high-contrast");
    assert_eq!(d["mode"], "drops");
    assert_eq!(d["plot"], "norm-radius");
    let snap = scenes(&ok(&mut s, "snapshot", Value::Null));
    assert_eq!(snap[0].meta.rings, 8);
    assert_eq!(snap[0].colors[0].rgb.len(), render_export::sphere_directions(8, 16).unwrap().len());
    ok(&mut s, "set_display", json!({"connected_scheme": "red-blue-discontinuous"}));
    let r = ok(&mut s, "set_display", json!({"connected_scheme": null}));
    assert!(r["display"].get("connected_scheme").is_none());
    assert_eq!(error_code(&call(&mut s, "set_display", json!({"rings": 2}))), "out_of_range");
    assert_eq!(error_code(&call(&mut s, "set_display", json!({"variant": "Z"}))), "invalid_params");
    assert_eq!(error_code(&call(&mut s, "set_display", json!({"colour": "red"}))), "invalid_params");
}

#[test]
fn edit_circuit_applies_patches_atomically() {
    let mut s = loaded("bell-phi-plus");
    ok(&mut s, "step_to", json!({"k": 2}));
    let r = ok(
        &mut s,
        "edit_circuit",
        json!({"ops": [{"op": "insert", "index": 0, "step": {"op": "gate", "gate": "x", "targets": [1]}}]}),
    );
    assert_eq!(r["steps"], json!(["x 1", "h 0", "cnot 0→1"]));
    assert_eq!(r["position"]["step"], 2);
    // Dropping a Toffoli on a two-qubit circuit is rejected and changes nothing.
    let bad = call(
        &mut s,
        "edit_circuit",
        json!({"ops": [
            {"op": "remove", "index": 0},
            {"op": "insert", "index": 0, "step": {"op": "gate", "gate": "toffoli", "controls": [0, 1], "targets": [2]}}
        ]}),
    );
    assert_eq!(error_code(&bad), "invalid_circuit");
    let out = call(&mut s, "edit_circuit", json!({"ops": [{"op": "remove", "index": 7}]}));
    assert_eq!(error_code(&out), "out_of_range");
    ok(&mut s, "step_to", json!({"k": 3}));
    let psi = scenes(&ok(&mut s, "snapshot", Value::Null));
    let rho = psi[0].reconstruct_density().unwrap();
    let expected = quantum_core::states::psi_plus().density();
    assert!(quantum_core::linalg::max_abs_diff(&rho, expected.matrix()) < 1e-10);
    let r = ok(
        &mut s,
        "edit_circuit",
        json!({"ops": [
            {"op": "replace", "index": 0, "step": {"op": "gate", "gate": "x", "targets": [0]}},
            {"op": "remove", "index": 2},
            {"op": "set_initial", "initial": {"kind": "bits", "bits": "01"}}
        ]}),
    );
    assert_eq!(r["steps"], json!(["x 0", "h 0"]));
    assert_eq!(r["position"]["step"], 2);
}

#[test]
fn measure_now_inserts_a_measurement_at_the_cursor() {
    let mut s = loaded("bell-phi-plus");
    ok(&mut s, "step_to", json!({"k": 2}));
    let r = ok(&mut s, "measure_now", json!({"qubit": 0}));
    assert_eq!(r["position"]["step"], 3);
    assert_eq!(r["step_count"], 3);
    let branches = r["branches"].as_array().unwrap();
    assert_eq!(branches.len(), 2);
    for b in branches {
        assert!((b["probability"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    }
    for sc in scenes(&r) {
        let bit = sc.meta.branch.as_ref().unwrap().bits[0];
        let z = common::scene_bloch(&sc, 1)[2];
        assert!((z - if bit == 0 { 1.0 } else { -1.0 }).abs() < 1e-9);
    }
    // Mid-gate the pending step is completed first.
    let mut s = loaded("bell-phi-plus");
    ok(&mut s, "seek", json!({"k": 0, "t": 0.3}));
    let r = ok(&mut s, "measure_now", json!({"qubit": 1, "direction": [1.0, 0.0, 0.0]}));
    assert_eq!(r["position"]["step"], 2);
    let doc = ok(&mut s, "edit_circuit", json!({"ops": []}));
    assert_eq!(doc["steps"], json!(["h 0", "measure 1", "cnot 0→1"]));
}

#[test]
fn export_writes_scenes_circuits_and_meshes() {
    let dir = tempfile::tempdir().unwrap();
    let mut s = loaded("teleport-plus");
    ok(&mut s, "step_to", json!({"k": 7}));
    let scene_path = dir.path().join("scenes.json");
    ok(&mut s, "export", json!({"path": scene_path.to_str().unwrap()}));
    let written: Vec<render_export::SceneSnapshot> =
        serde_json::from_str(&std::fs::read_to_string(&scene_path).unwrap()).unwrap();
    assert_eq!(written, scenes(&ok(&mut s, "snapshot", Value::Null)));

    let circuit_path = dir.path().join("circuit.json");
    ok(&mut s, "export", json!({"path": circuit_path.to_str().unwrap(), "kind": "circuit"}));
    let doc = CircuitDocument::from_json(&std::fs::read_to_string(&circuit_path).unwrap()).unwrap();
    assert_eq!(doc, preset("teleport-plus", &PresetParams::default()).unwrap());

    let ply_dir = dir.path().join("meshes");
    let ambiguous = call(&mut s, "export", json!({"path": ply_dir.to_str().unwrap(), "kind": "ply"}));
    assert_eq!(error_code(&ambiguous), "ambiguous_branch");
    ok(&mut s, "select_branch", json!({"bits": [0, 1]}));
    let r = ok(
        &mut s,
        "export",
        json!({"path": ply_dir.to_str().unwrap(), "kind": "ply", "rings": 8, "segments": 16}),
    );
    let files = r["written"].as_array().unwrap();
    let visible = scenes(&ok(&mut s, "snapshot", Value::Null))[0].visible().count();
    assert_eq!(files.len(), visible);
    let mesh = render_export::import_ply(files[0].as_str().unwrap()).unwrap();
    assert_eq!(mesh.positions.len(), render_export::sphere_directions(8, 16).unwrap().len());
    let bad = call(&mut s, "export", json!({"path": "/nonexistent/dir/x.json"}));
    assert_eq!(error_code(&bad), "io_error");
}

#[test]
fn messages_follow_the_session_schema() {
    let requests = common::validator("session.schema.json", "/$defs/request");
    let responses = common::validator("session.schema.json", "/$defs/response");
    let summary = common::validator("session.schema.json", "/$defs/summary");
    let doc = preset("schmidt", &PresetParams::default()).unwrap();
    let script = [
        json!({"id": 1, "method": "list_presets"}),
        json!({"id": 2, "method": "load_circuit", "params": {"preset": "teleport-r"}}),
        json!({"id": 3, "method": "load_circuit", "params": {"document": doc}}),
        json!({"id": 4, "method": "load_circuit", "params": {"preset": "grover2", "params": {"solution": 1}}}),
        json!({"id": 5, "method": "step_to", "params": {"k": 3}}),
        json!({"id": 6, "method": "seek", "params": {"k": 3, "t": 0.25}}),
        json!({"id": 7, "method": "set_display", "params": {"variant": "D", "plot": "radial-magnitude"}}),
        json!({"id": 8, "method": "snapshot"}),
        json!({"id": 9, "method": "measure_now", "params": {"qubit": 1}}),
        json!({"id": 10, "method": "select_branch", "params": {"bits": [1]}}),
        json!({"id": 11, "method": "edit_circuit", "params": {"ops": [{"op": "remove", "index": 0}]}}),
        json!({"id": 12, "method": "snapshot", "params": {}}),
        json!({"id": 13, "method": "bogus"}),
        json!({"id": 14, "method": "export", "params": {"path": "/nonexistent/x", "kind": "circuit"}}),
    ];
    let mut s = Session::new();
    for req in &script {
        if req["method"] != "bogus" {
            common::assert_valid(&requests, req);
        }
        let resp: Value = serde_json::from_str(&s.handle_line(&req.to_string())).unwrap();
        common::assert_valid(&responses, &resp);
        if req["method"] == "snapshot" {
            common::assert_valid(&summary, &resp["result"]);
        }
    }
    assert!(!requests.is_valid(&json!({"method": "seek", "params": {"k": 0}})));
    assert!(!requests.is_valid(&json!({"method": "bogus"})));
}

#[test]
fn a_session_replays_to_identical_snapshots() {
    let script: Vec<String> = [
        json!({"id": 1, "method": "load_circuit", "params": {"preset": "w"}}),
        json!({"id": 2, "method": "seek", "params": {"k": 4, "t": 0.4}}),
        json!({"id": 3, "method": "snapshot"}),
        json!({"id": 4, "method": "set_display", "params": {"variant": "C"}}),
        json!({"id": 5, "method": "step_to", "params": {"k": 10}}),
        json!({"id": 6, "method": "snapshot"}),
    ]
    .iter()
    .map(|v| v.to_string())
    .collect();
    let play = || {
        let mut s = Session::new();
        script.iter().map(|l| s.handle_line(l)).collect::<Vec<_>>()
    };
    assert_eq!(play(), play());
}
