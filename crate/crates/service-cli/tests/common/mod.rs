#![allow(dead_code)]

use jsonschema::{Registry, Resource, Validator};
use serde_json::{json, Value};
use service_cli::Session;

const BASE: &str = "https://beads.invalid/schemas/";

fn load(name: &str) -> Value {
    let path = format!("{}/../../schemas/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Validator for `#/…` inside one of the shipped schemas, with the other
/// schemas available for cross-file references.
pub fn validator(file: &str, pointer: &str) -> Validator {
    let mut registry = Registry::new();
    for name in ["scene.schema.json", "circuit.schema.json", "session.schema.json"] {
        registry = registry
            .add(format!("{BASE}{name}"), Resource::from_contents(load(name)))
            .unwrap();
    }
    let registry = registry.prepare().unwrap();
    let root = json!({ "$ref": format!("{BASE}{file}#{pointer}") });
    jsonschema::options().with_registry(&registry).build(&root).unwrap()
}

pub fn assert_valid(v: &Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:#?}\n{doc}");
}

/// Send one request and return the parsed response.
pub fn call(session: &mut Session, method: &str, params: Value) -> Value {
    let line = json!({"id": 1, "method": method, "params": params}).to_string();
    serde_json::from_str(&session.handle_line(&line)).unwrap()
}

/// Result of a successful call.
pub fn ok(session: &mut Session, method: &str, params: Value) -> Value {
    let r = call(session, method, params);
    assert!(r.get("error").is_none(), "{method} failed: {r}");
    r["result"].clone()
}

pub fn error_code(response: &Value) -> &str {
    response["error"]["code"].as_str().unwrap()
}

pub fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Bloch vector of `qubit` read from a scene's Q-Bead at x, y and z.
pub fn scene_bloch(scene: &render_export::SceneSnapshot, qubit: usize) -> [f64; 3] {
    let f = scene.function(&format!("Q{{{}}}", qubit + 1)).unwrap();
    [
        f.value_at([1.0, 0.0, 0.0]),
        f.value_at([0.0, 1.0, 0.0]),
        f.value_at([0.0, 0.0, 1.0]),
    ]
}
