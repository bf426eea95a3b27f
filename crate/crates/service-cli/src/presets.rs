//! Built-in circuits: Bell pairs, GHZ and W preparation, Grover search,
//! teleportation, graph states, the NMR pulse-sequence CNOT, the Schmidt
//! family and the bound-reaching fixture states.

use std::f64::consts::FRAC_PI_4;

use analysis::{grover_circuit, GraphState};
use beads_map::{gub_labels, gub_state};
use lisa_basis::BeadLabel;
use serde::{Deserialize, Serialize};

use crate::document::{CircuitDocument, ConditionRecord, GateRecord, InitialState, StepRecord};
use crate::error::{CliError, Result};

/// Optional preset parameters. Presets ignore the ones they do not use.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetParams {
    /// Schmidt angle of the `schmidt` preset (default π/4).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    /// Marked item of the Grover presets, as a basis index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    /// Bead label of the `gub` preset, e.g. `{1,2,3 tau2}odd`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Sign of the bead value along +z for the `gub` preset (default +1).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresetInfo {
    pub name: String,
    pub description: String,
    pub qubit_count: usize,
    pub parameters: Vec<String>,
}

const CATALOG: &[(&str, &str, usize, &[&str])] = &[
    ("bell-phi-plus", "(|00⟩ + |11⟩)/√2 from H and CNOT", 2, &[]),
    ("bell-phi-minus", "(|00⟩ − |11⟩)/√2 from X, H and CNOT", 2, &[]),
    ("bell-psi-plus", "(|01⟩ + |10⟩)/√2 from X, H and CNOT", 2, &[]),
    ("bell-psi-minus", "singlet (|01⟩ − |10⟩)/√2 from X, X, H and CNOT", 2, &[]),
    ("ghz", "(|000⟩ + |111⟩)/√2 from H and two CNOTs", 3, &[]),
    ("w", "(|001⟩ + |010⟩ + |100⟩)/√3 from a rotation, a controlled rotation and a Toffoli", 3, &[]),
    ("grover2", "Grover search over four items", 2, &["solution", "iterations"]),
    ("grover3", "Grover search over eight items", 3, &["solution", "iterations"]),
    ("teleport-1", "teleportation of |1⟩ from qubit 0 to qubit 2", 3, &[]),
    ("teleport-plus", "teleportation of |+⟩ from qubit 0 to qubit 2", 3, &[]),
    ("teleport-r", "teleportation of |R⟩ = (|0⟩ + i|1⟩)/√2 from qubit 0 to qubit 2", 3, &[]),
    ("graph-pair", "two-vertex graph state", 2, &[]),
    ("graph-path", "three-vertex path graph state 0–1–2", 3, &[]),
    ("graph-triangle", "three-vertex complete graph state", 3, &[]),
    ("nmr-cnot", "CNOT as a sequence of NMR pulses and a zz coupling, applied to |−⟩|1⟩", 2, &[]),
    ("schmidt", "cos(θ/2)|00⟩ + sin(θ/2)|11⟩", 2, &["theta"]),
    ("gub", "three-qubit state reaching ±1 along z on a non-symmetric bead", 3, &["label", "positive"]),
];

/// Every preset with its description and parameters.
pub fn list_presets() -> Vec<PresetInfo> {
    CATALOG
        .iter()
        .map(|&(name, description, n, params)| PresetInfo {
            name: name.to_string(),
            description: description.to_string(),
            qubit_count: n,
            parameters: params.iter().map(|p| p.to_string()).collect(),
        })
        .collect()
}

fn bad_param(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn gate(name: &str, q: usize) -> StepRecord {
    StepRecord::Gate(GateRecord::single(name, q))
}

fn cnot(c: usize, t: usize) -> StepRecord {
    StepRecord::Gate(GateRecord::new("cnot", vec![c], vec![t]))
}

fn ry(angle: f64, q: usize) -> StepRecord {
    StepRecord::Gate(GateRecord::rotation([0.0, 1.0, 0.0], angle, q))
}

fn controlled(name: &str, target: usize, qubit: usize) -> StepRecord {
    StepRecord::Controlled {
        gate: GateRecord::single(name, target),
        conditions: vec![ConditionRecord { qubit, value: 1 }],
    }
}

fn bell(prefix: &[StepRecord]) -> Vec<StepRecord> {
    let mut steps = prefix.to_vec();
    steps.push(gate("h", 0));
    steps.push(cnot(0, 1));
    steps
}

/// `cos(α/2)|0⟩ + sin(α/2)|1⟩` on qubit 0 with `cos²(α/2) = 2/3`, then a
/// rotation of qubit 1 to `|+⟩` controlled on qubit 0 being `|0⟩` (built from
/// two CNOTs), then a Toffoli conditioned on `|00⟩` that flips qubit 2.
fn w_steps() -> Vec<StepRecord> {
    let alpha = 2.0 * (2.0f64 / 3.0).sqrt().acos();
    let mut steps = vec![ry(alpha, 0), gate("x", 0)];
    steps.extend([ry(FRAC_PI_4, 1), cnot(0, 1), ry(-FRAC_PI_4, 1), cnot(0, 1)]);
    // Qubit 0 is still flipped here, so X on qubit 1 makes |00⟩ the Toffoli's |11⟩.
    steps.push(gate("x", 1));
    steps.push(StepRecord::Gate(GateRecord::new("toffoli", vec![0, 1], vec![2])));
    steps.extend([gate("x", 0), gate("x", 1)]);
    steps
}

/// Input preparation on qubit 0, Bell pair on qubits 1 and 2, Bell
/// measurement of qubits 0 and 1, classically controlled X and Z on qubit 2,
/// and the branch mixture.
fn teleport(prep: &[&str]) -> Vec<StepRecord> {
    let mut steps: Vec<StepRecord> = prep.iter().map(|g| gate(g, 0)).collect();
    steps.extend([gate("h", 1), cnot(1, 2), cnot(0, 1), gate("h", 0)]);
    steps.extend([StepRecord::measure_z(0), StepRecord::measure_z(1)]);
    steps.extend([controlled("x", 2, 1), controlled("z", 2, 0), StepRecord::Mix]);
    steps
}

/// Pulses of `e^{-i(σ1z − σ2z)π/4} e^{-iσ2x π/4} e^{-iσ1zσ2z π/4} e^{-iσ2y π/4}`
/// in time order, after preparing `|−⟩|1⟩`.
fn nmr_steps() -> Vec<StepRecord> {
    let ham = |terms: &[(&str, f64)]| StepRecord::Gate(GateRecord::hamiltonian(terms, vec![0, 1]));
    vec![
        gate("x", 0),
        gate("h", 0),
        gate("x", 1),
        ham(&[("iy", FRAC_PI_4)]),
        ham(&[("zz", FRAC_PI_4)]),
        ham(&[("ix", FRAC_PI_4)]),
        ham(&[("zi", FRAC_PI_4), ("iz", -FRAC_PI_4)]),
    ]
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Vec<StepRecord>> {
    Ok(GraphState::new(n, edges)
        .map_err(bad_param)?
        .preparation_gates()
        .iter()
        .map(|g| StepRecord::Gate(GateRecord::from_spec(g)))
        .collect())
}

fn grover(n: usize, params: &PresetParams) -> Result<CircuitDocument> {
    let solution = params.solution.unwrap_or((1 << n) - 1);
    let iterations = params.iterations.unwrap_or(if n == 2 { 1 } else { 2 });
    let g = grover_circuit(n, solution, iterations).map_err(bad_param)?;
    let ends: Vec<String> = g.iteration_ends.iter().map(|k| k.to_string()).collect();
    Ok(CircuitDocument::from_circuit(&g.circuit)
        .with_metadata("solution", solution.to_string())
        .with_metadata("iteration_ends", ends.join(",")))
}

fn gub(params: &PresetParams) -> Result<CircuitDocument> {
    let label: BeadLabel = match &params.label {
        Some(s) => s
            .parse()
            .map_err(|e| CliError::Input(format!("bad bead label {s:?}: {e}")))?,
        None => gub_labels()[0].clone(),
    };
    let positive = params.positive.unwrap_or(true);
    let psi = gub_state(&label, positive, 0.0).map_err(bad_param)?;
    Ok(CircuitDocument::new(3, vec![])
        .with_initial(InitialState::from_state(&psi))
        .with_metadata("label", label.to_string())
        .with_metadata("sign", if positive { "+" } else { "-" }))
}

/// The circuit document of a preset.
pub fn preset(name: &str, params: &PresetParams) -> Result<CircuitDocument> {
    let info = CATALOG
        .iter()
        .find(|(n, ..)| *n == name)
        .ok_or_else(|| CliError::UnknownPreset(name.to_string()))?;
    let n = info.2;
    let doc = match name {
        "bell-phi-plus" => CircuitDocument::new(n, bell(&[])),
        "bell-phi-minus" => CircuitDocument::new(n, bell(&[gate("x", 0)])),
        "bell-psi-plus" => CircuitDocument::new(n, bell(&[gate("x", 1)])),
        "bell-psi-minus" => CircuitDocument::new(n, bell(&[gate("x", 0), gate("x", 1)])),
        "ghz" => CircuitDocument::new(n, vec![gate("h", 0), cnot(0, 1), cnot(1, 2)]),
        "w" => CircuitDocument::new(n, w_steps()),
        "grover2" => grover(2, params)?,
        "grover3" => grover(3, params)?,
        "teleport-1" => CircuitDocument::new(n, teleport(&["x"])),
        "teleport-plus" => CircuitDocument::new(n, teleport(&["h"])),
        "teleport-r" => CircuitDocument::new(n, teleport(&["h", "sz"])),
        "graph-pair" => CircuitDocument::new(n, graph(2, &[(0, 1)])?),
        "graph-path" => CircuitDocument::new(n, graph(3, &[(0, 1), (1, 2)])?),
        "graph-triangle" => CircuitDocument::new(n, graph(3, &[(0, 1), (1, 2), (0, 2)])?),
        "nmr-cnot" => CircuitDocument::new(n, nmr_steps()),
        "schmidt" => {
            let theta = params.theta.unwrap_or(FRAC_PI_4);
            if !theta.is_finite() {
                return Err(CliError::Input(format!("theta must be finite, got {theta}")));
            }
            CircuitDocument::new(n, vec![ry(theta, 0), cnot(0, 1)]).with_metadata("theta", theta.to_string())
        }
        "gub" => gub(params)?,
        _ => unreachable!("catalog entries are matched above"),
    };
    Ok(doc
        .with_metadata("preset", name)
        .with_metadata("description", info.1))
}
