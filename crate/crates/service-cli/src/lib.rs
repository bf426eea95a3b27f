//! The `beads` tool: circuit documents, the preset library, scene export for
//! states and circuits, and the line-delimited JSON session protocol that a
//! viewer drives.

pub mod document;
pub mod error;
pub mod input;
pub mod presets;
pub mod run;
pub mod session;

pub use document::{
    CircuitDocument, ComplexValue, ConditionRecord, GateRecord, InitialState, PauliTerm, StepRecord, CIRCUIT_FORMAT,
    CIRCUIT_VERSION,
};
pub use error::{CliError, Result};
pub use input::{parse_state, StateFile, STATE_FORMAT, STATE_VERSION};
pub use presets::{list_presets, preset, PresetInfo, PresetParams};
pub use run::{run_circuit, sample_branch, BranchRow, Frame, Position, RunDocument, RunOptions, SnapshotMode};
pub use session::{ply_file_name, PatchOp, ProtocolError, Session, SESSION_VERSION};

use quantum_core::DensityOperator;

/// Final state of a circuit: the pure state of a single branch, otherwise the
/// probability-weighted mixture of all branches.
pub fn final_state(doc: &CircuitDocument) -> Result<DensityOperator> {
    let circuit = doc.to_circuit()?;
    let last = circuit.after(circuit.steps().len())?;
    Ok(last.density())
}
