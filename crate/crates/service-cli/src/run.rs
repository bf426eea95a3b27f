//! Scene sequences of a whole circuit, for `circuit run`.
//!
//! A frame position is the number of completed steps plus, for intra-gate
//! frames, the fraction `t` of the next step. Every measurement step adds its
//! branches to the branch table. The seed drives the one random choice of a
//! run: which final branch is reported as the sampled outcome.

use quantum_core::{Circuit, Snapshot, Step};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use render_export::{snapshot_scenes, SceneConfig, SceneSnapshot};
use serde::{Deserialize, Serialize};

use crate::document::CircuitDocument;
use crate::error::Result;

pub const RUN_FORMAT: &str = "beads-run";
pub const RUN_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SnapshotMode {
    /// One frame before the first step and one after every step.
    #[default]
    PerStep,
    /// Per-step frames plus intermediate frames inside every gate.
    Dense,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunOptions {
    pub snapshots: SnapshotMode,
    /// Number of intervals of the `t` grid inside each gate in dense mode.
    pub samples: usize,
    pub seed: u64,
    pub display: SceneConfig,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            snapshots: SnapshotMode::PerStep,
            samples: 4,
            seed: 0,
            display: SceneConfig::default(),
        }
    }
}

/// Where a frame sits in the circuit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position {
    /// Number of fully applied steps.
    pub step: usize,
    /// Fraction of step `step` (0-based) applied on top, if part-way through it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
}

impl Position {
    pub fn after(step: usize) -> Self {
        Position { step, t: None }
    }

    pub fn snapshot(&self, circuit: &Circuit) -> Result<Snapshot> {
        Ok(match self.t {
            Some(t) => circuit.during(self.step, t)?,
            None => circuit.after(self.step)?,
        })
    }
}

/// One measurement branch as listed in branch tables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BranchRow {
    /// Completed steps at which the row was recorded.
    pub step: usize,
    pub qubits: Vec<usize>,
    pub bits: Vec<u8>,
    pub probability: f64,
}

pub fn branch_rows(step: usize, snapshot: &Snapshot) -> Vec<BranchRow> {
    snapshot
        .branches
        .iter()
        .map(|b| BranchRow {
            step,
            qubits: b.outcomes.iter().map(|o| o.qubit).collect(),
            bits: b.outcomes.iter().map(|o| o.bit).collect(),
            probability: b.probability,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub position: Position,
    /// Step description, e.g. `h 0`; `initial` for the first frame.
    pub label: String,
    pub mixed: bool,
    pub scenes: Vec<SceneSnapshot>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunDocument {
    pub format: String,
    pub version: u32,
    pub qubit_count: usize,
    pub snapshots: SnapshotMode,
    pub seed: u64,
    pub frames: Vec<Frame>,
    pub branches: Vec<BranchRow>,
    /// Final branch drawn with the seed, weighted by probability.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampled: Option<BranchRow>,
}

impl RunDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("run documents serialize")
    }
}

fn frame(position: Position, label: String, snap: &Snapshot, display: &SceneConfig) -> Result<Frame> {
    Ok(Frame {
        position,
        label,
        mixed: snap.mixed,
        scenes: snapshot_scenes(snap, display)?,
    })
}

/// Pick a branch index with probability proportional to its weight.
pub fn sample_branch(snapshot: &Snapshot, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u: f64 = rng.gen();
    let total: f64 = snapshot.branches.iter().map(|b| b.probability).sum();
    let mut acc = 0.0;
    for (i, b) in snapshot.branches.iter().enumerate() {
        acc += b.probability / total;
        if u < acc {
            return i;
        }
    }
    snapshot
        .branches
        .iter()
        .rposition(|b| b.probability > 0.0)
        .unwrap_or(snapshot.branches.len() - 1)
}

pub fn run_circuit(doc: &CircuitDocument, options: &RunOptions) -> Result<RunDocument> {
    let circuit = doc.to_circuit()?;
    let snaps = circuit.run()?;
    let mut frames = vec![frame(Position::after(0), "initial".into(), &snaps[0], &options.display)?];
    let mut branches = Vec::new();
    for (k, step) in circuit.steps().iter().enumerate() {
        let label = doc.steps[k].describe();
        if options.snapshots == SnapshotMode::Dense && step.gate().is_some() {
            for i in 1..options.samples {
                let t = i as f64 / options.samples as f64;
                let position = Position { step: k, t: Some(t) };
                frames.push(frame(position, label.clone(), &circuit.during(k, t)?, &options.display)?);
            }
        }
        frames.push(frame(Position::after(k + 1), label, &snaps[k + 1], &options.display)?);
        if matches!(step, Step::Measure { .. }) {
            branches.extend(branch_rows(k + 1, &snaps[k + 1]));
        }
    }
    let last = snaps.last().expect("initial snapshot");
    let sampled = (last.branches.len() > 1).then(|| {
        let i = sample_branch(last, options.seed);
        branch_rows(circuit.steps().len(), last).swap_remove(i)
    });
    Ok(RunDocument {
        format: RUN_FORMAT.into(),
        version: RUN_VERSION,
        qubit_count: circuit.qubit_count(),
        snapshots: options.snapshots,
        seed: options.seed,
        frames,
        branches,
        sampled,
    })
}
