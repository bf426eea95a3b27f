//! Versioned circuit files and their conversion to simulator circuits.
//!
//! A document lists the register size, an optional initial state and the
//! steps in execution order. Gate records name a catalog gate with its control
//! and target qubits (0-based); parametrized gates carry `angle` and `axis`,
//! Hamiltonian gates carry Pauli terms or an explicit matrix. Measurement
//! records give a qubit and a unit direction, `mix` switches to the branch
//! mixture, and `controlled` records apply a gate only in branches whose
//! recorded bits match all conditions.

use std::collections::BTreeMap;

use quantum_core::{pauli_str, BitCondition, CMatrix, CVector, Circuit, GateKind, GateSpec, PureState, Step, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const CIRCUIT_FORMAT: &str = "beads-circuit";
pub const CIRCUIT_VERSION: u32 = 1;

/// A complex number written as a plain real or as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexValue {
    Real(f64),
    Pair([f64; 2]),
}

impl ComplexValue {
    pub fn to_c64(self) -> C64 {
        match self {
            ComplexValue::Real(x) => C64::new(x, 0.0),
            ComplexValue::Pair([re, im]) => C64::new(re, im),
        }
    }

    pub fn from_c64(z: C64) -> Self {
        if z.im == 0.0 {
            ComplexValue::Real(z.re)
        } else {
            ComplexValue::Pair([z.re, z.im])
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InitialState {
    /// Computational basis state, most significant qubit first, e.g. `"010"`.
    Bits { bits: String },
    /// Normalized state vector in big-endian basis order.
    Amplitudes { amplitudes: Vec<ComplexValue> },
}

/// `coefficient · σ_{p_1} ⊗ … ⊗ σ_{p_k}` over the gate's target qubits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PauliTerm {
    pub pauli: String,
    pub coefficient: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateRecord {
    pub gate: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub controls: Vec<usize>,
    pub targets: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<PauliTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<ComplexValue>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionRecord {
    pub qubit: usize,
    pub value: u8,
}

fn z_axis() -> [f64; 3] {
    [0.0, 0.0, 1.0]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum StepRecord {
    Gate(GateRecord),
    Measure {
        qubit: usize,
        #[serde(default = "z_axis")]
        direction: [f64; 3],
    },
    Mix,
    Controlled {
        gate: GateRecord,
        conditions: Vec<ConditionRecord>,
    },
}

fn default_format() -> String {
    CIRCUIT_FORMAT.to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDocument {
    #[serde(default = "default_format")]
    pub format: String,
    pub version: u32,
    pub qubit_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<InitialState>,
    pub steps: Vec<StepRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

impl GateRecord {
    pub fn new(gate: &str, controls: Vec<usize>, targets: Vec<usize>) -> Self {
        GateRecord {
            gate: gate.to_string(),
            controls,
            targets,
            angle: None,
            axis: None,
            terms: None,
            matrix: None,
        }
    }

    pub fn single(gate: &str, target: usize) -> Self {
        Self::new(gate, vec![], vec![target])
    }

    /// `exp(-i·angle/2·σ_axis)`.
    pub fn rotation(axis: [f64; 3], angle: f64, target: usize) -> Self {
        GateRecord {
            axis: Some(axis),
            angle: Some(angle),
            ..Self::single("rot", target)
        }
    }

    pub fn hamiltonian(terms: &[(&str, f64)], targets: Vec<usize>) -> Self {
        GateRecord {
            terms: Some(
                terms
                    .iter()
                    .map(|&(p, c)| PauliTerm {
                        pauli: p.to_string(),
                        coefficient: c,
                    })
                    .collect(),
            ),
            ..Self::new("hamiltonian", vec![], targets)
        }
    }

    fn angle(&self) -> Result<f64> {
        self.angle
            .ok_or_else(|| input(format!("gate {} needs an angle", self.gate)))
    }

    fn hamiltonian_matrix(&self) -> Result<CMatrix> {
        let dim = 1usize << self.targets.len().min(quantum_core::MAX_QUBITS);
        match (&self.terms, &self.matrix) {
            (Some(terms), None) => {
                let mut h = CMatrix::zeros(dim, dim);
                for t in terms {
                    if t.pauli.len() != self.targets.len()
                        || !t.pauli.chars().all(|c| matches!(c, 'i' | 'x' | 'y' | 'z'))
                    {
                        return Err(input(format!(
                            "Pauli string {:?} must use i/x/y/z once per target qubit",
                            t.pauli
                        )));
                    }
                    h += pauli_str(&t.pauli).scale(t.coefficient);
                }
                Ok(h)
            }
            (None, Some(rows)) => {
                if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    return Err(input(format!("Hamiltonian matrix must be {dim}×{dim}")));
                }
                Ok(CMatrix::from_fn(dim, dim, |i, j| rows[i][j].to_c64()))
            }
            _ => Err(input("hamiltonian gates need exactly one of terms or matrix")),
        }
    }

    fn kind(&self) -> Result<GateKind> {
        let plain = |k: GateKind| -> Result<GateKind> {
            if self.angle.is_some() || self.axis.is_some() || self.terms.is_some() || self.matrix.is_some() {
                Err(input(format!("gate {} takes no parameters", self.gate)))
            } else {
                Ok(k)
            }
        };
        match self.gate.as_str() {
            "x" => plain(GateKind::X),
            "y" => plain(GateKind::Y),
            "z" => plain(GateKind::Z),
            "h" => plain(GateKind::H),
            "sx" => plain(GateKind::SqrtX),
            "sy" => plain(GateKind::SqrtY),
            "sz" => plain(GateKind::SqrtZ),
            "sxdg" => plain(GateKind::SqrtXInv),
            "sydg" => plain(GateKind::SqrtYInv),
            "szdg" => plain(GateKind::SqrtZInv),
            "c" => plain(GateKind::AxisCycle),
            "cnot" => plain(GateKind::Cnot),
            "cz" => plain(GateKind::Cz),
            "swap" => plain(GateKind::Swap),
            "toffoli" => plain(GateKind::Toffoli),
            "phase" => Ok(GateKind::Phase(self.angle()?)),
            "cphase" => Ok(GateKind::ControlledPhase(self.angle()?)),
            "rot" => Ok(GateKind::Rotation {
                axis: self
                    .axis
                    .ok_or_else(|| input("gate rot needs an axis"))?,
                angle: self.angle()?,
            }),
            "hamiltonian" => Ok(GateKind::Hamiltonian(self.hamiltonian_matrix()?)),
            other => Err(input(format!("unknown gate {other:?}"))),
        }
    }

    pub fn to_spec(&self) -> Result<GateSpec> {
        Ok(GateSpec::new(self.kind()?, self.controls.clone(), self.targets.clone()))
    }

    /// Record of a simulator gate. Hamiltonian gates are written as matrices.
    pub fn from_spec(spec: &GateSpec) -> Self {
        let mut r = Self::new(spec.name(), spec.controls.clone(), spec.targets.clone());
        match &spec.kind {
            GateKind::Phase(a) | GateKind::ControlledPhase(a) => r.angle = Some(*a),
            GateKind::Rotation { axis, angle } => {
                r.axis = Some(*axis);
                r.angle = Some(*angle);
            }
            GateKind::Hamiltonian(h) => {
                r.matrix = Some(
                    (0..h.nrows())
                        .map(|i| (0..h.ncols()).map(|j| ComplexValue::from_c64(h[(i, j)])).collect())
                        .collect(),
                )
            }
            _ => {}
        }
        r
    }
}

impl StepRecord {
    pub fn gate(g: GateRecord) -> Self {
        StepRecord::Gate(g)
    }

    pub fn measure_z(qubit: usize) -> Self {
        StepRecord::Measure {
            qubit,
            direction: z_axis(),
        }
    }

    pub fn to_step(&self) -> Result<Step> {
        Ok(match self {
            StepRecord::Gate(g) => Step::Gate(g.to_spec()?),
            StepRecord::Measure { qubit, direction } => Step::Measure {
                qubit: *qubit,
                direction: *direction,
            },
            StepRecord::Mix => Step::MixBranches,
            StepRecord::Controlled { conditions, .. } if conditions.is_empty() => {
                return Err(input("controlled steps need at least one condition"))
            }
            StepRecord::Controlled { gate, conditions } => Step::Controlled {
                gate: gate.to_spec()?,
                conditions: conditions
                    .iter()
                    .map(|c| BitCondition {
                        qubit: c.qubit,
                        value: c.value,
                    })
                    .collect(),
            },
        })
    }

    pub fn from_step(step: &Step) -> Self {
        match step {
            Step::Gate(g) => StepRecord::Gate(GateRecord::from_spec(g)),
            Step::Measure { qubit, direction } => StepRecord::Measure {
                qubit: *qubit,
                direction: *direction,
            },
            Step::MixBranches => StepRecord::Mix,
            Step::Controlled { gate, conditions } => StepRecord::Controlled {
                gate: GateRecord::from_spec(gate),
                conditions: conditions
                    .iter()
                    .map(|c| ConditionRecord {
                        qubit: c.qubit,
                        value: c.value,
                    })
                    .collect(),
            },
        }
    }

    /// Short human-readable name, e.g. `cnot 0→1` or `measure 2`.
    pub fn describe(&self) -> String {
        let qubits = |g: &GateRecord| {
            let c: Vec<String> = g.controls.iter().map(|q| q.to_string()).collect();
            let t: Vec<String> = g.targets.iter().map(|q| q.to_string()).collect();
            if c.is_empty() {
                t.join(",")
            } else {
                format!("{}→{}", c.join(","), t.join(","))
            }
        };
        match self {
            StepRecord::Gate(g) => format!("{} {}", g.gate, qubits(g)),
            StepRecord::Measure { qubit, .. } => format!("measure {qubit}"),
            StepRecord::Mix => "mix".to_string(),
            StepRecord::Controlled { gate, conditions } => {
                let c: Vec<String> = conditions.iter().map(|c| format!("m{}={}", c.qubit, c.value)).collect();
                format!("{} {} if {}", gate.gate, qubits(gate), c.join("&"))
            }
        }
    }
}

impl InitialState {
    pub fn to_state(&self) -> Result<PureState> {
        match self {
            InitialState::Bits { bits } => Ok(PureState::from_bits(bits)?),
            InitialState::Amplitudes { amplitudes } => Ok(PureState::new(CVector::from_iterator(
                amplitudes.len(),
                amplitudes.iter().map(|a| a.to_c64()),
            ))?),
        }
    }

    pub fn from_state(psi: &PureState) -> Self {
        InitialState::Amplitudes {
            amplitudes: psi.amplitudes().iter().map(|&z| ComplexValue::from_c64(z)).collect(),
        }
    }
}

impl CircuitDocument {
    pub fn new(qubit_count: usize, steps: Vec<StepRecord>) -> Self {
        CircuitDocument {
            format: default_format(),
            version: CIRCUIT_VERSION,
            qubit_count,
            initial: None,
            steps,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: &str, value: impl Into<String>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }

    pub fn with_initial(mut self, initial: InitialState) -> Self {
        self.initial = Some(initial);
        self
    }

    /// Document of a simulator circuit; the initial state is recorded unless it is `|0…0⟩`.
    pub fn from_circuit(circuit: &Circuit) -> Self {
        let n = circuit.qubit_count();
        let mut doc = Self::new(n, circuit.steps().iter().map(StepRecord::from_step).collect());
        let zero = PureState::zero(n).expect("valid qubit count");
        if circuit.initial() != &zero {
            doc.initial = Some(InitialState::from_state(circuit.initial()));
        }
        doc
    }

    /// Parse a document, reporting the position of JSON errors.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CircuitDocument = serde_json::from_str(text).map_err(|e| CliError::parse(&e))?;
        doc.check_header()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn check_header(&self) -> Result<()> {
        if self.format != CIRCUIT_FORMAT {
            return Err(input(format!("expected format {CIRCUIT_FORMAT}, found {}", self.format)));
        }
        if self.version != CIRCUIT_VERSION {
            return Err(input(format!("unsupported circuit version {}", self.version)));
        }
        Ok(())
    }

    /// The validated simulator circuit.
    pub fn to_circuit(&self) -> Result<Circuit> {
        self.check_header()?;
        let initial = match &self.initial {
            Some(init) => init.to_state()?,
            None => PureState::zero(self.qubit_count)?,
        };
        if initial.qubit_count() != self.qubit_count {
            return Err(input(format!(
                "initial state has {} qubits, document declares {}",
                initial.qubit_count(),
                self.qubit_count
            )));
        }
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(k, s)| s.to_step().map_err(|e| input(format!("step {k}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Circuit::with_initial(initial, steps)?)
    }
}
