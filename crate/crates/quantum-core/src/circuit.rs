//! Circuits with measurements, classically controlled gates and branch mixing.
//!
//! Execution keeps every measurement branch (including zero-probability ones)
//! as a separate pure state with its classical record. `MixBranches` switches
//! the snapshot view to the weighted mixture; later steps still act branch by
//! branch so classical control keeps working.

use crate::error::{CoreError, Result};
use crate::gate::GateSpec;
use crate::measure::{measure_with_history, MeasurementBranch};
use crate::state::{check_index, check_qubit_count, DensityOperator, PureState};
use crate::linalg::CMatrix;

/// Condition on the classical bit recorded by the latest measurement of `qubit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitCondition {
    pub qubit: usize,
    pub value: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Step {
    Gate(GateSpec),
    Measure { qubit: usize, direction: [f64; 3] },
    MixBranches,
    /// Gate applied only in branches where every condition holds.
    Controlled {
        gate: GateSpec,
        conditions: Vec<BitCondition>,
    },
}

impl Step {
    pub fn gate(&self) -> Option<&GateSpec> {
        match self {
            Step::Gate(g) | Step::Controlled { gate: g, .. } => Some(g),
            _ => None,
        }
    }
}

/// Branch table plus the view flag at one point of a circuit.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub branches: Vec<MeasurementBranch<PureState>>,
    /// True once a `MixBranches` step has been passed.
    pub mixed: bool,
}

impl Snapshot {
    fn initial(psi: PureState) -> Self {
        Snapshot {
            branches: vec![MeasurementBranch {
                outcomes: vec![],
                probability: 1.0,
                post_state: psi,
            }],
            mixed: false,
        }
    }

    /// Weighted mixture over all branches.
    pub fn density(&self) -> DensityOperator {
        let dim = self.branches[0].post_state.dim();
        let mut m = CMatrix::zeros(dim, dim);
        for b in &self.branches {
            m += b.post_state.density().matrix().scale(b.probability);
        }
        DensityOperator::new(m).expect("branch mixture is a density operator")
    }

    /// The single pure state when there is exactly one branch.
    pub fn pure(&self) -> Option<&PureState> {
        match self.branches.as_slice() {
            [only] => Some(&only.post_state),
            _ => None,
        }
    }

    /// Branch whose classical record matches `bits` (one bit per measurement, in order).
    pub fn branch(&self, bits: &[u8]) -> Option<&MeasurementBranch<PureState>> {
        self.branches.iter().find(|b| {
            b.outcomes.len() == bits.len() && b.outcomes.iter().zip(bits).all(|(o, &x)| o.bit == x)
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    qubit_count: usize,
    initial: PureState,
    steps: Vec<Step>,
}

impl Circuit {
    /// Circuit starting from `|0…0⟩`.
    pub fn new(qubit_count: usize, steps: Vec<Step>) -> Result<Self> {
        check_qubit_count(qubit_count)?;
        Self::with_initial(PureState::zero(qubit_count)?, steps)
    }

    pub fn with_initial(initial: PureState, steps: Vec<Step>) -> Result<Self> {
        let c = Circuit {
            qubit_count: initial.qubit_count(),
            initial,
            steps,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn initial(&self) -> &PureState {
        &self.initial
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Check indices, arities, and that classical data exists before it is used.
    pub fn validate(&self) -> Result<()> {
        let n = self.qubit_count;
        let mut measured = vec![false; n];
        for (k, step) in self.steps.iter().enumerate() {
            let ctx = |e: CoreError| CoreError::InvalidCircuit(format!("step {k}: {e}"));
            match step {
                Step::Gate(g) => g.validate(n).map_err(ctx)?,
                Step::Measure { qubit, direction } => {
                    check_index(*qubit, n).map_err(ctx)?;
                    crate::measure::check_direction(*direction).map_err(ctx)?;
                    measured[*qubit] = true;
                }
                Step::MixBranches => {
                    if !measured.iter().any(|&m| m) {
                        return Err(CoreError::InvalidCircuit(format!(
                            "step {k}: branch mixing requires an earlier measurement"
                        )));
                    }
                }
                Step::Controlled { gate, conditions } => {
                    gate.validate(n).map_err(ctx)?;
                    for c in conditions {
                        check_index(c.qubit, n).map_err(ctx)?;
                        if !measured[c.qubit] || c.value > 1 {
                            return Err(CoreError::InvalidCircuit(format!(
                                "step {k}: condition on qubit {} has no prior measurement or a bad bit value",
                                c.qubit
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn apply_step(&self, snap: &Snapshot, step: &Step, t: f64) -> Result<Snapshot> {
        let n = self.qubit_count;
        let evolve = |snap: &Snapshot, gate: &GateSpec, pred: &dyn Fn(&MeasurementBranch) -> bool| {
            let u = gate.propagator_fraction(n, t)?;
            let branches = snap
                .branches
                .iter()
                .map(|b| {
                    Ok(MeasurementBranch {
                        outcomes: b.outcomes.clone(),
                        probability: b.probability,
                        post_state: if pred(b) {
                            b.post_state.evolve(&u)?
                        } else {
                            b.post_state.clone()
                        },
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Snapshot {
                branches,
                mixed: snap.mixed,
            })
        };
        match step {
            Step::Gate(g) => evolve(snap, g, &|_| true),
            Step::Controlled { gate, conditions } => evolve(snap, gate, &|b| {
                conditions.iter().all(|c| b.bit(c.qubit) == Some(c.value))
            }),
            _ if t == 0.0 => Ok(snap.clone()),
            Step::Measure { qubit, direction } => {
                let mut branches = Vec::with_capacity(2 * snap.branches.len());
                for b in &snap.branches {
                    for child in measure_with_history(&b.post_state, &b.outcomes, *qubit, *direction)? {
                        branches.push(MeasurementBranch {
                            probability: b.probability * child.probability,
                            ..child
                        });
                    }
                }
                Ok(Snapshot {
                    branches,
                    mixed: snap.mixed,
                })
            }
            Step::MixBranches => Ok(Snapshot {
                branches: snap.branches.clone(),
                mixed: true,
            }),
        }
    }

    /// Snapshots after 0, 1, …, `steps.len()` steps.
    pub fn run(&self) -> Result<Vec<Snapshot>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(Snapshot::initial(self.initial.clone()));
        for step in &self.steps {
            let next = self.apply_step(out.last().expect("nonempty"), step, 1.0)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Snapshot after the first `k` steps.
    pub fn after(&self, k: usize) -> Result<Snapshot> {
        if k > self.steps.len() {
            return Err(CoreError::InvalidCircuit(format!(
                "step {k} exceeds circuit length {}",
                self.steps.len()
            )));
        }
        let mut snap = Snapshot::initial(self.initial.clone());
        for step in &self.steps[..k] {
            snap = self.apply_step(&snap, step, 1.0)?;
        }
        Ok(snap)
    }

    /// State part-way through step `k`: the first `k` steps are applied in full,
    /// then `exp(-iHt)` of step `k`. Measurement and mixing steps are
    /// instantaneous: `t = 0` shows the state before them, any `t > 0` after.
    pub fn during(&self, k: usize, t: f64) -> Result<Snapshot> {
        if !(0.0..=1.0).contains(&t) || t.is_nan() {
            return Err(CoreError::InvalidTime(t));
        }
        let step = self.steps.get(k).ok_or_else(|| {
            CoreError::InvalidCircuit(format!("no step {k} in a circuit of length {}", self.steps.len()))
        })?;
        let before = self.after(k)?;
        self.apply_step(&before, step, t)
    }
}
