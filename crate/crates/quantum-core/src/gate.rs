//! Gate catalog. Every gate is stored through a Hermitian generator `H` with
//! `U = exp(-iH)`, so fractional propagators `exp(-iHt)` are available for
//! visualizing the dynamics inside a gate.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{CoreError, Result};
use crate::linalg::{check_hermitian, embed_operator, expm_hermitian, kron, real_matrix, CMatrix};
use crate::pauli::{sigma_dir, Pauli};
use crate::state::{check_index, QuantumState, HERMITIAN_TOL};

/// Catalog entry. Angles are in radians.
#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    X,
    Y,
    Z,
    H,
    /// `diag(1, e^{iφ})` up to global phase.
    Phase(f64),
    SqrtX,
    SqrtY,
    SqrtZ,
    SqrtXInv,
    SqrtYInv,
    SqrtZInv,
    /// 120° rotation about `(1,1,1)/√3`, cycling the axes x → y → z → x.
    AxisCycle,
    /// Rotation by `angle` about an arbitrary axis.
    Rotation { axis: [f64; 3], angle: f64 },
    Cnot,
    Cz,
    Swap,
    Toffoli,
    /// `diag(1, 1, 1, e^{iφ})` up to global phase.
    ControlledPhase(f64),
    /// Arbitrary Hermitian generator on the listed targets.
    Hamiltonian(CMatrix),
}

impl GateKind {
    /// Stable identifier used by circuit files.
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::H => "h",
            GateKind::Phase(_) => "phase",
            GateKind::SqrtX => "sx",
            GateKind::SqrtY => "sy",
            GateKind::SqrtZ => "sz",
            GateKind::SqrtXInv => "sxdg",
            GateKind::SqrtYInv => "sydg",
            GateKind::SqrtZInv => "szdg",
            GateKind::AxisCycle => "c",
            GateKind::Rotation { .. } => "rot",
            GateKind::Cnot => "cnot",
            GateKind::Cz => "cz",
            GateKind::Swap => "swap",
            GateKind::Toffoli => "toffoli",
            GateKind::ControlledPhase(_) => "cphase",
            GateKind::Hamiltonian(_) => "hamiltonian",
        }
    }

    /// Angle parameter for parametrized gates.
    pub fn parameter(&self) -> Option<f64> {
        match self {
            GateKind::Phase(p) | GateKind::ControlledPhase(p) => Some(*p),
            GateKind::Rotation { angle, .. } => Some(*angle),
            _ => None,
        }
    }

    /// Number of control and target qubits the gate expects.
    /// `None` targets means "any number" (Hamiltonian gates).
    pub fn arity(&self) -> (usize, Option<usize>) {
        match self {
            GateKind::Cnot | GateKind::Cz | GateKind::ControlledPhase(_) => (1, Some(1)),
            GateKind::Toffoli => (2, Some(1)),
            GateKind::Swap => (0, Some(2)),
            GateKind::Hamiltonian(_) => (0, None),
            _ => (0, Some(1)),
        }
    }

    /// Generator on the gate's own qubits (controls first, then targets).
    pub fn local_generator(&self) -> Result<CMatrix> {
        let rot = |axis: [f64; 3], angle: f64| -> Result<CMatrix> {
            let len = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
            if len < 1e-12 {
                return Err(CoreError::InvalidDirection(len));
            }
            let unit = [axis[0] / len, axis[1] / len, axis[2] / len];
            Ok(sigma_dir(unit).scale(angle / 2.0))
        };
        let p1 = real_matrix(2, 2, &[0.0, 0.0, 0.0, 1.0]);
        let flip = real_matrix(2, 2, &[0.5, -0.5, -0.5, 0.5]);
        let s3 = 1.0 / 3f64.sqrt();
        match self {
            GateKind::X => rot([1.0, 0.0, 0.0], PI),
            GateKind::Y => rot([0.0, 1.0, 0.0], PI),
            GateKind::Z => rot([0.0, 0.0, 1.0], PI),
            GateKind::H => rot([FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2], PI),
            GateKind::Phase(phi) => rot([0.0, 0.0, 1.0], *phi),
            GateKind::SqrtX => rot([1.0, 0.0, 0.0], PI / 2.0),
            GateKind::SqrtY => rot([0.0, 1.0, 0.0], PI / 2.0),
            GateKind::SqrtZ => rot([0.0, 0.0, 1.0], PI / 2.0),
            GateKind::SqrtXInv => rot([1.0, 0.0, 0.0], -PI / 2.0),
            GateKind::SqrtYInv => rot([0.0, 1.0, 0.0], -PI / 2.0),
            GateKind::SqrtZInv => rot([0.0, 0.0, 1.0], -PI / 2.0),
            GateKind::AxisCycle => rot([s3, s3, s3], 2.0 * PI / 3.0),
            GateKind::Rotation { axis, angle } => rot(*axis, *angle),
            GateKind::Cnot => Ok(kron(&p1, &flip).scale(PI)),
            GateKind::Cz => Ok(kron(&p1, &p1).scale(PI)),
            GateKind::ControlledPhase(phi) => Ok(kron(&p1, &p1).scale(-phi)),
            GateKind::Swap => {
                let swap = real_matrix(
                    4,
                    4,
                    &[
                        1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                        1.0,
                    ],
                );
                Ok((CMatrix::identity(4, 4) - swap).scale(PI / 2.0))
            }
            GateKind::Toffoli => Ok(kron(&kron(&p1, &p1), &flip).scale(PI)),
            GateKind::Hamiltonian(h) => {
                check_hermitian(h, HERMITIAN_TOL)?;
                Ok(h.clone())
            }
        }
    }

    /// Inverse gate kind (same qubits).
    pub fn inverse(&self) -> GateKind {
        match self {
            GateKind::Phase(p) => GateKind::Phase(-p),
            GateKind::SqrtX => GateKind::SqrtXInv,
            GateKind::SqrtY => GateKind::SqrtYInv,
            GateKind::SqrtZ => GateKind::SqrtZInv,
            GateKind::SqrtXInv => GateKind::SqrtX,
            GateKind::SqrtYInv => GateKind::SqrtY,
            GateKind::SqrtZInv => GateKind::SqrtZ,
            GateKind::AxisCycle => GateKind::Rotation {
                axis: [1.0, 1.0, 1.0],
                angle: -2.0 * PI / 3.0,
            },
            GateKind::Rotation { axis, angle } => GateKind::Rotation {
                axis: *axis,
                angle: -angle,
            },
            GateKind::ControlledPhase(p) => GateKind::ControlledPhase(-p),
            GateKind::Hamiltonian(h) => GateKind::Hamiltonian(-h),
            other => other.clone(),
        }
    }

    /// Single-qubit gate from a Pauli axis letter, for convenience.
    pub fn pauli(p: Pauli) -> Option<GateKind> {
        match p {
            Pauli::I => None,
            Pauli::X => Some(GateKind::X),
            Pauli::Y => Some(GateKind::Y),
            Pauli::Z => Some(GateKind::Z),
        }
    }
}

/// Gate kind bound to concrete qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct GateSpec {
    pub kind: GateKind,
    pub controls: Vec<usize>,
    pub targets: Vec<usize>,
}

impl GateSpec {
    pub fn new(kind: GateKind, controls: Vec<usize>, targets: Vec<usize>) -> Self {
        GateSpec {
            kind,
            controls,
            targets,
        }
    }

    pub fn single(kind: GateKind, target: usize) -> Self {
        Self::new(kind, vec![], vec![target])
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Self::new(GateKind::Cnot, vec![control], vec![target])
    }

    pub fn cz(a: usize, b: usize) -> Self {
        Self::new(GateKind::Cz, vec![a], vec![b])
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::new(GateKind::Swap, vec![], vec![a, b])
    }

    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Self {
        Self::new(GateKind::Toffoli, vec![c1, c2], vec![target])
    }

    pub fn hamiltonian(h: CMatrix, targets: Vec<usize>) -> Self {
        Self::new(GateKind::Hamiltonian(h), vec![], targets)
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// All qubits the gate touches, controls first.
    pub fn qubits(&self) -> Vec<usize> {
        self.controls.iter().chain(&self.targets).copied().collect()
    }

    /// Check arity, index range and distinctness for an `n`-qubit register.
    pub fn validate(&self, n: usize) -> Result<()> {
        let (nc, nt) = self.kind.arity();
        let arity_err = |expected, found| CoreError::GateArity {
            gate: self.name().to_string(),
            expected,
            found,
        };
        if self.controls.len() != nc {
            return Err(arity_err(nc, self.controls.len()));
        }
        match nt {
            Some(t) if self.targets.len() != t => return Err(arity_err(t, self.targets.len())),
            None if self.targets.is_empty() => return Err(arity_err(1, 0)),
            _ => {}
        }
        if let GateKind::Hamiltonian(h) = &self.kind {
            let dim = 1usize << self.targets.len();
            if h.nrows() != dim || h.ncols() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: h.nrows(),
                });
            }
        }
        let qs = self.qubits();
        for (i, &q) in qs.iter().enumerate() {
            check_index(q, n)?;
            if qs[..i].contains(&q) {
                return Err(CoreError::DuplicateIndex(q));
            }
        }
        Ok(())
    }

    /// Generator embedded in the `n`-qubit space.
    pub fn generator(&self, n: usize) -> Result<CMatrix> {
        self.validate(n)?;
        Ok(embed_operator(&self.kind.local_generator()?, &self.qubits(), n))
    }

    /// Full unitary `exp(-iH)`.
    pub fn unitary(&self, n: usize) -> Result<CMatrix> {
        self.propagator_fraction(n, 1.0)
    }

    /// `exp(-iHt)` for `t ∈ [0, 1]`.
    pub fn propagator_fraction(&self, n: usize, t: f64) -> Result<CMatrix> {
        if !(0.0..=1.0).contains(&t) || t.is_nan() {
            return Err(CoreError::InvalidTime(t));
        }
        Ok(expm_hermitian(&self.generator(n)?, t))
    }

    pub fn inverse(&self) -> GateSpec {
        GateSpec::new(self.kind.inverse(), self.controls.clone(), self.targets.clone())
    }
}

/// `U ψ` or `U ρ U†`.
pub fn apply_gate<S: QuantumState>(state: &S, gate: &GateSpec) -> Result<S> {
    let u = gate.unitary(state.qubit_count())?;
    state.apply_unitary(&u)
}

/// Apply `exp(-iHt)` for the gate's generator.
pub fn apply_gate_fraction<S: QuantumState>(state: &S, gate: &GateSpec, t: f64) -> Result<S> {
    let u = gate.propagator_fraction(state.qubit_count(), t)?;
    state.apply_unitary(&u)
}

/// Free evolution `exp(-iHt)` under a full-register Hermitian `H`.
pub fn hamiltonian_evolution<S: QuantumState>(state: &S, h: &CMatrix, t: f64) -> Result<S> {
    check_hermitian(h, HERMITIAN_TOL)?;
    let dim = 1usize << state.qubit_count();
    if h.nrows() != dim {
        return Err(CoreError::DimensionMismatch {
            expected: dim,
            found: h.nrows(),
        });
    }
    state.apply_unitary(&expm_hermitian(h, t))
}
