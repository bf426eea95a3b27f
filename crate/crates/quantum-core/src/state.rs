//! Pure states and density operators.
//!
//! Basis ordering is big-endian: qubit 0 is the most significant bit of the
//! basis index, so `|q0 q1 q2⟩` has index `4·q0 + 2·q1 + q2`.

use crate::error::{CoreError, Result};
use crate::linalg::{check_hermitian, eigh, trace_product, CMatrix, CVector, C64, ZERO};
use crate::pauli::sigma_dir;

pub const MAX_QUBITS: usize = 3;
pub const NORM_TOL: f64 = 1e-9;
pub const HERMITIAN_TOL: f64 = 1e-10;

pub fn check_qubit_count(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(CoreError::QubitCount(n))
    }
}

/// Number of qubits for a Hilbert-space dimension, if it is a supported power of two.
pub fn qubits_for_dim(dim: usize) -> Result<usize> {
    match dim {
        2 => Ok(1),
        4 => Ok(2),
        8 => Ok(3),
        _ => Err(CoreError::DimensionMismatch {
            expected: 8,
            found: dim,
        }),
    }
}

pub fn check_index(q: usize, n: usize) -> Result<()> {
    if q < n {
        Ok(())
    } else {
        Err(CoreError::IndexOutOfRange {
            index: q,
            qubit_count: n,
        })
    }
}

/// Normalized state vector of one to three qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: CVector,
    qubit_count: usize,
}

impl PureState {
    /// Validate and wrap an amplitude vector.
    pub fn new(amplitudes: CVector) -> Result<Self> {
        let n = qubits_for_dim(amplitudes.len())?;
        let norm2 = amplitudes.norm_squared();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(CoreError::NotNormalized(norm2));
        }
        Ok(PureState {
            amplitudes,
            qubit_count: n,
        })
    }

    /// Normalize an arbitrary nonzero vector first.
    pub fn normalized(amplitudes: CVector) -> Result<Self> {
        let norm = amplitudes.norm();
        if norm < 1e-300 {
            return Err(CoreError::NotNormalized(0.0));
        }
        Self::new(amplitudes.unscale(norm))
    }

    pub fn from_slice(amps: &[C64]) -> Result<Self> {
        Self::new(CVector::from_column_slice(amps))
    }

    /// Computational basis state with the given index.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1 << n;
        if index >= dim {
            return Err(CoreError::IndexOutOfRange {
                index,
                qubit_count: n,
            });
        }
        let mut v = CVector::zeros(dim);
        v[index] = C64::new(1.0, 0.0);
        Self::new(v)
    }

    /// Basis state from a bit string such as `"010"`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let n = bits.len();
        check_qubit_count(n)?;
        let mut index = 0;
        for c in bits.chars() {
            index = (index << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(CoreError::InvalidCircuit(format!("bad bit {c:?}"))),
                };
        }
        Self::basis(n, index)
    }

    /// `|0…0⟩` on `n` qubits.
    pub fn zero(n: usize) -> Result<Self> {
        Self::basis(n, 0)
    }

    /// Tensor product of single-qubit states (qubit 0 first).
    pub fn product(factors: &[PureState]) -> Result<Self> {
        if factors.iter().any(|f| f.qubit_count != 1) {
            return Err(CoreError::DimensionMismatch {
                expected: 2,
                found: factors.iter().map(|f| f.dim()).max().unwrap_or(0),
            });
        }
        check_qubit_count(factors.len())?;
        let mut v = CVector::from_element(1, C64::new(1.0, 0.0));
        for f in factors {
            v = v.kronecker(&f.amplitudes);
        }
        Self::new(v)
    }

    /// Single-qubit spin-up state along the unit vector `r` (Bloch vector `r`).
    pub fn spin_up(r: [f64; 3]) -> Result<Self> {
        let len = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if (len - 1.0).abs() > NORM_TOL {
            return Err(CoreError::InvalidDirection(len));
        }
        let (values, vecs) = eigh(&sigma_dir(r));
        debug_assert!(values[1] > 0.0);
        Self::new(canonical_phase(vecs.column(1).into_owned()))
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &PureState) -> Result<Self> {
        Self::new(self.amplitudes.kronecker(&other.amplitudes))
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// `|ψ⟩⟨ψ|` as a density operator.
    pub fn density(&self) -> DensityOperator {
        let m = &self.amplitudes * self.amplitudes.adjoint();
        DensityOperator {
            matrix: m,
            qubit_count: self.qubit_count,
        }
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &PureState) -> f64 {
        self.amplitudes.dotc(&other.amplitudes).norm_sqr()
    }

    /// Apply a unitary of matching dimension.
    pub fn evolve(&self, u: &CMatrix) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim(),
                found: u.nrows(),
            });
        }
        // Renormalize to stop rounding drift across long gate sequences.
        Self::normalized(u * &self.amplitudes)
    }

    /// Copy with the global phase fixed so the largest amplitude is real and positive.
    pub fn with_canonical_phase(&self) -> Self {
        PureState {
            amplitudes: canonical_phase(self.amplitudes.clone()),
            qubit_count: self.qubit_count,
        }
    }

    /// True if the state is invariant under every exchange of two qubits.
    pub fn is_permutation_symmetric(&self, tol: f64) -> bool {
        let n = self.qubit_count;
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                (0..self.dim()).all(|i| {
                    let j = swap_bits(i, n - 1 - a, n - 1 - b);
                    (self.amplitudes[i] - self.amplitudes[j]).norm() <= tol
                })
            })
        })
    }
}

fn swap_bits(i: usize, a: usize, b: usize) -> usize {
    let ba = (i >> a) & 1;
    let bb = (i >> b) & 1;
    if ba == bb {
        i
    } else {
        i ^ ((1 << a) | (1 << b))
    }
}

fn canonical_phase(mut v: CVector) -> CVector {
    let lead = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(ZERO);
    if lead.norm() > 0.0 {
        let phase = lead / lead.norm();
        v.apply(|z| *z /= phase);
    }
    v
}

/// Hermitian, unit-trace, positive semidefinite operator on one to three qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: CMatrix,
    qubit_count: usize,
}

impl DensityOperator {
    /// Validate Hermiticity, trace and positivity.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let n = Self::validate_shape(&matrix)?;
        check_hermitian(&matrix, HERMITIAN_TOL)?;
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > HERMITIAN_TOL || tr.im.abs() > HERMITIAN_TOL {
            return Err(CoreError::BadTrace(tr.re));
        }
        let (values, _) = eigh(&matrix);
        if values[0] < -1e-9 {
            return Err(CoreError::NotPositive(values[0]));
        }
        Ok(DensityOperator {
            matrix,
            qubit_count: n,
        })
    }

    fn validate_shape(matrix: &CMatrix) -> Result<usize> {
        if matrix.nrows() != matrix.ncols() {
            return Err(CoreError::DimensionMismatch {
                expected: matrix.nrows(),
                found: matrix.ncols(),
            });
        }
        qubits_for_dim(matrix.nrows())
    }

    /// `I / 2^n`.
    pub fn maximally_mixed(n: usize) -> Result<Self> {
        check_qubit_count(n)?;
        let dim = 1 << n;
        Ok(DensityOperator {
            matrix: CMatrix::identity(dim, dim).unscale(dim as f64),
            qubit_count: n,
        })
    }

    /// Convex mixture `Σ p_k ρ_k`.
    pub fn mixture(weights: &[f64], states: &[DensityOperator]) -> Result<Self> {
        let first = states.first().ok_or(CoreError::EmptyBranches)?;
        let mut m = CMatrix::zeros(first.dim(), first.dim());
        for (&p, s) in weights.iter().zip(states) {
            if s.dim() != first.dim() {
                return Err(CoreError::DimensionMismatch {
                    expected: first.dim(),
                    found: s.dim(),
                });
            }
            m += s.matrix.scale(p);
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `Tr(ρ²)`.
    pub fn purity(&self) -> f64 {
        trace_product(&self.matrix, &self.matrix).re
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        eigh(&self.matrix).0
    }

    /// `U ρ U†`.
    pub fn evolve(&self, u: &CMatrix) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(CoreError::DimensionMismatch {
                expected: self.dim(),
                found: u.nrows(),
            });
        }
        let m = u * &self.matrix * u.adjoint();
        Ok(DensityOperator {
            matrix: (&m + m.adjoint()).scale(0.5),
            qubit_count: self.qubit_count,
        })
    }

    /// `⟨ψ|ρ|ψ⟩`.
    pub fn fidelity_with(&self, psi: &PureState) -> f64 {
        let a = psi.amplitudes();
        (a.adjoint() * &self.matrix * a)[(0, 0)].re
    }

    /// The dominant eigenvector if the state is pure within `tol`.
    pub fn as_pure(&self, tol: f64) -> Option<PureState> {
        if (self.purity() - 1.0).abs() > tol {
            return None;
        }
        let (_, vecs) = eigh(&self.matrix);
        PureState::normalized(vecs.column(self.dim() - 1).into_owned())
            .ok()
            .map(|s| s.with_canonical_phase())
    }

    /// Wrap a matrix already known to be a valid density operator.
    pub(crate) fn from_trusted(matrix: CMatrix, qubit_count: usize) -> Self {
        DensityOperator {
            matrix,
            qubit_count,
        }
    }
}

impl From<&PureState> for DensityOperator {
    fn from(psi: &PureState) -> Self {
        psi.density()
    }
}

/// Common interface of pure and mixed states.
pub trait QuantumState: Sized + Clone {
    fn qubit_count(&self) -> usize;
    fn to_density(&self) -> DensityOperator;
    fn apply_unitary(&self, u: &CMatrix) -> Result<Self>;
}

impl QuantumState for PureState {
    fn qubit_count(&self) -> usize {
        self.qubit_count
    }
    fn to_density(&self) -> DensityOperator {
        self.density()
    }
    fn apply_unitary(&self, u: &CMatrix) -> Result<Self> {
        self.evolve(u)
    }
}

impl QuantumState for DensityOperator {
    fn qubit_count(&self) -> usize {
        self.qubit_count
    }
    fn to_density(&self) -> DensityOperator {
        self.clone()
    }
    fn apply_unitary(&self, u: &CMatrix) -> Result<Self> {
        self.evolve(u)
    }
}
