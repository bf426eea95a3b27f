//! Reduced states, expectation values and Bloch vectors.

use crate::error::{CoreError, Result};
use crate::linalg::{check_hermitian, trace_product, CMatrix};
use crate::pauli::{single, spin_product, Pauli};
use crate::state::{check_index, DensityOperator, HERMITIAN_TOL};

/// Trace out every qubit not in `keep`. The kept qubits retain their order.
pub fn partial_trace(rho: &DensityOperator, keep: &[usize]) -> Result<DensityOperator> {
    let n = rho.qubit_count();
    if keep.is_empty() {
        return Err(CoreError::EmptyKeep);
    }
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(CoreError::DuplicateIndex(w[0]));
        }
    }
    for &q in &sorted {
        check_index(q, n)?;
    }
    let shift = |q: usize| n - 1 - q;
    let mask: usize = sorted.iter().map(|&q| 1usize << shift(q)).sum();
    let local = |i: usize| {
        sorted
            .iter()
            .fold(0usize, |acc, &q| (acc << 1) | ((i >> shift(q)) & 1))
    };
    let k = sorted.len();
    let dim = 1 << n;
    let mut out = CMatrix::zeros(1 << k, 1 << k);
    let m = rho.matrix();
    for i in 0..dim {
        for j in 0..dim {
            if i & !mask == j & !mask {
                out[(local(i), local(j))] += m[(i, j)];
            }
        }
    }
    Ok(DensityOperator::from_trusted(
        (&out + out.adjoint()).scale(0.5),
        k,
    ))
}

/// `Tr(ρ O)` for Hermitian `O`.
pub fn expectation(rho: &DensityOperator, o: &CMatrix) -> Result<f64> {
    if o.nrows() != rho.dim() || o.ncols() != rho.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: rho.dim(),
            found: o.nrows(),
        });
    }
    check_hermitian(o, HERMITIAN_TOL)?;
    Ok(trace_product(rho.matrix(), o).re)
}

/// `Tr(ρ ∏_k r_k·σ_k)` over the listed qubits.
pub fn spin_correlation(rho: &DensityOperator, qubits: &[usize], dirs: &[[f64; 3]]) -> Result<f64> {
    let n = rho.qubit_count();
    if qubits.len() != dirs.len() {
        return Err(CoreError::DimensionMismatch {
            expected: qubits.len(),
            found: dirs.len(),
        });
    }
    for &q in qubits {
        check_index(q, n)?;
    }
    Ok(trace_product(rho.matrix(), &spin_product(n, qubits, dirs)).re)
}

/// `(⟨σx⟩, ⟨σy⟩, ⟨σz⟩)` of one qubit.
pub fn bloch_vector(rho: &DensityOperator, qubit: usize) -> Result<[f64; 3]> {
    let n = rho.qubit_count();
    check_index(qubit, n)?;
    let mut r = [0.0; 3];
    for (slot, p) in r.iter_mut().zip(Pauli::AXES) {
        *slot = trace_product(rho.matrix(), &single(n, qubit, p)).re;
    }
    Ok(r)
}
