#![allow(dead_code)]

use quantum_core::{CMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> CMatrix {
    let dim = 1 << n;
    let a = CMatrix::from_fn(dim, dim, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    (&a + a.adjoint()).scale(0.5)
}

pub fn max_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    quantum_core::linalg::max_abs_diff(a, b)
}

/// Total spin component `J_a = ½ Σ_k σ_{k,a}`.
pub fn total_spin(n: usize, axis: quantum_core::Pauli) -> CMatrix {
    let mut out = CMatrix::zeros(1 << n, 1 << n);
    for q in 0..n {
        out += quantum_core::pauli::single(n, q, axis).scale(0.5);
    }
    out
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

/// Permutation matrix exchanging two qubits.
pub fn swap_matrix(n: usize, a: usize, b: usize) -> CMatrix {
    let g = quantum_core::GateSpec::swap(a, b);
    g.unitary(n).unwrap().map(|z| {
        // exp(-iπ(I-SWAP)/2) = SWAP exactly up to rounding; clean it.
        C64::new(z.re.round(), z.im.round())
    })
}
