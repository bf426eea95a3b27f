//! Single-qubit rotations that tie directions on the sphere to the z-axis.

use beads_map::SphericalDirection;
use quantum_core::linalg::{expm_hermitian, kron_all};
use quantum_core::{CMatrix, Pauli};

/// `Rz(φ) Ry(θ)`: carries the z-axis onto `dir`.
pub fn rotation_to(dir: SphericalDirection) -> CMatrix {
    let rz = expm_hermitian(&Pauli::Z.matrix().scale(0.5), dir.phi);
    let ry = expm_hermitian(&Pauli::Y.matrix().scale(0.5), dir.theta);
    rz * ry
}

/// `Ry(−θ) Rz(−φ)`: carries `dir` onto the z-axis.
pub fn rotation_from(dir: SphericalDirection) -> CMatrix {
    rotation_to(dir).adjoint()
}

/// The same rotation `Rz(φ) Ry(θ)` on every qubit.
pub fn global_rotation(n: usize, dir: SphericalDirection) -> CMatrix {
    let one = rotation_to(dir);
    kron_all(std::iter::repeat_n(&one, n))
}

/// Independent rotations per qubit, each taking its measurement direction to z.
pub fn local_alignment(dirs: &[SphericalDirection]) -> CMatrix {
    let factors: Vec<CMatrix> = dirs.iter().map(|&d| rotation_from(d)).collect();
    kron_all(factors.iter())
}
