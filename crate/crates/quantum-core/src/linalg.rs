//! Small dense complex linear algebra helpers shared by every crate.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{CoreError, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Build a complex matrix from real rows.
pub fn real_matrix(rows: usize, cols: usize, data: &[f64]) -> CMatrix {
    CMatrix::from_row_iterator(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)))
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Kronecker product of a sequence of matrices, left to right.
pub fn kron_all<'a, I>(factors: I) -> CMatrix
where
    I: IntoIterator<Item = &'a CMatrix>,
{
    factors
        .into_iter()
        .fold(CMatrix::identity(1, 1), |acc, f| acc.kronecker(f))
}

/// Largest elementwise modulus of `a - a†`.
pub fn hermitian_residual(a: &CMatrix) -> f64 {
    let adj = a.adjoint();
    (a - adj).iter().fold(0.0, |m, z| m.max(z.norm()))
}

/// Largest elementwise modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().fold(0.0, |m, z| m.max(z.norm()))
}

/// Frobenius norm of `a - b`.
pub fn frobenius_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `Tr(a b)` without forming the product.
pub fn trace_product(a: &CMatrix, b: &CMatrix) -> C64 {
    let n = a.nrows();
    let mut acc = ZERO;
    for i in 0..n {
        for k in 0..n {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

/// Reject non-square or non-Hermitian input.
pub fn check_hermitian(a: &CMatrix, tol: f64) -> Result<()> {
    if a.nrows() != a.ncols() {
        return Err(CoreError::DimensionMismatch {
            expected: a.nrows(),
            found: a.ncols(),
        });
    }
    let r = hermitian_residual(a);
    if r > tol {
        return Err(CoreError::NotHermitian(r));
    }
    Ok(())
}

/// Eigen-decomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and the matching orthonormal eigenvectors as columns.
pub fn eigh(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let sym = (a + a.adjoint()).scale(0.5);
    let eig = SymmetricEigen::new(sym);
    let n = a.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (c, &i) in order.iter().enumerate() {
        vectors.set_column(c, &eig.eigenvectors.column(i));
    }
    (values, vectors)
}

/// `exp(-i H t)` for Hermitian `H`, computed from its eigen-decomposition.
pub fn expm_hermitian(h: &CMatrix, t: f64) -> CMatrix {
    let (values, v) = eigh(h);
    let n = h.nrows();
    let mut scaled = v.clone();
    for (c, &lambda) in values.iter().enumerate() {
        let phase = C64::from_polar(1.0, -lambda * t);
        for r in 0..n {
            scaled[(r, c)] *= phase;
        }
    }
    scaled * v.adjoint()
}

/// Remove the global phase of `u` relative to `reference` and return the
/// largest elementwise deviation. Used to compare unitaries up to phase.
pub fn phase_insensitive_diff(u: &CMatrix, reference: &CMatrix) -> f64 {
    let overlap = trace_product(&reference.adjoint(), u);
    if overlap.norm() < 1e-300 {
        return f64::INFINITY;
    }
    let phase = overlap / overlap.norm();
    max_abs_diff(&u.map(|z| z / phase), reference)
}

/// Embed a `k`-qubit operator acting on `qubits` (first entry is the most
/// significant local bit) into the `n`-qubit space.
pub fn embed_operator(op: &CMatrix, qubits: &[usize], n: usize) -> CMatrix {
    let dim = 1usize << n;
    let k = qubits.len();
    debug_assert_eq!(op.nrows(), 1 << k);
    let shift = |q: usize| n - 1 - q;
    let mask: usize = qubits.iter().map(|&q| 1usize << shift(q)).sum();
    let local = |i: usize| {
        qubits
            .iter()
            .fold(0usize, |acc, &q| (acc << 1) | ((i >> shift(q)) & 1))
    };
    let mut out = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        let li = local(i);
        for j in 0..dim {
            if i & !mask != j & !mask {
                continue;
            }
            out[(i, j)] = op[(li, local(j))];
        }
    }
    out
}
