//! Pauli matrices, Pauli strings and spin operators along arbitrary axes.

use crate::linalg::{kron_all, CMatrix, C64, I, ONE, ZERO};

/// Single-qubit Pauli factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const AXES: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> CMatrix {
        match self {
            Pauli::I => CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, ONE]),
            Pauli::X => CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
            Pauli::Y => CMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO]),
            Pauli::Z => CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]),
        }
    }

    pub fn from_char(c: char) -> Option<Pauli> {
        match c.to_ascii_lowercase() {
            'i' => Some(Pauli::I),
            'x' => Some(Pauli::X),
            'y' => Some(Pauli::Y),
            'z' => Some(Pauli::Z),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Pauli::I => 'i',
            Pauli::X => 'x',
            Pauli::Y => 'y',
            Pauli::Z => 'z',
        }
    }

    /// Cartesian index 0, 1, 2 for X, Y, Z.
    pub fn axis_index(self) -> Option<usize> {
        match self {
            Pauli::I => None,
            Pauli::X => Some(0),
            Pauli::Y => Some(1),
            Pauli::Z => Some(2),
        }
    }
}

/// Tensor product of Pauli factors, one per qubit (qubit 0 leftmost).
pub fn pauli_string(factors: &[Pauli]) -> CMatrix {
    let mats: Vec<CMatrix> = factors.iter().map(|p| p.matrix()).collect();
    kron_all(mats.iter())
}

/// Parse a string such as `"xiz"` into a Pauli string matrix.
///
/// Panics on characters other than `i x y z`; intended for literal tables.
pub fn pauli_str(s: &str) -> CMatrix {
    let factors: Vec<Pauli> = s
        .chars()
        .map(|c| Pauli::from_char(c).unwrap_or_else(|| panic!("bad Pauli character {c:?}")))
        .collect();
    pauli_string(&factors)
}

/// `r · σ` for a (not necessarily normalized) 3-vector.
pub fn sigma_dir(r: [f64; 3]) -> CMatrix {
    let [x, y, z] = r;
    CMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(z, 0.0),
            C64::new(x, -y),
            C64::new(x, y),
            C64::new(-z, 0.0),
        ],
    )
}

/// `⊗_k (r_k · σ)` on the listed qubits of an `n`-qubit register.
pub fn spin_product(n: usize, qubits: &[usize], dirs: &[[f64; 3]]) -> CMatrix {
    let mut factors: Vec<CMatrix> = (0..n).map(|_| Pauli::I.matrix()).collect();
    for (&q, &r) in qubits.iter().zip(dirs) {
        factors[q] = sigma_dir(r);
    }
    kron_all(factors.iter())
}

/// Pauli operator on one qubit of an `n`-qubit register.
pub fn single(n: usize, qubit: usize, p: Pauli) -> CMatrix {
    let mut factors = vec![Pauli::I; n];
    factors[qubit] = p;
    pauli_string(&factors)
}
