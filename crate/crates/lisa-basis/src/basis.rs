//! Operator catalog, decomposition and reconstruction.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use quantum_core::linalg::{hermitian_residual, trace_product};
use quantum_core::{CMatrix, C64};
use serde::{Deserialize, Serialize};

use crate::error::{LisaError, Result};
use crate::label::{BeadLabel, Parity, Tau};
use crate::operators::{build_matrix, expansion};

/// Imaginary residue tolerated in `Tr(T A)` before rejecting the input.
pub const IMAG_TOL: f64 = 1e-10;

/// Index of one basis operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisKey {
    pub label: BeadLabel,
    pub j: usize,
    pub m: i32,
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[j={},m={}]", self.label, self.j, self.m)
    }
}

/// One Hermitian basis operator `T_{j,m}^{(ℓ′)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LisaOperator {
    pub label: BeadLabel,
    pub j: usize,
    pub m: i32,
    pub matrix: CMatrix,
}

impl LisaOperator {
    pub fn key(&self) -> BasisKey {
        BasisKey {
            label: self.label.clone(),
            j: self.j,
            m: self.m,
        }
    }
}

/// Symmetry metadata of a label in the catalog.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabelInfo {
    pub label: BeadLabel,
    pub ranks: Vec<usize>,
    pub linearity: usize,
    pub parity: Parity,
    pub fully_symmetric: bool,
    /// Behaviour under exchanging the two qubits of a bilinear label.
    pub exchange: Option<&'static str>,
}

fn check_n(n: usize) -> Result<()> {
    if (1..=3).contains(&n) {
        Ok(())
    } else {
        Err(LisaError::QubitCount(n))
    }
}

fn labels_for(n: usize) -> Vec<BeadLabel> {
    let mut out = vec![BeadLabel::identity()];
    out.extend((0..n).map(BeadLabel::single));
    for k in 0..n {
        for l in k + 1..n {
            out.push(BeadLabel::pair(k, l, Parity::Even));
            out.push(BeadLabel::pair(k, l, Parity::Odd));
        }
    }
    if n == 3 {
        for (tau, parity) in [
            (Tau::T1, Parity::Odd),
            (Tau::T2, Parity::Even),
            (Tau::T2, Parity::Odd),
            (Tau::T3, Parity::Even),
            (Tau::T3, Parity::Odd),
            (Tau::T4, Parity::Even),
        ] {
            out.push(BeadLabel::triple(tau, parity).expect("valid trilinear label"));
        }
    }
    out.sort();
    out
}

/// All labels for `n` qubits in the stable basis order.
pub fn label_catalog(n: usize) -> Result<Vec<LabelInfo>> {
    check_n(n)?;
    Ok(labels_for(n)
        .into_iter()
        .map(|label| LabelInfo {
            ranks: label.ranks().to_vec(),
            linearity: label.linearity(),
            parity: label.parity(),
            fully_symmetric: label.is_fully_symmetric(),
            exchange: (label.linearity() == 2).then(|| match label.parity() {
                Parity::Even => "symmetric",
                Parity::Odd => "antisymmetric",
            }),
            label,
        })
        .collect())
}

/// Basis operator `T_{j,m}` for `label` on `n` qubits.
pub fn lisa_operator(n: usize, label: &BeadLabel, j: usize, m: i32) -> Result<LisaOperator> {
    check_n(n)?;
    label.validate_for(n)?;
    let e = expansion(label, j, m).ok_or_else(|| LisaError::InvalidComponent {
        label: label.to_string(),
        j,
        m,
    })?;
    Ok(LisaOperator {
        label: label.clone(),
        j,
        m,
        matrix: build_matrix(n, label, &e),
    })
}

/// The complete orthonormal operator basis of an `n`-qubit space.
#[derive(Debug)]
pub struct LisaBasis {
    n: usize,
    operators: Vec<LisaOperator>,
}

static BASES: [OnceLock<LisaBasis>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];

impl LisaBasis {
    /// Shared, lazily built basis for `n` qubits.
    pub fn get(n: usize) -> Result<&'static LisaBasis> {
        check_n(n)?;
        Ok(BASES[n - 1].get_or_init(|| LisaBasis::build(n)))
    }

    fn build(n: usize) -> LisaBasis {
        let mut operators = Vec::with_capacity(1 << (2 * n));
        for label in labels_for(n) {
            for &j in label.ranks() {
                for m in -(j as i32)..=(j as i32) {
                    operators.push(lisa_operator(n, &label, j, m).expect("catalog entry"));
                }
            }
        }
        LisaBasis { n, operators }
    }

    pub fn qubit_count(&self) -> usize {
        self.n
    }

    pub fn operators(&self) -> &[LisaOperator] {
        &self.operators
    }

    pub fn labels(&self) -> Vec<BeadLabel> {
        let mut out: Vec<BeadLabel> = Vec::new();
        for op in &self.operators {
            if out.last() != Some(&op.label) {
                out.push(op.label.clone());
            }
        }
        out
    }

    pub fn find(&self, key: &BasisKey) -> Option<&LisaOperator> {
        self.operators
            .iter()
            .find(|op| op.label == key.label && op.j == key.j && op.m == key.m)
    }
}

/// Real coefficients `c = Tr(T A)` in basis order.
#[derive(Debug, Clone, PartialEq)]
pub struct LisaDecomposition {
    n: usize,
    entries: Vec<(BasisKey, f64)>,
}

/// Flat serialization record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub label: BeadLabel,
    pub j: usize,
    pub m: i32,
    pub value: f64,
}

impl LisaDecomposition {
    /// All-zero decomposition for `n` qubits.
    pub fn zeros(n: usize) -> Result<Self> {
        let basis = LisaBasis::get(n)?;
        Ok(LisaDecomposition {
            n,
            entries: basis.operators.iter().map(|op| (op.key(), 0.0)).collect(),
        })
    }

    pub fn qubit_count(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(BasisKey, f64)] {
        &self.entries
    }

    pub fn get(&self, label: &BeadLabel, j: usize, m: i32) -> Option<f64> {
        self.entries
            .iter()
            .find(|(k, _)| &k.label == label && k.j == j && k.m == m)
            .map(|(_, v)| *v)
    }

    pub fn set(&mut self, key: &BasisKey, value: f64) -> Result<()> {
        let slot = self
            .entries
            .iter_mut()
            .find(|(k, _)| k == key)
            .ok_or_else(|| LisaError::UnknownKey(key.to_string()))?;
        slot.1 = value;
        Ok(())
    }

    /// Coefficients of one label keyed by `(j, m)`.
    pub fn label_components(&self, label: &BeadLabel) -> BTreeMap<(usize, i32), f64> {
        self.entries
            .iter()
            .filter(|(k, _)| &k.label == label)
            .map(|(k, v)| ((k.j, k.m), *v))
            .collect()
    }

    /// `√Σ c²` over one label: the Frobenius norm of that label's component.
    pub fn label_norm(&self, label: &BeadLabel) -> f64 {
        self.entries
            .iter()
            .filter(|(k, _)| &k.label == label)
            .map(|(_, v)| v * v)
            .sum::<f64>()
            .sqrt()
    }

    /// The operator component `Σ_{j,m} c T` of one label.
    pub fn label_operator(&self, label: &BeadLabel) -> CMatrix {
        let dim = 1usize << self.n;
        let basis = LisaBasis::get(self.n).expect("checked at construction");
        let mut out = CMatrix::zeros(dim, dim);
        for ((_, v), op) in self.entries.iter().zip(&basis.operators) {
            if &op.label == label {
                out += op.matrix.scale(*v);
            }
        }
        out
    }

    pub fn to_records(&self) -> Vec<CoefficientRecord> {
        self.entries
            .iter()
            .map(|(k, v)| CoefficientRecord {
                label: k.label.clone(),
                j: k.j,
                m: k.m,
                value: *v,
            })
            .collect()
    }

    /// Rebuild from records; every key must be a basis element. Missing keys are zero.
    pub fn from_records(n: usize, records: &[CoefficientRecord]) -> Result<Self> {
        let mut d = LisaDecomposition::zeros(n)?;
        for r in records {
            d.set(
                &BasisKey {
                    label: r.label.clone(),
                    j: r.j,
                    m: r.m,
                },
                r.value,
            )?;
        }
        Ok(d)
    }

    /// Apply `f` to every coefficient.
    pub fn map(&self, mut f: impl FnMut(&BasisKey, f64) -> f64) -> Self {
        LisaDecomposition {
            n: self.n,
            entries: self.entries.iter().map(|(k, v)| (k.clone(), f(k, *v))).collect(),
        }
    }
}

fn n_for_dim(dim: usize) -> Result<usize> {
    match dim {
        2 => Ok(1),
        4 => Ok(2),
        8 => Ok(3),
        d => Err(LisaError::Dimension(d)),
    }
}

/// Coefficients of a Hermitian matrix in the LISA basis.
pub fn decompose(a: &CMatrix) -> Result<LisaDecomposition> {
    if a.nrows() != a.ncols() {
        return Err(LisaError::Dimension(a.ncols()));
    }
    let n = n_for_dim(a.nrows())?;
    let residual = hermitian_residual(a);
    if residual > IMAG_TOL {
        return Err(LisaError::NotHermitian(residual));
    }
    let basis = LisaBasis::get(n)?;
    let mut entries = Vec::with_capacity(basis.operators.len());
    for op in &basis.operators {
        let c: C64 = trace_product(&op.matrix, a);
        if c.im.abs() > IMAG_TOL {
            return Err(LisaError::ComplexCoefficient(c.im));
        }
        entries.push((op.key(), c.re));
    }
    Ok(LisaDecomposition { n, entries })
}

/// `Σ c T`, the inverse of [`decompose`].
pub fn reconstruct(d: &LisaDecomposition) -> CMatrix {
    let basis = LisaBasis::get(d.n).expect("checked at construction");
    let dim = 1usize << d.n;
    let mut out = CMatrix::zeros(dim, dim);
    for ((_, v), op) in d.entries.iter().zip(&basis.operators) {
        if *v != 0.0 {
            out += op.matrix.scale(*v);
        }
    }
    out
}
