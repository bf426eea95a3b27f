//! The modified operator `ρ̃` and the E/C/T bead split.

use std::collections::BTreeMap;

use beads_map::{bead_coefficients, BeadSet, ScalingMode};
use lisa_basis::{decompose, BeadLabel};
use quantum_core::linalg::trace_product;
use quantum_core::{pauli_string, CMatrix, DensityOperator, Pauli};

use crate::error::Result;
use crate::ursell::{cumulant, require_pure, set_partitions};

/// E-Beads whose component norm is below this are hidden in displays.
pub const OMIT_THRESHOLD: f64 = 1e-9;

const PAULIS: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

fn digit(s: usize, q: usize, n: usize) -> usize {
    (s >> (2 * (n - 1 - q))) & 3
}

fn restrict(s: usize, keep: &[usize], n: usize) -> usize {
    (0..n)
        .filter(|q| keep.contains(q))
        .map(|q| digit(s, q, n) << (2 * (n - 1 - q)))
        .sum()
}

fn string_matrix(s: usize, n: usize) -> CMatrix {
    let factors: Vec<Pauli> = (0..n).map(|q| PAULIS[digit(s, q, n)]).collect();
    pauli_string(&factors)
}

/// `ρ̃ = 2^{−N} Σ_s t̃_s P_s`, where `t̃_s` equals the Pauli expectation `t_s`
/// for strings of weight ≤ 1 and the connected correlation of the string's
/// factors otherwise. All compound content is removed; identity and
/// single-qubit parts are untouched.
pub fn connected_operator(rho: &DensityOperator) -> Result<CMatrix> {
    require_pure(rho)?;
    let n = rho.qubit_count();
    let count = 1usize << (2 * n);
    let strings: Vec<CMatrix> = (0..count).map(|s| string_matrix(s, n)).collect();
    let t: Vec<f64> = strings.iter().map(|p| trace_product(rho.matrix(), p).re).collect();
    let dim = rho.dim();
    let mut out = CMatrix::zeros(dim, dim);
    for s in 0..count {
        let support: Vec<usize> = (0..n).filter(|&q| digit(s, q, n) != 0).collect();
        let value = if support.len() <= 1 {
            t[s]
        } else {
            cumulant(&support, &mut |block: &[usize]| t[restrict(s, block, n)])
        };
        if value != 0.0 {
            out += strings[s].scale(value / dim as f64);
        }
    }
    Ok(out)
}

/// Inverse of [`connected_operator`]: rebuild `ρ` from `ρ̃` by summing, for
/// every Pauli string, the products of connected coefficients over all set
/// partitions of its support.
pub fn operator_from_connected(rho_tilde: &CMatrix) -> Result<CMatrix> {
    let n = quantum_core::state::qubits_for_dim(rho_tilde.nrows())?;
    let count = 1usize << (2 * n);
    let strings: Vec<CMatrix> = (0..count).map(|s| string_matrix(s, n)).collect();
    let dim = rho_tilde.nrows();
    let t_tilde: Vec<f64> = strings.iter().map(|p| trace_product(rho_tilde, p).re).collect();
    let mut out = CMatrix::zeros(dim, dim);
    for s in 0..count {
        let support: Vec<usize> = (0..n).filter(|&q| digit(s, q, n) != 0).collect();
        let value = if support.len() <= 1 {
            t_tilde[s]
        } else {
            set_partitions(&support)
                .iter()
                .map(|p| p.iter().map(|b| t_tilde[restrict(s, b, n)]).product::<f64>())
                .sum()
        };
        if value != 0.0 {
            out += strings[s].scale(value / dim as f64);
        }
    }
    Ok(out)
}

/// Norm of `ρ̃` without its identity and single-qubit parts, and its split per label.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementNorm {
    pub total: f64,
    pub per_label: BTreeMap<BeadLabel, f64>,
}

pub fn entanglement_norm(rho: &DensityOperator) -> Result<EntanglementNorm> {
    let tilde = connected_operator(rho)?;
    let d = decompose(&tilde)?;
    let mut per_label = BTreeMap::new();
    let mut total_sq = 0.0;
    for label in lisa_basis::LisaBasis::get(rho.qubit_count())?.labels() {
        if !label.is_multilinear() {
            continue;
        }
        let norm = d.label_norm(&label);
        total_sq += norm * norm;
        per_label.insert(label, norm);
    }
    Ok(EntanglementNorm {
        total: total_sq.sqrt(),
        per_label,
    })
}

/// Correlation content of a pure state split into connected (E), compound (C) and
/// total (T) beads. All three sets carry the same identity and Q-Beads.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationDecomposition {
    pub rho: DensityOperator,
    pub rho_tilde: CMatrix,
    pub e_beads: BeadSet,
    pub c_beads: BeadSet,
    pub t_beads: BeadSet,
    pub entanglement: EntanglementNorm,
}

impl CorrelationDecomposition {
    /// True for E-Beads too faint to display. Q-Beads and the identity are never omitted.
    pub fn e_omitted(&self, label: &BeadLabel) -> bool {
        label.is_multilinear() && self.e_beads.norm(label).is_some_and(|n| n < OMIT_THRESHOLD)
    }

    /// True for C-Beads too faint to display.
    pub fn c_omitted(&self, label: &BeadLabel) -> bool {
        label.is_multilinear() && self.c_beads.norm(label).is_some_and(|n| n < OMIT_THRESHOLD)
    }
}

/// Replace the identity and single-qubit beads of `target` by those of `source`.
fn share_local_beads(target: &mut BeadSet, source: &BeadSet) {
    for (i, b) in target.beads.iter_mut().enumerate() {
        if !b.label.is_multilinear() {
            let src = source.get(&b.label).expect("same label catalog");
            *b = src.clone();
            target.norms[i] = source.norm(&b.label).expect("same label catalog");
        }
    }
}

/// E, C and T beads of a pure state.
pub fn correlation_beads(rho: &DensityOperator, mode: ScalingMode) -> Result<CorrelationDecomposition> {
    let tilde = connected_operator(rho)?;
    let t_beads = bead_coefficients(rho.matrix(), mode)?;
    let mut e_beads = bead_coefficients(&tilde, mode)?;
    share_local_beads(&mut e_beads, &t_beads);
    let compound = rho.matrix() - &tilde;
    let mut c_beads = bead_coefficients(&compound, mode)?;
    share_local_beads(&mut c_beads, &t_beads);
    Ok(CorrelationDecomposition {
        rho: rho.clone(),
        entanglement: entanglement_norm(rho)?,
        rho_tilde: tilde,
        e_beads,
        c_beads,
        t_beads,
    })
}
