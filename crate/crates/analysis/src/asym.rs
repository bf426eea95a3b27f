//! Correlations of measurements along different directions per qubit, read
//! from beads alone.
//!
//! A measurement operator `σ_{k r_k} σ_{l r_l} …` overlaps only the LISA
//! components whose subsystem is exactly the measured qubit set. Their
//! coefficients are recovered by sampling every such bead at a fixed set of
//! directions and solving the linear system of spherical harmonic values; the
//! expectation then follows from the overlap of the measurement operator with
//! each LISA operator.

use std::collections::BTreeMap;

use beads_map::{real_sph_harmonic, scale_factor, BeadSet, SphericalDirection};
use lisa_basis::{lisa_operator, BeadLabel, LisaBasis, Parity};
use nalgebra::{DMatrix, DVector};
use quantum_core::linalg::trace_product;
use quantum_core::pauli::spin_product;

use crate::error::{AnalysisError, Result};

/// Smallest admissible ratio of singular values in a direction fit.
pub const FIT_CONDITION_TOL: f64 = 1e-10;

fn deg(theta: f64, phi: f64) -> SphericalDirection {
    SphericalDirection::degrees(theta, phi).expect("fixed sampling direction")
}

fn axis_directions() -> Vec<SphericalDirection> {
    vec![deg(90.0, 0.0), deg(90.0, 90.0), deg(0.0, 0.0)]
}

fn quadrupole_directions() -> Vec<SphericalDirection> {
    vec![
        deg(0.0, 0.0),
        deg(90.0, 0.0),
        deg(90.0, 90.0),
        deg(90.0, 45.0),
        deg(45.0, 0.0),
        deg(45.0, 90.0),
    ]
}

fn octupole_directions() -> Vec<SphericalDirection> {
    let up = (0.6f64).sqrt().acos().to_degrees();
    let down = (-(0.6f64).sqrt()).acos().to_degrees();
    vec![
        deg(0.0, 0.0),
        deg(90.0, 0.0),
        deg(90.0, 270.0),
        deg(90.0, 45.0),
        deg(90.0, 135.0),
        deg(up, 0.0),
        deg(down, 0.0),
        deg(up, 45.0),
        deg(down, 45.0),
        deg(up, 135.0),
    ]
}

/// Directions at which a bead is sampled to recover all of its components.
///
/// Rank-1 labels use the Cartesian axes; labels with a rank-2 part use the
/// z, x, y axes and the xy-, xz- and yz-bisectors; the `τ1` label (ranks 1
/// and 3) uses the ten directions built from the roots of its harmonics.
pub fn sampling_directions(label: &BeadLabel) -> Vec<SphericalDirection> {
    let ranks = label.ranks();
    if ranks.contains(&3) {
        octupole_directions()
    } else if ranks.contains(&2) {
        quadrupole_directions()
    } else if ranks == [0] {
        vec![deg(0.0, 0.0)]
    } else {
        axis_directions()
    }
}

/// Least-squares fit of `Σ c′_{j,m} Y_{j,m}` to bead values at `dirs`.
pub fn fit_bead(
    label: &BeadLabel,
    ranks: &[usize],
    dirs: &[SphericalDirection],
    values: &[f64],
) -> Result<BTreeMap<(usize, i32), f64>> {
    let keys: Vec<(usize, i32)> = ranks
        .iter()
        .flat_map(|&j| (-(j as i32)..=j as i32).map(move |m| (j, m)))
        .collect();
    let mut a = DMatrix::<f64>::zeros(dirs.len(), keys.len());
    for (r, &d) in dirs.iter().enumerate() {
        for (c, &(j, m)) in keys.iter().enumerate() {
            a[(r, c)] = real_sph_harmonic(j, m, d)?;
        }
    }
    let svd = a.svd(true, true);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if keys.len() > dirs.len() || max == 0.0 || min / max < FIT_CONDITION_TOL {
        return Err(AnalysisError::RankDeficient {
            label: label.to_string(),
            rank: *ranks.iter().max().unwrap_or(&0),
        });
    }
    let b = DVector::from_column_slice(values);
    let x = svd
        .solve(&b, FIT_CONDITION_TOL * max)
        .map_err(|e| AnalysisError::Invalid(e.to_string()))?;
    Ok(keys.into_iter().zip(x.iter().copied()).collect())
}

/// Unscaled LISA coefficients `c_{j,m}` of one label, from bead values only.
pub fn extract_components(beads: &BeadSet, label: &BeadLabel) -> Result<BTreeMap<(usize, i32), f64>> {
    let bead = beads
        .get(label)
        .ok_or_else(|| AnalysisError::IncompleteBeads(label.to_string()))?;
    let dirs = sampling_directions(label);
    let values = bead.values(&dirs);
    let scaled = fit_bead(label, label.ranks(), &dirs, &values)?;
    let n = beads.qubit_count;
    scaled
        .into_iter()
        .map(|((j, m), c)| Ok(((j, m), c / scale_factor(label, j, n, beads.mode)?)))
        .collect()
}

/// Labels whose subsystem is exactly `qubits`.
pub fn labels_on(n: usize, qubits: &[usize]) -> Result<Vec<BeadLabel>> {
    let mut sorted = qubits.to_vec();
    sorted.sort_unstable();
    Ok(LisaBasis::get(n)?
        .labels()
        .into_iter()
        .filter(|l| l.subsystem() == sorted.as_slice())
        .collect())
}

/// `⟨σ_{q₁ r₁} σ_{q₂ r₂} …⟩` computed from the beads of the measured subsystem.
pub fn asym_corr(beads: &BeadSet, qubits: &[usize], dirs: &[SphericalDirection]) -> Result<f64> {
    if qubits.len() != dirs.len() {
        return Err(AnalysisError::DirectionCount {
            qubits: qubits.len(),
            directions: dirs.len(),
        });
    }
    let n = beads.qubit_count;
    let vectors: Vec<[f64; 3]> = dirs.iter().map(|d| d.to_vector()).collect();
    for &q in qubits {
        quantum_core::state::check_index(q, n)?;
    }
    let o = spin_product(n, qubits, &vectors);
    let mut total = 0.0;
    for label in labels_on(n, qubits)? {
        for ((j, m), c) in extract_components(beads, &label)? {
            let t = lisa_operator(n, &label, j, m)?;
            total += c * trace_product(&t.matrix, &o).re;
        }
    }
    Ok(total)
}

/// Two-qubit correlation `⟨σ_{1 r₁} σ_{2 r₂}⟩` of qubits 0 and 1.
pub fn asym_corr_2q(beads: &BeadSet, dir1: SphericalDirection, dir2: SphericalDirection) -> Result<f64> {
    asym_corr(beads, &[0, 1], &[dir1, dir2])
}

/// Three-qubit correlation `⟨σ_{1 r₁} σ_{2 r₂} σ_{3 r₃}⟩`.
pub fn asym_corr_3q(beads: &BeadSet, dirs: [SphericalDirection; 3]) -> Result<f64> {
    if beads.qubit_count != 3 {
        return Err(AnalysisError::QubitCount {
            expected: 3,
            found: beads.qubit_count,
        });
    }
    asym_corr(beads, &[0, 1, 2], &dirs)
}

/// Scaled component expectations `⟨T′⟩` of a bilinear even bead from its
/// values at z, x, y and the three bisectors (the rank-2 read-off rules).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvenPairReadout {
    pub t00: f64,
    pub t2m2: f64,
    pub t2m1: f64,
    pub t20: f64,
    pub t21: f64,
    pub t22: f64,
}

impl EvenPairReadout {
    pub fn from_values(rz: f64, rx: f64, ry: f64, rxy: f64, rxz: f64, ryz: f64) -> Self {
        EvenPairReadout {
            t00: (rx + ry + rz) / 3.0,
            t2m2: rxy - (rx + ry) / 2.0,
            t2m1: ryz - (ry + rz) / 2.0,
            t20: (2.0 * rz - rx - ry) / 3.0,
            t21: rxz - (rx + rz) / 2.0,
            t22: (rx - ry) / 2.0,
        }
    }

    /// Read the bead `{k,l}even` of a bead set.
    pub fn read(beads: &BeadSet, k: usize, l: usize) -> Result<Self> {
        let label = BeadLabel::pair(k, l, Parity::Even);
        let bead = beads
            .get(&label)
            .ok_or_else(|| AnalysisError::IncompleteBeads(label.to_string()))?;
        let v = bead.values(&quadrupole_directions());
        Ok(Self::from_values(v[0], v[1], v[2], v[3], v[4], v[5]))
    }
}
